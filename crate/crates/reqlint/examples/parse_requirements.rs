//! Parse a requirements file: blocks framed by `[REQ <id>]` / `[/REQ]`
//! become requirements, everything else is ignored.
//!
//! ```bash
//! cargo run --example parse_requirements
//! ```

use reqlint::corpus::{parse_requirement_str, to_delimited_string};
use reqlint::Language;

const SPEC_FILE: &str = "\
Ce document décrit le générateur de paquets.
Les paragraphes hors blocs ne sont pas des exigences.

[REQ GEN-001]
Le paquet sera généré toutes les 10 secondes.
[/REQ]

[REQ GEN-002]
Le générateur vérifiera que la valeur du champ PHASE est comprise
entre 0 et `FREQ_DIV -1`.
[/REQ]
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = parse_requirement_str("generator.req", SPEC_FILE, Language::Fr)?;

    println!(
        "corpus `{}`: {} requirements\n",
        corpus.name,
        corpus.requirements().len()
    );
    for req in corpus.requirements() {
        let (file, start, end) = &req.source_span;
        println!(
            "[{}] ({file}:{start}-{end}, {} line(s))",
            req.id, req.line_count
        );
        println!("{}\n", req.body);
    }

    // The delimiter format round-trips: serialize and parse again.
    let rendered = to_delimited_string(&corpus);
    let reparsed = parse_requirement_str("generator.req", &rendered, Language::Fr)?;
    assert_eq!(corpus.requirements().len(), reparsed.requirements().len());
    println!(
        "round trip ok: {} requirements preserved",
        reparsed.requirements().len()
    );
    Ok(())
}
