//! Run every writing-rule check over a small corpus and print the findings
//! with severities, classifications and evidence.
//!
//! ```bash
//! cargo run --example lint_requirements
//! ```

use reqlint::corpus::parse_requirement_str;
use reqlint::lexicon::Lexicon;
use reqlint::pipeline::{analyze_corpus, segmenter_for};
use reqlint::report::render_finding;
use reqlint::rules::{run_all, RuleConfig};
use reqlint::Language;

const CORPUS: &str = "\
[REQ SUR-001]
Les demandes sont saisies sur le FOS et le logiciel ARPE gère les conflits.
[/REQ]
[REQ SUR-002]
Il calculera aussi la moyenne de mise en œuvre et la comparera à la moyenne maximum.
[/REQ]
[REQ SUR-003]
Cet ordre est rejeté si :
- le mode NORM automatique est actif
- le satellite est en mode MAN
- un ordre MAN/CAP est déjà en attente d'exécution
[/REQ]
[REQ SUR-004]
Le générateur vérifiera que la valeur est comprise entre 0 et 255.
[/REQ]
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = parse_requirement_str("surveillance.req", CORPUS, Language::Fr)?;
    let lexicon = Lexicon::builtin(Language::Fr);
    let segmenter = segmenter_for(lexicon);
    let analyzed = analyze_corpus(&corpus, lexicon, &segmenter);

    let config = RuleConfig::new(Language::Fr);
    println!("default run (mandatory uses suppressed):");
    for finding in run_all(&analyzed, lexicon, &config) {
        println!("  {}", render_finding(&finding));
    }

    let mut verbose = RuleConfig::new(Language::Fr);
    verbose.report_mandatory = true;
    let all = run_all(&analyzed, lexicon, &verbose);
    println!("\nwith --report-mandatory: {} findings in total", all.len());
    Ok(())
}
