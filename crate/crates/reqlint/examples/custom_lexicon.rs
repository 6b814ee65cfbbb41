//! Extend or override the builtin lexicon and rule configuration from
//! files: user entries win for the same surface, extra verb cues sharpen
//! clause detection, and `key = value` config lines tune the rules.
//!
//! ```bash
//! cargo run --example custom_lexicon
//! ```

use std::io::Write;

use reqlint::corpus::parse_requirement_str;
use reqlint::lexicon::{Lexicon, Major};
use reqlint::pipeline::{analyze_corpus, segmenter_for};
use reqlint::report::render_finding;
use reqlint::rules::{run_all, RuleConfig};
use reqlint::Language;

const CORPUS: &str = "\
[REQ C1]
Le module acquitte la commande et le superviseur journalise l'événement voire archive le résultat.
[/REQ]
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;

    // `voire` is not in the builtin lexicon; `acquitte`/`journalise` are
    // project-specific verbs worth treating as clause cues.
    let lexicon_path = dir.path().join("project.lex");
    let mut file = std::fs::File::create(&lexicon_path)?;
    writeln!(file, "voire\tcoordinator")?;
    writeln!(file, "[verb_cues]")?;
    writeln!(file, "acquitte")?;
    writeln!(file, "journalise")?;
    writeln!(file, "archive")?;

    let config_path = dir.path().join("rules.conf");
    std::fs::write(
        &config_path,
        "long_sentence_threshold = 12\nseverity.R3 = error\n",
    )?;

    let lexicon = Lexicon::from_file(&lexicon_path, Language::Fr)?;
    assert_eq!(
        lexicon.lookup("voire").unwrap().possible[0].major,
        Major::Coordinator
    );

    let config = RuleConfig::from_file(&config_path, Language::Fr)?;
    let corpus = parse_requirement_str("custom.req", CORPUS, Language::Fr)?;
    let analyzed = analyze_corpus(&corpus, &lexicon, &segmenter_for(&lexicon));

    for finding in run_all(&analyzed, &lexicon, &config) {
        println!("{}", render_finding(&finding));
    }
    Ok(())
}
