//! Cross-corpus comparison: reduce every corpus to the size of the smallest
//! one, then put counts, percentages and sentence statistics side by side.
//!
//! ```bash
//! cargo run --example compare_corpora
//! ```

use reqlint::corpus::{parse_plain_str, parse_requirement_str, Corpus};
use reqlint::pipeline::analyze_with_builtins;
use reqlint::report::ComparisonReport;
use reqlint::rules::RuleConfig;
use reqlint::stats::{compare_corpora, compute_stats, truncate_corpus, CountKey};
use reqlint::Language;

const REQUIREMENTS: &str = "\
[REQ A1]
Le paquet sera généré toutes les 10 secondes.
[/REQ]
[REQ A2]
Le générateur vérifiera que la valeur est comprise entre 0 et 255.
[/REQ]
[REQ A3]
Si le mode automatique est actif, alors la mesure sera rejetée.
[/REQ]
";

const NEWSPAPER: &str = "\
Ils sont arrivés hier soir et la ville les attendait depuis des semaines.
Elle avait préparé la grande salle, qui pouvait accueillir mille personnes, mais il restait des doutes.
On racontait que le spectacle serait annulé s'il pleuvait, ou que les organisateurs le reporteraient.
Il est possible que la pluie revienne.
Les habitants, eux, espéraient simplement une belle soirée et ils le disaient volontiers.";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let requirements = parse_requirement_str("requirements", REQUIREMENTS, Language::Fr)?;
    let newspaper = parse_plain_str("newspaper", NEWSPAPER, Language::Fr)?;

    let word_count = |corpus: &Corpus| analyze_with_builtins(corpus).word_count();
    let smallest = word_count(&requirements).min(word_count(&newspaper));
    println!("reducing both corpora to {smallest} words\n");

    let config = RuleConfig::new(Language::Fr);
    let mut stats = Vec::new();
    for corpus in [&requirements, &newspaper] {
        let truncated = truncate_corpus(corpus, smallest)?;
        stats.push(compute_stats(&analyze_with_builtins(&truncated), &config)?);
    }

    let report = ComparisonReport::new(vec!["compare".into()], compare_corpora(&stats));
    println!("{}", report.to_text());

    if let Some(ratio) = report
        .comparison
        .ratio(CountKey::Pronoun, "newspaper", "requirements")
    {
        println!("pronouns are {ratio:.2}x more frequent in the newspaper sample");
    }
    Ok(())
}
