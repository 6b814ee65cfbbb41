//! Per-corpus statistics: category counts, word-normalized percentages and
//! the sentence-length distribution.
//!
//! ```bash
//! cargo run --example corpus_statistics
//! ```

use reqlint::corpus::parse_plain_str;
use reqlint::pipeline::analyze_with_builtins;
use reqlint::report::stats_table;
use reqlint::rules::RuleConfig;
use reqlint::stats::compute_stats;
use reqlint::Language;

const HANDBOOK_EXCERPT: &str = "\
Le satellite utilise un contrôle thermique pour limiter la puissance consommée.
Si la température dépasse le seuil, alors le logiciel réduit la charge et le système passe en mode dégradé.
Les mesures sont enregistrées toutes les secondes.
Elles sont transmises au sol, qui les analyse et vérifie que la plateforme reste dans le domaine autorisé.
Il est nécessaire de recalibrer les capteurs après chaque manœuvre.";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = parse_plain_str("handbook", HANDBOOK_EXCERPT, Language::Fr)?;
    let analyzed = analyze_with_builtins(&corpus);
    let config = RuleConfig::new(Language::Fr);
    let stats = compute_stats(&analyzed, &config)?;

    println!("{}", stats_table(std::slice::from_ref(&stats)));
    println!(
        "pronouns make up {}% of the {} words; {} of {} sentences exceed {} words",
        stats.percentages.pronoun,
        stats.total_words,
        stats.long_sentence_count,
        stats.sentence_count,
        stats.threshold_used,
    );
    Ok(())
}
