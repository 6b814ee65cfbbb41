//! Sentence segmentation and word counting conventions: a new sentence
//! begins after each line break, bullet items are one sentence each, and a
//! "word" is a word or number token.
//!
//! ```bash
//! cargo run --example segment_and_count
//! ```

use reqlint::segment::{split_sentences, tokenize, word_count};
use reqlint::Language;

fn main() {
    let text = "\
Cet ordre est rejeté si :
- le mode NORM automatique est actif
- le satellite est en mode MAN
La liste des TCD est définie en BDS. Elle est donnée ici à titre informatif.";

    println!("sentences:");
    for (i, sentence) in split_sentences(text, Language::Fr).iter().enumerate() {
        println!(
            "  {i}: {:2} words{} | {}",
            sentence.word_count(),
            if sentence.is_bullet() {
                " (bullet)"
            } else {
                ""
            },
            sentence.text
        );
    }

    // Elision clitics split from their host; identifiers stay whole;
    // backticks are symbol tokens and do not count as words.
    let sample = "Il est interdit d'enchaîner la lecture de `OPS_DELAI_INTER_FIN_LEC`.";
    let tokens = tokenize(sample, Language::Fr);
    println!("\ntokens of: {sample}");
    for token in &tokens {
        println!("  {:12} {:?}", token.surface, token.kind);
    }
    println!("word count: {}", word_count(&tokens));
}
