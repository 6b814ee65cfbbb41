//! Closed-class tagging: lexicon lookups plus deterministic context rules
//! for the ambiguous surfaces (que, le/la/les, il, si, s', en, y).
//!
//! ```bash
//! cargo run --example tag_closed_class
//! ```

use reqlint::lexicon::{tag_tokens, Lexicon};
use reqlint::segment::split_sentences;
use reqlint::Language;

fn main() {
    let lexicon = Lexicon::builtin(Language::Fr);
    let samples = [
        "Le générateur de TCH vérifiera que la valeur est correcte.",
        "le paramètre qui donne la taille maximum",
        "Il ne sera pas utile de vérifier ce paquet.",
        "Le paquet ne sera généré que s'il est activé par le LVC.",
        "Il calculera la moyenne et la comparera à la moyenne maximum.",
    ];

    for sample in samples {
        println!("{sample}");
        let mut sentences = split_sentences(sample, Language::Fr);
        for sentence in &mut sentences {
            tag_tokens(sentence, lexicon);
            for token in sentence.tokens.iter().filter(|t| t.is_word()) {
                let tag = token.tag.expect("word tokens are tagged");
                let subtype = tag
                    .pronoun_subtype
                    .map(|s| format!("/{s:?}"))
                    .unwrap_or_default();
                println!(
                    "  {:12} {:?}{subtype} ({:?})",
                    token.surface, tag.major, tag.provenance
                );
            }
        }
        println!();
    }
}
