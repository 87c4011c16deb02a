//! Error classes of single substitutions, plus the stemmer and phonetic
//! codes behind them.

use orthower::classify::{double_metaphone, stem};
use orthower::classify_pair;

fn main() {
    let pairs = [
        (",", "."),
        ("Cat", "cat"),
        ("2000", "2001"),
        ("ice-cream", "icecream"),
        ("walk", "walked"),
        ("do", "undo"),
        ("running", "runs"),
        ("there", "their"),
        ("cat", "dog"),
    ];
    for (r, h) in pairs {
        println!("{r:>10} → {h:<10} {}", classify_pair(r, h));
    }
    println!();
    for word in ["relational", "generalizations", "hopping", "caresses"] {
        println!("stem({word}) = {}", stem(word));
    }
    for word in ["Smith", "Schmidt", "Philip", "Phillip"] {
        let (primary, secondary) = double_metaphone(word);
        println!("double_metaphone({word}) = ({primary}, {secondary})");
    }
}
