//! Normalisers rewrite comparison values and leave a trail; the source
//! text stays recoverable.

use orthower::{normalise, tokenize, NormaliserConfig, NormaliserId};

fn show(label: &str, text: &str, config: &NormaliserConfig) {
    let normalised = normalise(&tokenize(text), config);
    let values: Vec<String> = normalised
        .tokens
        .iter()
        .map(|t| {
            if t.normalisations.is_empty() {
                t.value.clone()
            } else {
                let trail: Vec<&str> = t.normalisations.iter().map(|n| n.name()).collect();
                format!("{}<{}>", t.value, trail.join("+"))
            }
        })
        .collect();
    println!("{label:<16} {}", values.join(" "));
    assert_eq!(normalised.rejoin(), text);
}

fn main() {
    let text = "Um, Mr. Jones won't pay two thousand dollars for the colour [laughs] café.";
    println!("{text}\n");
    show("all", text, &NormaliserConfig::all());
    show("none", text, &NormaliserConfig::none());
    show("no numbers", text, &NormaliserConfig::all().without(NormaliserId::Numbers));
    show("contractions", text, &NormaliserConfig::none().with(NormaliserId::Contractions));
}
