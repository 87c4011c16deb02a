//! Lexing keeps every character: affixes ride along with their token.
//!
//! ```text
//! cargo run --example tokenize -- "Mrs. Smith said: “it’s 3.14!”"
//! ```

use orthower::tokenize;

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "Mrs. Smith said: “it’s 3.14!”".to_string());
    let transcript = tokenize(&text);
    println!("{:<12} {:<10} {:<8} {:<8} span", "kind", "value", "prefix", "suffix");
    for t in &transcript.tokens {
        println!(
            "{:<12} {:<10} {:<8} {:<8} {}..{}",
            format!("{:?}", t.kind),
            t.value,
            format!("{:?}", t.prefix),
            format!("{:?}", t.suffix),
            t.span.start,
            t.span.end
        );
    }
    assert_eq!(transcript.rejoin(), text);
    println!("round trip ok");
}
