//! Writes a colour-coded, self-contained HTML diff.
//!
//! ```text
//! cargo run --example html_report -- report.html
//! ```

use orthower::report::html::render_report;
use orthower::{evaluate_pair, EvalConfig};

fn main() {
    let report = evaluate_pair(
        "Their walk, in Paris, cost $20 per person.",
        "there walked in paris; cost twenty dollars a person",
        &EvalConfig::default(),
    );
    let page = render_report(&report, "Example pair");
    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, &page).expect("write report");
            println!("wrote {path}");
        }
        None => println!("{page}"),
    }
}
