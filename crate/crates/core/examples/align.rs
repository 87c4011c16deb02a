//! Type-aware Levenshtein alignment with zero-cost compound matches.

use orthower::{align, tokenize, CompoundLimit, CostModel};

fn route(reference: &str, hypothesis: &str, model: &CostModel) {
    let r = tokenize(reference).tokens;
    let h = tokenize(hypothesis).tokens;
    let alignment = align(&r, &h, model);
    println!("{reference:?} / {hypothesis:?}  total cost {}", alignment.total_cost);
    for e in &alignment.route {
        let value = |t: &Option<orthower::Token>| t.as_ref().map_or("-".to_string(), |t| t.value.clone());
        println!("  {:<13} {:<10} {:<10} {}", e.op.name(), value(&e.reference), value(&e.hypothesis), e.cost);
    }
}

fn main() {
    let paper = CostModel::default();
    route("I like ice-cream.", "I like icecream", &paper);
    route("ice cream , please", "icecream please", &paper);
    route("yes , sir", "yes the sir", &paper);
    route("The Cat", "the cat", &paper);
    route("ice cream", "icecream", &paper.with_compound_limit(CompoundLimit::DISABLED));
}
