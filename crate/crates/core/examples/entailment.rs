//! Bounded-model entailment. Facts that only hold because the domain is
//! restricted to the named individuals become consequences.
//!
//! cargo run --example entailment

use bounded_dl::cli::format_facts;
use bounded_dl::parser::{parse_axiom, parse_kb};
use bounded_dl::reasoner::Reasoner;

fn main() -> bounded_dl::Result<()> {
    let kb = parse_kb(include_str!("../data/worked.kb"))?;
    let reasoner = Reasoner::new();
    for query in [
        "Top SubClassOf some r some r B",
        "Top SubClassOf B",
        "Top SubClassOf self r",
        "Top SubClassOf not A",
        "s SubRoleOf r",
    ] {
        let ax = parse_axiom(query, &kb.vocabulary)?;
        let result = reasoner.entails(&kb, &ax)?;
        if result.verdict {
            println!("entailed:     {ax}");
        } else {
            println!("not entailed: {ax}");
            let witness = result.witness.expect("countermodel");
            for line in format_facts(&witness).lines().filter(|l| *l != "---") {
                println!("    {line}");
            }
        }
    }
    Ok(())
}
