//! Parse a knowledge base, decide bounded-model satisfiability and show the
//! model that witnesses it.
//!
//! cargo run --example satisfiability [file.kb]

use bounded_dl::cli::format_facts;
use bounded_dl::parser::parse_kb;
use bounded_dl::reasoner::Reasoner;

const DEFAULT: &str = include_str!("../data/worked.kb");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let kb = parse_kb(&text)?;
    println!(
        "{} individuals, {} concept names, {} role names, {} axioms",
        kb.vocabulary.individuals.len(),
        kb.vocabulary.concepts.len(),
        kb.vocabulary.roles.len(),
        kb.len()
    );

    let result = Reasoner::new().check_sat(&kb)?;
    match &result.witness {
        Some(model) => print!("satisfiable, for instance:\n{}", format_facts(model)),
        None => println!("unsatisfiable"),
    }
    eprintln!("{}", result.stats);
    Ok(())
}
