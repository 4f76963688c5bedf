//! The classical axiomatization of bounded models: a knowledge base plus
//! `Top SubClassOf {a1, ..., an}` and pairwise inequalities, ready for a
//! standard reasoner. Under bounded semantics these axioms are redundant.
//!
//! cargo run --example axiomatize

use bounded_dl::oracle::enumerate_bounded_models_bruteforce;
use bounded_dl::parser::{parse_kb, print_kb};
use bounded_dl::reasoner::axiomatize_bm;

fn main() -> bounded_dl::Result<()> {
    let kb = parse_kb(include_str!("../data/worked.kb"))?;
    let bm = axiomatize_bm(&kb)?;
    print!("{}", print_kb(&bm));

    let before: Vec<_> = enumerate_bounded_models_bruteforce(&kb)?.collect();
    let after: Vec<_> = enumerate_bounded_models_bruteforce(&bm)?.collect();
    println!("# same bounded models: {}", before == after);
    Ok(())
}
