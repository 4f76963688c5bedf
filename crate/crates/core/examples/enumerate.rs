//! Enumerate every bounded model of a small knowledge base and compare
//! against the direct semantics, which tries all interpretations.
//!
//! cargo run --example enumerate

use bounded_dl::oracle::enumerate_bounded_models_bruteforce;
use bounded_dl::parser::parse_kb;
use bounded_dl::reasoner::Reasoner;
use bounded_dl::ABoxRepresentation;

fn main() -> bounded_dl::Result<()> {
    // Each of a and b is A or B but not both; some A must see a B.
    let kb = parse_kb(
        "Top SubClassOf A or B. A and B SubClassOf Bot. \
         A SubClassOf some knows B. Top(a). Top(b).",
    )?;

    let models: Vec<ABoxRepresentation> = Reasoner::new()
        .enumerate_models(&kb, None)?
        .collect::<bounded_dl::Result<_>>()?;
    for (k, m) in models.iter().enumerate() {
        let facts: Vec<String> = m.iter().map(ToString::to_string).collect();
        println!("model {}: {{{}}}", k + 1, facts.join(", "));
    }

    let mut direct: Vec<ABoxRepresentation> = enumerate_bounded_models_bruteforce(&kb)?.collect();
    let mut ours = models.clone();
    direct.sort();
    ours.sort();
    println!(
        "{} models; brute force over all {} interpretations agrees: {}",
        models.len(),
        1u64 << kb.vocabulary.candidate_bits(),
        direct == ours
    );
    Ok(())
}
