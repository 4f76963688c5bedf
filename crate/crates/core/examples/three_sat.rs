//! Propositional satisfiability as bounded-model satisfiability over a
//! single individual: one concept name per variable and one GCI for the
//! clause set.
//!
//! cargo run --example three_sat

use bounded_dl::parser::print_kb;
use bounded_dl::reasoner::{reduce_3sat, Reasoner, SatLiteral};

fn main() -> bounded_dl::Result<()> {
    let (p, n) = (SatLiteral::pos, SatLiteral::neg);
    let instances = [
        (
            "(x1 | ~x2 | x3) & (~x1 | x2) & (~x3)",
            vec![vec![p(1), n(2), p(3)], vec![n(1), p(2)], vec![n(3)]],
        ),
        (
            "(x1) & (~x1 | x2) & (~x2)",
            vec![vec![p(1)], vec![n(1), p(2)], vec![n(2)]],
        ),
    ];
    for (text, clauses) in instances {
        let kb = reduce_3sat(&clauses);
        print!("{}", print_kb(&kb));
        let result = Reasoner::new().check_sat(&kb)?;
        match result.witness {
            Some(m) => {
                let true_vars: Vec<String> = m.iter().map(|f| f.predicate().to_string()).collect();
                println!("{text}: satisfiable, true: {true_vars:?}\n");
            }
            None => println!("{text}: unsatisfiable\n"),
        }
    }
    Ok(())
}
