//! Unsatisfiability of the pigeonhole knowledge bases `K_n`: an r-chain of
//! n+1 pairwise disjoint concepts cannot fit on n individuals.
//!
//! cargo run --release --example pigeonhole -- 6

use std::time::Instant;

use bounded_dl::problems::pigeonhole;
use bounded_dl::reasoner::Reasoner;

fn main() -> bounded_dl::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    for n in 1..=max {
        let kb = pigeonhole(n);
        let start = Instant::now();
        let result = Reasoner::new().check_sat(&kb)?;
        println!(
            "K_{n}: {} in {:.3}s ({} branches)",
            if result.verdict { "sat" } else { "unsat" },
            start.elapsed().as_secs_f64(),
            result.stats.branches
        );
    }
    Ok(())
}
