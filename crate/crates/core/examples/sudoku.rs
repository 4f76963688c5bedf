//! Enumerates all 4×4 Sudoku grids as bounded models, then completes a
//! partially filled one.
//!
//! cargo run --release --example sudoku

use std::time::Instant;

use bounded_dl::model::Fact;
use bounded_dl::problems::{cell, sudoku};
use bounded_dl::reasoner::Reasoner;

fn grid(model: &bounded_dl::ABoxRepresentation, n: usize) -> String {
    let mut rows = Vec::new();
    for r in 1..=n {
        let row: Vec<String> = (1..=n)
            .map(|c| {
                (1..=n)
                    .find(|v| model.contains(&Fact::concept(format!("v{v}"), cell(r, c))))
                    .map_or(".".into(), |v| v.to_string())
            })
            .collect();
        rows.push(row.join(" "));
    }
    rows.join("\n")
}

fn main() -> bounded_dl::Result<()> {
    let reasoner = Reasoner::new();

    let start = Instant::now();
    let kb = sudoku(2, &[]);
    let count = reasoner
        .enumerate_models(&kb, None)?
        .try_fold(0, |n, m| m.map(|_| n + 1))?;
    println!("{count} grids in {:.2}s", start.elapsed().as_secs_f64());

    let puzzle = sudoku(2, &[(1, 1, 1), (2, 3, 2), (3, 2, 3), (4, 4, 4)]);
    match reasoner.extract_model(&puzzle)? {
        Some(m) => println!("{}", grid(&m, 4)),
        None => println!("no solution"),
    }
    Ok(())
}
