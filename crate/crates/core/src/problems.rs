//! Knowledge bases for combinatorial benchmark problems.

use crate::model::{Axiom, Concept, KnowledgeBase, Role};

/// `K_n`: an `r`-chain through `A_1, …, A_{n+1}` with pairwise disjoint
/// `A_i`, over only `n` individuals. Unsatisfiable for every `n ≥ 1`.
pub fn pigeonhole(n: usize) -> KnowledgeBase {
    let a = |i: usize| Concept::name(format!("A{i}"));
    let r = Role::atomic("r");
    let mut kb = KnowledgeBase::default();
    let mut push = |ax| kb.push(ax).expect("names have fixed sorts");
    push(Axiom::ConceptAssertion(a(1), "a1".into()));
    for k in 1..=n {
        push(Axiom::ConceptAssertion(Concept::Top, format!("a{k}")));
    }
    for i in 1..=n {
        push(Axiom::Gci(a(i), Concept::exists(r.clone(), a(i + 1))));
    }
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            push(Axiom::Gci(Concept::and(a(i), a(j)), Concept::Bot));
        }
    }
    kb
}

/// Name of the cell in row `r` and column `c` (both from 1).
pub fn cell(r: usize, c: usize) -> String {
    format!("c{r}_{c}")
}

/// Whether two distinct cells of a `box_size²`-sized grid share a row, a
/// column or a box.
pub fn sees(box_size: usize, (r1, c1): (usize, usize), (r2, c2): (usize, usize)) -> bool {
    let same_box =
        (r1 - 1) / box_size == (r2 - 1) / box_size && (c1 - 1) / box_size == (c2 - 1) / box_size;
    (r1, c1) != (r2, c2) && (r1 == r2 || c1 == c2 || same_box)
}

/// A Sudoku of side `box_size²`: one individual per cell, value concepts
/// `v1 … vN`, and a `sees` role asserted between cells that must differ.
/// `givens` are `(row, column, value)` triples.
///
/// Each cell takes exactly one value, no cell shares its value with a cell
/// it sees, and `⊤ ⊑ ≤P sees.⊤` (with `P` the number of peers) keeps
/// `sees` from growing beyond the asserted pairs.
pub fn sudoku(box_size: usize, givens: &[(usize, usize, usize)]) -> KnowledgeBase {
    let n = box_size * box_size;
    let v = |i: usize| Concept::name(format!("v{i}"));
    let sees_role = Role::atomic("sees");
    let mut kb = KnowledgeBase::default();
    let mut push = |ax| kb.push(ax).expect("names have fixed sorts");

    let cells: Vec<(usize, usize)> = (1..=n).flat_map(|r| (1..=n).map(move |c| (r, c))).collect();
    for &(r, c) in &cells {
        push(Axiom::ConceptAssertion(Concept::Top, cell(r, c)));
    }
    for &(r, c, val) in givens {
        push(Axiom::ConceptAssertion(v(val), cell(r, c)));
    }
    for &x in &cells {
        for &y in &cells {
            if sees(box_size, x, y) {
                push(Axiom::RoleAssertion(
                    sees_role.clone(),
                    cell(x.0, x.1),
                    cell(y.0, y.1),
                ));
            }
        }
    }

    push(Axiom::Gci(Concept::Top, Concept::or_all((1..=n).map(v))));
    for i in 1..=n {
        for j in i + 1..=n {
            push(Axiom::Gci(Concept::and(v(i), v(j)), Concept::Bot));
        }
        push(Axiom::Gci(
            v(i),
            Concept::forall(sees_role.clone(), Concept::not(v(i))),
        ));
    }
    let peers = cells.iter().filter(|&&y| sees(box_size, (1, 1), y)).count() as u32;
    push(Axiom::Gci(
        Concept::Top,
        Concept::at_most(peers, sees_role, Concept::Top),
    ));
    kb
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pigeonhole_shape() {
        let kb = pigeonhole(3);
        assert_eq!(kb.vocabulary.individuals.len(), 3);
        assert_eq!(kb.vocabulary.concepts.len(), 4);
        // 3 chain axioms and C(4, 2) disjointness axioms.
        assert_eq!(kb.tbox.len(), 3 + 6);
    }

    #[test]
    fn sudoku_shape() {
        let kb = sudoku(2, &[(1, 1, 1)]);
        assert_eq!(kb.vocabulary.individuals.len(), 16);
        assert_eq!(kb.vocabulary.concepts.len(), 4);
        assert_eq!(kb.abox.len(), 16 + 1 + 16 * 7);
        let big = sudoku(3, &[]);
        assert_eq!(big.vocabulary.individuals.len(), 81);
        assert_eq!(big.abox.len(), 81 + 81 * 20);
    }
}
