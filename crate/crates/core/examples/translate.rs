//! The pipeline step by step: normal form, the answer set program in
//! solver syntax, its answer sets, and their projection back to models.
//!
//! cargo run --example translate

use bounded_dl::asp::{emit_text, solve};
use bounded_dl::normalize::normalize;
use bounded_dl::parser::parse_kb;
use bounded_dl::translate::translate;

fn main() -> bounded_dl::Result<()> {
    let kb = parse_kb("A SubClassOf only r (B and not C). r o r SubRoleOf r. A(a). r(a, b).")?;

    let normalized = normalize(&kb);
    println!("% normal form\n{normalized}");

    let translation = translate(&normalized)?;
    println!("% program");
    print!("{}", emit_text(&translation.program));

    // q_0 is only forced where B and not C must hold, so several answer
    // sets can differ in q_0 alone and project to the same model.
    let mut seen = Vec::new();
    for (k, i) in solve(&translation.program)?.enumerate() {
        let model = translation.project(&i);
        let facts: Vec<String> = model.iter().map(ToString::to_string).collect();
        let note = match seen.iter().position(|m| *m == model) {
            Some(j) => format!("  (same model as answer set {})", j + 1),
            None => String::new(),
        };
        println!("% answer set {} -> {{{}}}{note}", k + 1, facts.join(", "));
        seen.push(model);
    }
    Ok(())
}
