//! Relative root systems attached to Levi subsystems.

use f4label::relative::{case_studies, relative_system, show_vector};
use f4label::rootsys::CartanType;

fn main() -> f4label::Result<()> {
    let d = relative_system(CartanType::F4, &[2, 3])?;
    println!("F4 ⊇ B2 gives {} with {} roots", d.rel_type, d.num_roots);
    for n in &d.nodes {
        println!(
            "  {}  {}  word {:?}  λ = {}",
            n.label,
            show_vector(&n.vector),
            n.word,
            n.weight.show()
        );
    }

    println!();
    for c in case_studies() {
        let weights: Vec<String> = c.datum.nodes.iter().map(|n| n.weight.show()).collect();
        println!(
            "{:<10} -> {} ({} roots), long {:?}, λ {:?}, {}",
            c.name,
            c.datum.rel_type,
            c.datum.num_roots,
            c.datum.long_nodes(),
            weights,
            if c.passed() {
                "as expected"
            } else {
                "MISMATCH"
            }
        );
    }
    Ok(())
}
