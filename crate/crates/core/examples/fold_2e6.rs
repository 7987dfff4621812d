//! Folding E6 along its graph automorphism gives a root system of type F4.

use f4label::relative::{fold_2e6, show_vector};

fn main() -> f4label::Result<()> {
    let f = fold_2e6()?;
    println!("{} roots, type {}", f.num_roots, f.rel_type);
    for n in &f.nodes {
        println!(
            "{:<10} {:?}  |·|² = {}  λ = {}  ({})",
            n.label,
            n.length_class,
            n.sq_length,
            n.weight.show(),
            show_vector(&n.vector)
        );
    }
    println!("Cartan matrix {:?}", f.rel_cartan);
    Ok(())
}
