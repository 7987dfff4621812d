//! Translating character names between the three labelling schemes.

use f4label::labels::{changed_labels, conversion_table, convert, iota, Scheme};

fn main() -> f4label::Result<()> {
    let t = iota()?;
    println!("graph automorphism swaps:");
    for (a, b) in t.swaps() {
        println!("  {a} <-> {b}");
    }

    for label in ["2_1", "2_3", "8_1", "9_2"] {
        let c = convert(Scheme::Lusztig, Scheme::Carter, label)?;
        let k = convert(Scheme::Lusztig, Scheme::Kondo, label)?;
        println!("{label} read with d, a short: {c}, which is {k} with d, a long");
    }

    let table = conversion_table()?;
    println!(
        "{} of 25 names change between the two readings",
        changed_labels(&table).len()
    );
    Ok(())
}
