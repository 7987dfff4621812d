//! Generic degrees of the two-dimensional Hecke representations and their
//! specialisations at unequal parameters.

use f4label::arith::BiFrac;
use f4label::hecke::{a_invariant, f4_generic_degree, printed_d21};

fn main() -> f4label::Result<()> {
    let s = f4_generic_degree("2_1")?;
    let sp = f4_generic_degree("2_3")?;
    println!(
        "D_2_1 equals the closed form: {}",
        BiFrac::frac_eq(&s.value, &printed_d21())?
    );
    println!(
        "D_2_3(u,v) = D_2_1(v,u): {}",
        BiFrac::frac_eq(&sp.value, &s.value.swap_uv())?
    );

    for name in ["1_1", "1_2", "1_3", "1_4", "2_1", "2_3"] {
        println!("a({name}) = {}", a_invariant(&f4_generic_degree(name)?)?);
    }

    for (a, b) in [(1, 1), (1, 2), (2, 1), (1, 4), (4, 1)] {
        for gd in [&s, &sp] {
            let r = gd.value.specialize(a, b)?;
            let (c, e) = r.lowest_term()?;
            println!("D_{} at (q^{a}, q^{b}): lowest term {c} q^{e}", gd.rep);
        }
    }
    Ok(())
}
