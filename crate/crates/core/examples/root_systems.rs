//! Root counts, Cartan matrices and Weyl group orders for every supported type.

use f4label::rootsys::{CartanType, RootSystem};
use f4label::weylgrp::WeylGroup;

fn main() -> f4label::Result<()> {
    for t in CartanType::ALL {
        let sys = RootSystem::build(t)?;
        println!(
            "{t}: {} positive roots, |W| = {}, degrees {:?}",
            sys.num_positive(),
            t.group_order(),
            t.invariant_degrees()
        );
    }

    let f4 = RootSystem::build(CartanType::F4)?;
    println!("\nF4 Cartan matrix:");
    for row in &f4.ambient().cartan {
        println!("  {row:?}");
    }
    let highest = f4
        .positive_roots()
        .iter()
        .max_by_key(|r| r.height())
        .unwrap();
    println!(
        "highest root {:?}, height {}",
        highest.coords,
        highest.height()
    );

    let g = WeylGroup::new(CartanType::F4)?;
    let en = g.enumerate()?;
    println!("Poincaré series of W(F4): {}", en.poincare_series());
    Ok(())
}
