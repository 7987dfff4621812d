//! The 25 irreducible characters of W(F4): how each one is built, its
//! Carter name and fake degree.

use f4label::f4chars::{build_all, F4Group};

fn main() -> f4label::Result<()> {
    let g = F4Group::get();
    let [da, tt, at] = g.table_columns();
    println!(
        "{:<5} {:<11} {:>3} {:>3} {:>3}  construction / fake degree",
        "", "", "d", "τ", "aτ"
    );
    for x in build_all()? {
        println!(
            "{:<5} {:<11} {:>3} {:>3} {:>3}  {}",
            x.kondo.to_string(),
            x.carter.to_string(),
            x.values[da],
            x.values[tt],
            x.values[at],
            x.construction
        );
        println!("{:>30}{}", "", x.fake_degree);
    }
    Ok(())
}
