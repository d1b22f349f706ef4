// Commutative conservative residuated lattices built by gluing smaller ones.

use std::error::Error;

use reslat::constructions::{catalan_decompose, catalan_sum, enumerate_catalan};
use reslat::counting::catalan_count;
use reslat::oracle::canonical;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let two = enumerate_catalan(2)?.remove(0);
    let diamond = catalan_sum(&two, &two)?;
    println!(
        "2 + 2 is a lattice: {}, totally ordered: {}",
        diamond.is_lattice(),
        diamond.is_totally_ordered()
    );
    let (a, b) = catalan_decompose(&diamond)?;
    println!("decomposes into sizes {} and {}", a.n(), b.n());
    println!("parts recovered: {}", canonical(&a) == canonical(&two) && canonical(&b) == canonical(&two));

    for n in 1..=9 {
        println!("n = {n}: {} algebras, formula {}", enumerate_catalan(n)?.len(), catalan_count(n)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
