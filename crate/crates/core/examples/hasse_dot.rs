// Graphviz Hasse diagrams of the lattice order and the monoidal preorder.

use std::error::Error;

use reslat::chains::compile;
use reslat::dot::{combined_dot, order_dot};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = compile(&"Cn".parse()?).algebra;
    print!("{}", order_dot(&a));
    print!("{}", combined_dot(&a));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
