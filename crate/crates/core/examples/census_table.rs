// Side-by-side counts from every method for a class.

use std::error::Error;

use reslat::census::{census, Class};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for class in [Class::Cic, Class::Ic, Class::Catalan] {
        let report = census(class, 2..=7, class.methods(), 6, 2)?;
        println!("{class} (all agree: {})", report.agrees());
        print!("{}", report.table());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
