// Exact counts of idempotent chains by formula, recurrence and closed form.

use std::error::Error;

use reslat::counting::{count_cic, count_ic_closed, count_ic_formula, count_ic_recurrence, RootThreeInt};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in [2, 5, 10, 20, 50] {
        println!(
            "n = {n}: commutative {}, all {} (recurrence {}, closed {})",
            count_cic(n)?,
            count_ic_formula(n)?,
            count_ic_recurrence(n)?,
            count_ic_closed(n)?
        );
    }
    let r = RootThreeInt::new(1, 1);
    let p = r.pow(5);
    println!("(1 + √3)^5 = {} + {}√3", p.a, p.b);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
