// Driving the command-line front end in-process.

use std::error::Error;

use reslat::cli::run;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for line in ["count --class cic --size 8 --from 2", "enumerate --class ic --size 4", "construct --code C"]
    {
        let argv = std::iter::once("reslat").chain(line.split(' ')).map(String::from);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(argv, &mut out, &mut err);
        println!("$ reslat {line}  (exit {code})");
        print!("{}", String::from_utf8(out)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
