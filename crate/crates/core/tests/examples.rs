//! Every example in examples/ runs to completion.

#[allow(dead_code)]
mod amalgamation {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/amalgamation.rs"));
}

#[allow(dead_code)]
mod brute_force_oracle {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/brute_force_oracle.rs"));
}

#[allow(dead_code)]
mod catalan_sums {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/catalan_sums.rs"));
}

#[allow(dead_code)]
mod census_table {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/census_table.rs"));
}

#[allow(dead_code)]
mod command_line {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/command_line.rs"));
}

#[allow(dead_code)]
mod congruence_lattice {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/congruence_lattice.rs"));
}

#[allow(dead_code)]
mod exact_counting {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exact_counting.rs"));
}

#[allow(dead_code)]
mod fep_closure {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fep_closure.rs"));
}

#[allow(dead_code)]
mod hasse_dot {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hasse_dot.rs"));
}

#[allow(dead_code)]
mod laced_codes {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/laced_codes.rs"));
}

#[allow(dead_code)]
mod monoidal_structure {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/monoidal_structure.rs"));
}

#[allow(dead_code)]
mod noncommutative_c4 {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/noncommutative_c4.rs"));
}

#[allow(dead_code)]
mod tensor_skeleton {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tensor_skeleton.rs"));
}

#[allow(dead_code)]
mod validate_algebra {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/validate_algebra.rs"));
}

#[test]
fn amalgamation_runs() {
    amalgamation::run_example().expect("amalgamation example should run");
}

#[test]
fn brute_force_oracle_runs() {
    brute_force_oracle::run_example().expect("brute_force_oracle example should run");
}

#[test]
fn catalan_sums_runs() {
    catalan_sums::run_example().expect("catalan_sums example should run");
}

#[test]
fn census_table_runs() {
    census_table::run_example().expect("census_table example should run");
}

#[test]
fn command_line_runs() {
    command_line::run_example().expect("command_line example should run");
}

#[test]
fn congruence_lattice_runs() {
    congruence_lattice::run_example().expect("congruence_lattice example should run");
}

#[test]
fn exact_counting_runs() {
    exact_counting::run_example().expect("exact_counting example should run");
}

#[test]
fn fep_closure_runs() {
    fep_closure::run_example().expect("fep_closure example should run");
}

#[test]
fn hasse_dot_runs() {
    hasse_dot::run_example().expect("hasse_dot example should run");
}

#[test]
fn laced_codes_runs() {
    laced_codes::run_example().expect("laced_codes example should run");
}

#[test]
fn monoidal_structure_runs() {
    monoidal_structure::run_example().expect("monoidal_structure example should run");
}

#[test]
fn noncommutative_c4_runs() {
    noncommutative_c4::run_example().expect("noncommutative_c4 example should run");
}

#[test]
fn tensor_skeleton_runs() {
    tensor_skeleton::run_example().expect("tensor_skeleton example should run");
}

#[test]
fn validate_algebra_runs() {
    validate_algebra::run_example().expect("validate_algebra example should run");
}
