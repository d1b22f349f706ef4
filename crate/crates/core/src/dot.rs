//! Graphviz output of Hasse diagrams: lattice order covers drawn solid,
//! monoidal preorder covers dashed, the unit drawn as a double circle.

use std::fmt::Write;

use crate::algebra::FinAlgebra;

/// Covering pairs `(x, y)` of a relation given as a predicate: `x < y` with
/// nothing strictly between. Mutually related pairs are returned separately.
type Edges = Vec<(usize, usize)>;

fn covers(n: usize, le: impl Fn(usize, usize) -> bool) -> (Edges, Edges) {
    let lt = |x: usize, y: usize| le(x, y) && !le(y, x);
    let mut strict = Vec::new();
    let mut equiv = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)) {
                strict.push((x, y));
            }
            if x < y && le(x, y) && le(y, x) {
                equiv.push((x, y));
            }
        }
    }
    (strict, equiv)
}

fn header(out: &mut String, name: &str, a: &FinAlgebra) {
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for x in 0..a.n() {
        let shape = if x == a.unit() { " shape=doublecircle" } else { "" };
        writeln!(out, "  {x} [label=\"{x}\"{shape}];").unwrap();
    }
}

fn order_edges(out: &mut String, a: &FinAlgebra) {
    for (x, y) in covers(a.n(), |x, y| a.leq(x, y)).0 {
        writeln!(out, "  {x} -> {y};").unwrap();
    }
}

fn monoidal_edges(out: &mut String, a: &FinAlgebra) {
    let (strict, equiv) = covers(a.n(), |x, y| a.mul(x, y) == x);
    for (x, y) in strict {
        writeln!(out, "  {x} -> {y} [style=dashed];").unwrap();
    }
    for (x, y) in equiv {
        writeln!(out, "  {x} -> {y} [style=dashed dir=both];").unwrap();
    }
}

/// The lattice order as one digraph.
pub fn order_dot(a: &FinAlgebra) -> String {
    let mut out = String::new();
    header(&mut out, "order", a);
    order_edges(&mut out, a);
    out.push_str("}\n");
    out
}

/// The relation `x·y = x` as one digraph.
pub fn monoidal_dot(a: &FinAlgebra) -> String {
    let mut out = String::new();
    header(&mut out, "monoidal", a);
    monoidal_edges(&mut out, a);
    out.push_str("}\n");
    out
}

/// Both relations in a single digraph.
pub fn combined_dot(a: &FinAlgebra) -> String {
    let mut out = String::new();
    header(&mut out, "hasse", a);
    order_edges(&mut out, a);
    monoidal_edges(&mut out, a);
    out.push_str("}\n");
    out
}
