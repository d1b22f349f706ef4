use std::collections::BTreeSet;

use crate::algebra::{FinAlgebra, Order};

pub(crate) fn chain(n: usize) -> Vec<Vec<bool>> {
    (0..n).map(|x| (0..n).map(|y| x <= y).collect()).collect()
}

fn is_lattice(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let ub: Vec<usize> = (0..n).filter(|&z| m[x][z] && m[y][z]).collect();
            ub.iter().any(|&j| ub.iter().all(|&z| m[j][z]))
        })
    })
}

/// Canonical key of an order: least matrix over relabelings that keep the
/// bottom at 0 and the top at `n-1` and respect the order.
fn order_key(m: &[Vec<bool>]) -> Vec<bool> {
    let n = m.len();
    let probe =
        FinAlgebra::new(n, Order::Matrix(m.to_vec()), 0, vec![vec![0; n]; n]).expect("well-formed probe");
    let mut best: Option<Vec<bool>> = None;
    super::for_each_linear_extension(&probe, |perm| {
        let mut inv = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        let key: Vec<bool> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| m[inv[i]][inv[j]]).collect();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    });
    best.expect("orders have linear extensions")
}

/// One order matrix per isomorphism class of lattices with `n` elements, each
/// naturally labeled (`x ≤ y` implies `x ≤ y` as indices), bottom 0, top `n-1`.
pub fn lattices(n: usize) -> Vec<Vec<Vec<bool>>> {
    if n <= 2 {
        return vec![chain(n)];
    }
    // free pairs (i, j) with 0 < i < j < n-1
    let pairs: Vec<(usize, usize)> = (1..n - 1).flat_map(|i| (i + 1..n - 1).map(move |j| (i, j))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut m = vec![vec![false; n]; n];
        for (x, row) in m.iter_mut().enumerate() {
            row[x] = true;
            row[n - 1] = true;
        }
        m[0].fill(true);
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                m[i][j] = true;
            }
        }
        let transitive = (0..n).all(|x| (0..n).all(|y| !m[x][y] || (0..n).all(|z| !m[y][z] || m[x][z])));
        if transitive && is_lattice(&m) && seen.insert(order_key(&m)) {
            out.push(m);
        }
    }
    out
}
