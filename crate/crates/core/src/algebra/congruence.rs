use std::collections::BTreeSet;

use serde::Serialize;

use super::FinAlgebra;
use crate::error::{Error, Result};

pub const DEFAULT_CONGRUENCE_BOUND: usize = 7;

/// Equivalence relation on `0..n`, stored as normalized block labels (each
/// block is labeled by the order of its first element).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    pub fn discrete(n: usize) -> Self {
        Partition { labels: (0..n).collect() }
    }

    pub fn total(n: usize) -> Self {
        Partition { labels: vec![0; n] }
    }

    pub fn from_labels(raw: &[usize]) -> Self {
        let mut seen: Vec<usize> = Vec::new();
        let labels = raw
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(*l);
                    seen.len() - 1
                }
            })
            .collect();
        Partition { labels }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.labels[x] == self.labels[y]
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (x, &l) in self.labels.iter().enumerate() {
            out[l].push(x);
        }
        out
    }

    pub fn is_discrete(&self) -> bool {
        self.num_blocks() == self.n()
    }

    pub fn is_total(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Partition) -> bool {
        (0..self.n()).all(|x| (0..x).all(|y| !self.same(x, y) || other.same(x, y)))
    }

    pub fn intersect(&self, other: &Partition) -> Partition {
        let pairs: Vec<usize> =
            self.labels.iter().zip(&other.labels).map(|(a, b)| a * self.n() + b).collect();
        Partition::from_labels(&pairs)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[x] = r;
        r
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.0[rx.max(ry)] = rx.min(ry);
        true
    }
}

/// Least congruence containing `start` and the pairs in `extra`.
fn close(a: &FinAlgebra, start: &Partition, extra: &[(usize, usize)]) -> Partition {
    let n = a.n();
    let mut uf = UnionFind((0..n).collect());
    for x in 0..n {
        for y in 0..x {
            if start.same(x, y) {
                uf.union(x, y);
            }
        }
    }
    for &(x, y) in extra {
        uf.union(x, y);
    }
    let ops: [&dyn Fn(usize, usize) -> usize; 5] =
        [&|x, y| a.meet(x, y), &|x, y| a.join(x, y), &|x, y| a.mul(x, y), &|x, y| a.ld(x, y), &|x, y| {
            a.rd(x, y)
        }];
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..x {
                if uf.find(x) != uf.find(y) {
                    continue;
                }
                for z in 0..n {
                    for op in &ops {
                        changed |= uf.union(op(x, z), op(y, z));
                        changed |= uf.union(op(z, x), op(z, y));
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let labels: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    Partition::from_labels(&labels)
}

pub fn congruences(a: &FinAlgebra) -> Result<Vec<Partition>> {
    congruences_bounded(a, DEFAULT_CONGRUENCE_BOUND)
}

/// All congruences of `a` (compatible with ∧, ∨, ·, \ and /), sorted.
pub fn congruences_bounded(a: &FinAlgebra, max: usize) -> Result<Vec<Partition>> {
    let n = a.n();
    if n > max {
        return Err(Error::TooLarge { n, max });
    }
    if !a.is_lattice() {
        return Err(Error::WrongClass("congruences need a lattice".into()));
    }
    let a = a.residuated()?;
    let delta = Partition::discrete(n);
    let principal: Vec<Partition> =
        (0..n).flat_map(|x| (0..x).map(move |y| (x, y))).map(|(x, y)| close(&a, &delta, &[(x, y)])).collect();
    let mut all: BTreeSet<Partition> = principal.iter().cloned().collect();
    all.insert(delta);
    loop {
        let current: Vec<Partition> = all.iter().cloned().collect();
        let before = all.len();
        for theta in &current {
            for p in &principal {
                if !p.refines(theta) {
                    all.insert(close(&a, theta, &pairs_of(p)));
                }
            }
        }
        if all.len() == before {
            return Ok(all.into_iter().collect());
        }
    }
}

fn pairs_of(p: &Partition) -> Vec<(usize, usize)> {
    p.blocks().into_iter().flat_map(|b| b.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>()).collect()
}

/// Minimal nontrivial congruences.
pub fn atoms(cons: &[Partition]) -> Vec<Partition> {
    let nontrivial: Vec<&Partition> = cons.iter().filter(|p| !p.is_discrete()).collect();
    nontrivial
        .iter()
        .filter(|p| !nontrivial.iter().any(|q| q != *p && q.refines(p)))
        .map(|p| (*p).clone())
        .collect()
}

/// A unique atom in the congruence lattice (requires `n ≥ 2`).
pub fn is_subdirectly_irreducible(a: &FinAlgebra) -> Result<bool> {
    Ok(atoms(&congruences(a)?).len() == 1)
}
