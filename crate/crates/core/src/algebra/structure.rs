use std::collections::BTreeSet;

use super::{properties, FinAlgebra};
use crate::error::{Error, Result};

/// The monoidal preorder: `x ⊑ y` iff `x·y = x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreorderRel {
    n: usize,
    rel: Vec<bool>,
}

impl PreorderRel {
    pub fn from_matrix(m: &[Vec<bool>]) -> Self {
        let n = m.len();
        PreorderRel { n, rel: m.iter().flatten().copied().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.rel[x * self.n + y]
    }

    pub fn set(&mut self, x: usize, y: usize, v: bool) {
        self.rel[x * self.n + y] = v;
    }

    /// `x ∼ y`: mutually below.
    pub fn equiv(&self, x: usize, y: usize) -> bool {
        self.le(x, y) && self.le(y, x)
    }

    /// `x ⋈ y`: neither below the other.
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.le(x, y) && !self.le(y, x)
    }

    /// Elements other than `x` that are `∼` or `⋈` to it.
    pub fn partners(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| y != x && (self.equiv(x, y) || self.incomparable(x, y))).collect()
    }

    /// `x♯`: the unique partner of `x`, or `x` itself when there is none.
    pub fn sharp(&self, x: usize) -> usize {
        match self.partners(x).as_slice() {
            [y] => *y,
            _ => x,
        }
    }

    pub fn is_preorder(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| self.le(x, x))
            && (0..n)
                .all(|x| (0..n).all(|y| (0..n).all(|z| !(self.le(x, y) && self.le(y, z)) || self.le(x, z))))
    }

    pub fn greatest(&self) -> Option<usize> {
        (0..self.n).find(|&g| (0..self.n).all(|x| self.le(x, g)))
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        self.rel.chunks(self.n).map(<[bool]>::to_vec).collect()
    }
}

pub fn monoidal_preorder(a: &FinAlgebra) -> Result<PreorderRel> {
    let n = a.n();
    if let Some(x) = (0..n).find(|&x| a.mul(x, x) != x) {
        return Err(Error::NotIdempotent(x));
    }
    let mut rel = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            rel[x * n + y] = a.mul(x, y) == x;
        }
    }
    Ok(PreorderRel { n, rel })
}

/// `γ_a(x) = (a/x)\a`.
pub fn gamma_closure(a: &FinAlgebra, center: usize) -> Result<Vec<usize>> {
    if !a.has_residuals() {
        return Err(Error::MissingResiduals);
    }
    if center >= a.n() {
        return Err(Error::IndexOutOfRange { table: "gamma", index: center, n: a.n() });
    }
    Ok((0..a.n()).map(|x| a.ld(a.rd(center, x), center)).collect())
}

/// Inflationary, monotone and idempotent on the lattice order of `a`.
pub fn is_closure_operator(a: &FinAlgebra, g: &[usize]) -> bool {
    let n = a.n();
    (0..n).all(|x| a.leq(x, g[x]) && g[g[x]] == g[x])
        && (0..n).all(|x| (0..n).all(|y| !a.leq(x, y) || a.leq(g[x], g[y])))
}

/// Skeleton of a commutative idempotent chain: the `γ_1`-closed elements and
/// the fibers `{x : γ_1(x) = c}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    /// The subalgebra on the closed elements (an odd Sugihara chain).
    pub algebra: FinAlgebra,
    /// Closed elements as indices of the original algebra, ascending.
    pub elements: Vec<usize>,
    /// For each original index, the skeleton index of its closure.
    pub fiber_of: Vec<usize>,
    /// For each skeleton index, its fiber listed bottom-up; the last entry is
    /// the closed element itself.
    pub fibers: Vec<Vec<usize>>,
}

pub fn skeleton(a: &FinAlgebra) -> Result<Skeleton> {
    let flags = properties(a);
    if !(flags.totally_ordered && flags.commutative && flags.idempotent) {
        return Err(Error::WrongClass("skeleton needs a commutative idempotent chain".into()));
    }
    let a = a.residuated()?;
    let g = gamma_closure(&a, a.unit())?;
    let elements: Vec<usize> = (0..a.n()).filter(|&x| g[x] == x).collect();
    let algebra = a.restrict(&elements)?;
    let index_of = |c: usize| elements.binary_search(&c).expect("closure lands in the skeleton");
    let fiber_of: Vec<usize> = g.iter().map(|&c| index_of(c)).collect();
    let rank = |x: usize| (0..a.n()).filter(|&y| a.lt(y, x)).count();
    let mut fibers = vec![Vec::new(); elements.len()];
    for x in 0..a.n() {
        fibers[fiber_of[x]].push(x);
    }
    for f in &mut fibers {
        f.sort_by_key(|&x| rank(x));
    }
    Ok(Skeleton { algebra, elements, fiber_of, fibers })
}

/// Least subset containing `seed` and the unit closed under ∧, ∨, ·, \ and /.
pub fn generated_subalgebra(a: &FinAlgebra, seed: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    if !a.has_residuals() {
        return Err(Error::MissingResiduals);
    }
    if let Some(&bad) = seed.iter().find(|&&x| x >= a.n()) {
        return Err(Error::IndexOutOfRange { table: "seed", index: bad, n: a.n() });
    }
    let mut set: BTreeSet<usize> = seed.clone();
    set.insert(a.unit());
    loop {
        let snapshot: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &x in &snapshot {
            for &y in &snapshot {
                set.extend([a.meet(x, y), a.join(x, y), a.mul(x, y), a.ld(x, y), a.rd(x, y)]);
            }
        }
        if set.len() == before {
            return Ok(set);
        }
    }
}
