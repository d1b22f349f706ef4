use sha2::{Digest, Sha256};

use crate::algebra::{Embedding, FinAlgebra};

/// The lexicographically least `(order, unit, product)` tuple over all
/// relabelings along linear extensions of the lattice order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub leq: Vec<bool>,
    pub unit: usize,
    pub prod: Vec<usize>,
}

impl CanonicalForm {
    /// Hex SHA-256 of the form, used as a stable file name.
    pub fn hash_hex(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.n as u64).to_le_bytes());
        h.update(self.leq.iter().map(|&b| u8::from(b)).collect::<Vec<_>>());
        h.update((self.unit as u64).to_le_bytes());
        for &v in &self.prod {
            h.update((v as u64).to_le_bytes());
        }
        hex::encode(h.finalize())
    }
}

/// Calls `f` with every bijection `perm` (old index ↦ new index) such that
/// `x ≤ y` implies `perm[x] ≤ perm[y]`.
pub fn for_each_linear_extension(a: &FinAlgebra, mut f: impl FnMut(&[usize])) {
    fn go(a: &FinAlgebra, perm: &mut Vec<usize>, next: usize, f: &mut dyn FnMut(&[usize])) {
        let n = a.n();
        if next == n {
            f(perm);
            return;
        }
        for x in 0..n {
            let ready =
                perm[x] == usize::MAX && (0..n).all(|y| y == x || !a.leq(y, x) || perm[y] != usize::MAX);
            if ready {
                perm[x] = next;
                go(a, perm, next + 1, f);
                perm[x] = usize::MAX;
            }
        }
    }
    let mut perm = vec![usize::MAX; a.n()];
    go(a, &mut perm, 0, &mut f);
}

fn form_under(a: &FinAlgebra, perm: &[usize]) -> CanonicalForm {
    let n = a.n();
    let mut inv = vec![0; n];
    for (x, &p) in perm.iter().enumerate() {
        inv[p] = x;
    }
    let mut leq = Vec::with_capacity(n * n);
    let mut prod = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            leq.push(a.leq(inv[i], inv[j]));
            prod.push(perm[a.mul(inv[i], inv[j])]);
        }
    }
    CanonicalForm { n, leq, unit: perm[a.unit()], prod }
}

/// The canonical form and a relabeling that attains it.
pub fn canonical_labeling(a: &FinAlgebra) -> (CanonicalForm, Vec<usize>) {
    if a.is_chain_tagged() {
        let id: Vec<usize> = (0..a.n()).collect();
        return (form_under(a, &id), id);
    }
    let mut best: Option<(CanonicalForm, Vec<usize>)> = None;
    for_each_linear_extension(a, |perm| {
        let form = form_under(a, perm);
        if best.as_ref().is_none_or(|(b, _)| form < *b) {
            best = Some((form, perm.to_vec()));
        }
    });
    best.expect("every finite order has a linear extension")
}

pub fn canonical(a: &FinAlgebra) -> CanonicalForm {
    canonical_labeling(a).0
}

/// `a` relabeled into its canonical form, chain-tagged when totally ordered.
pub fn canonical_representative(a: &FinAlgebra) -> FinAlgebra {
    let (_, perm) = canonical_labeling(a);
    a.relabel(&perm).into_chain_tag()
}

/// A bijective homomorphism `a → b`, if one exists.
pub fn is_isomorphic<'a>(a: &'a FinAlgebra, b: &'a FinAlgebra) -> Option<Embedding<'a>> {
    if a.n() != b.n() {
        return None;
    }
    let (fa, pa) = canonical_labeling(a);
    let (fb, pb) = canonical_labeling(b);
    if fa != fb {
        return None;
    }
    let mut inv_b = vec![0; b.n()];
    for (x, &p) in pb.iter().enumerate() {
        inv_b[p] = x;
    }
    Some(Embedding::new(a, b, pa.iter().map(|&p| inv_b[p]).collect()))
}
