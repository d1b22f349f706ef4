use crate::algebra::{check_homomorphism, properties, skeleton, Embedding, FinAlgebra};
use crate::constructions::{sugihara_from_involution, tensor, SkeletonDecomposition};
use crate::error::{Error, Result};

/// Two embeddings out of a common algebra: `i1: A → B` and `i2: A → C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    pub a: FinAlgebra,
    pub b: FinAlgebra,
    pub c: FinAlgebra,
    pub i1: Vec<usize>,
    pub i2: Vec<usize>,
}

/// `D` with embeddings `j1: B → D` and `j2: C → D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Amalgam {
    pub d: FinAlgebra,
    pub j1: Vec<usize>,
    pub j2: Vec<usize>,
}

impl Span {
    pub fn new(a: FinAlgebra, b: FinAlgebra, c: FinAlgebra, i1: Vec<usize>, i2: Vec<usize>) -> Self {
        Span { a, b, c, i1, i2 }
    }

    pub fn i1(&self) -> Embedding<'_> {
        Embedding::new(&self.a, &self.b, self.i1.clone())
    }

    pub fn i2(&self) -> Embedding<'_> {
        Embedding::new(&self.a, &self.c, self.i2.clone())
    }

    fn check(&self) -> Result<()> {
        for (name, e) in [("i1", self.i1()), ("i2", self.i2())] {
            let report = check_homomorphism(&e)?;
            if !report.ok() {
                return Err(Error::IncompatibleSpan(format!("{name} is not an embedding: {report}")));
            }
        }
        Ok(())
    }
}

impl Amalgam {
    pub fn j1<'a>(&'a self, s: &'a Span) -> Embedding<'a> {
        Embedding::new(&s.b, &self.d, self.j1.clone())
    }

    pub fn j2<'a>(&'a self, s: &'a Span) -> Embedding<'a> {
        Embedding::new(&s.c, &self.d, self.j2.clone())
    }

    /// `j1 ∘ i1 = j2 ∘ i2`.
    pub fn commutes(&self, s: &Span) -> bool {
        s.i1.iter().zip(&s.i2).all(|(&x, &y)| self.j1[x] == self.j2[y])
    }
}

/// Merges two chains of lengths `b_len` and `c_len` that share the positions in
/// `shared` (pairs `(b_pos, c_pos)`, increasing in both coordinates). In each
/// gap between shared points the `B`-only elements come first, then the
/// `C`-only ones. Returns the positions of both chains in the merge and its
/// length.
pub fn merge_chains(
    b_len: usize,
    c_len: usize,
    shared: &[(usize, usize)],
) -> Result<(Vec<usize>, Vec<usize>, usize)> {
    let mut bm = vec![usize::MAX; b_len];
    let mut cm = vec![usize::MAX; c_len];
    let (mut bi, mut ci, mut next) = (0, 0, 0);
    let stops = shared.iter().map(|&(b, c)| (b, c, true)).chain([(b_len, c_len, false)]);
    for (pb, pc, is_shared) in stops {
        if pb < bi || pc < ci || pb > b_len || pc > c_len {
            return Err(Error::IncompatibleSpan("shared points are not monotone".into()));
        }
        for slot in &mut bm[bi..pb] {
            *slot = next;
            next += 1;
        }
        for slot in &mut cm[ci..pc] {
            *slot = next;
            next += 1;
        }
        if is_shared {
            if pb == b_len || pc == c_len {
                return Err(Error::IncompatibleSpan("shared point out of range".into()));
            }
            bm[pb] = next;
            cm[pc] = next;
            next += 1;
        }
        (bi, ci) = (pb + 1, pc + 1);
    }
    Ok((bm, cm, next))
}

fn require_chain(a: &FinAlgebra, odd: bool) -> Result<FinAlgebra> {
    let a = a.normalize_labels();
    let f = properties(&a);
    let ok = a.is_chain_tagged() && f.commutative && f.idempotent && (!odd || f.odd_sugihara);
    if !ok {
        let class = if odd { "odd Sugihara chains" } else { "commutative idempotent chains" };
        return Err(Error::WrongClass(format!("amalgamation expects {class}")));
    }
    Ok(a)
}

fn check_shapes(s: &Span) -> Result<()> {
    for (name, map, target) in [("i1", &s.i1, &s.b), ("i2", &s.i2, &s.c)] {
        if map.len() != s.a.n() {
            return Err(Error::DimensionMismatch { table: name, expected: s.a.n(), found: map.len() });
        }
        if let Some(&x) = map.iter().find(|&&x| x >= target.n()) {
            return Err(Error::IndexOutOfRange { table: name, index: x, n: target.n() });
        }
    }
    Ok(())
}

/// Amalgam of odd Sugihara chains: the negative cones are merged, and the
/// positive cone is their mirror image.
pub fn amalgamate_osm(s: &Span) -> Result<Amalgam> {
    check_shapes(s)?;
    for x in [&s.a, &s.b, &s.c] {
        if *x != require_chain(x, true)? {
            return Err(Error::WrongClass("odd Sugihara chains must be index ordered".into()));
        }
    }
    s.check()?;
    let (ub, uc) = (s.b.unit(), s.c.unit());
    let shared: Vec<(usize, usize)> = (0..s.a.unit()).map(|x| (s.i1[x], s.i2[x])).collect();
    let (bm, cm, k) = merge_chains(ub, uc, &shared)?;
    let d = sugihara_from_involution(2 * k + 1)?;
    let place = |x: usize, m: &[usize], n: usize, u: usize| {
        if x < u {
            m[x]
        } else if x == u {
            k
        } else {
            2 * k - m[n - 1 - x]
        }
    };
    let j1 = (0..s.b.n()).map(|x| place(x, &bm, s.b.n(), ub)).collect();
    let j2 = (0..s.c.n()).map(|x| place(x, &cm, s.c.n(), uc)).collect();
    Ok(Amalgam { d, j1, j2 })
}

/// Amalgam of commutative idempotent chains: skeletons are amalgamated as odd
/// Sugihara chains, fibers over shared skeleton points are merged as chains
/// with a common top, and the result is glued back together.
pub fn amalgamate_cic(s: &Span) -> Result<Amalgam> {
    check_shapes(s)?;
    for x in [&s.a, &s.b, &s.c] {
        if *x != require_chain(x, false)? {
            return Err(Error::WrongClass("chains must be index ordered".into()));
        }
    }
    s.check()?;
    let (ska, skb, skc) = (skeleton(&s.a)?, skeleton(&s.b)?, skeleton(&s.c)?);
    let sk_map = |i: &[usize], target: &crate::algebra::Skeleton| -> Vec<usize> {
        ska.elements.iter().map(|&e| target.fiber_of[i[e]]).collect()
    };
    let sk_span = Span::new(
        ska.algebra.clone(),
        skb.algebra.clone(),
        skc.algebra.clone(),
        sk_map(&s.i1, &skb),
        sk_map(&s.i2, &skc),
    );
    let sk_amalgam = amalgamate_osm(&sk_span)?;
    let nd = sk_amalgam.d.n();
    // for every D-skeleton point: the B and C skeleton points over it
    let mut from_b = vec![None; nd];
    let mut from_c = vec![None; nd];
    for (x, &t) in sk_amalgam.j1.iter().enumerate() {
        from_b[t] = Some(x);
    }
    for (x, &t) in sk_amalgam.j2.iter().enumerate() {
        from_c[t] = Some(x);
    }
    let mut sizes = vec![0; nd];
    // position within the D-fiber of each B and C element
    let mut pos_b = vec![0; s.b.n()];
    let mut pos_c = vec![0; s.c.n()];
    for t in 0..nd {
        let fb: &[usize] = from_b[t].map_or(&[], |x| &skb.fibers[x]);
        let fc: &[usize] = from_c[t].map_or(&[], |x| &skc.fibers[x]);
        let shared: Vec<(usize, usize)> = match (from_b[t], from_c[t]) {
            (Some(_), Some(_)) => {
                let fa = ska
                    .fibers
                    .iter()
                    .find(|f| f.last().is_some_and(|&top| fb.last() == Some(&s.i1[top])))
                    .ok_or_else(|| Error::IncompatibleSpan("shared skeleton point outside A".into()))?;
                fa.iter()
                    .map(|&x| {
                        let pb = fb.iter().position(|&y| y == s.i1[x]);
                        let pc = fc.iter().position(|&y| y == s.i2[x]);
                        pb.zip(pc).ok_or_else(|| {
                            Error::IncompatibleSpan("embedding moves an element across fibers".into())
                        })
                    })
                    .collect::<Result<_>>()?
            }
            _ => Vec::new(),
        };
        let (bm, cm, len) = merge_chains(fb.len(), fc.len(), &shared)?;
        for (i, &x) in fb.iter().enumerate() {
            pos_b[x] = bm[i];
        }
        for (i, &x) in fc.iter().enumerate() {
            pos_c[x] = cm[i];
        }
        sizes[t] = len;
    }
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &k| {
            let start = *acc;
            *acc += k;
            Some(start)
        })
        .collect();
    let d = tensor(&SkeletonDecomposition::new(sk_amalgam.d.clone(), sizes))?;
    let j1 = (0..s.b.n()).map(|x| offsets[sk_amalgam.j1[skb.fiber_of[x]]] + pos_b[x]).collect();
    let j2 = (0..s.c.n()).map(|x| offsets[sk_amalgam.j2[skc.fiber_of[x]]] + pos_c[x]).collect();
    Ok(Amalgam { d, j1, j2 })
}
