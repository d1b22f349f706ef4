//! Idempotent residuated chains encoded by the levels of their monoidal
//! preorder.
//!
//! A [`LacedCode`] lists the `⊑`-levels strictly between `⊥` and `1`, from the
//! `⊑`-smallest up. Each level is a single negative element (`n`), a single
//! positive element (`p`), or a non-commuting pair made of one negative and one
//! positive element that are either `⊑`-equivalent (`C`) or `⊑`-incomparable
//! (`I`). The code determines the algebra up to isomorphism, and [`compile`]
//! picks the labeling in which index order is lattice order.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::algebra::{monoidal_preorder, properties, CheckReport, FinAlgebra, PreorderRel};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Neg,
    Pos,
    CPair,
    IPair,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::Neg, Letter::Pos, Letter::CPair, Letter::IPair];
    pub const CENTRAL: [Letter; 2] = [Letter::Neg, Letter::Pos];

    pub fn weight(self) -> usize {
        match self {
            Letter::Neg | Letter::Pos => 1,
            Letter::CPair | Letter::IPair => 2,
        }
    }

    pub fn is_pair(self) -> bool {
        self.weight() == 2
    }

    pub fn symbol(self) -> char {
        match self {
            Letter::Neg => 'n',
            Letter::Pos => 'p',
            Letter::CPair => 'C',
            Letter::IPair => 'I',
        }
    }

    pub fn from_symbol(c: char) -> Option<Letter> {
        Some(match c {
            'n' => Letter::Neg,
            'p' => Letter::Pos,
            'C' => Letter::CPair,
            'I' => Letter::IPair,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LacedCode {
    pub levels: Vec<Letter>,
}

impl LacedCode {
    pub fn new(levels: Vec<Letter>) -> Self {
        LacedCode { levels }
    }

    /// Carrier size of the compiled algebra.
    pub fn size(&self) -> usize {
        2 + self.levels.iter().map(|l| l.weight()).sum::<usize>()
    }

    pub fn is_commutative(&self) -> bool {
        !self.levels.iter().any(|l| l.is_pair())
    }

    /// `(s, t)`: the number of comparable and incomparable pairs.
    pub fn pair_counts(&self) -> (usize, usize) {
        let count = |x| self.levels.iter().filter(|&&l| l == x).count();
        (count(Letter::CPair), count(Letter::IPair))
    }
}

impl fmt::Display for LacedCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.levels.iter().try_for_each(|l| write!(f, "{}", l.symbol()))
    }
}

impl FromStr for LacedCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| {
                Letter::from_symbol(c).ok_or_else(|| Error::Parse {
                    what: "laced code",
                    detail: format!("unexpected letter {c:?} (use n, p, C, I)"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(LacedCode::new)
    }
}

impl Serialize for LacedCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Neg,
    Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompiledChain {
    pub algebra: FinAlgebra,
    pub code: LacedCode,
    /// `⊑`-level of each index: 0 for `⊥`, `code.levels.len() + 1` for `1`.
    pub level_of: Vec<usize>,
    pub sign_of: Vec<Sign>,
}

pub fn compile(code: &LacedCode) -> CompiledChain {
    let k = code.levels.len();
    // lattice order: ⊥, negatives by ascending level, 1, positives by descending level
    let mut level_of = vec![0];
    let mut sign_of = vec![Sign::Neg];
    for (i, l) in code.levels.iter().enumerate() {
        if *l != Letter::Pos {
            level_of.push(i + 1);
            sign_of.push(Sign::Neg);
        }
    }
    let unit = level_of.len();
    level_of.push(k + 1);
    sign_of.push(Sign::Pos);
    for (i, l) in code.levels.iter().enumerate().rev() {
        if *l != Letter::Neg {
            level_of.push(i + 1);
            sign_of.push(Sign::Pos);
        }
    }
    let letter_at = |lvl: usize| code.levels[lvl - 1];
    let mul = |x: usize, y: usize| {
        let (lx, ly) = (level_of[x], level_of[y]);
        if lx < ly || x == y {
            x
        } else if lx > ly {
            y
        } else if letter_at(lx) == Letter::CPair {
            x
        } else {
            y
        }
    };
    let algebra = FinAlgebra::chain_from_fn(level_of.len(), unit, mul)
        .and_then(FinAlgebra::with_residuals)
        .expect("well-formed codes compile to residuated chains");
    CompiledChain { algebra, code: code.clone(), level_of, sign_of }
}

/// Reads the code of an idempotent residuated chain off its monoidal preorder.
pub fn recover_code(a: &FinAlgebra) -> Result<LacedCode> {
    let flags = properties(a);
    if !(flags.totally_ordered && flags.idempotent) {
        return Err(Error::WrongClass("code recovery needs an idempotent chain".into()));
    }
    let p = monoidal_preorder(a)?;
    let n = a.n();
    let key = |x: usize| {
        let s = p.sharp(x);
        (0..n).filter(|&y| y != x && y != s && p.le(y, x)).count()
    };
    let mut keys: Vec<(usize, usize)> = (0..n).map(|x| (key(x), x)).collect();
    keys.sort();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, &(k, x)) in keys.iter().enumerate() {
        if i > 0 && keys[i - 1].0 == k {
            groups.last_mut().expect("nonempty").push(x);
        } else {
            groups.push(vec![x]);
        }
    }
    let bad = |why: &str| Error::WrongClass(format!("not a laced compatible chain: {why}"));
    let bottom = a.bottom().ok_or_else(|| bad("no bottom"))?;
    if n < 2 || groups.first() != Some(&vec![bottom]) || groups.last() != Some(&vec![a.unit()]) {
        return Err(bad("bottom and unit must form the extreme levels"));
    }
    let u = a.unit();
    let mut levels = Vec::with_capacity(groups.len() - 2);
    for g in &groups[1..groups.len() - 1] {
        let letter = match g.as_slice() {
            [x] if a.lt(*x, u) => Letter::Neg,
            [_] => Letter::Pos,
            [x, y] if p.equiv(*x, *y) => Letter::CPair,
            [x, y] if p.incomparable(*x, *y) => Letter::IPair,
            _ => return Err(bad("level with more than two elements")),
        };
        levels.push(letter);
    }
    let code = LacedCode::new(levels);
    let rank: Vec<usize> = (0..n).map(|x| (0..n).filter(|&y| a.lt(y, x)).count()).collect();
    let canonical = a.relabel(&rank).into_chain_tag();
    if compile(&code).algebra.prod_table() != canonical.prod_table() {
        return Err(bad("product is not determined by the recovered levels"));
    }
    Ok(code)
}

/// Every code of carrier size `n` (over `{n, p}` only when
/// `commutative_only`), in lexicographic order with `n < p < C < I`.
pub fn enumerate_codes(n: usize, commutative_only: bool) -> Result<CodeIter> {
    if n < 2 {
        return Err(Error::SizeTooSmall(n, 2));
    }
    let alphabet: &'static [Letter] = if commutative_only { &Letter::CENTRAL } else { &Letter::ALL };
    Ok(CodeIter { alphabet, target: n - 2, stack: vec![(Vec::new(), 0)] })
}

/// Depth-first walk over code prefixes.
pub struct CodeIter {
    alphabet: &'static [Letter],
    target: usize,
    stack: Vec<(Vec<Letter>, usize)>,
}

impl Iterator for CodeIter {
    type Item = LacedCode;

    fn next(&mut self) -> Option<LacedCode> {
        while let Some((word, weight)) = self.stack.pop() {
            for &l in self.alphabet.iter().rev() {
                if weight + l.weight() <= self.target {
                    let mut w = word.clone();
                    w.push(l);
                    self.stack.push((w, weight + l.weight()));
                }
            }
            if weight == self.target {
                return Some(LacedCode::new(word));
            }
        }
        None
    }
}

/// Compiles `code` and re-checks every laced and compatibility condition on the
/// resulting monoidal preorder.
pub fn validate_code_semantics(code: &LacedCode) -> CheckReport {
    let c = compile(code);
    let p = monoidal_preorder(&c.algebra).expect("compiled chains are idempotent");
    check_laced_compatible(&c.algebra, &p)
}

/// Checks that `p` is a laced preorder compatible with the lattice order of
/// `a`, quantifier by quantifier. Witnesses for the interchange condition are
/// `(a, a♯, x)`.
pub fn check_laced_compatible(a: &FinAlgebra, p: &PreorderRel) -> CheckReport {
    let mut r = CheckReport::new();
    let n = p.n();
    for x in 0..n {
        if !p.le(x, x) {
            r.record("preorder.reflexive", &[x]);
        }
        for y in 0..n {
            for z in 0..n {
                if p.le(x, y) && p.le(y, z) && !p.le(x, z) {
                    r.record("preorder.transitive", &[x, y, z]);
                }
            }
        }
    }
    let tops: Vec<usize> = (0..n).filter(|&g| (0..n).all(|x| p.le(x, g))).collect();
    let Some(&u) = tops.first() else {
        r.record("laced.greatest", &[]);
        return r;
    };
    if tops.len() > 1 {
        r.record("laced.greatest", &tops);
    }
    for x in 0..n {
        let partners = p.partners(x);
        if partners.len() > 1 {
            let mut w = vec![x];
            w.extend(&partners);
            r.record("laced.partner", &w);
        }
        let s = p.sharp(x);
        for y in (0..n).filter(|&y| y != x && y != s) {
            if p.le(x, y) != p.le(s, y) || p.le(y, x) != p.le(y, s) {
                r.record("laced.interchange", &[x, s, y]);
            }
        }
        if s != x && a.leq(u, x) != a.leq(s, u) {
            r.record("compatible.pair_sign", &[x, s]);
        }
    }
    if let Some(b) = a.bottom() {
        if let Some(x) = (0..n).find(|&x| !p.le(b, x)) {
            r.record("compatible.bottom", &[b, x]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            if a.leq(u, x) && a.leq(u, y) && a.leq(x, y) != p.le(y, x) {
                r.record("compatible.positive", &[x, y]);
            }
            if a.leq(x, u) && a.leq(y, u) && a.leq(x, y) != p.le(x, y) {
                r.record("compatible.negative", &[x, y]);
            }
        }
    }
    r
}
