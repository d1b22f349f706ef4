//! Exact counts of idempotent residuated chains and Catalan algebras.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

/// `a + b√3` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootThreeInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl RootThreeInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        RootThreeInt { a: a.into(), b: b.into() }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// `a - b√3`.
    pub fn conjugate(&self) -> Self {
        RootThreeInt { a: self.a.clone(), b: -self.b.clone() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &RootThreeInt {
    type Output = RootThreeInt;
    fn add(self, o: &RootThreeInt) -> RootThreeInt {
        RootThreeInt { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &RootThreeInt {
    type Output = RootThreeInt;
    fn sub(self, o: &RootThreeInt) -> RootThreeInt {
        RootThreeInt { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Mul for &RootThreeInt {
    type Output = RootThreeInt;
    fn mul(self, o: &RootThreeInt) -> RootThreeInt {
        RootThreeInt {
            a: &self.a * &o.a + BigInt::from(3) * &self.b * &o.b,
            b: &self.a * &o.b + &o.a * &self.b,
        }
    }
}

impl Neg for &RootThreeInt {
    type Output = RootThreeInt;
    fn neg(self) -> RootThreeInt {
        RootThreeInt { a: -self.a.clone(), b: -self.b.clone() }
    }
}

fn need(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::SizeTooSmall(n, min))
    } else {
        Ok(())
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `a! / (b! c! d!)` when `b + c + d = a`, else 0.
pub fn multinomial(a: usize, b: usize, c: usize, d: usize) -> BigUint {
    if b + c + d != a {
        return BigUint::zero();
    }
    factorial(a) / (factorial(b) * factorial(c) * factorial(d))
}

/// Commutative idempotent residuated chains of size `n`: `2^(n-2)`.
pub fn count_cic(n: usize) -> Result<BigUint> {
    need(n, 2)?;
    Ok(BigUint::from(2u8).pow(n - 2))
}

/// Idempotent residuated chains of size `n`, summed over the numbers `s` and
/// `t` of comparable and incomparable non-commuting pairs.
pub fn count_ic_formula(n: usize) -> Result<BigUint> {
    need(n, 2)?;
    let h = n / 2 - 1;
    let mut total = BigUint::zero();
    for s in 0..=h {
        for t in 0..=(h - s) {
            let central = n - 2 * (1 + s + t);
            total += BigUint::from(2u8).pow(central) * multinomial(n - 2 - s - t, central, s, t);
        }
    }
    Ok(total)
}

/// `I(2) = 1`, `I(3) = 2`, `I(m+2) = 2 I(m) + 2 I(m+1)`.
pub fn count_ic_recurrence(n: usize) -> Result<BigUint> {
    need(n, 2)?;
    let (mut prev, mut cur) = (BigUint::one(), BigUint::from(2u8));
    if n == 2 {
        return Ok(prev);
    }
    for _ in 3..n {
        let next = (&prev + &cur) * 2u8;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `((1+√3)^m − (1−√3)^m) / (2√3)`, computed exactly: the `√3`-coefficient of
/// `(1+√3)^m`.
pub fn conjugate_power_quotient(m: u32) -> BigInt {
    let p = RootThreeInt::new(1, 1).pow(m);
    let diff = &p - &p.conjugate();
    debug_assert!(diff.a.is_zero());
    diff.b / 2
}

/// The closed form of the recurrence, `conjugate_power_quotient(n - 1)`.
pub fn count_ic_closed(n: usize) -> Result<BigUint> {
    need(n, 2)?;
    let m = u32::try_from(n - 1).map_err(|_| Error::TooLarge { n, max: u32::MAX as usize })?;
    Ok(conjugate_power_quotient(m).to_biguint().expect("positive"))
}

/// Commutative conservative residuated lattices of size `n`: the
/// `(n-1)`-th Catalan number.
pub fn catalan_count(n: usize) -> Result<BigUint> {
    need(n, 1)?;
    Ok(binomial(2 * (n - 1), n - 1) / BigUint::from(n))
}
