use crate::algebra::{monoidal_preorder, properties, FinAlgebra, Order};
use crate::error::{Error, Result};

fn require_class(a: &FinAlgebra, what: &str) -> Result<()> {
    let f = properties(a);
    if !(f.commutative && f.conservative && a.is_lattice()) {
        return Err(Error::WrongClass(format!("{what} must be commutative and conservative")));
    }
    Ok(())
}

/// Position of each element in the (total) monoidal order.
fn monoidal_rank(a: &FinAlgebra) -> Result<Vec<usize>> {
    let p = monoidal_preorder(a)?;
    Ok((0..a.n()).map(|x| (0..a.n()).filter(|&y| y != x && p.le(y, x)).count()).collect())
}

/// `A ⊞ B`: `B` is placed above `⊥_A` and below `↑1_B`-joins with `A`, and in
/// the monoidal order `B` sits between `⊥_A` and the rest of `A`.
pub fn catalan_sum(a: &FinAlgebra, b: &FinAlgebra) -> Result<FinAlgebra> {
    require_class(a, "left summand")?;
    require_class(b, "right summand")?;
    let (na, nb) = (a.n(), b.n());
    let n = na + nb;
    let bot_a = a.bottom().expect("finite lattices are bounded");
    let (ra, rb) = (monoidal_rank(a)?, monoidal_rank(b)?);
    // A occupies 0..na and B occupies na..n before relabeling
    let leq = |x: usize, y: usize| match (x < na, y < na) {
        (true, true) => a.leq(x, y),
        (false, false) => b.leq(x - na, y - na),
        (true, false) => x == bot_a || b.leq(b.unit(), y - na),
        (false, true) => false,
    };
    let rank = |x: usize| {
        if x == bot_a {
            0
        } else if x >= na {
            1 + rb[x - na]
        } else {
            1 + nb + ra[x]
        }
    };
    let order: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| leq(x, y)).collect()).collect();
    let unit = if na > 1 { a.unit() } else { na + b.unit() };
    let mul = |x: usize, y: usize| if rank(x) <= rank(y) { x } else { y };
    FinAlgebra::from_fn(n, Order::Matrix(order), unit, mul)?.normalize_labels().with_residuals()
}

/// Splits `C` at the `⊑`-atom `b`: `B = ↑b` and `A` is the rest.
pub fn catalan_decompose(c: &FinAlgebra) -> Result<(FinAlgebra, FinAlgebra)> {
    require_class(c, "input")?;
    let n = c.n();
    if n < 2 {
        return Err(Error::SizeTooSmall(n, 2));
    }
    let rank = monoidal_rank(c)?;
    let atom = (0..n).find(|&x| rank[x] == 1).ok_or(Error::NoAtom)?;
    let (b_part, a_part): (Vec<usize>, Vec<usize>) = (0..n).partition(|&x| c.leq(atom, x));
    let a_unit = if a_part.len() > 1 { c.unit() } else { a_part[0] };
    if !a_part.contains(&a_unit) {
        return Err(Error::WrongClass("unit lies above the monoidal atom".into()));
    }
    let b_unit = *b_part.iter().max_by_key(|&&x| rank[x]).expect("atom is in B");
    let plain = c.clone().without_residuals();
    let part = |elems: &[usize], unit| -> Result<FinAlgebra> {
        plain.substructure(elems, unit)?.normalize_labels().with_residuals()
    };
    Ok((part(&a_part, a_unit)?, part(&b_part, b_unit)?))
}

/// All sums of size `n` built recursively from smaller ones; one algebra per
/// isomorphism class.
pub fn enumerate_catalan(n: usize) -> Result<Vec<FinAlgebra>> {
    if n == 0 {
        return Err(Error::SizeTooSmall(0, 1));
    }
    let mut by_size: Vec<Vec<FinAlgebra>> = vec![Vec::new(), vec![FinAlgebra::trivial().with_residuals()?]];
    for m in 2..=n {
        let mut level = Vec::new();
        for k in 1..m {
            for a in &by_size[k] {
                for b in &by_size[m - k] {
                    level.push(catalan_sum(a, b)?);
                }
            }
        }
        by_size.push(level);
    }
    Ok(by_size.swap_remove(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate;
    use crate::chains::compile;

    fn two() -> FinAlgebra {
        FinAlgebra::chain_from_fn(2, 1, usize::min).unwrap().with_residuals().unwrap()
    }

    #[test]
    fn trivial_sum_is_boolean() {
        let t = FinAlgebra::trivial().with_residuals().unwrap();
        assert_eq!(catalan_sum(&t, &t).unwrap(), two());
    }

    #[test]
    fn diamond() {
        let d = catalan_sum(&two(), &two()).unwrap();
        assert!(validate(&d).ok());
        assert!(!d.is_totally_ordered());
        // 0 = ⊥_A, 1 = 1_A, 2 = ⊥_B, 3 = 1_B after normalizing
        assert_eq!(d.unit(), 1);
        assert!(d.leq(0, 1) && d.leq(0, 2) && d.leq(1, 3) && d.leq(2, 3));
        assert!(!d.leq(1, 2) && !d.leq(2, 1));
        let (a, b) = catalan_decompose(&d).unwrap();
        assert_eq!(a, two());
        assert_eq!(b, two());
    }

    #[test]
    fn three_element_sums() {
        let t = FinAlgebra::trivial().with_residuals().unwrap();
        let neg = compile(&"n".parse().unwrap()).algebra;
        let pos = compile(&"p".parse().unwrap()).algebra;
        assert_eq!(catalan_sum(&t, &two()).unwrap(), neg);
        assert_eq!(catalan_sum(&two(), &t).unwrap(), pos);
        assert_eq!(catalan_decompose(&two()).unwrap(), (t.clone(), t));
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_catalan(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn rejects_noncommutative() {
        assert!(matches!(catalan_sum(&crate::constructions::c4(), &two()), Err(Error::WrongClass(_))));
    }
}
