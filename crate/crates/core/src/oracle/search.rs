use crate::algebra::{validate, FinAlgebra, Order};

use super::ConstraintSet;

const UNSET: usize = usize::MAX;

struct Search<'a> {
    n: usize,
    order: &'a [Vec<bool>],
    join: Vec<usize>,
    unit: usize,
    cs: ConstraintSet,
    cells: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn le(&self, x: usize, y: usize) -> bool {
        self.order[x][y]
    }

    fn domain(&self, (x, y): (usize, usize)) -> Vec<usize> {
        if self.cs.conservative {
            vec![x.min(y), x.max(y)]
        } else {
            (0..self.n).collect()
        }
    }

    fn set(&self, t: &mut [usize], x: usize, y: usize, v: usize) {
        t[x * self.n + y] = v;
        if self.cs.commutative {
            t[y * self.n + x] = v;
        }
    }

    /// Monotonicity and join preservation along row `x` and column `y`, and
    /// associativity on every fully known triple.
    fn consistent(&self, t: &[usize], x: usize, y: usize) -> bool {
        let n = self.n;
        let get = |a: usize, b: usize| t[a * n + b];
        for (a, b) in [(x, y), (y, x)] {
            for p in 0..n {
                for q in 0..n {
                    let j = self.join[p * n + q];
                    // left argument fixed at a
                    let (u, v, w) = (get(a, p), get(a, q), get(a, j));
                    if u != UNSET && v != UNSET {
                        if self.le(p, q) && !self.le(u, v) {
                            return false;
                        }
                        if w != UNSET && w != self.join[u * n + v] {
                            return false;
                        }
                    }
                    // right argument fixed at b
                    let (u, v, w) = (get(p, b), get(q, b), get(j, b));
                    if u != UNSET && v != UNSET {
                        if self.le(p, q) && !self.le(u, v) {
                            return false;
                        }
                        if w != UNSET && w != self.join[u * n + v] {
                            return false;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = get(a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let bc = get(b, c);
                    if bc == UNSET {
                        continue;
                    }
                    let (l, r) = (get(ab, c), get(a, bc));
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&self, t: &mut Vec<usize>, depth: usize, out: &mut Vec<FinAlgebra>) {
        if depth == self.cells.len() {
            if let Some(model) = self.finish(t) {
                out.push(model);
            }
            return;
        }
        let (x, y) = self.cells[depth];
        for v in self.domain((x, y)) {
            self.set(t, x, y, v);
            if self.consistent(t, x, y) {
                self.run(t, depth + 1, out);
            }
        }
        self.set(t, x, y, UNSET);
    }

    fn finish(&self, t: &[usize]) -> Option<FinAlgebra> {
        let n = self.n;
        let order = if self.cs.chain { Order::Chain } else { Order::Matrix(self.order.to_vec()) };
        let a = FinAlgebra::from_fn(n, order, self.unit, |x, y| t[x * n + y]).ok()?;
        let a = a.with_residuals().ok()?;
        validate(&a).ok().then_some(a)
    }
}

fn join_table(order: &[Vec<bool>]) -> Option<Vec<usize>> {
    let n = order.len();
    let mut join = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let ub: Vec<usize> = (0..n).filter(|&z| order[x][z] && order[y][z]).collect();
            join.push(*ub.iter().find(|&&j| ub.iter().all(|&z| order[j][z]))?);
        }
    }
    Some(join)
}

/// Every residuated product on the given lattice with the given unit that
/// satisfies `cs`, in search order.
pub(crate) fn products(order: &[Vec<bool>], unit: usize, cs: &ConstraintSet, jobs: usize) -> Vec<FinAlgebra> {
    let n = order.len();
    let Some(join) = join_table(order) else { return Vec::new() };
    let bottom = (0..n).find(|&b| (0..n).all(|x| order[b][x])).expect("lattices are bounded");
    if n > 1 && unit == bottom {
        return Vec::new();
    }
    let mut t = vec![UNSET; n * n];
    let idempotent = cs.idempotent || cs.conservative;
    for x in 0..n {
        t[unit * n + x] = x;
        t[x * n + unit] = x;
        if x != unit {
            t[bottom * n + x] = bottom;
            t[x * n + bottom] = bottom;
        }
        if idempotent {
            t[x * n + x] = x;
        }
    }
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| t[x * n + y] == UNSET && (!cs.commutative || x <= y))
        .collect();
    let search = Search { n, order, join, unit, cs: *cs, cells };
    if !search.consistent(&t, unit, unit) {
        return Vec::new();
    }
    if jobs <= 1 || search.cells.is_empty() {
        let mut out = Vec::new();
        search.run(&mut t, 0, &mut out);
        return out;
    }
    // split on the first free cell
    let (x, y) = search.cells[0];
    let branches: Vec<usize> = search.domain((x, y));
    let mut results: Vec<Vec<FinAlgebra>> = vec![Vec::new(); branches.len()];
    std::thread::scope(|scope| {
        let search = &search;
        let chunk = branches.len().div_ceil(jobs);
        for (vals, slots) in branches.chunks(chunk).zip(results.chunks_mut(chunk)) {
            let mut local = t.clone();
            scope.spawn(move || {
                for (&v, slot) in vals.iter().zip(slots) {
                    search.set(&mut local, x, y, v);
                    if search.consistent(&local, x, y) {
                        search.run(&mut local, 1, slot);
                    }
                }
            });
        }
    });
    results.into_iter().flatten().collect()
}
