//! Exact feasibility of systems of strict and non-strict linear
//! constraints, by a dense two-phase simplex over big rationals with
//! Bland's rule.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Gt,
    Lt,
}

/// `normal · y (rel) bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub normal: Vec<Rational>,
    pub bound: Rational,
    pub rel: Relation,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearConstraintSystem {
    pub dim: usize,
    pub rows: Vec<Constraint>,
}

impl LinearConstraintSystem {
    pub fn new(dim: usize) -> Self {
        LinearConstraintSystem { dim, rows: Vec::new() }
    }

    pub fn push(&mut self, normal: Vec<Rational>, rel: Relation, bound: Rational) {
        assert_eq!(normal.len(), self.dim);
        self.rows.push(Constraint { normal, bound, rel });
    }

    pub fn extend(&mut self, other: &LinearConstraintSystem) {
        assert_eq!(self.dim, other.dim);
        self.rows.extend(other.rows.iter().cloned());
    }

    /// Whether `y` satisfies every row exactly.
    pub fn satisfied_by(&self, y: &[BigRational]) -> bool {
        self.rows.iter().all(|c| {
            let lhs: BigRational = c.normal.iter().zip(y).map(|(a, x)| big(a) * x).sum();
            let b = big(&c.bound);
            match c.rel {
                Relation::Eq => lhs == b,
                Relation::Gt => lhs > b,
                Relation::Lt => lhs < b,
            }
        })
    }

    /// A point satisfying every row, if one exists.
    ///
    /// Maximizes a slack `t ≤ 1` added to each strict row; the system is
    /// feasible iff the optimum is positive.
    pub fn feasible(&self) -> Option<Vec<BigRational>> {
        let n = self.dim;
        // columns: u+ (n), u- (n), t
        let cols = 2 * n + 1;
        let mut rows: Vec<(Vec<BigRational>, Cmp, BigRational)> = Vec::new();
        for c in &self.rows {
            let mut a: Vec<BigRational> = Vec::with_capacity(cols);
            a.extend(c.normal.iter().map(big));
            a.extend(c.normal.iter().map(|x| -big(x)));
            let (cmp, tcoef) = match c.rel {
                Relation::Eq => (Cmp::Eq, 0),
                Relation::Gt => (Cmp::Ge, -1),
                Relation::Lt => (Cmp::Le, 1),
            };
            a.push(BigRational::from_integer(BigInt::from(tcoef)));
            rows.push((a, cmp, big(&c.bound)));
        }
        let mut cap = vec![BigRational::zero(); cols];
        cap[2 * n] = BigRational::one();
        rows.push((cap, Cmp::Le, BigRational::one()));
        let mut obj = vec![BigRational::zero(); cols];
        obj[2 * n] = BigRational::one();
        let (value, x) = maximize(&obj, &rows)?;
        if !value.is_positive() {
            return None;
        }
        let y: Vec<BigRational> = (0..n).map(|i| &x[i] - &x[n + i]).collect();
        debug_assert!(self.satisfied_by(&y));
        Some(y)
    }
}

pub fn big(r: &Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cmp {
    Le,
    Ge,
    Eq,
}

/// Maximizes `obj · x` over `x ≥ 0` subject to `rows`. `None` when
/// infeasible; unbounded problems are not expected here and also give
/// `None`.
fn maximize(obj: &[BigRational], rows: &[(Vec<BigRational>, Cmp, BigRational)]) -> Option<(BigRational, Vec<BigRational>)> {
    let m = rows.len();
    let n = obj.len();
    let n_slack = rows.iter().filter(|r| r.1 != Cmp::Eq).count();
    let art0 = n + n_slack;
    let width = art0 + m;
    let zero = BigRational::zero();
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut slack = n;
    for (i, (a, cmp, b)) in rows.iter().enumerate() {
        let mut row = vec![zero.clone(); width];
        row[..n].clone_from_slice(a);
        match cmp {
            Cmp::Le => {
                row[slack] = BigRational::one();
                slack += 1;
            }
            Cmp::Ge => {
                row[slack] = -BigRational::one();
                slack += 1;
            }
            Cmp::Eq => {}
        }
        let mut b = b.clone();
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
            b = -b;
        }
        row[art0 + i] = BigRational::one();
        t.push(row);
        rhs.push(b);
        basis.push(art0 + i);
    }

    let mut phase1 = vec![zero.clone(); width];
    for c in phase1.iter_mut().skip(art0) {
        *c = -BigRational::one();
    }
    run_simplex(&mut t, &mut rhs, &mut basis, &phase1, width)?;
    let infeasibility: BigRational = basis
        .iter()
        .zip(&rhs)
        .filter(|(b, _)| **b >= art0)
        .map(|(_, v)| v.clone())
        .sum();
    if infeasibility.is_positive() {
        return None;
    }
    // drive zero-valued artificials out of the basis
    let mut r = 0;
    while r < t.len() {
        if basis[r] >= art0 {
            if let Some(j) = (0..art0).find(|&j| !t[r][j].is_zero()) {
                pivot(&mut t, &mut rhs, &mut basis, r, j);
            } else {
                t.remove(r);
                rhs.remove(r);
                basis.remove(r);
                continue;
            }
        }
        r += 1;
    }
    let mut phase2 = vec![zero.clone(); art0];
    phase2[..n].clone_from_slice(obj);
    run_simplex(&mut t, &mut rhs, &mut basis, &phase2, art0)?;
    let mut x = vec![zero; n];
    for (b, v) in basis.iter().zip(&rhs) {
        if *b < n {
            x[*b] = v.clone();
        }
    }
    let value = obj.iter().zip(&x).map(|(c, v)| c * v).sum();
    Some((value, x))
}

/// Bland's rule; columns at or beyond `allowed` never enter.
fn run_simplex(
    t: &mut [Vec<BigRational>],
    rhs: &mut [BigRational],
    basis: &mut [usize],
    cost: &[BigRational],
    allowed: usize,
) -> Option<()> {
    loop {
        let reduced = |j: usize| -> BigRational {
            let mut r = cost.get(j).cloned().unwrap_or_else(BigRational::zero);
            for (i, b) in basis.iter().enumerate() {
                if let Some(cb) = cost.get(*b) {
                    if !cb.is_zero() && !t[i][j].is_zero() {
                        r -= cb * &t[i][j];
                    }
                }
            }
            r
        };
        let Some(enter) = (0..allowed).find(|&j| !basis.contains(&j) && reduced(j).is_positive()) else {
            return Some(());
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..t.len() {
            if t[i][enter].is_positive() {
                let ratio = &rhs[i] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (row, _) = leave?;
        pivot(t, rhs, basis, row, enter);
    }
}

fn pivot(t: &mut [Vec<BigRational>], rhs: &mut [BigRational], basis: &mut [usize], row: usize, col: usize) {
    let p = t[row][col].clone();
    for x in t[row].iter_mut() {
        *x /= &p;
    }
    rhs[row] /= &p;
    let prow = t[row].clone();
    let prhs = rhs[row].clone();
    for i in 0..t.len() {
        if i != row && !t[i][col].is_zero() {
            let f = t[i][col].clone();
            for (x, y) in t[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            rhs[i] -= &f * &prhs;
        }
    }
    basis[row] = col;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn open_interval() {
        let mut s = LinearConstraintSystem::new(1);
        s.push(vec![int(1)], Relation::Gt, int(0));
        s.push(vec![int(1)], Relation::Lt, int(1));
        let w = s.feasible().unwrap();
        assert!(s.satisfied_by(&w));
    }

    #[test]
    fn empty_interval() {
        let mut s = LinearConstraintSystem::new(1);
        s.push(vec![int(1)], Relation::Gt, int(1));
        s.push(vec![int(1)], Relation::Lt, int(1));
        assert!(s.feasible().is_none());
    }

    #[test]
    fn equality_and_negative_bounds() {
        let mut s = LinearConstraintSystem::new(2);
        s.push(vec![int(1), int(1)], Relation::Eq, int(-3));
        s.push(vec![int(1), int(0)], Relation::Gt, int(-1));
        let w = s.feasible().unwrap();
        assert!(s.satisfied_by(&w));
        s.push(vec![int(0), int(1)], Relation::Gt, int(-1));
        assert!(s.feasible().is_none());
    }

    #[test]
    fn unbounded_region_is_feasible() {
        let mut s = LinearConstraintSystem::new(2);
        s.push(vec![int(1), int(0)], Relation::Gt, int(5));
        s.push(vec![int(1), int(1)], Relation::Gt, int(10));
        assert!(s.feasible().is_some());
    }

    #[test]
    fn degenerate_duplicate_rows() {
        let mut s = LinearConstraintSystem::new(2);
        for _ in 0..3 {
            s.push(vec![int(1), int(-1)], Relation::Eq, int(0));
            s.push(vec![int(1), int(1)], Relation::Lt, int(2));
        }
        s.push(vec![int(1), int(0)], Relation::Gt, int(0));
        let w = s.feasible().unwrap();
        assert!(s.satisfied_by(&w));
    }
}
