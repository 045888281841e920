//! Integer sequences and the counts of ideals normalized by `b`.

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use crate::rational::RationalVector;
use crate::rootsys::{CartanType, RootSystem};
use crate::{Error, Result};

/// `\binom{n}{k}`, zero outside `0 ≤ k ≤ n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

pub fn catalan(i: i64) -> BigInt {
    binom(2 * i, i) / BigInt::from(i + 1)
}

/// `M_s = Σ_r \binom{s}{2r} C_r`.
pub fn motzkin(s: i64) -> BigInt {
    (0..=s / 2).map(|r| binom(s, 2 * r) * catalan(r)).sum()
}

/// `R_n = Σ_j (−1)^{n−j} \binom{n}{j} C_j`.
pub fn riordan(n: i64) -> BigInt {
    (0..=n)
        .map(|j| {
            let t = binom(n, j) * catalan(j);
            if (n - j) % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// `ct_n = Σ_k n!/(k!k!(n−2k)!)`.
pub fn central_trinomial(n: i64) -> BigInt {
    (0..=n / 2).map(|k| binom(n, 2 * k) * binom(2 * k, k)).sum()
}

/// `nct_n = Σ_k n!/(k!(k+1)!(n−2k−1)!)`.
pub fn next_to_central_trinomial(n: i64) -> BigInt {
    (0..=n / 2).map(|k| binom(n, 2 * k + 1) * binom(2 * k + 1, k)).sum()
}

/// `dir_n = Σ_q \binom{q}{[q/2]} \binom{n−1}{q}` for `n ≥ 1`; `dir_0 = 0`.
pub fn dir(n: i64) -> BigInt {
    if n <= 0 {
        return BigInt::zero();
    }
    (0..n).map(|q| binom(q, q / 2) * binom(n - 1, q)).sum()
}

/// A Laurent polynomial truncated above degree `hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    lo: i64,
    hi: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn one(hi: i64) -> Self {
        LaurentPoly { lo: 0, hi, coeffs: vec![BigInt::one()] }
    }

    /// `x^{−c} + x^c + x^{2c} + …` up to degree `hi`.
    pub fn factor(c: i64, hi: i64) -> Self {
        let lo = -c;
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1).max(0) as usize];
        coeffs[0] = BigInt::one();
        let mut d = c;
        while d <= hi {
            coeffs[(d - lo) as usize] += 1;
            d += c;
        }
        LaurentPoly { lo, hi, coeffs }
    }

    pub fn coeff(&self, d: i64) -> BigInt {
        if d < self.lo || d > self.hi {
            return BigInt::zero();
        }
        self.coeffs.get((d - self.lo) as usize).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let hi = self.hi.min(other.hi);
        let lo = self.lo + other.lo;
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1).max(0) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let d = self.lo + i as i64 + other.lo + j as i64;
                if d > hi {
                    break;
                }
                coeffs[(d - lo) as usize] += a * b;
            }
        }
        LaurentPoly { lo, hi, coeffs }
    }
}

/// Which of the two counts: `#AD{b}` (`[x^1]`) or `#AD₀{b}` (`[x^{-1}]`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    All,
    StrictlyPositive,
}

impl Target {
    fn degree(self) -> i64 {
        match self {
            Target::All => 1,
            Target::StrictlyPositive => -1,
        }
    }
}

fn marks_with_c0(ct: CartanType) -> Vec<i64> {
    let mut m = vec![1];
    m.extend(ct.marks());
    m
}

/// `(1/f) [x^{±1}] ∏_{i=0}^p (x^{−c_i}/(1−x^{c_i}) − 1)`.
pub fn gf_count(ct: CartanType, target: Target) -> Result<BigInt> {
    gf_count_with_slack(ct, target, 0)
}

/// As [`gf_count`] with the truncation window widened by `slack`.
pub fn gf_count_with_slack(ct: CartanType, target: Target, slack: i64) -> Result<BigInt> {
    let marks = marks_with_c0(ct);
    let h: i64 = marks.iter().sum();
    let hi = 1 + h + slack;
    let prod = marks.iter().fold(LaurentPoly::one(hi), |acc, &c| acc.mul(&LaurentPoly::factor(c, hi)));
    let raw = prod.coeff(target.degree());
    let f = BigInt::from(ct.index_of_connection() as i64);
    let (q, r) = raw.div_rem(&f);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{ct}: coefficient {raw} not divisible by f = {f}")));
    }
    Ok(q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Simplex {
    /// `(x,α) ≥ −1` on `Π`, `(x,θ) ≤ 2`.
    Min,
    /// `(x,α) ≤ 1` on `Π`, `(x,θ) ≥ 0`.
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    Coweight,
    Coroot,
}

/// Points of `D_min` or `D_max` in a lattice, as coweight coordinates.
pub fn lattice_points(rs: &RootSystem, which: Simplex, off_walls: bool, lattice: Lattice) -> Vec<Vec<i64>> {
    let c = rs.marks().to_vec();
    let p = c.len();
    let mut out = Vec::new();
    let mut y = vec![0i64; p];
    // remaining marks bound the partial sums
    let tail: Vec<i64> = (0..=p).map(|i| c[i..].iter().sum()).collect();
    fn go(
        i: usize,
        sum: i64,
        c: &[i64],
        tail: &[i64],
        which: Simplex,
        y: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[i64], i64),
    ) {
        let p = c.len();
        if i == p {
            visit(y, sum);
            return;
        }
        let rest = tail[i + 1];
        let (lo, hi) = match which {
            // y_j ≥ −1 for later j, total ≤ 2
            Simplex::Min => (-1, (2 - sum + rest).div_euclid(c[i])),
            // y_j ≤ 1 for later j, total ≥ 0
            Simplex::Max => ((-sum - rest).div_euclid(c[i]) - 1, 1),
        };
        for v in lo..=hi {
            y[i] = v;
            go(i + 1, sum + c[i] * v, c, tail, which, y, visit);
        }
    }
    let mut visit = |y: &[i64], sum: i64| {
        let inside = match which {
            Simplex::Min => sum <= 2 && y.iter().all(|&v| v >= -1),
            Simplex::Max => sum >= 0 && y.iter().all(|&v| v <= 1),
        };
        if !inside {
            return;
        }
        if off_walls && (sum == 1 || y.contains(&0)) {
            return;
        }
        if lattice == Lattice::Coroot {
            let x = rs.from_coweight_coords(&RationalVector::from_ints(y));
            if !rs.in_coroot_lattice(&x) {
                return;
            }
        }
        out.push(y.to_vec());
    };
    go(0, 0, &c, &tail, which, &mut y, &mut visit);
    out
}

pub fn lattice_count(rs: &RootSystem, which: Simplex, off_walls: bool, lattice: Lattice) -> usize {
    lattice_points(rs, which, off_walls, lattice).len()
}

/// Converts coweight coordinates to a vector in simple-root coordinates.
pub fn point_from_coweights(rs: &RootSystem, y: &[i64]) -> RationalVector {
    rs.from_coweight_coords(&RationalVector::from_ints(y))
}

/// `#AD(so_{2n}){b}` (`All`) or `#AD₀(so_{2n}){b}` by the alternating sums.
pub fn count_so2n_b(n: i64, target: Target) -> Result<BigInt> {
    if n < 4 {
        return Err(Error::Argument(format!("so_2n formula needs n ≥ 4, got {n}")));
    }
    let m = n - 3;
    let total = (0..=m)
        .map(|i| {
            let bracket = match target {
                Target::StrictlyPositive => binom(2 * i, i - 3) + binom(2 * i + 3, i),
                Target::All => binom(2 * i + 1, i - 2) + binom(2 * i + 4, i + 1),
            };
            let t = binom(m, i) * bracket;
            if (m - i) % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum();
    Ok(total)
}

/// One instance of a numeric identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub n: i64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityCheck {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn ty(f: crate::rootsys::Family, n: i64) -> CartanType {
    CartanType::new(f, n as usize).expect("valid rank")
}

/// Evaluates the sequence identities for every `n ≤ n_max`.
pub fn verify_identities(n_max: i64) -> Result<Vec<IdentityCheck>> {
    use crate::rootsys::Family;
    if n_max < 2 {
        return Err(Error::Argument("n_max must be at least 2".into()));
    }
    let mut out = Vec::new();
    let mut push = |name, n, lhs, rhs| out.push(IdentityCheck { name, n, lhs, rhs });
    for n in 0..=n_max {
        push(
            "catalan-motzkin",
            n,
            catalan(n + 1),
            (0..=n).map(|r| binom(n, r) * motzkin(r)).sum(),
        );
        push("motzkin-riordan", n, motzkin(n), riordan(n) + riordan(n + 1));
        push("riordan-trinomial", n, riordan(n), central_trinomial(n) - next_to_central_trinomial(n));
        if n >= 1 {
            push(
                "dir-trinomial",
                n,
                dir(n),
                central_trinomial(n - 1) + next_to_central_trinomial(n - 1),
            );
            push(
                "binomial-dir",
                n,
                binom(2 * n - 1, n - 1),
                (0..n).map(|k| binom(n - 1, k) * dir(k + 1)).sum(),
            );
        }
        if n >= 2 {
            push("nct-motzkin", n, next_to_central_trinomial(n - 1), BigInt::from(n - 1) * motzkin(n - 2));
        }
        if n >= 1 {
            push("sl-b", n, gf_count(ty(Family::A, n), Target::All)?, motzkin(n));
            push("sl-b0", n, gf_count(ty(Family::A, n), Target::StrictlyPositive)?, riordan(n));
        }
        if n >= 2 {
            for fam in [Family::B, Family::C] {
                let t = ty(fam, n);
                push(
                    if fam == Family::B { "so-odd-difference" } else { "sp-difference" },
                    n,
                    gf_count(t, Target::All)? - gf_count(t, Target::StrictlyPositive)?,
                    central_trinomial(n - 1),
                );
            }
            push(
                "sp-b",
                n,
                gf_count(ty(Family::C, n), Target::All)?,
                dir(n),
            );
            push(
                "sp-b0",
                n,
                gf_count(ty(Family::C, n), Target::StrictlyPositive)?,
                BigInt::from(n - 1) * motzkin(n - 2),
            );
            push(
                "sp-so-odd",
                n,
                gf_count(ty(Family::B, n), Target::All)?,
                gf_count(ty(Family::C, n), Target::All)?,
            );
            push(
                "sp-so-odd-0",
                n,
                gf_count(ty(Family::B, n), Target::StrictlyPositive)?,
                gf_count(ty(Family::C, n), Target::StrictlyPositive)?,
            );
        }
        if n >= 4 {
            let d = gf_count(ty(Family::D, n), Target::All)?;
            let d0 = gf_count(ty(Family::D, n), Target::StrictlyPositive)?;
            push("so-odd-minus-even", n, gf_count(ty(Family::B, n), Target::All)? - &d, motzkin(n - 2));
            push("so-even-difference", n, &d - &d0, central_trinomial(n - 1));
            push("so-even-formula", n, count_so2n_b(n, Target::All)?, d);
            push("so-even-formula-0", n, count_so2n_b(n, Target::StrictlyPositive)?, d0);
        }
    }
    Ok(out)
}

/// Converts a small big integer for display or comparison.
pub fn to_u64(x: &BigInt) -> Option<u64> {
    if x.is_negative() {
        None
    } else {
        x.to_u64()
    }
}

/// Value `(x, θ)` in coweight coordinates, used by the wall filters.
pub fn theta_level(rs: &RootSystem, y: &[i64]) -> i64 {
    rs.marks().iter().zip(y).map(|(c, v)| c * v).sum::<i64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn sequences() {
        assert_eq!((0..5).map(catalan).collect::<Vec<_>>(), big(&[1, 1, 2, 5, 14]));
        assert_eq!((0..7).map(motzkin).collect::<Vec<_>>(), big(&[1, 1, 2, 4, 9, 21, 51]));
        assert_eq!((0..5).map(riordan).collect::<Vec<_>>(), big(&[1, 0, 1, 1, 3]));
        assert_eq!((0..6).map(dir).collect::<Vec<_>>(), big(&[0, 1, 2, 5, 13, 35]));
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(-1, 0), BigInt::zero());
    }

    #[test]
    fn gf_examples() {
        let c = |s: &str, t| gf_count(s.parse().unwrap(), t).unwrap();
        assert_eq!(c("A4", Target::All), BigInt::from(9));
        assert_eq!(c("F4", Target::All), BigInt::from(19));
        assert_eq!(c("F4", Target::StrictlyPositive), BigInt::from(11));
        assert_eq!(c("E6", Target::All), BigInt::from(111));
        assert_eq!(c("E6", Target::StrictlyPositive), BigInt::from(53));
        assert_eq!(c("G2", Target::All), BigInt::from(2));
        assert_eq!(c("D4", Target::All), BigInt::from(11));
        assert_eq!(c("D5", Target::All), BigInt::from(31));
    }

    #[test]
    fn window_slack_does_not_change_counts() {
        for s in ["A6", "B5", "C4", "D6", "E7", "E8", "F4", "G2"] {
            let ct: CartanType = s.parse().unwrap();
            for t in [Target::All, Target::StrictlyPositive] {
                assert_eq!(gf_count(ct, t).unwrap(), gf_count_with_slack(ct, t, 7).unwrap(), "{s}");
            }
        }
    }

    #[test]
    fn so2n_formulas() {
        assert_eq!(count_so2n_b(4, Target::All).unwrap(), BigInt::from(11));
        assert_eq!(count_so2n_b(5, Target::All).unwrap(), BigInt::from(31));
        assert_eq!(count_so2n_b(4, Target::StrictlyPositive).unwrap(), BigInt::from(4));
        assert!(count_so2n_b(3, Target::All).is_err());
    }

    #[test]
    fn lattice_examples() {
        let a2 = RootSystem::build("A2".parse().unwrap()).unwrap();
        assert_eq!(lattice_count(&a2, Simplex::Min, false, Lattice::Coroot), 5);
        let g2 = RootSystem::build("G2".parse().unwrap()).unwrap();
        assert_eq!(lattice_count(&g2, Simplex::Min, true, Lattice::Coroot), 2);
    }

    #[test]
    fn identities_hold() {
        let bad: Vec<_> = verify_identities(9).unwrap().into_iter().filter(|c| !c.pass()).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
