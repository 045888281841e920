//! Ideals of `sp_{2n}` through their symmetrizations in `sl_{2n}`.
//!
//! Positive roots of `C_n` are the pairs `(i, j)` with `i < j` and
//! `i + j ≤ 2n + 1`; the root is long iff `i + j = 2n + 1`. Conjugation
//! `(i, j) ↦ (2n+1−j, 2n+1−i)` is the reflection in the antidiagonal.

use std::fmt;

use num::BigInt;

use super::type_a::FerrersIdeal;
use super::{dominated, label_from_e};
use crate::counting::binom;
use crate::ideals::UpperIdeal;
use crate::normalizers::ParabolicLabel;
use crate::rootsys::{Family, Root, RootSystem};
use crate::{Error, Result};

/// Coefficients of the root `(i, j)` of `C_n`.
pub fn pair_to_root(n: usize, i: usize, j: usize) -> Root {
    let mut c = vec![0i64; n];
    if j <= n + 1 {
        for l in i..j {
            c[l - 1] = 1;
        }
    } else {
        for l in i..=(2 * n - j) {
            c[l - 1] = 1;
        }
        for l in (2 * n + 1 - j)..n {
            c[l - 1] = 2;
        }
        c[n - 1] = 1;
    }
    Root(c)
}

pub fn is_pair(n: usize, (i, j): (usize, usize)) -> bool {
    1 <= i && i < j && i + j <= 2 * n + 1
}

pub fn is_long(n: usize, (i, j): (usize, usize)) -> bool {
    i + j == 2 * n + 1
}

pub fn conjugate(n: usize, (i, j): (usize, usize)) -> (usize, usize) {
    (2 * n + 1 - j, 2 * n + 1 - i)
}

pub fn root_to_pair(n: usize, r: &Root) -> Option<(usize, usize)> {
    (1..=2 * n)
        .flat_map(|i| (i + 1..=2 * n + 1 - i).map(move |j| (i, j)))
        .find(|&(i, j)| pair_to_root(n, i, j) == *r)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymplecticIdeal {
    n: usize,
    gens: Vec<(usize, usize)>,
}

impl SymplecticIdeal {
    pub fn new(n: usize, mut gens: Vec<(usize, usize)>) -> Result<Self> {
        gens.sort_unstable();
        let increasing = gens.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1);
        if gens.iter().all(|&g| is_pair(n, g)) && increasing {
            Ok(SymplecticIdeal { n, gens })
        } else {
            Err(Error::Argument(format!("{gens:?} are not the corners of an sp_{} ideal", 2 * n)))
        }
    }

    pub fn empty(n: usize) -> Self {
        SymplecticIdeal { n, gens: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[(usize, usize)] {
        &self.gens
    }

    pub fn from_upper(rs: &RootSystem, ideal: &UpperIdeal) -> Result<Self> {
        check_type(rs)?;
        let n = rs.rank();
        let gens = ideal
            .generator_roots(rs)
            .iter()
            .map(|r| root_to_pair(n, r).ok_or_else(|| Error::Internal(format!("{r} has no pair"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, gens)
    }

    pub fn to_upper(&self, rs: &RootSystem) -> Result<UpperIdeal> {
        check_type(rs)?;
        if rs.rank() != self.n {
            return Err(Error::Argument(format!("rank {} against sp_{}", rs.rank(), 2 * self.n)));
        }
        let roots: Vec<Root> = self.gens.iter().map(|&(i, j)| pair_to_root(self.n, i, j)).collect();
        UpperIdeal::close_upward(rs, &roots)
    }

    /// The self-conjugate ideal `c̄` of `sl_{2n}`.
    pub fn symmetrize(&self) -> FerrersIdeal {
        let mut g = self.gens.clone();
        g.extend(self.gens.iter().map(|&p| conjugate(self.n, p)));
        g.sort_unstable();
        g.dedup();
        FerrersIdeal::new(2 * self.n - 1, g).expect("symmetrization of an antichain is an antichain")
    }

    /// `E_c = (X(c̄) ∪ Ỹ(c̄)) ∩ [n]`.
    pub fn e(&self) -> Vec<usize> {
        self.symmetrize().e().into_iter().filter(|&l| l <= self.n).collect()
    }

    pub fn normalizer(&self) -> ParabolicLabel {
        label_from_e(self.n, &self.e())
    }

    /// The ideal whose symmetrization is `(c̄)*`.
    pub fn dual(&self) -> Self {
        desymmetrize(&self.symmetrize().dual()).expect("dual of a self-conjugate ideal is self-conjugate")
    }

    pub fn is_minimax(&self) -> bool {
        self.symmetrize().is_minimax()
    }

    /// The signed word over `E_c ∖ {n}`: `+1` for letters only in `X(c̄)`,
    /// `0` for letters in both, `−1` for letters only in `Ỹ(c̄)`.
    pub fn encode_word(&self) -> (Vec<usize>, SignedWord) {
        let bar = self.symmetrize();
        let n = self.n;
        let a: Vec<usize> = bar.x().into_iter().filter(|&l| l < n).collect();
        let b: Vec<usize> = bar.y_tilde().into_iter().filter(|&l| l < n).collect();
        let e = super::union(&a, &b);
        let w = e
            .iter()
            .map(|l| match (a.contains(l), b.contains(l)) {
                (true, false) => 1,
                (true, true) => 0,
                _ => -1,
            })
            .collect();
        (e, SignedWord(w))
    }
}

impl fmt::Debug for SymplecticIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sp{}{:?}", 2 * self.n, self.gens)
    }
}

fn check_type(rs: &RootSystem) -> Result<()> {
    if rs.cartan_type().family() == Family::C {
        Ok(())
    } else {
        Err(Error::Argument(format!("{} is not of type C", rs.cartan_type())))
    }
}

/// Inverse of [`SymplecticIdeal::symmetrize`].
pub fn desymmetrize(bar: &FerrersIdeal) -> Result<SymplecticIdeal> {
    let m = bar.n() + 1;
    if !m.is_multiple_of(2) {
        return Err(Error::Argument(format!("sl_{m} has no symplectic form")));
    }
    let n = m / 2;
    let g = bar.generators();
    let k = g.len();
    if !(0..k).all(|i| g[i].0 + g[k - 1 - i].1 == 2 * n + 1) {
        return Err(Error::Argument(format!("{bar:?} is not self-conjugate")));
    }
    SymplecticIdeal::new(n, g[..k.div_ceil(2)].to_vec())
}

/// A word in `{−1, 0, +1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedWord(pub Vec<i8>);

impl SignedWord {
    pub fn has_nonnegative_prefixes(&self) -> bool {
        let mut s = 0i64;
        self.0.iter().all(|&v| {
            s += i64::from(v);
            s >= 0
        })
    }

    /// All words of length `s` with nonnegative partial sums.
    pub fn all_valid(s: usize) -> Vec<SignedWord> {
        let mut out = Vec::new();
        for code in 0..3usize.pow(s as u32) {
            let mut c = code;
            let w: Vec<i8> = (0..s)
                .map(|_| {
                    let v = (c % 3) as i8 - 1;
                    c /= 3;
                    v
                })
                .collect();
            let w = SignedWord(w);
            if w.has_nonnegative_prefixes() {
                out.push(w);
            }
        }
        out
    }
}

/// The ideal of `AD{p(E)}` with the given signed word over `E ∖ {n}`.
pub fn decode_word(n: usize, e: &[usize], w: &SignedWord) -> Result<SymplecticIdeal> {
    let letters: Vec<usize> = e.iter().copied().filter(|&l| l < n).collect();
    if letters.len() != w.0.len() {
        return Err(Error::Argument(format!("word of length {} for {} letters", w.0.len(), letters.len())));
    }
    if !w.has_nonnegative_prefixes() {
        return Err(Error::Argument(format!("{w:?} has a negative partial sum")));
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (&l, &v) in letters.iter().zip(&w.0) {
        if v >= 0 {
            a.push(l);
            b.push(2 * n - l);
        }
        if v <= 0 {
            b.push(l);
            a.push(2 * n - l);
        }
    }
    if e.contains(&n) {
        a.push(n);
        b.push(n);
    }
    a.sort_unstable();
    b.sort_unstable();
    if !dominated(&a, &b) {
        return Err(Error::Internal(format!("decoded sequences {a:?}, {b:?} violate a_i ≤ b_i")));
    }
    desymmetrize(&FerrersIdeal::from_xy(2 * n - 1, &a, &b)?)
}

/// `AD{p(E)}`: `A ⊆ [2n−1]`, `B = 2n − A`, `a_i ≤ b_i`, `(A ∪ B) ∩ [n] = E`.
pub fn fiber(n: usize, e: &[usize]) -> Vec<SymplecticIdeal> {
    let mut out = Vec::new();
    let m = 2 * n - 1;
    for mask in 0u64..(1 << m) {
        let a: Vec<usize> = (1..=m).filter(|l| mask & (1 << (l - 1)) != 0).collect();
        let mut b: Vec<usize> = a.iter().map(|x| 2 * n - x).collect();
        b.sort_unstable();
        if !dominated(&a, &b) {
            continue;
        }
        let low = super::union(&a, &b).into_iter().filter(|&l| l <= n).collect::<Vec<_>>();
        if low != e {
            continue;
        }
        let bar = FerrersIdeal::from_xy(m, &a, &b).expect("valid corners");
        out.push(desymmetrize(&bar).expect("self-conjugate by construction"));
    }
    out.sort();
    out
}

/// All ideals of `sp_{2n}` through the fiber partition.
pub fn all_ideals(n: usize) -> Vec<SymplecticIdeal> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let e: Vec<usize> = (1..=n).filter(|l| mask & (1 << (l - 1)) != 0).collect();
        out.extend(fiber(n, &e));
    }
    out
}

/// `\binom{s}{[s/2]}`.
pub fn minimax_fiber_count(s: usize) -> BigInt {
    binom(s as i64, (s / 2) as i64)
}

/// `{−1,+1}`-words of length `s` with nonnegative partial sums, by
/// enumeration.
pub fn ballot(s: usize) -> u64 {
    (0u64..(1 << s))
        .filter(|mask| {
            let mut sum = 0i64;
            (0..s).all(|i| {
                sum += if mask & (1 << i) != 0 { 1 } else { -1 };
                sum >= 0
            })
        })
        .count() as u64
}

/// Coefficients of `F_{n-mm}(sp_{2n}, t) = Σ_s \binom{n−1}{s}\binom{s}{[s/2]} t^s`.
pub fn f_nmm_polynomial(n: usize) -> Vec<BigInt> {
    (0..n).map(|s| binom(n as i64 - 1, s as i64) * minimax_fiber_count(s)).collect()
}

pub fn eval_poly(coeffs: &[BigInt], t: i64) -> BigInt {
    coeffs.iter().rev().fold(BigInt::from(0), |acc, c| acc * t + c)
}
