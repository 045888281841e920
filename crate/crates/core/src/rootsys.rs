//! Finite root systems of the simple Lie algebras.
//!
//! Simple roots are numbered as in the Vinberg–Onishchik tables:
//!
//! | type | diagram (1-based)                          | short simple roots |
//! |------|--------------------------------------------|--------------------|
//! | A_n  | 1 – 2 – … – n                              | –                  |
//! | B_n  | 1 – … – (n-1) ⇒ n                          | α_n                |
//! | C_n  | 1 – … – (n-1) ⇐ n                          | α_1 … α_{n-1}      |
//! | D_n  | 1 – … – (n-2), with n-1 and n attached to n-2 | –               |
//! | E6   | 1 – 2 – 3 – 4 – 5, with 6 attached to 3    | –                  |
//! | E7   | 1 – … – 6, with 7 attached to 3            | –                  |
//! | E8   | 1 – … – 7, with 8 attached to 5            | –                  |
//! | F4   | 1 – 2 ⇐ 3 – 4                              | α_1, α_2           |
//! | G2   | 1 ⇐ 2 (triple)                             | α_1                |
//!
//! The inner product is normalized by `(θ,θ) = 2`, so long roots have squared
//! length 2, short roots of B/C/F have length 1 and the short G2 root has
//! length 2/3. `cartan[i][j] = ⟨α_i, α_j^∨⟩ = 2(α_i,α_j)/(α_j,α_j)`.
//!
//! With these conventions the highest roots are
//! `F4: [2,4,3,2]` and `G2: [3,2]`.

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::bitset::{RootSet, MAX_ROOTS};
use crate::rational::{int, Rational, RationalMatrix, RationalVector};
use crate::{Error, Result};

/// Default rank caps for full construction (ideal enumeration stays cheap).
pub const DEFAULT_MAX_RANK_A: usize = 9;
pub const DEFAULT_MAX_RANK_BCD: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A Cartan–Killing label such as `A4` or `F4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::Unsupported(format!("{family:?}{rank}")))
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Coefficients `c_1 … c_p` of the highest root, without building the
    /// root system. Agrees with [`RootSystem::marks`] wherever both exist.
    pub fn marks(self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A => vec![1; n],
            Family::B => std::iter::once(1).chain(std::iter::repeat_n(2, n - 1)).collect(),
            Family::C => std::iter::repeat_n(2, n - 1).chain(std::iter::once(1)).collect(),
            Family::D => {
                let mut m = vec![2; n];
                m[0] = 1;
                m[n - 2] = 1;
                m[n - 1] = 1;
                m
            }
            Family::E => match n {
                6 => vec![1, 2, 3, 2, 1, 2],
                7 => vec![2, 3, 4, 3, 2, 1, 2],
                _ => vec![2, 3, 4, 5, 6, 4, 2, 3],
            },
            Family::F => vec![2, 4, 3, 2],
            Family::G => vec![3, 2],
        }
    }

    /// `f = #{j ∈ 0..=p : c_j = 1}` with `c_0 = 1`.
    pub fn index_of_connection(self) -> usize {
        1 + self.marks().iter().filter(|&&c| c == 1).count()
    }

    pub fn num_positive_roots(self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B | Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }

    /// Squared lengths `(α_i, α_i)` of the simple roots.
    fn simple_lengths(self) -> Vec<Rational> {
        let n = self.rank;
        let two = int(2);
        let one = int(1);
        match self.family {
            Family::A | Family::D | Family::E => vec![two; n],
            Family::B => {
                let mut v = vec![two; n];
                v[n - 1] = one;
                v
            }
            Family::C => {
                let mut v = vec![one; n];
                v[n - 1] = two;
                v
            }
            Family::F => vec![one, one, two, two],
            Family::G => vec![Rational::new(2, 3), two],
        }
    }

    /// Dynkin edges, 0-based.
    fn edges(self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => chain(n),
            Family::D => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e = chain(n - 1);
                e.push((if n == 8 { 4 } else { 2 }, n - 1));
                e
            }
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts `A4`, `a_4`, `E6`, and the classical names `sl5`, `so8`,
    /// `so9`, `sp4`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Unsupported(s.to_string());
        let t: String = s.chars().filter(|c| *c != '_' && !c.is_whitespace()).collect();
        let lower = t.to_ascii_lowercase();
        let num = |rest: &str| rest.parse::<usize>().map_err(|_| bad());
        if let Some(rest) = lower.strip_prefix("sl") {
            let m = num(rest)?;
            return CartanType::new(Family::A, m.checked_sub(1).ok_or_else(bad)?);
        }
        if let Some(rest) = lower.strip_prefix("sp") {
            let m = num(rest)?;
            if m % 2 != 0 {
                return Err(bad());
            }
            return CartanType::new(Family::C, m / 2);
        }
        if let Some(rest) = lower.strip_prefix("so") {
            let m = num(rest)?;
            let fam = if m % 2 == 0 { Family::D } else { Family::B };
            return CartanType::new(fam, m / 2);
        }
        let mut chars = lower.chars();
        let fam = match chars.next().ok_or_else(bad)? {
            'a' => Family::A,
            'b' => Family::B,
            'c' => Family::C,
            'd' => Family::D,
            'e' => Family::E,
            'f' => Family::F,
            'g' => Family::G,
            _ => return Err(bad()),
        };
        CartanType::new(fam, num(chars.as_str())?)
    }
}

/// A vector in the root lattice `ℤΠ`, in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector::from_ints(&self.0)
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// An irreducible reduced root system with its positive-root poset.
///
/// Positive roots are interned by increasing height (ties broken by
/// decreasing lexicographic order), so index `i < p` is the simple root
/// `α_{i+1}` and the last index is `θ`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ct: CartanType,
    cartan: Vec<Vec<i64>>,
    gram: RationalMatrix,
    gram_inv: RationalMatrix,
    lengths: Vec<Rational>,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    marks: Vec<i64>,
    // poset tables over positive-root indices
    sums: Vec<Option<usize>>,
    minus_simple: Vec<Vec<Option<usize>>>,
    above: Vec<RootSet>,
    below: Vec<RootSet>,
}

impl RootSystem {
    /// Builds the root system with the default rank caps.
    pub fn build(ct: CartanType) -> Result<Self> {
        Self::build_with_max_rank(ct, None)
    }

    /// Builds with a custom classical-rank cap (`None` means the defaults).
    /// The 128-root bitset width is a hard limit either way.
    pub fn build_with_max_rank(ct: CartanType, max_rank: Option<usize>) -> Result<Self> {
        let cap = match ct.family {
            Family::A => max_rank.unwrap_or(DEFAULT_MAX_RANK_A),
            Family::B | Family::C | Family::D => max_rank.unwrap_or(DEFAULT_MAX_RANK_BCD),
            _ => usize::MAX,
        };
        if ct.rank > cap {
            return Err(Error::Unsupported(format!("{ct}: rank above cap {cap}")));
        }
        if ct.num_positive_roots() > MAX_ROOTS {
            return Err(Error::Unsupported(format!(
                "{ct}: {} positive roots exceed the {MAX_ROOTS}-bit table",
                ct.num_positive_roots()
            )));
        }
        Ok(Self::construct(ct))
    }

    fn construct(ct: CartanType) -> Self {
        let p = ct.rank;
        let lengths = ct.simple_lengths();
        let edges = ct.edges();
        let gram = RationalMatrix::from_fn(p, |i, j| {
            if i == j {
                lengths[i]
            } else if edges.contains(&(i.min(j), i.max(j))) {
                -lengths[i].max(lengths[j]) / int(2)
            } else {
                int(0)
            }
        });
        let cartan: Vec<Vec<i64>> = (0..p)
            .map(|i| {
                (0..p)
                    .map(|j| {
                        let v = int(2) * gram.get(i, j) / lengths[j];
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        let gram_inv = gram.inverse().expect("Gram matrix of a root system is invertible");

        // Positive roots by height, via α_i-strings: β + α_i is a root iff
        // r - ⟨β, α_i^∨⟩ > 0 where β - rα_i is the bottom of the string.
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut roots: Vec<Vec<i64>> = Vec::new();
        for i in 0..p {
            let mut e = vec![0; p];
            e[i] = 1;
            index.insert(e.clone(), roots.len());
            roots.push(e);
        }
        let mut layer: Vec<Vec<i64>> = roots.clone();
        while !layer.is_empty() {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &layer {
                for i in 0..p {
                    let mut simple = vec![0; p];
                    simple[i] = 1;
                    if *beta == simple {
                        continue;
                    }
                    let mut r = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if index.contains_key(&down) {
                            r += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..p).map(|j| beta[j] * cartan[j][i]).sum();
                    if r - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !index.contains_key(&up) {
                            index.insert(up.clone(), usize::MAX);
                            next.push(up);
                        }
                    }
                }
            }
            roots.extend(next.iter().cloned());
            layer = next;
        }
        roots.sort_by(|a, b| {
            let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let roots: Vec<Root> = roots.into_iter().map(Root).collect();
        let n = roots.len();
        let marks = roots[n - 1].0.clone();

        let mut sums = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                sums[a * n + b] = index.get(&roots[a].add(&roots[b]).0).copied();
            }
        }
        let minus_simple = roots
            .iter()
            .map(|r| {
                (0..p)
                    .map(|i| {
                        let mut v = r.0.clone();
                        v[i] -= 1;
                        index.get(&v).copied()
                    })
                    .collect()
            })
            .collect();
        let leq = |a: &Root, b: &Root| a.0.iter().zip(&b.0).all(|(x, y)| x <= y);
        let above = (0..n)
            .map(|a| (0..n).filter(|&b| leq(&roots[a], &roots[b])).collect())
            .collect();
        let below = (0..n)
            .map(|a| (0..n).filter(|&b| leq(&roots[b], &roots[a])).collect())
            .collect();

        RootSystem {
            ct,
            cartan,
            gram,
            gram_inv,
            lengths,
            roots,
            index,
            marks,
            sums,
            minus_simple,
            above,
            below,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ct
    }

    pub fn rank(&self) -> usize {
        self.ct.rank
    }

    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &RationalMatrix {
        &self.gram
    }

    pub fn gram_inverse(&self) -> &RationalMatrix {
        &self.gram_inv
    }

    /// `(α_i, α_i)`.
    pub fn simple_length(&self, i: usize) -> Rational {
        self.lengths[i]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        self.roots[i].clone()
    }

    pub fn theta(&self) -> &Root {
        self.roots.last().expect("nonempty")
    }

    pub fn theta_index(&self) -> usize {
        self.roots.len() - 1
    }

    /// `c_1 … c_p` (coefficients of `θ`).
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn index_of_connection(&self) -> usize {
        1 + self.marks.iter().filter(|&&c| c == 1).count()
    }

    /// Position of a positive root in the interned table.
    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.0).copied()
    }

    pub fn index_of_coeffs(&self, c: &[i64]) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Whether `r` is a root (of either sign).
    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(&r.0) || self.index.contains_key(&r.neg().0)
    }

    /// Index of `root_a + root_b` if it is a positive root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a * self.roots.len() + b]
    }

    /// Index of `root_a − α_i` if it is a positive root.
    pub fn minus_simple(&self, a: usize, i: usize) -> Option<usize> {
        self.minus_simple[a][i]
    }

    /// `{b : root_a ≼ root_b}`.
    pub fn above(&self, a: usize) -> RootSet {
        self.above[a]
    }

    /// `{b : root_b ≼ root_a}`.
    pub fn below(&self, a: usize) -> RootSet {
        self.below[a]
    }

    pub fn all_roots(&self) -> RootSet {
        RootSet::full(self.roots.len())
    }

    pub fn simple_set(&self) -> RootSet {
        RootSet::full(self.rank())
    }

    /// `(x, y)` for vectors in simple-root coordinates.
    pub fn inner(&self, x: &RationalVector, y: &RationalVector) -> Rational {
        x.dot(&self.gram.mul_vec(y))
    }

    /// `(x, α_i)` for an integral vector in simple-root coordinates.
    pub fn inner_simple_int(&self, x: &[i64], i: usize) -> Rational {
        (0..self.rank()).map(|j| self.gram.get(i, j) * int(x[j])).sum()
    }

    /// `⟨x, α_i^∨⟩` for an integral vector; always an integer.
    pub fn pairing_int(&self, x: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| x[j] * self.cartan[j][i]).sum()
    }

    /// `(x, α_i)` for each simple root: the coordinates of `x` in the basis
    /// of fundamental coweights.
    pub fn coweight_coords(&self, x: &RationalVector) -> RationalVector {
        self.gram.mul_vec(x)
    }

    /// Inverse of [`Self::coweight_coords`].
    pub fn from_coweight_coords(&self, y: &RationalVector) -> RationalVector {
        self.gram_inv.mul_vec(y)
    }

    /// `μ ≼ γ`, i.e. `γ − μ ∈ Q^+`.
    pub fn leq(&self, mu: &Root, gamma: &Root) -> bool {
        mu.0.iter().zip(&gamma.0).all(|(a, b)| a <= b)
    }

    /// `μ + ν` if it is a positive root.
    pub fn root_sum(&self, mu: &Root, nu: &Root) -> Option<Root> {
        let s = mu.add(nu);
        self.index.contains_key(&s.0).then_some(s)
    }

    /// `α_i^∨ = 2α_i / (α_i, α_i)` in simple-root coordinates.
    pub fn coroot(&self, i: usize) -> RationalVector {
        RationalVector::unit(self.rank(), i).scale(int(2) / self.lengths[i])
    }

    /// Fundamental coweight `ϖ_i`, dual to the simple roots.
    pub fn fundamental_coweight(&self, i: usize) -> RationalVector {
        self.from_coweight_coords(&RationalVector::unit(self.rank(), i))
    }

    /// Fundamental weight `φ_i`, with `(φ_i, α_j^∨) = δ_ij`.
    pub fn fundamental_weight(&self, i: usize) -> RationalVector {
        self.fundamental_coweight(i).scale(self.lengths[i] / int(2))
    }

    /// Coordinates of a weight in the basis of fundamental weights:
    /// `⟨x, α_i^∨⟩`.
    pub fn weight_coords(&self, x: &RationalVector) -> RationalVector {
        let y = self.coweight_coords(x);
        RationalVector((0..self.rank()).map(|i| y[i] * int(2) / self.lengths[i]).collect())
    }

    /// Half-sum of the positive roots.
    pub fn rho(&self) -> RationalVector {
        let mut sum = vec![0i64; self.rank()];
        for r in &self.roots {
            for (s, c) in sum.iter_mut().zip(&r.0) {
                *s += c;
            }
        }
        RationalVector::from_ints(&sum).scale(Rational::new(1, 2))
    }

    /// Whether `x` is an integral combination of simple coroots.
    pub fn in_coroot_lattice(&self, x: &RationalVector) -> bool {
        (0..self.rank()).all(|i| (x[i] * self.lengths[i] / int(2)).is_integer())
    }

    /// Coefficients of `x` on the simple coroots (not necessarily integral).
    pub fn coroot_coords(&self, x: &RationalVector) -> RationalVector {
        RationalVector((0..self.rank()).map(|i| x[i] * self.lengths[i] / int(2)).collect())
    }

    pub fn is_positive_definite(&self) -> bool {
        self.gram.leading_minors().iter().all(|m| m.is_positive())
    }

    /// Whether the Gram matrix is symmetric with `(θ,θ) = 2`.
    pub fn normalization_ok(&self) -> bool {
        let t = self.theta().to_rational();
        self.gram.is_symmetric() && self.inner(&t, &t) == int(2)
    }

    pub fn zero_vector(&self) -> RationalVector {
        RationalVector(vec![Rational::zero(); self.rank()])
    }
}
