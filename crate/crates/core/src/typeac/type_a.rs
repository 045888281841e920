//! Ideals of `sl_{n+1}` as right-justified Ferrers diagrams.
//!
//! The positive root `α_i + … + α_{j−1}` is the pair `(i, j)`,
//! `1 ≤ i < j ≤ n+1`. An ideal is given by the southwest corners
//! `(i_1, j_1), …, (i_k, j_k)` with both coordinates strictly increasing.

use std::fmt;

use super::{dominated, label_from_e, union};
use crate::ideals::UpperIdeal;
use crate::normalizers::ParabolicLabel;
use crate::rootsys::{Family, Root, RootSystem};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FerrersIdeal {
    n: usize,
    gens: Vec<(usize, usize)>,
}

/// `α_i + … + α_{j−1}` in `A_n`.
pub fn pair_to_root(n: usize, i: usize, j: usize) -> Root {
    Root((1..=n).map(|l| i64::from(i <= l && l < j)).collect())
}

/// The pair of a positive root of `A_n`.
pub fn root_to_pair(r: &Root) -> Option<(usize, usize)> {
    let c = r.coeffs();
    let first = c.iter().position(|&x| x != 0)?;
    let last = c.iter().rposition(|&x| x != 0)?;
    c[first..=last].iter().all(|&x| x == 1).then_some((first + 1, last + 2))
}

impl FerrersIdeal {
    /// Validates the corner conditions.
    pub fn new(n: usize, mut gens: Vec<(usize, usize)>) -> Result<Self> {
        gens.sort_unstable();
        let ok_pair = |&(i, j): &(usize, usize)| 1 <= i && i < j && j <= n + 1;
        let increasing = gens.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1);
        if gens.iter().all(ok_pair) && increasing {
            Ok(FerrersIdeal { n, gens })
        } else {
            Err(Error::Argument(format!("{gens:?} are not the corners of an sl_{} ideal", n + 1)))
        }
    }

    pub fn empty(n: usize) -> Self {
        FerrersIdeal { n, gens: Vec::new() }
    }

    /// Ideal with `X = xs` and `Ỹ = ys` (generators `(x_m, y_m + 1)`).
    pub fn from_xy(n: usize, xs: &[usize], ys: &[usize]) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::Argument("X and Ỹ differ in size".into()));
        }
        Self::new(n, xs.iter().zip(ys).map(|(&x, &y)| (x, y + 1)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[(usize, usize)] {
        &self.gens
    }

    pub fn from_upper(rs: &RootSystem, ideal: &UpperIdeal) -> Result<Self> {
        check_type(rs)?;
        let gens = ideal
            .generator_roots(rs)
            .iter()
            .map(|r| root_to_pair(r).ok_or_else(|| Error::Internal(format!("{r} is not a type A root"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rs.rank(), gens)
    }

    pub fn to_upper(&self, rs: &RootSystem) -> Result<UpperIdeal> {
        check_type(rs)?;
        if rs.rank() != self.n {
            return Err(Error::Argument(format!("rank {} against sl_{}", rs.rank(), self.n + 1)));
        }
        let roots: Vec<Root> = self.gens.iter().map(|&(i, j)| pair_to_root(self.n, i, j)).collect();
        UpperIdeal::close_upward(rs, &roots)
    }

    /// `X(c) = {i_1, …, i_k}`.
    pub fn x(&self) -> Vec<usize> {
        self.gens.iter().map(|g| g.0).collect()
    }

    /// `Ỹ(c) = {j_1 − 1, …, j_k − 1}`.
    pub fn y_tilde(&self) -> Vec<usize> {
        self.gens.iter().map(|g| g.1 - 1).collect()
    }

    /// `E = X ∪ Ỹ`, the complement of the Levi set of the normalizer.
    pub fn e(&self) -> Vec<usize> {
        union(&self.x(), &self.y_tilde())
    }

    pub fn normalizer(&self) -> ParabolicLabel {
        label_from_e(self.n, &self.e())
    }

    /// `X(c*) = [n] ∖ Ỹ(c)`, `Ỹ(c*) = [n] ∖ X(c)`.
    pub fn dual(&self) -> Self {
        let (x, y) = (self.x(), self.y_tilde());
        let xs: Vec<usize> = (1..=self.n).filter(|l| !y.contains(l)).collect();
        let ys: Vec<usize> = (1..=self.n).filter(|l| !x.contains(l)).collect();
        Self::from_xy(self.n, &xs, &ys).expect("the dual of an ideal is an ideal")
    }

    /// `X(c) ∩ Ỹ(c) = ∅`.
    pub fn is_minimax(&self) -> bool {
        let y = self.y_tilde();
        self.x().iter().all(|a| !y.contains(a))
    }
}

impl fmt::Debug for FerrersIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sl{}{:?}", self.n + 1, self.gens)
    }
}

fn check_type(rs: &RootSystem) -> Result<()> {
    if rs.cartan_type().family() == Family::A {
        Ok(())
    } else {
        Err(Error::Argument(format!("{} is not of type A", rs.cartan_type())))
    }
}

/// `AD{p(E)}`: pairs `a_1 < … < a_k`, `b_1 < … < b_k` with `a_i ≤ b_i` and
/// `{a} ∪ {b} = E`, in lexicographic order of `(a, b)`.
pub fn fiber(n: usize, e: &[usize]) -> Vec<FerrersIdeal> {
    let s = e.len();
    let mut pairs: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    // each l ∈ E goes to a only, b only, or both
    let total = 3usize.pow(s as u32);
    for code in 0..total {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        let mut c = code;
        for &l in e {
            match c % 3 {
                0 => a.push(l),
                1 => b.push(l),
                _ => {
                    a.push(l);
                    b.push(l);
                }
            }
            c /= 3;
        }
        if dominated(&a, &b) {
            pairs.push((a, b));
        }
    }
    pairs.sort();
    pairs
        .into_iter()
        .map(|(a, b)| FerrersIdeal::from_xy(n, &a, &b).expect("valid corners"))
        .collect()
}

/// `Γ(c_min(E)) = {(l_i, l_{[s/2]+i} + 1) : i ≤ [(s+1)/2]}`.
pub fn min_element(n: usize, e: &[usize]) -> FerrersIdeal {
    let s = e.len();
    let gens = (0..s.div_ceil(2)).map(|i| (e[i], e[s / 2 + i] + 1)).collect();
    FerrersIdeal::new(n, gens).expect("valid corners")
}

/// `Γ(c_max(E)) = {(l_i, l_i + 1)}`, the nilradical of `p(E)`.
pub fn max_element(n: usize, e: &[usize]) -> FerrersIdeal {
    FerrersIdeal::new(n, e.iter().map(|&l| (l, l + 1)).collect()).expect("valid corners")
}

/// Relabels a fiber element of `p(l_1, …, l_s)` as an ideal of
/// `sl_{s+1}` normalized by `b` via `l_i ↦ i`.
pub fn compress(c: &FerrersIdeal, e: &[usize]) -> FerrersIdeal {
    let pos = |l: usize| e.iter().position(|&x| x == l).expect("index in E") + 1;
    let xs: Vec<usize> = c.x().into_iter().map(pos).collect();
    let ys: Vec<usize> = c.y_tilde().into_iter().map(pos).collect();
    FerrersIdeal::from_xy(e.len(), &xs, &ys).expect("relabeling keeps a_i ≤ b_i")
}

/// All ideals of `sl_{n+1}` via corner coordinates.
pub fn all_ideals(n: usize) -> Vec<FerrersIdeal> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let e: Vec<usize> = (1..=n).filter(|l| mask & (1 << (l - 1)) != 0).collect();
        out.extend(fiber(n, &e));
    }
    out
}
