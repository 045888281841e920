//! The affine root system and affine Weyl group.
//!
//! `V̂ = V ⊕ ℝδ ⊕ ℝΛ` with `(δ, Λ) = 1` and `δ`, `Λ` orthogonal to `V`,
//! `(δ,δ) = (Λ,Λ) = 0`. Lattice vectors are integer tuples over the basis
//! `(α_1, …, α_p, δ, Λ)`. Word letters are `0` for `s_0` (with
//! `α_0 = δ − θ`) and `i ≥ 1` for `s_i`.

use std::collections::BTreeSet;
use std::fmt;

use num::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::bitset::RootSet;
use crate::ideals::{IdealChain, UpperIdeal};
use crate::normalizers::ParabolicLabel;
use crate::rational::{int, Rational, RationalVector};
use crate::rootsys::{Root, RootSystem};
use crate::{Error, Result};

/// `finite + level·δ` with `finite ∈ Δ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub finite: Root,
    pub level: i64,
}

impl AffineRoot {
    pub fn new(finite: Root, level: i64) -> Self {
        AffineRoot { finite, level }
    }

    /// `kδ − γ`.
    pub fn minus(gamma: &Root, k: i64) -> Self {
        AffineRoot { finite: gamma.neg(), level: k }
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.finite.is_nonnegative() && !self.finite.is_zero())
    }

    fn to_lattice(&self) -> Vec<i64> {
        let mut v = self.finite.0.clone();
        v.push(self.level);
        v.push(0);
        v
    }

    fn from_lattice(v: &[i64]) -> Self {
        let p = v.len() - 2;
        debug_assert_eq!(v[p + 1], 0);
        AffineRoot { finite: Root(v[..p].to_vec()), level: v[p] }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.level;
        let d = match k {
            0 => String::new(),
            1 => "d".to_string(),
            -1 => "-d".to_string(),
            _ => format!("{k}d"),
        };
        if self.finite.is_nonnegative() {
            if k == 0 {
                write!(f, "{}", self.finite)
            } else {
                write!(f, "{d}+{}", self.finite)
            }
        } else {
            write!(f, "{d}-{}", self.finite.neg())
        }
    }
}

impl fmt::Debug for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A rational vector of `V̂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineVector {
    pub v: RationalVector,
    pub delta: Rational,
    pub lambda: Rational,
}

impl AffineVector {
    pub fn zero(p: usize) -> Self {
        AffineVector { v: RationalVector::zeros(p), delta: Rational::zero(), lambda: Rational::zero() }
    }

    pub fn from_root(r: &AffineRoot) -> Self {
        AffineVector { v: r.finite.to_rational(), delta: int(r.level), lambda: Rational::zero() }
    }

    fn coords(&self) -> Vec<Rational> {
        let mut c = self.v.0.clone();
        c.push(self.delta);
        c.push(self.lambda);
        c
    }

    fn from_coords(c: Vec<Rational>) -> Self {
        let p = c.len() - 2;
        AffineVector { v: RationalVector(c[..p].to_vec()), delta: c[p], lambda: c[p + 1] }
    }

    pub fn sub(&self, o: &Self) -> Self {
        AffineVector { v: &self.v - &o.v, delta: self.delta - o.delta, lambda: self.lambda - o.lambda }
    }

    pub fn add(&self, o: &Self) -> Self {
        AffineVector { v: &self.v + &o.v, delta: self.delta + o.delta, lambda: self.lambda + o.lambda }
    }
}

/// `(x, y)` on `V̂`.
pub fn affine_inner(rs: &RootSystem, x: &AffineVector, y: &AffineVector) -> Rational {
    rs.inner(&x.v, &y.v) + x.delta * y.lambda + x.lambda * y.delta
}

/// `ρ̂ = ρ + (1 + (ρ,θ))Λ`.
pub fn rho_hat(rs: &RootSystem) -> AffineVector {
    let rho = rs.rho();
    let h = Rational::one() + rs.inner(&rho, &rs.theta().to_rational());
    AffineVector { v: rho, delta: Rational::zero(), lambda: h }
}

/// An element of `Ŵ`, identified by its matrix on the lattice basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    dim: usize,
    // row-major; column c is the image of basis vector c
    mat: Vec<i64>,
    word: Vec<usize>,
}

fn simple_affine(rs: &RootSystem, letter: usize) -> Vec<i64> {
    let p = rs.rank();
    let mut v = vec![0; p + 2];
    if letter == 0 {
        for (a, t) in v.iter_mut().zip(rs.theta().coeffs()) {
            *a = -t;
        }
        v[p] = 1;
    } else {
        v[letter - 1] = 1;
    }
    v
}

fn reflection_matrix(rs: &RootSystem, letter: usize) -> Vec<i64> {
    let p = rs.rank();
    let d = p + 2;
    let mut m = vec![0i64; d * d];
    for c in 0..d {
        m[c * d + c] = 1;
    }
    let a = simple_affine(rs, letter);
    // s(x) = x − ⟨x, a^∨⟩ a, column by column
    for c in 0..d {
        let pairing = if letter == 0 {
            if c < p {
                -rs.inner_simple_int(rs.theta().coeffs(), c).to_integer()
            } else if c == p {
                0
            } else {
                1
            }
        } else if c < p {
            rs.cartan()[c][letter - 1]
        } else {
            0
        };
        for r in 0..d {
            m[r * d + c] -= pairing * a[r];
        }
    }
    m
}

fn mat_mul(d: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; d * d];
    for r in 0..d {
        for k in 0..d {
            let x = a[r * d + k];
            if x != 0 {
                for c in 0..d {
                    out[r * d + c] += x * b[k * d + c];
                }
            }
        }
    }
    out
}

fn is_negative_lattice(v: &[i64]) -> bool {
    let p = v.len() - 2;
    let k = v[p];
    k < 0 || (k == 0 && v[..p].iter().all(|&c| c <= 0) && v[..p].iter().any(|&c| c < 0))
}

impl AffineWeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        let d = rs.rank() + 2;
        let mut mat = vec![0; d * d];
        for c in 0..d {
            mat[c * d + c] = 1;
        }
        AffineWeylElement { dim: d, mat, word: Vec::new() }
    }

    pub fn simple_reflection(rs: &RootSystem, letter: usize) -> Result<Self> {
        Self::from_word(rs, &[letter])
    }

    /// The product `s_{w_1} ⋯ s_{w_k}`; the stored word is a reduced one.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let d = rs.rank() + 2;
        let mut mat = Self::identity(rs).mat;
        for &l in word {
            if l > rs.rank() {
                return Err(Error::Argument(format!("letter s{l} out of range")));
            }
            mat = mat_mul(d, &mat, &reflection_matrix(rs, l));
        }
        Self::from_matrix(rs, mat)
    }

    fn from_matrix(rs: &RootSystem, mat: Vec<i64>) -> Result<Self> {
        let d = rs.rank() + 2;
        let mut w = AffineWeylElement { dim: d, mat: mat.clone(), word: Vec::new() };
        let mut peeled = Vec::new();
        let limit = 100_000;
        while !w.is_identity() {
            let l = (0..=rs.rank())
                .find(|&l| is_negative_lattice(&w.apply(&simple_affine(rs, l))))
                .ok_or_else(|| Error::Internal("matrix has no descent but is not the identity".into()))?;
            w.mat = mat_mul(d, &w.mat, &reflection_matrix(rs, l));
            peeled.push(l);
            if peeled.len() > limit {
                return Err(Error::Internal("descent loop did not terminate".into()));
            }
        }
        peeled.reverse();
        Ok(AffineWeylElement { dim: d, mat, word: peeled })
    }

    /// A pure translation `t_r` for `r ∈ Q^∨`:
    /// `t_r(x) = x + (x,δ) r − ((x,r) + (r,r)(x,δ)/2) δ`.
    pub fn translation(rs: &RootSystem, r: &RationalVector) -> Result<Self> {
        if !rs.in_coroot_lattice(r) {
            return Err(Error::Argument(format!("{r} is not in the coroot lattice")));
        }
        let p = rs.rank();
        let d = p + 2;
        let ri = r.to_ints().expect("coroot lattice points are integral");
        let mut mat = Self::identity(rs).mat;
        for j in 0..p {
            mat[p * d + j] = -rs.inner_simple_int(&ri, j).to_integer();
        }
        let rr = rs.inner(r, r) / int(2);
        for i in 0..p {
            mat[i * d + p + 1] = ri[i];
        }
        mat[p * d + p + 1] = -rr.to_integer();
        Self::from_matrix(rs, mat)
    }

    fn is_identity(&self) -> bool {
        let d = self.dim;
        (0..d).all(|r| (0..d).all(|c| self.mat[r * d + c] == i64::from(r == c)))
    }

    /// A reduced word (lowest-letter right descents first, read backwards).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return "e".to_string();
        }
        self.word.iter().map(|l| format!("s{l}")).collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn matrix(&self) -> &[i64] {
        &self.mat
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let d = self.dim;
        (0..d).map(|r| (0..d).map(|c| self.mat[r * d + c] * x[c]).sum()).collect()
    }

    pub fn apply_root(&self, r: &AffineRoot) -> AffineRoot {
        AffineRoot::from_lattice(&self.apply(&r.to_lattice()))
    }

    pub fn apply_vector(&self, x: &AffineVector) -> AffineVector {
        let d = self.dim;
        let c = x.coords();
        AffineVector::from_coords(
            (0..d).map(|r| (0..d).map(|k| int(self.mat[r * d + k]) * c[k]).sum()).collect(),
        )
    }

    /// `w(α_l)` for a word letter `l`.
    pub fn image_of_simple(&self, rs: &RootSystem, letter: usize) -> AffineRoot {
        AffineRoot::from_lattice(&self.apply(&simple_affine(rs, letter)))
    }

    pub fn inverse(&self, rs: &RootSystem) -> Self {
        let w: Vec<usize> = self.word.iter().rev().copied().collect();
        Self::from_word(rs, &w).expect("valid letters")
    }

    pub fn mul(&self, rs: &RootSystem, other: &Self) -> Self {
        Self::from_matrix(rs, mat_mul(self.dim, &self.mat, &other.mat)).expect("group elements")
    }

    /// `N(w) = {μ ∈ Δ̂+ : w(μ) < 0}`.
    pub fn n_set(&self, rs: &RootSystem) -> BTreeSet<AffineRoot> {
        let mut out = BTreeSet::new();
        for r in rs.positive_roots() {
            for (mu, start) in [(r.clone(), 0), (r.neg(), 1)] {
                let img = self.apply_root(&AffineRoot::new(mu.clone(), 0));
                let m = img.level;
                let neg = !img.finite.is_nonnegative();
                let mut k = start;
                while m + k < 0 || (m + k == 0 && neg) {
                    out.insert(AffineRoot::new(mu.clone(), k));
                    k += 1;
                }
            }
        }
        out
    }

    /// `(dom)`: `w(α_i) > 0` for every finite simple root.
    pub fn is_dominant(&self, rs: &RootSystem) -> bool {
        (1..=rs.rank()).all(|l| self.image_of_simple(rs, l).is_positive())
    }

    /// δ-levels of `w^{-1}(α_l)` for `l = 0..p`.
    pub fn inverse_simple_levels(&self, rs: &RootSystem) -> Vec<i64> {
        let inv = self.inverse(rs);
        (0..=rs.rank()).map(|l| inv.image_of_simple(rs, l).level).collect()
    }

    /// `(min)`: every level of `w^{-1}(α̂)` is at least `−1`.
    pub fn satisfies_min(&self, rs: &RootSystem) -> bool {
        self.inverse_simple_levels(rs).iter().all(|&k| k >= -1)
    }

    /// `(max)`: every level of `w^{-1}(α̂)` is at most `1`.
    pub fn satisfies_max(&self, rs: &RootSystem) -> bool {
        self.inverse_simple_levels(rs).iter().all(|&k| k <= 1)
    }

    /// `w = v · t_r`, returned as `v` and `z = v(r)`.
    pub fn factorize(&self, rs: &RootSystem) -> Factorization {
        let p = rs.rank();
        let d = self.dim;
        let inv = self.inverse(rs);
        let levels = RationalVector((1..=p).map(|l| int(inv.image_of_simple(rs, l).level)).collect());
        let z = rs.from_coweight_coords(&levels);
        let v = (0..p).map(|r| (0..p).map(|c| self.mat[r * d + c]).collect()).collect();
        Factorization { v, z }
    }

    /// `w ∗ x = v(x) + z`.
    pub fn act_affinely(&self, rs: &RootSystem, x: &RationalVector) -> RationalVector {
        let f = self.factorize(rs);
        &f.apply_v(x) + &f.z
    }

    /// Canonical representative of the element by matrix, for sorting.
    pub fn key(&self) -> &[i64] {
        &self.mat
    }
}

impl fmt::Debug for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word_string())
    }
}

/// `w = v · t_r` with `v ∈ W` and `z = v(r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// `v[r][c]` is the `α_r`-coefficient of `v(α_c)`.
    pub v: Vec<Vec<i64>>,
    pub z: RationalVector,
}

impl Factorization {
    pub fn apply_v(&self, x: &RationalVector) -> RationalVector {
        let p = self.v.len();
        RationalVector((0..p).map(|r| (0..p).map(|c| int(self.v[r][c]) * x[c]).sum()).collect())
    }

    /// Rebuilds the matrix of `w`:
    /// `w(α_j) = v(α_j) − (vα_j, z)δ`, `w(δ) = δ`, `w(Λ) = Λ + z − (z,z)/2·δ`.
    pub fn reassemble(&self, rs: &RootSystem) -> Option<Vec<i64>> {
        let p = rs.rank();
        let d = p + 2;
        let mut m = vec![0i64; d * d];
        for j in 0..p {
            let col: Vec<i64> = (0..p).map(|r| self.v[r][j]).collect();
            for r in 0..p {
                m[r * d + j] = col[r];
            }
            let t = rs.inner(&RationalVector::from_ints(&col), &self.z);
            if !t.is_integer() {
                return None;
            }
            m[p * d + j] = -t.to_integer();
        }
        m[p * d + p] = 1;
        let zi = self.z.to_ints()?;
        for r in 0..p {
            m[r * d + p + 1] = zi[r];
        }
        let zz = rs.inner(&self.z, &self.z) / int(2);
        if !zz.is_integer() {
            return None;
        }
        m[p * d + p + 1] = -zz.to_integer();
        m[(p + 1) * d + p + 1] = 1;
        Some(m)
    }
}

/// Peels lowest-letter simple roots off `N` and reflects the remainder.
pub fn word_from_biconvex(rs: &RootSystem, n: &BTreeSet<AffineRoot>) -> Result<AffineWeylElement> {
    let simples: Vec<AffineRoot> =
        (0..=rs.rank()).map(|l| AffineRoot::from_lattice(&simple_affine(rs, l))).collect();
    let mats: Vec<Vec<i64>> = (0..=rs.rank()).map(|l| reflection_matrix(rs, l)).collect();
    let d = rs.rank() + 2;
    let mut cur: Vec<AffineRoot> = n.iter().cloned().collect();
    if let Some(bad) = cur.iter().find(|r| !r.is_positive() || !rs.is_root(&r.finite)) {
        return Err(Error::NotBiconvex(format!("{bad} is not a positive affine root")));
    }
    let mut peeled = Vec::new();
    while !cur.is_empty() {
        let l = (0..=rs.rank())
            .find(|&l| cur.contains(&simples[l]))
            .ok_or_else(|| Error::NotBiconvex(format!("no simple root among {} remaining", cur.len())))?;
        peeled.push(l);
        let s = AffineWeylElement { dim: d, mat: mats[l].clone(), word: vec![l] };
        let mut next = Vec::with_capacity(cur.len() - 1);
        for r in cur.iter().filter(|r| **r != simples[l]) {
            let img = s.apply_root(r);
            if !img.is_positive() {
                return Err(Error::NotBiconvex(format!("{r} reflects out of the positive roots")));
            }
            next.push(img);
        }
        cur = next;
    }
    peeled.reverse();
    let w = AffineWeylElement::from_word(rs, &peeled)?;
    if w.n_set(rs) != *n {
        return Err(Error::NotBiconvex("peeled element has a different inversion set".into()));
    }
    Ok(w)
}

fn layered_set(rs: &RootSystem, chain: &IdealChain) -> BTreeSet<AffineRoot> {
    let mut out = BTreeSet::new();
    for (k, t) in chain.terms.iter().enumerate() {
        for g in t.members().iter() {
            out.insert(AffineRoot::minus(rs.root(g), k as i64 + 1));
        }
    }
    out
}

/// `N(w_min) = ⋃_k (kδ − c^k)`.
pub fn w_min(rs: &RootSystem, ideal: &UpperIdeal) -> Result<AffineWeylElement> {
    word_from_biconvex(rs, &layered_set(rs, &ideal.powers(rs)))
        .map_err(|e| Error::Internal(format!("w_min construction failed: {e}")))
}

/// `N(w_max) = ⋃_k (kδ − c̃^k)`; defined for strictly positive ideals.
pub fn w_max(rs: &RootSystem, ideal: &UpperIdeal) -> Result<AffineWeylElement> {
    if !ideal.is_strictly_positive(rs) {
        return Err(Error::Domain("w_max needs an ideal without simple roots".into()));
    }
    let chain = ideal.sommers_chain(rs);
    debug_assert!(chain.terminated);
    word_from_biconvex(rs, &layered_set(rs, &chain))
        .map_err(|e| Error::Internal(format!("w_max construction failed: {e}")))
}

pub fn is_minimax(rs: &RootSystem, ideal: &UpperIdeal) -> Result<bool> {
    if !ideal.is_strictly_positive(rs) {
        return Ok(false);
    }
    Ok(w_min(rs, ideal)? == w_max(rs, ideal)?)
}

/// `{γ ∈ Δ+ : w(δ − γ) < 0}` for dominant `w`.
pub fn first_layer(rs: &RootSystem, w: &AffineWeylElement) -> Result<UpperIdeal> {
    if !w.is_dominant(rs) {
        return Err(Error::Domain("first layer needs a dominant element".into()));
    }
    let members: RootSet = (0..rs.num_positive_roots())
        .filter(|&g| !w.apply_root(&AffineRoot::minus(rs.root(g), 1)).is_positive())
        .collect();
    UpperIdeal::from_members(rs, members)
}

/// `z_c` from the factorization of `w_min`.
pub fn z_coordinate(rs: &RootSystem, ideal: &UpperIdeal) -> Result<RationalVector> {
    Ok(w_min(rs, ideal)?.factorize(rs).z)
}

/// `y_c` from the factorization of `w_max`.
pub fn y_coordinate(rs: &RootSystem, ideal: &UpperIdeal) -> Result<RationalVector> {
    Ok(w_max(rs, ideal)?.factorize(rs).z)
}

/// `(x,α) ≥ −1` for `α ∈ Π` and `(x,θ) ≤ 2`.
pub fn in_d_min(rs: &RootSystem, x: &RationalVector) -> bool {
    let y = rs.coweight_coords(x);
    y.iter().all(|&c| c >= int(-1)) && rs.inner(x, &rs.theta().to_rational()) <= int(2)
}

/// `(x,α) ≤ 1` for `α ∈ Π` and `(x,θ) ≥ 0`.
pub fn in_d_max(rs: &RootSystem, x: &RationalVector) -> bool {
    let y = rs.coweight_coords(x);
    y.iter().all(|&c| c <= int(1)) && rs.inner(x, &rs.theta().to_rational()) >= int(0)
}

/// Word letters `l` whose wall `H_{α_l}` contains `x`: `(x,α_i) = 0` for
/// `l = i ≥ 1`, `(x,θ) = 1` for `l = 0`.
pub fn walls_containing(rs: &RootSystem, x: &RationalVector) -> Vec<usize> {
    let y = rs.coweight_coords(x);
    let mut out = Vec::new();
    if rs.inner(x, &rs.theta().to_rational()) == int(1) {
        out.push(0);
    }
    out.extend((1..=rs.rank()).filter(|&l| y[l - 1].is_zero()));
    out
}

fn levi_from_walls(rs: &RootSystem, w: &AffineWeylElement) -> Result<ParabolicLabel> {
    let z = w.factorize(rs).z;
    let inv = w.inverse(rs);
    let mut levi = RootSet::EMPTY;
    for l in walls_containing(rs, &z) {
        let nu = inv.image_of_simple(rs, l);
        let i = (nu.level == 0)
            .then(|| rs.index_of(&nu.finite))
            .flatten()
            .filter(|&i| i < rs.rank())
            .ok_or_else(|| Error::Internal(format!("wall s{l} pulls back to {nu}, not a simple root")))?;
        levi.insert(i);
    }
    Ok(ParabolicLabel { levi })
}

/// Levi set read off the walls of the alcove that contain `z_c`.
pub fn normalizer_by_zwall(rs: &RootSystem, ideal: &UpperIdeal) -> Result<ParabolicLabel> {
    levi_from_walls(rs, &w_min(rs, ideal)?)
}

/// Same with `y_c` and `w_max`.
pub fn normalizer_by_ywall(rs: &RootSystem, ideal: &UpperIdeal) -> Result<ParabolicLabel> {
    levi_from_walls(rs, &w_max(rs, ideal)?)
}

/// `α ∈ Π′` iff `w_min(α)` is an affine simple root.
pub fn normalizer_by_wmin(rs: &RootSystem, ideal: &UpperIdeal) -> Result<ParabolicLabel> {
    let w = w_min(rs, ideal)?;
    Ok(simple_images_label(rs, &w))
}

/// `{α ∈ Π : w(α) ∈ Π̂}`.
pub fn simple_images_label(rs: &RootSystem, w: &AffineWeylElement) -> ParabolicLabel {
    let simples: Vec<AffineRoot> =
        (0..=rs.rank()).map(|l| AffineRoot::from_lattice(&simple_affine(rs, l))).collect();
    let levi = (1..=rs.rank())
        .filter(|&l| simples.contains(&w.image_of_simple(rs, l)))
        .map(|l| l - 1)
        .collect();
    ParabolicLabel { levi }
}

/// `ρ̂ − w^{-1}(ρ̂) = Σ N(w)`.
pub fn check_razn(rs: &RootSystem, w: &AffineWeylElement) -> bool {
    let rho = rho_hat(rs);
    let lhs = rho.sub(&w.inverse(rs).apply_vector(&rho));
    let rhs = w
        .n_set(rs)
        .iter()
        .fold(AffineVector::zero(rs.rank()), |acc, r| acc.add(&AffineVector::from_root(r)));
    lhs == rhs
}

/// Barycenter of the fundamental alcove: `(x,α_i) = 1/((p+1)c_i)`.
pub fn alcove_barycenter(rs: &RootSystem) -> RationalVector {
    let p = rs.rank() as i64;
    let y = RationalVector(rs.marks().iter().map(|&c| Rational::new(1, (p + 1) * c)).collect());
    rs.from_coweight_coords(&y)
}

/// Whether `H_{μ,k} = {(x,μ) = k}` strictly separates `x` and `y`.
pub fn separates(rs: &RootSystem, mu: &Root, k: i64, x: &RationalVector, y: &RationalVector) -> bool {
    let m = mu.to_rational();
    let a = rs.inner(x, &m) - int(k);
    let b = rs.inner(y, &m) - int(k);
    (a > Rational::zero() && b < Rational::zero()) || (a < Rational::zero() && b > Rational::zero())
}

pub fn random_word(rs: &RootSystem, rng: &mut impl Rng, len: usize) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(0..=rs.rank())).collect()
}

/// A dominant element reached by `steps` length-increasing moves that keep
/// dominance.
pub fn random_dominant(rs: &RootSystem, rng: &mut impl Rng, steps: usize) -> AffineWeylElement {
    let mut w = AffineWeylElement::identity(rs);
    for _ in 0..steps {
        let mut letters: Vec<usize> = (0..=rs.rank()).collect();
        letters.shuffle(rng);
        for l in letters {
            if w.image_of_simple(rs, l).is_positive() {
                let s = AffineWeylElement::simple_reflection(rs, l).expect("valid letter");
                let next = w.mul(rs, &s);
                if next.is_dominant(rs) {
                    w = next;
                    break;
                }
            }
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::enumerate_ideals;
    use crate::normalizers::normalizer;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    fn ideal(r: &RootSystem, gens: &[&[i64]]) -> UpperIdeal {
        UpperIdeal::close_upward(r, &gens.iter().map(|g| Root(g.to_vec())).collect::<Vec<_>>()).unwrap()
    }

    fn ar(c: &[i64], k: i64) -> AffineRoot {
        AffineRoot::new(Root(c.to_vec()), k)
    }

    #[test]
    fn reflections_square_to_one() {
        for s in ["A3", "B3", "C3", "G2", "F4"] {
            let r = rs(s);
            for l in 0..=r.rank() {
                let w = AffineWeylElement::from_word(&r, &[l, l]).unwrap();
                assert_eq!(w, AffineWeylElement::identity(&r));
                let sl = AffineWeylElement::simple_reflection(&r, l).unwrap();
                let a = sl.image_of_simple(&r, l);
                assert_eq!(a.finite, AffineRoot::from_lattice(&simple_affine(&r, l)).finite.neg());
                let p = r.rank();
                let mut delta = vec![0; p + 2];
                delta[p] = 1;
                assert_eq!(sl.apply(&delta), delta);
            }
        }
    }

    #[test]
    fn s0_moves_lambda() {
        let r = rs("A2");
        let s0 = AffineWeylElement::simple_reflection(&r, 0).unwrap();
        assert_eq!(s0.apply(&[0, 0, 0, 1]), vec![1, 1, -1, 1]);
    }

    #[test]
    fn inversion_sets_of_simple_reflections() {
        let r = rs("G2");
        assert!(AffineWeylElement::identity(&r).n_set(&r).is_empty());
        for l in 0..=2 {
            let s = AffineWeylElement::simple_reflection(&r, l).unwrap();
            let n = s.n_set(&r);
            assert_eq!(n.len(), 1);
            assert_eq!(n.into_iter().next().unwrap(), AffineRoot::from_lattice(&simple_affine(&r, l)));
        }
    }

    #[test]
    fn g2_example() {
        let r = rs("G2");
        let c = ideal(&r, &[&[2, 1]]);
        let wmin = w_min(&r, &c).unwrap();
        assert_eq!(wmin, AffineWeylElement::from_word(&r, &[1, 2, 0]).unwrap());
        assert_eq!(wmin.image_of_simple(&r, 1), ar(&[2, 1], 0));
        assert_eq!(wmin.image_of_simple(&r, 2), ar(&[-3, -2], 1));
        assert_eq!(wmin.n_set(&r).len(), 3);
        let wmax = w_max(&r, &c).unwrap();
        assert_eq!(wmax, AffineWeylElement::from_word(&r, &[0, 2, 1, 2, 0]).unwrap());
        assert_eq!(wmax.image_of_simple(&r, 1), ar(&[-1, -1], 1));
        assert_eq!(wmax.image_of_simple(&r, 2), ar(&[0, 1], 0));
        assert!(!is_minimax(&r, &c).unwrap());
        assert_eq!(normalizer_by_wmin(&r, &c).unwrap(), ParabolicLabel::minimal(1));
    }

    #[test]
    fn sl5_example() {
        let r = rs("A4");
        let c = ideal(&r, &[&[1, 1, 0, 0], &[0, 1, 1, 1]]);
        let w = w_min(&r, &c).unwrap();
        assert_eq!(w.image_of_simple(&r, 1), ar(&[-1, -1, 0, 0], 1));
        assert_eq!(w.image_of_simple(&r, 2), ar(&[1, 1, 1, 0], 0));
        assert_eq!(w.image_of_simple(&r, 3), ar(&[0, 0, 0, 1], 0));
        assert_eq!(w.image_of_simple(&r, 4), ar(&[0, -1, -1, -1], 1));
        let s2 = AffineWeylElement::simple_reflection(&r, 2).unwrap();
        assert_eq!(w_max(&r, &c).unwrap(), s2.mul(&r, &w));
    }

    #[test]
    fn f4_example() {
        let r = rs("F4");
        let c = ideal(&r, &[&[0, 2, 2, 1], &[2, 2, 1, 0]]);
        let w = w_min(&r, &c).unwrap();
        assert_eq!(w.length(), 12);
        let expected = AffineWeylElement::from_word(&r, &[0, 4, 3, 2, 0, 4, 3, 1, 2, 3, 4, 0]).unwrap();
        assert_eq!(w, expected);
        assert!(is_minimax(&r, &c).unwrap());
        let z = z_coordinate(&r, &c).unwrap();
        assert_eq!(walls_containing(&r, &z).len(), 2);
        assert_eq!(normalizer_by_zwall(&r, &c).unwrap(), ParabolicLabel::from_indices([1, 3]));
    }

    #[test]
    fn empty_ideal() {
        let r = rs("B3");
        let e = UpperIdeal::empty(&r);
        assert_eq!(w_min(&r, &e).unwrap(), AffineWeylElement::identity(&r));
        assert_eq!(w_max(&r, &e).unwrap(), AffineWeylElement::identity(&r));
        assert!(z_coordinate(&r, &e).unwrap().is_zero());
        assert_eq!(normalizer_by_zwall(&r, &e).unwrap(), ParabolicLabel::whole(&r));
        assert!(w_max(&r, &UpperIdeal::full(&r)).is_err());
    }

    #[test]
    fn translation_factorizes() {
        let r = rs("A2");
        let t = AffineWeylElement::translation(&r, &r.coroot(0)).unwrap();
        let f = t.factorize(&r);
        assert_eq!(f.z, r.coroot(0));
        assert_eq!(f.v, vec![vec![1, 0], vec![0, 1]]);
        assert!(AffineWeylElement::translation(&r, &r.fundamental_coweight(0)).is_err());
        assert!(AffineWeylElement::identity(&r).factorize(&r).z.is_zero());
    }

    #[test]
    fn word_roundtrip_and_razn() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for s in ["A3", "C3", "G2", "F4"] {
            let r = rs(s);
            for _ in 0..100 {
                let len = rng.gen_range(0..=12);
                let w = AffineWeylElement::from_word(&r, &random_word(&r, &mut rng, len)).unwrap();
                let n = w.n_set(&r);
                assert_eq!(n.len(), w.length(), "{s}");
                assert_eq!(word_from_biconvex(&r, &n).unwrap(), w);
                assert!(check_razn(&r, &w));
                let f = w.factorize(&r);
                assert_eq!(f.reassemble(&r).unwrap(), w.matrix(), "{s}");
                assert!(r.in_coroot_lattice(&f.z));
            }
        }
    }

    #[test]
    fn rejects_non_biconvex() {
        let r = rs("A2");
        let n: BTreeSet<AffineRoot> = [ar(&[1, 0], 0), ar(&[0, 1], 0)].into_iter().collect();
        assert!(word_from_biconvex(&r, &n).is_err());
        let n: BTreeSet<AffineRoot> = [ar(&[1, 1], 0)].into_iter().collect();
        assert!(word_from_biconvex(&r, &n).is_err());
    }

    #[test]
    fn rho_hat_pairs_to_one() {
        for s in ["A3", "B4", "G2", "F4"] {
            let r = rs(s);
            let rho = rho_hat(&r);
            for l in 0..=r.rank() {
                let a = AffineVector::from_root(&AffineRoot::from_lattice(&simple_affine(&r, l)));
                let aa = affine_inner(&r, &a, &a);
                assert_eq!(int(2) * affine_inner(&r, &rho, &a) / aa, Rational::one(), "{s}");
            }
        }
    }

    #[test]
    fn minimal_properties_g2() {
        let r = rs("G2");
        for c in enumerate_ideals(&r) {
            let w = w_min(&r, &c).unwrap();
            assert!(w.is_dominant(&r) && w.satisfies_min(&r));
            assert_eq!(first_layer(&r, &w).unwrap(), c);
            assert_eq!(normalizer_by_wmin(&r, &c).unwrap(), normalizer(&r, &c));
            assert!(in_d_min(&r, &z_coordinate(&r, &c).unwrap()));
        }
    }
}
