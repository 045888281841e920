//! Dominant regions of the Shi arrangement and their walls.
//!
//! Points are written in fundamental-coweight coordinates
//! `y_i = (x, α_i)`, so `(x, γ) = Σ_j γ_j y_j` for a root `γ`. A hyperplane
//! `H_{α,0}` is a wall of a region when the region's closure meets it in a
//! relatively open set of codimension one, i.e. when the system with
//! `(x,α) = 0` in place of `(x,α) > 0` is feasible.

use std::collections::HashMap;
use std::sync::Mutex;

use num::BigRational;

use crate::affine::{alcove_barycenter, AffineWeylElement};
use crate::bitset::RootSet;
use crate::ideals::UpperIdeal;
use crate::lp::{big, LinearConstraintSystem, Relation};
use crate::rational::int;
use crate::rootsys::{CartanType, RootSystem};
use crate::{Error, Result};

fn root_rows(rs: &RootSystem, ideal: &UpperIdeal, sys: &mut LinearConstraintSystem) {
    for g in 0..rs.num_positive_roots() {
        let normal = rs.root(g).coeffs().iter().map(|&c| int(c)).collect();
        let rel = if ideal.contains(g) { Relation::Gt } else { Relation::Lt };
        sys.push(normal, rel, int(1));
    }
}

fn unit(p: usize, i: usize) -> Vec<crate::Rational> {
    (0..p).map(|j| int(i64::from(i == j))).collect()
}

/// `R_c`: `(x,α) > 0` on `Π`, `(x,γ) > 1` on `I`, `(x,γ) < 1` off `I`.
pub fn region_of(rs: &RootSystem, ideal: &UpperIdeal) -> LinearConstraintSystem {
    let p = rs.rank();
    let mut sys = LinearConstraintSystem::new(p);
    for i in 0..p {
        sys.push(unit(p, i), Relation::Gt, int(0));
    }
    root_rows(rs, ideal, &mut sys);
    sys
}

/// Whether `H_{α_i,0}` is a wall of `R_c` (0-based `i`).
pub fn is_wall(rs: &RootSystem, ideal: &UpperIdeal, i: usize) -> Result<bool> {
    let p = rs.rank();
    if i >= p {
        return Err(Error::Argument(format!("simple root index {} out of range", i + 1)));
    }
    let mut sys = LinearConstraintSystem::new(p);
    for j in 0..p {
        let rel = if j == i { Relation::Eq } else { Relation::Gt };
        sys.push(unit(p, j), rel, int(0));
    }
    root_rows(rs, ideal, &mut sys);
    Ok(sys.feasible().is_some())
}

/// Levi set from the walls of `R_c`.
pub fn normalizer_by_walls(rs: &RootSystem, ideal: &UpperIdeal) -> crate::normalizers::ParabolicLabel {
    let levi: RootSet = (0..rs.rank()).filter(|&i| is_wall(rs, ideal, i).unwrap_or(false)).collect();
    crate::normalizers::ParabolicLabel { levi }
}

/// Whether the regions of two ideals share a point.
pub fn regions_intersect(rs: &RootSystem, a: &UpperIdeal, b: &UpperIdeal) -> bool {
    let mut sys = region_of(rs, a);
    sys.extend(&region_of(rs, b));
    sys.feasible().is_some()
}

/// Memoized interior witnesses of `R_c`.
type Witnesses = HashMap<(CartanType, RootSet), Option<Vec<BigRational>>>;

#[derive(Default)]
pub struct RegionCache {
    points: Mutex<Witnesses>,
}

impl RegionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn witness(&self, rs: &RootSystem, ideal: &UpperIdeal) -> Option<Vec<BigRational>> {
        let key = (rs.cartan_type(), ideal.members());
        if let Some(hit) = self.points.lock().expect("not poisoned").get(&key) {
            return hit.clone();
        }
        let w = region_of(rs, ideal).feasible();
        self.points.lock().expect("not poisoned").insert(key, w.clone());
        w
    }

    pub fn len(&self) -> usize {
        self.points.lock().expect("not poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Whether `w^{-1} ∗ x_0` lies in `R_c`, with `x_0` the alcove barycenter.
pub fn alcove_membership(rs: &RootSystem, w: &AffineWeylElement, ideal: &UpperIdeal) -> Result<bool> {
    if !w.is_dominant(rs) {
        return Err(Error::Domain("alcove test needs a dominant element".into()));
    }
    let x = w.inverse(rs).act_affinely(rs, &alcove_barycenter(rs));
    let y: Vec<BigRational> = rs.coweight_coords(&x).iter().map(big).collect();
    Ok(region_of(rs, ideal).satisfied_by(&y))
}
