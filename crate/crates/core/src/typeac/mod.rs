//! Explicit combinatorics for `sl_{n+1}` and `sp_{2n}`.
//!
//! Parabolics here are named by `E ⊆ [n]`, the 1-based indices of the
//! simple roots outside the Levi subalgebra: `p(E) = p(Π ∖ {α_l : l ∈ E})`.

pub mod type_a;
pub mod type_c;

use crate::normalizers::ParabolicLabel;

pub use type_a::FerrersIdeal;
pub use type_c::{SignedWord, SymplecticIdeal};

/// `p(E)` as a Levi-set label.
pub fn label_from_e(n: usize, e: &[usize]) -> ParabolicLabel {
    ParabolicLabel::from_indices((1..=n).filter(|l| !e.contains(l)).map(|l| l - 1))
}

/// Inverse of [`label_from_e`].
pub fn e_from_label(n: usize, p: &ParabolicLabel) -> Vec<usize> {
    (1..=n).filter(|&l| !p.contains(l - 1)).collect()
}

/// Sorted union of two sorted index lists.
pub(crate) fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut u: Vec<usize> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    u.dedup();
    u
}

/// Elementwise `a_i ≤ b_i` for sequences of equal length.
pub(crate) fn dominated(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}
