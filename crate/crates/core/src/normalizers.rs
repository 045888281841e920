//! Standard parabolic normalizers of ad-nilpotent ideals.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::bitset::RootSet;
use crate::ideals::{enumerate_ideals, UpperIdeal};
use crate::rootsys::RootSystem;

/// The standard parabolic `p(Π′)`, stored by its Levi set `Π′ ⊆ Π`
/// (0-based simple-root indices).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ParabolicLabel {
    pub levi: RootSet,
}

impl ParabolicLabel {
    /// `b`, the Borel subalgebra.
    pub fn borel() -> Self {
        ParabolicLabel { levi: RootSet::EMPTY }
    }

    /// `g` itself.
    pub fn whole(rs: &RootSystem) -> Self {
        ParabolicLabel { levi: rs.simple_set() }
    }

    /// `p(α_i)`, the minimal parabolic.
    pub fn minimal(i: usize) -> Self {
        ParabolicLabel { levi: RootSet::singleton(i) }
    }

    /// `p_⟨i⟩`, the maximal parabolic with Levi `Π ∖ {α_i}`.
    pub fn maximal(rs: &RootSystem, i: usize) -> Self {
        let mut levi = rs.simple_set();
        levi.remove(i);
        ParabolicLabel { levi }
    }

    pub fn from_indices(idx: impl IntoIterator<Item = usize>) -> Self {
        ParabolicLabel { levi: idx.into_iter().collect() }
    }

    pub fn semisimple_rank(&self) -> usize {
        self.levi.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.levi.contains(i)
    }

    /// 1-based Levi indices.
    pub fn levi_one_based(&self) -> Vec<usize> {
        self.levi.iter().map(|i| i + 1).collect()
    }

    pub fn display(&self, rs: &RootSystem) -> String {
        if self.levi.is_empty() {
            "b".to_string()
        } else if self.levi == rs.simple_set() {
            "g".to_string()
        } else {
            let parts: Vec<String> = self.levi.iter().map(|i| format!("a{}", i + 1)).collect();
            format!("p({})", parts.join(","))
        }
    }
}

impl fmt::Debug for ParabolicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "levi{:?}", self.levi_one_based())
    }
}

/// `α ∈ Π′` iff no generator `γ` has `γ − α ∈ Δ+ ∪ {0}`.
pub fn normalizer(rs: &RootSystem, ideal: &UpperIdeal) -> ParabolicLabel {
    let gens = ideal.generators();
    let levi = (0..rs.rank())
        .filter(|&i| gens.iter().all(|g| g != i && rs.minus_simple(g, i).is_none()))
        .collect();
    ParabolicLabel { levi }
}

/// `α ∈ Π′` iff `(|c|, α) = 0`.
pub fn normalizer_by_weight(rs: &RootSystem, ideal: &UpperIdeal) -> ParabolicLabel {
    let w = ideal.weight(rs);
    let levi = (0..rs.rank())
        .filter(|&i| rs.inner_simple_int(w.coeffs(), i).is_zero())
        .collect();
    ParabolicLabel { levi }
}

/// Roots with a nonzero coefficient outside the Levi set.
pub fn nilradical(rs: &RootSystem, p: &ParabolicLabel) -> UpperIdeal {
    let members = (0..rs.num_positive_roots())
        .filter(|&r| {
            rs.root(r).coeffs().iter().enumerate().any(|(i, &c)| c != 0 && !p.contains(i))
        })
        .collect();
    UpperIdeal::from_members(rs, members).expect("nilradical is an upper ideal")
}

/// The partition `AD = ⊔_P AD{P}`.
pub fn fibers(rs: &RootSystem) -> BTreeMap<ParabolicLabel, Vec<UpperIdeal>> {
    let mut out: BTreeMap<ParabolicLabel, Vec<UpperIdeal>> = BTreeMap::new();
    for i in enumerate_ideals(rs) {
        out.entry(normalizer(rs, &i)).or_default().push(i);
    }
    out
}

/// `AD{P}`.
pub fn fiber(rs: &RootSystem, p: &ParabolicLabel) -> Vec<UpperIdeal> {
    enumerate_ideals(rs).into_iter().filter(|i| normalizer(rs, i) == *p).collect()
}

/// Inclusion-maximal and inclusion-minimal members of a fiber.
pub fn fiber_extrema(members: &[UpperIdeal]) -> (Vec<UpperIdeal>, Vec<UpperIdeal>) {
    let sub = |a: &UpperIdeal, b: &UpperIdeal| a.members().is_subset(b.members()) && a != b;
    let maxima = members.iter().filter(|a| !members.iter().any(|b| sub(a, b))).copied().collect();
    let minima = members.iter().filter(|a| !members.iter().any(|b| sub(b, a))).copied().collect();
    (maxima, minima)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Root;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    fn ideal(r: &RootSystem, gens: &[&[i64]]) -> UpperIdeal {
        UpperIdeal::close_upward(r, &gens.iter().map(|g| Root(g.to_vec())).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn trivial_cases() {
        let a = rs("A3");
        assert_eq!(normalizer(&a, &UpperIdeal::empty(&a)), ParabolicLabel::whole(&a));
        assert_eq!(normalizer(&a, &UpperIdeal::full(&a)), ParabolicLabel::borel());
        assert_eq!(normalizer_by_weight(&a, &UpperIdeal::empty(&a)), ParabolicLabel::whole(&a));
        assert!(nilradical(&a, &ParabolicLabel::whole(&a)).is_empty());
        assert_eq!(nilradical(&a, &ParabolicLabel::borel()), UpperIdeal::full(&a));
    }

    #[test]
    fn sl5_example() {
        let a = rs("A4");
        let c = ideal(&a, &[&[1, 1, 0, 0], &[0, 1, 1, 1]]);
        assert_eq!(normalizer(&a, &c), ParabolicLabel::minimal(2));
        assert_eq!(normalizer_by_weight(&a, &c), ParabolicLabel::minimal(2));
        let w = c.weight(&a);
        let pair: Vec<i64> = (0..4).map(|i| a.pairing_int(w.coeffs(), i)).collect();
        assert_eq!(pair, vec![2, 2, 0, 1]);
        assert_eq!(nilradical(&a, &ParabolicLabel::minimal(2)).len(), 9);
    }

    #[test]
    fn sl7_example() {
        let a = rs("A6");
        let c1 = ideal(&a, &[&[1, 1, 0, 0, 0, 0], &[0, 0, 1, 1, 1, 0], &[0, 0, 0, 1, 1, 1]]);
        let c2 = ideal(&a, &[&[1, 1, 1, 0, 0, 0], &[0, 1, 1, 1, 0, 0], &[0, 0, 0, 1, 1, 0], &[0, 0, 0, 0, 1, 1]]);
        assert_eq!(normalizer(&a, &c1), ParabolicLabel::borel());
        assert_eq!(normalizer_by_weight(&a, &c2), ParabolicLabel::borel());
        assert_eq!(normalizer(&a, &c1.meet(&a, &c2).unwrap()), ParabolicLabel::minimal(1));
        assert_eq!(normalizer(&a, &c1.join(&a, &c2).unwrap()), ParabolicLabel::minimal(2));
    }

    #[test]
    fn f4_example() {
        let f = rs("F4");
        let c = ideal(&f, &[&[0, 2, 2, 1], &[2, 2, 1, 0]]);
        assert_eq!(normalizer_by_weight(&f, &c), ParabolicLabel::from_indices([1, 3]));
        assert_eq!(normalizer(&f, &c), ParabolicLabel::from_indices([1, 3]));
    }

    #[test]
    fn g2_borel_fiber_has_two_ideals() {
        assert_eq!(fiber(&rs("G2"), &ParabolicLabel::borel()).len(), 2);
    }

    #[test]
    fn so8_borel_fiber() {
        let d = rs("D4");
        let f = fiber(&d, &ParabolicLabel::borel());
        assert_eq!(f.len(), 11);
        let (max, min) = fiber_extrema(&f);
        assert_eq!(max, vec![UpperIdeal::full(&d)]);
        assert_eq!(min.len(), 3);
        let target = ideal(&d, &[&[1, 1, 0, 0], &[0, 1, 1, 1]]);
        assert!(min.contains(&target));
    }

    #[test]
    fn maximal_parabolic_fibers_are_chains() {
        for s in ["B3", "C3", "D4", "G2", "F4"] {
            let r = rs(s);
            for i in 0..r.rank() {
                let p = ParabolicLabel::maximal(&r, i);
                let mut f = fiber(&r, &p);
                assert_eq!(f.len() as i64, r.marks()[i], "{s} {i}");
                f.sort_by_key(|x| x.len());
                assert!(f.windows(2).all(|w| w[0].members().is_subset(w[1].members())));
                assert_eq!(*f.last().unwrap(), nilradical(&r, &p));
            }
        }
    }

    #[test]
    fn labels_display() {
        let a = rs("A3");
        assert_eq!(ParabolicLabel::borel().display(&a), "b");
        assert_eq!(ParabolicLabel::whole(&a).display(&a), "g");
        assert_eq!(ParabolicLabel::from_indices([0, 2]).display(&a), "p(a1,a3)");
        assert_eq!(ParabolicLabel::from_indices([0, 2]).semisimple_rank(), 2);
    }
}
