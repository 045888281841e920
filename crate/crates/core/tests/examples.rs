use std::collections::BTreeSet;

use adnil::affine::{is_minimax, normalizer_by_wmin, normalizer_by_ywall, normalizer_by_zwall, w_max, w_min};
use adnil::counting::{gf_count, lattice_count, Lattice, Simplex, Target};
use adnil::ideals::enumerate_ideals;
use adnil::normalizers::{fiber, fiber_extrema, normalizer, normalizer_by_weight, ParabolicLabel};
use adnil::poset::quotient_poset;
use adnil::shi::normalizer_by_walls;
use adnil::{AffineWeylElement, Root, RootSystem, UpperIdeal};

fn rs(s: &str) -> RootSystem {
    RootSystem::build(s.parse().unwrap()).unwrap()
}

fn ideal(r: &RootSystem, gens: &[&[i64]]) -> UpperIdeal {
    UpperIdeal::close_upward(r, &gens.iter().map(|g| Root(g.to_vec())).collect::<Vec<_>>()).unwrap()
}

fn every_normalizer(r: &RootSystem, c: &UpperIdeal) -> Vec<ParabolicLabel> {
    let mut out = vec![
        normalizer(r, c),
        normalizer_by_weight(r, c),
        normalizer_by_wmin(r, c).unwrap(),
        normalizer_by_zwall(r, c).unwrap(),
        normalizer_by_walls(r, c),
    ];
    // `w_max` exists only for ideals without simple roots.
    if c.is_strictly_positive(r) {
        out.push(normalizer_by_ywall(r, c).unwrap());
    }
    out
}

#[test]
fn g2_weights_in_fundamental_coordinates() {
    let g2 = rs("G2");
    let got: BTreeSet<(i64, i64)> = enumerate_ideals(&g2)
        .iter()
        .map(|c| {
            let w = c.weight(&g2);
            (g2.pairing_int(w.coeffs(), 0), g2.pairing_int(w.coeffs(), 1))
        })
        .collect();
    let want: BTreeSet<(i64, i64)> = [(0, 0), (0, 1), (3, 0), (4, 0), (3, 1), (5, 0), (0, 3), (2, 2)].into();
    assert_eq!(got, want);
}

#[test]
fn so8_borel_fiber_through_every_oracle() {
    let d4 = rs("D4");
    let members = fiber(&d4, &ParabolicLabel::borel());
    assert_eq!(members.len(), 11);
    for c in &members {
        assert!(every_normalizer(&d4, c).iter().all(|p| *p == ParabolicLabel::borel()));
    }
    let (_, minimal) = fiber_extrema(&members);
    assert_eq!(minimal.len(), 3);
    assert!(minimal.contains(&ideal(&d4, &[&[1, 1, 0, 0], &[0, 1, 1, 1]])));
}

#[test]
fn worked_ideals_agree_across_oracles() {
    let cases: [(&str, &[&[i64]], ParabolicLabel); 4] = [
        ("A4", &[&[1, 1, 0, 0], &[0, 1, 1, 1]], ParabolicLabel::minimal(2)),
        ("F4", &[&[0, 2, 2, 1], &[2, 2, 1, 0]], ParabolicLabel::from_indices([1, 3])),
        ("G2", &[&[2, 1]], ParabolicLabel::minimal(1)),
        ("A6", &[&[1, 1, 1, 0, 0, 0], &[0, 1, 1, 1, 0, 0], &[0, 0, 0, 1, 1, 0], &[0, 0, 0, 0, 1, 1]], ParabolicLabel::borel()),
    ];
    for (ty, gens, want) in cases {
        let r = rs(ty);
        let c = ideal(&r, gens);
        for p in every_normalizer(&r, &c) {
            assert_eq!(p, want, "{ty}");
        }
    }
}

#[test]
fn sl5_extremal_elements() {
    let a4 = rs("A4");
    let c = ideal(&a4, &[&[1, 1, 0, 0], &[0, 1, 1, 1]]);
    let wmin = w_min(&a4, &c).unwrap();
    let s2 = AffineWeylElement::simple_reflection(&a4, 2).unwrap();
    assert_eq!(w_max(&a4, &c).unwrap(), s2.mul(&a4, &wmin));
    assert!(!is_minimax(&a4, &c).unwrap());
    assert!(c.is_strictly_positive(&a4) && c.is_abelian(&a4));
}

#[test]
fn quotient_posets_count_ideals_stable_under_a_simple_root() {
    for ty in ["A2", "G2", "B3"] {
        let r = rs(ty);
        let ideals = enumerate_ideals(&r);
        for i in 0..r.rank() {
            let q = quotient_poset(&r, i).unwrap();
            let stable = ideals.iter().filter(|c| normalizer(&r, c).contains(i)).count();
            assert_eq!(q.poset.count_upper_ideals() as usize, stable, "{ty} alpha_{}", i + 1);
        }
    }
    let g2 = rs("G2");
    let counts: Vec<u64> = (0..2).map(|i| quotient_poset(&g2, i).unwrap().poset.count_upper_ideals()).collect();
    // Classes by the other coefficient form chains of lengths 2 and 3.
    assert_eq!(counts, [3, 4]);
}

#[test]
fn exceptional_borel_counts() {
    for (ty, all, strict) in [("E6", 111u32, 53u32), ("F4", 19, 11), ("G2", 2, 1)] {
        let ct = ty.parse().unwrap();
        assert_eq!(gf_count(ct, Target::All).unwrap(), all.into(), "{ty}");
        assert_eq!(gf_count(ct, Target::StrictlyPositive).unwrap(), strict.into(), "{ty}");
        let r = rs(ty);
        assert_eq!(lattice_count(&r, Simplex::Min, true, Lattice::Coroot), all as usize, "{ty}");
        assert_eq!(lattice_count(&r, Simplex::Max, true, Lattice::Coroot), strict as usize, "{ty}");
    }
}
