//! One line per acceptance criterion. Run with `cargo test --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use adnil::affine::{self, normalizer_by_wmin, w_max, w_min};
use adnil::counting::{
    binom, catalan, dir, gf_count, lattice_count, motzkin, riordan, Lattice, Simplex, Target,
};
use adnil::ideals::enumerate_ideals;
use adnil::normalizers::{normalizer, normalizer_by_weight};
use adnil::verify::{self, Check, Options};
use adnil::{AffineRoot, CartanType, Family, ParabolicLabel, Root, RootSystem, UpperIdeal};

type Outcome = Result<String, String>;

fn rs(s: &str) -> RootSystem {
    RootSystem::build(s.parse().unwrap()).unwrap()
}

fn ideal(r: &RootSystem, gens: &[&[i64]]) -> UpperIdeal {
    UpperIdeal::close_upward(r, &gens.iter().map(|g| Root(g.to_vec())).collect::<Vec<_>>()).unwrap()
}

fn expect(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn all_pass(label: &str, checks: &[Check]) -> Result<usize, String> {
    for c in checks {
        if !c.passed() {
            return Err(format!(
                "{label} {}: {} of {} cases failed, e.g. {}",
                c.name,
                c.failures,
                c.cases,
                c.counterexample.as_deref().unwrap_or("?")
            ));
        }
    }
    Ok(checks.iter().map(|c| c.cases as usize).sum())
}

const SWEEP: [&str; 12] = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "C2", "C3", "D4", "G2", "F4"];

fn table() -> Outcome {
    let cols = verify::table7().map_err(|e| e.to_string())?;
    let bad: Vec<String> = cols.iter().flat_map(|c| c.mismatches()).collect();
    expect(bad.is_empty(), || bad.join("; "))?;
    let e6 = cols.iter().find(|c| c.cartan_type == "E6").unwrap();
    Ok(cols
        .iter()
        .map(|c| format!("{} {}/{}", c.algebra, c.minimax, c.borel))
        .chain([format!("E6 gf {}", e6.borel_gf)])
        .collect::<Vec<_>>()
        .join(", "))
}

fn worked_examples() -> Outcome {
    let a4 = rs("A4");
    let c = ideal(&a4, &[&[1, 1, 0, 0], &[0, 1, 1, 1]]);
    expect(normalizer(&a4, &c) == ParabolicLabel::minimal(2), || "sl5 normalizer".into())?;
    let w = c.weight(&a4);
    let pairing: Vec<i64> = (0..4).map(|i| a4.pairing_int(w.coeffs(), i)).collect();
    expect(pairing == [2, 2, 0, 1], || format!("sl5 pairing {pairing:?}"))?;
    expect(c.powers(&a4).term(2).is_empty(), || "sl5 c^2".into())?;
    let s2 = *c.sommers_chain(&a4).term(2);
    expect(s2.len() == 1 && s2.contains(a4.theta_index()), || "sl5 complement chain".into())?;

    let a6 = rs("A6");
    let c1 = ideal(&a6, &[&[1, 1, 0, 0, 0, 0], &[0, 0, 1, 1, 1, 0], &[0, 0, 0, 1, 1, 1]]);
    let c2 = ideal(&a6, &[&[1, 1, 1, 0, 0, 0], &[0, 1, 1, 1, 0, 0], &[0, 0, 0, 1, 1, 0], &[0, 0, 0, 0, 1, 1]]);
    let meet = c1.meet(&a6, &c2).map_err(|e| e.to_string())?;
    let join = c1.join(&a6, &c2).map_err(|e| e.to_string())?;
    expect(normalizer(&a6, &c1) == ParabolicLabel::borel(), || "sl7 c1".into())?;
    expect(normalizer(&a6, &c2) == ParabolicLabel::borel(), || "sl7 c2".into())?;
    expect(normalizer(&a6, &meet) == ParabolicLabel::minimal(1), || "sl7 meet".into())?;
    expect(normalizer(&a6, &join) == ParabolicLabel::minimal(2), || "sl7 join".into())?;

    let f4 = rs("F4");
    let c = ideal(&f4, &[&[0, 2, 2, 1], &[2, 2, 1, 0]]);
    expect(c.weight(&f4) == Root(vec![16, 28, 20, 10]), || format!("F4 weight {}", c.weight(&f4)))?;
    expect(normalizer_by_weight(&f4, &c) == ParabolicLabel::from_indices([1, 3]), || "F4 normalizer".into())?;
    let w = w_min(&f4, &c).map_err(|e| e.to_string())?;
    expect(w.length() == 12, || format!("F4 length {}", w.length()))?;
    expect(affine::is_minimax(&f4, &c) == Ok(true), || "F4 minimax".into())?;

    let g2 = rs("G2");
    let c = ideal(&g2, &[&[2, 1]]);
    let alpha0 = AffineRoot::new(Root(vec![-3, -2]), 1);
    let wmin = w_min(&g2, &c).map_err(|e| e.to_string())?;
    let wmax = w_max(&g2, &c).map_err(|e| e.to_string())?;
    expect(wmin.image_of_simple(&g2, 2) == alpha0, || "G2 w_min image".into())?;
    expect(wmax.image_of_simple(&g2, 2) == AffineRoot::new(Root(vec![0, 1]), 0), || "G2 w_max image".into())?;
    expect(normalizer_by_wmin(&g2, &c) == Ok(ParabolicLabel::minimal(1)), || "G2 normalizer".into())?;
    Ok("sl5, sl7, F4, G2".into())
}

fn counts(r: &RootSystem) -> (usize, usize, usize) {
    let ideals = enumerate_ideals(r);
    let borel: Vec<&UpperIdeal> = ideals.iter().filter(|c| normalizer(r, c) == ParabolicLabel::borel()).collect();
    let borel0 = borel.iter().filter(|c| c.is_strictly_positive(r)).count();
    (ideals.len(), borel.len(), borel0)
}

fn big(n: usize) -> num::BigInt {
    n.into()
}

fn cardinalities() -> Outcome {
    for n in 1..=6usize {
        let ct = CartanType::new(Family::A, n).unwrap();
        let (all, b, b0) = counts(&RootSystem::build(ct).unwrap());
        let n = n as i64;
        expect(big(all) == catalan(n + 1), || format!("#AD(A{n}) = {all}"))?;
        expect(big(b) == motzkin(n), || format!("#AD{{b}}(A{n}) = {b}"))?;
        expect(big(b0) == riordan(n), || format!("#AD0{{b}}(A{n}) = {b0}"))?;
        expect(gf_count(ct, Target::All).ok() == Some(motzkin(n)), || format!("gf A{n}"))?;
        expect(gf_count(ct, Target::StrictlyPositive).ok() == Some(riordan(n)), || format!("gf0 A{n}"))?;
    }
    for n in 2..=4usize {
        let ct = CartanType::new(Family::C, n).unwrap();
        let r = RootSystem::build(ct).unwrap();
        let (all, b, b0) = counts(&r);
        let m = n as i64;
        let want0 = num::BigInt::from(m - 1) * motzkin(m - 2);
        expect(big(all) == binom(2 * m, m), || format!("#AD(C{n}) = {all}"))?;
        expect(big(b) == dir(m), || format!("#AD{{b}}(C{n}) = {b}"))?;
        expect(big(b0) == want0, || format!("#AD0{{b}}(C{n}) = {b0}"))?;
        expect(gf_count(ct, Target::All).ok() == Some(dir(m)), || format!("gf C{n}"))?;
        expect(gf_count(ct, Target::StrictlyPositive).ok() == Some(want0.clone()), || format!("gf0 C{n}"))?;
        let lb = lattice_count(&r, Simplex::Min, true, Lattice::Coroot);
        let lb0 = lattice_count(&r, Simplex::Max, true, Lattice::Coroot);
        expect(big(lb) == dir(m) && big(lb0) == want0, || format!("lattice C{n}: {lb}/{lb0}"))?;
    }
    Ok("A1-A6 by enumeration and gf; C2-C4 by enumeration, gf and lattice".into())
}

fn five_way() -> Outcome {
    let mut cases = 0;
    for ty in SWEEP {
        cases += all_pass(ty, &verify::five_way(&rs(ty)))?;
    }
    Ok(format!("{cases} oracle comparisons over {} types", SWEEP.len()))
}

fn bijections() -> Outcome {
    let mut cases = 0;
    for ty in SWEEP {
        cases += all_pass(ty, &verify::bijections(&rs(ty)))?;
    }
    let mut types = 0;
    for fam in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        for p in 1..=8 {
            let Ok(ct) = CartanType::new(fam, p) else { continue };
            let Ok(r) = RootSystem::build(ct) else { continue };
            cases += all_pass(&ct.to_string(), &verify::lattice_relations(&r))?;
            types += 1;
        }
    }
    Ok(format!("{cases} cases; factor-of-f relation on {types} types"))
}

fn properties() -> Outcome {
    let opts = Options { seed: 2024, random_words: 1000, ..Options::default() };
    let mut cases = 0;
    for ty in SWEEP {
        let r = rs(ty);
        cases += all_pass(ty, &verify::random_word_properties(&r, &opts))?;
        cases += all_pass(ty, &verify::dominant_properties(&r, &opts))?;
        cases += all_pass(ty, &verify::extremal_elements(&r))?;
        cases += all_pass(ty, &verify::weight_properties(&r))?;
    }
    Ok(format!("{cases} cases, {} random words per type", opts.random_words))
}

fn identities() -> Outcome {
    let checks = verify::identities(12).map_err(|e| e.to_string())?;
    let cases = all_pass("identities", &checks)?;
    Ok(format!("{} identities, {cases} instances", checks.len()))
}

fn type_ac() -> Outcome {
    let mut cases = 0;
    for n in 1..=5 {
        cases += all_pass(&format!("A{n}"), &verify::type_a_structure(n))?;
    }
    for n in 2..=4 {
        cases += all_pass(&format!("C{n}"), &verify::type_c_structure(n))?;
    }
    Ok(format!("{cases} cases"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("comparison table", table),
        ("worked examples", worked_examples),
        ("cardinalities", cardinalities),
        ("five-way normalizer oracle", five_way),
        ("coordinate bijections and factor-of-f", bijections),
        ("property suites", properties),
        ("identities up to n = 12", identities),
        ("type A/C structure", type_ac),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
