mod common;

use common::*;
use pgc_core::analysis::Analysis;
use pgc_core::bilinear::{extract_bilinear, DEFAULT_BUDGET};
use pgc_core::constructions::{central_product, central_quotient, group, Params};
use pgc_core::pc::{Code, PcGroup, Presentation};
use pgc_core::structure::{breadth, closure, derived_subgroup, is_elementary_abelian};
use pgc_core::verifier::{
    central_order_p_subgroups, check_hypotheses, classify, classify_theorem_a, classify_theorem_b,
    lemma_suite, quotient_is_equal, Case, Classification, Outcome, Theorem,
};
use pgc_core::Error;
use rand::Rng;

fn analyse(name: &str, params: &Params) -> (PcGroup, Classification) {
    let g = group(name, params).unwrap();
    let c = {
        let a = Analysis::new(&g);
        let th = if g.p() == 2 { Theorem::B } else { Theorem::A };
        classify(&a, th, DEFAULT_BUDGET).unwrap()
    };
    (g, c)
}

/// Shared assertions on any classification.
fn coherent(name: &str, a: &Analysis, c: &Classification) {
    assert_eq!(c.agree, Some(true), "{name}: {c:?}");
    assert_eq!(c.predicted_unequal, Some(c.case != Case::None), "{name}");
    assert_eq!(c.brute_force_unequal, !a.equal(), "{name}");
    if c.brute_force_unequal {
        assert_eq!(c.width2, Some(true), "{name}");
        assert!(!c.evidence.witnesses.is_empty(), "{name}");
    }
    if matches!(c.case, Case::A3a | Case::B2a) {
        let x = a.maximal_centralizer_element().unwrap();
        assert_eq!(breadth(a.group, x), 1, "{name}");
    }
}

#[test]
fn hypothesis_records() {
    let phi = group("phi23", &Params::p(5)).unwrap();
    assert!(check_hypotheses(&Analysis::new(&phi), Theorem::A)
        .iter()
        .all(|c| c.pass));
    let h = group("heisenberg", &Params::p(3)).unwrap();
    let checks = check_hypotheses(&Analysis::new(&h), Theorem::A);
    let bad: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
    assert_eq!(bad, vec!["|gamma_2(G)| = p^4"]);
    assert!(checks.iter().all(|c| !c.observed.is_empty()));
    let t = group("T2_9", &Params::rst(0, 0, 0)).unwrap();
    assert!(check_hypotheses(&Analysis::new(&t), Theorem::B)
        .iter()
        .all(|c| c.pass));
    assert!(!check_hypotheses(&Analysis::new(&t), Theorem::A)[0].pass);
    let d8 = group("heisenberg", &Params::p(2)).unwrap();
    assert!(matches!(
        classify_theorem_b(&Analysis::new(&d8), DEFAULT_BUDGET),
        Err(Error::Hypothesis(_))
    ));
    assert!(matches!(
        classify_theorem_a(&Analysis::new(&h), DEFAULT_BUDGET),
        Err(Error::Hypothesis(_))
    ));
}

#[test]
fn named_cases() {
    let (_, c) = analyse("phi23", &Params::p(5));
    assert_eq!(c.case, Case::A1);
    assert!(c.predicted_unequal == Some(true) && c.brute_force_unequal);
    let (_, c) = analyse("class3_p7_4", &Params::p(3));
    assert_eq!(c.case, Case::A2);
    let (_, c) = analyse("F_mod_R", &Params::p(3));
    assert_eq!(c.case, Case::A3a);
    assert!(c.evidence.maximal_centralizer.is_some());
    let (_, c) = analyse("T2_9", &Params::rst(0, 0, 0));
    assert_eq!(c.case, Case::B1);
    assert_eq!(c.evidence.pseudo_isometric_to_model, Some(true));
    let (_, c) = analyse("T2_9", &Params::rst(1, 0, 0));
    assert_eq!(c.case, Case::None);
    assert!(!c.brute_force_unequal);
    assert!(c.notes.iter().any(|n| n.contains("2^8")));
}

#[test]
fn catalog_predictions_agree_with_brute_force() {
    let mut seen = Vec::new();
    for (name, params) in roster() {
        let g = group(&name, &params).unwrap();
        let a = Analysis::new(&g);
        let th = if g.p() == 2 { Theorem::B } else { Theorem::A };
        if !check_hypotheses(&a, th).iter().all(|c| c.pass) {
            continue;
        }
        let c = classify(&a, th, DEFAULT_BUDGET).unwrap();
        coherent(&format!("{name} {params:?}"), &a, &c);
        seen.push(c.case);
    }
    for case in [Case::A1, Case::A2, Case::A3a, Case::B1, Case::None] {
        assert!(seen.contains(&case), "{case:?} never exercised");
    }
}

#[test]
fn model_match_implies_equal_invariants() {
    let model = extract_bilinear(&group("T2_9", &Params::rst(0, 0, 0)).unwrap())
        .unwrap()
        .map;
    for (r, s, t) in t2_9_params() {
        let (g, c) = analyse("T2_9", &Params::rst(r, s, t));
        let b = extract_bilinear(&g).unwrap().map;
        if c.case == Case::B1 {
            assert_eq!(b.rank_spectrum(), model.rank_spectrum());
            assert_eq!(b.image().len(), model.image().len());
        }
        assert_eq!(c.case == Case::B1, (r, s, t) == (0, 0, 0));
    }
}

#[test]
fn exhausted_budget_leaves_the_case_open() {
    let g = group("T2_9", &Params::rst(0, 0, 0)).unwrap();
    let a = Analysis::new(&g);
    let c = classify(&a, Theorem::B, 10).unwrap();
    assert_eq!(c.case, Case::Undetermined);
    assert_eq!((c.predicted_unequal, c.agree), (None, None));
    assert!(c.brute_force_unequal);
    assert!(c.notes.iter().any(|n| n.contains("skipped")));
}

/// Class-2 group on four generators of order `p` with all commutators free.
fn free_four(p: u32) -> PcGroup {
    let mut pres = Presentation::new(p, 10).unwrap();
    let mut k = 4;
    for i in 0..4 {
        for j in i + 1..4 {
            pres.set_commutator(j, i, vec![(k, 1)]).unwrap();
            k += 1;
        }
    }
    PcGroup::new_consistent(pres).unwrap()
}

/// Quotients of the free four-generator group by two random relators in `gamma_2`.
fn random_quotients(p: u32, count: usize, seed: u64) -> Vec<PcGroup> {
    let f = free_four(p);
    let d = derived_subgroup(&f);
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let x: Code = d.elements()[r.gen_range(0..d.elements().len())];
        let y: Code = d.elements()[r.gen_range(0..d.elements().len())];
        if closure(&f, &[x, y]).order() != (p as u64).pow(2) {
            continue;
        }
        out.push(PcGroup::new_consistent(central_quotient(&f, &[x, y]).unwrap()).unwrap());
    }
    out
}

#[test]
fn random_class2_quotients_agree() {
    let runs = [
        (3, Theorem::A, 14, [Case::A3a, Case::A3b]),
        (2, Theorem::B, 24, [Case::B2a, Case::B2b]),
    ];
    for (p, th, count, expected) in runs {
        let mut cases = Vec::new();
        for (i, g) in random_quotients(p, count, 40 + p as u64).iter().enumerate() {
            let a = Analysis::new(g);
            if !check_hypotheses(&a, th).iter().all(|c| c.pass) {
                continue;
            }
            let c = classify(&a, th, DEFAULT_BUDGET).unwrap();
            coherent(&format!("p={p} quotient {i}"), &a, &c);
            cases.push(c.case);
        }
        assert!(
            cases.len() >= count / 2,
            "p={p}: only {} stem quotients",
            cases.len()
        );
        for case in expected.into_iter().chain([Case::None]) {
            assert!(cases.contains(&case), "p={p}: {case:?} never exercised");
        }
    }
}

#[test]
fn products_with_small_two_groups_agree() {
    let d8 = group("heisenberg", &Params::p(2)).unwrap();
    let q8 = group("extraspecial_p3", &Params::p(2)).unwrap();
    for (r, s, t) in t2_9_params() {
        let g = group("T2_9", &Params::rst(r, s, t)).unwrap();
        let labels = g.presentation().labels().unwrap();
        for (small, label) in [(&d8, "[v4,v1]"), (&q8, "[v5,v4]")] {
            let i = labels.iter().position(|l| l == label).unwrap();
            let prod =
                PcGroup::new_consistent(central_product(&g, small, &[(i, small.gen(2))]).unwrap())
                    .unwrap();
            let a = Analysis::new(&prod);
            assert!(check_hypotheses(&a, Theorem::B).iter().all(|c| c.pass));
            let c = classify(&a, Theorem::B, DEFAULT_BUDGET).unwrap();
            coherent(&format!("T({r},{s},{t}) with {label}"), &a, &c);
        }
    }
}

#[test]
fn lemma_suite_examples() {
    let outcome = |name: &str, p: u32, id: &str| {
        let g = group(name, &Params::p(p)).unwrap();
        let a = Analysis::new(&g);
        lemma_suite(&a)
            .into_iter()
            .find(|l| l.id == id)
            .unwrap()
            .outcome
    };
    assert_eq!(
        outcome("phi23", 5, "center_not_maximal_in_gamma2"),
        Outcome::Pass
    );
    assert_eq!(outcome("F_mod_R", 3, "pth_powers_central"), Outcome::Pass);
    assert_eq!(outcome("F_mod_R", 3, "breadth_at_least_3"), Outcome::Pass);
    assert_eq!(
        outcome("F_mod_R", 3, "center_not_maximal_in_gamma2"),
        Outcome::NotApplicable
    );
    let ab = PcGroup::new_consistent(Presentation::new(3, 3).unwrap()).unwrap();
    let a = Analysis::new(&ab);
    assert!(lemma_suite(&a)
        .iter()
        .all(|l| l.outcome == Outcome::NotApplicable));
}

#[test]
fn lemma_suite_passes_on_the_catalog() {
    for (name, params) in roster() {
        let g = group(&name, &params).unwrap();
        let a = Analysis::new(&g);
        for l in lemma_suite(&a) {
            assert_ne!(
                l.outcome,
                Outcome::Fail,
                "{name} {params:?}: {} {}",
                l.id,
                l.detail
            );
        }
    }
}

#[test]
fn rank_three_quotients_are_equal() {
    let mut checked = 0;
    for (name, params) in roster() {
        let g = group(&name, &params).unwrap();
        let a = Analysis::new(&g);
        let p = g.p() as u64;
        if a.gamma2().order() != p.pow(4) || !is_elementary_abelian(&g, a.gamma2()) {
            continue;
        }
        // Every subgroup through K(G)H; a sample also through the quotient itself.
        for (k, h) in central_order_p_subgroups(&a).into_iter().enumerate() {
            assert!(quotient_is_equal(&a, &h), "{name} {params:?}");
            checked += 1;
            if p > 3 && k >= 3 {
                continue;
            }
            let gen = h.elements().iter().copied().find(|&x| x != 0).unwrap();
            let q = PcGroup::new_consistent(central_quotient(&g, &[gen]).unwrap()).unwrap();
            let qa = Analysis::new(&q);
            assert_eq!(qa.gamma2().order(), p.pow(3), "{name}");
            assert!(is_elementary_abelian(&q, qa.gamma2()), "{name}");
            assert!(qa.equal(), "{name} {params:?} mod {}", g.format(gen));
        }
    }
    assert!(checked >= 50, "{checked}");
}

#[test]
fn equal_quotient_forces_width_two() {
    let mut applied = 0;
    for (name, params) in roster() {
        let g = group(&name, &params).unwrap();
        let a = Analysis::new(&g);
        if central_order_p_subgroups(&a)
            .iter()
            .any(|h| quotient_is_equal(&a, h))
        {
            applied += 1;
            assert!(a.width2(), "{name} {params:?}");
        }
    }
    assert!(applied >= 20);
}
