mod common;

use std::collections::BTreeSet;

use common::*;
use pgc_core::analysis::Analysis;
use pgc_core::bilinear::{
    extract_bilinear, invariants_match, projective_points, pseudo_isometry, AltBilinear,
    BilinearModel, PseudoIsometry, Vector,
};
use pgc_core::constructions::{group, word_by_labels, Params};
use pgc_core::fp::Fp;
use pgc_core::pc::PcGroup;
use pgc_core::structure::breadth;
use pgc_core::Error;
use rand::rngs::StdRng;
use rand::Rng;

const BUDGET: u128 = 100_000_000;

fn is_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

fn class2_stem_groups() -> Vec<(String, PcGroup)> {
    groups()
        .into_iter()
        .filter(|(n, _)| {
            [
                "heisenberg",
                "extraspecial",
                "free_class2",
                "F_mod_R",
                "NY18",
                "T2_9",
            ]
            .iter()
            .any(|s| n.starts_with(s))
        })
        .collect()
}

fn model(name: &str, params: &Params) -> (PcGroup, BilinearModel) {
    let g = group(name, params).unwrap();
    let m = extract_bilinear(&g).unwrap();
    (g, m)
}

fn random_vector(r: &mut StdRng, p: u32, n: usize) -> Vector {
    (0..n).map(|_| r.gen_range(0..p)).collect()
}

fn random_invertible(r: &mut StdRng, p: u32, n: usize) -> Vec<Vector> {
    let f = Fp::new(p).unwrap();
    loop {
        let m: Vec<Vector> = (0..n).map(|_| random_vector(r, p, n)).collect();
        if f.rank(&m) == n {
            return m;
        }
    }
}

/// `theta(B(phi e_i, phi e_j))` as a new map, together with the witness
/// pair that carries it back to `b`.
fn transform(b: &AltBilinear, phi: &[Vector], theta: &[Vector]) -> AltBilinear {
    let f = Fp::new(b.p()).unwrap();
    let apply = |w: &Vector| {
        let mut out = vec![0; b.dim_w()];
        for (k, &c) in w.iter().enumerate() {
            for (o, &t) in out.iter_mut().zip(&theta[k]) {
                *o = f.add(*o, f.mul(c, t));
            }
        }
        out
    };
    let mut upper = Vec::new();
    for i in 0..b.dim_v() {
        for j in i + 1..b.dim_v() {
            upper.push(apply(&b.eval(&phi[i], &phi[j])));
        }
    }
    AltBilinear::from_upper(b.p(), b.dim_v(), b.dim_w(), &upper).unwrap()
}

fn identity(n: usize) -> Vec<Vector> {
    (0..n)
        .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
        .collect()
}

#[test]
fn extraction_examples() {
    let (_, h) = model("heisenberg", &Params::p(3));
    assert_eq!((h.map.dim_v(), h.map.dim_w()), (2, 1));
    assert!(!is_zero(h.map.basis_value(0, 1)));
    assert_eq!(h.map.image().len(), 3);
    let (_, f) = model("F_mod_R", &Params::p(3));
    assert_eq!((f.map.dim_v(), f.map.dim_w()), (4, 4));
    let phi = group("phi23", &Params::p(5)).unwrap();
    assert!(matches!(extract_bilinear(&phi), Err(Error::Hypothesis(_))));
    let c3 = group("class3_p7_1", &Params::p(3)).unwrap();
    assert!(matches!(extract_bilinear(&c3), Err(Error::Hypothesis(_))));
}

#[test]
fn maps_are_alternating() {
    let mut r = rng(31);
    for (name, g) in class2_stem_groups() {
        let b = extract_bilinear(&g).unwrap().map;
        let f = Fp::new(b.p()).unwrap();
        for _ in 0..200 {
            let u = random_vector(&mut r, b.p(), b.dim_v());
            let v = random_vector(&mut r, b.p(), b.dim_v());
            assert!(is_zero(&b.eval(&u, &u)), "{name}");
            let neg: Vector = b.eval(&v, &u).iter().map(|&x| f.neg(x)).collect();
            assert_eq!(b.eval(&u, &v), neg, "{name}");
        }
    }
}

#[test]
fn image_corresponds_to_commutator_set() {
    for (name, g) in class2_stem_groups() {
        let m = extract_bilinear(&g).unwrap();
        let a = Analysis::new(&g);
        let from_k: BTreeSet<Vector> =
            a.k.iter()
                .map(|&c| m.w_coords(c).expect("commutators lie in gamma_2").clone())
                .collect();
        let image: BTreeSet<Vector> = m.map.image().into_iter().collect();
        assert_eq!(from_k, image, "{name}");
        assert_eq!(a.k.len(), image.len(), "{name}");
        for w in &image {
            let c = m.w_element(&g, w);
            assert_eq!(m.w_coords(c), Some(w), "{name}");
        }
    }
}

#[test]
fn model_commutators_match_group_commutators() {
    let mut r = rng(32);
    for (name, g) in class2_stem_groups() {
        let m = extract_bilinear(&g).unwrap();
        for _ in 0..300 {
            let u = random_vector(&mut r, g.p(), m.map.dim_v());
            let v = random_vector(&mut r, g.p(), m.map.dim_v());
            let c = g.comm(m.lift(&g, &u), m.lift(&g, &v));
            assert_eq!(m.w_coords(c), Some(&m.map.eval(&u, &v)), "{name}");
        }
    }
}

#[test]
fn slice_ranks_are_breadths() {
    let mut r = rng(33);
    for (name, g) in class2_stem_groups() {
        let m = extract_bilinear(&g).unwrap();
        let a = Analysis::new(&g);
        assert_eq!(m.map.conjugate_type(), a.conjugate_type(), "{name}");
        let points = projective_points(g.p(), m.map.dim_v());
        for _ in 0..40 {
            let u = &points[r.gen_range(0..points.len())];
            assert_eq!(
                m.map.slice_rank(u) as u32,
                breadth(&g, m.lift(&g, u)),
                "{name}"
            );
        }
        assert_eq!(m.map.slice_rank(&vec![0; m.map.dim_v()]), 0);
    }
}

#[test]
fn slice_examples() {
    let (g, m) = model("F_mod_R", &Params::p(3));
    let d = word_by_labels(&g, &[("d", 1)]).unwrap();
    let coords = (0..3u64.pow(4))
        .map(|c| {
            let mut v = vec![0; 4];
            let mut c = c;
            for x in v.iter_mut().rev() {
                *x = (c % 3) as u32;
                c /= 3;
            }
            v
        })
        .find(|v| m.w_coords(g.mul(g.inv(m.lift(&g, v)), d)).is_some())
        .unwrap();
    assert_eq!(m.map.slice_rank(&coords), 1);

    let (_, m1) = model("F_mod_R1", &Params::p(3));
    assert_eq!(m1.map.conjugate_type(), vec![1, 27]);
}

#[test]
fn images_miss_the_known_non_commutators() {
    let (g, m) = model("F_mod_R", &Params::p(3));
    let l = |s: &str| word_by_labels(&g, &[(s, 1)]).unwrap();
    let w = g.mul(g.comm(l("a"), l("b")), g.comm(l("c"), l("d")));
    let image = m.map.image();
    assert!(image.len() < 81);
    assert!(!image.contains(m.w_coords(w).unwrap()));

    let (t, mt) = model("T2_9", &Params::rst(0, 0, 0));
    let v = |i: usize| word_by_labels(&t, &[(&format!("v{i}"), 1)]).unwrap();
    let w = t.mul(
        t.mul(t.comm(v(4), v(1)), t.comm(v(4), v(3))),
        t.comm(v(5), v(2)),
    );
    let image = mt.map.image();
    assert!(image.len() < 16);
    assert!(!image.contains(mt.w_coords(w).unwrap()));
}

fn check_quadruple(b: &AltBilinear, q: &[Vector; 4]) {
    let f = Fp::new(b.p()).unwrap();
    assert!(is_zero(&b.eval(&q[0], &q[1])));
    assert!(is_zero(&b.eval(&q[2], &q[3])));
    assert_eq!(f.rank(q), 4);
}

#[test]
fn quadruple_search_on_a_constructed_map() {
    // B(e1,e2) = 0 = B(e3,e4); the other four pairs hit independent vectors.
    let unit = |k: usize| -> Vector { (0..4).map(|i| u32::from(i == k)).collect() };
    let upper = vec![vec![0; 4], unit(0), unit(1), unit(2), unit(3), vec![0; 4]];
    let b = AltBilinear::from_upper(5, 4, 4, &upper).unwrap();
    let q = b.hyperbolic_quadruple().unwrap().expect("e1..e4 qualifies");
    check_quadruple(&b, &q);

    let small = AltBilinear::from_upper(3, 3, 1, &[vec![1], vec![0], vec![2]]).unwrap();
    assert!(matches!(
        small.hyperbolic_quadruple(),
        Err(Error::Parameter(_))
    ));
}

#[test]
fn quadruple_search_results_verify() {
    let mut r = rng(34);
    for p in [2, 3] {
        for _ in 0..30 {
            let upper: Vec<Vector> = (0..6).map(|_| random_vector(&mut r, p, 3)).collect();
            let b = AltBilinear::from_upper(p, 4, 3, &upper).unwrap();
            if let Some(q) = b.hyperbolic_quadruple().unwrap() {
                check_quadruple(&b, &q);
            }
        }
    }
}

/// Randomized search for an isotropic spanning quadruple.
fn random_quadruple(b: &AltBilinear, r: &mut StdRng, samples: usize) -> bool {
    let f = Fp::new(b.p()).unwrap();
    (0..samples).any(|_| {
        let q: Vec<Vector> = (0..4).map(|_| random_vector(r, b.p(), 4)).collect();
        is_zero(&b.eval(&q[0], &q[1])) && is_zero(&b.eval(&q[2], &q[3])) && f.rank(&q) == 4
    })
}

#[test]
fn rank_three_model_has_no_isotropic_quadruple() {
    let mut r = rng(35);
    let (_, m) = model("F_mod_R1", &Params::p(3));
    assert_eq!(m.map.hyperbolic_quadruple().unwrap(), None);
    assert!(!random_quadruple(&m.map, &mut r, 1_000_000));
    let (_, m) = model("F_mod_R", &Params::p(3));
    if m.map.hyperbolic_quadruple().unwrap().is_none() {
        assert!(!random_quadruple(&m.map, &mut r, 1_000_000));
    }
}

#[test]
fn pseudo_isometry_is_reflexive() {
    for (name, params) in [
        ("heisenberg", Params::p(3)),
        (
            "free_class2_expp",
            Params {
                n: Some(3),
                ..Params::p(3)
            },
        ),
        ("F_mod_R", Params::p(3)),
        ("F_mod_R1", Params::p(3)),
        ("T2_9", Params::rst(0, 0, 0)),
        ("T2_9", Params::rst(1, 0, 1)),
    ] {
        let (_, m) = model(name, &params);
        let found = pseudo_isometry(&m.map, &m.map, BUDGET)
            .unwrap()
            .expect(name);
        assert!(found.verify(&m.map, &m.map), "{name}");
    }
}

#[test]
fn pseudo_isometry_finds_changes_of_basis() {
    let mut r = rng(36);
    let cases = [
        ("heisenberg", Params::p(5)),
        ("F_mod_R", Params::p(3)),
        ("F_mod_R1", Params::p(3)),
        ("T2_9", Params::rst(0, 0, 0)),
        ("T2_9", Params::rst(0, 1, 1)),
    ];
    for (name, params) in cases {
        let (_, m) = model(name, &params);
        let b = &m.map;
        let (p, dv, dw) = (b.p(), b.dim_v(), b.dim_w());
        // A permutation of the V-basis first, then a random change of both bases.
        let mut perm = identity(dv);
        perm.rotate_left(1);
        for (phi, theta) in [
            (perm, identity(dw)),
            (
                random_invertible(&mut r, p, dv),
                random_invertible(&mut r, p, dw),
            ),
        ] {
            let b2 = transform(b, &phi, &theta);
            assert!(invariants_match(b, &b2), "{name}");
            let there = pseudo_isometry(&b2, b, BUDGET).unwrap().expect(name);
            assert!(there.verify(&b2, b), "{name}");
            let back = pseudo_isometry(b, &b2, BUDGET).unwrap().expect(name);
            assert!(back.verify(b, &b2), "{name}");
            assert_eq!(b.rank_spectrum(), b2.rank_spectrum(), "{name}");
            assert_eq!(b.image().len(), b2.image().len(), "{name}");
        }
    }
}

#[test]
fn pseudo_isometry_battery_is_symmetric() {
    let maps: Vec<(String, AltBilinear)> = t2_9_params()
        .into_iter()
        .map(|(r, s, t)| {
            let (_, m) = model("T2_9", &Params::rst(r, s, t));
            (format!("T({r},{s},{t})"), m.map)
        })
        .collect();
    for (n1, b1) in &maps {
        for (n2, b2) in &maps {
            let ab = pseudo_isometry(b1, b2, BUDGET).unwrap();
            let ba = pseudo_isometry(b2, b1, BUDGET).unwrap();
            assert_eq!(ab.is_some(), ba.is_some(), "{n1} {n2}");
            if let Some(f) = &ab {
                assert!(f.verify(b1, b2), "{n1} {n2}");
                assert_eq!(b1.rank_spectrum(), b2.rank_spectrum(), "{n1} {n2}");
                assert_eq!(b1.image().len(), b2.image().len(), "{n1} {n2}");
            }
        }
    }
    assert!(pseudo_isometry(&maps[0].1, &maps[4].1, BUDGET)
        .unwrap()
        .is_none());
}

#[test]
fn pseudo_isometry_respects_the_budget() {
    let (_, m) = model("F_mod_R", &Params::p(3));
    match pseudo_isometry(&m.map, &m.map, 1000) {
        Err(Error::BudgetExceeded { .. }) => {}
        other => panic!("expected a budget error, got {other:?}"),
    }
    let (_, h) = model("heisenberg", &Params::p(3));
    assert_eq!(pseudo_isometry(&m.map, &h.map, 1).unwrap(), None);
}

#[test]
fn verification_matches_recomputed_values() {
    let mut r = rng(37);
    for (name, params) in [("T2_9", Params::rst(0, 0, 0)), ("F_mod_R", Params::p(3))] {
        let (_, m) = model(name, &params);
        let (p, dv, dw) = (m.map.p(), m.map.dim_v(), m.map.dim_w());
        for _ in 0..50 {
            let pair = PseudoIsometry {
                phi: random_invertible(&mut r, p, dv),
                theta: identity(dw),
            };
            let fixed = transform(&m.map, &pair.phi, &pair.theta) == m.map;
            assert_eq!(pair.verify(&m.map, &m.map), fixed, "{name}");
        }
    }
}
