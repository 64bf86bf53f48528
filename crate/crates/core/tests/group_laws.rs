mod common;

use common::*;
use pgc_core::pcp;
use pgc_core::structure::conjugacy_classes;

#[test]
fn multiplication_matches_naive_collection() {
    let mut r = rng(1);
    for (name, g) in groups() {
        let pres = g.presentation();
        for _ in 0..300 {
            let x = random_element(&g, &mut r);
            let y = random_element(&g, &mut r);
            let mut w = letters(&g.exponents(x));
            w.extend(letters(&g.exponents(y)));
            assert_eq!(
                g.exponents(g.mul(x, y)),
                naive_collect(pres, &w),
                "{name}: {} * {}",
                g.format(x),
                g.format(y)
            );
        }
    }
}

#[test]
fn associativity_on_random_triples() {
    let mut r = rng(2);
    for (name, g) in groups() {
        for _ in 0..2000 {
            let (x, y, z) = (
                random_element(&g, &mut r),
                random_element(&g, &mut r),
                random_element(&g, &mut r),
            );
            assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)), "{name}");
        }
    }
}

#[test]
fn hall_witt_identity() {
    let mut r = rng(3);
    for (name, g) in groups() {
        for _ in 0..2000 {
            let (x, y, z) = (
                random_element(&g, &mut r),
                random_element(&g, &mut r),
                random_element(&g, &mut r),
            );
            let a = g.conj(comm3(&g, x, g.inv(y), z), y);
            let b = g.conj(comm3(&g, y, g.inv(z), x), z);
            let c = g.conj(comm3(&g, z, g.inv(x), y), x);
            assert_eq!(g.mul(g.mul(a, b), c), g.identity(), "{name}");
        }
    }
}

#[test]
fn inverses_and_powers() {
    let mut r = rng(4);
    for (name, g) in groups() {
        for _ in 0..1000 {
            let x = random_element(&g, &mut r);
            assert_eq!(g.mul(x, g.inv(x)), 0, "{name}");
            let o = g.element_order(x) as i64;
            assert_eq!(g.pow(x, o), 0, "{name}");
            assert_eq!(g.pow(x, -3), g.inv(g.pow(x, 3)), "{name}");
        }
    }
}

#[test]
fn class_equation() {
    for (name, g) in groups() {
        let classes = conjugacy_classes(&g);
        let total: u64 = classes.iter().map(|c| c.size).sum();
        assert_eq!(total, g.order(), "{name}");
        let p = g.p() as u64;
        for c in &classes {
            let mut s = c.size;
            while s % p == 0 {
                s /= p;
            }
            assert_eq!(s, 1, "{name}: class size {} is not a power of p", c.size);
        }
    }
}

#[test]
fn catalog_presentations_round_trip_through_text() {
    for (name, g) in groups() {
        let text = pcp::serialize(g.presentation());
        let back = pcp::parse(&text).unwrap();
        assert_eq!(&back, g.presentation(), "{name}");
        assert_eq!(pcp::serialize(&back), text, "{name}");
    }
}
