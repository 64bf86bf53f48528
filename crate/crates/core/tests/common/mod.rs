#![allow(dead_code)]

use pgc_core::constructions::{group, Params};
use pgc_core::pc::{Code, PcGroup, Presentation};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Consistent catalog entries with `p <= 5`.
pub fn roster() -> Vec<(String, Params)> {
    let mut out = Vec::new();
    let mut push = |name: &str, params: Params| out.push((name.to_string(), params));
    for p in [2, 3, 5] {
        push("heisenberg", Params::p(p));
        push("extraspecial_p3", Params::p(p));
    }
    for (n, p) in [(3, 3), (3, 5), (4, 3)] {
        push(
            "free_class2_expp",
            Params {
                n: Some(n),
                ..Params::p(p)
            },
        );
    }
    for p in [3, 5] {
        push("F_mod_R", Params::p(p));
        push("F_mod_R1", Params::p(p));
        for k in 1..=5 {
            push(&format!("class3_p7_{k}"), Params::p(p));
        }
    }
    push("NY18_type_1_p3", Params::p(3));
    for name in ["phi23", "phi40", "phi41", "class4_p7_2"] {
        push(name, Params::p(5));
    }
    for (r, s, t) in t2_9_params() {
        push("T2_9", Params::rst(r, s, t));
    }
    out
}

pub fn t2_9_params() -> Vec<(u32, u32, u32)> {
    let mut v = Vec::new();
    for r in 0..2 {
        for s in 0..2 {
            for t in 0..2 {
                v.push((r, s, t));
            }
        }
    }
    v
}

pub fn build(name: &str, params: &Params) -> PcGroup {
    group(name, params).unwrap_or_else(|e| panic!("{name} {params:?}: {e}"))
}

pub fn groups() -> Vec<(String, PcGroup)> {
    roster()
        .into_iter()
        .map(|(n, p)| (format!("{n}{p:?}"), build(&n, &p)))
        .collect()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_element(g: &PcGroup, rng: &mut StdRng) -> Code {
    rng.gen_range(0..g.order())
}

/// Collection from the left on explicit letter stacks, with no tables.
///
/// Multiplying the collected word `g_1^{v_1} ... g_n^{v_n}` by `g_i` gives
/// `prefix * g_i^{v_i + 1} * S^{g_i}` where `S` is the part above `i`; the
/// conjugated suffix is pushed back as letters.
pub fn naive_collect(pres: &Presentation, letters: &[usize]) -> Vec<u32> {
    let n = pres.ngens();
    let p = pres.p();
    let mut v = vec![0u32; n];
    let mut stack: Vec<usize> = letters.iter().rev().copied().collect();
    while let Some(i) = stack.pop() {
        let mut pending: Vec<usize> = Vec::new();
        v[i] += 1;
        if v[i] == p {
            v[i] = 0;
            for &(k, e) in pres.power(i) {
                pending.extend(std::iter::repeat(k).take(e as usize));
            }
        }
        for j in i + 1..n {
            for _ in 0..v[j] {
                pending.push(j);
                for &(k, e) in pres.commutator(j, i) {
                    pending.extend(std::iter::repeat(k).take(e as usize));
                }
            }
            v[j] = 0;
        }
        stack.extend(pending.into_iter().rev());
    }
    v
}

pub fn letters(exps: &[u32]) -> Vec<usize> {
    exps.iter()
        .enumerate()
        .flat_map(|(k, &e)| std::iter::repeat(k).take(e as usize))
        .collect()
}

/// `[[a, b], c]`.
pub fn comm3(g: &PcGroup, a: Code, b: Code, c: Code) -> Code {
    g.comm(g.comm(a, b), c)
}
