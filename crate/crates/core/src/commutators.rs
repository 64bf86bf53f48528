//! The commutator set `K(G) = {[x, y] : x, y in G}` and related queries.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pc::{Code, PcGroup};
use crate::structure::{center, class_of, transversal, BitSet, Subgroup};

/// `[x, G] = x^-1 class(x)`, sorted.
pub fn x_commutators(g: &PcGroup, x: Code) -> Vec<Code> {
    let xi = g.inv(x);
    let mut out: Vec<Code> = class_of(g, x).into_iter().map(|y| g.mul(xi, y)).collect();
    out.sort_unstable();
    out
}

/// `K(G)`, sorted.
///
/// Uses `[xz, G] = [x, G]` for central `z` and `[x^h, G] = [x, G]^h`: the
/// sets `[x, G]` are collected for one element per class over a transversal of
/// the center, and the union is then closed under conjugation.
pub fn commutator_set(g: &PcGroup) -> Vec<Code> {
    commutator_set_until(g, None)
}

/// As [`commutator_set`], stopping early once `target` commutators are known.
pub fn commutator_set_until(g: &PcGroup, target: Option<u64>) -> Vec<Code> {
    let z = center(g);
    let reps = transversal(g, &z);
    let mut seen = BitSet::new(g.order());
    let mut k: HashSet<Code> = HashSet::from([0]);
    for &t in &reps {
        if seen.contains(t) {
            continue;
        }
        let ti = g.inv(t);
        for y in class_of(g, t) {
            seen.insert(y);
            k.insert(g.mul(ti, y));
        }
        if target.is_some_and(|n| k.len() as u64 >= n) {
            break;
        }
    }
    let mut queue: VecDeque<Code> = k.iter().copied().collect();
    while let Some(c) = queue.pop_front() {
        for i in 0..g.ngens() {
            let d = g.conj_gen(c, i);
            if k.insert(d) {
                queue.push_back(d);
            }
        }
    }
    let mut out: Vec<Code> = k.into_iter().collect();
    out.sort_unstable();
    out
}

/// `K(G)` by the double loop over `x, y` in a transversal of `Z(G)`.
pub fn naive_commutator_set(g: &PcGroup) -> Vec<Code> {
    let z = center(g);
    let reps = transversal(g, &z);
    let mut k = HashSet::new();
    for &x in &reps {
        for &y in &reps {
            k.insert(g.comm(x, y));
        }
    }
    let mut out: Vec<Code> = k.into_iter().collect();
    out.sort_unstable();
    out
}

/// Elements of `gamma_2` outside `K`, in lexicographic order.
pub fn non_commutators(k: &[Code], gamma2: &Subgroup) -> Vec<Code> {
    gamma2
        .elements()
        .iter()
        .copied()
        .filter(|x| k.binary_search(x).is_err())
        .collect()
}

/// Outcome of comparing `K(G)` with `gamma_2(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub k_order: u64,
    pub gamma2_order: u64,
    pub equal: bool,
    pub witnesses: Vec<Code>,
}

pub fn compare(k: &[Code], gamma2: &Subgroup) -> Comparison {
    let witnesses = non_commutators(k, gamma2);
    Comparison {
        k_order: k.len() as u64,
        gamma2_order: gamma2.order(),
        equal: witnesses.is_empty() && k.len() as u64 == gamma2.order(),
        witnesses,
    }
}

/// Finds `(x, y)` with `[x, y] = w`, taking `x` from a transversal of the center.
///
/// `None` means `w` is not a commutator; `w` outside `gamma_2` is an error.
pub fn is_commutator(g: &PcGroup, gamma2: &Subgroup, w: Code) -> Result<Option<(Code, Code)>> {
    if !gamma2.contains(w) {
        return Err(Error::Hypothesis(format!(
            "{} is not in gamma_2(G)",
            g.format(w)
        )));
    }
    let z = center(g);
    for x in transversal(g, &z) {
        let target = g.mul(x, w);
        let mut via: HashMap<Code, Code> = HashMap::from([(x, 0)]);
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            let h = via[&y];
            if y == target {
                return Ok(Some((x, h)));
            }
            for i in 0..g.ngens() {
                let c = g.conj_gen(y, i);
                if let std::collections::hash_map::Entry::Vacant(e) = via.entry(c) {
                    e.insert(g.mul(h, g.gen(i)));
                    queue.push_back(c);
                }
            }
        }
    }
    Ok(None)
}

/// True when every element of `gamma_2` is a product of two commutators.
pub fn two_commutator_width(g: &PcGroup, k: &[Code], gamma2: &Subgroup) -> bool {
    let mut prod: HashSet<Code> = HashSet::with_capacity(gamma2.order() as usize);
    for &a in k {
        for &b in k {
            prod.insert(g.mul(a, b));
        }
        if prod.len() as u64 == gamma2.order() {
            return true;
        }
    }
    prod.len() as u64 == gamma2.order()
}

/// Result of testing the covering criterion for a family `x_1, ..., x_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Covering {
    /// `gamma_2 / H` is the union of the `[x_i H, G/H]` and `H` lies in every `[x_i, G]`.
    pub hypothesis: bool,
    /// `gamma_2` is the union of the `[x_i, G]`.
    pub union_covers: bool,
}

/// Tests the covering criterion against `H <= gamma_2 cap Z(G)`.
///
/// Images in `G/H` are handled through cosets: `[xH, G/H]` is the image of
/// `[x, G]`, so the first condition says `U H = gamma_2` for the union `U`.
pub fn covering_check(
    g: &PcGroup,
    xs: &[Code],
    h: &Subgroup,
    gamma2: &Subgroup,
) -> Result<Covering> {
    let z = center(g);
    if !h
        .elements()
        .iter()
        .all(|&x| gamma2.contains(x) && z.contains(x))
    {
        return Err(Error::Hypothesis(
            "H must lie in gamma_2(G) and Z(G)".into(),
        ));
    }
    let sets: Vec<Vec<Code>> = xs.iter().map(|&x| x_commutators(g, x)).collect();
    let mut union: HashSet<Code> = HashSet::new();
    for s in &sets {
        union.extend(s.iter().copied());
    }
    let mut modh: HashSet<Code> = HashSet::new();
    for &u in &union {
        for &y in h.elements() {
            modh.insert(g.mul(u, y));
        }
    }
    let covers_mod_h = modh.len() as u64 == gamma2.order();
    let h_inside = h
        .elements()
        .iter()
        .all(|y| sets.iter().all(|s| s.binary_search(y).is_ok()));
    Ok(Covering {
        hypothesis: covers_mod_h && h_inside,
        union_covers: union.len() as u64 == gamma2.order(),
    })
}
