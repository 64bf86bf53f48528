//! Subgroups as explicit element sets, and the standard structural invariants.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;

use crate::pc::{Code, PcGroup};

/// A subgroup stored as a sorted list of element codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    elems: Vec<Code>,
}

impl Subgroup {
    pub fn from_codes(mut elems: Vec<Code>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        Subgroup { elems }
    }

    pub fn trivial() -> Self {
        Subgroup { elems: vec![0] }
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn contains(&self, x: Code) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn elements(&self) -> &[Code] {
        &self.elems
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.elems.iter().all(|&x| other.contains(x))
    }
}

/// A dense membership set over the codes `0..|G|`.
#[derive(Clone, Debug)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: u64) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64) as usize],
        }
    }

    pub fn contains(&self, x: Code) -> bool {
        self.words[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    /// Inserts `x`, returning true when it was absent.
    pub fn insert(&mut self, x: Code) -> bool {
        let w = &mut self.words[(x >> 6) as usize];
        let bit = 1u64 << (x & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }
}

/// `log_p(n)` for a power `n` of `p`.
pub fn log_p(p: u32, mut n: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        debug_assert_eq!(n % p as u64, 0);
        n /= p as u64;
        k += 1;
    }
    k
}

/// The whole group as a subgroup.
pub fn whole(g: &PcGroup) -> Subgroup {
    Subgroup {
        elems: (0..g.order()).collect(),
    }
}

/// The subgroup generated by `gens`.
pub fn closure(g: &PcGroup, gens: &[Code]) -> Subgroup {
    let gens: Vec<Code> = gens.iter().copied().filter(|&x| x != 0).collect();
    let mut seen: HashSet<Code> = HashSet::from([0]);
    let mut queue = VecDeque::from([0]);
    while let Some(h) = queue.pop_front() {
        for &s in &gens {
            let y = g.mul(h, s);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Subgroup::from_codes(seen.into_iter().collect())
}

/// The normal closure of `gens` in `G`.
pub fn normal_closure(g: &PcGroup, gens: &[Code]) -> Subgroup {
    let gens: Vec<Code> = gens.iter().copied().filter(|&x| x != 0).collect();
    let mut seen: HashSet<Code> = HashSet::from([0]);
    let mut queue = VecDeque::from([0]);
    while let Some(h) = queue.pop_front() {
        let conj = (0..g.ngens()).map(|i| g.conj_gen(h, i));
        for y in gens.iter().map(|&s| g.mul(h, s)).chain(conj) {
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Subgroup::from_codes(seen.into_iter().collect())
}

/// One term of the lower central series with the generators used to build it.
#[derive(Clone, Debug)]
pub struct SeriesTerm {
    pub subgroup: Subgroup,
    pub gens: Vec<Code>,
}

/// `gamma_1 = G > gamma_2 > ... > gamma_{c+1} = 1`.
///
/// Each term is the normal closure of commutators of the previous term's
/// generators with the pc generators.
pub fn lower_central_series(g: &PcGroup) -> Vec<SeriesTerm> {
    let pcgens: Vec<Code> = (0..g.ngens()).map(|i| g.gen(i)).collect();
    let mut terms = vec![SeriesTerm {
        subgroup: whole(g),
        gens: pcgens.clone(),
    }];
    loop {
        let last = terms.last().expect("nonempty");
        if last.subgroup.order() == 1 {
            break;
        }
        let mut cgens: Vec<Code> = Vec::new();
        for &x in &last.gens {
            for &y in &pcgens {
                let c = g.comm(x, y);
                if c != 0 {
                    cgens.push(c);
                }
            }
        }
        cgens.sort_unstable();
        cgens.dedup();
        let next = normal_closure(g, &cgens);
        if next.order() == last.subgroup.order() {
            break;
        }
        terms.push(SeriesTerm {
            subgroup: next,
            gens: cgens,
        });
    }
    terms
}

/// `gamma_2(G)`.
pub fn derived_subgroup(g: &PcGroup) -> Subgroup {
    let mut cgens = Vec::new();
    for j in 0..g.ngens() {
        for i in 0..j {
            let c = g.comm(g.gen(j), g.gen(i));
            if c != 0 {
                cgens.push(c);
            }
        }
    }
    normal_closure(g, &cgens)
}

/// Nilpotency class from a lower central series.
pub fn nilpotency_class(series: &[SeriesTerm]) -> usize {
    series.len() - 1
}

fn commutes_with_gens(g: &PcGroup, x: Code) -> bool {
    (0..g.ngens()).all(|i| {
        let s = g.gen(i);
        g.mul(x, s) == g.mul(s, x)
    })
}

/// `Z(G)` by a full scan.
pub fn center(g: &PcGroup) -> Subgroup {
    let elems: Vec<Code> = (0..g.order())
        .into_par_iter()
        .filter(|&x| commutes_with_gens(g, x))
        .collect();
    Subgroup { elems }
}

/// Left-to-right coset representatives of `xH`, smallest code first.
pub fn transversal(g: &PcGroup, h: &Subgroup) -> Vec<Code> {
    let mut seen = BitSet::new(g.order());
    let mut reps = Vec::with_capacity((g.order() / h.order()) as usize);
    for x in 0..g.order() {
        if seen.contains(x) {
            continue;
        }
        reps.push(x);
        for &z in h.elements() {
            seen.insert(g.mul(x, z));
        }
    }
    reps
}

/// `C_G(x)`, scanning a transversal of the center and adding whole cosets.
pub fn centralizer_with(g: &PcGroup, x: Code, z: &Subgroup, reps: &[Code]) -> Subgroup {
    let hits: Vec<Code> = reps
        .par_iter()
        .copied()
        .filter(|&t| g.mul(x, t) == g.mul(t, x))
        .collect();
    let mut elems = Vec::with_capacity(hits.len() * z.order() as usize);
    for t in hits {
        elems.extend(z.elements().iter().map(|&c| g.mul(t, c)));
    }
    Subgroup::from_codes(elems)
}

pub fn centralizer(g: &PcGroup, x: Code) -> Subgroup {
    let z = center(g);
    let reps = transversal(g, &z);
    centralizer_with(g, x, &z, &reps)
}

/// The conjugacy class of `x`, sorted.
pub fn class_of(g: &PcGroup, x: Code) -> Vec<Code> {
    let mut seen: HashSet<Code> = HashSet::from([x]);
    let mut queue = VecDeque::from([x]);
    while let Some(y) = queue.pop_front() {
        for i in 0..g.ngens() {
            let c = g.conj_gen(y, i);
            if seen.insert(c) {
                queue.push_back(c);
            }
        }
    }
    let mut out: Vec<Code> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    /// The smallest code in the class.
    pub rep: Code,
    pub size: u64,
}

/// All conjugacy classes, by orbits under the pc generators.
///
/// Since `class(xz) = class(x) z` for central `z`, orbits are computed for a
/// transversal of the center only and translated.
pub fn conjugacy_classes(g: &PcGroup) -> Vec<ClassInfo> {
    let z = center(g);
    let reps = transversal(g, &z);
    classes_from_orbits(g, &z, &reps)
}

fn classes_from_orbits(g: &PcGroup, z: &Subgroup, reps: &[Code]) -> Vec<ClassInfo> {
    let mut seen = BitSet::new(g.order());
    let mut out = Vec::new();
    for &t in reps {
        if seen.contains(t) {
            continue;
        }
        let cls = class_of(g, t);
        for &c in z.elements() {
            let moved: Vec<Code> = cls.iter().map(|&y| g.mul(y, c)).collect();
            if seen.contains(moved[0]) {
                continue;
            }
            let rep = *moved.iter().min().expect("nonempty class");
            for &y in &moved {
                seen.insert(y);
            }
            out.push(ClassInfo {
                rep,
                size: cls.len() as u64,
            });
        }
    }
    out.sort_unstable_by_key(|c| c.rep);
    out
}

/// Distinct class sizes, ascending.
pub fn conjugate_type(classes: &[ClassInfo]) -> Vec<u64> {
    let mut sizes: Vec<u64> = classes.iter().map(|c| c.size).collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes
}

/// `b(x)` with `p^b(x) = |G : C_G(x)|`.
pub fn breadth(g: &PcGroup, x: Code) -> u32 {
    log_p(g.p(), class_of(g, x).len() as u64)
}

/// `b(G)`, the largest breadth.
pub fn group_breadth(g: &PcGroup, classes: &[ClassInfo]) -> u32 {
    classes
        .iter()
        .map(|c| log_p(g.p(), c.size))
        .max()
        .unwrap_or(0)
}

/// `Phi(G) = G^p gamma_2(G)`.
pub fn frattini(g: &PcGroup, gamma2: &Subgroup) -> Subgroup {
    let mut gens: Vec<Code> = (0..g.ngens())
        .map(|i| g.pow(g.gen(i), g.p() as i64))
        .collect();
    gens.extend(generating_set(g, gamma2));
    closure(g, &gens)
}

/// `d` with `|G : Phi(G)| = p^d`.
pub fn frattini_rank(g: &PcGroup, gamma2: &Subgroup) -> u32 {
    g.ngens() as u32 - log_p(g.p(), frattini(g, gamma2).order())
}

/// A small generating set of `h`, found greedily in code order.
pub fn generating_set(g: &PcGroup, h: &Subgroup) -> Vec<Code> {
    let mut gens = Vec::new();
    let mut span = Subgroup::trivial();
    for &x in h.elements() {
        if span.order() == h.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = closure(g, &gens);
        }
    }
    gens
}

/// `Omega_1(H)`: generated by the elements of order dividing p.
pub fn omega1(g: &PcGroup, h: &Subgroup) -> Subgroup {
    let gens: Vec<Code> = h
        .elements()
        .iter()
        .copied()
        .filter(|&x| g.pow(x, g.p() as i64) == 0)
        .collect();
    closure(g, &gens)
}

/// `mho_1(H)`: generated by p-th powers.
pub fn mho1(g: &PcGroup, h: &Subgroup) -> Subgroup {
    let mut gens: Vec<Code> = h
        .elements()
        .iter()
        .map(|&x| g.pow(x, g.p() as i64))
        .collect();
    gens.sort_unstable();
    gens.dedup();
    closure(g, &gens)
}

/// Largest element order in `h`.
pub fn exponent(g: &PcGroup, h: &Subgroup) -> u64 {
    h.elements()
        .iter()
        .map(|&x| g.element_order(x))
        .max()
        .unwrap_or(1)
}

pub fn is_abelian(g: &PcGroup, h: &Subgroup) -> bool {
    let gens = generating_set(g, h);
    gens.iter()
        .all(|&x| gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

pub fn is_elementary_abelian(g: &PcGroup, h: &Subgroup) -> bool {
    is_abelian(g, h) && h.elements().iter().all(|&x| g.pow(x, g.p() as i64) == 0)
}
