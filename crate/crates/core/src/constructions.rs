//! Named presentations, central quotients and central products.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::{Fp, Rref};
use crate::pc::{Code, PcGroup, Presentation, Word};

/// Index of the first generator of the central elementary abelian suffix.
///
/// Generator `k` belongs to the suffix when `g_k^p = 1` and every commutator
/// relation involving `g_k` is trivial; the suffix is the longest run of such
/// generators ending at the last one.
pub fn central_suffix_start(pres: &Presentation) -> usize {
    let n = pres.ngens();
    let quiet = |k: usize| {
        pres.power(k).is_empty()
            && (0..k).all(|i| pres.commutator(k, i).is_empty())
            && (k + 1..n).all(|j| pres.commutator(j, k).is_empty())
    };
    let mut m = n;
    while m > 0 && quiet(m - 1) {
        m -= 1;
    }
    m
}

fn is_central(g: &PcGroup, x: Code) -> bool {
    (0..g.ngens()).all(|i| g.mul(x, g.gen(i)) == g.mul(g.gen(i), x))
}

/// Presentation of `G / <kill>` for central elements lying in the central suffix.
///
/// The kill vectors are row reduced in suffix coordinates; pivot generators are
/// dropped and every tail is reduced modulo the kill space. Surviving
/// generators keep their labels.
pub fn central_quotient(g: &PcGroup, kill: &[Code]) -> Result<Presentation> {
    let pres = g.presentation();
    let n = pres.ngens();
    let m = central_suffix_start(pres);
    let f = Fp::new(g.p())?;
    let mut rows = Vec::new();
    for &w in kill {
        let e = g.exponents(w);
        if e[..m].iter().any(|&x| x != 0) {
            return Err(if is_central(g, w) {
                Error::NotInSocle(g.format(w))
            } else {
                Error::NotCentral(g.format(w))
            });
        }
        rows.push(e[m..].to_vec());
    }
    let rref = if rows.is_empty() {
        Rref {
            matrix: Vec::new(),
            rank: 0,
            pivots: Vec::new(),
        }
    } else {
        f.rref(&rows)
    };
    let pivots: Vec<usize> = rref.pivots.iter().map(|&c| c + m).collect();
    let kept: Vec<usize> = (0..n).filter(|k| !pivots.contains(k)).collect();
    let new_index = |k: usize| kept.iter().position(|&x| x == k);
    let reduce = |w: &Word| -> Word {
        let mut out: Word = Vec::new();
        let mut v = vec![0u32; n - m];
        for &(k, e) in w {
            if k < m {
                out.push((new_index(k).expect("prefix generators are kept"), e));
            } else {
                v[k - m] = e;
            }
        }
        f.reduce_against(&rref, &mut v);
        for (c, &e) in v.iter().enumerate() {
            if e != 0 {
                out.push((new_index(c + m).expect("non-pivot survives"), e));
            }
        }
        out
    };
    let mut q = Presentation::new(pres.p(), kept.len())?;
    if let Some(labels) = pres.labels() {
        q.set_labels(kept.iter().map(|&k| labels[k].clone()).collect())?;
    }
    for (ni, &k) in kept.iter().enumerate() {
        q.set_power(ni, reduce(pres.power(k)))?;
        for (nj, &l) in kept.iter().enumerate().skip(ni + 1) {
            q.set_commutator(nj, ni, reduce(pres.commutator(l, k)))?;
        }
    }
    Ok(q)
}

/// Generator positions of the two factors inside a direct product presentation.
#[derive(Clone, Debug)]
pub struct ProductLayout {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// `A x B` with generators ordered as A's prefix, B's prefix, A's central
/// suffix, B's central suffix, so both suffixes end up in the product's
/// central suffix.
pub fn direct_product(a: &Presentation, b: &Presentation) -> Result<(Presentation, ProductLayout)> {
    if a.p() != b.p() {
        return Err(Error::Parameter(format!(
            "factors have different primes {} and {}",
            a.p(),
            b.p()
        )));
    }
    let (na, nb) = (a.ngens(), b.ngens());
    let (ma, mb) = (central_suffix_start(a), central_suffix_start(b));
    let mut left = vec![0; na];
    let mut right = vec![0; nb];
    let mut pos = 0;
    for slot in left.iter_mut().take(ma) {
        *slot = pos;
        pos += 1;
    }
    for slot in right.iter_mut().take(mb) {
        *slot = pos;
        pos += 1;
    }
    for slot in left.iter_mut().skip(ma) {
        *slot = pos;
        pos += 1;
    }
    for slot in right.iter_mut().skip(mb) {
        *slot = pos;
        pos += 1;
    }
    let mut d = Presentation::new(a.p(), na + nb)?;
    let mut labels = vec![String::new(); na + nb];
    for i in 0..na {
        labels[left[i]] = a.label(i);
    }
    for i in 0..nb {
        let mut l = b.label(i);
        while labels.contains(&l) {
            l.push('\'');
        }
        labels[right[i]] = l;
    }
    d.set_labels(labels)?;
    let remap = |w: &Word, map: &[usize]| -> Word {
        let mut out: Word = w.iter().map(|&(k, e)| (map[k], e)).collect();
        out.sort_unstable();
        out
    };
    for (pres, map) in [(a, &left), (b, &right)] {
        for i in 0..pres.ngens() {
            d.set_power(map[i], remap(pres.power(i), map))?;
            for j in i + 1..pres.ngens() {
                let (hi, lo) = (map[j].max(map[i]), map[j].min(map[i]));
                debug_assert_eq!(hi, map[j]);
                d.set_commutator(hi, lo, remap(pres.commutator(j, i), map))?;
            }
        }
    }
    Ok((d, ProductLayout { left, right }))
}

/// `(A x B) / <a phi(a)^-1>` for central generators `a` of A and central
/// elements `phi(a)` of B.
pub fn central_product(
    a: &PcGroup,
    b: &PcGroup,
    amalgamation: &[(usize, Code)],
) -> Result<Presentation> {
    let (pa, pb) = (a.presentation(), b.presentation());
    let (ma, mb) = (central_suffix_start(pa), central_suffix_start(pb));
    let f = Fp::new(a.p())?;
    let mut left_rows = Vec::new();
    let mut right_rows = Vec::new();
    for &(gen, img) in amalgamation {
        if gen >= pa.ngens() {
            return Err(Error::Parameter(format!(
                "generator {} out of range",
                gen + 1
            )));
        }
        if gen < ma {
            return Err(if is_central(a, a.gen(gen)) {
                Error::NotInSocle(pa.label(gen))
            } else {
                Error::NotCentral(pa.label(gen))
            });
        }
        let e = b.exponents(img);
        if e[..mb].iter().any(|&x| x != 0) {
            return Err(if is_central(b, img) {
                Error::NotInSocle(b.format(img))
            } else {
                Error::NotCentral(b.format(img))
            });
        }
        let mut row = vec![0u32; pa.ngens() - ma];
        row[gen - ma] = 1;
        left_rows.push(row);
        right_rows.push(e[mb..].to_vec());
    }
    let (ra, rb) = if amalgamation.is_empty() {
        (0, 0)
    } else {
        (f.rank(&left_rows), f.rank(&right_rows))
    };
    if ra != rb || ra != amalgamation.len() {
        let p = a.p() as u64;
        return Err(Error::OrderMismatch {
            left: p.pow(ra as u32),
            right: p.pow(rb as u32),
        });
    }
    let (d, layout) = direct_product(pa, pb)?;
    let dg = PcGroup::new(d)?;
    let mut kill = Vec::new();
    for &(gen, img) in amalgamation {
        let mut exps = vec![0u32; dg.ngens()];
        exps[layout.left[gen]] = 1;
        for (k, &e) in b.exponents(img).iter().enumerate() {
            if e != 0 {
                exps[layout.right[k]] = (a.p() - e) % a.p();
            }
        }
        kill.push(dg.code_of(&exps)?);
    }
    central_quotient(&dg, &kill)
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// Parameters accepted by catalog builders. Unused fields are ignored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    pub p: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    /// Overrides the default non-residue (the smallest one).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonresidue: Option<u32>,
}

impl Params {
    pub fn p(p: u32) -> Self {
        Params {
            p,
            ..Default::default()
        }
    }

    pub fn rst(r: u32, s: u32, t: u32) -> Self {
        Params {
            p: 2,
            r: Some(r),
            s: Some(s),
            t: Some(t),
            ..Default::default()
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub constraint: &'static str,
    pub description: &'static str,
    pub notes: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "heisenberg",
        params: &["p"],
        constraint: "p prime",
        description: "Heisenberg group of order p^3 (dihedral of order 8 for p = 2)",
        notes: "",
    },
    CatalogEntry {
        name: "extraspecial_p3",
        params: &["p"],
        constraint: "p prime",
        description: "extraspecial group of order p^3 and exponent p^2 (quaternion for p = 2)",
        notes: "",
    },
    CatalogEntry {
        name: "free_class2_expp",
        params: &["n", "p"],
        constraint: "p odd, n >= 1",
        description: "free class-2 exponent-p group on n generators, order p^(n(n+1)/2)",
        notes: "pc generators x1..xn then [xj,xi] for i < j",
    },
    CatalogEntry {
        name: "F_mod_R",
        params: &["p"],
        constraint: "p odd",
        description: "free class-2 exponent-p group on a,b,c,d modulo <[b,d],[a,d]>, order p^8",
        notes: "",
    },
    CatalogEntry {
        name: "F_mod_R1",
        params: &["p", "nonresidue"],
        constraint: "p odd; nonresidue r defaults to the smallest",
        description: "free class-2 exponent-p group on a,b,c,d modulo <[a,b][c,d],[a,c][b,d]^r>, order p^8",
        notes: "",
    },
    CatalogEntry {
        name: "NY18_type_1_p3",
        params: &["p", "nonresidue"],
        constraint: "p odd; nonresidue r defaults to the smallest",
        description: "class-2 group of order p^8 with [c,d]=[a,b]^-1 and [a,c]=[b,d]^-r",
        notes: "same relators as F_mod_R1, so the presentations coincide",
    },
    CatalogEntry {
        name: "phi23",
        params: &["p"],
        constraint: "p >= 5",
        description: "class-4 group of order p^6 with |Z| = p^2 and K != gamma_2",
        notes: "",
    },
    CatalogEntry {
        name: "phi40",
        params: &["p"],
        constraint: "p >= 5",
        description: "class-4 group of order p^6 with |Z| = p and K = gamma_2",
        notes: "the printed power relations mention a generator alpha that is not in the generator list; it is omitted",
    },
    CatalogEntry {
        name: "phi41",
        params: &["p", "nonresidue"],
        constraint: "p >= 5; nonresidue nu defaults to the smallest",
        description: "class-4 group of order p^6 with |Z| = p, alpha1^p = gamma",
        notes: "",
    },
    CatalogEntry {
        name: "class3_p7_1",
        params: &["p"],
        constraint: "p odd",
        description: "class-3 group of order p^7 with |Z| = p",
        notes: "",
    },
    CatalogEntry {
        name: "class3_p7_2",
        params: &["p"],
        constraint: "p odd",
        description: "class-3 group of order p^7 with |Z| = p^2 = |gamma_3|",
        notes: "",
    },
    CatalogEntry {
        name: "class3_p7_3",
        params: &["p"],
        constraint: "p odd",
        description: "class-3 group of order p^7 with |Z| = p^2, |gamma_3| = p",
        notes: "",
    },
    CatalogEntry {
        name: "class3_p7_4",
        params: &["p"],
        constraint: "p odd",
        description: "class-3 group of order p^7 with |Z| = p^3, |gamma_3| = p and K != gamma_2",
        notes: "",
    },
    CatalogEntry {
        name: "class3_p7_5",
        params: &["p"],
        constraint: "p odd",
        description: "class-3 group of order p^7 with |Z| = p^3, |gamma_3| = p^2 and K != gamma_2",
        notes: "",
    },
    CatalogEntry {
        name: "class4_p7_1",
        params: &["p"],
        constraint: "p odd",
        description: "class-4 group of order p^7 with |Z| = p",
        notes: "inconsistent as printed: [alpha4,alpha3] = gamma contradicts the Hall-Witt identity since alpha3 commutes with alpha1 and alpha2 modulo the center; the checker rejects an associativity or power overlap for every p",
    },
    CatalogEntry {
        name: "class4_p7_2",
        params: &["p"],
        constraint: "p odd",
        description: "class-4 group of order p^7 with |Z| = p^2",
        notes: "inconsistent at p = 3: alpha1^3 = gamma is central but conjugating alpha2 by alpha1^3 picks up gamma from [alpha5,alpha1]",
    },
    CatalogEntry {
        name: "T2_9",
        params: &["r", "s", "t"],
        constraint: "p = 2; r, s, t in {0, 1}",
        description: "special 2-group of order 2^9 on v1..v5; K != gamma_2 exactly when r = s = t = 0",
        notes: "defaults to r = s = t = 0",
    },
];

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    CATALOG
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownCatalog(name.to_string()))
}

fn need_prime(p: u32) -> Result<Fp> {
    Fp::new(p).map_err(|_| Error::Parameter(format!("p = {p} is not prime")))
}

fn need_odd(p: u32) -> Result<Fp> {
    let f = need_prime(p)?;
    if p == 2 {
        return Err(Error::Parameter("p must be odd".into()));
    }
    Ok(f)
}

fn need_at_least_5(p: u32) -> Result<Fp> {
    let f = need_prime(p)?;
    if p < 5 {
        return Err(Error::Parameter(format!("p must be at least 5, got {p}")));
    }
    Ok(f)
}

fn nonresidue(f: &Fp, over: Option<u32>) -> Result<u32> {
    match over {
        None => f.smallest_nonresidue(),
        Some(r) if f.is_quadratic_residue(r)? => Err(Error::Parameter(format!(
            "{r} is a square modulo {}",
            f.p()
        ))),
        Some(r) => Ok(r % f.p()),
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Records `[g_a, g_b] = g_k^e` in either orientation.
///
/// For `a < b` the stored tail is `[g_b, g_a] = g_k^-e`, which requires `g_k`
/// to have trivial p-th power.
fn relate(pres: &mut Presentation, a: usize, b: usize, k: usize, e: i64) -> Result<()> {
    let p = pres.p() as i64;
    if a > b {
        pres.set_commutator(a, b, vec![(k, e.rem_euclid(p) as u32)])
    } else {
        assert!(pres.power(k).is_empty(), "inverting a tail needs g_k^p = 1");
        pres.set_commutator(b, a, vec![(k, (-e).rem_euclid(p) as u32)])
    }
}

/// Free class-2 group with trivial generator powers; exponent p for odd p.
fn free_class2(n: usize, p: u32) -> Result<Presentation> {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
            names.push(format!("[x{},x{}]", j + 1, i + 1));
        }
    }
    let mut pres = Presentation::new(p, n + pairs.len())?;
    pres.set_labels(names)?;
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        pres.set_commutator(j, i, vec![(n + idx, 1)])?;
    }
    Ok(pres)
}

fn four_generator_quotient(p: u32, kill: impl Fn(&PcGroup) -> Vec<Code>) -> Result<Presentation> {
    let mut free = free_class2(4, p)?;
    free.set_labels(labels(&[
        "a", "b", "c", "d", "[b,a]", "[c,a]", "[d,a]", "[c,b]", "[d,b]", "[d,c]",
    ]))?;
    let g = PcGroup::new(free)?;
    central_quotient(&g, &kill(&g))
}

fn heisenberg(p: u32) -> Result<Presentation> {
    need_prime(p)?;
    let mut pres = Presentation::new(p, 3)?;
    pres.set_labels(labels(&["x", "y", "z"]))?;
    pres.set_commutator(1, 0, vec![(2, 1)])?;
    Ok(pres)
}

fn extraspecial_p3(p: u32) -> Result<Presentation> {
    need_prime(p)?;
    let mut pres = Presentation::new(p, 3)?;
    pres.set_labels(labels(&["x", "y", "z"]))?;
    pres.set_commutator(1, 0, vec![(2, 1)])?;
    pres.set_power(0, vec![(2, 1)])?;
    if p == 2 {
        pres.set_power(1, vec![(2, 1)])?;
    }
    Ok(pres)
}

fn phi23(p: u32) -> Result<Presentation> {
    need_at_least_5(p)?;
    // alpha, alpha1, alpha2, alpha3, alpha4, gamma
    let mut pres = Presentation::new(p, 6)?;
    pres.set_labels(labels(&[
        "alpha", "alpha1", "alpha2", "alpha3", "alpha4", "gamma",
    ]))?;
    for i in 1..=3 {
        relate(&mut pres, i, 0, i + 1, 1)?;
    }
    relate(&mut pres, 1, 2, 5, 1)?;
    pres.set_power(0, vec![(5, 1)])?;
    Ok(pres)
}

fn phi40(p: u32) -> Result<Presentation> {
    need_at_least_5(p)?;
    // alpha1, alpha2, beta, beta1, beta2, gamma
    let mut pres = Presentation::new(p, 6)?;
    pres.set_labels(labels(&[
        "alpha1", "alpha2", "beta", "beta1", "beta2", "gamma",
    ]))?;
    relate(&mut pres, 0, 1, 2, 1)?;
    relate(&mut pres, 2, 0, 3, 1)?;
    relate(&mut pres, 2, 1, 4, 1)?;
    relate(&mut pres, 3, 1, 5, 1)?;
    relate(&mut pres, 4, 0, 5, 1)?;
    Ok(pres)
}

fn phi41(p: u32, nu: Option<u32>) -> Result<Presentation> {
    let f = need_at_least_5(p)?;
    let nu = nonresidue(&f, nu)? as i64;
    let mut pres = Presentation::new(p, 6)?;
    pres.set_labels(labels(&[
        "alpha1", "alpha2", "beta", "beta1", "beta2", "gamma",
    ]))?;
    relate(&mut pres, 0, 1, 2, 1)?;
    relate(&mut pres, 2, 0, 3, 1)?;
    relate(&mut pres, 2, 1, 4, 1)?;
    relate(&mut pres, 0, 3, 5, 1)?;
    relate(&mut pres, 1, 4, 5, -nu)?;
    pres.set_power(0, vec![(5, 1)])?;
    Ok(pres)
}

/// Relations `[alpha_a, alpha_b] = target` on alpha1..alpha6, gamma (1-based; 7 is gamma).
fn order_p7(p: u32, rels: &[(usize, usize, usize)], alpha1_power: bool) -> Result<Presentation> {
    need_odd(p)?;
    let mut pres = Presentation::new(p, 7)?;
    pres.set_labels(labels(&[
        "alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "alpha6", "gamma",
    ]))?;
    for &(a, b, c) in rels {
        relate(&mut pres, a - 1, b - 1, c - 1, 1)?;
    }
    if alpha1_power {
        pres.set_power(0, vec![(6, 1)])?;
    }
    Ok(pres)
}

const G: usize = 7;

fn t2_9(r: u32, s: u32, t: u32) -> Result<Presentation> {
    for (name, v) in [("r", r), ("s", s), ("t", t)] {
        if v > 1 {
            return Err(Error::Parameter(format!("{name} must be 0 or 1")));
        }
    }
    let mut free = free_class2(5, 2)?;
    let mut names: Vec<String> = (1..=5).map(|i| format!("v{i}")).collect();
    for i in 1..=5 {
        for j in i + 1..=5 {
            names.push(format!("[v{j},v{i}]"));
        }
    }
    free.set_labels(names)?;
    let g = PcGroup::new(free)?;
    let v = |i: usize| g.gen(i - 1);
    let c = |i: usize, j: usize| g.comm(v(i), v(j));
    let c34 = c(3, 4);
    let kill = vec![
        c(4, 2),
        c(5, 1),
        g.mul(c(1, 2), g.pow(c34, -(r as i64))),
        g.mul(c(2, 3), g.pow(c34, -(s as i64))),
        g.mul(c(3, 1), g.pow(c34, -(t as i64))),
        g.mul(c34, g.inv(c(3, 5))),
    ];
    central_quotient(&g, &kill)
}

/// Builds a catalog presentation and checks its consistency.
pub fn build(name: &str, params: &Params) -> Result<Presentation> {
    let pres = build_unchecked(name, params)?;
    PcGroup::new(pres.clone())?.consistency_check()?;
    Ok(pres)
}

/// Builds a catalog presentation exactly as listed, without the consistency check.
pub fn build_unchecked(name: &str, params: &Params) -> Result<Presentation> {
    let p = params.p;
    let pres = match name {
        "heisenberg" => heisenberg(p)?,
        "extraspecial_p3" => extraspecial_p3(p)?,
        "free_class2_expp" => {
            need_odd(p)?;
            let n = params
                .n
                .ok_or_else(|| Error::Parameter("n is required".into()))?;
            if n == 0 {
                return Err(Error::Parameter("n must be positive".into()));
            }
            free_class2(n, p)?
        }
        "F_mod_R" => {
            need_odd(p)?;
            four_generator_quotient(p, |g| {
                let x = |i| g.gen(i);
                vec![g.comm(x(1), x(3)), g.comm(x(0), x(3))]
            })?
        }
        "F_mod_R1" | "NY18_type_1_p3" => {
            let f = need_odd(p)?;
            let r = nonresidue(&f, params.nonresidue)? as i64;
            four_generator_quotient(p, |g| {
                let x = |i| g.gen(i);
                vec![
                    g.mul(g.comm(x(0), x(1)), g.comm(x(2), x(3))),
                    g.mul(g.comm(x(0), x(2)), g.pow(g.comm(x(1), x(3)), r)),
                ]
            })?
        }
        "phi23" => phi23(p)?,
        "phi40" => phi40(p)?,
        "phi41" => phi41(p, params.nonresidue)?,
        "class3_p7_1" => order_p7(
            p,
            &[
                (2, 1, 4),
                (3, 1, 5),
                (3, 2, 6),
                (4, 2, G),
                (5, 3, G),
                (5, 2, G),
                (6, 1, G),
            ],
            true,
        )?,
        "class3_p7_2" => order_p7(p, &[(2, 1, 4), (3, 1, 5), (4, 1, 6), (5, 1, G)], false)?,
        "class3_p7_3" => order_p7(
            p,
            &[(2, 1, 4), (3, 1, 5), (3, 2, 6), (4, 2, G), (5, 3, G)],
            true,
        )?,
        "class3_p7_4" => order_p7(p, &[(2, 1, 4), (3, 1, 5), (3, 2, 6), (4, 1, G)], false)?,
        "class3_p7_5" => order_p7(p, &[(2, 1, 4), (3, 1, 5), (4, 1, 6), (4, 2, G)], false)?,
        "class4_p7_1" => order_p7(
            p,
            &[
                (2, 1, 4),
                (4, 1, 5),
                (4, 2, 6),
                (4, 3, G),
                (5, 1, G),
                (6, 2, G),
                (3, 1, G),
            ],
            false,
        )?,
        "class4_p7_2" => order_p7(
            p,
            &[(2, 1, 4), (4, 1, 5), (4, 2, 6), (3, 2, G), (5, 1, G)],
            true,
        )?,
        "T2_9" => t2_9(
            params.r.unwrap_or(0),
            params.s.unwrap_or(0),
            params.t.unwrap_or(0),
        )?,
        other => return Err(Error::UnknownCatalog(other.to_string())),
    };
    Ok(pres)
}

/// Builds and wraps a catalog entry.
pub fn group(name: &str, params: &Params) -> Result<PcGroup> {
    PcGroup::new(build(name, params)?)
}

/// Evaluates a word given by generator labels, e.g. `[("alpha4", 1), ("gamma", 1)]`.
pub fn word_by_labels(g: &PcGroup, letters: &[(&str, i64)]) -> Result<Code> {
    let pres = g.presentation();
    let mut out = Vec::new();
    for &(l, e) in letters {
        let i = (0..pres.ngens())
            .find(|&i| pres.label(i) == l)
            .ok_or_else(|| Error::Parameter(format!("no generator labelled `{l}`")))?;
        out.push((i, e));
    }
    g.eval_word(&out)
}
