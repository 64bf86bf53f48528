//! Alternating bilinear maps `V x V -> W` over `F_p` modelling class-2 stem groups.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::{gl_order, Fp};
use crate::pc::{Code, PcGroup};
use crate::structure::{
    center, closure, derived_subgroup, is_elementary_abelian, lower_central_series,
    nilpotency_class,
};

pub type Vector = Vec<u32>;

/// Default cap on `|GL(V)|` for [`pseudo_isometry`].
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Digits of `n` in base `p`, most significant first.
fn digits(mut n: u64, p: u32, len: usize) -> Vector {
    let mut v = vec![0; len];
    for slot in v.iter_mut().rev() {
        *slot = (n % p as u64) as u32;
        n /= p as u64;
    }
    v
}

fn pack(v: &[u32], p: u32) -> u64 {
    v.iter().fold(0, |acc, &x| acc * p as u64 + x as u64)
}

/// All vectors of `F_p^n` whose first nonzero entry is 1.
pub fn projective_points(p: u32, n: usize) -> Vec<Vector> {
    (1..(p as u64).pow(n as u32))
        .map(|c| digits(c, p, n))
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AltBilinear {
    p: u32,
    dv: usize,
    dw: usize,
    /// `table[i][j] = B(e_i, e_j)`.
    table: Vec<Vec<Vector>>,
}

impl AltBilinear {
    /// Builds a map from the values `B(e_i, e_j)` for `i < j`, listed row by row.
    pub fn from_upper(p: u32, dv: usize, dw: usize, upper: &[Vector]) -> Result<Self> {
        let f = Fp::new(p)?;
        if upper.len() != dv * dv.saturating_sub(1) / 2 {
            return Err(Error::Parameter(format!(
                "expected {} values for dim V = {dv}, got {}",
                dv * dv.saturating_sub(1) / 2,
                upper.len()
            )));
        }
        let mut table = vec![vec![vec![0; dw]; dv]; dv];
        let mut it = upper.iter();
        for i in 0..dv {
            for j in i + 1..dv {
                let w = it.next().expect("length checked");
                if w.len() != dw {
                    return Err(Error::Parameter(format!(
                        "value of length {} in W of dimension {dw}",
                        w.len()
                    )));
                }
                table[i][j] = w.iter().map(|&x| x % p).collect();
                table[j][i] = table[i][j].iter().map(|&x| f.neg(x)).collect();
            }
        }
        Ok(AltBilinear { p, dv, dw, table })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim_v(&self) -> usize {
        self.dv
    }

    pub fn dim_w(&self) -> usize {
        self.dw
    }

    pub fn basis_value(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    fn fp(&self) -> Fp {
        Fp::new(self.p).expect("prime checked at construction")
    }

    pub fn eval(&self, u: &[u32], v: &[u32]) -> Vector {
        let f = self.fp();
        let mut out = vec![0; self.dw];
        for i in 0..self.dv {
            if u[i] == 0 {
                continue;
            }
            for j in 0..self.dv {
                let c = f.mul(u[i], v[j]);
                if c == 0 || i == j {
                    continue;
                }
                for (o, &t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o = f.add(*o, f.mul(c, t));
                }
            }
        }
        out
    }

    /// Rows `B(u, e_j)`; the row space is `B(u, V)`.
    pub fn slice(&self, u: &[u32]) -> Vec<Vector> {
        (0..self.dv)
            .map(|j| {
                let mut e = vec![0; self.dv];
                e[j] = 1;
                self.eval(u, &e)
            })
            .collect()
    }

    /// Rank of `v -> B(u, v)`.
    pub fn slice_rank(&self, u: &[u32]) -> usize {
        if u.iter().all(|&x| x == 0) || self.dw == 0 {
            return 0;
        }
        self.fp().rank(&self.slice(u))
    }

    /// `{B(u, v)}`, sorted lexicographically.
    pub fn image(&self) -> Vec<Vector> {
        let f = self.fp();
        let mut seen: BTreeSet<u64> = BTreeSet::from([0]);
        for u in projective_points(self.p, self.dv) {
            let rref = f.rref(&self.slice(&u));
            let basis = &rref.matrix[..rref.rank];
            for c in 0..(self.p as u64).pow(rref.rank as u32) {
                let coeffs = digits(c, self.p, rref.rank);
                let mut w = vec![0; self.dw];
                for (k, row) in basis.iter().enumerate() {
                    for (x, &y) in w.iter_mut().zip(row) {
                        *x = f.add(*x, f.mul(coeffs[k], y));
                    }
                }
                seen.insert(pack(&w, self.p));
            }
        }
        seen.into_iter()
            .map(|c| digits(c, self.p, self.dw))
            .collect()
    }

    /// Number of nonzero `u` of each slice rank.
    pub fn rank_spectrum(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for u in projective_points(self.p, self.dv) {
            *out.entry(self.slice_rank(&u)).or_insert(0) += self.p as u64 - 1;
        }
        out
    }

    /// `{p^rank(u)}` together with 1, sorted.
    pub fn conjugate_type(&self) -> Vec<u64> {
        let mut out: BTreeSet<u64> = BTreeSet::from([1]);
        for r in self.rank_spectrum().keys() {
            out.insert((self.p as u64).pow(*r as u32));
        }
        out.into_iter().collect()
    }

    /// Spanning `(v1, v2, v3, v4)` of a four-dimensional `V` with
    /// `B(v1, v2) = 0 = B(v3, v4)`, if one exists.
    ///
    /// Enumerates the isotropic planes and looks for two that meet trivially.
    pub fn hyperbolic_quadruple(&self) -> Result<Option<[Vector; 4]>> {
        if self.dv != 4 {
            return Err(Error::Parameter(format!(
                "quadruple search needs dim V = 4, got {}",
                self.dv
            )));
        }
        let f = self.fp();
        let points = projective_points(self.p, 4);
        let mut planes: BTreeSet<Vec<Vector>> = BTreeSet::new();
        for (a, u) in points.iter().enumerate() {
            for v in &points[a + 1..] {
                if self.eval(u, v).iter().all(|&x| x == 0) {
                    let r = f.rref(&[u.clone(), v.clone()]);
                    planes.insert(r.matrix);
                }
            }
        }
        let planes: Vec<Vec<Vector>> = planes.into_iter().collect();
        for (a, s) in planes.iter().enumerate() {
            for t in &planes[a..] {
                let rows = [s[0].clone(), s[1].clone(), t[0].clone(), t[1].clone()];
                if f.rank(&rows) == 4 {
                    return Ok(Some(rows));
                }
            }
        }
        Ok(None)
    }
}

/// Echelon form of a partial linear map on `W`, kept fully reduced on the source side.
#[derive(Clone)]
struct PartialMap {
    rows: Vec<(Vector, Vector)>,
    pivots: Vec<usize>,
}

impl PartialMap {
    fn new() -> Self {
        PartialMap {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Adds `s -> t`; false when it contradicts the pairs already present.
    fn insert(&mut self, f: &Fp, mut s: Vector, mut t: Vector) -> bool {
        for ((rs, rt), &c) in self.rows.iter().zip(&self.pivots) {
            let k = s[c];
            if k != 0 {
                for (x, &y) in s.iter_mut().zip(rs) {
                    *x = f.sub(*x, f.mul(k, y));
                }
                for (x, &y) in t.iter_mut().zip(rt) {
                    *x = f.sub(*x, f.mul(k, y));
                }
            }
        }
        let Some(c) = s.iter().position(|&x| x != 0) else {
            return t.iter().all(|&x| x == 0);
        };
        let inv = f.inv(s[c]).expect("nonzero pivot");
        s.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        t.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        for (rs, rt) in self.rows.iter_mut() {
            let k = rs[c];
            if k != 0 {
                for (x, &y) in rs.iter_mut().zip(&s) {
                    *x = f.sub(*x, f.mul(k, y));
                }
                for (x, &y) in rt.iter_mut().zip(&t) {
                    *x = f.sub(*x, f.mul(k, y));
                }
            }
        }
        self.rows.push((s, t));
        self.pivots.push(c);
        true
    }

    /// Matrix of the map when the sources span `W`, row `j` being the image of `e_j`.
    fn matrix(&self, dw: usize) -> Option<Vec<Vector>> {
        if self.rows.len() != dw {
            return None;
        }
        let mut m = vec![Vec::new(); dw];
        for ((_, t), &c) in self.rows.iter().zip(&self.pivots) {
            m[c] = t.clone();
        }
        Some(m)
    }
}

/// `(phi, theta)` with `theta(B1(u, v)) = B2(phi u, phi v)`; row `i` of each
/// matrix is the image of the `i`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudoIsometry {
    pub phi: Vec<Vector>,
    pub theta: Vec<Vector>,
}

impl PseudoIsometry {
    /// Checks the defining identity on all basis pairs.
    pub fn verify(&self, b1: &AltBilinear, b2: &AltBilinear) -> bool {
        let f = b1.fp();
        let apply_theta = |w: &Vector| {
            let mut out = vec![0; b2.dw];
            for (k, &c) in w.iter().enumerate() {
                for (o, &t) in out.iter_mut().zip(&self.theta[k]) {
                    *o = f.add(*o, f.mul(c, t));
                }
            }
            out
        };
        f.rank(&self.phi) == b1.dv
            && (b2.dw == 0 || f.rank(&self.theta) == b2.dw)
            && (0..b1.dv).all(|i| {
                (i + 1..b1.dv)
                    .all(|j| apply_theta(&b1.table[i][j]) == b2.eval(&self.phi[i], &self.phi[j]))
            })
    }
}

/// Invariants compared before any search: dimensions, image size, slice-rank spectrum.
pub fn invariants_match(b1: &AltBilinear, b2: &AltBilinear) -> bool {
    b1.p == b2.p
        && b1.dv == b2.dv
        && b1.dw == b2.dw
        && b1.rank_spectrum() == b2.rank_spectrum()
        && b1.image().len() == b2.image().len()
}

/// Searches `GL(V)` row by row for a pseudo-isometry from `b1` to `b2`.
///
/// Each new row fixes `theta` on the values `B1(e_i, e_k)`; a contradiction
/// prunes the branch. Fails with [`Error::BudgetExceeded`] when `|GL(V)|`
/// exceeds `budget`.
pub fn pseudo_isometry(
    b1: &AltBilinear,
    b2: &AltBilinear,
    budget: u128,
) -> Result<Option<PseudoIsometry>> {
    if !invariants_match(b1, b2) {
        return Ok(None);
    }
    let required = gl_order(b1.dv, b1.p);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let f = b1.fp();
    let p = b1.p;
    let n = b1.dv;
    let all: Vec<Vector> = (1..(p as u64).pow(n as u32))
        .map(|c| digits(c, p, n))
        .collect();
    let ranks2: Vec<usize> = all.iter().map(|v| b2.slice_rank(v)).collect();
    let ranks1: Vec<usize> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            b1.slice_rank(&e)
        })
        .collect();

    struct Search<'a> {
        f: Fp,
        b1: &'a AltBilinear,
        b2: &'a AltBilinear,
        all: Vec<Vector>,
        ranks1: Vec<usize>,
        ranks2: Vec<usize>,
    }

    impl Search<'_> {
        fn go(&self, rows: &mut Vec<Vector>, theta: &PartialMap) -> Option<PseudoIsometry> {
            let k = rows.len();
            if k == self.b1.dv {
                let m = theta.matrix(self.b1.dw)?;
                return Some(PseudoIsometry {
                    phi: rows.clone(),
                    theta: m,
                });
            }
            for (idx, cand) in self.all.iter().enumerate() {
                if self.ranks2[idx] != self.ranks1[k] {
                    continue;
                }
                let mut trial = rows.clone();
                trial.push(cand.clone());
                if self.f.rank(&trial) != k + 1 {
                    continue;
                }
                let mut next = theta.clone();
                let ok = (0..k).all(|i| {
                    next.insert(
                        &self.f,
                        self.b1.table[i][k].clone(),
                        self.b2.eval(&rows[i], cand),
                    )
                });
                if !ok {
                    continue;
                }
                rows.push(cand.clone());
                if let Some(found) = self.go(rows, &next) {
                    return Some(found);
                }
                rows.pop();
            }
            None
        }
    }

    let search = Search {
        f,
        b1,
        b2,
        all,
        ranks1,
        ranks2,
    };
    Ok(search.go(&mut Vec::new(), &PartialMap::new()))
}

/// A class-2 stem group together with the bases realising its bilinear map.
#[derive(Clone, Debug)]
pub struct BilinearModel {
    pub map: AltBilinear,
    /// Lifts of a basis of `G/Z(G)`.
    pub v_basis: Vec<Code>,
    /// Basis of `gamma_2(G)`.
    pub w_basis: Vec<Code>,
    w_coords: HashMap<Code, Vector>,
}

impl BilinearModel {
    /// Coordinates of an element of `gamma_2`.
    pub fn w_coords(&self, x: Code) -> Option<&Vector> {
        self.w_coords.get(&x)
    }

    fn product(g: &PcGroup, basis: &[Code], coords: &[u32]) -> Code {
        basis
            .iter()
            .zip(coords)
            .fold(g.identity(), |acc, (&b, &e)| g.mul(acc, g.pow(b, e as i64)))
    }

    /// `prod w_i^{c_i}`.
    pub fn w_element(&self, g: &PcGroup, coords: &[u32]) -> Code {
        Self::product(g, &self.w_basis, coords)
    }

    /// `prod v_i^{c_i}`, a lift of the vector to `G`.
    pub fn lift(&self, g: &PcGroup, coords: &[u32]) -> Code {
        Self::product(g, &self.v_basis, coords)
    }
}

/// Extracts `B(xZ, yZ) = [x, y]` from a class-2 group with `Z(G) = gamma_2(G)`
/// elementary abelian and `G/Z(G)` elementary abelian.
///
/// The V-basis is chosen greedily from the pc generators modulo the center;
/// the W-basis from the pc generators lying in `gamma_2`, completed from the
/// series generators when needed.
pub fn extract_bilinear(g: &PcGroup) -> Result<BilinearModel> {
    let p = g.p();
    let series = lower_central_series(g);
    let class = nilpotency_class(&series);
    if class != 2 {
        return Err(Error::Hypothesis(format!(
            "nilpotency class is {class}, not 2"
        )));
    }
    let z = center(g);
    let d = derived_subgroup(g);
    if z != d {
        return Err(Error::Hypothesis(format!(
            "Z(G) has order {} but gamma_2(G) has order {}",
            z.order(),
            d.order()
        )));
    }
    if !is_elementary_abelian(g, &d) {
        return Err(Error::Hypothesis(
            "gamma_2(G) is not elementary abelian".into(),
        ));
    }
    if (0..g.ngens()).any(|i| !z.contains(g.pow(g.gen(i), p as i64))) {
        return Err(Error::Hypothesis("G/Z(G) is not elementary abelian".into()));
    }
    let mut w_basis: Vec<Code> = Vec::new();
    let mut w_span = crate::structure::Subgroup::trivial();
    let candidates: Vec<Code> = (0..g.ngens())
        .map(|i| g.gen(i))
        .chain(series[1].gens.iter().copied())
        .collect();
    for x in candidates {
        if d.contains(x) && !w_span.contains(x) {
            w_basis.push(x);
            w_span = closure(g, &w_basis);
        }
    }
    let mut v_basis = Vec::new();
    let mut span = z.clone();
    for i in 0..g.ngens() {
        let x = g.gen(i);
        if !span.contains(x) {
            v_basis.push(x);
            let gens: Vec<Code> = w_basis.iter().chain(&v_basis).copied().collect();
            span = closure(g, &gens);
        }
    }
    let dv = v_basis.len();
    let dw = w_basis.len();
    let mut w_coords = HashMap::with_capacity((p as usize).pow(dw as u32));
    for c in 0..(p as u64).pow(dw as u32) {
        let v = digits(c, p, dw);
        w_coords.insert(BilinearModel::product(g, &w_basis, &v), v);
    }
    let mut upper = Vec::new();
    for i in 0..dv {
        for j in i + 1..dv {
            upper.push(w_coords[&g.comm(v_basis[i], v_basis[j])].clone());
        }
    }
    Ok(BilinearModel {
        map: AltBilinear::from_upper(p, dv, dw, &upper)?,
        v_basis,
        w_basis,
        w_coords,
    })
}
