//! Power-commutator presentations with all relative orders equal to p.
//!
//! Generators are numbered from 0 internally. A presentation stores, for each
//! generator `g_i`, the tail of `g_i^p` (a normal word in generators above
//! `i`) and, for each pair `j > i`, the tail of `[g_j, g_i]` (a normal word in
//! generators above `j`). Commutators follow `[x, y] = x^-1 y^-1 x y`.
//!
//! Elements are normal words `g_0^e_0 ... g_{n-1}^e_{n-1}` with `0 <= e_k < p`.
//! They are packed into a `u64` code in base p with `g_0` the most significant
//! digit, so numeric order of codes is lexicographic order of exponent vectors.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::is_prime;

/// A normal word: strictly increasing generator indices with exponents in `1..p`.
pub type Word = Vec<(usize, u32)>;

/// Packed element code; see the module documentation.
pub type Code = u64;

/// Levels with at most this many elements get a full conjugation table.
const TABLE_LIMIT: u64 = 1 << 21;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    p: u32,
    ngens: usize,
    labels: Option<Vec<String>>,
    powers: Vec<Word>,
    commutators: Vec<Vec<Word>>,
}

impl Presentation {
    /// A presentation of the elementary abelian group of order `p^ngens`.
    pub fn new(p: u32, ngens: usize) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Presentation {
            p,
            ngens,
            labels: None,
            powers: vec![Vec::new(); ngens],
            commutators: (0..ngens).map(|j| vec![Vec::new(); j]).collect(),
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of generator `i`, defaulting to `g{i+1}`.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("g{}", i + 1),
        }
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.ngens {
            return Err(Error::Presentation(format!(
                "expected {} labels, got {}",
                self.ngens,
                labels.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if l.is_empty()
                || l.contains(['"', '\\'])
                || l.chars().any(char::is_control)
                || !seen.insert(l.as_str())
            {
                return Err(Error::Presentation(format!("bad or duplicate label `{l}`")));
            }
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn power(&self, i: usize) -> &Word {
        &self.powers[i]
    }

    /// Tail of `[g_j, g_i]`, for `j > i`.
    pub fn commutator(&self, j: usize, i: usize) -> &Word {
        &self.commutators[j][i]
    }

    fn check_word(&self, word: &Word, above: usize, what: &str) -> Result<()> {
        let mut last = None;
        for &(k, e) in word {
            if k >= self.ngens {
                return Err(Error::Presentation(format!(
                    "{what}: generator {} out of range",
                    k + 1
                )));
            }
            if k <= above {
                return Err(Error::Presentation(format!(
                    "{what}: tail references lower generator {}",
                    k + 1
                )));
            }
            if last.is_some_and(|l| k <= l) {
                return Err(Error::Presentation(format!(
                    "{what}: tail is not a normal word"
                )));
            }
            if e == 0 || e >= self.p {
                return Err(Error::Presentation(format!(
                    "{what}: exponent {e} outside 1..{}",
                    self.p
                )));
            }
            last = Some(k);
        }
        Ok(())
    }

    /// Sets the tail of `g_i^p`.
    pub fn set_power(&mut self, i: usize, word: Word) -> Result<()> {
        if i >= self.ngens {
            return Err(Error::Presentation(format!(
                "generator {} out of range",
                i + 1
            )));
        }
        self.check_word(&word, i, &format!("power of g{}", i + 1))?;
        self.powers[i] = word;
        Ok(())
    }

    /// Sets the tail of `[g_j, g_i]`; requires `j > i`.
    pub fn set_commutator(&mut self, j: usize, i: usize, word: Word) -> Result<()> {
        if j >= self.ngens || i >= j {
            return Err(Error::Presentation(format!(
                "commutator ({}, {}) needs {} >= j > i",
                j + 1,
                i + 1,
                self.ngens
            )));
        }
        self.check_word(&word, j, &format!("commutator ({}, {})", j + 1, i + 1))?;
        self.commutators[j][i] = word;
        Ok(())
    }
}

/// A test word of the consistency check. Indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Overlap {
    /// `(g_k g_j) g_i` against `g_k (g_j g_i)` with `k > j > i`.
    Associativity { k: usize, j: usize, i: usize },
    /// `(g_j^p) g_i` against `g_j^(p-1) (g_j g_i)` with `j > i`.
    PowerLeft { j: usize, i: usize },
    /// `g_j (g_i^p)` against `(g_j g_i) g_i^(p-1)` with `j > i`.
    PowerRight { j: usize, i: usize },
    /// `g_i (g_i^p)` against `(g_i^p) g_i`.
    PowerSelf { i: usize },
}

impl fmt::Display for Overlap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Overlap::Associativity { k, j, i } => {
                write!(f, "g{} g{} g{}", k + 1, j + 1, i + 1)
            }
            Overlap::PowerLeft { j, i } => write!(f, "g{}^p g{}", j + 1, i + 1),
            Overlap::PowerRight { j, i } => write!(f, "g{} g{}^p", j + 1, i + 1),
            Overlap::PowerSelf { i } => write!(f, "g{}^(p+1)", i + 1),
        }
    }
}

/// The first overlap whose two collections disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inconsistency {
    pub overlap: Overlap,
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

impl fmt::Display for Inconsistency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "overlap {} collects to {:?} and {:?}",
            self.overlap, self.left, self.right
        )
    }
}

/// Multiplication engine for a fixed presentation.
///
/// Level `l` is the subgroup `G_l = <g_l, ..., g_{n-1}>`, whose codes are
/// exactly `0..p^(n-l)`. Conjugation by `g_l` is an automorphism of `G_{l+1}`;
/// it is stored as a table when `G_{l+1}` is small and otherwise evaluated
/// from the images of the generators.
#[derive(Clone, Debug)]
struct Collector {
    p: u64,
    n: usize,
    place: Vec<u64>,
    order: u64,
    power: Vec<Code>,
    /// `conj_pow[l][k - l - 1][c]` is `(g_k^{g_l})^c`.
    conj_pow: Vec<Vec<Vec<Code>>>,
    tables: Vec<Option<Vec<Code>>>,
}

fn word_code(place: &[u64], w: &Word) -> Code {
    w.iter().map(|&(k, e)| e as u64 * place[k]).sum()
}

impl Collector {
    fn build(pres: &Presentation) -> Result<Self> {
        let p = pres.p as u64;
        let n = pres.ngens;
        let mut place = vec![0u64; n];
        let mut acc: u64 = 1;
        for i in (0..n).rev() {
            place[i] = acc;
            acc = acc.checked_mul(p).filter(|&v| v < 1 << 62).ok_or_else(|| {
                Error::Unsupported(format!("group of order {p}^{n} is too large"))
            })?;
        }
        let power = pres.powers.iter().map(|w| word_code(&place, w)).collect();
        let mut c = Collector {
            p,
            n,
            place,
            order: acc,
            power,
            conj_pow: vec![Vec::new(); n],
            tables: vec![None; n],
        };
        for lvl in (0..n).rev() {
            let mut cp = Vec::with_capacity(n - lvl - 1);
            for k in lvl + 1..n {
                let base = c.place[k] + word_code(&c.place, &pres.commutators[k][lvl]);
                let mut pows = Vec::with_capacity(p as usize);
                let mut cur = 0;
                for _ in 0..p {
                    pows.push(cur);
                    cur = c.mul_at(lvl + 1, cur, base);
                }
                cp.push(pows);
            }
            c.conj_pow[lvl] = cp;
            if c.place[lvl] <= TABLE_LIMIT {
                let size = c.place[lvl] as usize;
                let mut t = vec![0u64; size];
                let mut k = n;
                for x in 1..size as u64 {
                    while k > lvl + 1 && c.place[k - 1] <= x {
                        k -= 1;
                    }
                    let d = x / c.place[k];
                    let r = x % c.place[k];
                    t[x as usize] = c.mul_at(
                        lvl + 1,
                        c.conj_pow[lvl][k - lvl - 1][d as usize],
                        t[r as usize],
                    );
                }
                c.tables[lvl] = Some(t);
            }
        }
        Ok(c)
    }

    /// Conjugation by `g_lvl` applied to `t` in `G_{lvl+1}`.
    fn phi(&self, lvl: usize, t: Code) -> Code {
        if let Some(tab) = &self.tables[lvl] {
            return tab[t as usize];
        }
        let mut res = 0;
        let mut rem = t;
        for k in lvl + 1..self.n {
            let d = rem / self.place[k];
            rem %= self.place[k];
            if d > 0 {
                res = self.mul_at(lvl + 1, res, self.conj_pow[lvl][k - lvl - 1][d as usize]);
            }
        }
        res
    }

    /// Product of `x` and `y` in `G_lvl`.
    fn mul_at(&self, lvl: usize, x: Code, y: Code) -> Code {
        if y == 0 {
            return x;
        }
        if x == 0 {
            return y;
        }
        let pl = self.place[lvl];
        let (a, xr) = (x / pl, x % pl);
        let (b, yr) = (y / pl, y % pl);
        if b == 0 {
            return a * pl + self.mul_at(lvl + 1, xr, yr);
        }
        let mut t = xr;
        for _ in 0..b {
            t = self.phi(lvl, t);
        }
        let mut s = a + b;
        let mut z = self.mul_at(lvl + 1, t, yr);
        if s >= self.p {
            s -= self.p;
            z = self.mul_at(lvl + 1, self.power[lvl], z);
        }
        s * pl + z
    }

    fn inv_at(&self, lvl: usize, x: Code) -> Code {
        if x == 0 {
            return 0;
        }
        let pl = self.place[lvl];
        let a = x / pl;
        if a == 0 {
            return self.inv_at(lvl + 1, x);
        }
        let g = (self.p - a) * pl;
        let z = self.mul_at(lvl, x, g);
        debug_assert!(z < pl);
        self.mul_at(lvl, g, self.inv_at(lvl + 1, z))
    }
}

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// A presentation together with its collector.
#[derive(Debug)]
pub struct PcGroup {
    pres: Presentation,
    col: Collector,
    gen_inv: Vec<Code>,
    id: u64,
}

/// An element tagged with the group it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    group: u64,
    code: Code,
}

impl Element {
    pub fn code(&self) -> Code {
        self.code
    }
}

impl PcGroup {
    /// Builds the collector. The presentation is not checked for consistency;
    /// see [`PcGroup::consistency_check`].
    pub fn new(pres: Presentation) -> Result<Self> {
        let col = Collector::build(&pres)?;
        let gen_inv = (0..pres.ngens)
            .map(|i| col.inv_at(0, col.place[i]))
            .collect();
        Ok(PcGroup {
            pres,
            col,
            gen_inv,
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
        })
    }

    /// Builds the collector and rejects inconsistent presentations.
    pub fn new_consistent(pres: Presentation) -> Result<Self> {
        let g = Self::new(pres)?;
        g.consistency_check()?;
        Ok(g)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn p(&self) -> u32 {
        self.pres.p
    }

    pub fn ngens(&self) -> usize {
        self.pres.ngens
    }

    /// `|G| = p^n`.
    pub fn order(&self) -> u64 {
        self.col.order
    }

    pub fn identity(&self) -> Code {
        0
    }

    /// Code of the generator `g_i`.
    pub fn gen(&self, i: usize) -> Code {
        self.col.place[i]
    }

    pub fn gen_inv(&self, i: usize) -> Code {
        self.gen_inv[i]
    }

    pub fn exponent_at(&self, x: Code, i: usize) -> u32 {
        ((x / self.col.place[i]) % self.col.p) as u32
    }

    pub fn exponents(&self, x: Code) -> Vec<u32> {
        (0..self.ngens()).map(|i| self.exponent_at(x, i)).collect()
    }

    /// Code of the normal word with the given exponents (reduced mod p).
    pub fn code_of(&self, exps: &[u32]) -> Result<Code> {
        if exps.len() != self.ngens() {
            return Err(Error::Presentation(format!(
                "expected {} exponents, got {}",
                self.ngens(),
                exps.len()
            )));
        }
        Ok(exps
            .iter()
            .zip(&self.col.place)
            .map(|(&e, &pl)| (e as u64 % self.col.p) * pl)
            .sum())
    }

    pub fn mul(&self, x: Code, y: Code) -> Code {
        self.col.mul_at(0, x, y)
    }

    pub fn inv(&self, x: Code) -> Code {
        self.col.inv_at(0, x)
    }

    pub fn pow(&self, x: Code, k: i64) -> Code {
        let mut base = if k < 0 { self.inv(x) } else { x };
        let mut e = k.unsigned_abs();
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn comm(&self, x: Code, y: Code) -> Code {
        self.mul(self.inv(self.mul(y, x)), self.mul(x, y))
    }

    /// `x^g = g^-1 x g`.
    pub fn conj(&self, x: Code, g: Code) -> Code {
        self.mul(self.inv(g), self.mul(x, g))
    }

    /// `x^{g_i}`.
    pub fn conj_gen(&self, x: Code, i: usize) -> Code {
        self.mul(self.gen_inv[i], self.mul(x, self.col.place[i]))
    }

    /// Order of an element.
    pub fn element_order(&self, x: Code) -> u64 {
        let mut ord = 1;
        let mut y = x;
        while y != 0 {
            y = self.pow(y, self.col.p as i64);
            ord *= self.col.p;
        }
        ord
    }

    /// Evaluates a word of `(generator, exponent)` letters; exponents may be negative.
    pub fn eval_word(&self, letters: &[(usize, i64)]) -> Result<Code> {
        let mut acc = 0;
        for &(g, e) in letters {
            if g >= self.ngens() {
                return Err(Error::Presentation(format!(
                    "generator {} out of range",
                    g + 1
                )));
            }
            acc = self.mul(acc, self.pow(self.gen(g), e));
        }
        Ok(acc)
    }

    /// Renders a code as a product of labelled generator powers.
    pub fn format(&self, x: Code) -> String {
        if x == 0 {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .exponents(x)
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.pres.label(i)
                } else {
                    format!("{}^{}", self.pres.label(i), e)
                }
            })
            .collect();
        parts.join("*")
    }

    /// Checks every overlap test word, deepest generators first.
    pub fn consistency_check(&self) -> Result<()> {
        let n = self.ngens();
        let p1 = self.col.p as i64 - 1;
        let g = |i: usize| self.gen(i);
        let w = |i: usize| self.col.power[i];
        let check = |ov: Overlap, l: Code, r: Code| -> Result<()> {
            if l == r {
                Ok(())
            } else {
                Err(Error::Inconsistent(Box::new(Inconsistency {
                    overlap: ov,
                    left: self.exponents(l),
                    right: self.exponents(r),
                })))
            }
        };
        for i in (0..n).rev() {
            check(
                Overlap::PowerSelf { i },
                self.mul(g(i), w(i)),
                self.mul(w(i), g(i)),
            )?;
            for j in (i + 1..n).rev() {
                let gj_pm1 = self.pow(g(j), p1);
                let gi_pm1 = self.pow(g(i), p1);
                check(
                    Overlap::PowerLeft { j, i },
                    self.mul(w(j), g(i)),
                    self.mul(gj_pm1, self.mul(g(j), g(i))),
                )?;
                check(
                    Overlap::PowerRight { j, i },
                    self.mul(g(j), w(i)),
                    self.mul(self.mul(g(j), g(i)), gi_pm1),
                )?;
                for k in (j + 1..n).rev() {
                    check(
                        Overlap::Associativity { k, j, i },
                        self.mul(self.mul(g(k), g(j)), g(i)),
                        self.mul(g(k), self.mul(g(j), g(i))),
                    )?;
                }
            }
        }
        Ok(())
    }

    fn tag(&self, code: Code) -> Element {
        Element {
            group: self.id,
            code,
        }
    }

    fn own(&self, x: &Element) -> Result<Code> {
        if x.group == self.id {
            Ok(x.code)
        } else {
            Err(Error::MixedPresentation)
        }
    }

    /// Tagged element from an exponent vector.
    pub fn element(&self, exps: &[u32]) -> Result<Element> {
        Ok(self.tag(self.code_of(exps)?))
    }

    pub fn element_from_code(&self, code: Code) -> Result<Element> {
        if code >= self.order() {
            return Err(Error::Presentation(format!("code {code} out of range")));
        }
        Ok(self.tag(code))
    }

    pub fn element_exponents(&self, x: &Element) -> Result<Vec<u32>> {
        Ok(self.exponents(self.own(x)?))
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(self.tag(self.mul(self.own(x)?, self.own(y)?)))
    }

    pub fn inverse(&self, x: &Element) -> Result<Element> {
        Ok(self.tag(self.inv(self.own(x)?)))
    }

    pub fn power(&self, x: &Element, k: i64) -> Result<Element> {
        Ok(self.tag(self.pow(self.own(x)?, k)))
    }

    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(self.tag(self.comm(self.own(x)?, self.own(y)?)))
    }

    pub fn conjugate(&self, x: &Element, g: &Element) -> Result<Element> {
        Ok(self.tag(self.conj(self.own(x)?, self.own(g)?)))
    }
}
