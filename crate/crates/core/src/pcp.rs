//! The `.pcp` text format for presentations.
//!
//! ```text
//! commutators = [
//!   (2, 1) -> [(3, 1)],
//! ]
//! format_version = 1
//! labels = ["x", "y", "z"]
//! ngens = 3
//! p = 5
//! powers = []
//! ```
//!
//! Generators are numbered from 1. `i -> [(k, e), ...]` gives the tail of
//! `g_i^p` and `(j, i) -> [...]` the tail of `[g_j, g_i]` for `j > i`. Omitted
//! entries are trivial. Keys may appear in any order and `#` starts a comment;
//! [`serialize`] writes keys sorted and entries sorted, so that parsing and
//! serializing a canonical file reproduces it byte for byte.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pc::{Presentation, Word};

pub const FORMAT_VERSION: i64 = 1;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Arrow,
    Eq,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let bump = |i: &mut usize, col: &mut usize| {
            *i += 1;
            *col += 1;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => bump(&mut i, &mut col),
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '[' | ']' | '(' | ')' | ',' | '=' => {
                let tok = match c {
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    _ => Tok::Eq,
                };
                out.push(Spanned {
                    tok,
                    line: l0,
                    column: c0,
                });
                bump(&mut i, &mut col);
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push(Spanned {
                    tok: Tok::Arrow,
                    line: l0,
                    column: c0,
                });
                i += 2;
                col += 2;
            }
            '"' => {
                bump(&mut i, &mut col);
                let mut s = String::new();
                loop {
                    match chars.get(i) {
                        None | Some('\n') => return Err(syntax(l0, c0, "unterminated string")),
                        Some('"') => {
                            bump(&mut i, &mut col);
                            break;
                        }
                        Some(&ch) => {
                            s.push(ch);
                            bump(&mut i, &mut col);
                        }
                    }
                }
                out.push(Spanned {
                    tok: Tok::Str(s),
                    line: l0,
                    column: c0,
                });
            }
            c if c == '-' || c.is_ascii_digit() => {
                let start = i;
                bump(&mut i, &mut col);
                while i < chars.len() && chars[i].is_ascii_digit() {
                    bump(&mut i, &mut col);
                }
                let text: String = chars[start..i].iter().collect();
                let v = text
                    .parse::<i64>()
                    .map_err(|_| syntax(l0, c0, format!("bad integer `{text}`")))?;
                out.push(Spanned {
                    tok: Tok::Int(v),
                    line: l0,
                    column: c0,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    bump(&mut i, &mut col);
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Spanned {
                    tok: Tok::Ident(text),
                    line: l0,
                    column: c0,
                });
            }
            other => return Err(syntax(l0, c0, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    eof: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map_or(self.eof, |s| (s.line, s.column))
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let (l, c) = self.here();
        syntax(l, c, message)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn int(&mut self) -> Result<(i64, (usize, usize))> {
        let at = self.here();
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok((v, at))
            }
            _ => Err(self.err("expected integer")),
        }
    }

    /// Parses `[ item, item, ... ]` with an optional trailing comma.
    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut out = Vec::new();
        loop {
            if self.peek() == Some(&Tok::RBracket) {
                self.pos += 1;
                return Ok(out);
            }
            out.push(item(self)?);
            match self.peek() {
                Some(Tok::Comma) => self.pos += 1,
                Some(Tok::RBracket) => {}
                _ => return Err(self.err("expected `,` or `]`")),
            }
        }
    }

    fn pair(&mut self) -> Result<((i64, i64), (usize, usize))> {
        let at = self.here();
        self.expect(Tok::LParen, "`(`")?;
        let (a, _) = self.int()?;
        self.expect(Tok::Comma, "`,`")?;
        let (b, _) = self.int()?;
        self.expect(Tok::RParen, "`)`")?;
        Ok(((a, b), at))
    }

    fn word(&mut self) -> Result<Vec<((i64, i64), (usize, usize))>> {
        self.list(|p| p.pair())
    }
}

type RawWord = Vec<((i64, i64), (usize, usize))>;

/// Parses a `.pcp` document. Structural problems are reported; consistency is not checked.
pub fn parse(src: &str) -> Result<Presentation> {
    let toks = lex(src)?;
    let eof = src
        .lines()
        .enumerate()
        .last()
        .map_or((1, 1), |(i, l)| (i + 1, l.chars().count() + 1));
    let mut ps = Parser { toks, pos: 0, eof };
    let mut p = None;
    let mut ngens = None;
    let mut version = None;
    let mut labels = None;
    let mut powers: Vec<((i64, (usize, usize)), RawWord)> = Vec::new();
    let mut comms: Vec<(((i64, i64), (usize, usize)), RawWord)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    while ps.peek().is_some() {
        let at = ps.here();
        let key = match ps.peek() {
            Some(Tok::Ident(k)) => k.clone(),
            _ => return Err(ps.err("expected a key")),
        };
        ps.pos += 1;
        if !seen.insert(key.clone()) {
            return Err(syntax(at.0, at.1, format!("duplicate key `{key}`")));
        }
        ps.expect(Tok::Eq, "`=`")?;
        match key.as_str() {
            "p" => p = Some(ps.int()?),
            "ngens" => ngens = Some(ps.int()?),
            "format_version" => version = Some(ps.int()?),
            "labels" => {
                labels = Some(ps.list(|q| match q.peek() {
                    Some(Tok::Str(s)) => {
                        let s = s.clone();
                        q.pos += 1;
                        Ok(s)
                    }
                    _ => Err(q.err("expected string")),
                })?)
            }
            "powers" => {
                powers = ps.list(|q| {
                    let i = q.int()?;
                    q.expect(Tok::Arrow, "`->`")?;
                    Ok((i, q.word()?))
                })?
            }
            "commutators" => {
                comms = ps.list(|q| {
                    let ji = q.pair()?;
                    q.expect(Tok::Arrow, "`->`")?;
                    Ok((ji, q.word()?))
                })?
            }
            other => return Err(syntax(at.0, at.1, format!("unknown key `{other}`"))),
        }
    }
    if let Some((v, at)) = version {
        if v != FORMAT_VERSION {
            return Err(syntax(
                at.0,
                at.1,
                format!("unsupported format_version {v}"),
            ));
        }
    }
    let (p, p_at) = p.ok_or_else(|| syntax(eof.0, eof.1, "missing key `p`"))?;
    let (n, n_at) = ngens.ok_or_else(|| syntax(eof.0, eof.1, "missing key `ngens`"))?;
    if p < 2 || p > u32::MAX as i64 {
        return Err(Error::NotPrime(p.max(0) as u64));
    }
    if n < 0 {
        return Err(syntax(n_at.0, n_at.1, "ngens must be non-negative"));
    }
    let _ = p_at;
    let n = n as usize;
    let mut pres = Presentation::new(p as u32, n)?;
    if let Some(l) = labels {
        pres.set_labels(l)?;
    }
    let gen_index = |v: i64, at: (usize, usize)| -> Result<usize> {
        if v < 1 || v as usize > n {
            Err(syntax(
                at.0,
                at.1,
                format!("generator {v} out of range 1..={n}"),
            ))
        } else {
            Ok(v as usize - 1)
        }
    };
    let to_word = |raw: &RawWord| -> Result<Word> {
        raw.iter()
            .map(|&((k, e), at)| {
                let k = gen_index(k, at)?;
                if e < 1 || e >= p {
                    return Err(syntax(at.0, at.1, format!("exponent {e} outside 1..{p}")));
                }
                Ok((k, e as u32))
            })
            .collect()
    };
    let mut done_pow = std::collections::HashSet::new();
    for ((i, at), raw) in &powers {
        let i = gen_index(*i, *at)?;
        if !done_pow.insert(i) {
            return Err(syntax(
                at.0,
                at.1,
                format!("duplicate power entry {}", i + 1),
            ));
        }
        pres.set_power(i, to_word(raw)?)?;
    }
    let mut done_comm = std::collections::HashSet::new();
    for (((j, i), at), raw) in &comms {
        let j = gen_index(*j, *at)?;
        let i = gen_index(*i, *at)?;
        if j <= i {
            return Err(syntax(at.0, at.1, "commutator entry (j, i) needs j > i"));
        }
        if !done_comm.insert((j, i)) {
            return Err(syntax(
                at.0,
                at.1,
                format!("duplicate commutator entry ({}, {})", j + 1, i + 1),
            ));
        }
        pres.set_commutator(j, i, to_word(raw)?)?;
    }
    Ok(pres)
}

fn write_word(out: &mut String, w: &Word) {
    out.push('[');
    let parts: Vec<String> = w
        .iter()
        .map(|&(k, e)| format!("({}, {})", k + 1, e))
        .collect();
    out.push_str(&parts.join(", "));
    out.push(']');
}

/// Canonical serialization: sorted keys, sorted entries, trivial entries omitted.
pub fn serialize(pres: &Presentation) -> String {
    let n = pres.ngens();
    let mut comms = BTreeMap::new();
    for j in 0..n {
        for i in 0..j {
            let w = pres.commutator(j, i);
            if !w.is_empty() {
                comms.insert((j, i), w);
            }
        }
    }
    let mut out = String::new();
    if comms.is_empty() {
        out.push_str("commutators = []\n");
    } else {
        out.push_str("commutators = [\n");
        for ((j, i), w) in comms {
            out.push_str(&format!("  ({}, {}) -> ", j + 1, i + 1));
            write_word(&mut out, w);
            out.push_str(",\n");
        }
        out.push_str("]\n");
    }
    out.push_str(&format!("format_version = {FORMAT_VERSION}\n"));
    if let Some(labels) = pres.labels() {
        let quoted: Vec<String> = labels.iter().map(|l| format!("\"{l}\"")).collect();
        out.push_str(&format!("labels = [{}]\n", quoted.join(", ")));
    }
    out.push_str(&format!("ngens = {n}\n"));
    out.push_str(&format!("p = {}\n", pres.p()));
    let pows: Vec<usize> = (0..n).filter(|&i| !pres.power(i).is_empty()).collect();
    if pows.is_empty() {
        out.push_str("powers = []\n");
    } else {
        out.push_str("powers = [\n");
        for i in pows {
            out.push_str(&format!("  {} -> ", i + 1));
            write_word(&mut out, pres.power(i));
            out.push_str(",\n");
        }
        out.push_str("]\n");
    }
    out
}
