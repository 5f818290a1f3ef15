//! Line-based system and arc file formats.
//!
//! ```text
//! # comment
//! ring: Q[x,y]            # or F7[x,y]
//! coeff: Q[u]/(u^2)       # optional coefficient ring
//! f: x^2 - 2*x*y
//! f: y^3 + 3/2*x
//! ```
//!
//! Arc files hold lines `arc: t^2, t^3 + t^4`.

use std::sync::Arc as Shared;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::polynomial::{Polynomial, Ring};
use super::univariate::{Arc, UniPoly};
use crate::error::{Error, Result};
use crate::field::Field;

/// A parsed system file.
#[derive(Clone, Debug)]
pub struct System {
    /// Ambient ring. With a `coeff:` clause its variables are the main
    /// variables followed by the coefficient-ring variables.
    pub ring: Shared<Ring>,
    /// Number of main variables (`X_1..X_n`).
    pub main_vars: usize,
    pub generators: Vec<Polynomial>,
    pub coeff: Option<CoeffClause>,
}

#[derive(Clone, Debug)]
pub struct CoeffClause {
    pub vars: Vec<String>,
    /// `None` when the clause has no `/(...)` part (a polynomial ring).
    pub relations: Option<Vec<Polynomial>>,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

struct Lexed {
    toks: Vec<(Tok, usize)>,
    end_col: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(src: &str, line: usize, col0: usize) -> Result<Lexed> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(s.parse().unwrap()), col));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            _ => return Err(syntax(line, col, format!("unexpected character `{c}`"))),
        };
        toks.push((t, col));
        i += 1;
    }
    Ok(Lexed {
        toks,
        end_col: col0 + chars.len(),
    })
}

struct ExprParser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    end_col: usize,
    ring: &'a Shared<Ring>,
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let col = self.col();
            match self.peek() {
                Some(Tok::Int(k)) => {
                    let k: u32 = k
                        .try_into()
                        .map_err(|_| syntax(self.line, col, "exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(k));
                }
                _ => {
                    return Err(syntax(
                        self.line,
                        col,
                        "`^` must be followed by a nonnegative integer literal",
                    ))
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let col = self.col();
        let field = self.ring.field().clone();
        match self.peek().cloned() {
            Some(Tok::Int(a)) => {
                self.pos += 1;
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    let dcol = self.col();
                    let b = match self.peek() {
                        Some(Tok::Int(b)) => b.clone(),
                        _ => return Err(syntax(self.line, dcol, "expected an integer denominator")),
                    };
                    self.pos += 1;
                    if b.is_zero() {
                        return Err(syntax(self.line, dcol, "zero denominator"));
                    }
                    let c = field
                        .from_rational(&BigRational::new(a, b))
                        .ok_or_else(|| syntax(self.line, dcol, "denominator is zero in the field"))?;
                    Ok(Polynomial::constant(self.ring, c))
                } else {
                    Ok(Polynomial::constant(self.ring, field.from_bigint(&a)))
                }
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::UnknownVariable {
                        name,
                        line: self.line,
                        column: col,
                    }),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(syntax(self.line, self.col(), "expected `)`")),
                }
            }
            Some(_) => Err(syntax(self.line, col, "unexpected token")),
            None => Err(syntax(self.line, col, "unexpected end of expression")),
        }
    }
}

/// Parses a comma-free expression occupying `src` (which starts at column
/// `col0` of line `line`).
fn parse_expr_at(src: &str, ring: &Shared<Ring>, line: usize, col0: usize) -> Result<Polynomial> {
    let lexed = lex(src, line, col0)?;
    if lexed.toks.is_empty() {
        return Err(syntax(line, col0, "empty expression"));
    }
    let mut p = ExprParser {
        toks: &lexed.toks,
        pos: 0,
        line,
        end_col: lexed.end_col,
        ring,
    };
    let e = p.expr()?;
    if p.pos != lexed.toks.len() {
        return Err(syntax(line, p.col(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a single polynomial expression in `ring`.
pub fn parse_poly(text: &str, ring: &Shared<Ring>) -> Result<Polynomial> {
    parse_expr_at(text, ring, 1, 1)
}

/// Splits `src` at top-level commas, returning (piece, column offset).
fn split_commas(src: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in src.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((&src[start..i], start));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((&src[start..], start));
    out
}

fn char_col(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

/// Parses `F[v1,...]` at the start of `s`; returns field, vars, and the rest.
fn parse_ring_head(s: &str, line: usize, col0: usize) -> Result<(Field, Vec<String>, usize)> {
    let open = s
        .find('[')
        .ok_or_else(|| syntax(line, col0, "expected `<field>[vars]`"))?;
    let close = s[open..]
        .find(']')
        .map(|k| k + open)
        .ok_or_else(|| syntax(line, col0 + open, "missing `]`"))?;
    let fname = s[..open].trim();
    let field = if fname == "Q" {
        Field::Rationals
    } else if let Some(p) = fname.strip_prefix('F') {
        let p: u64 = p
            .parse()
            .map_err(|_| syntax(line, col0, format!("bad field `{fname}`")))?;
        Field::prime(p)?
    } else {
        return Err(syntax(line, col0, format!("unknown field `{fname}` (use Q or F<p>)")));
    };
    let vars: Vec<String> = s[open + 1..close].split(',').map(|v| v.trim().to_string()).collect();
    for (k, v) in vars.iter().enumerate() {
        let ok = !v.is_empty()
            && v.chars().next().map_or(false, |c| c.is_alphabetic() || c == '_')
            && v.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !ok {
            return Err(syntax(line, col0 + open + 1, format!("bad variable name `{v}`")));
        }
        if vars[..k].contains(v) {
            return Err(syntax(line, col0 + open + 1, format!("duplicate variable `{v}`")));
        }
    }
    Ok((field, vars, close + 1))
}

struct Line<'a> {
    number: usize,
    key: &'a str,
    value: &'a str,
    value_col: usize,
}

fn split_lines(text: &str) -> Result<Vec<Line<'_>>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let number = idx + 1;
        let content = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let colon = content
            .find(':')
            .ok_or_else(|| syntax(number, 1, "expected `key: value`"))?;
        let key = content[..colon].trim();
        let value = &content[colon + 1..];
        out.push(Line {
            number,
            key,
            value,
            value_col: char_col(raw, colon + 1),
        });
    }
    Ok(out)
}

pub fn parse_system(text: &str) -> Result<System> {
    let lines = split_lines(text)?;
    let mut ring_line = None;
    let mut coeff_line = None;
    let mut f_lines = Vec::new();
    for l in &lines {
        match l.key {
            "ring" => {
                if ring_line.is_some() {
                    return Err(syntax(l.number, 1, "duplicate `ring:` line"));
                }
                if !f_lines.is_empty() || coeff_line.is_some() {
                    return Err(syntax(l.number, 1, "`ring:` must come first"));
                }
                ring_line = Some(l);
            }
            "coeff" => {
                if coeff_line.is_some() {
                    return Err(syntax(l.number, 1, "duplicate `coeff:` line"));
                }
                coeff_line = Some(l);
            }
            "f" => f_lines.push(l),
            other => return Err(syntax(l.number, 1, format!("unknown key `{other}`"))),
        }
    }
    let rl = ring_line.ok_or_else(|| syntax(1, 1, "missing `ring:` line"))?;
    let (field, main, rest) = parse_ring_head(rl.value, rl.number, rl.value_col)?;
    if !rl.value[rest..].trim().is_empty() {
        return Err(syntax(rl.number, rl.value_col + rest, "unexpected input after ring"));
    }
    let mut vars = main.clone();
    let mut clause = None;
    let mut relation_src = None;
    if let Some(cl) = coeff_line {
        let (cfield, aux, rest) = parse_ring_head(cl.value, cl.number, cl.value_col)?;
        if cfield != field {
            return Err(syntax(cl.number, cl.value_col, "coefficient field must match the ring field"));
        }
        for v in &aux {
            if vars.contains(v) {
                return Err(syntax(cl.number, cl.value_col, format!("variable `{v}` is already a ring variable")));
            }
        }
        vars.extend(aux.iter().cloned());
        let tail = cl.value[rest..].trim();
        if !tail.is_empty() {
            let body_off = rest + (cl.value[rest..].len() - cl.value[rest..].trim_start().len());
            let inner = tail
                .strip_prefix('/')
                .map(str::trim_start)
                .and_then(|s| s.strip_prefix('('))
                .and_then(|s| s.trim_end().strip_suffix(')'))
                .ok_or_else(|| syntax(cl.number, cl.value_col + body_off, "expected `/(relations)`"))?;
            let inner_off = body_off + tail.find('(').unwrap() + 1;
            relation_src = Some((cl, inner, inner_off));
        }
        clause = Some(CoeffClause {
            vars: aux,
            relations: None,
        });
    }
    let ring = Ring::new(vars, field)?;
    if let (Some(c), Some((cl, inner, off))) = (clause.as_mut(), relation_src) {
        let mut rels = Vec::new();
        for (piece, k) in split_commas(inner) {
            let col = cl.value_col + off + k;
            let p = parse_expr_at(piece, &ring, cl.number, col)?;
            if p.terms().any(|(m, _)| m.exponents()[..main.len()].iter().any(|&e| e > 0)) {
                return Err(syntax(cl.number, col, "relations may only use coefficient variables"));
            }
            rels.push(p);
        }
        c.relations = Some(rels);
    }
    if f_lines.is_empty() {
        return Err(syntax(rl.number, 1, "no `f:` lines"));
    }
    let generators = f_lines
        .iter()
        .map(|l| parse_expr_at(l.value, &ring, l.number, l.value_col))
        .collect::<Result<Vec<_>>>()?;
    Ok(System {
        ring,
        main_vars: main.len(),
        generators,
        coeff: clause,
    })
}

/// Parses an arc file over `field`.
pub fn parse_arcs(text: &str, field: &Field) -> Result<Vec<Arc>> {
    let ring = Ring::new(vec!["t".into()], field.clone())?;
    let mut arcs = Vec::new();
    for l in split_lines(text)? {
        if l.key != "arc" {
            return Err(syntax(l.number, 1, format!("unknown key `{}`", l.key)));
        }
        let mut comps = Vec::new();
        for (piece, k) in split_commas(l.value) {
            let p = parse_expr_at(piece, &ring, l.number, l.value_col + k)?;
            comps.push(UniPoly::from_polynomial(&p)?);
        }
        let arc = Arc::new(comps).map_err(|e| match e {
            Error::InvalidInput(m) => syntax(l.number, l.value_col, m),
            other => other,
        })?;
        arcs.push(arc);
    }
    if arcs.is_empty() {
        return Err(syntax(1, 1, "no `arc:` lines"));
    }
    Ok(arcs)
}
