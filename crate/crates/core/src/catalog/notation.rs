//! Compact bracket notation used for the built-in fixtures.
//!
//! Products: `[e1,e2]=e3, [x1,e1]=-e1-De4` where `D` stands for the family
//! parameter δ. Cocycle bases: `e1,x1: (α2-1)b41; x2,e3: -b12` where each
//! distinct `b..` symbol is one basis vector and the coefficient in front of
//! it is an affine expression in named scalars.

use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::AlgebraTable;
use crate::cohomology::BilinearMap;
use crate::error::{Error, Result};
use crate::rational::{format_rational, int, parse_rational_lenient, Rational};

/// Parses a product list over the given basis labels.
pub fn parse_products(name: &str, labels: &[&str], text: &str, delta: Option<&Rational>) -> Result<AlgebraTable> {
    let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let index = |l: &str| labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownLabel(l.to_string()));
    let mut products = Vec::new();
    for item in split_products(text) {
        let (lhs, rhs) = item.split_once('=').ok_or_else(|| Error::Shape(format!("missing '=' in {item:?}")))?;
        let inner = lhs.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']'));
        let (a, b) = inner
            .and_then(|s| s.split_once(','))
            .ok_or_else(|| Error::Shape(format!("bad product {lhs:?}")))?;
        let mut value = Vec::new();
        for (coeff, label) in linear_terms(rhs, delta)? {
            value.push((index(&label)?, coeff));
        }
        products.push((index(a.trim())?, index(b.trim())?, value));
    }
    AlgebraTable::from_products(name, labels, &products)
}

fn split_products(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out.into_iter().filter(|s| !s.is_empty()).collect()
}

/// `e1+2e3-De4` → `[(1,e1),(2,e3),(-δ,e4)]`.
fn linear_terms(text: &str, delta: Option<&Rational>) -> Result<Vec<(Rational, String)>> {
    let mut out = Vec::new();
    for term in signed_terms(text) {
        let (neg, body) = term;
        let split = body.find(|c: char| c.is_ascii_alphabetic() && c != 'D').unwrap_or(body.len());
        let (coeff_text, label) = body.split_at(split);
        if label.is_empty() {
            return Err(Error::Shape(format!("term {body:?} has no basis label")));
        }
        let mut coeff = int(1);
        let mut digits = coeff_text;
        if let Some(rest) = digits.strip_suffix('D') {
            coeff = delta.cloned().ok_or_else(|| Error::InvalidParameter {
                name: "delta".into(),
                reason: "required by this table".into(),
            })?;
            digits = rest;
        }
        if !digits.is_empty() {
            coeff *= parse_rational_lenient(digits)?;
        }
        out.push((if neg { -coeff } else { coeff }, label.to_string()));
    }
    Ok(out)
}

/// Splits `a-b+c` into signed pieces, ignoring signs inside parentheses.
fn signed_terms(text: &str) -> Vec<(bool, &str)> {
    let text = text.trim();
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    let mut neg = false;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let piece = text[start..i].trim();
                if !piece.is_empty() {
                    out.push((neg, piece));
                }
                neg = ch == '-';
                start = i + 1;
            }
            _ => {}
        }
    }
    let piece = text[start..].trim();
    if !piece.is_empty() {
        out.push((neg, piece));
    }
    out
}

/// Parses a cocycle with one-dimensional values, `x2,e1=1; e1,x1=-1/2`.
/// Unlisted pairs are zero; a pair listed twice is an error.
pub fn parse_cocycle(labels: &[String], text: &str) -> Result<BilinearMap> {
    let n = labels.len();
    let index = |l: &str| labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownLabel(l.to_string()));
    let mut w = BilinearMap::zero(n, 1);
    let mut seen = Vec::new();
    for entry in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (pair, value) = entry.split_once('=').ok_or_else(|| Error::Shape(format!("missing '=' in {entry:?}")))?;
        let (a, b) = pair.split_once(',').ok_or_else(|| Error::Shape(format!("bad pair {pair:?}")))?;
        let (a, b) = (a.trim(), b.trim());
        let (i, j) = (index(a)?, index(b)?);
        if seen.contains(&(i, j)) {
            return Err(Error::DuplicateProduct(a.to_string(), b.to_string()));
        }
        seen.push((i, j));
        w.set(i, j, &[parse_rational_lenient(value.trim())?]);
    }
    Ok(w)
}

/// Inverse of [`parse_cocycle`] for one-dimensional values; `0` for the
/// zero map.
pub fn format_cocycle(labels: &[String], w: &BilinearMap) -> String {
    let entries: Vec<String> = w
        .nonzero_entries()
        .into_iter()
        .map(|(i, j, v)| {
            let value: Vec<String> = v.iter().map(format_rational).collect();
            format!("{},{}={}", labels[i], labels[j], value.join("|"))
        })
        .collect();
    if entries.is_empty() {
        "0".to_string()
    } else {
        entries.join("; ")
    }
}

/// Values for the scalar symbols appearing in cocycle coefficients.
pub type Scalars = HashMap<&'static str, Rational>;

/// A cocycle basis as listed: one bilinear map per parameter symbol, in
/// order of first appearance, plus any `(pair, symbol)` listed twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListedBasis {
    pub symbols: Vec<String>,
    pub vectors: Vec<BilinearMap>,
    /// Entries assigning two values to the same coordinate of the same
    /// basis vector, as `(left, right, symbol)`.
    pub conflicts: Vec<(String, String, String)>,
}

/// Parses `x,y: coeff·bij; ...` over `labels`. A coordinate listed twice
/// for the same symbol keeps its first value and is recorded in
/// [`ListedBasis::conflicts`].
pub fn parse_listed_basis(labels: &[&str], text: &str, scalars: &Scalars) -> Result<ListedBasis> {
    let n = labels.len();
    let index = |l: &str| labels.iter().position(|x| *x == l).ok_or_else(|| Error::UnknownLabel(l.to_string()));
    let mut symbols: Vec<String> = Vec::new();
    let mut vectors: Vec<BilinearMap> = Vec::new();
    let mut seen: Vec<(usize, usize, usize)> = Vec::new();
    let mut conflicts = Vec::new();
    for entry in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (pair, value) = entry.split_once(':').ok_or_else(|| Error::Shape(format!("missing ':' in {entry:?}")))?;
        let (a, b) = pair.split_once(',').ok_or_else(|| Error::Shape(format!("bad pair {pair:?}")))?;
        let (i, j) = (index(a.trim())?, index(b.trim())?);
        let value = value.trim();
        let at = value.rfind('b').ok_or_else(|| Error::Shape(format!("no parameter symbol in {value:?}")))?;
        let (coeff, symbol) = value.split_at(at);
        let coeff = eval_coefficient(coeff.trim(), scalars)?;
        let s = match symbols.iter().position(|x| x == symbol) {
            Some(s) => s,
            None => {
                symbols.push(symbol.to_string());
                vectors.push(BilinearMap::zero(n, 1));
                symbols.len() - 1
            }
        };
        if seen.contains(&(i, j, s)) {
            conflicts.push((a.trim().to_string(), b.trim().to_string(), symbol.to_string()));
            continue;
        }
        seen.push((i, j, s));
        vectors[s].set(i, j, &[coeff]);
    }
    Ok(ListedBasis {
        symbols,
        vectors,
        conflicts,
    })
}

/// `""`, `"-"`, `"2"`, `"α2"`, `"-(1+α1)"`, `"2(α2-1)"`.
fn eval_coefficient(text: &str, scalars: &Scalars) -> Result<Rational> {
    let (neg, rest) = match text.strip_prefix('-') {
        Some(r) => (true, r.trim()),
        None => (false, text),
    };
    let split = rest.find(|c: char| !(c.is_ascii_digit() || c == '/')).unwrap_or(rest.len());
    let (digits, tail) = rest.split_at(split);
    let mut value = if digits.is_empty() { int(1) } else { parse_rational_lenient(digits)? };
    let tail = tail.trim();
    if !tail.is_empty() {
        let inner = tail.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(tail);
        value *= eval_affine(inner, scalars)?;
    }
    Ok(if neg { -value } else { value })
}

fn eval_affine(text: &str, scalars: &Scalars) -> Result<Rational> {
    let mut total = Rational::zero();
    for (neg, term) in signed_terms(text) {
        let split = term.find(|c: char| !(c.is_ascii_digit() || c == '/')).unwrap_or(term.len());
        let (digits, symbol) = term.split_at(split);
        let mut v = if digits.is_empty() { int(1) } else { parse_rational_lenient(digits)? };
        if !symbol.is_empty() {
            v *= scalars.get(symbol).cloned().ok_or_else(|| Error::UnknownLabel(symbol.to_string()))?;
        }
        total += if neg { -v } else { v };
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn products_with_delta() {
        let t = parse_products("T", &["a", "b"], "[a,a]=b, [b,a]=-1/2a+Db", Some(&int(3))).unwrap();
        assert_eq!(t.basis_bracket(0, 0), &[int(0), int(1)]);
        assert_eq!(t.basis_bracket(1, 0), &[frac(-1, 2), int(3)]);
        assert!(parse_products("T", &["a"], "[a,a]=Da", None).is_err());
        assert!(matches!(parse_products("T", &["a"], "[a,z]=a", None), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn cocycle_round_trip() {
        let labels: Vec<String> = ["e", "x"].iter().map(|s| s.to_string()).collect();
        let w = parse_cocycle(&labels, "x,e=1; e,x=-1/2").unwrap();
        assert_eq!(w.get(0, 1), &[frac(-1, 2)]);
        assert_eq!(format_cocycle(&labels, &w), "e,x=-1/2; x,e=1");
        assert_eq!(parse_cocycle(&labels, &format_cocycle(&labels, &w)).unwrap(), w);
        assert!(matches!(parse_cocycle(&labels, "e,e=1; e,e=2"), Err(Error::DuplicateProduct(_, _))));
        assert_eq!(format_cocycle(&labels, &BilinearMap::zero(2, 1)), "0");
    }

    #[test]
    fn coefficients() {
        let mut s = Scalars::new();
        s.insert("α1", int(2));
        s.insert("α2", int(-2));
        assert_eq!(eval_coefficient("", &s).unwrap(), int(1));
        assert_eq!(eval_coefficient("-", &s).unwrap(), int(-1));
        assert_eq!(eval_coefficient("-(1+α1)", &s).unwrap(), int(-3));
        assert_eq!(eval_coefficient("(α2-1)", &s).unwrap(), int(-3));
        assert_eq!(eval_coefficient("2α2", &s).unwrap(), int(-4));
        assert_eq!(eval_coefficient("(2+α1)", &s).unwrap(), int(4));
    }

    #[test]
    fn listed_basis_groups_by_symbol() {
        let s = Scalars::new();
        let basis = parse_listed_basis(&["e", "x"], "e,e: b11; x,e: -b11; e,x: 2b12; x,e: b11", &s).unwrap();
        assert_eq!(basis.symbols, vec!["b11", "b12"]);
        assert_eq!(basis.vectors[0].get(1, 0), &[int(-1)]);
        assert_eq!(basis.vectors[1].get(0, 1), &[int(2)]);
        assert_eq!(basis.conflicts.len(), 1);
    }
}
