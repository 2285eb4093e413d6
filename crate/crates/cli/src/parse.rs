//! Input grammar: roots of unity as `z<m>^<k>`, matrices as nested brackets,
//! H generators as `a1,...,an@m`, permutations in cycle notation.

use mckay_core::exactmath::CycloInt;
use mckay_core::groups::GroupElement;
use mckay_core::toric::{HGenerator, PermSymmetry};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {what} `{input}`: {reason}")]
pub struct ParseError {
    pub what: &'static str,
    pub input: String,
    pub reason: String,
}

fn fail<T>(what: &'static str, input: &str, reason: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        what,
        input: input.to_string(),
        reason: reason.into(),
    })
}

fn parse_i64(what: &'static str, text: &str, whole: &str) -> Result<i64, ParseError> {
    text.trim()
        .parse()
        .or_else(|_| fail(what, whole, format!("`{text}` is not an integer")))
}

/// One term: `c`, `z<m>`, `z<m>^<k>` or `c*z<m>^<k>`.
fn parse_term(text: &str, whole: &str) -> Result<CycloInt, ParseError> {
    const WHAT: &str = "matrix entry";
    let text = text.trim();
    let (coeff, root) = match text.split_once('*') {
        Some((c, r)) => (parse_i64(WHAT, c, whole)?, r.trim()),
        None if text.starts_with('z') => (1, text),
        None => return Ok(CycloInt::from_int(1, parse_i64(WHAT, text, whole)?)),
    };
    let Some(rest) = root.strip_prefix('z') else {
        return fail(WHAT, whole, format!("expected `z<m>^<k>`, found `{root}`"));
    };
    let (m, k) = match rest.split_once('^') {
        Some((m, k)) => (m, parse_i64(WHAT, k, whole)?),
        None => (rest, 1),
    };
    let m = parse_i64(WHAT, m, whole)?;
    if m < 1 {
        return fail(WHAT, whole, "the order of a root of unity must be positive");
    }
    let m = m as u64;
    Ok(&CycloInt::zeta(m, k) * &CycloInt::from_int(m, coeff))
}

/// Sum of signed terms, e.g. `z4^1-1` or `-2*z3^2`.
pub fn parse_entry(text: &str) -> Result<CycloInt, ParseError> {
    let trimmed: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if trimmed.is_empty() {
        return fail("matrix entry", text, "empty entry");
    }
    let mut total = CycloInt::zero(1);
    let mut start = 0;
    let mut sign = 1;
    let bytes = trimmed.as_bytes();
    for i in 0..=bytes.len() {
        let boundary = i == bytes.len()
            || (i > start
                && (bytes[i] == b'+' || bytes[i] == b'-')
                && bytes[i - 1] != b'^'
                && bytes[i - 1] != b'*');
        if i == start && i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            start = i + 1;
            continue;
        }
        if boundary {
            let term = parse_term(&trimmed[start..i], text)?;
            total = if sign > 0 {
                &total + &term
            } else {
                &total - &term
            };
            if i < bytes.len() {
                sign = if bytes[i] == b'-' { -1 } else { 1 };
            }
            start = i + 1;
        }
    }
    Ok(total)
}

/// `[[a, b], [c, d]]`.
pub fn parse_matrix(text: &str) -> Result<GroupElement, ParseError> {
    const WHAT: &str = "matrix";
    let t = text.trim();
    let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) else {
        return fail(WHAT, text, "expected `[[...], ...]`");
    };
    let mut rows: Vec<Vec<CycloInt>> = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let Some(open) = rest.strip_prefix('[') else {
            return fail(WHAT, text, "each row must be bracketed");
        };
        let Some(close) = open.find(']') else {
            return fail(WHAT, text, "unclosed row");
        };
        let row = open[..close]
            .split(',')
            .map(parse_entry)
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
        rest = open[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
        }
    }
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return fail(WHAT, text, "matrix must be square and nonempty");
    }
    Ok(GroupElement::from_rows(rows))
}

/// Matrices separated by `;`.
pub fn parse_generators(text: &str) -> Result<Vec<GroupElement>, ParseError> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(parse_matrix)
        .collect()
}

/// `a1,...,an@m`.
pub fn parse_h_generator(text: &str) -> Result<HGenerator, ParseError> {
    const WHAT: &str = "H generator";
    let Some((vector, modulus)) = text.split_once('@') else {
        return fail(WHAT, text, "expected `a1,...,an@m`");
    };
    let m = parse_i64(WHAT, modulus, text)?;
    if m < 1 {
        return fail(WHAT, text, "modulus must be positive");
    }
    let exponents = vector
        .split(',')
        .map(|a| parse_i64(WHAT, a, text))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HGenerator::new(exponents, m as u64))
}

/// Generators separated by `;`; the empty string means H trivial.
pub fn parse_h_generators(text: &str) -> Result<Vec<HGenerator>, ParseError> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(parse_h_generator)
        .collect()
}

pub fn parse_permutation(n: usize, text: &str) -> Result<PermSymmetry, ParseError> {
    PermSymmetry::parse_cycles(n, text).or_else(|e| fail("permutation", text, e.to_string()))
}
