//! Canonical text form for `GeomField`.
//!
//! ```text
//! field   := header "\n" (term "\n")*
//! header  := ("pv" | "form") DEGREE ("even" | "odd") [ "laurent=" MASK ]
//! term    := COEFF " * z^(" INT "," INT "," INT "," INT "," INT ") * " basis
//! basis   := "1" | "d" IDX ("^d" IDX)* | "dz" IDX ("^dz" IDX)*
//! ```
//!
//! `COEFF` is a reduced rational `n` or `n/d`, `IDX` runs over 1..5 and
//! `MASK` is the decimal bitmask of Laurent-restricted variables. Terms are
//! ordered by basis mask, then by exponent.

use super::{mask_indices, GeomField, Kind, Parity};
use crate::ratpoly::{Exponent, Mode, Polynomial, Rational};
use std::fmt::Write;

pub(super) fn basis_name(kind: Kind, m: u8) -> String {
    if m == 0 {
        return "1".to_string();
    }
    let p = match kind {
        Kind::PolyVector => "d",
        Kind::Form => "dz",
    };
    mask_indices(m).iter().map(|i| format!("{}{}", p, i + 1)).collect::<Vec<_>>().join("^")
}

pub(super) fn to_text(x: &GeomField) -> String {
    let mut s = String::new();
    let kind = match x.kind {
        Kind::PolyVector => "pv",
        Kind::Form => "form",
    };
    let parity = match x.parity {
        Parity::Even => "even",
        Parity::Odd => "odd",
    };
    write!(s, "{} {} {}", kind, x.degree, parity).unwrap();
    let mask = x.terms.iter().map(|(_, p)| p.mode().mask()).fold(0, |a, b| a | b);
    if mask != 0 {
        write!(s, " laurent={}", mask).unwrap();
    }
    for (m, p) in &x.terms {
        for (e, c) in p.terms() {
            write!(
                s,
                "\n{} * z^({},{},{},{},{}) * {}",
                c,
                e[0],
                e[1],
                e[2],
                e[3],
                e[4],
                basis_name(x.kind, *m)
            )
            .unwrap();
        }
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct ParseFieldError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> ParseFieldError {
    ParseFieldError { line, msg: msg.into() }
}

/// Parses the canonical text form. Blank lines and `#` comments are skipped.
pub fn parse_field(src: &str) -> Result<GeomField, ParseFieldError> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let tok: Vec<&str> = header.split_whitespace().collect();
    if tok.len() < 3 || tok.len() > 4 {
        return Err(err(hl, "header must be `<pv|form> <degree> <even|odd> [laurent=MASK]`"));
    }
    let kind = match tok[0] {
        "pv" => Kind::PolyVector,
        "form" => Kind::Form,
        k => return Err(err(hl, format!("unknown kind `{}`", k))),
    };
    let degree: u8 = tok[1].parse().map_err(|_| err(hl, "bad degree"))?;
    if degree > 5 {
        return Err(err(hl, "degree above 5"));
    }
    let parity = match tok[2] {
        "even" => Parity::Even,
        "odd" => Parity::Odd,
        p => return Err(err(hl, format!("unknown parity `{}`", p))),
    };
    let mode = match tok.get(3) {
        None => Mode::Ordinary,
        Some(t) => {
            let m: u8 = t
                .strip_prefix("laurent=")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| err(hl, "bad laurent mask"))?;
            if m == 0 || m > 31 {
                return Err(err(hl, "laurent mask out of range"));
            }
            Mode::Laurent { mask: m }
        }
    };
    let mut acc = GeomField::zero(kind, degree, parity);
    for (ln, line) in lines {
        let parts: Vec<&str> = line.split('*').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(err(ln, "term must be `coeff * z^(..) * basis`"));
        }
        let c: Rational = parts[0].parse().map_err(|e| err(ln, format!("{}", e)))?;
        let inner = parts[1]
            .strip_prefix("z^(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| err(ln, "exponent must be `z^(m1,m2,m3,m4,m5)`"))?;
        let ex: Vec<i32> = inner
            .split(',')
            .map(|s| s.trim().parse::<i32>())
            .collect::<Result<_, _>>()
            .map_err(|_| err(ln, "bad exponent"))?;
        let e: Exponent = ex.try_into().map_err(|_| err(ln, "exponent needs 5 entries"))?;
        let idx = parse_basis(kind, parts[2]).ok_or_else(|| err(ln, format!("bad basis `{}`", parts[2])))?;
        if idx.len() != degree as usize {
            return Err(err(ln, "basis degree does not match header"));
        }
        let p = Polynomial::try_monomial(mode, e, c).map_err(|e| err(ln, e.to_string()))?;
        acc = acc.checked_add(&GeomField::basis(kind, parity, &idx, p));
    }
    Ok(acc)
}

fn parse_basis(kind: Kind, s: &str) -> Option<Vec<usize>> {
    if s == "1" {
        return Some(Vec::new());
    }
    let prefix = match kind {
        Kind::PolyVector => "d",
        Kind::Form => "dz",
    };
    s.split('^')
        .map(|t| {
            let n: usize = t.trim().strip_prefix(prefix)?.parse().ok()?;
            (1..=5).contains(&n).then_some(n - 1)
        })
        .collect()
}
