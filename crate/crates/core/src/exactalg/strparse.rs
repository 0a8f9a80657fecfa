//! Parser for the canonical coefficient strings produced by `QTPoly` /
//! `QTRat` rendering. Round-tripping expansions through JSON relies on this.

use num::{BigInt, BigRational, One};

use super::qtpoly::QTPoly;
use super::qtrat::QTRat;

pub fn parse_qtrat(s: &str) -> Result<QTRat, String> {
    let s = s.trim();
    // "(num)/(den)" or a bare polynomial.
    if let Some(rest) = s.strip_prefix('(') {
        if let Some((numpart, denpart)) = split_fraction(rest) {
            let num = parse_qtpoly(numpart)?;
            let den = parse_qtpoly(denpart)?;
            return QTRat::new(num, den).map_err(|e| e.to_string());
        }
    }
    parse_qtpoly(s).map(QTRat::from_poly)
}

/// Splits `...)/(...)` where the leading '(' has been consumed.
fn split_fraction(rest: &str) -> Option<(&str, &str)> {
    let mut depth = 1usize;
    for (i, c) in rest.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    let tail = &rest[i + 1..];
                    let tail = tail.strip_prefix("/(")?;
                    let inner = tail.strip_suffix(')')?;
                    return Some((&rest[..i], inner));
                }
            }
            _ => {}
        }
    }
    None
}

pub fn parse_qtpoly(s: &str) -> Result<QTPoly, String> {
    let mut acc = QTPoly::zero();
    let mut rest = s.trim();
    if rest.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        let (term_str, tail) = take_term(rest);
        let term = parse_term(term_str.trim())?;
        acc = acc
            + if sign < 0 {
                -&term
            } else {
                term
            };
        match tail {
            None => return Ok(acc),
            Some((next_sign, t)) => {
                sign = next_sign;
                rest = t.trim_start();
            }
        }
    }
}

/// Cuts the input at the next top-level ` + ` or ` - ` separator.
fn take_term(s: &str) -> (&str, Option<(i64, &str)>) {
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b' ' && i + 2 < bytes.len() {
            let op = bytes[i + 1];
            if (op == b'+' || op == b'-') && bytes[i + 2] == b' ' {
                let sign = if op == b'+' { 1 } else { -1 };
                return (&s[..i], Some((sign, &s[i + 3..])));
            }
        }
        i += 1;
    }
    (s, None)
}

/// One product term: `[coeff][*q[^e]][*t[^e]]` in any of the canonical
/// arrangements (`3/2*q`, `q^2*t`, `q`, `7`).
fn parse_term(s: &str) -> Result<QTPoly, String> {
    if s.is_empty() {
        return Err("empty term".into());
    }
    let mut coeff = BigRational::one();
    let mut qe = 0i64;
    let mut te = 0i64;
    for factor in s.split('*') {
        let f = factor.trim();
        if f.is_empty() {
            return Err(format!("empty factor in term '{s}'"));
        }
        if let Some(rest) = f.strip_prefix('q') {
            qe += parse_exponent(rest)?;
        } else if let Some(rest) = f.strip_prefix('t') {
            te += parse_exponent(rest)?;
        } else {
            coeff *= parse_number(f)?;
        }
    }
    Ok(QTPoly::monomial(coeff, qe, te))
}

fn parse_exponent(rest: &str) -> Result<i64, String> {
    if rest.is_empty() {
        return Ok(1);
    }
    let rest = rest
        .strip_prefix('^')
        .ok_or_else(|| format!("expected '^' in exponent, got '{rest}'"))?;
    rest.parse::<i64>().map_err(|e| e.to_string())
}

fn parse_number(s: &str) -> Result<BigRational, String> {
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|e| format!("{e}"))?;
        let d: BigInt = d.trim().parse().map_err(|e| format!("{e}"))?;
        if d == BigInt::from(0) {
            return Err("zero denominator in coefficient".into());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.trim().parse().map_err(|e| format!("{e}"))?;
        Ok(BigRational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_poly() {
        let samples = [
            "q^2*t + q + 2",
            "q - t",
            "-q",
            "0",
            "3/2*q + 1/2",
            "q^-1*t^2 - 5",
            "1",
        ];
        for s in samples {
            let p = parse_qtpoly(s).unwrap();
            assert_eq!(p.to_string(), s, "roundtrip failed for {s}");
        }
    }

    #[test]
    fn roundtrip_rat() {
        let samples = ["(q + 1)/(t - 1)", "q + t", "(-q - 1)/(t - 1)"];
        for s in samples {
            let r = parse_qtrat(s).unwrap();
            assert_eq!(r.to_string(), s, "roundtrip failed for {s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_qtpoly("q +").is_err());
        assert!(parse_qtpoly("").is_err());
        assert!(parse_qtpoly("x^2").is_err());
    }
}
