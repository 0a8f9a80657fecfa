//! Polynomial gcd in Z[q,t], computed by a primitive pseudo-remainder
//! sequence in (Z[t])[q]. The gcd is only a normalization aid for `QTRat`
//! (equality testing goes through cross-multiplication), so the simple
//! primitive PRS is plenty at desk-scale degrees.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::qtpoly::QTPoly;

/// Univariate integer polynomial in t: exponent -> coefficient, no zeros.
type TP = BTreeMap<i64, BigInt>;

fn tp_is_zero(p: &TP) -> bool {
    p.is_empty()
}

fn tp_insert(p: &mut TP, e: i64, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match p.get_mut(&e) {
        Some(old) => {
            *old += c;
            if old.is_zero() {
                p.remove(&e);
            }
        }
        None => {
            p.insert(e, c);
        }
    }
}

fn tp_add(a: &TP, b: &TP) -> TP {
    let mut r = a.clone();
    for (&e, c) in b {
        tp_insert(&mut r, e, c.clone());
    }
    r
}

fn tp_neg(a: &TP) -> TP {
    a.iter().map(|(&e, c)| (e, -c.clone())).collect()
}

fn tp_mul(a: &TP, b: &TP) -> TP {
    let mut r = TP::new();
    for (&e1, c1) in a {
        for (&e2, c2) in b {
            tp_insert(&mut r, e1 + e2, c1 * c2);
        }
    }
    r
}

fn tp_scale(a: &TP, c: &BigInt) -> TP {
    if c.is_zero() {
        return TP::new();
    }
    a.iter().map(|(&e, v)| (e, v * c)).collect()
}

fn tp_content(a: &TP) -> BigInt {
    let mut g = BigInt::zero();
    for c in a.values() {
        g = g.gcd(&c.abs());
    }
    g
}

fn tp_leading(a: &TP) -> Option<(i64, &BigInt)> {
    a.iter().next_back().map(|(&e, c)| (e, c))
}

/// Exact division of integer t-polynomials; None when not exact.
fn tp_div_exact(a: &TP, d: &TP) -> Option<TP> {
    if tp_is_zero(d) {
        return None;
    }
    if tp_is_zero(a) {
        return Some(TP::new());
    }
    let (de, dc) = tp_leading(d).map(|(e, c)| (e, c.clone())).unwrap();
    let mut rem = a.clone();
    let mut quot = TP::new();
    while let Some((e, c)) = tp_leading(&rem).map(|(e, c)| (e, c.clone())) {
        if e < de {
            return None;
        }
        let (qc, r) = c.div_rem(&dc);
        if !r.is_zero() {
            return None;
        }
        tp_insert(&mut quot, e - de, qc.clone());
        let mut piece = TP::new();
        for (&ee, cc) in d {
            tp_insert(&mut piece, ee + e - de, cc * &qc);
        }
        rem = tp_add(&rem, &tp_neg(&piece));
    }
    Some(quot)
}

/// gcd of integer t-polynomials via primitive PRS over Z.
fn tp_gcd(a: &TP, b: &TP) -> TP {
    if tp_is_zero(a) {
        return tp_positive(b.clone());
    }
    if tp_is_zero(b) {
        return tp_positive(a.clone());
    }
    let ca = tp_content(a);
    let cb = tp_content(b);
    let cg = ca.gcd(&cb);
    let mut p = tp_primitive(a);
    let mut q = tp_primitive(b);
    if tp_leading(&p).unwrap().0 < tp_leading(&q).unwrap().0 {
        std::mem::swap(&mut p, &mut q);
    }
    while !tp_is_zero(&q) {
        let r = tp_prem(&p, &q);
        p = q;
        q = tp_primitive(&r);
    }
    let g = tp_positive(p);
    let mut scaled = TP::new();
    for (&e, c) in &g {
        scaled.insert(e, c * &cg);
    }
    scaled
}

fn tp_primitive(a: &TP) -> TP {
    if tp_is_zero(a) {
        return TP::new();
    }
    let mut c = tp_content(a);
    if tp_leading(a).unwrap().1.is_negative() {
        c = -c;
    }
    a.iter().map(|(&e, v)| (e, v / &c)).collect()
}

fn tp_positive(a: TP) -> TP {
    match tp_leading(&a) {
        Some((_, c)) if c.is_negative() => tp_neg(&a),
        _ => a,
    }
}

/// Pseudo-remainder of univariate integer polynomials.
fn tp_prem(a: &TP, b: &TP) -> TP {
    let (db, lb) = tp_leading(b).map(|(e, c)| (e, c.clone())).unwrap();
    let mut r = a.clone();
    loop {
        let (dr, lr) = match tp_leading(&r) {
            Some((e, c)) => (e, c.clone()),
            None => return r,
        };
        if dr < db {
            return r;
        }
        // r <- lb*r - lr*t^{dr-db}*b
        let mut shifted = TP::new();
        for (&e, c) in b {
            shifted.insert(e + dr - db, c * &lr);
        }
        r = tp_add(&tp_scale(&r, &lb), &tp_neg(&shifted));
    }
}

/// Bivariate integer polynomial viewed as univariate in q with t-poly coefficients.
type QP = BTreeMap<i64, TP>;

fn qp_from(p: &QTPoly) -> QP {
    let mut r: QP = BTreeMap::new();
    for (&(a, b), c) in p.terms() {
        debug_assert!(c.is_integer());
        let entry = r.entry(a).or_default();
        tp_insert(entry, b, c.numer().clone());
    }
    r.retain(|_, v| !tp_is_zero(v));
    r
}

fn qp_to_poly(p: &QP) -> QTPoly {
    let mut acc = QTPoly::zero();
    for (&a, tp) in p {
        for (&b, c) in tp {
            acc = acc + QTPoly::monomial(BigRational::from_integer(c.clone()), a, b);
        }
    }
    acc
}

fn qp_is_zero(p: &QP) -> bool {
    p.is_empty()
}

fn qp_leading(p: &QP) -> Option<(i64, &TP)> {
    p.iter().next_back().map(|(&e, c)| (e, c))
}

fn qp_content(p: &QP) -> TP {
    let mut g = TP::new();
    for c in p.values() {
        g = tp_gcd(&g, c);
    }
    g
}

fn qp_div_content(p: &QP, c: &TP) -> QP {
    p.iter()
        .map(|(&e, v)| (e, tp_div_exact(v, c).expect("content divides")))
        .collect()
}

fn qp_primitive(p: &QP) -> QP {
    if qp_is_zero(p) {
        return QP::new();
    }
    let c = qp_content(p);
    qp_div_content(p, &c)
}

/// Pseudo-remainder in (Z[t])[q].
fn qp_prem(a: &QP, b: &QP) -> QP {
    let (db, lb) = qp_leading(b).map(|(e, c)| (e, c.clone())).unwrap();
    let mut r = a.clone();
    loop {
        let (dr, lr) = match qp_leading(&r) {
            Some((e, c)) => (e, c.clone()),
            None => return r,
        };
        if dr < db {
            return r;
        }
        // r <- lb*r - lr*q^{dr-db}*b
        let mut next: QP = BTreeMap::new();
        for (&e, c) in &r {
            let v = tp_mul(c, &lb);
            if !tp_is_zero(&v) {
                next.insert(e, v);
            }
        }
        for (&e, c) in b {
            let v = tp_mul(c, &lr);
            let entry = next.entry(e + dr - db).or_default();
            let merged = tp_add(entry, &tp_neg(&v));
            if tp_is_zero(&merged) {
                next.remove(&(e + dr - db));
            } else {
                next.insert(e + dr - db, merged);
            }
        }
        r = next;
    }
}

/// Primitive gcd of two integer polynomials in Z[q,t] (exponents must be
/// nonnegative). Integer contents are ignored: the result is primitive with
/// positive leading coefficient, which is exactly the normalization aid the
/// rational-function reduction needs.
pub fn gcd_qt(a: &QTPoly, b: &QTPoly) -> QTPoly {
    if a.is_zero() {
        return b.content_and_primitive().1;
    }
    if b.is_zero() {
        return a.content_and_primitive().1;
    }
    let pa = qp_from(a);
    let pb = qp_from(b);
    let ca = qp_content(&pa);
    let cb = qp_content(&pb);
    // Shared t-content of the q-coefficients (without its integer part).
    let cg = tp_primitive(&tp_gcd(&ca, &cb));
    let mut p = qp_div_content(&pa, &ca);
    let mut q = qp_div_content(&pb, &cb);
    if qp_leading(&p).unwrap().0 < qp_leading(&q).unwrap().0 {
        std::mem::swap(&mut p, &mut q);
    }
    while !qp_is_zero(&q) {
        let r = qp_prem(&p, &q);
        p = q;
        q = qp_primitive(&r);
    }
    let mut g: QP = BTreeMap::new();
    for (&e, c) in &p {
        g.insert(e, tp_mul(c, &cg));
    }
    qp_to_poly(&g).content_and_primitive().1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_simple() {
        let q = QTPoly::q();
        let t = QTPoly::t();
        let one = QTPoly::one();
        // gcd((1-q^2)(1+t), (1-q)(1+t)^2) = (1-q)(1+t) up to sign
        let a = (&(&one - &q.pow(2))) * (&(&one + &t));
        let b = (&(&one - &q)) * (&(&one + &t).pow(2));
        let g = gcd_qt(&a, &b);
        let expect = ((&(&one - &q)) * (&(&one + &t)))
            .content_and_primitive()
            .1;
        assert_eq!(g, expect);
    }

    #[test]
    fn gcd_coprime() {
        let a = QTPoly::one() + QTPoly::q();
        let b = QTPoly::one() + QTPoly::t();
        assert_eq!(gcd_qt(&a, &b), QTPoly::one());
    }

    #[test]
    fn gcd_ignores_integer_content() {
        let a = (QTPoly::one() - QTPoly::q()).scale(&BigRational::from_integer(4.into()));
        let b = (QTPoly::one() - QTPoly::q()).scale(&BigRational::from_integer(6.into()));
        let g = gcd_qt(&a, &b);
        let expect = (QTPoly::one() - QTPoly::q()).content_and_primitive().1;
        assert_eq!(g, expect);
    }

    #[test]
    fn gcd_keeps_t_content() {
        // gcd((1+t)q, (1+t)) should retain the (1+t) factor even though it
        // lives entirely in the t-content of the q-coefficients.
        let one_t = QTPoly::one() + QTPoly::t();
        let a = (&one_t) * (&QTPoly::q());
        let g = gcd_qt(&a, &one_t);
        assert_eq!(g, one_t);
    }
}
