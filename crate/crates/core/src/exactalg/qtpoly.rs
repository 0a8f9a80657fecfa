//! Sparse Laurent polynomials in `q` and `t` with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` from `(q-exponent, t-exponent)` to a nonzero
//! `BigRational`, so two values representing the same polynomial always have
//! identical term maps. Negative exponents are allowed: the creation operators
//! introduce `1/q` factors that only cancel at the end of a computation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

/// Exponent pair: `(q-exponent, t-exponent)`. Tuple ordering is q-major,
/// which is also the ordering used for the canonical string rendering and
/// for the sign normalization of denominators.
pub type Expt = (i64, i64);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QTPoly {
    terms: BTreeMap<Expt, BigRational>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(n)), 0, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    /// `c * q^a * t^b`; dropped entirely when `c = 0`.
    pub fn monomial(c: BigRational, a: i64, b: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        QTPoly { terms }
    }

    /// The q-analogue `[n]_q = 1 + q + ... + q^{n-1}` (zero for n <= 0).
    pub fn q_int(n: i64) -> Self {
        let mut terms = BTreeMap::new();
        for a in 0..n.max(0) {
            terms.insert((a, 0), BigRational::one());
        }
        QTPoly { terms }
    }

    /// `M = (1-q)(1-t)`.
    pub fn m_const() -> Self {
        (&(QTPoly::one() - QTPoly::q())) * (&(QTPoly::one() - QTPoly::t()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && matches!(self.terms.get(&(0, 0)), Some(c) if c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expt, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigRational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// True when the polynomial is a constant (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a == 0 && b == 0)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            Some(self.terms[&(0, 0)].clone())
        } else {
            None
        }
    }

    /// Single-term polynomials are the "monomial" atoms of the plethystic
    /// alphabet grammar.
    pub fn as_monomial(&self) -> Option<(BigRational, i64, i64)> {
        if self.terms.len() == 1 {
            let (&(a, b), c) = self.terms.iter().next().unwrap();
            Some((c.clone(), a, b))
        } else {
            None
        }
    }

    pub fn min_q_exp(&self) -> i64 {
        self.terms.keys().map(|&(a, _)| a).min().unwrap_or(0)
    }

    pub fn min_t_exp(&self) -> i64 {
        self.terms.keys().map(|&(_, b)| b).min().unwrap_or(0)
    }

    pub fn max_q_exp(&self) -> i64 {
        self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0)
    }

    /// Leading term in (q-major, then t) order.
    pub fn leading(&self) -> Option<(Expt, &BigRational)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    fn insert_add(terms: &mut BTreeMap<Expt, BigRational>, e: Expt, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match terms.get_mut(&e) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    terms.remove(&e);
                }
            }
            None => {
                terms.insert(e, c);
            }
        }
    }

    /// Multiply every exponent pair by `k`: the substitution q -> q^k, t -> t^k
    /// used by the plethystic homomorphism.
    pub fn subst_powers(&self, k: i64) -> QTPoly {
        let mut terms = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            Self::insert_add(&mut terms, (a * k, b * k), c.clone());
        }
        QTPoly { terms }
    }

    /// Multiply by the monomial `q^a t^b`.
    pub fn shift(&self, a: i64, b: i64) -> QTPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&(x, y), c)| ((x + a, y + b), c.clone()))
            .collect();
        QTPoly { terms }
    }

    pub fn scale(&self, c: &BigRational) -> QTPoly {
        if c.is_zero() {
            return QTPoly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(&e, v)| (e, v * c))
            .collect();
        QTPoly { terms }
    }

    pub fn pow(&self, mut n: u32) -> QTPoly {
        let mut acc = QTPoly::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Evaluate at q = 1, leaving a polynomial in t.
    pub fn eval_q1(&self) -> QTPoly {
        let mut terms = BTreeMap::new();
        for (&(_, b), c) in &self.terms {
            Self::insert_add(&mut terms, (0, b), c.clone());
        }
        QTPoly { terms }
    }

    /// Evaluate at q = 1, t = 1 (used for Kostka specializations).
    pub fn eval_one_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// Exact division, Laurent-aware: returns `None` when `d` does not divide
    /// `self` in the Laurent ring (monomials are units). Implemented as
    /// lex-ordered long division by a single divisor, which decides
    /// divisibility exactly.
    pub fn div_exact(&self, d: &QTPoly) -> Option<QTPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(QTPoly::zero());
        }
        // Shift both operands into the polynomial cone so that exponent
        // comparisons during division stay well-founded.
        let (sq, st) = (self.min_q_exp().min(0), self.min_t_exp().min(0));
        let (dq, dt) = (d.min_q_exp(), d.min_t_exp());
        let num = self.shift(-sq, -st);
        let den = d.shift(-dq, -dt);

        let (lead_e, lead_c) = den.leading().unwrap();
        let mut rem = num;
        let mut quot: BTreeMap<Expt, BigRational> = BTreeMap::new();
        while let Some((e, c)) = rem.leading().map(|(e, c)| (e, c.clone())) {
            let qe = (e.0 - lead_e.0, e.1 - lead_e.1);
            if qe.0 < 0 || qe.1 < 0 {
                return None;
            }
            let qc = &c / lead_c;
            Self::insert_add(&mut quot, qe, qc.clone());
            let piece = den.shift(qe.0, qe.1).scale(&qc);
            rem = &rem - &piece;
        }
        let q = QTPoly { terms: quot };
        // Undo the monomial shifts: self/d = q * q^{sq-dq} t^{st-dt}.
        Some(q.shift(sq - dq, st - dt))
    }

    /// Rational content together with the primitive integer part, normalized
    /// so the primitive part has a positive leading coefficient:
    /// `self = content * primitive`.
    pub fn content_and_primitive(&self) -> (BigRational, QTPoly) {
        if self.is_zero() {
            return (BigRational::zero(), QTPoly::zero());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num::Integer::gcd(&num_gcd, &c.numer().abs());
            den_lcm = num::Integer::lcm(&den_lcm, c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        let prim = QTPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c * &inv)).collect(),
        };
        (content, prim)
    }

    /// All coefficients are nonnegative integers and all exponents nonnegative.
    pub fn is_nonneg_integral(&self) -> bool {
        self.terms.iter().all(|(&(a, b), c)| {
            a >= 0 && b >= 0 && c.is_integer() && !c.is_negative()
        })
    }
}

impl Add for &QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            QTPoly::insert_add(&mut terms, e, c.clone());
        }
        QTPoly { terms }
    }
}

impl Sub for &QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            QTPoly::insert_add(&mut terms, e, -c.clone());
        }
        QTPoly { terms }
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        let mut terms = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                QTPoly::insert_add(&mut terms, (a1 + a2, b1 + b2), c1 * c2);
            }
        }
        QTPoly { terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QTPoly {
            type Output = QTPoly;
            fn $m(self, rhs: QTPoly) -> QTPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        -&self
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_var(name: &str, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{}^{}", name, e)),
    }
}

impl fmt::Display for QTPoly {
    /// Canonical rendering: terms sorted by (q-exponent desc, t-exponent
    /// desc), e.g. `q^2*t + q + 2`. This format is the bit-exact contract
    /// for CLI output and golden files.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            let vars_present = a != 0 || b != 0;
            if !mag.is_one() || !vars_present {
                factors.push(fmt_coeff(&mag));
            }
            if let Some(s) = fmt_var("q", a) {
                factors.push(s);
            }
            if let Some(s) = fmt_var("t", b) {
                factors.push(s);
            }
            let term = factors.join("*");
            if first {
                if neg {
                    write!(f, "-{}", term)?;
                } else {
                    write!(f, "{}", term)?;
                }
                first = false;
            } else if neg {
                write!(f, " - {}", term)?;
            } else {
                write!(f, " + {}", term)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn canonical_rendering() {
        let p = QTPoly::monomial(r(1), 2, 1) + QTPoly::q() + QTPoly::from_int(2);
        assert_eq!(p.to_string(), "q^2*t + q + 2");
        assert_eq!(QTPoly::zero().to_string(), "0");
        assert_eq!((QTPoly::q() - QTPoly::t()).to_string(), "q - t");
        assert_eq!((-&QTPoly::q()).to_string(), "-q");
        assert_eq!(QTPoly::monomial(r(1), -1, 0).to_string(), "q^-1");
        assert_eq!(
            QTPoly::monomial(BigRational::new(BigInt::from(3), BigInt::from(2)), 1, 0)
                .to_string(),
            "3/2*q"
        );
    }

    #[test]
    fn q_int_is_geometric_sum() {
        assert_eq!(QTPoly::q_int(3).to_string(), "q^2 + q + 1");
        assert_eq!(QTPoly::q_int(0), QTPoly::zero());
        assert_eq!(QTPoly::q_int(1), QTPoly::one());
    }

    #[test]
    fn exact_division() {
        // (1 - q^3) / (1 - q) = 1 + q + q^2
        let n = QTPoly::one() - QTPoly::q().pow(3);
        let d = QTPoly::one() - QTPoly::q();
        assert_eq!(n.div_exact(&d).unwrap(), QTPoly::q_int(3));
        // (1+q)/(1+t) does not divide
        let n2 = QTPoly::one() + QTPoly::q();
        let d2 = QTPoly::one() + QTPoly::t();
        assert!(n2.div_exact(&d2).is_none());
        // Laurent: (q^2 t + q t^2)/(q t) = q + t
        let n3 = QTPoly::monomial(r(1), 2, 1) + QTPoly::monomial(r(1), 1, 2);
        let d3 = QTPoly::monomial(r(1), 1, 1);
        assert_eq!(
            n3.div_exact(&d3).unwrap(),
            QTPoly::q() + QTPoly::t()
        );
    }

    #[test]
    fn content_primitive() {
        let p = QTPoly::monomial(r(4), 1, 0) + QTPoly::monomial(r(6), 0, 0);
        let (c, prim) = p.content_and_primitive();
        assert_eq!(c, r(2));
        assert_eq!(prim.to_string(), "2*q + 3");
        let pneg = -&p;
        let (cn, primn) = pneg.content_and_primitive();
        assert_eq!(cn, r(-2));
        assert_eq!(primn, prim);
    }

    #[test]
    fn subst_powers_squares_exponents() {
        let p = QTPoly::q() + QTPoly::t();
        assert_eq!(p.subst_powers(2).to_string(), "q^2 + t^2");
    }
}
