//! The field Q(q,t) of rational functions with exact integer arithmetic
//! underneath. Values are kept in a canonical form:
//!
//! * the denominator is a primitive integer polynomial with positive leading
//!   coefficient (q-major order) and no monomial factor `q` or `t`;
//! * numerator and denominator share no polynomial factor (gcd-reduced);
//! * Laurent monomial units and the rational scalar live in the numerator.
//!
//! Equality of canonical forms is plain structural equality; `eq_cross`
//! additionally offers the gcd-free cross-multiplication test.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgError, Result};

use super::gcd::gcd_qt;
use super::qtpoly::QTPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QTRat {
    num: QTPoly,
    den: QTPoly,
}

impl QTRat {
    pub fn zero() -> Self {
        QTRat {
            num: QTPoly::zero(),
            den: QTPoly::one(),
        }
    }

    pub fn one() -> Self {
        QTRat {
            num: QTPoly::one(),
            den: QTPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QTRat {
            num: QTPoly::from_int(n),
            den: QTPoly::one(),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        QTRat {
            num: QTPoly::monomial(r, 0, 0),
            den: QTPoly::one(),
        }
    }

    pub fn from_poly(p: QTPoly) -> Self {
        QTRat {
            num: p,
            den: QTPoly::one(),
        }
    }

    pub fn q() -> Self {
        Self::from_poly(QTPoly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(QTPoly::t())
    }

    /// `num / den`, canonicalized. Errors on a zero denominator.
    pub fn new(num: QTPoly, den: QTPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let mut r = QTRat { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn numer(&self) -> &QTPoly {
        &self.num
    }

    pub fn denom(&self) -> &QTPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = QTPoly::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        // Push Laurent monomial units out of the denominator.
        let (dq, dt) = (self.den.min_q_exp(), self.den.min_t_exp());
        if dq != 0 || dt != 0 {
            self.den = self.den.shift(-dq, -dt);
            self.num = self.num.shift(-dq, -dt);
        }
        let (nq, nt) = (self.num.min_q_exp().min(0), self.num.min_t_exp().min(0));
        // Work with the polynomial cone for the gcd; restore the numerator
        // shift afterwards.
        let num_poly = self.num.shift(-nq, -nt);
        let (cn, pn) = num_poly.content_and_primitive();
        let (cd, pd) = self.den.content_and_primitive();
        let g = gcd_qt(&pn, &pd);
        let (pn, pd) = if g.is_one() {
            (pn, pd)
        } else {
            (
                pn.div_exact(&g).expect("gcd divides numerator"),
                pd.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let scale = cn / cd;
        self.num = pn.scale(&scale).shift(nq, nt);
        self.den = pd;
        debug_assert!(!self.den.is_zero());
    }

    pub fn checked_div(&self, rhs: &QTRat) -> Result<QTRat> {
        if rhs.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(self * &rhs.recip_unchecked())
    }

    fn recip_unchecked(&self) -> QTRat {
        let mut r = QTRat {
            num: self.den.clone(),
            den: self.num.clone(),
        };
        r.normalize();
        r
    }

    pub fn recip(&self) -> Result<QTRat> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(self.recip_unchecked())
    }

    /// Integer power; negative powers invert (error on zero base).
    pub fn pow(&self, n: i64) -> Result<QTRat> {
        if n < 0 {
            return Ok(self.recip()?.pow(-n)?);
        }
        let mut acc = QTRat::one();
        let mut base = self.clone();
        let mut n = n as u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        Ok(acc)
    }

    /// `(-1/q)^e` with `e` possibly negative: the scalar prefactor of the
    /// creation operators.
    pub fn neg_inv_q_pow(e: i64) -> QTRat {
        let base = QTRat::new(QTPoly::from_int(-1), QTPoly::q()).unwrap();
        base.pow(e).unwrap()
    }

    /// Substitution q -> q^k, t -> t^k on both numerator and denominator
    /// (the action of `p_k` on a coefficient inside a plethystic bracket).
    pub fn subst_powers(&self, k: i64) -> QTRat {
        let mut r = QTRat {
            num: self.num.subst_powers(k),
            den: self.den.subst_powers(k),
        };
        r.normalize();
        r
    }

    /// Cross-multiplication equality: `a/b = c/d  iff  a*d = b*c`. Holds
    /// independently of gcd reduction.
    pub fn eq_cross(&self, rhs: &QTRat) -> bool {
        (&self.num * &rhs.den) == (&rhs.num * &self.den)
    }

    /// Returns the (Laurent) polynomial form when the denominator divides the
    /// numerator exactly, `None` otherwise.
    pub fn as_polynomial(&self) -> Option<QTPoly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.div_exact(&self.den)
    }

    /// True iff the value is a genuine polynomial with nonnegative integer
    /// coefficients and nonnegative exponents, i.e. lies in N[q,t].
    pub fn is_nonneg_polynomial(&self) -> bool {
        match self.as_polynomial() {
            Some(p) => p.is_nonneg_integral(),
            None => false,
        }
    }

    /// Evaluate at q = 1 with a removable-singularity fallback: factors of
    /// (q - 1) shared by numerator and denominator are divided out before
    /// evaluating. Errors when the singularity is genuine.
    pub fn eval_q1(&self) -> Result<QTRat> {
        let qm1 = QTPoly::q() - QTPoly::one();
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        loop {
            let dv = den.eval_q1();
            if !dv.is_zero() {
                let nv = num.eval_q1();
                return QTRat::new(nv, dv);
            }
            // den(1,t) = 0, so (q-1) | den; the value has a chance only if
            // (q-1) also divides num.
            match (num.div_exact(&qm1), den.div_exact(&qm1)) {
                (Some(n2), Some(d2)) => {
                    num = n2;
                    den = d2;
                }
                _ => return Err(AlgError::SingularAtQOne),
            }
        }
    }

    /// Specialize q = 1 and t = 1 to an exact rational number.
    pub fn eval_one_one(&self) -> Result<BigRational> {
        let qm1 = QTPoly::q() - QTPoly::one();
        let tm1 = QTPoly::t() - QTPoly::one();
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        loop {
            let dv = den.eval_one_one();
            if !dv.is_zero() {
                return Ok(num.eval_one_one() / dv);
            }
            let reduced = [&qm1, &tm1].iter().find_map(|f| {
                match (num.div_exact(f), den.div_exact(f)) {
                    (Some(n2), Some(d2)) => Some((n2, d2)),
                    _ => None,
                }
            });
            match reduced {
                Some((n2, d2)) => {
                    num = n2;
                    den = d2;
                }
                None => return Err(AlgError::SingularAtQOne),
            }
        }
    }
}

impl Add for &QTRat {
    type Output = QTRat;
    fn add(self, rhs: &QTRat) -> QTRat {
        let mut r = if self.den == rhs.den {
            QTRat {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            }
        } else {
            QTRat {
                num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                den: &self.den * &rhs.den,
            }
        };
        r.normalize();
        r
    }
}

impl Sub for &QTRat {
    type Output = QTRat;
    fn sub(self, rhs: &QTRat) -> QTRat {
        self + &(-rhs)
    }
}

impl Neg for &QTRat {
    type Output = QTRat;
    fn neg(self) -> QTRat {
        QTRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &QTRat {
    type Output = QTRat;
    fn mul(self, rhs: &QTRat) -> QTRat {
        let mut r = QTRat {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        };
        r.normalize();
        r
    }
}

impl Div for &QTRat {
    type Output = QTRat;
    fn div(self, rhs: &QTRat) -> QTRat {
        self.checked_div(rhs).expect("division by zero QTRat")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QTRat {
            type Output = QTRat;
            fn $m(self, rhs: QTRat) -> QTRat {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QTRat {
    type Output = QTRat;
    fn neg(self) -> QTRat {
        -&self
    }
}

impl From<i64> for QTRat {
    fn from(n: i64) -> Self {
        QTRat::from_int(n)
    }
}

impl From<QTPoly> for QTRat {
    fn from(p: QTPoly) -> Self {
        QTRat::from_poly(p)
    }
}

impl From<BigInt> for QTRat {
    fn from(n: BigInt) -> Self {
        QTRat::from_rational(BigRational::from_integer(n))
    }
}

impl fmt::Display for QTRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Serialize for QTRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QTRat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        super::strparse::parse_qtrat(&s).map_err(serde::de::Error::custom)
    }
}
