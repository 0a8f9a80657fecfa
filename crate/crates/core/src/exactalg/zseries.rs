//! Windowed Laurent series in the auxiliary variable `z` with generic exact
//! coefficients. A series is stored as a sparse map of coefficients together
//! with the highest exponent up to which those coefficients are known to be
//! exact (`hi = None` means the value is a genuine Laurent polynomial, exact
//! everywhere). Below the stored support every series is exactly zero, which
//! matches every construction used here: truncated `Omega` expansions have an
//! unknown high-order tail, never an unknown low one.
//!
//! Coefficient extraction inside the window is exact; extraction above it is
//! a loud error, never a silent zero.

use std::collections::BTreeMap;

use crate::error::{AlgError, Result};

use super::qtrat::QTRat;

/// Coefficient requirements for windowed series arithmetic. Addition and
/// multiplication are fallible so that degree-truncation errors of
/// symmetric-function coefficients propagate out of series products.
pub trait SeriesElem: Clone {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn try_add(&self, rhs: &Self) -> Result<Self>;
    fn try_sub(&self, rhs: &Self) -> Result<Self>;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn invert(&self) -> Result<Self>;
}

impl SeriesElem for QTRat {
    fn is_zero(&self) -> bool {
        QTRat::is_zero(self)
    }
    fn is_one(&self) -> bool {
        QTRat::is_one(self)
    }
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        Ok(self + rhs)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        Ok(self - rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(self * rhs)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn invert(&self) -> Result<Self> {
        self.recip()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZSeries<C> {
    coeffs: BTreeMap<i64, C>,
    /// Exact up to and including this exponent; `None` = exact everywhere.
    hi: Option<i64>,
}

impl<C: SeriesElem> ZSeries<C> {
    /// The zero series, exact everywhere.
    pub fn zero() -> Self {
        ZSeries {
            coeffs: BTreeMap::new(),
            hi: None,
        }
    }

    /// A single term `c * z^k`, exact everywhere.
    pub fn monomial(k: i64, c: C) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        ZSeries { coeffs, hi: None }
    }

    /// Build from explicit terms, exact everywhere (a Laurent polynomial).
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k, c) in terms {
            if !c.is_zero() {
                coeffs.insert(k, c);
            }
        }
        ZSeries { coeffs, hi: None }
    }

    /// Build from terms that are exact only up to `hi` (a truncated series).
    pub fn from_terms_truncated(terms: impl IntoIterator<Item = (i64, C)>, hi: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k, c) in terms {
            if k <= hi && !c.is_zero() {
                coeffs.insert(k, c);
            }
        }
        ZSeries {
            coeffs,
            hi: Some(hi),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest retained exponent (the series is exactly zero below it).
    pub fn lo(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent up to which coefficients are exact; `None` = all.
    pub fn hi(&self) -> Option<i64> {
        self.hi
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &C)> {
        self.coeffs.iter()
    }

    fn known_at(&self, k: i64) -> bool {
        match self.hi {
            None => true,
            Some(h) => k <= h,
        }
    }

    /// Exact coefficient of `z^k`: `Ok(None)` means exactly zero. Requesting
    /// an exponent above the retained window is an error.
    pub fn coeff(&self, k: i64) -> Result<Option<&C>> {
        if !self.known_at(k) {
            return Err(AlgError::WindowOutOfRange {
                k,
                hi: self.hi.unwrap(),
            });
        }
        Ok(self.coeffs.get(&k))
    }

    fn min_support(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn map_coeffs<D: SeriesElem>(&self, f: impl Fn(&C) -> Result<D>) -> Result<ZSeries<D>> {
        let mut coeffs = BTreeMap::new();
        for (&k, c) in &self.coeffs {
            let v = f(c)?;
            if !v.is_zero() {
                coeffs.insert(k, v);
            }
        }
        Ok(ZSeries {
            coeffs,
            hi: self.hi,
        })
    }

    pub fn scale(&self, c: &C) -> Result<ZSeries<C>> {
        self.map_coeffs(|v| v.try_mul(c))
    }

    pub fn shift(&self, k: i64) -> ZSeries<C> {
        ZSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
            hi: self.hi.map(|h| h + k),
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        let hi = match (self.hi, rhs.hi) {
            (None, h) | (h, None) => h,
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        let mut coeffs = self.coeffs.clone();
        if let Some(h) = hi {
            coeffs.retain(|&k, _| k <= h);
        }
        for (&k, c) in &rhs.coeffs {
            if let Some(h) = hi {
                if k > h {
                    continue;
                }
            }
            match coeffs.get_mut(&k) {
                Some(old) => {
                    let s = old.try_add(c)?;
                    if s.is_zero() {
                        coeffs.remove(&k);
                    } else {
                        *old = s;
                    }
                }
                None => {
                    coeffs.insert(k, c.clone());
                }
            }
        }
        Ok(ZSeries { coeffs, hi })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.map_coeffs(|c| Ok(c.neg()))?)
    }

    /// Product with a custom coefficient multiplier (used to cap symmetric-
    /// function degrees where the extraction target makes that sound).
    pub fn try_mul_with(
        &self,
        rhs: &Self,
        mul: impl Fn(&C, &C) -> Result<C>,
    ) -> Result<Self> {
        // Exactness of the product at exponent k needs every contributing
        // pair known; the unknown tail of one factor meets the lowest support
        // of the other first.
        let hi = match (self.hi, rhs.hi) {
            (None, None) => None,
            (Some(a), None) => match rhs.min_support() {
                Some(m) => Some(a + m),
                None => None, // rhs is zero
            },
            (None, Some(b)) => match self.min_support() {
                Some(m) => Some(b + m),
                None => None,
            },
            (Some(a), Some(b)) => {
                let ka = rhs.min_support().map(|m| a + m);
                let kb = self.min_support().map(|m| b + m);
                match (ka, kb) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    _ => None, // one side is zero
                }
            }
        };
        let mut coeffs: BTreeMap<i64, C> = BTreeMap::new();
        for (&k1, c1) in &self.coeffs {
            for (&k2, c2) in &rhs.coeffs {
                let k = k1 + k2;
                if let Some(h) = hi {
                    if k > h {
                        continue;
                    }
                }
                let p = mul(c1, c2)?;
                if p.is_zero() {
                    continue;
                }
                match coeffs.get_mut(&k) {
                    Some(old) => {
                        let s = old.try_add(&p)?;
                        if s.is_zero() {
                            coeffs.remove(&k);
                        } else {
                            *old = s;
                        }
                    }
                    None => {
                        coeffs.insert(k, p);
                    }
                }
            }
        }
        Ok(ZSeries { coeffs, hi })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.try_mul_with(rhs, |a, b| a.try_mul(b))
    }

    /// Multiplicative inverse, exact up to `hi_target`. The lowest term must
    /// have an invertible (unit) coefficient; for the series used here that
    /// coefficient is always 1.
    pub fn invert_to(&self, hi_target: i64) -> Result<Self> {
        self.invert_to_with(hi_target, |a, b| a.try_mul(b))
    }

    /// Inverse with a custom coefficient multiplier.
    pub fn invert_to_with(
        &self,
        hi_target: i64,
        mul: impl Fn(&C, &C) -> Result<C>,
    ) -> Result<Self> {
        let (m, lead) = match self.coeffs.iter().next() {
            Some((&m, c)) => (m, c),
            None => return Err(AlgError::NonInvertibleSeries),
        };
        if let Some(h) = self.hi {
            // We can only trust coefficients up to h; the inverse is exact up
            // to h - 2m relative to ... in practice m = 0 and target <= h.
            if hi_target + m > h - m {
                return Err(AlgError::WindowOutOfRange {
                    k: hi_target,
                    hi: h - 2 * m,
                });
            }
        }
        let lead_inv = lead.invert()?;
        // Normalize to a power series with constant term 1:
        // self = lead * z^m * (1 + u), invert (1 + u) by recurrence.
        let width = hi_target + m; // exponents 0..=width of the normalized inverse
        if width < 0 {
            return Ok(ZSeries::from_terms_truncated(std::iter::empty(), hi_target));
        }
        let mut a: BTreeMap<i64, C> = BTreeMap::new(); // normalized series
        for (&k, c) in &self.coeffs {
            let e = k - m;
            if e > width {
                break;
            }
            a.insert(e, mul(&lead_inv, c)?);
        }
        let mut b: BTreeMap<i64, C> = BTreeMap::new(); // its inverse
        let one = lead.try_mul(&lead_inv)?;
        b.insert(0, one);
        for n in 1..=width {
            // b_n = -sum_{j=1..n} a_j b_{n-j}
            let mut acc: Option<C> = None;
            for j in 1..=n {
                let (aj, bnj) = match (a.get(&j), b.get(&(n - j))) {
                    (Some(x), Some(y)) => (x, y),
                    _ => continue,
                };
                let p = mul(aj, bnj)?;
                acc = Some(match acc {
                    Some(s) => s.try_add(&p)?,
                    None => p,
                });
            }
            if let Some(s) = acc {
                let v = s.neg();
                if !v.is_zero() {
                    b.insert(n, v);
                }
            }
        }
        let mut coeffs = BTreeMap::new();
        for (e, c) in b {
            let v = mul(&c, &lead_inv)?;
            if !v.is_zero() {
                coeffs.insert(e - m, v);
            }
        }
        Ok(ZSeries {
            coeffs,
            hi: Some(hi_target),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qtpoly::QTPoly;

    fn c(n: i64) -> QTRat {
        QTRat::from_int(n)
    }

    #[test]
    fn extract_inside_window() {
        let s = ZSeries::from_terms([(0, c(1)), (2, c(3))]);
        assert_eq!(s.coeff(2).unwrap(), Some(&c(3)));
        assert_eq!(s.coeff(1).unwrap(), None);
        assert_eq!(s.coeff(-5).unwrap(), None);
    }

    #[test]
    fn extract_outside_window_errors() {
        let s = ZSeries::from_terms_truncated([(0, c(1)), (1, c(1))], 1);
        assert!(s.coeff(2).is_err());
        assert!(s.coeff(1).is_ok());
    }

    #[test]
    fn laurent_product() {
        // (1/z)(1+z): coefficient of z^-1 is 1
        let a = ZSeries::monomial(-1, c(1));
        let b = ZSeries::from_terms([(0, c(1)), (1, c(1))]);
        let p = a.try_mul(&b).unwrap();
        assert_eq!(p.coeff(-1).unwrap(), Some(&c(1)));
        assert_eq!(p.coeff(0).unwrap(), Some(&c(1)));
    }

    #[test]
    fn truncated_product_window() {
        // A is exact to 3, supported from 0; B is a polynomial from -2.
        let a = ZSeries::from_terms_truncated([(0, c(1)), (1, c(1)), (2, c(1)), (3, c(1))], 3);
        let b = ZSeries::from_terms([(-2, c(1)), (0, c(1))]);
        let p = a.try_mul(&b).unwrap();
        // exact only up to 3 + (-2) = 1
        assert_eq!(p.hi(), Some(1));
        assert_eq!(p.coeff(1).unwrap(), Some(&c(2))); // z^3*z^-2 + z^1*z^0
        assert!(p.coeff(2).is_err());
    }

    #[test]
    fn inversion() {
        // (1 - z)^{-1} = 1 + z + z^2 + ...
        let a = ZSeries::from_terms([(0, c(1)), (1, c(-1))]);
        let inv = a.invert_to(4).unwrap();
        for k in 0..=4 {
            assert_eq!(inv.coeff(k).unwrap(), Some(&c(1)));
        }
        // product gives 1 within the window
        let p = a.try_mul(&inv).unwrap();
        assert_eq!(p.coeff(0).unwrap(), Some(&c(1)));
        for k in 1..=4 {
            assert_eq!(p.coeff(k).unwrap(), None, "at z^{k}");
        }
    }

    #[test]
    fn inversion_with_shift() {
        // (z^-1 (1 + z))^{-1} = z (1 - z + z^2 - ...)
        let a = ZSeries::from_terms([(-1, c(1)), (0, c(1))]);
        let inv = a.invert_to(3).unwrap();
        assert_eq!(inv.coeff(1).unwrap(), Some(&c(1)));
        assert_eq!(inv.coeff(2).unwrap(), Some(&c(-1)));
        assert_eq!(inv.coeff(3).unwrap(), Some(&c(1)));
        assert_eq!(inv.coeff(0).unwrap(), None);
    }

    #[test]
    fn scale_by_poly() {
        let a = ZSeries::from_terms([(0, c(2))]);
        let s = a
            .scale(&QTRat::from_poly(QTPoly::q()))
            .unwrap();
        assert_eq!(
            s.coeff(0).unwrap().unwrap().to_string(),
            "2*q"
        );
    }
}
