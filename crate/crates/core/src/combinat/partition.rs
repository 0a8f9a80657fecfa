//! Partitions, compositions and Young-diagram cell statistics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{AlgError, Result};
use crate::exactalg::QTPoly;

/// An integer partition: weakly decreasing positive parts.
///
/// The total order is by size first, then reverse-lexicographic within a
/// size, so that iterating a `BTreeMap` keyed by partitions visits the
/// canonical enumeration order `[3] < [2,1] < [1,1,1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(AlgError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Caller guarantees the parts are already weakly decreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(n)`; empty when n = 0.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The rectangle `(a^k)`.
    pub fn rect(a: u32, k: u32) -> Self {
        if a == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![a; k as usize],
        }
    }

    /// The two-column-with-tail shape `(2^k 1^l)` and friends: `a^k 1^l`.
    pub fn rect_with_tail(a: u32, k: u32, l: u32) -> Self {
        let mut parts = vec![a; k as usize];
        parts.extend(std::iter::repeat(1).take(l as usize));
        Partition::new(parts).expect("positive parts")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of each part value: `mult[i]` = number of parts equal to
    /// `i+1`, up to the largest part.
    pub fn multiplicities(&self) -> Vec<u32> {
        let max = self.parts.first().copied().unwrap_or(0) as usize;
        let mut m = vec![0u32; max];
        for &p in &self.parts {
            m[(p - 1) as usize] += 1;
        }
        m
    }

    /// Conjugate (transpose) partition.
    pub fn conjugate(&self) -> Partition {
        let max = self.parts.first().copied().unwrap_or(0);
        let mut cols = Vec::with_capacity(max as usize);
        for c in 1..=max {
            let count = self.parts.iter().take_while(|&&p| p >= c).count() as u32;
            cols.push(count);
        }
        Partition { parts: cols }
    }

    /// Concatenate part multisets (the product rule for `p`-monomials).
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`, the centralizer order.
    pub fn z_order(&self) -> BigInt {
        let mut z = BigInt::from(1);
        for (i, &m) in self.multiplicities().iter().enumerate() {
            let val = BigInt::from(i as u64 + 1);
            for _ in 0..m {
                z *= &val;
            }
            for f in 1..=m as u64 {
                z *= BigInt::from(f);
            }
        }
        z
    }

    /// Sign of the conjugacy class: `(-1)^{|lambda| - l(lambda)}`.
    pub fn eps_sign(&self) -> i64 {
        if (self.size() as i64 - self.len() as i64) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = AlgError;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_bracket_list(s).map_err(AlgError::InvalidPartition)?;
        Partition::new(parts)
    }
}

/// A composition: ordered positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(AlgError::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    /// Length of the maximal prefix of even parts.
    pub fn erun(&self) -> usize {
        self.parts.iter().take_while(|&&p| p % 2 == 0).count()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Composition {
    type Err = AlgError;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_bracket_list(s).map_err(AlgError::InvalidComposition)?;
        Composition::new(parts)
    }
}

fn parse_bracket_list(s: &str) -> std::result::Result<Vec<u32>, String> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| format!("expected bracketed list, got '{s}'"))?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("'{p}': {e}")))
        .collect()
}

/// One cell of a Young diagram with its four hook statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
    pub arm: u32,
    pub leg: u32,
    pub coarm: u32,
    pub coleg: u32,
}

/// All cells of the diagram of `lambda` (rows indexed from 0 = first part).
pub fn cell_stats(lambda: &Partition) -> Vec<Cell> {
    let parts = lambda.parts();
    let conj = lambda.conjugate();
    let cols = conj.parts();
    let mut cells = Vec::with_capacity(lambda.size() as usize);
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len {
            let col_len = cols[c as usize];
            cells.push(Cell {
                row: r as u32,
                col: c,
                arm: len - c - 1,
                coarm: c,
                leg: col_len - r as u32 - 1,
                coleg: r as u32,
            });
        }
    }
    cells
}

/// `n(lambda) = sum of colegs = sum of legs`.
pub fn nstat(lambda: &Partition) -> u64 {
    cell_stats(lambda).iter().map(|c| c.coleg as u64).sum()
}

/// `T_mu = t^{n(mu)} q^{n(mu')}`, the nabla eigenvalue.
pub fn t_mu(mu: &Partition) -> QTPoly {
    let n = nstat(mu) as i64;
    let np = nstat(&mu.conjugate()) as i64;
    QTPoly::monomial(num::BigRational::from_integer(1.into()), np, n)
}

/// `w_mu = prod_cells (q^arm - t^{leg+1})(t^leg - q^{arm+1})`.
pub fn w_mu(mu: &Partition) -> QTPoly {
    let one = num::BigRational::from_integer(1.into());
    let mut w = QTPoly::one();
    for cell in cell_stats(mu) {
        let f1 = QTPoly::monomial(one.clone(), cell.arm as i64, 0)
            - QTPoly::monomial(one.clone(), 0, cell.leg as i64 + 1);
        let f2 = QTPoly::monomial(one.clone(), 0, cell.leg as i64)
            - QTPoly::monomial(one.clone(), cell.arm as i64 + 1, 0);
        w = &(&w * &f1) * &f2;
    }
    w
}

/// All partitions of `n` in reverse-lexicographic order:
/// `[(n), (n-1,1), ..., (1^n)]`.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n)
}

/// Partitions of `n` with all parts `<= max_part`, reverse-lexicographic.
pub fn partitions_bounded(n: u32, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(stack.clone()));
            return;
        }
        let hi = max.min(remaining);
        for p in (1..=hi).rev() {
            stack.push(p);
            rec(remaining - p, p, stack, out);
            stack.pop();
        }
    }
    rec(n, max_part, &mut stack, &mut out);
    out
}

/// All compositions of `n` in lexicographic order:
/// `[(1,1,1), (1,2), (2,1), (3)]` for n = 3. The empty composition is the
/// unique composition of 0.
pub fn compositions(n: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: u32, stack: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition {
                parts: stack.clone(),
            });
            return;
        }
        for p in 1..=remaining {
            stack.push(p);
            rec(remaining - p, stack, out);
            stack.pop();
        }
    }
    rec(n, &mut stack, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_involution() {
        for n in 0..=10 {
            for lam in partitions(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn cell_statistics() {
        // single cell
        let cells = cell_stats(&p(&[1]));
        assert_eq!(cells.len(), 1);
        let c = cells[0];
        assert_eq!((c.arm, c.leg, c.coarm, c.coleg), (0, 0, 0, 0));
        // corner of (2,1)
        let cells = cell_stats(&p(&[2, 1]));
        let corner = cells.iter().find(|c| c.row == 0 && c.col == 0).unwrap();
        assert_eq!(
            (corner.arm, corner.leg, corner.coarm, corner.coleg),
            (1, 1, 0, 0)
        );
        // (3): first cell has arm 2, leg 0
        let cells = cell_stats(&p(&[3]));
        let c0 = cells.iter().find(|c| c.col == 0).unwrap();
        assert_eq!((c0.arm, c0.leg), (2, 0));
    }

    #[test]
    fn cell_invariants() {
        for n in 1..=10 {
            for lam in partitions(n) {
                let conj = lam.conjugate();
                for c in cell_stats(&lam) {
                    assert_eq!(c.arm + c.coarm + 1, lam.parts()[c.row as usize]);
                    assert_eq!(c.leg + c.coleg + 1, conj.parts()[c.col as usize]);
                }
                // sum of legs = sum of colegs
                let legs: u64 = cell_stats(&lam).iter().map(|c| c.leg as u64).sum();
                assert_eq!(legs, nstat(&lam));
            }
        }
    }

    #[test]
    fn t_and_w_and_z() {
        // T_(1) = 1, w_(1) = (1-t)(1-q)
        assert!(t_mu(&p(&[1])).is_one());
        let w1 = w_mu(&p(&[1]));
        let expect = (QTPoly::one() - QTPoly::t()) * (QTPoly::one() - QTPoly::q());
        assert_eq!(w1, expect);
        // T_(2,1) = qt
        assert_eq!(t_mu(&p(&[2, 1])).to_string(), "q*t");
        // z_(2,1) = 2
        assert_eq!(p(&[2, 1]).z_order(), BigInt::from(2));
        assert_eq!(p(&[2, 2, 1]).z_order(), BigInt::from(8));
        // T_(2) = q
        assert_eq!(t_mu(&p(&[2])).to_string(), "q");
    }

    #[test]
    fn enumeration_orders() {
        let parts3: Vec<String> = partitions(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(parts3, vec!["[3]", "[2,1]", "[1,1,1]"]);
        assert_eq!(partitions(0), vec![Partition::empty()]);
        let comps3: Vec<String> = compositions(3).iter().map(|c| c.to_string()).collect();
        assert_eq!(comps3, vec!["[1,1,1]", "[1,2]", "[2,1]", "[3]"]);
        // counts
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &cnt) in expected.iter().enumerate() {
            assert_eq!(partitions(n as u32).len(), cnt, "p({n})");
        }
        for n in 1..=12u32 {
            assert_eq!(compositions(n).len(), 1usize << (n - 1));
        }
    }

    #[test]
    fn partition_order_matches_enumeration() {
        for n in 0..=8 {
            let enumerated = partitions(n);
            let mut sorted = enumerated.clone();
            sorted.sort();
            assert_eq!(enumerated, sorted);
        }
    }

    #[test]
    fn display_and_parse() {
        let lam = p(&[2, 2, 1]);
        assert_eq!(lam.to_string(), "[2,2,1]");
        assert_eq!("[2,2,1]".parse::<Partition>().unwrap(), lam);
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[2,0]".parse::<Partition>().is_err());
        let c = "[1,2]".parse::<Composition>().unwrap();
        assert_eq!(c.parts(), &[1, 2]);
    }

    #[test]
    fn erun_examples() {
        let c = |v: &[u32]| Composition::new(v.to_vec()).unwrap();
        assert_eq!(c(&[2, 4, 1, 2]).erun(), 2);
        assert_eq!(c(&[1, 2]).erun(), 0);
        assert_eq!(c(&[2, 2, 2]).erun(), 3);
    }
}
