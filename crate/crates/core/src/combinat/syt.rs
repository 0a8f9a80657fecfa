//! Standard Young tableaux enumerated by direct backtracking, bucketed by
//! descent set. This is the bridge between Schur functions and Gessel's
//! fundamental quasisymmetric basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num::BigInt;

use super::partition::{cell_stats, Partition};

/// Descent sets are subsets of `{1,..,n-1}` encoded as bitmasks with bit
/// `i-1` standing for `i`.
pub type SubsetMask = u64;

fn cache() -> &'static Mutex<HashMap<Partition, Arc<BTreeMap<SubsetMask, u64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<BTreeMap<SubsetMask, u64>>>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Counts of standard Young tableaux of shape `lambda` grouped by descent
/// set: `i` is a descent of `T` when `i+1` sits in a strictly lower row
/// (rows indexed from the first part downward).
pub fn syt_descents(lambda: &Partition) -> Arc<BTreeMap<SubsetMask, u64>> {
    if let Some(hit) = cache().lock().unwrap().get(lambda) {
        return Arc::clone(hit);
    }
    let computed = Arc::new(enumerate(lambda));
    cache()
        .lock()
        .unwrap()
        .entry(lambda.clone())
        .or_insert_with(|| Arc::clone(&computed))
        .clone()
}

fn enumerate(lambda: &Partition) -> BTreeMap<SubsetMask, u64> {
    let n = lambda.size() as usize;
    let mut out = BTreeMap::new();
    if n == 0 {
        out.insert(0, 1);
        return out;
    }
    let shape: Vec<u32> = lambda.parts().to_vec();
    let mut fill = vec![0u32; shape.len()]; // cells used per row
    let mut row_of = vec![usize::MAX; n + 1];
    fn rec(
        k: usize,
        n: usize,
        shape: &[u32],
        fill: &mut Vec<u32>,
        row_of: &mut Vec<usize>,
        out: &mut BTreeMap<SubsetMask, u64>,
    ) {
        if k > n {
            let mut mask: SubsetMask = 0;
            for i in 1..n {
                if row_of[i + 1] > row_of[i] {
                    mask |= 1 << (i - 1);
                }
            }
            *out.entry(mask).or_insert(0) += 1;
            return;
        }
        for r in 0..shape.len() {
            let used = fill[r];
            if used < shape[r] && (r == 0 || fill[r - 1] > used) {
                fill[r] += 1;
                row_of[k] = r;
                rec(k + 1, n, shape, fill, row_of, out);
                fill[r] -= 1;
            }
        }
    }
    rec(1, n, &shape, &mut fill, &mut row_of, &mut out);
    out
}

/// Number of SYT of shape `lambda` by the hook length formula (used to
/// validate the backtracking enumeration).
pub fn syt_count_hook(lambda: &Partition) -> BigInt {
    let n = lambda.size() as u64;
    let mut num = BigInt::from(1);
    for k in 1..=n {
        num *= BigInt::from(k);
    }
    let mut den = BigInt::from(1);
    for c in cell_stats(lambda) {
        den *= BigInt::from((c.arm + c.leg + 1) as u64);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partition::partitions;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn row_and_column_shapes() {
        let n = 4u32;
        let row = syt_descents(&Partition::row(n));
        assert_eq!(row.len(), 1);
        assert_eq!(row[&0], 1);
        let col = syt_descents(&p(&[1, 1, 1, 1]));
        assert_eq!(col.len(), 1);
        let full: SubsetMask = (1 << (n - 1)) - 1;
        assert_eq!(col[&full], 1);
    }

    #[test]
    fn shape_21() {
        let d = syt_descents(&p(&[2, 1]));
        // S={1} count 1, S={2} count 1
        assert_eq!(d.len(), 2);
        assert_eq!(d[&0b01], 1);
        assert_eq!(d[&0b10], 1);
    }

    #[test]
    fn counts_match_hook_formula() {
        for n in 0..=8u32 {
            for lam in partitions(n) {
                let total: u64 = syt_descents(&lam).values().sum();
                assert_eq!(
                    BigInt::from(total),
                    syt_count_hook(&lam),
                    "shape {lam}"
                );
            }
        }
    }
}
