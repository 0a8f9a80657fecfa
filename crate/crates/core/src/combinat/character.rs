//! Irreducible characters of the symmetric group by the memoized
//! Murnaghan-Nakayama recursion on beta-sets (first-column hook lengths).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::partition::Partition;

fn cache() -> &'static Mutex<HashMap<(Partition, Partition), i64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), i64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `chi^lambda(mu)`: the irreducible character of shape `lambda` evaluated
/// on the conjugacy class of cycle type `mu`. Both must have the same size.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(
        lambda.size(),
        mu.size(),
        "character arguments must have equal size"
    );
    if lambda.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = cache().lock().unwrap().get(&key) {
        return v;
    }
    let v = compute(lambda, mu);
    cache().lock().unwrap().insert(key, v);
    v
}

fn compute(lambda: &Partition, mu: &Partition) -> i64 {
    let r = mu.parts()[0];
    let rest = Partition::from_sorted(mu.parts()[1..].to_vec());

    // Beta-set with a fixed number of beads: beta_i = lambda_i + (m - i),
    // rows indexed 1..m with lambda padded by zeros. Removing a border strip
    // of size r moves a bead from b to b - r (must be empty); its sign is
    // (-1)^{number of beads strictly between}.
    let m = lambda.len() + r as usize;
    let mut beta: Vec<i64> = Vec::with_capacity(m);
    for i in 0..m {
        let part = lambda.parts().get(i).copied().unwrap_or(0) as i64;
        beta.push(part + (m as i64 - 1 - i as i64));
    }
    // beta is strictly decreasing.
    let mut total = 0i64;
    for j in 0..m {
        let target = beta[j] - r as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta
            .iter()
            .filter(|&&b| target < b && b < beta[j])
            .count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[j] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        // Convert back to a partition: lambda_i = beta_i - (m - i).
        let mut parts = Vec::new();
        for (i, &b) in new_beta.iter().enumerate() {
            let p = b - (m as i64 - 1 - i as i64);
            debug_assert!(p >= 0);
            if p > 0 {
                parts.push(p as u32);
            }
        }
        let sub = Partition::from_sorted(parts);
        total += sign * mn_character(&sub, &rest);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partition::partitions;
    use num::BigInt;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=7u32 {
            for mu in partitions(n) {
                assert_eq!(mn_character(&Partition::row(n), &mu), 1);
                assert_eq!(
                    mn_character(&p(&vec![1; n as usize]), &mu),
                    mu.eps_sign()
                );
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])), 0);
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[2, 2])), 2);
    }

    #[test]
    fn column_orthogonality() {
        // sum_lambda chi^lambda(mu) chi^lambda(nu) = z_mu [mu = nu]
        for n in 1..=7u32 {
            let parts = partitions(n);
            for mu in &parts {
                for nu in &parts {
                    let s: i64 = parts
                        .iter()
                        .map(|lam| mn_character(lam, mu) * mn_character(lam, nu))
                        .sum();
                    let expect = if mu == nu {
                        mu.z_order()
                    } else {
                        BigInt::from(0)
                    };
                    assert_eq!(BigInt::from(s), expect, "mu={mu} nu={nu}");
                }
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        // sum_mu chi^lambda(mu) chi^rho(mu) / z_mu = [lambda = rho]
        // cleared of denominators: sum_mu (n!/z_mu) chi chi = n! [lambda=rho]
        for n in 1..=7u32 {
            let parts = partitions(n);
            let mut nfact = BigInt::from(1);
            for k in 1..=n as u64 {
                nfact *= BigInt::from(k);
            }
            for lam in &parts {
                for rho in &parts {
                    let mut s = BigInt::from(0);
                    for mu in &parts {
                        let class_size = &nfact / mu.z_order();
                        s += class_size
                            * BigInt::from(mn_character(lam, mu) * mn_character(rho, mu));
                    }
                    let expect = if lam == rho { nfact.clone() } else { BigInt::from(0) };
                    assert_eq!(s, expect, "lambda={lam} rho={rho}");
                }
            }
        }
    }
}
