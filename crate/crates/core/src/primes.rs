//! Small-integer primality and factoring helpers used throughout the crate.
//!
//! Everything here is deterministic. Factoring is trial division up to a
//! configurable bound; when the bound is insufficient the caller gets a
//! [`FactorBoundExceeded`] error instead of a partial factorization, because
//! order computations downstream must be exact.

use thiserror::Error;

/// Default trial-division bound for factoring group orders `q ∓ 1`.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("trial division bound {bound} exceeded while factoring {n}: composite cofactor {cofactor} remains")]
pub struct FactorBoundExceeded {
    pub n: u64,
    pub bound: u64,
    pub cofactor: u64,
}

/// Deterministic Miller-Rabin primality test for `u64`.
///
/// The base set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to be
/// correct for all n < 3.3·10²⁴, which covers the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// All primes `<= limit`, ascending (simple sieve).
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| if b { Some(i as u64) } else { None })
        .collect()
}

/// Smallest prime strictly greater than `n`, or `None` on overflow.
pub fn next_prime(n: u64) -> Option<u64> {
    let mut k = n.checked_add(1)?;
    loop {
        if is_prime(k) {
            return Some(k);
        }
        k = k.checked_add(1)?;
    }
}

/// Factor `n` by trial division up to `bound`, finishing with a primality
/// test on the cofactor. Returns `(prime, multiplicity)` pairs ascending.
pub fn trial_factor(n: u64, bound: u64) -> Result<Vec<(u64, u32)>, FactorBoundExceeded> {
    let mut n0 = n;
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut push = |p: u64, n0: &mut u64| {
        let mut e = 0u32;
        while *n0 % p == 0 {
            *n0 /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n0);
    push(3, &mut n0);
    let mut p = 5u64;
    // 6k±1 wheel
    while p <= bound && (p as u128) * (p as u128) <= n0 as u128 {
        push(p, &mut n0);
        push(p + 2, &mut n0);
        p += 6;
    }
    if n0 > 1 {
        if is_prime(n0) {
            out.push((n0, 1));
        } else {
            return Err(FactorBoundExceeded {
                n,
                bound,
                cofactor: n0,
            });
        }
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let known: Vec<u64> = primes_up_to(100);
        for n in 0..=100u64 {
            assert_eq!(is_prime(n), known.contains(&n), "n={n}");
        }
    }

    #[test]
    fn primality_large() {
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime(2_147_483_649));
        assert!(is_prime(999_999_937));
        assert!(!is_prime(999_999_937u64 * 3));
    }

    #[test]
    fn trial_factor_exact() {
        assert_eq!(trial_factor(1, 100).unwrap(), vec![]);
        assert_eq!(trial_factor(12, 100).unwrap(), vec![(2, 2), (3, 1)]);
        assert_eq!(
            trial_factor(2 * 3 * 5 * 7 * 11 * 13, 13).unwrap(),
            vec![(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1)]
        );
        // large prime cofactor is fine even beyond the bound
        assert_eq!(
            trial_factor(4 * 999_999_937, 10).unwrap(),
            vec![(2, 2), (999_999_937, 1)]
        );
    }

    #[test]
    fn trial_factor_bound_exceeded() {
        // 1009 * 1013, both above the bound
        let err = trial_factor(1009 * 1013, 100).unwrap_err();
        assert_eq!(err.cofactor, 1009 * 1013);
    }

    #[test]
    fn next_prime_walks() {
        assert_eq!(next_prime(0), Some(2));
        assert_eq!(next_prime(2), Some(3));
        assert_eq!(next_prime(13), Some(17));
    }
}
