//! The quantum characteristic `l` and validation of the standing hypothesis
//! `r ∤ q(q-1)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamsError {
    #[error("r must be prime, got {0}")]
    RNotPrime(u64),
    #[error("q must be a prime power >= 2, got {0}")]
    QNotPrimePower(u64),
    #[error("n must be positive")]
    InvalidRank,
    #[error("defining characteristic excluded: {r} divides q = {q}")]
    DefiningCharacteristic { q: u64, r: u64 },
    #[error("hypothesis r ∤ q(q-1) violated: {r} divides q - 1 = {qm1}")]
    HypothesisViolated { qm1: u64, r: u64 },
    #[error("q not invertible mod r")]
    NotInvertible,
}

/// The parameter triple `(n, q, r)` together with the derived quantum
/// characteristic `l`. Construction enforces `r` prime, `q` a prime power,
/// and `r ∤ q(q-1)`, so `l >= 2` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularParams {
    pub n: usize,
    pub q: u64,
    pub r: u64,
    pub l: u64,
}

impl ModularParams {
    pub fn new(n: usize, q: u64, r: u64) -> Result<Self, ParamsError> {
        make_params(n, q, r)
    }

    /// The residue of `q` in `F_r`; nonzero and distinct from 1 by the
    /// standing hypothesis.
    pub fn q_res(&self) -> u64 {
        self.q % self.r
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// True iff `n = p^k` for a prime `p` and `k >= 1`, found by trial
/// factorization of the smallest prime divisor.
pub fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 0u64;
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return true; // n itself is prime
    }
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    debug_assert!(modulus < (1 << 32), "modulus must fit a 32-bit word");
    let mut acc = 1u64 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// The smallest `i >= 1` with `q^i ≡ 1 (mod r)`; divides `r - 1` for prime
/// `r`. Errors when `r | q`.
pub fn multiplicative_order(q: u64, r: u64) -> Result<u64, ParamsError> {
    debug_assert!(is_prime(r), "multiplicative_order requires r prime");
    if q % r == 0 {
        return Err(ParamsError::NotInvertible);
    }
    // Walk the divisors of r - 1 in increasing order.
    let group_order = r - 1;
    let mut divisors = Vec::new();
    let mut d = 1u64;
    while d * d <= group_order {
        if group_order % d == 0 {
            divisors.push(d);
            divisors.push(group_order / d);
        }
        d += 1;
    }
    divisors.sort_unstable();
    for d in divisors {
        if mod_pow(q, d, r) == 1 {
            return Ok(d);
        }
    }
    unreachable!("q^(r-1) ≡ 1 mod prime r by Fermat")
}

/// Two-case definition of the quantum characteristic: `l = r` when
/// `q ≡ 1 (mod r)`, otherwise the multiplicative order of `q` mod `r`.
pub fn quantum_characteristic(q: u64, r: u64) -> Result<u64, ParamsError> {
    let ord = multiplicative_order(q, r)?;
    Ok(if ord == 1 { r } else { ord })
}

/// Validates `(n, q, r)` and computes `l`. Rejects `r` non-prime, `q` not a
/// prime power, `r | q` (defining characteristic), and `r | q - 1`.
pub fn make_params(n: usize, q: u64, r: u64) -> Result<ModularParams, ParamsError> {
    if !is_prime(r) {
        return Err(ParamsError::RNotPrime(r));
    }
    if n == 0 {
        return Err(ParamsError::InvalidRank);
    }
    if q < 2 || !is_prime_power(q) {
        return Err(ParamsError::QNotPrimePower(q));
    }
    if q % r == 0 {
        return Err(ParamsError::DefiningCharacteristic { q, r });
    }
    if (q - 1) % r == 0 {
        return Err(ParamsError::HypothesisViolated { qm1: q - 1, r });
    }
    let l = quantum_characteristic(q, r)?;
    Ok(ModularParams { n, q, r, l })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(3, 13).unwrap(), 3);
        assert_eq!(multiplicative_order(7, 5).unwrap(), 4);
        for r in [2u64, 3, 5, 7, 11, 13] {
            assert_eq!(multiplicative_order(1, r).unwrap(), 1);
        }
    }

    #[test]
    fn order_rejects_zero_divisor() {
        assert_eq!(multiplicative_order(26, 13), Err(ParamsError::NotInvertible));
        assert!(ParamsError::NotInvertible
            .to_string()
            .contains("q not invertible mod r"));
    }

    #[test]
    fn order_divides_group_order() {
        for r in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            for q in 1..40 {
                if q % r == 0 {
                    continue;
                }
                let ord = multiplicative_order(q, r).unwrap();
                assert_eq!((r - 1) % ord, 0, "q={q}, r={r}");
            }
        }
    }

    #[test]
    fn params_examples() {
        assert_eq!(make_params(6, 3, 13).unwrap().l, 3);
        assert_eq!(make_params(4, 7, 5).unwrap().l, 4);
        assert!(matches!(
            make_params(5, 8, 7),
            Err(ParamsError::HypothesisViolated { qm1: 7, r: 7 })
        ));
    }

    #[test]
    fn params_rejections() {
        assert!(matches!(make_params(3, 5, 6), Err(ParamsError::RNotPrime(6))));
        assert!(matches!(make_params(3, 12, 5), Err(ParamsError::QNotPrimePower(12))));
        assert!(matches!(make_params(0, 3, 5), Err(ParamsError::InvalidRank)));
        assert!(matches!(
            make_params(3, 9, 3),
            Err(ParamsError::DefiningCharacteristic { q: 9, r: 3 })
        ));
    }

    #[test]
    fn params_never_yield_l_one() {
        for q in 2..60u64 {
            if !is_prime_power(q) {
                continue;
            }
            for r in [2u64, 3, 5, 7, 11, 13, 17] {
                if let Ok(params) = make_params(3, q, r) {
                    assert!(params.l >= 2, "q={q}, r={r}");
                }
            }
        }
    }

    #[test]
    fn quantum_characteristic_branches_on_order_one() {
        // 11 ≡ 1 (mod 5): order 1, so l falls back to r itself.
        assert_eq!(quantum_characteristic(11, 5).unwrap(), 5);
        assert_eq!(quantum_characteristic(3, 13).unwrap(), 3);
    }

    #[test]
    fn random_orders_are_minimal() {
        let primes: Vec<u64> = (3..200).filter(|&n| is_prime(n)).collect();
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let mut checked = 0;
        while checked < 100 {
            let r = primes[rng.gen_range(0..primes.len())];
            let q = rng.gen_range(2..1000u64);
            if q % r == 0 || q % r == 1 {
                continue;
            }
            let l = multiplicative_order(q, r).unwrap();
            assert_eq!(mod_pow(q, l, r), 1);
            for d in 1..l {
                if l % d == 0 {
                    assert_ne!(mod_pow(q, d, r), 1, "q={q}, r={r}, d={d}");
                }
            }
            checked += 1;
        }
    }

    #[test]
    fn prime_power_detection() {
        for n in [2u64, 3, 4, 5, 8, 9, 16, 25, 27, 49, 121, 128] {
            assert!(is_prime_power(n), "{n}");
        }
        for n in [0u64, 1, 6, 10, 12, 15, 36, 100] {
            assert!(!is_prime_power(n), "{n}");
        }
    }
}
