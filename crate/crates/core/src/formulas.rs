//! Closed forms for unitary Cayley graphs of `Z_n`.
//!
//! With `n = p_1^r_1 ... p_t^r_t` and `p_1 < ... < p_t`:
//!
//! * diameter is 1 for prime `n`, 2 for prime powers and for odd `n` with
//!   `t >= 2`, and 3 for even `n` with `t >= 2`;
//! * the independence number is `n / p_1`;
//! * the packing chromatic number is `n` for prime `n`, `n - n/p_1 + 1` in
//!   the diameter-2 cases, and `n / 2` for even `n` with `t >= 2`.

use serde::{Deserialize, Serialize};

use crate::error::FormulaError;

const MAX_MODULUS: u64 = i64::MAX as u64;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
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

/// Deterministic Miller-Rabin; the witness set covers all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
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

/// Prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of distinct primes.
    pub fn t(&self) -> usize {
        self.factors.len()
    }

    pub fn smallest_prime(&self) -> u64 {
        self.factors[0].0
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, r)| p.pow(r)).product()
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }
}

fn check(n: u64) -> Result<(), FormulaError> {
    if n < 2 {
        Err(FormulaError::TooSmall(n))
    } else if n > MAX_MODULUS {
        Err(FormulaError::TooLarge(n))
    } else {
        Ok(())
    }
}

/// Trial division, stopping early once the cofactor is prime.
pub fn factorize(n: u64) -> Result<Factorization, FormulaError> {
    check(n)?;
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while rest > 1 {
        if is_prime(rest) {
            factors.push((rest, 1));
            break;
        }
        if rest.is_multiple_of(p) {
            let mut r = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                r += 1;
            }
            factors.push((p, r));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    Ok(Factorization { factors })
}

/// Euler's totient, the degree of the unitary Cayley graph.
pub fn totient(n: u64) -> Result<u64, FormulaError> {
    let f = factorize(n)?;
    Ok(f.factors
        .iter()
        .map(|&(p, r)| p.pow(r - 1) * (p - 1))
        .product())
}

pub fn diameter_formula(n: u64) -> Result<u32, FormulaError> {
    let f = factorize(n)?;
    Ok(if f.is_prime() {
        1
    } else if f.is_prime_power() || f.smallest_prime() >= 3 {
        2
    } else {
        3
    })
}

/// `p_1^(r_1 - 1) p_2^r_2 ... p_t^r_t`, i.e. `n / p_1`.
pub fn independence_formula(n: u64) -> Result<u64, FormulaError> {
    let f = factorize(n)?;
    Ok(n / f.smallest_prime())
}

pub fn packing_chromatic_formula(n: u64) -> Result<u64, FormulaError> {
    let f = factorize(n)?;
    let p1 = f.smallest_prime();
    let alpha = n / p1;
    Ok(if f.is_prime() {
        n
    } else if f.is_prime_power() || p1 >= 3 {
        alpha * (p1 - 1) + 1
    } else {
        // p_1 = 2 with at least two distinct primes.
        alpha * (p1 - 1)
    })
}

/// All closed-form quantities for one modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaSummary {
    pub n: u64,
    pub factorization: Vec<(u64, u32)>,
    pub degree: u64,
    pub diameter: u32,
    pub independence_number: u64,
    pub packing_chromatic_number: u64,
}

pub fn summary(n: u64) -> Result<FormulaSummary, FormulaError> {
    Ok(FormulaSummary {
        n,
        factorization: factorize(n)?.factors,
        degree: totient(n)?,
        diameter: diameter_formula(n)?,
        independence_number: independence_formula(n)?,
        packing_chromatic_number: packing_chromatic_formula(n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_examples() {
        assert_eq!(factorize(45).unwrap().factors(), &[(3, 2), (5, 1)]);
        assert_eq!(factorize(16).unwrap().factors(), &[(2, 4)]);
        assert_eq!(factorize(2).unwrap().factors(), &[(2, 1)]);
        assert_eq!(factorize(1), Err(FormulaError::TooSmall(1)));
        assert_eq!(factorize(u64::MAX), Err(FormulaError::TooLarge(u64::MAX)));
    }

    #[test]
    fn factorization_reconstructs() {
        for n in 2..5000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.value(), n);
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors().iter().all(|&(p, r)| r >= 1 && is_prime(p)));
        }
        let semiprime = 999_983u64 * 1_000_003;
        assert_eq!(
            factorize(semiprime).unwrap().factors(),
            &[(999_983, 1), (1_000_003, 1)]
        );
    }

    #[test]
    fn primality_matches_sieve() {
        let limit = 10_000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                (i * i..limit).step_by(i).for_each(|j| sieve[j] = false);
            }
        }
        for (i, &p) in sieve.iter().enumerate() {
            assert_eq!(is_prime(i as u64), p, "{i}");
        }
        assert!(is_prime(9_223_372_036_854_775_783));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn diameter_cases() {
        assert_eq!(diameter_formula(7).unwrap(), 1);
        assert_eq!(diameter_formula(9).unwrap(), 2);
        assert_eq!(diameter_formula(15).unwrap(), 2);
        assert_eq!(diameter_formula(12).unwrap(), 3);
        assert_eq!(diameter_formula(2).unwrap(), 1);
    }

    #[test]
    fn independence_cases() {
        assert_eq!(independence_formula(45).unwrap(), 15);
        assert_eq!(independence_formula(16).unwrap(), 8);
        assert_eq!(independence_formula(7).unwrap(), 1);
    }

    #[test]
    fn packing_chromatic_cases() {
        assert_eq!(packing_chromatic_formula(5).unwrap(), 5);
        assert_eq!(packing_chromatic_formula(16).unwrap(), 9);
        assert_eq!(packing_chromatic_formula(21).unwrap(), 15);
        assert_eq!(packing_chromatic_formula(27).unwrap(), 19);
        assert_eq!(packing_chromatic_formula(45).unwrap(), 31);
        assert_eq!(packing_chromatic_formula(12).unwrap(), 6);
        assert_eq!(packing_chromatic_formula(2).unwrap(), 2);
        assert_eq!(packing_chromatic_formula(3).unwrap(), 3);
    }

    #[test]
    fn formulas_are_consistent() {
        for n in 2..2000u64 {
            let chi = packing_chromatic_formula(n).unwrap();
            let alpha = independence_formula(n).unwrap();
            match diameter_formula(n).unwrap() {
                2 => assert_eq!(chi, n - alpha + 1),
                3 => assert_eq!(chi, n - alpha),
                _ => assert_eq!(chi, n),
            }
        }
        assert_eq!(totient(36).unwrap(), 12);
    }
}
