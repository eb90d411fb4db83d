//! Modular arithmetic used to reason about shuffle cycle structure.
//!
//! All products go through `u128`, so any modulus that fits in a `u64` is
//! handled without overflow.

use crate::error::{Error, Result};

/// A modulus `m >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(value: u64) -> Result<Self> {
        if value < 2 {
            return Err(Error::InvalidModulus(value));
        }
        Ok(Modulus(value))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }
}

impl TryFrom<u64> for Modulus {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        Modulus::new(value)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `base^exponent mod m` by square-and-multiply.
pub fn pow_mod(base: u64, mut exponent: u64, m: u64) -> Result<u64> {
    let m = Modulus::new(m)?;
    let mut acc = 1 % m.get();
    let mut sq = base % m.get();
    while exponent > 0 {
        if exponent & 1 == 1 {
            acc = m.mul(acc, sq);
        }
        sq = m.mul(sq, sq);
        exponent >>= 1;
    }
    Ok(acc)
}

/// Distinct prime factors of `n`, ascending, by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

pub fn euler_totient(m: u64) -> Result<u64> {
    let m = Modulus::new(m)?.get();
    Ok(prime_factors(m)
        .into_iter()
        .fold(m, |phi, p| phi / p * (p - 1)))
}

/// Least `t >= 1` with `g^t = 1 (mod m)`.
///
/// Starts from `phi(m)` and strips prime factors while the power stays 1.
pub fn multiplicative_order(g: u64, m: u64) -> Result<u64> {
    let modulus = Modulus::new(m)?;
    let g = g % m;
    if gcd(g, m) != 1 {
        return Err(Error::NotCoprime {
            value: g,
            modulus: m,
        });
    }
    let phi = euler_totient(modulus.get())?;
    let mut order = phi;
    for q in prime_factors(phi) {
        while order % q == 0 && pow_mod(g, order / q, m)? == 1 {
            order /= q;
        }
    }
    Ok(order)
}

pub fn is_primitive_root(g: u64, m: u64) -> Result<bool> {
    Ok(multiplicative_order(g, m)? == euler_totient(m)?)
}

/// Modular inverse of a unit `a` modulo `m`.
pub fn inverse_mod(a: u64, m: u64) -> Result<u64> {
    let order = multiplicative_order(a, m)?;
    pow_mod(a, order - 1, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_order(g: u64, m: u64) -> u64 {
        let mut x = g % m;
        let mut t = 1;
        while x != 1 {
            x = x * g % m;
            t += 1;
        }
        t
    }

    #[test]
    fn pow_mod_examples() {
        assert_eq!(pow_mod(2, 1, 9).unwrap(), 2);
        assert_eq!(pow_mod(2, 6, 9).unwrap(), 1);
        assert_eq!(pow_mod(3, 20, 25).unwrap(), 1);
        assert_eq!(pow_mod(5, 0, 7).unwrap(), 1);
        assert_eq!(pow_mod(2, 1, 1), Err(Error::InvalidModulus(1)));
        assert_eq!(pow_mod(2, 1, 0), Err(Error::InvalidModulus(0)));
    }

    #[test]
    fn pow_mod_wide_modulus() {
        // (m-1)^2 = 1 mod m; the square overflows u64 without widening.
        let m = u64::MAX - 58;
        assert_eq!(pow_mod(m - 1, 2, m).unwrap(), 1);
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_totient(9).unwrap(), 6);
        assert_eq!(euler_totient(53).unwrap(), 52);
        assert_eq!(euler_totient(27).unwrap(), 18);
        assert_eq!(euler_totient(2).unwrap(), 1);
        assert!(euler_totient(1).is_err());
        for m in 2..300u64 {
            let brute = (1..m).filter(|&r| gcd(r, m) == 1).count() as u64;
            assert_eq!(euler_totient(m).unwrap(), brute, "m = {m}");
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(2, 9).unwrap(), 6);
        assert_eq!(multiplicative_order(1, 9).unwrap(), 1);
        assert_eq!(multiplicative_order(2, 53).unwrap(), 52);
        assert_eq!(
            multiplicative_order(3, 9),
            Err(Error::NotCoprime {
                value: 3,
                modulus: 9
            })
        );
    }

    #[test]
    fn primitive_root_examples() {
        assert!(is_primitive_root(2, 9).unwrap());
        assert!(!is_primitive_root(2, 7).unwrap());
        assert!(is_primitive_root(2, 3).unwrap());
        assert!(is_primitive_root(6, 9).is_err());
    }

    #[test]
    fn two_generates_powers_of_three() {
        for k in 1..=12 {
            assert!(is_primitive_root(2, 3u64.pow(k)).unwrap(), "3^{k}");
        }
    }

    #[test]
    fn primitive_root_lifts_from_p_squared() {
        for p in [3u64, 5, 7, 11] {
            let p2 = p * p;
            let roots: Vec<u64> = (2..p2)
                .filter(|&g| gcd(g, p) == 1 && is_primitive_root(g, p2).unwrap())
                .collect();
            assert!(!roots.is_empty());
            for g in roots {
                for j in [3u32, 4] {
                    assert!(is_primitive_root(g, p.pow(j)).unwrap(), "g={g} p={p} j={j}");
                }
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_mod(2, 9).unwrap(), 5);
        assert_eq!(inverse_mod(3, 25).unwrap(), 17);
    }

    proptest! {
        #[test]
        fn order_matches_brute_force_and_divides_totient(m in 2u64..2000, g in 1u64..2000) {
            prop_assume!(gcd(g % m, m) == 1);
            let ord = multiplicative_order(g, m).unwrap();
            prop_assert_eq!(ord, brute_order(g, m));
            prop_assert_eq!(euler_totient(m).unwrap() % ord, 0);
            prop_assert_eq!(pow_mod(g, ord, m).unwrap(), 1);
        }
    }
}
