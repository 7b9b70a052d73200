//! Exact integer and rational arithmetic plus the number-theoretic helpers
//! used throughout the crate: lcm folds, reduced denominators, p-adic
//! valuations and small prime sieves.
//!
//! Integers are [`num_bigint::BigInt`] and rationals are
//! [`num_rational::BigRational`], which is always stored reduced with a
//! strictly positive denominator.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Largest candidate prime accepted by the trial-division primality check.
pub const MAX_CHECKED_PRIME: u64 = 1_000_000;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn rat_int(v: impl Into<Integer>) -> Rational {
    Rational::from_integer(v.into())
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn checked_prime(p: &Integer) -> Result<u64> {
    let small = p
        .to_u64()
        .filter(|&v| v <= MAX_CHECKED_PRIME)
        .ok_or_else(|| domain(format!("cannot certify {p} as prime (limit {MAX_CHECKED_PRIME})")))?;
    if !is_prime(small) {
        return Err(domain(format!("{p} is not prime")));
    }
    Ok(small)
}

/// Exponent of the prime `p` in the positive integer `a`.
pub fn vp_int(a: &Integer, p: &Integer) -> Result<u64> {
    if !a.is_positive() {
        return Err(domain(format!("p-adic valuation needs a positive integer, got {a}")));
    }
    checked_prime(p)?;
    Ok(valuation_unchecked(a, p))
}

fn valuation_unchecked(a: &Integer, p: &Integer) -> u64 {
    let mut rest = a.abs();
    let mut e = 0;
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        rest = q;
        e += 1;
    }
}

/// `v_p(num) - v_p(den)` for a nonzero rational.
pub fn vp_rat(r: &Rational, p: &Integer) -> Result<i64> {
    if r.is_zero() {
        return Err(domain("valuation of 0 is infinite"));
    }
    checked_prime(p)?;
    let num = valuation_unchecked(r.numer(), p) as i64;
    let den = valuation_unchecked(r.denom(), p) as i64;
    Ok(num - den)
}

/// Least common multiple of positive integers; the empty list gives 1.
pub fn lcm_list<'a, I>(xs: I) -> Result<Integer>
where
    I: IntoIterator<Item = &'a Integer>,
{
    let mut acc = Integer::one();
    for x in xs {
        if !x.is_positive() {
            return Err(domain(format!("lcm entries must be positive, got {x}")));
        }
        acc = acc.lcm(x);
    }
    Ok(acc)
}

/// `lcm(1, 2, ..., n)`, with `lcm_range(0) = 1`.
pub fn lcm_range(n: usize) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc.lcm(&Integer::from(i)))
}

pub fn denominator_of(r: &Rational) -> Integer {
    r.denom().clone()
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: usize) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

pub fn factorial(n: usize) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * Integer::from(i))
}

/// A positive integer written as a product of prime powers.
///
/// Primes are strictly increasing and every exponent is at least one; the
/// empty factorization represents 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimeFactorization {
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    /// Builds a factorization from `(prime, exponent)` pairs. Zero exponents
    /// are dropped.
    pub fn new(pairs: impl IntoIterator<Item = (u64, u32)>) -> Result<Self> {
        let mut factors: Vec<(u64, u32)> = Vec::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(domain(format!("{p} is not prime")));
            }
            if e == 0 {
                continue;
            }
            if let Some(&(last, _)) = factors.last() {
                if last >= p {
                    return Err(domain("primes must be strictly increasing"));
                }
            }
            factors.push((p, e));
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }

    pub fn value(&self) -> Integer {
        self.factors.iter().fold(Integer::one(), |acc, &(p, e)| {
            acc * num_traits::pow(Integer::from(p), e as usize)
        })
    }
}

/// Renders as `2^5 * 3^3 * 5^2 * 7`; the empty product renders as `1`.
impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}
