//! Exact integer, polynomial and multiplicative-order arithmetic.
//!
//! Everything that touches degrees or group orders is arbitrary precision.
//! Moduli, primes and ranks are small by nature and stay machine integers.

mod degree;
mod params;
mod poly;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::Zero;

pub use degree::{CyclotomicFactorization, GenericDegree};
pub use params::{order_factorization, order_polynomial, LieParams, Series, Sign};
pub use poly::IntPolynomial;

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Distinct prime divisors of an arbitrary-precision integer, by trial
/// division. Only meant for group orders, whose prime divisors are small.
pub fn prime_divisors_big(n: &BigUint) -> Vec<u64> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while n > BigUint::from(1u32) {
        let dd = BigUint::from(d);
        if &dd * &dd > n {
            out.push(u64::try_from(&n).expect("large prime factor"));
            break;
        }
        if (&n % &dd).is_zero() {
            out.push(d);
            while (&n % &dd).is_zero() {
                n /= &dd;
            }
        }
        d += 1;
    }
    out
}

/// `Some((prime, exponent))` when `r` is a prime power.
pub fn prime_power(r: u64) -> Option<(u64, u32)> {
    let ps = prime_divisors(r);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0];
    let mut k = 0;
    let mut x = r;
    while x > 1 {
        x /= p;
        k += 1;
    }
    Some((p, k))
}

pub fn euler_phi(n: u64) -> u64 {
    prime_divisors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i8 {
    let mut n = n;
    let mut sign = 1i8;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<usize, IntPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `d`-th cyclotomic polynomial, via the Möbius product
/// `Φ_d = ∏_{e | d} (x^e - 1)^{μ(d/e)}`.
pub fn cyclotomic_poly(d: usize) -> Result<IntPolynomial> {
    if d == 0 {
        return Err(Error::ZeroCyclotomicIndex);
    }
    if let Some(p) = cyclotomic_cache().read().unwrap().get(&d) {
        return Ok(p.clone());
    }
    let mut num = IntPolynomial::one();
    let mut den = IntPolynomial::one();
    for e in divisors(d as u64) {
        match mobius(d as u64 / e) {
            1 => num = &num * &IntPolynomial::x_pow_minus_one(e as usize),
            -1 => den = &den * &IntPolynomial::x_pow_minus_one(e as usize),
            _ => {}
        }
    }
    let phi = num.div_exact(&den)?;
    cyclotomic_cache().write().unwrap().insert(d, phi.clone());
    Ok(phi)
}

/// Smallest `t >= 1` with `m^t ≡ 1 (mod k)`.
pub fn multiplicative_order(m: i64, k: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::BadModulus(k));
    }
    let base = m.rem_euclid(k as i64) as u64;
    if gcd(base, k) != 1 {
        return Err(Error::NotCoprime { value: m, modulus: k });
    }
    let mut acc = base % k;
    let mut t = 1;
    while acc != 1 % k {
        acc = ((acc as u128 * base as u128) % k as u128) as u64;
        t += 1;
    }
    Ok(t)
}

/// Order of `m` modulo `p` for odd `p`, and modulo 4 for `p = 2`.
pub fn d_param(p: u64, m: i64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m.rem_euclid(p as i64) == 0 {
        return Err(Error::NotCoprime { value: m, modulus: p });
    }
    if p == 2 {
        multiplicative_order(m, 4)
    } else {
        multiplicative_order(m, p)
    }
}

/// Largest `a` with `p^a | n`. Zero has no finite valuation; it returns 0.
pub fn p_valuation(n: &BigUint, p: u64) -> u32 {
    if n.is_zero() || p < 2 {
        return 0;
    }
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut a = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        a += 1;
    }
    a
}
