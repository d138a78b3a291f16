use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{cyclotomic_poly, divisors, IntPolynomial};
use crate::error::{Error, Result};

/// A generic degree: an integer polynomial in the field size divided by a
/// power of two. Evaluation at a prime power must produce an integer; that is
/// checked on every call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericDegree {
    numerator: IntPolynomial,
    two_power: u32,
}

impl GenericDegree {
    /// Normalizes so that the numerator content is not divisible by two
    /// whenever `two_power > 0`.
    pub fn new(numerator: IntPolynomial, two_power: u32) -> Self {
        let mut numerator = numerator;
        let mut two_power = two_power;
        let two = BigInt::from(2);
        while two_power > 0 && !numerator.is_zero() && numerator.content().is_multiple_of(&two) {
            numerator = IntPolynomial::new(numerator.coeffs().iter().map(|c| c / &two).collect());
            two_power -= 1;
        }
        GenericDegree { numerator, two_power }
    }

    pub fn one() -> Self {
        GenericDegree { numerator: IntPolynomial::one(), two_power: 0 }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> BigInt {
        BigInt::one() << self.two_power
    }

    pub fn two_power(&self) -> u32 {
        self.two_power
    }

    pub fn evaluate(&self, x: &BigInt) -> Result<BigInt> {
        let v = self.numerator.eval(x);
        let (q, r) = v.div_rem(&self.denominator());
        if !r.is_zero() {
            return Err(Error::InexactDegree(x.to_string()));
        }
        Ok(q)
    }
}

impl fmt::Display for GenericDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.two_power == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})/{}", self.numerator, self.denominator())
        }
    }
}

/// Degree bookkeeping as `x^a · ∏ Φ_d^{k_d} / 2^c`.
///
/// Every factor that shows up in the hook and symbol formulas is of the form
/// `x^k`, `x^k - 1` or `x^k + 1`, so the whole computation can be carried out
/// on exponent vectors and expanded once at the end.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    x_power: i64,
    phi: BTreeMap<usize, i64>,
    two_power: i64,
}

impl CyclotomicFactorization {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn mul_x_pow(&mut self, k: i64) {
        self.x_power += k;
    }

    /// Multiply by `(x^k - 1)^sign`.
    pub fn mul_x_pow_minus_one(&mut self, k: usize, sign: i64) {
        assert!(k > 0, "x^0 - 1 vanishes");
        for d in divisors(k as u64) {
            *self.phi.entry(d as usize).or_default() += sign;
        }
    }

    /// Multiply by `(x^k + 1)^sign`, using `x^k + 1 = (x^{2k} - 1) / (x^k - 1)`.
    pub fn mul_x_pow_plus_one(&mut self, k: usize, sign: i64) {
        if k == 0 {
            self.two_power += sign;
            return;
        }
        self.mul_x_pow_minus_one(2 * k, sign);
        self.mul_x_pow_minus_one(k, -sign);
    }

    /// Multiply by `(x^a - x^b)^sign` for `a > b`.
    pub fn mul_x_pow_difference(&mut self, a: usize, b: usize, sign: i64) {
        assert!(a > b);
        self.x_power += sign * b as i64;
        self.mul_x_pow_minus_one(a - b, sign);
    }

    /// Multiply by `(x^a + x^b)^sign`.
    pub fn mul_x_pow_sum(&mut self, a: usize, b: usize, sign: i64) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        self.x_power += sign * lo as i64;
        self.mul_x_pow_plus_one(hi - lo, sign);
    }

    pub fn div_two_pow(&mut self, c: i64) {
        self.two_power -= c;
    }

    pub fn x_power(&self) -> i64 {
        self.x_power
    }

    /// Exponent of `Φ_d`; zero when absent.
    pub fn phi_exponent(&self, d: usize) -> i64 {
        self.phi.get(&d).copied().unwrap_or(0)
    }

    /// Nonzero cyclotomic exponents.
    pub fn phi_exponents(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.phi.iter().filter(|(_, &k)| k != 0).map(|(&d, &k)| (d, k))
    }

    /// True when no cyclotomic factor or power of `x` is left in a denominator.
    pub fn is_polynomial(&self) -> bool {
        self.x_power >= 0 && self.phi.values().all(|&k| k >= 0)
    }

    /// Expand into a [`GenericDegree`]. Fails when a factor remains in the
    /// denominator.
    pub fn to_generic_degree(&self) -> Result<GenericDegree> {
        if !self.is_polynomial() {
            return Err(Error::InexactDivision(format!(
                "negative cyclotomic exponent in {self:?}"
            )));
        }
        let mut poly = IntPolynomial::monomial(BigInt::one(), self.x_power as usize);
        for (d, k) in self.phi_exponents() {
            poly = &poly * &cyclotomic_poly(d)?.pow(k as u32);
        }
        let (poly, two) = if self.two_power >= 0 {
            (poly.scale(&(BigInt::one() << self.two_power as u32)), 0)
        } else {
            (poly, (-self.two_power) as u32)
        };
        Ok(GenericDegree::new(poly, two))
    }

    /// Direct evaluation of the factored form at `x`. Errors when the result is
    /// not an integer.
    pub fn evaluate(&self, x: &BigInt) -> Result<BigInt> {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let xp = x.pow(self.x_power.unsigned_abs() as u32);
        if self.x_power >= 0 {
            num *= xp;
        } else {
            den *= xp;
        }
        for (d, k) in self.phi_exponents() {
            let v = cyclotomic_poly(d)?.eval(x).pow(k.unsigned_abs() as u32);
            if k > 0 {
                num *= v;
            } else {
                den *= v;
            }
        }
        let two = BigInt::one() << self.two_power.unsigned_abs() as u32;
        if self.two_power >= 0 {
            num *= two;
        } else {
            den *= two;
        }
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::InexactDegree(x.to_string()));
        }
        Ok(q)
    }
}
