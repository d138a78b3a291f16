//! Exact arithmetic in `Q(ζ_N)`, canonical in the power basis
//! `1, ζ, …, ζ^{φ(N)-1}`.
//!
//! That basis spans `Z[ζ_N]`, the full ring of integers, so an element is an
//! algebraic integer iff its canonical coefficients are integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::cyclotomic_poly;
use crate::error::{Error, Result};

/// Reduction data for one conductor: `Φ_N` and every power `ζ^k`, `k < N`,
/// written in the power basis.
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    conductor: usize,
    powers: Vec<Vec<i64>>,
}

/// An element of `Q(ζ_N)`: integer numerators over a shared positive
/// denominator, with `gcd(numerators, denominator) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    conductor: usize,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicField {
    pub fn new(conductor: usize) -> Result<Self> {
        let phi_poly = cyclotomic_poly(conductor)?;
        let modulus: Vec<i64> = phi_poly
            .coeffs()
            .iter()
            .map(|c| c.to_i64().ok_or_else(|| Error::Index(format!("Φ_{conductor} has a huge coefficient"))))
            .collect::<Result<_>>()?;
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(conductor);
        let mut v = vec![0i64; phi];
        v[0] = 1;
        for _ in 0..conductor {
            powers.push(v.clone());
            // multiply by ζ, then fold ζ^φ = -Σ modulus[i] ζ^i
            let top = v[phi - 1];
            v.rotate_right(1);
            v[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    v[i] = modulus[i]
                        .checked_mul(top)
                        .and_then(|t| v[i].checked_sub(t))
                        .ok_or_else(|| Error::Index(format!("power table overflow for conductor {conductor}")))?;
                }
            }
        }
        Ok(CyclotomicField { conductor, powers })
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// `φ(N)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.powers[0].len()
    }

    pub fn zero(&self) -> CyclotomicNumber {
        self.integer(BigInt::zero())
    }

    pub fn integer(&self, c: BigInt) -> CyclotomicNumber {
        let mut num = vec![BigInt::zero(); self.degree()];
        num[0] = c;
        CyclotomicNumber { conductor: self.conductor, num, den: BigInt::one() }
    }

    /// `ζ_N^k`.
    pub fn root_power(&self, k: i64) -> CyclotomicNumber {
        let k = k.rem_euclid(self.conductor as i64) as usize;
        CyclotomicNumber {
            conductor: self.conductor,
            num: self.powers[k].iter().map(|&c| BigInt::from(c)).collect(),
            den: BigInt::one(),
        }
    }

    /// Canonical form of `Σ acc[k] ζ^k / den`, where `acc` is indexed by
    /// exponent modulo `N`.
    pub fn from_exponents(&self, acc: &[BigInt], den: &BigInt) -> Result<CyclotomicNumber> {
        if acc.len() != self.conductor {
            return Err(Error::Index(format!("{} exponents for conductor {}", acc.len(), self.conductor)));
        }
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        let mut num = vec![BigInt::zero(); self.degree()];
        for (a, row) in acc.iter().zip(&self.powers) {
            if a.is_zero() {
                continue;
            }
            for (n, &c) in num.iter_mut().zip(row) {
                if c != 0 {
                    *n += a * c;
                }
            }
        }
        Ok(CyclotomicNumber::normalized(self.conductor, num, den.clone()))
    }

    /// `Σ (num/den) ζ^exp` from `(exp, num, den)` triples.
    pub fn from_terms(&self, terms: &[(i64, BigInt, BigInt)]) -> Result<CyclotomicNumber> {
        let mut den = BigInt::one();
        for (_, _, d) in terms {
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            den = den.lcm(d);
        }
        let mut acc = vec![BigInt::zero(); self.conductor];
        for (e, n, d) in terms {
            let k = e.rem_euclid(self.conductor as i64) as usize;
            acc[k] += n * (&den / d);
        }
        self.from_exponents(&acc, &den)
    }

    /// Spreads a canonical element back over exponents `0..φ(N)`.
    fn to_exponents(&self, x: &CyclotomicNumber) -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); self.conductor];
        for (a, c) in acc.iter_mut().zip(&x.num) {
            *a = c.clone();
        }
        acc
    }

    /// Complex conjugate: `ζ ↦ ζ^{-1}`.
    pub fn conj(&self, x: &CyclotomicNumber) -> Result<CyclotomicNumber> {
        let n = self.conductor;
        let mut acc = vec![BigInt::zero(); n];
        for (i, c) in x.num.iter().enumerate() {
            acc[(n - i) % n] += c;
        }
        self.from_exponents(&acc, &x.den)
    }

    pub fn add(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        let den = a.den.lcm(&b.den);
        let (fa, fb) = (&den / &a.den, &den / &b.den);
        let num = a.num.iter().zip(&b.num).map(|(x, y)| x * &fa + y * &fb).collect();
        CyclotomicNumber::normalized(self.conductor, num, den)
    }

    pub fn mul(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> Result<CyclotomicNumber> {
        let n = self.conductor;
        let mut acc = vec![BigInt::zero(); n];
        for (i, x) in a.num.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.num.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                acc[(i + j) % n] += x * y;
            }
        }
        self.from_exponents(&acc, &(&a.den * &b.den))
    }

    /// Exponent-domain accumulator for `Σ w · x · conj(x)`, reduced once at
    /// the end. Used for row norms, where reducing every product is wasteful.
    pub fn accumulate_norm(&self, acc: &mut [BigInt], weight: &BigInt, x: &CyclotomicNumber) {
        let n = self.conductor;
        let xs = self.to_exponents(x);
        let support: Vec<(usize, &BigInt)> = xs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for &(i, a) in &support {
            let wa = weight * a;
            for &(j, b) in &support {
                acc[(i + n - j) % n] += &wa * b;
            }
        }
    }
}

impl CyclotomicNumber {
    fn normalized(conductor: usize, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -&*c);
        }
        let g = num.iter().fold(den.clone(), |g, c| g.gcd(c));
        if !g.is_one() && !g.is_zero() {
            num.iter_mut().for_each(|c| *c /= &g);
            den /= &g;
        }
        if num.iter().all(Zero::is_zero) {
            den = BigInt::one();
        }
        CyclotomicNumber { conductor, num, den }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// Power-basis numerators.
    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.is_integral()).then(|| self.num[0].clone())
    }

    /// `self · num / den`.
    pub fn scale(&self, num: &BigInt, den: &BigInt) -> CyclotomicNumber {
        let v = self.num.iter().map(|c| c * num).collect();
        CyclotomicNumber::normalized(self.conductor, v, &self.den * den)
    }
}
