//! `F_{p^k}` as `F_p[x]/(g)` and the reduction `Z[ζ_N] → F_{p^k}` modulo a
//! prime ideal above `p`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::cyclotomic::CyclotomicNumber;
use crate::arith::{cyclotomic_poly, gcd, multiplicative_order, prime_divisors};
use crate::error::{Error, Result};

/// Polynomials over `F_p`, coefficients low to high, no trailing zeros.
type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime
    let mut r = 1u64;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let c = mulmod(*r.last().unwrap(), lead_inv, p);
        let shift = r.len() - 1 - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mulmod(c, mi, p)) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(out)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `a^(p^t) mod m` by repeated Frobenius.
fn frobenius_pow(a: &[u64], t: usize, m: &[u64], p: u64) -> Poly {
    let mut r = a.to_vec();
    for _ in 0..t {
        r = poly_pow(&r, &BigUint::from(p), m, p);
    }
    r
}

fn poly_pow(a: &[u64], e: &BigUint, m: &[u64], p: u64) -> Poly {
    let mut result = vec![1u64];
    let base = poly_rem(a, m, p);
    for i in (0..e.bits()).rev() {
        result = poly_rem(&poly_mul(&result, &result, p), m, p);
        if e.bit(i) {
            result = poly_rem(&poly_mul(&result, &base, p), m, p);
        }
    }
    result
}

/// Rabin's test for a monic `g` of degree `k ≥ 1`.
fn is_irreducible(g: &[u64], p: u64) -> bool {
    let k = g.len() - 1;
    let x = poly_rem(&[0, 1], g, p);
    if poly_sub(&frobenius_pow(&x, k, g, p), &x, p) != Vec::<u64>::new() {
        return false;
    }
    prime_divisors(k as u64).into_iter().all(|r| {
        let h = poly_sub(&frobenius_pow(&x, k / r as usize, g, p), &x, p);
        poly_gcd(&h, g, p).len() == 1
    })
}

/// Monic polynomial of degree `k` whose lower coefficients, read from
/// `x^{k-1}` down to `x^0`, are the base-`p` digits of `t`.
fn monic_from_index(mut t: u128, k: usize, p: u64) -> Poly {
    let mut c = vec![0u64; k + 1];
    c[k] = 1;
    for i in 0..k {
        c[i] = (t % p as u128) as u64;
        t /= p as u128;
    }
    c
}

/// `F_{p^k} = F_p[x]/(g)` with `g` the lexicographically first monic
/// irreducible polynomial of degree `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    k: usize,
    modulus: Poly,
}

impl FiniteField {
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if !crate::arith::is_prime(p) || k == 0 {
            return Err(Error::InvalidParams(format!("no field of order {p}^{k}")));
        }
        let mut t = 0u128;
        loop {
            let g = monic_from_index(t, k, p);
            if is_irreducible(&g, p) {
                return Ok(FiniteField { p, k, modulus: g });
            }
            t += 1;
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.p).pow(self.k as u32)
    }

    pub fn one(&self) -> Poly {
        vec![1]
    }

    pub fn from_int(&self, c: &BigInt) -> Poly {
        trim(vec![c.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()])
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Poly {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p;
        }
        trim(out)
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Poly {
        poly_rem(&poly_mul(a, b, self.p), &self.modulus, self.p)
    }

    pub fn pow(&self, a: &[u64], e: &BigUint) -> Poly {
        poly_pow(a, e, &self.modulus, self.p)
    }

    pub fn scale(&self, a: &[u64], c: u64) -> Poly {
        trim(a.iter().map(|&x| mulmod(x, c, self.p)).collect())
    }

    /// Elements in a fixed enumeration order, zero excluded.
    fn element(&self, t: u128) -> Poly {
        let mut c = vec![0u64; self.k];
        let mut t = t;
        for ci in c.iter_mut() {
            *ci = (t % self.p as u128) as u64;
            t /= self.p as u128;
        }
        trim(c)
    }

    /// First element (in enumeration order) of exact multiplicative order `n`.
    /// `n` must divide `p^k - 1`.
    pub fn element_of_order(&self, n: u64) -> Result<Poly> {
        let order = self.order() - BigUint::one();
        if !(&order % n).is_zero() {
            return Err(Error::InvalidParams(format!("{n} does not divide |F*|")));
        }
        let cof = &order / n;
        let primes = prime_divisors(n);
        let mut t = 1u128;
        loop {
            let b = self.pow(&self.element(t), &cof);
            if !b.is_empty() && primes.iter().all(|&r| self.pow(&b, &BigUint::from(n / r)) != self.one()) {
                return Ok(b);
            }
            t += 1;
        }
    }
}

/// Which prime ideal above `p` to reduce modulo.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealChoice {
    /// Root of the lexicographically first irreducible factor of `Φ_{N'}` mod `p`.
    Smallest,
    /// Root of the second factor; falls back to the first when there is one.
    SecondSmallest,
}

/// The homomorphism `Z[ζ_N] → F_{p^k}`, `ζ_N ↦ θ`, with `θ` a primitive
/// `N'`-th root of unity (`N'` the `p'`-part of `N`). The `p`-power part of
/// `ζ_N` goes to 1 because `Φ_N ≡ Φ_{N'}^{φ(p^s)}` mod `p`.
#[derive(Debug, Clone)]
pub struct ReductionMap {
    conductor: usize,
    p: u64,
    n_prime: u64,
    field: FiniteField,
    factors: Vec<Poly>,
    factor_index: usize,
    /// `θ^i` for `i < N`.
    theta_powers: Vec<Poly>,
}

impl ReductionMap {
    pub fn new(conductor: usize, p: u64, choice: IdealChoice) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::ZeroCyclotomicIndex);
        }
        let mut n_prime = conductor as u64;
        while n_prime % p == 0 {
            n_prime /= p;
        }
        let k = if n_prime == 1 { 1 } else { multiplicative_order(p as i64, n_prime)? as usize };
        let field = FiniteField::new(p, k)?;
        let theta0 = field.element_of_order(n_prime)?;

        // one root per Frobenius orbit; its minimal polynomial is an
        // irreducible factor of Φ_{N'} mod p
        let mut seen = vec![false; n_prime as usize];
        let mut factors: Vec<(Poly, u64)> = Vec::new();
        for j in 0..n_prime.max(1) {
            if gcd(j, n_prime) != 1 && n_prime > 1 || seen[j as usize] {
                continue;
            }
            let mut roots = Vec::new();
            let mut e = j;
            for _ in 0..k {
                seen[e as usize] = true;
                roots.push(field.pow(&theta0, &BigUint::from(e)));
                e = (e * p) % n_prime;
            }
            factors.push((minimal_polynomial(&field, &roots)?, j));
        }
        // lexicographic on coefficients from x^{k-1} down to x^0
        factors.sort_by(|a, b| a.0.iter().rev().cmp(b.0.iter().rev()));
        debug_assert!(check_factorization(n_prime, p, &factors));
        let factor_index = match choice {
            IdealChoice::Smallest => 0,
            IdealChoice::SecondSmallest => 1.min(factors.len() - 1),
        };
        let theta = field.pow(&theta0, &BigUint::from(factors[factor_index].1));
        let mut theta_powers = Vec::with_capacity(conductor);
        let mut acc = field.one();
        for _ in 0..conductor {
            theta_powers.push(acc.clone());
            acc = field.mul(&acc, &theta);
        }
        Ok(ReductionMap {
            conductor,
            p,
            n_prime,
            field,
            factors: factors.into_iter().map(|f| f.0).collect(),
            factor_index,
            theta_powers,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// `p'`-part of the conductor.
    pub fn n_prime(&self) -> u64 {
        self.n_prime
    }

    /// Irreducible factors of `Φ_{N'}` mod `p`, sorted.
    pub fn factors(&self) -> &[Vec<u64>] {
        &self.factors
    }

    pub fn chosen_factor(&self) -> &[u64] {
        &self.factors[self.factor_index]
    }

    pub fn reduce_integer(&self, c: &BigInt) -> Vec<u64> {
        self.field.from_int(c)
    }

    /// Image of an algebraic integer. Elements whose denominator is prime to
    /// `p` are accepted as well.
    pub fn reduce(&self, x: &CyclotomicNumber) -> Result<Vec<u64>> {
        if x.conductor() != self.conductor {
            return Err(Error::Index(format!("conductor {} vs {}", x.conductor(), self.conductor)));
        }
        let p = BigInt::from(self.p);
        let den = self.field.from_int(&(x.denominator() % &p));
        if den.is_empty() {
            return Err(Error::InvalidParams(format!("{} divides a denominator", self.p)));
        }
        let den_inv = inv_mod(den[0], self.p);
        let mut out = Vec::new();
        for (c, tp) in x.numerators().iter().zip(&self.theta_powers) {
            let c = self.field.from_int(c);
            if let Some(&c) = c.first() {
                out = self.field.add(&out, &self.field.scale(tp, c));
            }
        }
        Ok(self.field.scale(&out, den_inv))
    }
}

/// `∏ (X - root)` over the field, which must land in `F_p[X]`.
fn minimal_polynomial(field: &FiniteField, roots: &[Poly]) -> Result<Poly> {
    // coefficients in F_{p^k}, low to high
    let mut acc: Vec<Poly> = vec![field.one()];
    for r in roots {
        let neg_r = field.scale(r, field.p - 1);
        let mut next = vec![Vec::new(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] = field.add(&next[i + 1], c);
            next[i] = field.add(&next[i], &field.mul(c, &neg_r));
        }
        acc = next;
    }
    acc.into_iter()
        .map(|c| match c.len() {
            0 => Ok(0),
            1 => Ok(c[0]),
            _ => Err(Error::InvalidParams("minimal polynomial is not over the prime field".into())),
        })
        .collect()
}

fn check_factorization(n_prime: u64, p: u64, factors: &[(Poly, u64)]) -> bool {
    let phi = cyclotomic_poly(n_prime as usize).unwrap();
    let target: Poly = trim(
        phi.coeffs()
            .iter()
            .map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap())
            .collect(),
    );
    let prod = factors.iter().fold(vec![1u64], |a, f| poly_mul(&a, &f.0, p));
    prod == target
}
