use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{d_param, gcd, is_prime, multiplicative_order, prime_power, CyclotomicFactorization, IntPolynomial};
use crate::error::{Error, Result};

/// Series of a finite classical group. `TwistedA` is `GU_n`, `D` is
/// `SO^+_{2n}` and `TwistedD` is `SO^-_{2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "2A")]
    TwistedA,
    #[serde(rename = "B")]
    B,
    #[serde(rename = "C")]
    C,
    #[serde(rename = "D")]
    D,
    #[serde(rename = "2D")]
    TwistedD,
}

impl Series {
    pub const ALL: [Series; 6] = [Series::A, Series::TwistedA, Series::B, Series::C, Series::D, Series::TwistedD];

    pub fn is_linear(self) -> bool {
        matches!(self, Series::A | Series::TwistedA)
    }

    pub fn is_classical(self) -> bool {
        !self.is_linear()
    }

    /// `ε` of `GL_n(εr)`; +1 for everything but `²A`.
    pub fn eps(self) -> Sign {
        if self == Series::TwistedA {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn group_name(self, n: usize, r: u64) -> String {
        match self {
            Series::A => format!("GL_{n}({r})"),
            Series::TwistedA => format!("GU_{n}({r})"),
            Series::B => format!("SO_{}({r})", 2 * n + 1),
            Series::C => format!("Sp_{}({r})", 2 * n),
            Series::D => format!("SO+_{}({r})", 2 * n),
            Series::TwistedD => format!("SO-_{}({r})", 2 * n),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::TwistedA => "2A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::TwistedD => "2D",
        };
        f.write_str(s)
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "GL" => Ok(Series::A),
            "2A" | "GU" => Ok(Series::TwistedA),
            "B" => Ok(Series::B),
            "C" | "Sp" => Ok(Series::C),
            "D" | "SO+" => Ok(Series::D),
            "2D" | "SO-" => Ok(Series::TwistedD),
            _ => Err(Error::Parse(format!("unknown series '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value() as i8
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(format!("sign must be +1 or -1, got {v}")),
        }
    }
}

/// Generic order of the group of the given series and rank, in factored form.
pub fn order_factorization(series: Series, n: usize) -> CyclotomicFactorization {
    let mut f = CyclotomicFactorization::new();
    match series {
        Series::A | Series::TwistedA => {
            f.mul_x_pow((n * n.saturating_sub(1) / 2) as i64);
            for i in 1..=n {
                if series == Series::TwistedA && i % 2 == 1 {
                    f.mul_x_pow_plus_one(i, 1);
                } else {
                    f.mul_x_pow_minus_one(i, 1);
                }
            }
        }
        Series::B | Series::C => {
            f.mul_x_pow((n * n) as i64);
            for i in 1..=n {
                f.mul_x_pow_minus_one(2 * i, 1);
            }
        }
        Series::D | Series::TwistedD => {
            f.mul_x_pow((n * n.saturating_sub(1)) as i64);
            if n > 0 {
                if series == Series::D {
                    f.mul_x_pow_minus_one(n, 1);
                } else {
                    f.mul_x_pow_plus_one(n, 1);
                }
            }
            for i in 1..n {
                f.mul_x_pow_minus_one(2 * i, 1);
            }
        }
    }
    f
}

pub fn order_polynomial(series: Series, n: usize) -> Result<IntPolynomial> {
    Ok(order_factorization(series, n).to_generic_degree()?.numerator().clone())
}

/// Parameter bundle for one group and one pair of primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieParams {
    pub series: Series,
    pub n: usize,
    pub r: u64,
    pub p: u64,
    pub q: u64,
    pub d_p: u64,
    pub d_q: u64,
    pub e_p: usize,
    pub e_q: usize,
    pub eps_p: Option<Sign>,
    pub eps_q: Option<Sign>,
    pub m: usize,
    pub w: usize,
    pub m1: usize,
    pub w1: usize,
}

/// `(e, ε)` for a classical group: `e = d_ℓ(r²)` and `ℓ | r^e - ε`.
/// With `d = d_ℓ(r)`, `e = d` and `ε = +1` when `d` is odd, and `e = d/2`,
/// `ε = -1` when `d` is even. For `ℓ = 2` this picks `ε` from `r mod 4`.
fn classical_e(ell: u64, r: u64) -> Result<(usize, Sign)> {
    let d = d_param(ell, r as i64)?;
    let (e, eps) = if d % 2 == 1 { (d, Sign::Plus) } else { (d / 2, Sign::Minus) };
    debug_assert_eq!(e, d_param(ell, (r as i64) * (r as i64))?);
    Ok((e as usize, eps))
}

impl LieParams {
    pub fn new(series: Series, n: usize, r: u64, p: u64, q: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("rank must be positive".into()));
        }
        if prime_power(r).is_none() {
            return Err(Error::NotPrimePower(r));
        }
        for ell in [p, q] {
            if !is_prime(ell) {
                return Err(Error::NotPrime(ell));
            }
            if gcd(ell, r) != 1 {
                return Err(Error::InvalidParams(format!("{ell} divides r = {r}")));
            }
        }
        if p == q {
            return Err(Error::InvalidParams("p and q must be distinct".into()));
        }
        let order = order_factorization(series, n);
        for ell in [p, q] {
            // ℓ divides |G(r)| iff Φ_d does, d the order of r modulo ℓ (d = 1 for ℓ = 2).
            let d = if ell == 2 { 1 } else { multiplicative_order(r as i64, ell)? as usize };
            if order.phi_exponent(d) <= 0 {
                return Err(Error::InvalidParams(format!(
                    "{ell} does not divide |{}|",
                    series.group_name(n, r)
                )));
            }
        }
        let d_p = d_param(p, r as i64)?;
        let d_q = d_param(q, r as i64)?;
        let (e_p, e_q, eps_p, eps_q) = if series.is_linear() {
            let er = series.eps().value() * r as i64;
            (d_param(p, er)? as usize, d_param(q, er)? as usize, None, None)
        } else {
            let (ep, sp) = classical_e(p, r)?;
            let (eq, sq) = classical_e(q, r)?;
            (ep, eq, Some(sp), Some(sq))
        };
        let (w, m) = (n / e_q, n % e_q);
        let (w1, m1) = (m / e_p, m % e_p);
        Ok(LieParams { series, n, r, p, q, d_p, d_q, e_p, e_q, eps_p, eps_q, m, w, m1, w1 })
    }

    pub fn r_big(&self) -> BigInt {
        BigInt::from(self.r)
    }

    /// True when cores (rather than cocores) govern `p`-blocks.
    pub fn p_uses_cores(&self) -> bool {
        self.eps_p != Some(Sign::Minus)
    }

    pub fn q_uses_cores(&self) -> bool {
        self.eps_q != Some(Sign::Minus)
    }
}
