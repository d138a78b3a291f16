//! Partitions, β-sets and the abacus.
//!
//! Partitions are stored with parts in weakly decreasing order. A β-set of
//! length `t` is `{λ_i + t - i}`; removing an `e`-hook from `λ` is the same as
//! sliding one bead up a runner of the `e`-abacus, which is how cores and
//! quotients are computed here.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::arith::{CyclotomicFactorization, GenericDegree, IntPolynomial, Sign};
use crate::error::{Error, Result};

/// Default bound for [`enumerate_partitions`].
pub const DEFAULT_PARTITION_BOUND: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Build from weakly increasing notation such as `(1^{m+1}, e_q - 1)`.
    pub fn from_increasing(parts: &[usize]) -> Result<Self> {
        let mut v = parts.to_vec();
        v.reverse();
        Self::new(v)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `(k, k-1, ..., 1)`
    pub fn staircase(k: usize) -> Self {
        Partition { parts: (1..=k).rev().collect() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts in weakly increasing order.
    pub fn increasing(&self) -> Vec<usize> {
        self.parts.iter().rev().copied().collect()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..cols).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect(),
        }
    }

    pub fn beta_set(&self, t: usize) -> Result<BetaSet> {
        if t < self.len() {
            return Err(Error::BetaSetTooShort { length: t, parts: self.len() });
        }
        let entries = (0..t)
            .map(|i| self.parts.get(i).copied().unwrap_or(0) + t - 1 - i)
            .collect();
        Ok(BetaSet { entries })
    }

    /// `n(λ) = Σ (i-1) λ_i`
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[6,1]`, `[3,1^7]` and `[]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: '{s}'")))?;
        let mut parts = Vec::new();
        for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (tok, "1"),
            };
            let base: usize = base.parse().map_err(|_| Error::Parse(format!("bad part '{tok}'")))?;
            let exp: usize = exp.parse().map_err(|_| Error::Parse(format!("bad exponent '{tok}'")))?;
            parts.extend(std::iter::repeat(base).take(exp));
        }
        Partition::new(parts)
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Set of distinct non-negative integers, stored in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    pub fn new(mut entries: Vec<usize>) -> Result<Self> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition("β-set entries must be distinct".into()));
        }
        Ok(BetaSet { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.entries.contains(&x)
    }

    /// Insert 0 and add `k` to everything, `k` times over.
    pub fn shifted(&self, k: usize) -> BetaSet {
        let mut entries: Vec<usize> = self.entries.iter().map(|x| x + k).collect();
        entries.extend((0..k).rev());
        BetaSet { entries }
    }

    pub fn to_partition(&self) -> Partition {
        let t = self.entries.len();
        Partition::from_unsorted(
            self.entries.iter().enumerate().map(|(i, &b)| b - (t - 1 - i)).collect(),
        )
    }

    /// Entries `x` with `x >= e` and `x - e` absent: the removable `e`-hooks.
    pub fn removable(&self, e: usize) -> Vec<usize> {
        self.entries
            .iter()
            .copied()
            .filter(|&x| x >= e && !self.contains(x - e))
            .collect()
    }

    /// Replace `x` by `x - e`. The caller must pass a removable entry.
    pub fn slide(&self, x: usize, e: usize) -> BetaSet {
        debug_assert!(x >= e && self.contains(x) && !self.contains(x - e));
        let mut entries: Vec<usize> = self.entries.iter().map(|&y| if y == x { x - e } else { y }).collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        BetaSet { entries }
    }

    /// Push every bead to the top of its runner on the `e`-abacus. Returns the
    /// core β-set (same length) and the number of `e`-hooks removed.
    pub fn core(&self, e: usize) -> (BetaSet, usize) {
        assert!(e >= 1, "hook length must be positive");
        let mut counts = vec![0usize; e];
        for &x in &self.entries {
            counts[x % e] += 1;
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for (i, &c) in counts.iter().enumerate() {
            entries.extend((0..c).map(|k| i + k * e));
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        let before: usize = self.entries.iter().sum();
        let after: usize = entries.iter().sum();
        (BetaSet { entries }, (before - after) / e)
    }

    /// Beads on each runner `0..e`, read as β-sets of their level numbers.
    pub fn runners(&self, e: usize) -> Vec<BetaSet> {
        let mut out = vec![Vec::new(); e];
        for &x in &self.entries {
            out[x % e].push(x / e);
        }
        out.into_iter().map(|v| BetaSet::new(v).expect("levels are distinct")).collect()
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

fn normalized_beta(lambda: &Partition) -> BetaSet {
    lambda.beta_set(lambda.len()).expect("length equals number of parts")
}

/// The `e`-core of `λ` and its `e`-weight.
pub fn e_core_with_weight(lambda: &Partition, e: usize) -> (Partition, usize) {
    let (core, weight) = normalized_beta(lambda).core(e);
    (core.to_partition(), weight)
}

/// The `e`-core: what remains after removing `e`-hooks until none is left.
/// The result does not depend on the order of removals.
pub fn e_core(lambda: &Partition, e: usize) -> Partition {
    e_core_with_weight(lambda, e).0
}

pub fn is_e_core(lambda: &Partition, e: usize) -> bool {
    &e_core(lambda, e) == lambda
}

/// The `e`-quotient. Component `i` is read off runner `i` of the abacus of
/// the β-set whose length equals the number of parts of `λ`.
pub fn e_quotient(lambda: &Partition, e: usize) -> Vec<Partition> {
    assert!(e >= 1, "hook length must be positive");
    normalized_beta(lambda).runners(e).iter().map(BetaSet::to_partition).collect()
}

pub fn hook_lengths(lambda: &Partition) -> Vec<usize> {
    lambda.hook_lengths()
}

/// Unipotent degree of `GL_n(x)` labelled by `λ`, by exact polynomial
/// division: `x^{n(λ)} ∏_{k=1}^{n} (x^k - 1) / ∏_{h} (x^h - 1)`.
pub fn generic_degree_type_a(lambda: &Partition) -> Result<GenericDegree> {
    let n = lambda.size();
    let mut num = IntPolynomial::monomial(BigInt::from(1), lambda.n_statistic());
    for k in 1..=n {
        num = &num * &IntPolynomial::x_pow_minus_one(k);
    }
    let den = lambda
        .hook_lengths()
        .into_iter()
        .fold(IntPolynomial::one(), |acc, h| &acc * &IntPolynomial::x_pow_minus_one(h));
    Ok(GenericDegree::new(num.div_exact(&den)?, 0))
}

/// The same degree kept in factored form.
pub fn degree_factorization_type_a(lambda: &Partition) -> CyclotomicFactorization {
    let mut f = CyclotomicFactorization::new();
    f.mul_x_pow(lambda.n_statistic() as i64);
    for k in 1..=lambda.size() {
        f.mul_x_pow_minus_one(k, 1);
    }
    for h in lambda.hook_lengths() {
        f.mul_x_pow_minus_one(h, -1);
    }
    f
}

/// Degree of the unipotent character of `GL_n(εr)` labelled by `λ`. For
/// `ε = -1` the generic degree is evaluated at `-r` and the sign dropped.
pub fn degree_value_type_a(lambda: &Partition, eps: Sign, r: u64) -> Result<BigUint> {
    let x = BigInt::from(eps.value()) * BigInt::from(r);
    let v = degree_factorization_type_a(lambda).evaluate(&x)?;
    Ok(v.magnitude().clone())
}

/// Partitions of `n` in reverse lexicographic order, starting with `(n)`.
pub struct Partitions {
    current: Option<Vec<usize>>,
}

pub fn partitions(n: usize) -> Partitions {
    Partitions { current: Some(if n == 0 { Vec::new() } else { vec![n] }) }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { parts: cur.clone() };
        // Next in reverse lexicographic order: lower the last part > 1 and
        // refill the tail greedily.
        if let Some(k) = cur.iter().rposition(|&p| p > 1) {
            let mut next = cur[..k].to_vec();
            let v = cur[k] - 1;
            let mut rest: usize = cur[k + 1..].iter().sum::<usize>() + 1;
            next.push(v);
            while rest > 0 {
                let take = rest.min(v);
                next.push(take);
                rest -= take;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

pub fn enumerate_partitions(n: usize, bound: usize) -> Result<Vec<Partition>> {
    if n > bound {
        return Err(Error::BoundExceeded { requested: n, bound });
    }
    Ok(partitions(n).collect())
}

/// Witness conditions used for `GL_n(εr)` with `e_p ∈ {1, 2}`: the
/// `e_q`-core has rank other than `m = n mod e_q`, and for `e_p = 2` the
/// 2-core equals that of `(n)`.
pub fn lemma24_conditions(lambda: &Partition, e_p: usize, e_q: usize) -> bool {
    let n = lambda.size();
    if e_core(lambda, e_q).size() == n % e_q {
        return false;
    }
    e_p != 2 || e_core(lambda, 2) == Partition::staircase(n % 2)
}

/// Explicit constructions in precedence order, each tagged with a short
/// name. Only candidates whose construction applies are returned; none are
/// verified here.
pub fn lemma24_candidates(n: usize, e_q: usize) -> Vec<(&'static str, Partition)> {
    let (w, m) = (n / e_q, n % e_q);
    let mut out = Vec::new();
    let hook = |arm: usize, legs: usize| {
        let mut v = vec![arm];
        v.extend(std::iter::repeat(1).take(legs));
        Partition::from_unsorted(v)
    };
    if e_q == 2 {
        if n % 2 == 1 {
            out.push(("(1,n-1)", hook(n - 1, 1)));
        } else if n >= 6 {
            out.push(("(1,2,n-3)", Partition::from_unsorted(vec![n - 3, 2, 1])));
        }
    }
    if e_q == 3 && m == 2 {
        out.push(("(1,1,n-2)", hook(n - 2, 2)));
    }
    if e_q == 3 && m == 0 && n >= 6 {
        out.push(("(2,n-2)", Partition::from_unsorted(vec![n - 2, 2])));
    }
    if e_q >= 3 && m != 0 && m != e_q - 1 {
        out.push(("lambda_1", hook(e_q - 1, e_q * (w - 1) + m + 1)));
        out.push(("lambda_2", hook(e_q - 1 + e_q * (w - 1), m + 1)));
    }
    if e_q >= 4 && m != 1 && m != e_q - 2 {
        let mut v = vec![e_q - 2 + e_q * (w - 1), 2];
        v.extend(std::iter::repeat(1).take(m));
        out.push(("lambda_3", Partition::from_unsorted(v)));
    }
    out
}

/// A partition of `n` whose unipotent character of `GL_n(εr)` lies in the
/// principal `p`-block and has degree divisible by `q`, when
/// `e_p = d_p(εr) ∈ {1, 2}` and `e_q = d_q(εr) > e_p`.
pub fn lemma24_witness(n: usize, e_p: usize, e_q: usize) -> Result<Partition> {
    lemma24_witness_named(n, e_p, e_q).map(|(_, p)| p)
}

/// Like [`lemma24_witness`], also naming the construction that was used.
pub fn lemma24_witness_named(n: usize, e_p: usize, e_q: usize) -> Result<(&'static str, Partition)> {
    if (n, e_q) == (3, 3) || (n, e_q) == (4, 2) {
        return Err(Error::ExcludedPair { n, e_q });
    }
    if !(1..=2).contains(&e_p) || e_q <= e_p || e_q > n || n < 3 {
        return Err(Error::WitnessPrecondition(format!(
            "need n >= 3, e_p in {{1,2}} and e_p < e_q <= n; got n = {n}, e_p = {e_p}, e_q = {e_q}"
        )));
    }
    lemma24_candidates(n, e_q)
        .into_iter()
        .find(|(_, lambda)| lambda.size() == n && lemma24_conditions(lambda, e_p, e_q))
        .ok_or_else(|| Error::ConstructionFailed(format!("n = {n}, e_p = {e_p}, e_q = {e_q}")))
}
