//! Distribution of unipotent labels into `p`-blocks and searches for a
//! character of `q`-divisible degree in the principal block.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{order_factorization, p_valuation, LieParams, Series};
use crate::error::{Error, Result};
use crate::label::{labels_cached, Label, UnipotentLabel};
use crate::partitions::{self, lemma24_witness_named, Partition};
use crate::symbols::{self, table2_lift, Table2Column};

/// Core or cocore that decides the `p`-block, or `None` when every label is
/// in the principal block (`p = 2`).
pub fn block_key(label: &Label, params: &LieParams) -> Option<Label> {
    if params.p == 2 {
        return None;
    }
    Some(reduce_by(label, params.e_p, params.p_uses_cores()))
}

fn reduce_by(label: &Label, e: usize, cores: bool) -> Label {
    match label {
        Label::Partition(p) => Label::Partition(partitions::e_core(p, e)),
        Label::Symbol(s) if cores => Label::Symbol(symbols::e_core_symbol(s, e)),
        Label::Symbol(s) => Label::Symbol(symbols::e_cocore_symbol(s, e)),
    }
}

fn check_label(label: &Label, params: &LieParams) -> Result<()> {
    label.check_series(params.series)?;
    if label.rank() != params.n {
        return Err(Error::RankMismatch { expected: params.n, actual: label.rank() });
    }
    Ok(())
}

/// True when the two labels lie in the same `p`-block.
pub fn same_block(a: &Label, b: &Label, params: &LieParams) -> Result<bool> {
    check_label(a, params)?;
    check_label(b, params)?;
    Ok(block_key(a, params) == block_key(b, params))
}

pub fn in_principal_block(label: &Label, params: &LieParams) -> Result<bool> {
    let trivial = Label::trivial(params.series, params.n)?;
    same_block(label, &trivial, params)
}

/// Unipotent labels of the principal `p`-block.
pub fn principal_block_labels(params: &LieParams) -> Result<Vec<UnipotentLabel>> {
    let trivial = Label::trivial(params.series, params.n)?;
    let key = block_key(&trivial, params);
    Ok(labels_cached(params.series, params.n)?
        .iter()
        .filter(|l| block_key(l.label(), params) == key)
        .cloned()
        .collect())
}

/// Rank of the `e_q`-core (cocore when `ε_q = -1`).
pub fn q_core_rank(label: &Label, params: &LieParams) -> usize {
    reduce_by(label, params.e_q, params.q_uses_cores()).rank()
}

/// True when the `e_q`-core (or cocore) has rank other than `m`. The
/// character then lies outside the Harish-Chandra series of the Sylow
/// torus centralizer and `q` divides its degree. The converse fails.
pub fn hc_rank_criterion(label: &Label, params: &LieParams) -> bool {
    q_core_rank(label, params) != params.m
}

/// Rank of a Sylow `Φ_{d_q}`-torus: the exponent of `Φ_{d_q}` in the order
/// polynomial. This is `w` for the linear series and for B/C, but for
/// SO± it can drop to `w - 1` (e.g. SO+ with `ε_q = -1`, `m = 0`, `w` odd).
pub fn sylow_torus_rank(params: &LieParams) -> usize {
    if params.series.is_linear() {
        return params.w;
    }
    order_factorization(params.series, params.n).phi_exponent(params.d_q as usize).max(0) as usize
}

/// Rank of the torus centralizer's semisimple part, `n - e_q · torus rank`.
/// Equals `m` except in the SO± corners above.
pub fn effective_m(params: &LieParams) -> usize {
    params.n - params.e_q * sylow_torus_rank(params)
}

/// [`hc_rank_criterion`] measured against [`effective_m`] instead of `m`.
pub fn hc_torus_criterion(label: &Label, params: &LieParams) -> bool {
    q_core_rank(label, params) != effective_m(params)
}

/// Labels (over the whole label set, not only the principal block) where
/// [`hc_rank_criterion`] holds but `q` does not divide the degree. Always
/// empty if the criterion is sound.
pub fn hc_violations(params: &LieParams) -> Result<Vec<Label>> {
    violations_of(params, hc_rank_criterion)
}

/// As [`hc_violations`], for [`hc_torus_criterion`].
pub fn hc_torus_violations(params: &LieParams) -> Result<Vec<Label>> {
    violations_of(params, hc_torus_criterion)
}

fn violations_of(params: &LieParams, criterion: fn(&Label, &LieParams) -> bool) -> Result<Vec<Label>> {
    let q = BigUint::from(params.q);
    let mut out = Vec::new();
    for l in labels_cached(params.series, params.n)?.iter() {
        if criterion(l.label(), params) && !(l.degree_value(params.r)? % &q).is_zero() {
            out.push(l.label().clone());
        }
    }
    Ok(out)
}

/// Which lemma covers a parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coverage {
    /// Linear or unitary, `e_p ∈ {1, 2} < e_q`.
    Lemma24,
    /// `e_p | e_q`, `e_p ≠ e_q`, matching signs, `p | r^{e_q} - ε_q`.
    Lemma25,
    /// The excluded pairs `(n, e_q) = (3, 3), (4, 2)`.
    Excluded,
    #[serde(rename = "outside lemma hypotheses")]
    Outside,
}

impl Coverage {
    pub fn of(params: &LieParams) -> Coverage {
        let &LieParams { series, n, e_p, e_q, .. } = params;
        if series.is_linear() && n >= 3 && e_p <= 2 && e_q > e_p {
            if (n, e_q) == (3, 3) || (n, e_q) == (4, 2) {
                return Coverage::Excluded;
            }
            return Coverage::Lemma24;
        }
        let min_rank = match series {
            Series::A | Series::TwistedA => 5,
            Series::C => 2,
            Series::B => 3,
            Series::D | Series::TwistedD => 4,
        };
        if n < min_rank || e_q % e_p != 0 || e_q == e_p || params.eps_p != params.eps_q {
            return Coverage::Outside;
        }
        // p | R^{e_q} - ε_q, with R = εr for the linear series
        let base = if series.is_linear() { series.eps().value() * params.r as i64 } else { params.r as i64 };
        let eps_q = params.eps_q.map_or(1, |s| s.value());
        let p = params.p as i128;
        let mut acc: i128 = 1;
        for _ in 0..e_q {
            acc = (acc * base as i128).rem_euclid(p);
        }
        if (acc - eps_q as i128).rem_euclid(p) != 0 {
            return Coverage::Outside;
        }
        Coverage::Lemma25
    }

    pub fn in_hypotheses(self) -> bool {
        matches!(self, Coverage::Lemma24 | Coverage::Lemma25)
    }
}

/// How a witness was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    ExplicitConstruction,
    BruteForce,
}

/// One witness with every check recomputed from scratch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckedWitness {
    pub label: Label,
    pub construction: String,
    pub degree_value: String,
    pub q_valuation: u32,
    pub in_principal_block: bool,
    pub hc_criterion: bool,
}

impl CheckedWitness {
    pub fn new(label: Label, construction: impl Into<String>, params: &LieParams) -> Result<Self> {
        let degree = label.degree_value(params.series, params.r)?;
        Ok(CheckedWitness {
            q_valuation: p_valuation(&degree, params.q),
            degree_value: degree.to_string(),
            in_principal_block: in_principal_block(&label, params)?,
            hc_criterion: hc_rank_criterion(&label, params),
            construction: construction.into(),
            label,
        })
    }

    pub fn verified(&self) -> bool {
        self.in_principal_block && self.q_valuation >= 1
    }
}

/// Result of the search at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub params: LieParams,
    pub coverage: Coverage,
    pub witness_label: Option<Label>,
    pub degree_value: Option<String>,
    pub q_valuation: Option<u32>,
    pub route: Option<Route>,
    pub verified: bool,
    pub explicit: Option<CheckedWitness>,
    /// Why the explicit construction produced nothing, when it did not.
    pub explicit_error: Option<String>,
    pub brute_force: Option<CheckedWitness>,
    /// Principal-block labels whose `e_q`-core (cocore) rank differs from `m`.
    pub core_rank_witnesses: usize,
    pub principal_block_size: usize,
    /// The two routes disagree: one found a verified witness and the other
    /// did not, or the explicit witness failed its checks.
    pub disagreement: bool,
}

fn explicit_witness(params: &LieParams, coverage: Coverage) -> Result<(Label, String)> {
    let &LieParams { series, n, e_p, e_q, .. } = params;
    match coverage {
        Coverage::Lemma24 => {
            let (name, p) = lemma24_witness_named(n, e_p, e_q)?;
            Ok((Label::Partition(p), format!("lemma24:{name}")))
        }
        Coverage::Lemma25 if series.is_linear() && e_p <= 2 && e_q > e_p => {
            let (name, p) = lemma24_witness_named(n, e_p, e_q)?;
            Ok((Label::Partition(p), format!("lemma24:{name}")))
        }
        Coverage::Lemma25 => {
            let cocore = !params.q_uses_cores();
            let lift = table2_lift(Table2Column::of_series(series), e_p, e_q, n, cocore)?;
            let mut name = format!("table2:{}:{}", lift.source, lift.construction);
            if let Some((shift, _)) = &lift.twist {
                name.push_str(&format!(":twist-shift-{shift}"));
            }
            Ok((lift.witness, name))
        }
        Coverage::Excluded | Coverage::Outside => {
            Err(Error::WitnessPrecondition("not covered by the lemmas".into()))
        }
    }
}

/// Search the principal `p`-block for a unipotent character of degree
/// divisible by `q`, by explicit construction (when a lemma applies) and by
/// scanning every label. Both routes are checked independently.
pub fn find_q_divisible_in_principal_block(params: &LieParams) -> Result<WitnessReport> {
    let coverage = Coverage::of(params);
    let all = labels_cached(params.series, params.n)?;
    let key = block_key(&Label::trivial(params.series, params.n)?, params);
    let block: Vec<&UnipotentLabel> = all.iter().filter(|l| block_key(l.label(), params) == key).collect();
    let q = BigUint::from(params.q);
    let mut brute = None;
    let mut core_rank_witnesses = 0;
    for l in block.iter().copied() {
        if hc_rank_criterion(l.label(), params) {
            core_rank_witnesses += 1;
        }
        if brute.is_none() && (l.degree_value(params.r)? % &q).is_zero() {
            brute = Some(CheckedWitness::new(l.label().clone(), "scan", params)?);
        }
    }
    let (explicit, explicit_error) = if coverage.in_hypotheses() {
        match explicit_witness(params, coverage) {
            Ok((label, name)) => (Some(CheckedWitness::new(label, name, params)?), None),
            Err(e) => (None, Some(e.to_string())),
        }
    } else {
        (None, None)
    };
    let explicit_ok = explicit.as_ref().is_some_and(CheckedWitness::verified);
    let brute_ok = brute.as_ref().is_some_and(CheckedWitness::verified);
    let disagreement = coverage.in_hypotheses() && explicit_ok != brute_ok
        || explicit.as_ref().is_some_and(|w| !w.verified());
    let (chosen, route) = match (&explicit, &brute) {
        (Some(w), _) if w.verified() => (Some(w), Some(Route::ExplicitConstruction)),
        (_, Some(w)) => (Some(w), Some(Route::BruteForce)),
        _ => (None, None),
    };
    Ok(WitnessReport {
        params: params.clone(),
        coverage,
        witness_label: chosen.map(|w| w.label.clone()),
        degree_value: chosen.map(|w| w.degree_value.clone()),
        q_valuation: chosen.map(|w| w.q_valuation),
        route,
        verified: chosen.is_some_and(CheckedWitness::verified),
        explicit,
        explicit_error,
        brute_force: brute,
        core_rank_witnesses,
        principal_block_size: block.len(),
        disagreement,
    })
}

/// First partition of `n` (in enumeration order) with `e_q`-core rank other
/// than `m` and, for `e_p = 2`, the principal 2-core.
pub fn lemma24_brute_force(n: usize, e_p: usize, e_q: usize) -> Result<Option<Partition>> {
    Ok(partitions::partitions(n).find(|l| partitions::lemma24_conditions(l, e_p, e_q)))
}

/// One `(n, e_p, e_q)` point of the linear/unitary check, independent of
/// `r`, `p` and `q`: the conclusion only depends on the core combinatorics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma24Point {
    pub n: usize,
    pub e_p: usize,
    pub e_q: usize,
    pub m: usize,
    pub excluded: bool,
    pub explicit: Option<Partition>,
    pub construction: Option<String>,
    /// The explicit partition re-checked from scratch.
    pub explicit_ok: bool,
    pub brute_force: Option<Partition>,
    /// Partitions of `n` whose `e_q`-core rank differs from `m`, ignoring
    /// the 2-core. Only counted at excluded points, where it must be zero.
    pub core_rank_count: Option<usize>,
    pub status: PointStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointStatus {
    /// Explicit and brute-force witnesses both found and verified.
    Verified,
    /// Excluded point with no partition meeting the core-rank criterion.
    ConfirmedEmpty,
    Failed,
}

impl PointStatus {
    pub fn passed(self) -> bool {
        self != PointStatus::Failed
    }
}

pub fn lemma24_point(n: usize, e_p: usize, e_q: usize) -> Result<Lemma24Point> {
    if !(1..=2).contains(&e_p) || e_q <= e_p || n < 1 {
        return Err(Error::WitnessPrecondition(format!("(n, e_p, e_q) = ({n}, {e_p}, {e_q})")));
    }
    let m = n % e_q;
    let excluded = (n, e_q) == (3, 3) || (n, e_q) == (4, 2);
    if excluded {
        let count = partitions::partitions(n).filter(|l| partitions::e_core(l, e_q).size() != m).count();
        return Ok(Lemma24Point {
            n,
            e_p,
            e_q,
            m,
            excluded,
            explicit: None,
            construction: None,
            explicit_ok: false,
            brute_force: lemma24_brute_force(n, e_p, e_q)?,
            core_rank_count: Some(count),
            status: if count == 0 { PointStatus::ConfirmedEmpty } else { PointStatus::Failed },
        });
    }
    let (explicit, construction) = match lemma24_witness_named(n, e_p, e_q) {
        Ok((name, p)) => (Some(p), Some(name.to_string())),
        Err(_) => (None, None),
    };
    let explicit_ok = explicit.as_ref().is_some_and(|l| l.size() == n && partitions::lemma24_conditions(l, e_p, e_q));
    let brute_force = lemma24_brute_force(n, e_p, e_q)?;
    let status = if explicit_ok && brute_force.is_some() { PointStatus::Verified } else { PointStatus::Failed };
    Ok(Lemma24Point {
        n,
        e_p,
        e_q,
        m,
        excluded,
        explicit,
        construction,
        explicit_ok,
        brute_force,
        core_rank_count: None,
        status,
    })
}

/// Every point with `n ≤ n_max`, `e_p ∈ {1, 2}`, `e_p < e_q ≤ n`, `n ≥ 3`.
pub fn lemma24_grid(n_max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 3..=n_max {
        for e_p in 1..=2 {
            for e_q in e_p + 1..=n {
                out.push((n, e_p, e_q));
            }
        }
    }
    out
}
