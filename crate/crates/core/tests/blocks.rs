mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;
use ublocks::arith::{is_prime, prime_power, LieParams, Series, Sign};
use ublocks::blocks::{
    find_q_divisible_in_principal_block, hc_rank_criterion, hc_torus_criterion, in_principal_block,
    principal_block_labels, same_block, Coverage,
};
use ublocks::label::{labels_cached, Label};

fn grid(rank_max: usize) -> Vec<LieParams> {
    let rs: Vec<u64> = (2..=9).filter(|&r| prime_power(r).is_some()).collect();
    let primes: Vec<u64> = (2..=13).filter(|&p| is_prime(p)).collect();
    let mut out = Vec::new();
    for series in Series::ALL {
        for n in 1..=rank_max {
            for &r in &rs {
                for &p in &primes {
                    for &q in &primes {
                        if let Ok(lp) = LieParams::new(series, n, r, p, q) {
                            out.push(lp);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Oracle key: the `e`-core (or cocore) by random-order removal.
fn oracle_key(label: &Label, e: usize, cores: bool) -> BTreeSet<Vec<usize>> {
    let mut rng = common::rng(5);
    match label {
        Label::Partition(p) => [common::random_core(p.parts(), e, &mut rng).0].into_iter().collect(),
        Label::Symbol(s) => {
            let raw = common::raw(s.top(), s.bottom());
            common::normal_form(&common::random_reduce(&raw, e, !cores, &mut rng).0)
        }
    }
}

fn oracle_degree(label: &Label, lp: &LieParams) -> BigUint {
    match label {
        Label::Partition(p) => {
            let x = lp.series.eps().value() * lp.r as i64;
            common::gl_degree(p.parts(), x)
        }
        Label::Symbol(s) => {
            let eps = match lp.series {
                Series::D => Some(1),
                Series::TwistedD => Some(-1),
                _ => None,
            };
            common::symbol_degree(&common::raw(s.top(), s.bottom()), lp.n, eps, lp.r)
        }
    }
}

fn q_divides(label: &Label, lp: &LieParams) -> bool {
    (oracle_degree(label, lp) % lp.q).is_zero()
}

/// `same_block` matches equality of oracle keys on every pair, which makes it
/// an equivalence relation.
#[test]
fn same_block_is_key_equality() {
    // r = 2, 3, 4, 5 with p = 3, 5, 7 covers e_p ∈ {1, 2, 3, 4, 6} and both signs
    for series in Series::ALL {
        let n_max = if series.is_linear() { 10 } else { 8 };
        for n in 1..=n_max {
            let labels = labels_cached(series, n).unwrap();
            for (r, p) in [(2, 3), (2, 5), (2, 7), (3, 5), (3, 7), (4, 3), (5, 3), (5, 7), (3, 2)] {
                let Ok(lp) = LieParams::new(series, n, r, p, if p == 7 { 5 } else { 7 }) else { continue };
                let cores = lp.p_uses_cores();
                let keys: Vec<_> = labels.iter().map(|l| oracle_key(l.label(), lp.e_p, cores)).collect();
                for (i, a) in labels.iter().enumerate() {
                    for (j, b) in labels.iter().enumerate() {
                        let expect = p == 2 || keys[i] == keys[j];
                        assert_eq!(
                            same_block(a.label(), b.label(), &lp).unwrap(),
                            expect,
                            "{series} n = {n} r = {r} p = {p}: {} vs {}",
                            a.label(),
                            b.label()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn trivial_label_in_principal_block() {
    for lp in grid(8) {
        let t = Label::trivial(lp.series, lp.n).unwrap();
        assert!(in_principal_block(&t, &lp).unwrap());
        assert!(principal_block_labels(&lp).unwrap().iter().any(|l| *l.label() == t));
    }
}

#[test]
fn p_two_takes_every_label() {
    for lp in grid(8).into_iter().filter(|lp| lp.p == 2) {
        let all = labels_cached(lp.series, lp.n).unwrap();
        assert_eq!(principal_block_labels(&lp).unwrap().len(), all.len());
    }
}

fn criterion_counterexamples(criterion: fn(&Label, &LieParams) -> bool) -> Vec<String> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for lp in grid(8) {
        // the criterion only depends on (series, n, r, q)
        if !seen.insert((lp.series, lp.n, lp.r, lp.q)) {
            continue;
        }
        for l in labels_cached(lp.series, lp.n).unwrap().iter() {
            if criterion(l.label(), &lp) && !q_divides(l.label(), &lp) {
                out.push(format!("{} n = {} r = {} q = {}: {}", lp.series, lp.n, lp.r, lp.q, l.label()));
            }
        }
    }
    out
}

/// Core or cocore rank `≠ m` forces `q | degree`.
#[test]
fn hc_rank_criterion_implies_divisibility() {
    let bad = criterion_counterexamples(hc_rank_criterion);
    assert!(bad.is_empty(), "{} counterexamples, first: {:?}", bad.len(), &bad[..bad.len().min(5)]);
}

/// The same implication against the Sylow torus rank read off the order
/// polynomial.
#[test]
fn hc_torus_criterion_implies_divisibility() {
    let bad = criterion_counterexamples(hc_torus_criterion);
    assert!(bad.is_empty(), "{} counterexamples, first: {:?}", bad.len(), &bad[..bad.len().min(5)]);
}

/// Whatever route found it, a reported witness is in the principal block
/// and has degree divisible by `q`, judged by the oracles.
#[test]
fn witnesses_survive_independent_checks() {
    for lp in grid(8) {
        let rep = find_q_divisible_in_principal_block(&lp).unwrap();
        let trivial = Label::trivial(lp.series, lp.n).unwrap();
        let cores = lp.p_uses_cores();
        for w in rep.explicit.iter().chain(&rep.brute_force) {
            if !w.verified() {
                continue;
            }
            assert!(q_divides(&w.label, &lp), "{lp:?}: {}", w.label);
            assert!(
                lp.p == 2 || oracle_key(&w.label, lp.e_p, cores) == oracle_key(&trivial, lp.e_p, cores),
                "{lp:?}: {}",
                w.label
            );
        }
        assert_eq!(rep.brute_force.is_some(), {
            let block = principal_block_labels(&lp).unwrap();
            block.iter().any(|l| q_divides(l.label(), &lp))
        });
    }
}

/// Every in-hypothesis point has a witness found by both routes.
#[test]
fn in_hypothesis_points_are_doubly_verified() {
    let mut bad = Vec::new();
    for lp in grid(8) {
        let rep = find_q_divisible_in_principal_block(&lp).unwrap();
        if rep.coverage.in_hypotheses() && (!rep.verified || rep.disagreement) {
            bad.push(format!(
                "{} n = {} r = {} p = {} q = {} ({:?}): explicit {:?}, brute force {}",
                lp.series,
                lp.n,
                lp.r,
                lp.p,
                lp.q,
                rep.coverage,
                rep.explicit.as_ref().map(|w| w.label.to_string()).or(rep.explicit_error.clone()),
                rep.brute_force.as_ref().map_or("none".into(), |w| w.label.to_string()),
            ));
        }
    }
    assert!(bad.is_empty(), "{} points fail:\n{}", bad.len(), bad.join("\n"));
}

#[test]
fn lemma24_points_in_grid() {
    for lp in grid(8).into_iter().filter(|lp| Coverage::of(lp) == Coverage::Lemma24) {
        let rep = find_q_divisible_in_principal_block(&lp).unwrap();
        assert!(rep.verified && !rep.disagreement, "{lp:?}");
        assert_eq!(lp.series.eps(), if lp.series == Series::A { Sign::Plus } else { Sign::Minus });
    }
}
