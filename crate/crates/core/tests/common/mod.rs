//! Independent oracles. Nothing here calls into the library's core, cocore
//! or degree code: partitions are handled as Young diagrams, symbols as raw
//! pairs of sets, and degrees by the hook formula over big integers.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// All partitions of `n`, decreasing parts, by plain recursion.
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(lambda: &[usize]) -> Vec<usize> {
    let first = lambda.first().copied().unwrap_or(0);
    (0..first).map(|j| lambda.iter().filter(|&&l| l > j).count()).collect()
}

/// Cells `(i, j)` whose hook length is `e`.
pub fn cells_with_hook(lambda: &[usize], e: usize) -> Vec<(usize, usize)> {
    let conj = conjugate(lambda);
    let mut out = Vec::new();
    for (i, &li) in lambda.iter().enumerate() {
        for j in 0..li {
            if (li - j - 1) + (conj[j] - i - 1) + 1 == e {
                out.push((i, j));
            }
        }
    }
    out
}

/// Strips the rim hook attached to cell `(i, j)`.
pub fn remove_rim_hook(lambda: &[usize], (i, j): (usize, usize)) -> Vec<usize> {
    let leg = conjugate(lambda)[j] - i - 1;
    let mut out = lambda.to_vec();
    for k in i..i + leg {
        out[k] = lambda[k + 1] - 1;
    }
    out[i + leg] = j;
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Removes rim `e`-hooks in a random order; returns the residue and the
/// number of hooks removed.
pub fn random_core(lambda: &[usize], e: usize, rng: &mut StdRng) -> (Vec<usize>, usize) {
    let mut cur = lambda.to_vec();
    let mut count = 0;
    loop {
        let cells = cells_with_hook(&cur, e);
        let Some(&cell) = cells.choose(rng) else { return (cur, count) };
        cur = remove_rim_hook(&cur, cell);
        count += 1;
    }
}

pub fn all_hook_lengths(lambda: &[usize]) -> Vec<usize> {
    let conj = conjugate(lambda);
    let mut out = Vec::new();
    for (i, &li) in lambda.iter().enumerate() {
        for j in 0..li {
            out.push((li - j - 1) + (conj[j] - i - 1) + 1);
        }
    }
    out
}

/// Unipotent degree of `GL_n(εr)` at `λ` by the hook formula, with
/// `x = εr`; the absolute value is taken at the end.
pub fn gl_degree(lambda: &[usize], x: i64) -> BigUint {
    let n: usize = lambda.iter().sum();
    let x = BigInt::from(x);
    let pow = |k: usize| num_traits::pow(x.clone(), k);
    let n_stat: usize = lambda.iter().enumerate().map(|(i, &l)| i * l).sum();
    let mut num = pow(n_stat);
    for i in 1..=n {
        num *= pow(i) - 1;
    }
    let mut den = BigInt::one();
    for h in all_hook_lengths(lambda) {
        den *= pow(h) - 1;
    }
    assert!((&num % &den).is_zero(), "hook formula not exact for {lambda:?}");
    (num / den).abs().to_biguint().unwrap()
}

/// A symbol as two raw rows, no normalisation.
pub type RawSymbol = (BTreeSet<usize>, BTreeSet<usize>);

pub fn raw(top: &[usize], bottom: &[usize]) -> RawSymbol {
    (top.iter().copied().collect(), bottom.iter().copied().collect())
}

/// Strips common zeros (shift equivalence) and forgets row order.
pub fn normal_form(s: &RawSymbol) -> BTreeSet<Vec<usize>> {
    let (mut x, mut y) = (s.0.clone(), s.1.clone());
    while x.contains(&0) && y.contains(&0) {
        x = x.iter().filter(|&&v| v > 0).map(|v| v - 1).collect();
        y = y.iter().filter(|&&v| v > 0).map(|v| v - 1).collect();
    }
    [x.into_iter().collect(), y.into_iter().collect()].into_iter().collect()
}

pub fn symbol_rank(s: &RawSymbol) -> usize {
    let (x, y) = s;
    let t = x.len() + y.len();
    let sum: usize = x.iter().sum::<usize>() + y.iter().sum::<usize>();
    sum - (t.saturating_sub(1) * t.saturating_sub(1)) / 4
}

pub fn defect(s: &RawSymbol) -> usize {
    s.0.len().abs_diff(s.1.len())
}

/// Pads both rows with the shift `k` so that every hook or cohook can be
/// written without negative entries.
pub fn shift(s: &RawSymbol, k: usize) -> RawSymbol {
    let f = |r: &BTreeSet<usize>| (0..k).chain(r.iter().map(|v| v + k)).collect();
    (f(&s.0), f(&s.1))
}

/// Moves available in one step: `(from_top, x)` slides `x` to `x - e`, in
/// the same row (`co = false`) or the other row (`co = true`).
pub fn moves(s: &RawSymbol, e: usize, co: bool) -> Vec<(bool, usize)> {
    let mut out = Vec::new();
    for (top, row, other) in [(true, &s.0, &s.1), (false, &s.1, &s.0)] {
        let target = if co { other } else { row };
        for &x in row {
            if x >= e && !target.contains(&(x - e)) {
                out.push((top, x));
            }
        }
    }
    out
}

pub fn apply(s: &RawSymbol, (top, x): (bool, usize), e: usize, co: bool) -> RawSymbol {
    let (mut a, mut b) = s.clone();
    let (row, other) = if top { (&mut a, &mut b) } else { (&mut b, &mut a) };
    row.remove(&x);
    if co {
        other.insert(x - e);
    } else {
        row.insert(x - e);
    }
    (a, b)
}

/// Random-order hook (or cohook) removal to exhaustion.
pub fn random_reduce(s: &RawSymbol, e: usize, co: bool, rng: &mut StdRng) -> (RawSymbol, usize) {
    let mut cur = shift(s, e + 1);
    let mut count = 0;
    loop {
        let ms = moves(&cur, e, co);
        let Some(&mv) = ms.choose(rng) else { return (cur, count) };
        cur = shift(&apply(&cur, mv, e, co), e + 1);
        count += 1;
    }
}

/// `k`-subsets of `0..=max` with sum `target`, by pruned recursion.
fn subsets_with_sum(k: usize, max: usize, target: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, max: usize, target: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if target == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in start..=max {
            // the smallest possible completion already overshoots
            let least = v * k + k * (k - 1) / 2;
            if least > target {
                break;
            }
            cur.push(v);
            go(v + 1, k - 1, max, target - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, max, target, &mut Vec::new(), &mut out);
    out
}

/// Every symbol of rank `n` whose defect lies in `defects`, up to shift and
/// row swap, by enumerating row pairs with the right entry sum.
pub fn symbols_of(n: usize, defects: &[usize]) -> BTreeSet<BTreeSet<Vec<usize>>> {
    let mut out = BTreeSet::new();
    for &d in defects {
        for b in 0..=n + 1 {
            let a = b + d;
            let t = a + b;
            let target = n + (t.saturating_sub(1) * t.saturating_sub(1)) / 4;
            // at most one row holds 0, so the minimal sum is attained by
            // 0..a-1 over 1..b or 1..a over 0..b-1
            let least = (a * a.saturating_sub(1) / 2 + b * (b + 1) / 2).min(a * (a + 1) / 2 + b * b.saturating_sub(1) / 2);
            if least > target {
                continue;
            }
            for sx in 0..=target {
                for x in subsets_with_sum(a, target, sx) {
                    for y in subsets_with_sum(b, target, target - sx) {
                        if x.first() == Some(&0) && y.first() == Some(&0) {
                            continue;
                        }
                        out.insert(normal_form(&raw(&x, &y)));
                    }
                }
            }
        }
    }
    out
}

/// Unipotent degree of a classical group at `r` for a symbol, by the
/// closed product formula. `eps` is `None` for B/C, `Some(±1)` for SO±.
pub fn symbol_degree(s: &RawSymbol, n: usize, eps: Option<i64>, r: u64) -> BigUint {
    let q = BigInt::from(r);
    let pow = |k: usize| num_traits::pow(q.clone(), k);
    let (x, y) = s;
    let t = x.len() + y.len();
    let mut num = BigInt::one();
    let top = match eps {
        None => n,
        Some(e) => {
            num *= pow(n) - e;
            n - 1
        }
    };
    for i in 1..=top {
        num *= pow(2 * i) - 1;
    }
    for row in [x, y] {
        let v: Vec<usize> = row.iter().copied().collect();
        for (i, &a) in v.iter().enumerate() {
            for &b in &v[i + 1..] {
                num *= pow(b) - pow(a);
            }
        }
    }
    for &a in x {
        for &b in y {
            num *= pow(a) + pow(b);
        }
    }
    let mut den = BigInt::one();
    for &v in x.iter().chain(y) {
        for k in 1..=v {
            den *= pow(2 * k) - 1;
        }
    }
    let mut k = t;
    while k >= 2 {
        den *= pow(k.saturating_sub(2) * k.saturating_sub(3) / 2);
        k -= 2;
    }
    let c = match eps {
        None => (t - 1) / 2,
        Some(_) if x == y => t / 2,
        Some(_) => (t - 2) / 2,
    };
    den *= num_traits::pow(BigInt::from(2), c);
    assert!((&num % &den).is_zero(), "degree formula not exact for {s:?}");
    (num / den).abs().to_biguint().unwrap()
}
