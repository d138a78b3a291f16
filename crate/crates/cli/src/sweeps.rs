use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::Context;
use rayon::prelude::*;
use serde::Serialize;

use ublocks::arith::{is_prime, prime_power, LieParams, Series};
use ublocks::blocks::{
    effective_m, find_q_divisible_in_principal_block, hc_torus_violations, hc_violations, lemma24_grid,
    lemma24_point, Coverage, WitnessReport,
};
use ublocks::chartab::{
    parse_table, principal_block, principal_block_with, unipotent_fixture, verify_sporadic, CharacterTable,
    IdealChoice, SPORADIC_EXCEPTIONS,
};
use ublocks::label::labels_cached;
use ublocks::symbols::{table2_cell_exists, table2_grid, table2_point, Table2Column};

use crate::{InputError, Report, Status, SweepConfig};

fn status(failures: usize) -> Status {
    if failures == 0 {
        Status::Pass
    } else {
        Status::VerificationFailure
    }
}

pub fn lemma24(cfg: &SweepConfig, report: &mut Report) -> anyhow::Result<Status> {
    let n_max = cfg.n_max.unwrap_or(40);
    let points = lemma24_grid(n_max)
        .par_iter()
        .map(|&(n, e_p, e_q)| lemma24_point(n, e_p, e_q))
        .collect::<Result<Vec<_>, _>>()?;
    let mut failures = 0;
    for p in &points {
        report.line(p)?;
        if !p.status.passed() {
            if failures == 0 {
                eprintln!("first failure: n = {}, e_p = {}, e_q = {}", p.n, p.e_p, p.e_q);
            }
            failures += 1;
        }
    }
    eprintln!("lemma24: {} points, {} failed", points.len(), failures);
    Ok(status(failures))
}

pub fn table2(
    cfg: &SweepConfig,
    report: &mut Report,
    column: Option<Table2Column>,
    e_p: Option<usize>,
    e_q: Option<usize>,
    m: Option<usize>,
) -> anyhow::Result<Status> {
    let bound = |c: Table2Column| {
        if c == Table2Column::Gl {
            cfg.n_max.unwrap_or(60)
        } else {
            cfg.rank_max.unwrap_or(12)
        }
    };
    let cells = match (column, e_p, e_q, m) {
        (Some(c), Some(a), Some(b), Some(m)) => {
            if !table2_cell_exists(c, a, b, m) {
                anyhow::bail!(InputError(format!("no cell ({c}, e_p = {a}, e_q = {b}, m = {m})")));
            }
            vec![(c, a, b, m)]
        }
        (None, None, None, None) => table2_grid(cfg.eq_max),
        _ => anyhow::bail!(InputError("table2 needs all of --column --e-p --e-q --m, or none".into())),
    };
    let points: Vec<_> = cells.par_iter().map(|&(c, a, b, m)| table2_point(c, a, b, m, bound(c))).collect();
    let mut failures = 0;
    for p in &points {
        report.line(p)?;
        if !p.passed() {
            eprintln!(
                "failed: {} e_p = {} e_q = {} m = {} (entry {}, lifts {}, twists {})",
                p.column,
                p.e_p,
                p.e_q,
                p.m,
                p.entry_passed(),
                p.lifts_passed(),
                p.twists_passed()
            );
            failures += 1;
        }
    }
    eprintln!("table2: {} cells, {} failed", points.len(), failures);
    Ok(status(failures))
}

/// One line of a group-parameter sweep.
#[derive(Serialize)]
struct GridLine {
    #[serde(flatten)]
    report: WitnessReport,
    /// Labels where the core-rank criterion holds but `q` misses the degree.
    hc_violations: Vec<String>,
    /// `n - e_q · (Sylow torus rank)`; differs from `m` only for SO±.
    effective_m: usize,
    /// Violations of the criterion measured against `effective_m`.
    hc_torus_violations: Vec<String>,
}

impl GridLine {
    fn new(lp: &LieParams) -> Result<GridLine, ublocks::Error> {
        let names = |v: Vec<ublocks::label::Label>| v.iter().map(|l| l.to_string()).collect();
        Ok(GridLine {
            report: find_q_divisible_in_principal_block(lp)?,
            hc_violations: names(hc_violations(lp)?),
            effective_m: effective_m(lp),
            hc_torus_violations: names(hc_torus_violations(lp)?),
        })
    }

    fn failed(&self) -> bool {
        let r = &self.report;
        (r.coverage.in_hypotheses() && (!r.verified || r.disagreement)) || !self.hc_violations.is_empty()
    }
}

fn grid_params(cfg: &SweepConfig) -> Vec<LieParams> {
    let rank_max = cfg.rank_max.unwrap_or(10);
    let rs: Vec<u64> = (2..=cfg.r_max).filter(|&r| prime_power(r).is_some()).collect();
    let ps: Vec<u64> = (2..=cfg.p_max).filter(|&p| is_prime(p)).collect();
    let qs: Vec<u64> = (2..=cfg.q_max).filter(|&q| is_prime(q)).collect();
    let mut out = Vec::new();
    for series in Series::ALL {
        for n in 1..=rank_max {
            for &r in &rs {
                for &p in &ps {
                    for &q in &qs {
                        // invalid combinations (p | r, p ∤ |G|, ...) are skipped
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

/// Witness search over the parameter grid. With `lemma25_only`, points
/// outside the `e_p | e_q` hypotheses are dropped instead of tagged.
pub fn group_grid(cfg: &SweepConfig, report: &mut Report, lemma25_only: bool) -> anyhow::Result<Status> {
    let mut params = grid_params(cfg);
    if lemma25_only {
        params.retain(|lp| Coverage::of(lp) == Coverage::Lemma25);
    }
    // warm the label cache one (series, n) at a time
    let mut keys: Vec<(Series, usize)> = params.iter().map(|lp| (lp.series, lp.n)).collect();
    keys.sort();
    keys.dedup();
    keys.par_iter().try_for_each(|&(s, n)| labels_cached(s, n).map(|_| ()))?;

    let lines = params
        .par_iter()
        .map(GridLine::new)
        .collect::<Result<Vec<_>, ublocks::Error>>()?;
    let mut failures = 0;
    let mut by_coverage: BTreeMap<String, usize> = BTreeMap::new();
    for line in &lines {
        report.line(line)?;
        let r = &line.report;
        *by_coverage.entry(format!("{:?}", r.coverage)).or_default() += 1;
        if line.failed() {
            if failures == 0 {
                eprintln!("first failure: {:?}", r.params);
            }
            failures += 1;
        }
    }
    eprintln!("{} points {:?}, {} failed", lines.len(), by_coverage, failures);
    Ok(status(failures))
}

pub fn blocks_point(report: &mut Report, series: Series, n: usize, r: u64, p: u64, q: u64) -> anyhow::Result<Status> {
    let lp = LieParams::new(series, n, r, p, q)?;
    let line = GridLine::new(&lp)?;
    report.line(&line)?;
    let r = &line.report;
    if !r.coverage.in_hypotheses() {
        eprintln!("outside lemma hypotheses; result is informational");
    }
    Ok(status(line.failed() as usize))
}

fn resolve_tables(cfg: &SweepConfig, path: &Path) -> anyhow::Result<Vec<PathBuf>> {
    if path.is_dir() {
        let mut v: Vec<PathBuf> = std::fs::read_dir(path)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        v.sort();
        return Ok(v);
    }
    if path.is_file() {
        return Ok(vec![path.to_path_buf()]);
    }
    let stem = cfg.fixtures.join("tables").join(path).with_extension("json");
    if stem.is_file() {
        return Ok(vec![stem]);
    }
    anyhow::bail!(InputError(format!("no table at {} or {}", path.display(), stem.display())))
}

fn load(path: &Path) -> anyhow::Result<CharacterTable> {
    let doc = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_table(&doc).map_err(|e| anyhow::Error::new(e).context(format!("{}", path.display())))
}

#[derive(Serialize)]
struct PairLine<'a> {
    name: &'a str,
    p: u64,
    q: Option<u64>,
    principal_block: Vec<usize>,
    flag: Option<bool>,
    witness: Option<usize>,
}

pub fn chartab(
    cfg: &SweepConfig,
    report: &mut Report,
    path: &Path,
    p: Option<u64>,
    q: Option<u64>,
) -> anyhow::Result<Status> {
    let mut failures = 0;
    for file in resolve_tables(cfg, path)? {
        let table = load(&file)?;
        match (p, q) {
            (Some(p), q) => {
                let block = principal_block(&table, p)?;
                let witness = q.and_then(|q| block.iter().copied().find(|&c| (&table.degrees()[c] % q) == 0u32.into()));
                report.line(&PairLine {
                    name: &table.name,
                    p,
                    q,
                    flag: q.map(|_| witness.is_some()),
                    witness,
                    principal_block: block,
                })?;
            }
            (None, None) => {
                let rep = verify_sporadic(&table, SPORADIC_EXCEPTIONS)?;
                if rep.matches == Some(false) {
                    eprintln!("{}: exceptions {:?}, expected {:?}", rep.name, rep.exceptions, rep.expected_exceptions);
                    failures += 1;
                }
                report.line(&rep)?;
            }
            (None, Some(_)) => anyhow::bail!(InputError("--q needs --p".into())),
        }
    }
    Ok(status(failures))
}

#[derive(Serialize)]
struct OracleLine {
    name: String,
    file: String,
    blocks: Vec<OracleBlock>,
    unipotent: Option<UnipotentCheck>,
    ok: bool,
}

#[derive(Serialize)]
struct OracleBlock {
    p: u64,
    oracle: Option<Vec<usize>>,
    smallest: Vec<usize>,
    second_smallest: Vec<usize>,
    ok: bool,
}

#[derive(Serialize)]
struct UnipotentCheck {
    series: Series,
    n: usize,
    r: u64,
    labels: usize,
    /// Labels whose degree is not a character degree of the table.
    missing: Vec<String>,
}

pub fn oracle(cfg: &SweepConfig, report: &mut Report) -> anyhow::Result<Status> {
    let files = resolve_tables(cfg, &cfg.fixtures.join("tables"))?;
    let lines = files
        .par_iter()
        .map(|file| -> anyhow::Result<OracleLine> {
            let table = load(file)?;
            let stem = file.file_stem().unwrap().to_string_lossy().to_string();
            let oracle_path = cfg.fixtures.join("oracles").join(format!("{stem}.blocks.json"));
            let oracle: Option<serde_json::Value> = match std::fs::read_to_string(&oracle_path) {
                Ok(s) => Some(serde_json::from_str(&s).with_context(|| oracle_path.display().to_string())?),
                Err(_) => None,
            };
            let mut blocks = Vec::new();
            for p in table.primes() {
                let smallest = principal_block_with(&table, p, IdealChoice::Smallest)?;
                let second_smallest = principal_block_with(&table, p, IdealChoice::SecondSmallest)?;
                let expected: Option<Vec<usize>> = oracle.as_ref().and_then(|o| {
                    serde_json::from_value(o["principal_blocks"][p.to_string()].clone()).ok()
                });
                let ok = smallest == second_smallest && expected.as_ref().map_or(true, |e| *e == smallest);
                blocks.push(OracleBlock { p, oracle: expected, smallest, second_smallest, ok });
            }
            let unipotent = match unipotent_fixture(&table.name) {
                Some((series, n, r)) => {
                    let labels = labels_cached(series, n)?;
                    let mut missing = Vec::new();
                    for l in labels.iter() {
                        let d = l.degree_value(r)?;
                        if !table.degrees().contains(&d) {
                            missing.push(format!("{} -> {}", l.label(), d));
                        }
                    }
                    Some(UnipotentCheck { series, n, r, labels: labels.len(), missing })
                }
                None => None,
            };
            let ok = blocks.iter().all(|b| b.ok) && unipotent.as_ref().map_or(true, |u| u.missing.is_empty());
            Ok(OracleLine { name: table.name.clone(), file: stem, blocks, unipotent, ok })
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let mut failures = 0;
    for line in &lines {
        report.line(line)?;
        if !line.ok {
            eprintln!("oracle mismatch: {}", line.name);
            failures += 1;
        }
    }
    eprintln!("oracle: {} fixtures, {} mismatched", lines.len(), failures);
    Ok(status(failures))
}
