//! Symbols for the classical series, their hooks and cohooks, twists, degree
//! formulas, and a table of cores with trivial smaller cores.
//!
//! A [`Symbol`] is always kept in canonical form: no 0 common to both rows,
//! entries ascending, and rows oriented by a fixed rule (longer row on top
//! for odd defect; larger row sum on top for even defect, ties broken by
//! length and then lexicographically). Rows are therefore unordered for every
//! series.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::arith::{CyclotomicFactorization, GenericDegree, Series};
use crate::error::{Error, Result};
use crate::label::Label;
use crate::partitions::{self, BetaSet, Partition};

/// Default bound for [`enumerate_symbols`].
pub const DEFAULT_SYMBOL_BOUND: usize = 12;

/// Which family of classical groups a symbol labels, read off its defect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymbolClass {
    /// Odd defect: `Sp_{2n}` and `SO_{2n+1}`.
    #[serde(rename = "B/C")]
    BC,
    /// Defect divisible by 4: `SO^+_{2n}`.
    D,
    /// Defect 2 mod 4: `SO^-_{2n}`.
    #[serde(rename = "2D")]
    TwistedD,
}

impl SymbolClass {
    pub const ALL: [SymbolClass; 3] = [SymbolClass::BC, SymbolClass::D, SymbolClass::TwistedD];

    pub fn of_defect(defect: usize) -> SymbolClass {
        match defect % 4 {
            1 | 3 => SymbolClass::BC,
            0 => SymbolClass::D,
            _ => SymbolClass::TwistedD,
        }
    }

    /// `None` for the linear and unitary series.
    pub fn of_series(series: Series) -> Option<SymbolClass> {
        match series {
            Series::A | Series::TwistedA => None,
            Series::B | Series::C => Some(SymbolClass::BC),
            Series::D => Some(SymbolClass::D),
            Series::TwistedD => Some(SymbolClass::TwistedD),
        }
    }

    /// Smallest defect of the class, and the step between defects.
    fn defects(self) -> (usize, usize) {
        match self {
            SymbolClass::BC => (1, 2),
            SymbolClass::D => (0, 4),
            SymbolClass::TwistedD => (2, 4),
        }
    }

    /// Symbol of the trivial character of rank `n`.
    pub fn trivial(self, n: usize) -> Result<Symbol> {
        match self {
            SymbolClass::BC => Symbol::new(vec![n], vec![]),
            SymbolClass::D => Symbol::new(vec![n], vec![0]),
            SymbolClass::TwistedD if n == 0 => {
                Err(Error::InvalidSymbol("no symbol of defect 2 has rank 0".into()))
            }
            SymbolClass::TwistedD => Symbol::new(vec![0, n], vec![]),
        }
    }

    /// Symbol of the Steinberg character of rank `n`.
    pub fn steinberg(self, n: usize) -> Result<Symbol> {
        match self {
            SymbolClass::BC => Symbol::new((0..=n).collect(), (1..=n).collect()),
            SymbolClass::D => Symbol::new((0..n).collect(), (1..=n).collect()),
            SymbolClass::TwistedD if n == 0 => {
                Err(Error::InvalidSymbol("no symbol of defect 2 has rank 0".into()))
            }
            SymbolClass::TwistedD => Symbol::new((0..=n).collect(), (1..n).collect()),
        }
    }
}

impl fmt::Display for SymbolClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymbolClass::BC => "B/C",
            SymbolClass::D => "D",
            SymbolClass::TwistedD => "2D",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Row {
    Top,
    Bottom,
}

impl Row {
    pub fn other(self) -> Row {
        match self {
            Row::Top => Row::Bottom,
            Row::Bottom => Row::Top,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Symbol {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

fn has_duplicates(v: &[usize]) -> bool {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.windows(2).any(|w| w[0] == w[1])
}

impl Symbol {
    /// Builds the canonical form of `(top | bottom)`. Entries within a row
    /// must be distinct.
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if has_duplicates(&top) || has_duplicates(&bottom) {
            return Err(Error::InvalidSymbol(format!(
                "repeated entry in a row of ({top:?} | {bottom:?})"
            )));
        }
        Ok(Self::canonical(top, bottom))
    }

    fn canonical(mut x: Vec<usize>, mut y: Vec<usize>) -> Self {
        x.sort_unstable();
        y.sort_unstable();
        while x.first() == Some(&0) && y.first() == Some(&0) {
            x.remove(0);
            y.remove(0);
            x.iter_mut().chain(y.iter_mut()).for_each(|v| *v -= 1);
        }
        let swap = if (x.len() + y.len()) % 2 == 1 {
            y.len() > x.len()
        } else {
            let (sx, sy): (usize, usize) = (x.iter().sum(), y.iter().sum());
            (sy, y.len(), &y) > (sx, x.len(), &x)
        };
        if swap {
            std::mem::swap(&mut x, &mut y);
        }
        Symbol { top: x, bottom: y }
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn row(&self, row: Row) -> &[usize] {
        match row {
            Row::Top => &self.top,
            Row::Bottom => &self.bottom,
        }
    }

    /// `Σ X + Σ Y - ⌊(|X| + |Y| - 1)² / 4⌋`
    pub fn rank(&self) -> usize {
        let sum: usize = self.top.iter().chain(&self.bottom).sum();
        let len = self.top.len() + self.bottom.len();
        let correction = if len == 0 { 0 } else { (len - 1) * (len - 1) / 4 };
        sum - correction
    }

    pub fn defect(&self) -> usize {
        self.top.len().abs_diff(self.bottom.len())
    }

    pub fn class(&self) -> SymbolClass {
        SymbolClass::of_defect(self.defect())
    }

    /// Equal rows: the label stands for two characters of `SO^+_{2n}`.
    pub fn is_degenerate(&self) -> bool {
        self.top == self.bottom
    }

    pub fn multiplicity(&self) -> usize {
        if self.is_degenerate() {
            2
        } else {
            1
        }
    }

    /// Rows after `k` shifts: prepend 0 and add 1 to every entry, `k` times.
    pub fn shifted_rows(&self, k: usize) -> (Vec<usize>, Vec<usize>) {
        let shift = |v: &[usize]| -> Vec<usize> { (0..k).chain(v.iter().map(|x| x + k)).collect() };
        (shift(&self.top), shift(&self.bottom))
    }

    pub fn removable_hooks(&self, e: usize) -> Vec<(Row, usize)> {
        assert!(e >= 1, "hook length must be positive");
        let mut out = Vec::new();
        for row in [Row::Top, Row::Bottom] {
            let r = self.row(row);
            out.extend(r.iter().filter(|&&x| x >= e && !r.contains(&(x - e))).map(|&x| (row, x)));
        }
        out
    }

    pub fn removable_cohooks(&self, e: usize) -> Vec<(Row, usize)> {
        assert!(e >= 1, "hook length must be positive");
        let mut out = Vec::new();
        for row in [Row::Top, Row::Bottom] {
            let other = self.row(row.other());
            out.extend(
                self.row(row).iter().filter(|&&x| x >= e && !other.contains(&(x - e))).map(|&x| (row, x)),
            );
        }
        out
    }

    fn rows_mut(&self) -> (Vec<usize>, Vec<usize>) {
        (self.top.clone(), self.bottom.clone())
    }

    /// Replace `x` by `x - e` in `row`, when that is an `e`-hook.
    pub fn remove_hook_at(&self, row: Row, x: usize, e: usize) -> Option<Symbol> {
        let r = self.row(row);
        if x < e || !r.contains(&x) || r.contains(&(x - e)) {
            return None;
        }
        let (mut t, mut b) = self.rows_mut();
        let target = if row == Row::Top { &mut t } else { &mut b };
        target.iter_mut().filter(|v| **v == x).for_each(|v| *v = x - e);
        Some(Symbol::canonical(t, b))
    }

    /// Delete `x` from `row` and put `x - e` in the other row, when that is an
    /// `e`-cohook.
    pub fn remove_cohook_at(&self, row: Row, x: usize, e: usize) -> Option<Symbol> {
        if x < e || !self.row(row).contains(&x) || self.row(row.other()).contains(&(x - e)) {
            return None;
        }
        let (mut t, mut b) = self.rows_mut();
        let (from, to) = if row == Row::Top { (&mut t, &mut b) } else { (&mut b, &mut t) };
        from.retain(|&v| v != x);
        to.push(x - e);
        Some(Symbol::canonical(t, b))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.top), join(&self.bottom))
    }
}

impl FromStr for Symbol {
    type Err = Error;

    /// Accepts `(1,2|0)`; rows may be empty, as in `(3|)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("symbol must be parenthesized: '{s}'")))?;
        let (top, bottom) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("symbol needs a '|' between rows: '{s}'")))?;
        let row = |r: &str| -> Result<Vec<usize>> {
            r.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad entry '{t}'"))))
                .collect()
        };
        Symbol::new(row(top)?, row(bottom)?)
    }
}

impl From<Symbol> for String {
    fn from(s: Symbol) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Symbol {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Canonical form; the stored form is already reduced, so this is a copy.
pub fn reduce(s: &Symbol) -> Symbol {
    s.clone()
}

pub fn rank(s: &Symbol) -> usize {
    s.rank()
}

/// Removes the largest available `e`-hook, if any.
pub fn remove_e_hook(s: &Symbol, e: usize) -> Option<Symbol> {
    let (row, x) = s.removable_hooks(e).into_iter().max_by_key(|&(_, x)| x)?;
    s.remove_hook_at(row, x, e)
}

/// Removes the largest available `e`-cohook, if any.
pub fn remove_e_cohook(s: &Symbol, e: usize) -> Option<Symbol> {
    let (row, x) = s.removable_cohooks(e).into_iter().max_by_key(|&(_, x)| x)?;
    s.remove_cohook_at(row, x, e)
}

fn row_core(row: &[usize], e: usize) -> Vec<usize> {
    BetaSet::new(row.to_vec()).expect("rows are sets").core(e).0.entries().to_vec()
}

/// The `e`-core: both rows pushed up their `e`-abaci independently.
pub fn e_core_symbol(s: &Symbol, e: usize) -> Symbol {
    assert!(e >= 1, "hook length must be positive");
    Symbol::canonical(row_core(&s.top, e), row_core(&s.bottom, e))
}

/// Exchange, between the two rows, every entry whose residue mod `2e` lies in
/// `[e, 2e)`. An `e`-cohook of one side is an `e`-hook of the other.
fn twist_rows(x: &[usize], y: &[usize], e: usize) -> (Vec<usize>, Vec<usize>) {
    let low = |v: &usize| v % (2 * e) < e;
    let x2 = x.iter().copied().filter(low).chain(y.iter().copied().filter(|v| !low(v))).collect();
    let y2 = x.iter().copied().filter(|v| !low(v)).chain(y.iter().copied().filter(low)).collect();
    (x2, y2)
}

/// The `e`-cocore: all `e`-cohooks removed. Computed as the twist of the
/// `e`-core of the twist.
pub fn e_cocore_symbol(s: &Symbol, e: usize) -> Symbol {
    assert!(e >= 1, "hook length must be positive");
    let (x, y) = twist_rows(&s.top, &s.bottom, e);
    let (x, y) = twist_rows(&row_core(&x, e), &row_core(&y, e), e);
    Symbol::canonical(x, y)
}

/// The twist of `s` taken after `shift` shifts of its rows. Rank is
/// preserved; defect may change.
pub fn twist_at_shift(s: &Symbol, e: usize, shift: usize) -> Symbol {
    assert!(e >= 1, "hook length must be positive");
    let (x, y) = s.shifted_rows(shift);
    let (x, y) = twist_rows(&x, &y, e);
    Symbol::canonical(x, y)
}

/// True when the `e`-core of `s` is that of the trivial symbol of the same
/// class and rank.
pub fn has_trivial_core(s: &Symbol, e: usize) -> bool {
    match s.class().trivial(s.rank()) {
        Ok(t) => e_core_symbol(s, e) == e_core_symbol(&t, e),
        Err(_) => false,
    }
}

/// True when the `e`-cocore of `s` is that of the trivial symbol of the same
/// class and rank.
pub fn has_trivial_cocore(s: &Symbol, e: usize) -> bool {
    match s.class().trivial(s.rank()) {
        Ok(t) => e_cocore_symbol(s, e) == e_cocore_symbol(&t, e),
        Err(_) => false,
    }
}

/// Every distinct twist of `s` (over shifts `0..2e`) that has trivial
/// `e`-cocore, with the shift that produced it. `s` must have trivial
/// `e`-core.
pub fn olsson_twists(s: &Symbol, e: usize) -> Result<Vec<(usize, Symbol)>> {
    if !has_trivial_core(s, e) {
        return Err(Error::NontrivialCore { e });
    }
    let mut out: Vec<(usize, Symbol)> = Vec::new();
    for shift in 0..2 * e {
        let t = twist_at_shift(s, e, shift);
        if has_trivial_cocore(&t, e) && !out.iter().any(|(_, u)| *u == t) {
            out.push((shift, t));
        }
    }
    Ok(out)
}

/// A symbol of the same rank as `s` with trivial `e`-cocore, obtained by
/// twisting. `s` must have trivial `e`-core.
pub fn olsson_twist(s: &Symbol, e: usize) -> Result<Symbol> {
    olsson_twists(s, e)?
        .into_iter()
        .next()
        .map(|(_, t)| t)
        .ok_or_else(|| Error::ConstructionFailed(format!("no twist of {s} has trivial {e}-cocore")))
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// The classical degree formula in factored form.
pub fn degree_factorization_symbol(s: &Symbol, class: SymbolClass) -> Result<CyclotomicFactorization> {
    if s.class() != class {
        return Err(Error::DefectMismatch { defect: s.defect(), series: class.to_string() });
    }
    let n = s.rank();
    let mut f = CyclotomicFactorization::new();
    if n == 0 {
        return Ok(f);
    }
    let (x, y) = (&s.top, &s.bottom);
    let len = x.len() + y.len();
    match class {
        SymbolClass::BC => {
            for i in 1..=n {
                f.mul_x_pow_minus_one(2 * i, 1);
            }
        }
        SymbolClass::D | SymbolClass::TwistedD => {
            if class == SymbolClass::D {
                f.mul_x_pow_minus_one(n, 1);
            } else {
                f.mul_x_pow_plus_one(n, 1);
            }
            for i in 1..n {
                f.mul_x_pow_minus_one(2 * i, 1);
            }
        }
    }
    for row in [x, y] {
        for (j, &b) in row.iter().enumerate() {
            for &a in &row[..j] {
                f.mul_x_pow_difference(b, a, 1);
            }
        }
    }
    for &a in x {
        for &b in y {
            f.mul_x_pow_sum(a, b, 1);
        }
    }
    for &a in x.iter().chain(y) {
        for k in 1..=a {
            f.mul_x_pow_minus_one(2 * k, -1);
        }
    }
    let x_power: usize = (1..).map(|k| 2 * k).take_while(|&t| t + 2 <= len).map(|t| binom2(len - t)).sum();
    f.mul_x_pow(-(x_power as i64));
    let c = match class {
        SymbolClass::BC => (len - 1) / 2,
        _ if s.is_degenerate() => len / 2,
        _ => (len - 2) / 2,
    };
    f.div_two_pow(c as i64);
    Ok(f)
}

/// Generic degree of the unipotent character labelled by `s`.
pub fn generic_degree_symbol(s: &Symbol, class: SymbolClass) -> Result<GenericDegree> {
    degree_factorization_symbol(s, class)?.to_generic_degree()
}

/// Degree at field size `r`.
pub fn degree_value_symbol(s: &Symbol, r: u64) -> Result<BigUint> {
    let v = degree_factorization_symbol(s, s.class())?.evaluate(&BigInt::from(r))?;
    Ok(v.magnitude().clone())
}

/// All canonical symbols of the class with rank `n`, sorted.
pub fn enumerate_symbols(class: SymbolClass, n: usize, bound: usize) -> Result<Vec<Symbol>> {
    if n > bound {
        return Err(Error::BoundExceeded { requested: n, bound });
    }
    let mut out = BTreeSet::new();
    let (mut d, step) = class.defects();
    while d * d / 4 <= n {
        let k = n - d * d / 4;
        for i in 0..=k {
            let alphas: Vec<Partition> = partitions::partitions(i).collect();
            let betas: Vec<Partition> = partitions::partitions(k - i).collect();
            for a in &alphas {
                for b in &betas {
                    let t = a.len().max(b.len());
                    let x = a.beta_set(t + d).expect("long enough").entries().to_vec();
                    let y = b.beta_set(t).expect("long enough").entries().to_vec();
                    let s = Symbol::canonical(x, y);
                    debug_assert_eq!(s.rank(), n);
                    out.insert(s);
                }
            }
        }
        d += step;
    }
    Ok(out.into_iter().collect())
}

/// Columns of the table of cores.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Table2Column {
    #[serde(rename = "GL")]
    Gl,
    #[serde(rename = "B/C")]
    Bc,
    #[serde(rename = "SO+")]
    SoPlus,
    #[serde(rename = "SO-")]
    SoMinus,
}

impl Table2Column {
    pub const ALL: [Table2Column; 4] =
        [Table2Column::Gl, Table2Column::Bc, Table2Column::SoPlus, Table2Column::SoMinus];

    pub fn of_series(series: Series) -> Table2Column {
        match SymbolClass::of_series(series) {
            None => Table2Column::Gl,
            Some(SymbolClass::BC) => Table2Column::Bc,
            Some(SymbolClass::D) => Table2Column::SoPlus,
            Some(SymbolClass::TwistedD) => Table2Column::SoMinus,
        }
    }

    /// A representative series for the column.
    pub fn series(self) -> Series {
        match self {
            Table2Column::Gl => Series::A,
            Table2Column::Bc => Series::C,
            Table2Column::SoPlus => Series::D,
            Table2Column::SoMinus => Series::TwistedD,
        }
    }

    pub fn class(self) -> Option<SymbolClass> {
        SymbolClass::of_series(self.series())
    }
}

impl FromStr for Table2Column {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "GL" => Ok(Table2Column::Gl),
            "B/C" | "BC" => Ok(Table2Column::Bc),
            "SO+" => Ok(Table2Column::SoPlus),
            "SO-" => Ok(Table2Column::SoMinus),
            _ => Err(Error::Parse(format!("unknown column '{s}'"))),
        }
    }
}

impl fmt::Display for Table2Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Table2Column::Gl => "GL",
            Table2Column::Bc => "B/C",
            Table2Column::SoPlus => "SO+",
            Table2Column::SoMinus => "SO-",
        })
    }
}

/// Rows of the table of cores, keyed by `m = w1·e_p + m1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Table2Row {
    #[serde(rename = "m=0")]
    MZero,
    #[serde(rename = "m1=0,m>0")]
    M1Zero,
    #[serde(rename = "m1>0,w1=0")]
    W1Zero,
    #[serde(rename = "m1>0,w1=1")]
    W1One,
    #[serde(rename = "m1>0,w1>=2")]
    W1AtLeastTwo,
}

impl Table2Row {
    pub fn of(e_p: usize, m: usize) -> Table2Row {
        let (w1, m1) = (m / e_p, m % e_p);
        match (m, m1, w1) {
            (0, _, _) => Table2Row::MZero,
            (_, 0, _) => Table2Row::M1Zero,
            (_, _, 0) => Table2Row::W1Zero,
            (_, _, 1) => Table2Row::W1One,
            _ => Table2Row::W1AtLeastTwo,
        }
    }
}

fn span(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

fn hook_partition(big: &[usize], ones: usize) -> Partition {
    let mut v = big.to_vec();
    v.extend(std::iter::repeat(1).take(ones));
    Partition::from_unsorted(v)
}

/// The tabulated `e_q`-core of rank `e_q + m` with trivial `e_p`-core, as
/// written, without verification.
pub fn table2_entry(column: Table2Column, e_p: usize, e_q: usize, m: usize) -> Result<Label> {
    if e_p == 0 || e_q <= e_p || e_q % e_p != 0 || m >= e_q {
        return Err(Error::OutsideTable(format!(
            "need e_p | e_q, e_p < e_q and m < e_q; got e_p = {e_p}, e_q = {e_q}, m = {m}"
        )));
    }
    let row = Table2Row::of(e_p, m);
    let m1 = m % e_p;
    let sym = |x: Vec<usize>, y: Vec<usize>| Symbol::new(x, y).map(Label::Symbol);
    use Table2Column as C;
    use Table2Row as R;
    match (column, row) {
        (C::Gl, R::MZero) if e_p == 1 => {
            Err(Error::OutsideTable("the m = 0 entry for GL needs e_p != 1".into()))
        }
        (C::Gl, R::MZero) => Ok(Label::Partition(Partition::from_unsorted(vec![e_p, e_q - e_p]))),
        (C::Gl, R::M1Zero) => Ok(Label::Partition(hook_partition(&[e_q], m))),
        (C::Gl, R::W1Zero) => Ok(Label::Partition(hook_partition(&[m + e_p], e_q - e_p))),
        (C::Gl, R::W1One) => Ok(Label::Partition(hook_partition(&[e_q - 1, m1 + 1], e_p))),
        (C::Gl, R::W1AtLeastTwo) => {
            Ok(Label::Partition(hook_partition(&[e_p + 1, m - e_p], e_q - 1)))
        }

        (C::Bc, R::MZero) => sym(vec![0, e_q - e_p + 1], vec![e_p]),
        (C::Bc, R::M1Zero) => sym([span(1, m), vec![e_q + m]].concat(), span(0, m - 1)),
        (C::Bc, R::W1Zero) => {
            sym([span(1, e_q - e_p), vec![e_q + m]].concat(), (0..e_q - e_p).collect())
        }
        (C::Bc, R::W1One | R::W1AtLeastTwo) => sym(
            [span(1, e_q - 1), vec![e_q + e_p]].concat(),
            [span(0, e_q - 1), vec![m + e_q - e_p]].concat(),
        ),

        (C::SoPlus, R::MZero) => sym(vec![e_q - e_p], vec![e_p]),
        (C::SoPlus, R::M1Zero) => sym([span(1, m), vec![e_q + m]].concat(), span(0, m)),
        (C::SoPlus, R::W1Zero) => {
            sym([span(1, e_q - e_p), vec![e_q + m]].concat(), span(0, e_q - e_p))
        }
        (C::SoPlus, R::W1One) => {
            sym([span(1, e_q - 1), vec![m1 + e_q, e_q + e_p]].concat(), span(0, e_q))
        }
        (C::SoPlus, R::W1AtLeastTwo) => sym(
            [span(1, e_q - 1), vec![e_q + e_p, m + e_q - e_p]].concat(),
            span(0, e_q),
        ),

        (C::SoMinus, R::MZero) => sym(vec![e_p, e_q - e_p], vec![]),
        (C::SoMinus, R::M1Zero) => sym([span(0, m), vec![e_q + m]].concat(), span(1, m)),
        (C::SoMinus, R::W1Zero) => {
            sym([span(0, e_q - e_p), vec![e_q + m]].concat(), span(1, e_q - e_p))
        }
        (C::SoMinus, R::W1One | R::W1AtLeastTwo) => sym(
            [span(1, e_q - 1), vec![e_q + e_p]].concat(),
            [span(0, e_q), vec![m + e_q - e_p]].concat(),
        ),
    }
}

/// [`table2_entry`] for the column of `series`.
pub fn table2_witness(series: Series, e_p: usize, e_q: usize, m: usize) -> Result<Label> {
    table2_entry(Table2Column::of_series(series), e_p, e_q, m)
}

/// Outcome of checking a tabulated entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Table2Check {
    pub rank: usize,
    pub rank_ok: bool,
    pub series_ok: bool,
    pub is_e_q_core: bool,
    pub trivial_e_p_core: bool,
}

impl Table2Check {
    pub fn passed(&self) -> bool {
        self.rank_ok && self.series_ok && self.is_e_q_core && self.trivial_e_p_core
    }
}

/// Brute-force check of a tabulated entry: an `e_q`-core of rank `e_q + m`
/// of the right series, with trivial `e_p`-core.
pub fn verify_table2(label: &Label, column: Table2Column, e_p: usize, e_q: usize, m: usize) -> Table2Check {
    let rank = label.rank();
    let rank_ok = rank == e_q + m;
    match (label, column.class()) {
        (Label::Partition(p), None) => Table2Check {
            rank,
            rank_ok,
            series_ok: true,
            is_e_q_core: partitions::is_e_core(p, e_q),
            trivial_e_p_core: partitions::e_core(p, e_p) == partitions::e_core(&Partition::row(rank), e_p),
        },
        (Label::Symbol(s), Some(class)) => Table2Check {
            rank,
            rank_ok,
            series_ok: s.class() == class,
            is_e_q_core: e_core_symbol(s, e_q) == *s,
            trivial_e_p_core: has_trivial_core(s, e_p),
        },
        _ => Table2Check { rank, rank_ok, series_ok: false, is_e_q_core: false, trivial_e_p_core: false },
    }
}

/// Candidate lifts of a core of rank `e_q + m` to rank `e_q·w + m`, each
/// named by its construction.
///
/// Partitions: append `e_q(w-1)` parts equal to 1, or add `e_q(w-1)` to the
/// largest part. Symbols in core mode: add `e_q(w-1)` to the largest entry of
/// a row. Symbols in cocore mode: the row holding the overall largest entry
/// `x` gives up `x`, and `x + e_q(w-1)` goes back to the same row when `w-1`
/// is even, to the other row when it is odd.
pub fn lift_core_to_rank(
    core: &Label,
    n: usize,
    w: usize,
    e_q: usize,
    cocore_mode: bool,
) -> Result<Vec<(&'static str, Label)>> {
    if w == 0 || core.rank() + (w - 1) * e_q != n {
        return Err(Error::RankMismatch { expected: n, actual: core.rank() + w.saturating_sub(1) * e_q });
    }
    if w == 1 {
        return Ok(vec![("core", core.clone())]);
    }
    let k = e_q * (w - 1);
    let mut out = Vec::new();
    match core {
        Label::Partition(p) => {
            let mut col = p.parts().to_vec();
            col.extend(std::iter::repeat(1).take(k));
            out.push(("append ones", Label::Partition(Partition::from_unsorted(col))));
            let mut row = p.parts().to_vec();
            if let Some(first) = row.first_mut() {
                *first += k;
            } else {
                row.push(k);
            }
            out.push(("extend largest part", Label::Partition(Partition::from_unsorted(row))));
        }
        Label::Symbol(s) => {
            let max_of = |r: Row| s.row(r).last().copied();
            let overall = max_of(Row::Top).max(max_of(Row::Bottom));
            for row in [Row::Top, Row::Bottom] {
                let Some(x) = max_of(row) else { continue };
                let (mut t, mut b) = s.rows_mut();
                if !cocore_mode {
                    let r = if row == Row::Top { &mut t } else { &mut b };
                    *r.last_mut().expect("nonempty row") += k;
                    out.push(("extend largest entry", Label::Symbol(Symbol::canonical(t, b))));
                } else if Some(x) == overall {
                    let (from, to) = if row == Row::Top { (&mut t, &mut b) } else { (&mut b, &mut t) };
                    from.pop();
                    if (w - 1) % 2 == 0 {
                        from.push(x + k);
                        out.push(("extend largest entry", Label::Symbol(Symbol::canonical(t, b))));
                    } else {
                        to.push(x + k);
                        out.push(("move largest entry across", Label::Symbol(Symbol::canonical(t, b))));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// A verified lift of a tabulated core.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table2Lift {
    pub column: Table2Column,
    pub e_p: usize,
    pub e_q: usize,
    pub n: usize,
    pub m: usize,
    pub w: usize,
    pub cocore_mode: bool,
    /// The tabulated entry, taken from column `source`.
    pub core: Label,
    pub source: Table2Column,
    /// The twisted entry and the shift used, in cocore mode.
    pub twist: Option<(usize, Symbol)>,
    pub witness: Label,
    pub construction: &'static str,
}

/// True when `label` has rank `n`, lies in the column's series, has
/// `e_q`-core (cocore) equal to `expected` and trivial `e_p`-core (cocore).
pub fn verify_lift(
    label: &Label,
    column: Table2Column,
    e_p: usize,
    e_q: usize,
    n: usize,
    expected: &Label,
    cocore_mode: bool,
) -> bool {
    if label.rank() != n {
        return false;
    }
    match (label, expected, column.class()) {
        (Label::Partition(p), Label::Partition(core), None) => {
            partitions::e_core(p, e_q) == *core
                && partitions::e_core(p, e_p) == partitions::e_core(&Partition::row(n), e_p)
        }
        (Label::Symbol(s), Label::Symbol(core), Some(class)) if s.class() == class => {
            if cocore_mode {
                e_cocore_symbol(s, e_q) == *core && has_trivial_cocore(s, e_p)
            } else {
                e_core_symbol(s, e_q) == *core && has_trivial_core(s, e_p)
            }
        }
        _ => false,
    }
}

/// Lift the tabulated entry of `column` to rank `n`. In cocore mode the
/// entry is first twisted by `e_p` (this needs `e_q / e_p` odd), and twists
/// at successive shifts are tried until a lift lands in the column's series
/// and verifies. Every returned lift has passed [`verify_lift`].
pub fn table2_lift(
    column: Table2Column,
    e_p: usize,
    e_q: usize,
    n: usize,
    cocore_mode: bool,
) -> Result<Table2Lift> {
    let (w, m) = (n / e_q, n % e_q);
    if w == 0 {
        return Err(Error::RankMismatch { expected: n, actual: e_q + m });
    }
    let core = table2_entry(column, e_p, e_q, m)?;
    let make = |twist: Option<(usize, Symbol)>, witness: Label, construction| Table2Lift {
        column,
        e_p,
        e_q,
        n,
        m,
        w,
        cocore_mode,
        core: core.clone(),
        source: column,
        twist,
        witness,
        construction,
    };
    let failed = || Error::ConstructionFailed(format!("{column} e_p = {e_p}, e_q = {e_q}, n = {n}"));
    if !cocore_mode {
        return lift_core_to_rank(&core, n, w, e_q, false)?
            .into_iter()
            .find(|(_, l)| verify_lift(l, column, e_p, e_q, n, &core, false))
            .map(|(name, l)| make(None, l, name))
            .ok_or_else(failed);
    }
    if !matches!(core, Label::Symbol(_)) {
        return Err(Error::OutsideTable("cocores apply to symbols only".into()));
    }
    if (e_q / e_p) % 2 == 0 {
        return Err(Error::OutsideTable(format!("e_q / e_p = {} is even", e_q / e_p)));
    }
    // A twist can change D into 2D, so for the orthogonal columns the entry
    // of the other orthogonal column is also twisted.
    let sources: &[Table2Column] = match column {
        Table2Column::SoPlus => &[Table2Column::SoPlus, Table2Column::SoMinus],
        Table2Column::SoMinus => &[Table2Column::SoMinus, Table2Column::SoPlus],
        _ => &[column],
    };
    for &source in sources {
        let Ok(Label::Symbol(mu)) = table2_entry(source, e_p, e_q, m) else { continue };
        for (shift, twisted) in olsson_twists(&mu, e_p)? {
            let tl = Label::Symbol(twisted.clone());
            for (name, l) in lift_core_to_rank(&tl, n, w, e_q, true)? {
                if verify_lift(&l, column, e_p, e_q, n, &tl, true) {
                    let mut out = make(Some((shift, twisted)), l, name);
                    out.core = Label::Symbol(mu);
                    out.source = source;
                    return Ok(out);
                }
            }
        }
    }
    Err(failed())
}

/// Result of one lift attempt at rank `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftOutcome {
    pub n: usize,
    pub cocore_mode: bool,
    pub witness: Option<Label>,
    pub construction: Option<String>,
    pub error: Option<String>,
}

impl LiftOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_some()
    }
}

/// The twist contract for one symbol entry with `e_q / e_p` odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistCheck {
    pub shift: usize,
    pub twist: Symbol,
    pub rank_equal: bool,
    pub trivial_e_p_cocore: bool,
    /// No removable `e_q`-cohook, checked by listing cohooks directly.
    pub is_e_q_cocore: bool,
}

impl TwistCheck {
    pub fn passed(&self) -> bool {
        self.rank_equal && self.trivial_e_p_cocore && self.is_e_q_cocore
    }
}

/// Everything checked for one table cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table2Point {
    pub column: Table2Column,
    pub e_p: usize,
    pub e_q: usize,
    pub m: usize,
    pub row: Table2Row,
    pub entry: Option<Label>,
    pub entry_error: Option<String>,
    pub check: Option<Table2Check>,
    pub lifts: Vec<LiftOutcome>,
    /// Present for symbol columns with `e_q / e_p` odd.
    pub twists: Option<Vec<TwistCheck>>,
}

impl Table2Point {
    pub fn entry_passed(&self) -> bool {
        self.check.as_ref().is_some_and(Table2Check::passed)
    }

    pub fn lifts_passed(&self) -> bool {
        self.lifts.iter().all(LiftOutcome::passed)
    }

    pub fn twists_passed(&self) -> bool {
        self.twists.as_ref().map_or(true, |t| !t.is_empty() && t.iter().all(TwistCheck::passed))
    }

    pub fn passed(&self) -> bool {
        self.entry_passed() && self.lifts_passed() && self.twists_passed()
    }
}

/// True when the column has a cell at `(e_p, e_q, m)`.
pub fn table2_cell_exists(column: Table2Column, e_p: usize, e_q: usize, m: usize) -> bool {
    e_p >= 1 && e_q > e_p && e_q % e_p == 0 && m < e_q && !(column == Table2Column::Gl && m == 0 && e_p == 1)
}

/// Checks one cell: the entry, its lifts to every rank `w·e_q + m` up to
/// `n_max` (core mode, and cocore mode when `e_q / e_p` is odd for symbol
/// columns) and the twist contract.
pub fn table2_point(column: Table2Column, e_p: usize, e_q: usize, m: usize, n_max: usize) -> Table2Point {
    let entry = table2_entry(column, e_p, e_q, m);
    let check = entry.as_ref().ok().map(|l| verify_table2(l, column, e_p, e_q, m));
    let odd = (e_q / e_p) % 2 == 1;
    let symbols = column != Table2Column::Gl;
    let mut lifts = Vec::new();
    for cocore_mode in [false, true] {
        if cocore_mode && !(symbols && odd) {
            continue;
        }
        let mut n = e_q + m;
        while n <= n_max {
            lifts.push(match table2_lift(column, e_p, e_q, n, cocore_mode) {
                Ok(l) => LiftOutcome {
                    n,
                    cocore_mode,
                    witness: Some(l.witness),
                    construction: Some(l.construction.to_string()),
                    error: None,
                },
                Err(e) => LiftOutcome { n, cocore_mode, witness: None, construction: None, error: Some(e.to_string()) },
            });
            n += e_q;
        }
    }
    let twists = match (&entry, symbols && odd) {
        (Ok(Label::Symbol(mu)), true) => Some(match olsson_twists(mu, e_p) {
            Ok(ts) => ts
                .into_iter()
                .map(|(shift, t)| TwistCheck {
                    shift,
                    rank_equal: t.rank() == mu.rank(),
                    trivial_e_p_cocore: has_trivial_cocore(&t, e_p),
                    is_e_q_cocore: t.removable_cohooks(e_q).is_empty(),
                    twist: t,
                })
                .collect(),
            Err(_) => Vec::new(),
        }),
        (Err(_), true) => Some(Vec::new()),
        _ => None,
    };
    Table2Point {
        column,
        e_p,
        e_q,
        m,
        row: Table2Row::of(e_p, m),
        entry_error: entry.as_ref().err().map(|e| e.to_string()),
        entry: entry.ok(),
        check,
        lifts,
        twists,
    }
}

/// All cells with `e_q ≤ eq_max`, in a fixed order.
pub fn table2_grid(eq_max: usize) -> Vec<(Table2Column, usize, usize, usize)> {
    let mut out = Vec::new();
    for column in Table2Column::ALL {
        for e_q in 2..=eq_max {
            for e_p in 1..e_q {
                for m in 0..e_q {
                    if table2_cell_exists(column, e_p, e_q, m) {
                        out.push((column, e_p, e_q, m));
                    }
                }
            }
        }
    }
    out
}
