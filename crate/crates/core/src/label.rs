//! Unipotent character labels: partitions for `GL_n(±r)`, symbols otherwise.

use std::fmt;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::arith::{GenericDegree, Series};
use crate::error::{Error, Result};
use crate::partitions::{self, Partition};
use crate::symbols::{self, Symbol, SymbolClass};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Partition(Partition),
    Symbol(Symbol),
}

impl Label {
    pub fn rank(&self) -> usize {
        match self {
            Label::Partition(p) => p.size(),
            Label::Symbol(s) => s.rank(),
        }
    }

    pub fn as_partition(&self) -> Option<&Partition> {
        match self {
            Label::Partition(p) => Some(p),
            Label::Symbol(_) => None,
        }
    }

    pub fn as_symbol(&self) -> Option<&Symbol> {
        match self {
            Label::Symbol(s) => Some(s),
            Label::Partition(_) => None,
        }
    }

    /// Label of the trivial character of the given series and rank.
    pub fn trivial(series: Series, n: usize) -> Result<Label> {
        match SymbolClass::of_series(series) {
            None => Ok(Label::Partition(Partition::row(n))),
            Some(class) => class.trivial(n).map(Label::Symbol),
        }
    }

    /// Checks that the label has the shape required by `series`.
    pub fn check_series(&self, series: Series) -> Result<()> {
        match (self, SymbolClass::of_series(series)) {
            (Label::Partition(_), None) => Ok(()),
            (Label::Symbol(s), Some(class)) if s.class() == class => Ok(()),
            (Label::Symbol(s), Some(_)) => {
                Err(Error::DefectMismatch { defect: s.defect(), series: series.to_string() })
            }
            _ => Err(Error::SeriesMismatch),
        }
    }

    pub fn generic_degree(&self) -> Result<GenericDegree> {
        match self {
            Label::Partition(p) => partitions::generic_degree_type_a(p),
            Label::Symbol(s) => symbols::generic_degree_symbol(s, s.class()),
        }
    }

    /// Degree of the character at field size `r`. Partitions are read with
    /// the sign of `series` (`GL` or `GU`).
    pub fn degree_value(&self, series: Series, r: u64) -> Result<BigUint> {
        self.check_series(series)?;
        match self {
            Label::Partition(p) => partitions::degree_value_type_a(p, series.eps(), r),
            Label::Symbol(s) => symbols::degree_value_symbol(s, r),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Partition(p) => p.fmt(f),
            Label::Symbol(s) => s.fmt(f),
        }
    }
}

impl From<Partition> for Label {
    fn from(p: Partition) -> Self {
        Label::Partition(p)
    }
}

impl From<Symbol> for Label {
    fn from(s: Symbol) -> Self {
        Label::Symbol(s)
    }
}

/// A label tied to its series, with the generic degree computed on first use.
#[derive(Debug, Clone)]
pub struct UnipotentLabel {
    label: Label,
    series: Series,
    degree: OnceLock<GenericDegree>,
}

impl UnipotentLabel {
    pub fn new(label: Label, series: Series) -> Result<Self> {
        label.check_series(series)?;
        Ok(UnipotentLabel { label, series, degree: OnceLock::new() })
    }

    pub fn label(&self) -> &Label {
        &self.label
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.label.rank()
    }

    /// Two characters share a label when the symbol is degenerate.
    pub fn multiplicity(&self) -> usize {
        match &self.label {
            Label::Symbol(s) => s.multiplicity(),
            Label::Partition(_) => 1,
        }
    }

    pub fn generic_degree(&self) -> &GenericDegree {
        self.degree.get_or_init(|| {
            self.label.generic_degree().expect("labels are validated on construction")
        })
    }

    /// Exact degree at `r`, from the cached generic degree.
    pub fn degree_value(&self, r: u64) -> Result<BigUint> {
        let x = BigInt::from(self.series.eps().value()) * BigInt::from(r);
        Ok(self.generic_degree().evaluate(&x)?.magnitude().clone())
    }
}

impl PartialEq for UnipotentLabel {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label && self.series == other.series
    }
}

impl Eq for UnipotentLabel {}

impl std::hash::Hash for UnipotentLabel {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.label.hash(state);
        self.series.hash(state);
    }
}

/// All labels of unipotent characters of the given series and rank.
pub fn enumerate_labels(series: Series, n: usize) -> Result<Vec<UnipotentLabel>> {
    let labels: Vec<Label> = match SymbolClass::of_series(series) {
        None => partitions::enumerate_partitions(n, partitions::DEFAULT_PARTITION_BOUND)?
            .into_iter()
            .map(Label::Partition)
            .collect(),
        Some(class) => symbols::enumerate_symbols(class, n, symbols::DEFAULT_SYMBOL_BOUND)?
            .into_iter()
            .map(Label::Symbol)
            .collect(),
    };
    labels.into_iter().map(|l| UnipotentLabel::new(l, series)).collect()
}

type LabelCache = Mutex<HashMap<(Series, usize), Arc<[UnipotentLabel]>>>;

/// [`enumerate_labels`], memoized per `(series, n)` so that sweeps share the
/// cached generic degrees.
pub fn labels_cached(series: Series, n: usize) -> Result<Arc<[UnipotentLabel]>> {
    static CACHE: OnceLock<LabelCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(series, n)) {
        return Ok(v.clone());
    }
    let v: Arc<[UnipotentLabel]> = enumerate_labels(series, n)?.into();
    Ok(cache.lock().unwrap().entry((series, n)).or_insert(v).clone())
}
