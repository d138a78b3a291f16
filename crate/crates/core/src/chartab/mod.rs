//! Exact character tables, central characters and principal `p`-blocks.
//!
//! Two irreducible characters lie in the same `p`-block iff their central
//! characters `ω_χ(K) = |K|χ(g_K)/χ(1)` agree modulo a prime ideal above
//! `p`. The principal block is the class of the trivial character, whose
//! central character is `K ↦ |K|`.

pub mod cyclotomic;
pub mod finite_field;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use cyclotomic::{CyclotomicField, CyclotomicNumber};
pub use finite_field::{FiniteField, IdealChoice, ReductionMap};

use crate::arith::{prime_divisors_big, Series};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub size: BigUint,
    pub element_order: u64,
}

/// A validated table of irreducible characters. Row 0 is the trivial
/// character and column 0 the identity class.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub name: String,
    pub order: BigUint,
    pub classes: Vec<ClassInfo>,
    field: CyclotomicField,
    irreducibles: Vec<Vec<CyclotomicNumber>>,
    degrees: Vec<BigUint>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    name: String,
    order: String,
    conductor: usize,
    classes: Vec<RawClass>,
    irreducibles: Vec<Vec<RawValue>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClass {
    size: String,
    element_order: u64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawValue {
    Integer(String),
    Terms(Vec<(i64, RawInt, RawInt)>),
}

/// Triple entries are JSON integers; decimal strings are accepted for values
/// beyond 64 bits.
#[derive(Deserialize)]
#[serde(untagged)]
enum RawInt {
    Small(i64),
    Big(String),
}

impl RawInt {
    fn value(&self, what: &str) -> Result<BigInt> {
        match self {
            RawInt::Small(v) => Ok(BigInt::from(*v)),
            RawInt::Big(s) => parse_int(s, what),
        }
    }
}

fn parse_int(s: &str, what: &str) -> Result<BigInt> {
    s.parse::<BigInt>().map_err(|_| Error::Schema(format!("{what}: '{s}' is not a decimal integer")))
}

fn parse_nat(s: &str, what: &str) -> Result<BigUint> {
    s.parse::<BigUint>().map_err(|_| Error::Schema(format!("{what}: '{s}' is not a non-negative decimal integer")))
}

fn invariant(ok: bool, name: &str, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::TableInvariant(format!("{name} fails: {}", detail())))
    }
}

/// Parses a JSON table and checks every invariant: square shape, trivial
/// first row, identity first column, `Σ |K| = |G|`, `|K|` divides `|G|`,
/// positive integral degrees with `Σ χ(1)² = |G|`, row orthogonality and
/// integrality of all central characters.
pub fn parse_table(document: &str) -> Result<CharacterTable> {
    let raw: RawTable = serde_json::from_str(document).map_err(|e| Error::Schema(e.to_string()))?;
    if raw.conductor == 0 {
        return Err(Error::Schema("conductor must be positive".into()));
    }
    let order = parse_nat(&raw.order, "order")?;
    let field = CyclotomicField::new(raw.conductor)?;
    let classes = raw
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| Ok(ClassInfo { size: parse_nat(&c.size, &format!("class {i} size"))?, element_order: c.element_order }))
        .collect::<Result<Vec<_>>>()?;
    let h = classes.len();
    if h == 0 {
        return Err(Error::Schema("no classes".into()));
    }
    let mut irreducibles = Vec::with_capacity(raw.irreducibles.len());
    for (i, row) in raw.irreducibles.iter().enumerate() {
        if row.len() != h {
            return Err(Error::Schema(format!("row {i} has {} values for {h} classes", row.len())));
        }
        let mut values = Vec::with_capacity(h);
        for (j, v) in row.iter().enumerate() {
            let what = format!("value ({i},{j})");
            values.push(match v {
                RawValue::Integer(s) => field.integer(parse_int(s, &what)?),
                RawValue::Terms(ts) => {
                    let mut terms = Vec::with_capacity(ts.len());
                    for (e, n, d) in ts {
                        if *e < 0 || *e as usize >= raw.conductor {
                            return Err(Error::Schema(format!("{what}: exponent {e} outside 0..{}", raw.conductor)));
                        }
                        terms.push((*e, n.value(&what)?, d.value(&what)?));
                    }
                    field.from_terms(&terms).map_err(|e| Error::Schema(format!("{what}: {e}")))?
                }
            });
        }
        irreducibles.push(values);
    }
    invariant(irreducibles.len() == h, "#irreducibles = #classes", || {
        format!("{} rows, {h} classes", irreducibles.len())
    })?;

    let total: BigUint = classes.iter().map(|c| &c.size).sum();
    invariant(total == order, "Σ class sizes = |G|", || format!("{total} ≠ {order}"))?;
    for (i, c) in classes.iter().enumerate() {
        invariant(!c.size.is_zero() && (&order % &c.size).is_zero(), "class sizes divide |G|", || {
            format!("class {i} has size {}", c.size)
        })?;
    }
    invariant(classes[0].size.is_one() && classes[0].element_order == 1, "first class is the identity", || {
        format!("size {}, element order {}", classes[0].size, classes[0].element_order)
    })?;
    invariant(irreducibles[0].iter().all(|v| v.as_integer() == Some(BigInt::one())), "first row is trivial", || {
        "a value differs from 1".into()
    })?;

    let mut degrees = Vec::with_capacity(h);
    for (i, row) in irreducibles.iter().enumerate() {
        match row[0].as_integer() {
            Some(d) if d.is_positive() => degrees.push(d.magnitude().clone()),
            _ => {
                return Err(Error::TableInvariant(format!(
                    "degrees are positive integers fails: character {i}"
                )))
            }
        }
    }
    for i in 0..h {
        for j in 0..i {
            invariant(irreducibles[i] != irreducibles[j], "irreducibles are distinct", || {
                format!("characters {j} and {i} coincide")
            })?;
        }
    }
    let sum_sq: BigUint = degrees.iter().map(|d| d * d).sum();
    invariant(sum_sq == order, "Σ degrees² = |G|", || format!("{sum_sq} ≠ {order}"))?;

    let order_int = BigInt::from(order.clone());
    for (i, row) in irreducibles.iter().enumerate() {
        let mut acc = vec![BigInt::zero(); field.conductor()];
        let mut den = BigInt::one();
        for v in row {
            den = den.lcm(v.denominator());
        }
        let den2 = &den * &den;
        for (v, c) in row.iter().zip(&classes) {
            // clear denominators so the accumulator stays integral
            let f = &den / v.denominator();
            let w = BigInt::from(c.size.clone()) * &f * &f;
            field.accumulate_norm(&mut acc, &w, v);
        }
        let norm = field.from_exponents(&acc, &den2)?;
        invariant(norm.as_integer().as_ref() == Some(&order_int), "row orthogonality", || {
            format!("character {i}: Σ |K| |χ(g_K)|² ≠ |G|")
        })?;
    }

    let table = CharacterTable { name: raw.name, order, classes, field, irreducibles, degrees };
    for chi in 0..h {
        for k in 0..h {
            table.central_character(chi, k)?;
        }
    }
    Ok(table)
}

impl CharacterTable {
    pub fn conductor(&self) -> usize {
        self.field.conductor()
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn degrees(&self) -> &[BigUint] {
        &self.degrees
    }

    pub fn value(&self, chi: usize, class: usize) -> Result<&CyclotomicNumber> {
        self.irreducibles
            .get(chi)
            .and_then(|r| r.get(class))
            .ok_or_else(|| Error::Index(format!("({chi}, {class})")))
    }

    /// Distinct primes dividing `|G|`.
    pub fn primes(&self) -> Vec<u64> {
        prime_divisors_big(&self.order)
    }

    /// `ω_χ(K) = |K| χ(g_K) / χ(1)`, which must be an algebraic integer.
    pub fn central_character(&self, chi: usize, class: usize) -> Result<CyclotomicNumber> {
        let v = self.value(chi, class)?;
        let size = BigInt::from(self.classes[class].size.clone());
        let deg = BigInt::from(self.degrees[chi].clone());
        let w = v.scale(&size, &deg);
        if !w.is_integral() {
            return Err(Error::NonIntegral { chi, class });
        }
        Ok(w)
    }
}

/// Indices of the characters in the principal `p`-block.
pub fn principal_block(table: &CharacterTable, p: u64) -> Result<Vec<usize>> {
    principal_block_with(table, p, IdealChoice::Smallest)
}

pub fn principal_block_with(table: &CharacterTable, p: u64, choice: IdealChoice) -> Result<Vec<usize>> {
    if !crate::arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !(&table.order % p).is_zero() {
        return Err(Error::PrimeNotDividing { p });
    }
    let map = ReductionMap::new(table.conductor(), p, choice)?;
    let sizes: Vec<Vec<u64>> =
        table.classes.iter().map(|c| map.reduce_integer(&BigInt::from(c.size.clone()))).collect();
    let mut block = Vec::new();
    'chars: for chi in 0..table.num_classes() {
        for (k, size) in sizes.iter().enumerate() {
            if map.reduce(&table.central_character(chi, k)?)? != *size {
                continue 'chars;
            }
        }
        block.push(chi);
    }
    if block.first() != Some(&0) {
        return Err(Error::TableInvariant("trivial character in the principal block fails".into()));
    }
    Ok(block)
}

/// `(group, p, q)` triples where the principal `p`-block of the sporadic
/// group has no irreducible character of degree divisible by `q`.
pub const SPORADIC_EXCEPTIONS: &[(&str, u64, u64)] = &[
    ("J1", 2, 3),
    ("J1", 2, 5),
    ("J1", 3, 5),
    ("J1", 5, 3),
    ("J4", 5, 7),
    ("J4", 7, 5),
    ("J4", 7, 11),
    ("M11", 5, 3),
    ("M22", 7, 2),
];

/// The exceptions above for which the group has no `p`-nilpotent Hall
/// `{p, q}`-subgroup. Recorded, not computed.
pub const NO_P_NILPOTENT_HALL: &[(&str, u64, u64)] =
    &[("J1", 2, 3), ("J1", 2, 5), ("J4", 7, 11), ("M11", 5, 3), ("M22", 7, 2)];

/// Expected exception pairs for a group, or `None` if it is not listed.
pub fn expected_exceptions(name: &str) -> Option<Vec<(u64, u64)>> {
    let known = ["J1", "J4", "M11", "M22"];
    known.contains(&name).then(|| {
        SPORADIC_EXCEPTIONS.iter().filter(|(g, _, _)| *g == name).map(|&(_, p, q)| (p, q)).collect()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairFlag {
    pub p: u64,
    pub q: u64,
    /// Some character of the principal `p`-block has degree divisible by `q`.
    pub flag: bool,
    /// Index of the first such character.
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub name: String,
    pub order: String,
    pub principal_blocks: BTreeMap<u64, Vec<usize>>,
    pub pairs: Vec<PairFlag>,
    pub exceptions: Vec<(u64, u64)>,
    pub expected_exceptions: Option<Vec<(u64, u64)>>,
    /// Found exceptions equal the expected ones; `None` for unlisted groups.
    pub matches: Option<bool>,
    pub no_p_nilpotent_hall: Vec<(u64, u64)>,
}

impl BlockReport {
    pub fn flag(&self, p: u64, q: u64) -> Option<bool> {
        self.pairs.iter().find(|f| f.p == p && f.q == q).map(|f| f.flag)
    }
}

/// Principal-block degree flags for every ordered pair of distinct primes
/// dividing `|G|`, compared with the exception constants.
pub fn verify_sporadic(table: &CharacterTable, exceptions: &[(&str, u64, u64)]) -> Result<BlockReport> {
    let primes = table.primes();
    let mut principal_blocks = BTreeMap::new();
    for &p in &primes {
        principal_blocks.insert(p, principal_block(table, p)?);
    }
    let mut pairs = Vec::new();
    for &p in &primes {
        for &q in primes.iter().filter(|&&q| q != p) {
            let witness = principal_blocks[&p].iter().copied().find(|&chi| (&table.degrees[chi] % q).is_zero());
            pairs.push(PairFlag { p, q, flag: witness.is_some(), witness });
        }
    }
    let found: Vec<(u64, u64)> = pairs.iter().filter(|f| !f.flag).map(|f| (f.p, f.q)).collect();
    let listed = ["J1", "J4", "M11", "M22"].contains(&table.name.as_str());
    let expected: Option<Vec<(u64, u64)>> = listed.then(|| {
        exceptions.iter().filter(|(g, _, _)| *g == table.name).map(|&(_, p, q)| (p, q)).collect()
    });
    let matches = expected.as_ref().map(|e| {
        let mut e = e.clone();
        e.sort_unstable();
        let mut f = found.clone();
        f.sort_unstable();
        e == f
    });
    Ok(BlockReport {
        name: table.name.clone(),
        order: table.order.to_string(),
        principal_blocks,
        pairs,
        exceptions: found,
        expected_exceptions: expected,
        matches,
        no_p_nilpotent_hall: NO_P_NILPOTENT_HALL
            .iter()
            .filter(|(g, _, _)| *g == table.name)
            .map(|&(_, p, q)| (p, q))
            .collect(),
    })
}

/// `(table name, series, n, r)` for fixtures whose unipotent character
/// degrees can be compared with the label degrees. Simple and perfect
/// groups of Lie type keep the unipotent degrees of the full group.
pub const UNIPOTENT_FIXTURES: &[(&str, Series, usize, u64)] = &[
    ("SL2(2)", Series::A, 2, 2),
    ("SL2(3)", Series::A, 2, 3),
    ("GL3(2)", Series::A, 3, 2),
    ("L4(2)", Series::A, 4, 2),
    ("L4(3)", Series::A, 4, 3),
    ("GU3(2)", Series::TwistedA, 3, 2),
    ("U4(2)", Series::TwistedA, 4, 2),
    ("U4(3)", Series::TwistedA, 4, 3),
    ("Sp4(2)", Series::C, 2, 2),
    ("Sp4(3)", Series::C, 2, 3),
    ("S6(2)", Series::C, 3, 2),
    ("S6(3)", Series::C, 3, 3),
    ("Omega+(4,2)", Series::D, 2, 2),
    ("Omega+(4,3)", Series::D, 2, 3),
    ("A5", Series::TwistedD, 2, 2),
    ("A6", Series::TwistedD, 2, 3),
    ("O8+(2)", Series::D, 4, 2),
    ("O8+(3)", Series::D, 4, 3),
    ("O8-(2)", Series::TwistedD, 4, 2),
];

pub fn unipotent_fixture(name: &str) -> Option<(Series, usize, u64)> {
    UNIPOTENT_FIXTURES.iter().find(|f| f.0 == name).map(|&(_, s, n, r)| (s, n, r))
}
