//! `dim L(λ) = Σ_{μ ≼ λ} |μ^W| m_λ(μ)`, closed-form table rows, and the
//! pruned search for all small irreducibles at a given rank.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::freudenthal::weyl_multiplicity;
use crate::multiplicity_oracles::{oracle_multiplicity, OracleSource};
use crate::prime::Prime;
use crate::realization::{irreducible_multiplicity_capped, DEFAULT_LATTICE_CAP};
use crate::root_system::{Rank, Weight};
use crate::weyl_orbits::{premet_lower_bound_capped, subdominant_weights, CappedBound};

/// Where each `m_λ(μ)` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Closed forms, then Weyl multiplicity one, then the Gram engine.
    #[default]
    OracleFirst,
    /// The Gram engine for every `μ`.
    GramOnly,
    /// Closed forms and Weyl multiplicity one only.
    OracleOnly,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::OracleFirst => "oracle-first",
            Strategy::GramOnly => "gram-only",
            Strategy::OracleOnly => "oracle-only",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle-first" => Ok(Strategy::OracleFirst),
            "gram-only" => Ok(Strategy::GramOnly),
            "oracle-only" => Ok(Strategy::OracleOnly),
            _ => Err(Error::Invalid(format!("unknown strategy {s:?}"))),
        }
    }
}

/// Resource limits for the Gram engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest total lattice rank held while building `V_Z`.
    pub lattice: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            lattice: DEFAULT_LATTICE_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Oracle(OracleSource),
    Gram,
    WeylMultiplicityOne,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Oracle(s) => write!(f, "oracle:{s}"),
            Provenance::Gram => f.write_str("gram"),
            Provenance::WeylMultiplicityOne => f.write_str("weyl-mult-1"),
        }
    }
}

impl Serialize for Provenance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn decimal<S: Serializer, T: fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BreakdownTerm {
    pub mu: Weight,
    #[serde(serialize_with = "decimal")]
    pub orbit: BigUint,
    pub multiplicity: u64,
    pub provenance: Provenance,
}

impl BreakdownTerm {
    pub fn contribution(&self) -> BigUint {
        &self.orbit * self.multiplicity
    }
}

/// `dim L(λ)` with one term per dominant `μ ≼ λ`, in lexicographic order of `μ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionResult {
    pub lambda: Weight,
    pub p: Prime,
    #[serde(serialize_with = "decimal")]
    pub value: BigUint,
    pub breakdown: Vec<BreakdownTerm>,
}

fn blocked(lambda: &Weight, mu: &Weight, err: Error) -> Error {
    match err {
        Error::ResourceExceeded { what, size, cap } => Error::ResourceExceeded {
            what: format!("m({mu}) in L({lambda}): {what}"),
            size,
            cap,
        },
        other => other,
    }
}

fn cheap_multiplicity(lambda: &Weight, mu: &Weight, p: Prime, strategy: Strategy) -> Result<Option<(u64, Provenance)>> {
    if strategy == Strategy::GramOnly {
        return Ok(None);
    }
    if let Some(r) = oracle_multiplicity(lambda, mu, p)? {
        return Ok(Some((r.value, Provenance::Oracle(r.source))));
    }
    if weyl_multiplicity(lambda, mu)? == 1 {
        return Ok(Some((1, Provenance::WeylMultiplicityOne)));
    }
    if strategy == Strategy::OracleOnly {
        return Err(Error::Uncomputable {
            lambda: lambda.clone(),
            mu: mu.clone(),
            strategy: strategy.name(),
        });
    }
    Ok(None)
}

fn gram_multiplicity(lambda: &Weight, mu: &Weight, p: Prime, limits: Limits) -> Result<u64> {
    irreducible_multiplicity_capped(lambda, mu, p, limits.lattice).map_err(|e| blocked(lambda, mu, e))
}

/// `m_λ(μ)` sourced per `strategy`.
pub fn multiplicity(
    lambda: &Weight,
    mu: &Weight,
    p: Prime,
    strategy: Strategy,
    limits: Limits,
) -> Result<(u64, Provenance)> {
    match cheap_multiplicity(lambda, mu, p, strategy)? {
        Some(found) => Ok(found),
        None => Ok((gram_multiplicity(lambda, mu, p, limits)?, Provenance::Gram)),
    }
}

fn check_input(lambda: &Weight, p: Prime) -> Result<()> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    if !lambda.is_restricted(p.get()) {
        return Err(Error::NotRestricted {
            weight: lambda.clone(),
            p: p.get(),
        });
    }
    Ok(())
}

pub fn dim_irreducible(lambda: &Weight, p: Prime, strategy: Strategy) -> Result<DimensionResult> {
    dim_irreducible_with(lambda, p, strategy, Limits::default())
}

pub fn dim_irreducible_with(lambda: &Weight, p: Prime, strategy: Strategy, limits: Limits) -> Result<DimensionResult> {
    Ok(dim_bounded(lambda, p, strategy, limits, None)?.expect("unbounded"))
}

/// `dim L(λ)` if it is at most `bound`, else `None`.
///
/// Unknown multiplicities count as 1 (Premet) while the sum is compared
/// with `bound`, so Gram computations stop once the answer is decided.
pub fn dim_bounded(
    lambda: &Weight,
    p: Prime,
    strategy: Strategy,
    limits: Limits,
    bound: Option<&BigUint>,
) -> Result<Option<DimensionResult>> {
    check_input(lambda, p)?;
    let subs = subdominant_weights(lambda)?;
    let mut terms: Vec<(Weight, BigUint, Option<(u64, Provenance)>)> = Vec::with_capacity(subs.len());
    for mu in subs {
        let orbit = crate::weyl_orbits::orbit_size(&mu)?;
        let known = cheap_multiplicity(lambda, &mu, p, strategy)?;
        terms.push((mu, orbit, known));
    }
    let over = |v: &BigUint| bound.is_some_and(|b| v > b);
    let mut running: BigUint = terms
        .iter()
        .map(|(_, orbit, known)| orbit * known.map_or(1, |k| k.0))
        .sum();
    if over(&running) {
        return Ok(None);
    }
    // Largest orbits first: they move the running lower bound fastest.
    let mut pending: Vec<usize> = (0..terms.len()).filter(|&i| terms[i].2.is_none()).collect();
    pending.sort_by(|&a, &b| terms[b].1.cmp(&terms[a].1).then(a.cmp(&b)));
    for i in pending {
        let m = gram_multiplicity(lambda, &terms[i].0, p, limits)?;
        assert!(m >= 1, "subdominant {} missing from L({lambda})", terms[i].0);
        running += &terms[i].1 * (m - 1);
        terms[i].2 = Some((m, Provenance::Gram));
        if over(&running) {
            return Ok(None);
        }
    }
    let breakdown: Vec<BreakdownTerm> = terms
        .into_iter()
        .map(|(mu, orbit, known)| {
            let (multiplicity, provenance) = known.expect("resolved");
            BreakdownTerm {
                mu,
                orbit,
                multiplicity,
                provenance,
            }
        })
        .collect();
    let value = breakdown.iter().map(BreakdownTerm::contribution).sum();
    Ok(Some(DimensionResult {
        lambda: lambda.clone(),
        p,
        value,
        breakdown,
    }))
}

/// Which list a closed-form row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableId {
    /// Dimensions at most `(l+1)^3`.
    Cubic,
    /// Further dimensions at most `(l+1)^4`.
    Quartic,
    /// Additions to the quartic list for smaller ranks.
    Remark,
}

type DimFn = fn(i128, &dyn Fn(i128) -> i128) -> i128;

/// A tabulated highest weight with its closed-form dimension.
#[derive(Clone, Copy)]
pub struct TableRow {
    pub id: &'static str,
    pub table: TableId,
    /// Terms `(index, coefficient)`; an index `-k` stands for `l - k`.
    terms: &'static [(i64, i64)],
    max_rank: Option<usize>,
    dim: DimFn,
}

impl fmt::Debug for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TableRow").field("id", &self.id).finish()
    }
}

fn c(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

const L: i64 = 0;

macro_rules! row {
    ($id:literal, $table:ident, [$(($i:expr, $a:expr)),*], $max:expr, |$l:ident, $e:ident| $body:expr) => {
        TableRow {
            id: $id,
            table: TableId::$table,
            terms: &[$(($i, $a)),*],
            max_rank: $max,
            dim: |$l, $e| $body,
        }
    };
}

/// Every row of the cubic and quartic lists and the remark, in printed order.
pub static TABLE_ROWS: [TableRow; 30] = [
    row!("t1:l1", Cubic, [(1, 1)], None, |l, _e| l + 1),
    row!("t1:l2", Cubic, [(2, 1)], None, |l, _e| c(l + 1, 2)),
    row!("t1:2l1", Cubic, [(1, 2)], None, |l, _e| c(l + 2, 2)),
    row!("t1:l1+ll", Cubic, [(1, 1), (L, 1)], None, |l, e| (l + 1) * (l + 1) - 1 - e(l + 1)),
    row!("t1:l3", Cubic, [(3, 1)], None, |l, _e| c(l + 1, 3)),
    row!("t1:3l1", Cubic, [(1, 3)], None, |l, _e| c(l + 3, 3)),
    row!("t1:l1+l2", Cubic, [(1, 1), (2, 1)], None, |l, e| 2 * c(l + 2, 3) - e(3) * c(l + 1, 3)),
    row!("t1:l1+llm1", Cubic, [(1, 1), (-1, 1)], None, |l, e| {
        3 * c(l + 2, 3) - c(l + 2, 2) - e(l) * (l + 1)
    }),
    row!("t1:2l1+ll", Cubic, [(1, 2), (L, 1)], None, |l, e| {
        3 * c(l + 2, 3) + c(l + 1, 2) - e(l + 2) * (l + 1)
    }),
    row!("t1:l4", Cubic, [(4, 1)], Some(28), |l, _e| c(l + 1, 4)),
    row!("t2:l4", Quartic, [(4, 1)], None, |l, _e| c(l + 1, 4)),
    row!("t2:4l1", Quartic, [(1, 4)], None, |l, _e| c(l + 4, 4)),
    row!("t2:2l2", Quartic, [(2, 2)], None, |l, e| {
        c(l + 1, 2) * c(l + 1, 2) - (l + 1) * c(l + 1, 3) - e(3) * c(l + 1, 4)
    }),
    row!("t2:l1+l3", Quartic, [(1, 1), (3, 1)], None, |l, e| 3 * c(l + 2, 4) - e(2) * c(l + 1, 4)),
    row!("t2:2l1+l2", Quartic, [(1, 2), (2, 1)], None, |l, _e| 3 * c(l + 3, 4)),
    row!("t2:l1+llm2", Quartic, [(1, 1), (-2, 1)], None, |l, e| {
        (l - 2) * c(l + 2, 3) - e(l - 1) * c(l + 1, 2)
    }),
    row!("t2:3l1+ll", Quartic, [(1, 3), (L, 1)], None, |l, e| {
        4 * c(l + 3, 4) + c(l + 2, 3) - e(l + 3) * c(l + 2, 2)
    }),
    row!("t2:2l1+llm1", Quartic, [(1, 2), (-1, 1)], None, |l, e| {
        c(l + 3, 2) * c(l, 2) - e(l + 1) * ((l + 1) * (l + 1) - 2)
    }),
    row!("t2:l2+llm1", Quartic, [(2, 1), (-1, 1)], None, |l, e| {
        c(l + 1, 2) * c(l + 1, 2) - (l + 1) * (l + 1) - e(l - 1) * ((l + 1) * (l + 1) - 1) - e(l)
    }),
    row!("t2:2l1+2ll", Quartic, [(1, 2), (L, 2)], None, |l, e| {
        c(l + 2, 2) * c(l + 2, 2) - (l + 1) * (l + 1) - e(l + 3) * ((l + 1) * (l + 1) - 1) - e(l + 2)
    }),
    row!("t2:l1+l2+ll", Quartic, [(1, 1), (2, 1), (L, 1)], None, |l, e| {
        (l + 1) * (2 * c(l + 1, 3) + l * l - 1)
            - 4 * e(3) * (l - 2) * (c(l + 1, 3) - 1)
            - e(l) * c(l + 2, 2)
            - e(l + 2) * (1 - e(3)) * c(l + 1, 2)
    }),
    row!("t2:l5", Quartic, [(5, 1)], Some(128), |l, _e| c(l + 1, 5)),
    row!("t2:l2+l3", Quartic, [(2, 1), (3, 1)], Some(109), |l, e| {
        c(l + 1, 2) * c(l + 1, 3) - (l + 1) * c(l + 1, 4) - e(2) * c(l + 1, 5) - 4 * e(3) * c(l + 2, 5)
    }),
    row!("t2:5l1", Quartic, [(1, 5)], Some(108), |l, _e| c(l + 5, 5)),
    row!("t2:3l1+l2", Quartic, [(1, 3), (2, 1)], Some(108), |l, e| {
        4 * c(l + 4, 5) - e(5) * (3 * c(l + 3, 5) + 2 * c(l + 2, 4) + c(l + 1, 3))
    }),
    row!("t2:l1+l4", Quartic, [(1, 1), (4, 1)], Some(42), |l, e| 4 * c(l + 2, 5) - e(5) * c(l + 1, 5)),
    row!("remark:2l1+l3", Remark, [(1, 2), (3, 1)], Some(35), |l, e| {
        6 * c(l + 3, 5) - e(5) * (3 * c(l + 2, 5) + c(l + 1, 4))
    }),
    row!("remark:l6", Remark, [(6, 1)], Some(32), |l, _e| c(l + 1, 6)),
    row!("remark:l1+llm3", Remark, [(1, 1), (-3, 1)], Some(28), |l, e| {
        (l - 3) * c(l + 2, 4) - e(l - 2) * c(l + 1, 3)
    }),
    row!("remark:l7", Remark, [(7, 1)], Some(22), |l, _e| c(l + 1, 7)),
];

/// Outcome of evaluating a row at `(l, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowValue {
    Dimension(BigInt),
    NotApplicable(String),
}

impl TableRow {
    pub fn by_id(id: &str) -> Result<&'static TableRow> {
        TABLE_ROWS
            .iter()
            .find(|r| r.id == id)
            .ok_or_else(|| Error::UnknownRow(id.to_string()))
    }

    pub fn max_rank(&self) -> Option<usize> {
        self.max_rank
    }

    /// The row's highest weight at rank `l`, or `None` when its indices do
    /// not form a strictly increasing sequence inside `1..=l`.
    pub fn weight(&self, l: usize) -> Option<Weight> {
        let rank = Rank::new(l).ok()?;
        let li = l as i64;
        let mut last = 0;
        let mut terms = Vec::with_capacity(self.terms.len());
        for &(i, a) in self.terms {
            let idx = if i <= 0 { li + i } else { i };
            if idx <= last || idx > li {
                return None;
            }
            last = idx;
            terms.push((idx as usize, a));
        }
        Some(Weight::from_terms(rank, &terms))
    }

    pub fn evaluate(&self, l: usize, p: Prime) -> RowValue {
        if let Some(max) = self.max_rank {
            if l > max {
                return RowValue::NotApplicable(format!("requires l <= {max}"));
            }
        }
        let Some(w) = self.weight(l) else {
            return RowValue::NotApplicable(format!("indices out of range at l = {l}"));
        };
        if !w.is_restricted(p.get()) {
            return RowValue::NotApplicable(format!("{w} is not {p}-restricted"));
        }
        let e = |k: i128| p.epsilon(k as i64) as i128;
        RowValue::Dimension(BigInt::from((self.dim)(l as i128, &e)))
    }
}

/// Closed-form `dim L(λ)` for row `row_id` at `(l, p)`.
pub fn table_row_dimension(row_id: &str, l: usize, p: Prime) -> Result<RowValue> {
    Ok(TableRow::by_id(row_id)?.evaluate(l, p))
}

/// Rows whose weights make up the answer at exponent `s`.
pub fn rows_for_exponent(s: u32) -> Vec<&'static TableRow> {
    TABLE_ROWS
        .iter()
        .filter(|r| match s {
            3 => r.table == TableId::Cubic,
            4 => r.id != "t1:l4",
            _ => false,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationEntry {
    pub weight: Weight,
    pub dual: Weight,
    pub self_dual: bool,
    #[serde(serialize_with = "decimal")]
    pub dim: BigUint,
    pub breakdown: Vec<BreakdownTerm>,
}

/// Every nonzero `p`-restricted `λ` with `dim L(λ) ≤ (l+1)^s`, one per dual pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub rank: usize,
    #[serde(rename = "char")]
    pub p: Prime,
    pub exponent: u32,
    #[serde(serialize_with = "decimal")]
    pub cap: BigUint,
    pub strategy: Strategy,
    pub entries: Vec<ClassificationEntry>,
    /// Search nodes cut off by the Premet bound, subtrees included implicitly.
    pub pruned_count: usize,
    /// Search nodes whose Premet bound was evaluated.
    pub visited_count: usize,
    /// Candidates within the Premet bound whose exact dimension exceeds the cap.
    pub rejected_count: usize,
}

impl ClassificationReport {
    pub fn get(&self, lambda: &Weight) -> Option<&ClassificationEntry> {
        let rep = lambda.duality_representative();
        self.entries.iter().find(|e| e.weight == rep)
    }
}

/// `(l+1)^s`.
pub fn exponent_cap(l: usize, s: u32) -> BigUint {
    BigUint::from(l + 1).pow(s)
}

/// Nonzero `p`-restricted weights of rank `l` with Premet bound at most
/// `cap`, plus visit and prune counts. Each weight is reached by adding
/// fundamental weights in nondecreasing index order, and a pruned node's
/// descendants all dominate it by a dominant weight.
pub fn premet_candidates(l: usize, p: Prime, cap: &BigUint) -> Result<(Vec<Weight>, usize, usize)> {
    let rank = Rank::new(l)?;
    let mut found = Vec::new();
    let mut visited = 0;
    let mut pruned = 0;
    let mut stack: Vec<(Vec<i64>, usize)> = vec![(vec![0; l], 0)];
    while let Some((coeffs, first)) = stack.pop() {
        for m in first..l {
            if coeffs[m] + 1 >= p.get() as i64 {
                continue;
            }
            let mut child = coeffs.clone();
            child[m] += 1;
            let w = Weight::new(child.clone())?;
            visited += 1;
            match premet_lower_bound_capped(&w, cap)? {
                CappedBound::Exceeds => pruned += 1,
                CappedBound::Within(_) => {
                    found.push(w);
                    stack.push((child, m));
                }
            }
        }
    }
    debug_assert!(found.iter().all(|w| w.rank() == rank));
    found.sort();
    Ok((found, visited, pruned))
}

pub fn enumerate_small_irreducibles(l: usize, p: Prime, s: u32, strategy: Strategy) -> Result<ClassificationReport> {
    enumerate_small_irreducibles_with(l, p, s, strategy, Limits::default())
}

pub fn enumerate_small_irreducibles_with(
    l: usize,
    p: Prime,
    s: u32,
    strategy: Strategy,
    limits: Limits,
) -> Result<ClassificationReport> {
    let cap = exponent_cap(l, s);
    let (candidates, visited_count, pruned_count) = premet_candidates(l, p, &cap)?;
    // Duals have equal dimension; only representatives are computed.
    let reps: Vec<Weight> = candidates
        .into_iter()
        .filter(|w| w.duality_representative() == *w)
        .collect();
    let outcomes: Vec<Result<Option<DimensionResult>>> = reps
        .par_iter()
        .map(|w| dim_bounded(w, p, strategy, limits, Some(&cap)))
        .collect();
    let mut entries = Vec::new();
    let mut rejected_count = 0;
    for (w, outcome) in reps.iter().zip(outcomes) {
        match outcome.map_err(|e| frontier(w, e))? {
            Some(d) => entries.push(ClassificationEntry {
                weight: w.clone(),
                dual: w.dual(),
                self_dual: w.is_self_dual(),
                dim: d.value,
                breakdown: d.breakdown,
            }),
            None => rejected_count += 1,
        }
    }
    entries.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| b.weight.cmp(&a.weight)));
    Ok(ClassificationReport {
        rank: l,
        p,
        exponent: s,
        cap,
        strategy,
        entries,
        pruned_count,
        visited_count,
        rejected_count,
    })
}

fn frontier(lambda: &Weight, err: Error) -> Error {
    match err {
        Error::ResourceExceeded { what, size, cap } => Error::ResourceExceeded {
            what: format!("frontier weight {lambda}: {what}"),
            size,
            cap,
        },
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowMatch {
    pub row: &'static str,
    pub weight: Weight,
    #[serde(serialize_with = "decimal")]
    pub dim: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionMismatch {
    pub row: &'static str,
    pub weight: Weight,
    #[serde(serialize_with = "decimal")]
    pub tabulated: BigInt,
    #[serde(serialize_with = "decimal")]
    pub computed: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UncoveredWeight {
    pub weight: Weight,
    #[serde(serialize_with = "decimal")]
    pub dim: BigUint,
}

/// Enumeration output compared row by row with the closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub rank: usize,
    #[serde(rename = "char")]
    pub p: Prime,
    pub exponent: u32,
    pub matched: Vec<RowMatch>,
    /// Applicable rows whose weight the enumeration did not produce.
    pub missing: Vec<&'static str>,
    /// Enumerated weights that no applicable row names.
    pub uncovered: Vec<UncoveredWeight>,
    /// Rows whose weight was enumerated with a different dimension.
    pub mismatched: Vec<DimensionMismatch>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.uncovered.is_empty() && self.mismatched.is_empty()
    }
}

pub fn verify_tables(l: usize, p: Prime, s: u32) -> Result<VerifyReport> {
    verify_tables_with(l, p, s, Strategy::OracleFirst, Limits::default())
}

pub fn verify_tables_with(l: usize, p: Prime, s: u32, strategy: Strategy, limits: Limits) -> Result<VerifyReport> {
    if !(3..=4).contains(&s) {
        return Err(Error::Invalid(format!("tables exist for exponents 3 and 4, not {s}")));
    }
    let report = enumerate_small_irreducibles_with(l, p, s, strategy, limits)?;
    Ok(compare_with_rows(&report))
}

/// Row-by-row comparison of an existing enumeration.
pub fn compare_with_rows(report: &ClassificationReport) -> VerifyReport {
    let (l, p) = (report.rank, report.p);
    let cap = BigInt::from(report.cap.clone());
    let mut expected: BTreeMap<Weight, (&'static str, BigInt)> = BTreeMap::new();
    for row in rows_for_exponent(report.exponent) {
        // A row applies only when its dimension fits under the cap.
        if let (RowValue::Dimension(d), Some(w)) = (row.evaluate(l, p), row.weight(l)) {
            if d <= cap {
                expected.entry(w.duality_representative()).or_insert((row.id, d));
            }
        }
    }
    let mut out = VerifyReport {
        rank: l,
        p,
        exponent: report.exponent,
        matched: Vec::new(),
        missing: Vec::new(),
        uncovered: Vec::new(),
        mismatched: Vec::new(),
    };
    for entry in &report.entries {
        match expected.remove(&entry.weight) {
            Some((row, d)) if BigInt::from(entry.dim.clone()) == d => out.matched.push(RowMatch {
                row,
                weight: entry.weight.clone(),
                dim: entry.dim.clone(),
            }),
            Some((row, d)) => out.mismatched.push(DimensionMismatch {
                row,
                weight: entry.weight.clone(),
                tabulated: d,
                computed: entry.dim.clone(),
            }),
            None => out.uncovered.push(UncoveredWeight {
                weight: entry.weight.clone(),
                dim: entry.dim.clone(),
            }),
        }
    }
    out.missing = expected.into_values().map(|(row, _)| row).collect();
    out.missing.sort_unstable();
    out
}

impl ClassificationReport {
    /// Sum of entry dimensions, useful as a quick fingerprint.
    pub fn total_dimension(&self) -> BigUint {
        self.entries.iter().fold(BigUint::zero(), |acc, e| acc + &e.dim)
    }
}
