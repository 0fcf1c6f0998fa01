//! Closed-form weight multiplicities of irreducible modules for a handful of
//! highest-weight shapes, dispatched by pattern on `(λ, λ - μ)`.
//!
//! Patterns are tried in the order of [`PATTERNS`]; where two match they
//! agree (checked in tests), so the order only fixes which source is named.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::root_system::{root_coordinates, Weight};
use crate::weyl_orbits::subdominant_weights;

/// `ε_p(k)`: 1 if `p | k`, else 0.
pub fn epsilon_p(p: Prime, k: i64) -> u64 {
    p.epsilon(k)
}

/// Which closed form produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleSource {
    /// `μ = λ`.
    HighestWeight,
    /// `λ = 2λ_1 + 2λ_l`, `μ = 0`.
    TwoTwoAtZero,
    /// `λ = λ_2 + λ_3`, `μ = λ_5`.
    TwoThreeAtFive,
    /// `λ = λ_1 + 2λ_2`, `μ = λ_5`.
    OneTwoTwoAtFive,
    /// `λ = λ_2 + λ_j`, `μ = λ_{j+2}`.
    TwoJAtJPlusTwo,
    /// `λ = a_i λ_i + a_j λ_j`, `λ - μ = α_i + ... + α_j`.
    TwoTermInterval,
    /// `λ = a_i λ_i + a_j λ_j`, `λ - μ = c α_i + α_{i+1} + ... + α_j`.
    TwoTermLeadingMultiple,
    /// `λ = a_j λ_j`, `λ - μ = α_{j-1} + 2α_j + α_{j+1}`.
    SingleTermDiamond,
    /// `λ = a_1 λ_1 + λ_j`, `λ - μ = 2(α_1 + ... + α_j) + α_{j+1}`.
    DoubledInterval,
    /// `λ = a_1 λ_1 + a_2 λ_2 + a_l λ_l`, `λ - μ = α_1 + ... + α_l`.
    ThreeTermFull,
    /// `λ = a_1 λ_1 + λ_j`, `λ - μ = 3(α_1 + ... + α_j) + 2α_{j+1} + α_{j+2}`.
    TripledInterval,
    /// An entry of the fixed multiplicity table for nine highest weights.
    TableRow,
    /// Weyl-module multiplicity 1, hence 1 in the irreducible.
    WeylMultiplicityOne,
}

impl OracleSource {
    pub fn name(self) -> &'static str {
        match self {
            OracleSource::HighestWeight => "highest-weight",
            OracleSource::TwoTwoAtZero => "two-two-at-zero",
            OracleSource::TwoThreeAtFive => "two-three-at-five",
            OracleSource::OneTwoTwoAtFive => "one-two-two-at-five",
            OracleSource::TwoJAtJPlusTwo => "two-j-at-j-plus-two",
            OracleSource::TwoTermInterval => "two-term-interval",
            OracleSource::TwoTermLeadingMultiple => "two-term-leading-multiple",
            OracleSource::SingleTermDiamond => "single-term-diamond",
            OracleSource::DoubledInterval => "doubled-interval",
            OracleSource::ThreeTermFull => "three-term-full",
            OracleSource::TripledInterval => "tripled-interval",
            OracleSource::TableRow => "table-row",
            OracleSource::WeylMultiplicityOne => "weyl-multiplicity-one",
        }
    }
}

impl fmt::Display for OracleSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub value: u64,
    pub source: OracleSource,
}

/// Patterns in dispatch order.
pub const PATTERNS: [OracleSource; 11] = [
    OracleSource::HighestWeight,
    OracleSource::TwoTwoAtZero,
    OracleSource::TwoThreeAtFive,
    OracleSource::OneTwoTwoAtFive,
    OracleSource::TwoJAtJPlusTwo,
    OracleSource::TwoTermInterval,
    OracleSource::TwoTermLeadingMultiple,
    OracleSource::SingleTermDiamond,
    OracleSource::DoubledInterval,
    OracleSource::ThreeTermFull,
    OracleSource::TripledInterval,
];

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// `(index, coefficient)` of the nonzero coefficients, 1-based.
fn terms(w: &Weight) -> Vec<(usize, i64)> {
    w.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != 0)
        .map(|(i, &a)| (i + 1, a))
        .collect()
}

/// Root vector with entry `v` on `lo..=hi` (1-based) and zero elsewhere,
/// overwritten by `extra`.
fn shape(l: usize, lo: usize, hi: usize, v: i64, extra: &[(usize, i64)]) -> Vec<i64> {
    let mut c = vec![0; l];
    for k in lo..=hi {
        c[k - 1] = v;
    }
    for &(k, x) in extra {
        c[k - 1] = x;
    }
    c
}

/// Evaluates one pattern; `None` when its hypotheses fail.
pub fn evaluate(source: OracleSource, lambda: &Weight, c: &[i64], p: Prime) -> Option<u64> {
    let l = lambda.rank().get();
    let t = terms(lambda);
    let e = |k: i64| p.epsilon(k) as i64;
    let a = |i: usize| lambda.coeff(i);
    let li = l as i64;
    let v: i64 = match source {
        OracleSource::HighestWeight => {
            if c.iter().any(|&x| x != 0) {
                return None;
            }
            1
        }
        OracleSource::TwoTwoAtZero => {
            if l < 2 || t != [(1, 2), (l, 2)] || c != lambda_minus_zero(lambda)? {
                return None;
            }
            binom(li + 1, 2) - e(li + 3) * li - e(li + 2)
        }
        OracleSource::TwoThreeAtFive => {
            if l < 4 || t != [(2, 1), (3, 1)] || !reaches_fundamental(lambda, c, 5) {
                return None;
            }
            5 - e(2) - 4 * e(3)
        }
        OracleSource::OneTwoTwoAtFive => {
            if l < 4 || t != [(1, 1), (2, 2)] || !reaches_fundamental(lambda, c, 5) {
                return None;
            }
            5 - e(3)
        }
        OracleSource::TwoJAtJPlusTwo => {
            let [(2, 1), (j, 1)] = t[..] else { return None };
            if !(2 < j && j < l) || !reaches_fundamental(lambda, c, j + 2) {
                return None;
            }
            let j = j as i64;
            binom(j + 1, 2) - 1 - e(j) * (j + 1) - e(j + 1)
        }
        OracleSource::TwoTermInterval => {
            let [(i, ai), (j, aj)] = t[..] else { return None };
            if c != shape(l, i, j, 1, &[]) {
                return None;
            }
            (j - i + 1) as i64 - e(ai + aj + (j - i) as i64)
        }
        OracleSource::TwoTermLeadingMultiple => {
            let [(i, ai), (j, aj)] = t[..] else { return None };
            let cc = c[i - 1];
            if !(cc > 0 && 2 * cc <= ai + 1) || c != shape(l, i + 1, j, 1, &[(i, cc)]) {
                return None;
            }
            (j - i + 1) as i64 - e(ai + aj + (j - i) as i64)
        }
        OracleSource::SingleTermDiamond => {
            let [(j, aj)] = t[..] else { return None };
            if !(1 < j && j < l && aj > 1) || c != shape(l, j - 1, j + 1, 1, &[(j, 2)]) {
                return None;
            }
            2 - e(aj + 1)
        }
        OracleSource::DoubledInterval => {
            let [(1, a1), (j, 1)] = t[..] else { return None };
            if !(1 < j && j < l && a1 > 1) || c != shape(l, 1, j, 2, &[(j + 1, 1)]) {
                return None;
            }
            let j = j as i64;
            binom(j + 1, 2) - e(a1 + j) * j
        }
        OracleSource::ThreeTermFull => {
            if l < 3 || t.len() != 3 || t[0].0 != 1 || t[1].0 != 2 || t[2].0 != l {
                return None;
            }
            if c != shape(l, 1, l, 1, &[]) {
                return None;
            }
            let (a1, a2, al) = (a(1), a(2), a(l));
            // The product term pairs the first and third conditions; pairing
            // the first and second disagrees with the lattice rank.
            2 * (li - 1) - e(a1 + a2 + 1) * (li - 2) - e(a2 + al + li - 2) - e(a1 + a2 + al + li - 1)
                + e(a1 + a2 + 1) * e(a1 + a2 + al + li - 1)
        }
        OracleSource::TripledInterval => {
            let [(1, a1), (j, 1)] = t[..] else { return None };
            if !(1 < j && j + 1 < l && a1 > 2) || c != shape(l, 1, j, 3, &[(j + 1, 2), (j + 2, 1)]) {
                return None;
            }
            let j = j as i64;
            binom(j + 2, 3) - e(a1 + j) * binom(j + 1, 2)
        }
        OracleSource::TableRow | OracleSource::WeylMultiplicityOne => return None,
    };
    Some(u64::try_from(v).expect("closed forms are non-negative"))
}

fn lambda_minus_zero(lambda: &Weight) -> Option<Vec<i64>> {
    root_coordinates(lambda, &Weight::zero(lambda.rank()))
        .ok()
        .flatten()
        .map(|c| c.coeffs().to_vec())
}

/// Whether `λ - c` is `λ_k`, reading `λ_{l+1}` as 0.
fn reaches_fundamental(lambda: &Weight, c: &[i64], k: usize) -> bool {
    let l = lambda.rank().get();
    if k > l + 1 {
        return false;
    }
    let target = if k == l + 1 {
        Weight::zero(lambda.rank())
    } else {
        Weight::fundamental(lambda.rank(), k)
    };
    match root_coordinates(lambda, &target) {
        Ok(Some(rv)) => rv.coeffs() == c,
        _ => false,
    }
}

/// The closed-form value of `m_{L(λ)}(μ)` when some pattern applies.
pub fn oracle_multiplicity(lambda: &Weight, mu: &Weight, p: Prime) -> Result<Option<OracleResult>> {
    crate::verma_gram::check_restricted(lambda, mu, p)?;
    let c = root_coordinates(lambda, mu)?.ok_or_else(|| Error::NotSubdominant {
        lambda: lambda.clone(),
        mu: mu.clone(),
    })?;
    for source in PATTERNS {
        if let Some(value) = evaluate(source, lambda, c.coeffs(), p) {
            return Ok(Some(OracleResult { value, source }));
        }
    }
    if let Some(row) = table3_multiplicities(lambda, p)? {
        if let Some(&value) = row.get(mu) {
            return Ok(Some(OracleResult {
                value,
                source: OracleSource::TableRow,
            }));
        }
    }
    Ok(None)
}

/// Every pattern that matches, for overlap checks.
pub fn all_matches(lambda: &Weight, mu: &Weight, p: Prime) -> Result<Vec<OracleResult>> {
    let c = root_coordinates(lambda, mu)?.ok_or_else(|| Error::NotSubdominant {
        lambda: lambda.clone(),
        mu: mu.clone(),
    })?;
    Ok(PATTERNS
        .iter()
        .filter_map(|&source| evaluate(source, lambda, c.coeffs(), p).map(|value| OracleResult { value, source }))
        .collect())
}

/// Highest weights covered by [`table3_multiplicities`].
pub fn table3_weights(l: usize) -> Vec<Weight> {
    let Ok(r) = crate::root_system::Rank::new(l) else {
        return Vec::new();
    };
    if l < 4 {
        return Vec::new();
    }
    let w = |t: &[(usize, i64)]| Weight::from_terms(r, t);
    vec![
        w(&[(2, 2)]),
        w(&[(1, 2), (2, 1)]),
        w(&[(1, 3), (l, 1)]),
        w(&[(1, 2), (l - 1, 1)]),
        w(&[(2, 1), (l - 1, 1)]),
        w(&[(1, 2), (l, 2)]),
        w(&[(1, 1), (2, 1), (l, 1)]),
        w(&[(2, 1), (3, 1)]),
        w(&[(1, 3), (2, 1)]),
    ]
}

/// Multiplicities of all proper subdominant weights for nine highest
/// weights, or `None` when `λ` is not one of them at this rank (including
/// ranks where the row's weights collide).
pub fn table3_multiplicities(lambda: &Weight, p: Prime) -> Result<Option<BTreeMap<Weight, u64>>> {
    let l = lambda.rank().get();
    if l < 4 || !lambda.is_restricted(p.get()) {
        return Ok(None);
    }
    let r = lambda.rank();
    let li = l as i64;
    let e = |k: i64| p.epsilon(k) as i64;
    let w = |t: &[(usize, i64)]| Weight::from_terms(r, t);
    let fund = |k: usize| if k == l + 1 { Weight::zero(r) } else { Weight::fundamental(r, k) };
    let zero = Weight::zero(r);
    let rows = table3_weights(l);
    let idx = rows.iter().position(|x| x == lambda);
    let entries: Vec<(Weight, i64)> = match idx {
        Some(0) => vec![(w(&[(1, 1), (3, 1)]), 1), (fund(4), 2 - e(3))],
        Some(1) => vec![(w(&[(2, 2)]), 1), (w(&[(1, 1), (3, 1)]), 2), (fund(4), 3)],
        Some(2) => vec![
            (w(&[(1, 1), (2, 1), (l, 1)]), 1),
            (w(&[(3, 1), (l, 1)]), 1),
            (w(&[(1, 2)]), li - e(li + 3)),
            (fund(2), li - e(li + 3)),
        ],
        Some(3) => vec![
            (w(&[(2, 1), (l - 1, 1)]), 1),
            (w(&[(1, 1), (l, 1)]), li - 1 - e(li + 1)),
            (zero, binom(li, 2) - e(li + 1) * (li - 1)),
        ],
        Some(4) => vec![
            (w(&[(1, 1), (l, 1)]), li - 2 - e(li - 1)),
            (zero, binom(li, 2) - 1 - e(li - 1) * li - e(li)),
        ],
        Some(5) => vec![
            (w(&[(2, 1), (l, 2)]), 1),
            (w(&[(1, 2), (l - 1, 1)]), 1),
            (w(&[(2, 1), (l - 1, 1)]), 1),
            (w(&[(1, 1), (l, 1)]), li - e(li + 3)),
            (zero, binom(li + 1, 2) - e(li + 3) * li - e(li + 2)),
        ],
        Some(6) => vec![
            (w(&[(3, 1), (l, 1)]), 2 - e(3)),
            (w(&[(1, 2)]), li - 1 - e(li)),
            (
                fund(2),
                2 * (li - 1) - e(3) * (li - 2) - e(li) - e(li + 2) + e(3) * e(li + 2),
            ),
        ],
        Some(7) => vec![(w(&[(1, 1), (4, 1)]), 2 - e(3)), (fund(5), 5 - e(2) - 4 * e(3))],
        Some(8) => vec![
            (w(&[(1, 1), (2, 2)]), 1),
            (w(&[(1, 2), (3, 1)]), 2 - e(5)),
            (w(&[(2, 1), (3, 1)]), 2 - e(5)),
            (w(&[(1, 1), (4, 1)]), 3 - 2 * e(5)),
            (fund(5), 4 - 3 * e(5)),
        ],
        _ => return Ok(None),
    };
    let mut map = BTreeMap::new();
    for (mu, v) in entries {
        if map.insert(mu, u64::try_from(v).expect("non-negative")).is_some() {
            // Two listed weights coincide at this rank.
            return Ok(None);
        }
    }
    let mut subs = subdominant_weights(lambda)?;
    subs.retain(|m| m != lambda);
    if subs.len() != map.len() || subs.iter().any(|m| !map.contains_key(m)) {
        return Ok(None);
    }
    Ok(Some(map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freudenthal::weyl_multiplicity;
    use crate::root_system::Rank;

    fn r(l: usize) -> Rank {
        Rank::new(l).unwrap()
    }

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon_p(p(3), 21), 1);
        assert_eq!(epsilon_p(p(5), 21), 0);
        assert_eq!(epsilon_p(p(2), 0), 1);
    }

    #[test]
    fn dispatcher_examples() {
        let l = r(7);
        let lam = Weight::from_terms(l, &[(2, 1), (3, 1)]);
        let got = oracle_multiplicity(&lam, &Weight::fundamental(l, 5), p(3)).unwrap().unwrap();
        assert_eq!(got.value, 1);
        assert_eq!(got.source, OracleSource::TwoThreeAtFive);

        let lam = Weight::from_terms(l, &[(1, 3), (2, 1)]);
        let got = oracle_multiplicity(&lam, &Weight::fundamental(l, 5), p(5)).unwrap().unwrap();
        assert_eq!(got.value, 1);
        assert_eq!(got.source, OracleSource::TripledInterval);

        let lam = Weight::from_terms(l, &[(2, 1), (5, 2)]);
        let mu = Weight::from_terms(l, &[(1, 1), (5, 1), (6, 1)]);
        let got = oracle_multiplicity(&lam, &mu, p(3)).unwrap().unwrap();
        assert_eq!(got.source, OracleSource::TwoTermInterval);
        assert_eq!(got.value, 4 - p(3).epsilon(1 + 2 + 3));

        let lam = Weight::from_terms(l, &[(1, 1), (2, 1), (7, 1)]);
        let got = oracle_multiplicity(&lam, &Weight::from_terms(l, &[(3, 1), (7, 1)]), p(3)).unwrap().unwrap();
        assert_eq!(got, OracleResult { value: 1, source: OracleSource::TableRow });

        let lam = Weight::from_terms(l, &[(1, 1), (3, 1), (5, 1)]);
        let mu = Weight::from_terms(l, &[(4, 1), (5, 1)]);
        assert!(oracle_multiplicity(&lam, &mu, p(3)).unwrap().is_none());
    }

    #[test]
    fn table3_examples() {
        let l = r(9);
        let lam = Weight::from_terms(l, &[(2, 2)]);
        let row = table3_multiplicities(&lam, p(3)).unwrap().unwrap();
        assert_eq!(row.len(), 2);
        assert_eq!(row[&Weight::from_terms(l, &[(1, 1), (3, 1)])], 1);
        assert_eq!(row[&Weight::fundamental(l, 4)], 1);

        let lam = Weight::from_terms(l, &[(1, 3), (9, 1)]);
        let row = table3_multiplicities(&lam, p(2)).unwrap();
        assert!(row.is_none(), "3λ_1 is not 2-restricted");
        let row = table3_multiplicities(&lam, p(3)).unwrap();
        assert!(row.is_none(), "3λ_1 is not 3-restricted");
        let row = table3_multiplicities(&lam, p(5)).unwrap().unwrap();
        assert_eq!(row[&Weight::from_terms(l, &[(1, 2)])], 9);
        assert_eq!(row[&Weight::fundamental(l, 2)], 9);
        let row = table3_multiplicities(&Weight::from_terms(r(9), &[(1, 3), (9, 1)]), p(7)).unwrap().unwrap();
        assert_eq!(row[&Weight::fundamental(l, 2)], 9);
        let row = table3_multiplicities(&Weight::from_terms(r(11), &[(1, 3), (11, 1)]), p(7)).unwrap().unwrap();
        assert_eq!(row[&Weight::fundamental(r(11), 2)], 10);
    }

    #[test]
    fn values_bounded_by_weyl_multiplicity() {
        for l in 4..=7 {
            for pr in [2u64, 3, 5, 7] {
                for lam in table3_weights(l) {
                    let Some(row) = table3_multiplicities(&lam, p(pr)).unwrap() else { continue };
                    for (mu, v) in row {
                        assert!(v <= weyl_multiplicity(&lam, &mu).unwrap());
                        assert!(v >= 1);
                    }
                }
            }
        }
    }

    #[test]
    fn leading_multiple_reduces_to_interval() {
        for l in 3..=6 {
            for i in 1..l {
                for j in (i + 1)..=l {
                    for ai in 1..=4 {
                        let lam = Weight::from_terms(r(l), &[(i, ai), (j, 2)]);
                        let c = shape(l, i, j, 1, &[]);
                        for pr in [5u64, 7] {
                            assert_eq!(
                                evaluate(OracleSource::TwoTermInterval, &lam, &c, p(pr)),
                                evaluate(OracleSource::TwoTermLeadingMultiple, &lam, &c, p(pr))
                            );
                        }
                    }
                }
            }
        }
    }
}
