//! Orbit sizes of dominant weights, enumeration of subdominant weights and
//! the Premet lower bound `Σ_{μ ≼ λ} |μ^W|` for `dim L(λ)`.

use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::root_system::Weight;

/// `|W : W_μ| = (l+1)! / (i_1! (i_2 - i_1)! ... (l+1 - i_N)!)`.
pub fn orbit_size(mu: &Weight) -> Result<BigUint> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.clone()));
    }
    Ok(multinomial(&mu.support_gaps()))
}

/// Multinomial coefficient `(Σ k_i)! / Π k_i!`, built as a product of
/// binomials so intermediate values stay exact.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0usize;
    for &k in parts {
        for t in 1..=k {
            total += 1;
            acc *= total;
            acc /= t;
        }
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

/// Visits every dominant `μ ≼ λ` (including `λ`) until the callback breaks.
/// Visiting order is unspecified; [`subdominant_weights`] sorts.
pub fn for_each_subdominant<F>(lambda: &Weight, mut f: F) -> Result<()>
where
    F: FnMut(Weight) -> ControlFlow<()>,
{
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    // Dominant μ ≼ λ correspond to partitions ν with l+1 parts and |ν| = |λ|
    // dominated by the partition of λ; μ is ν with its last part stripped.
    let bound = lambda.eps();
    let parts = bound.len();
    let mut prefix = vec![0i64; parts];
    let mut acc = 0;
    for (k, b) in bound.iter().enumerate() {
        acc += b;
        prefix[k] = acc;
    }
    let total = acc;
    let mut nu = vec![0i64; parts];
    let _ = walk(0, total, i64::MAX, 0, &prefix, &mut nu, &mut f);
    Ok(())
}

fn walk<F>(
    k: usize,
    total: i64,
    prev: i64,
    sum: i64,
    prefix: &[i64],
    nu: &mut Vec<i64>,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(Weight) -> ControlFlow<()>,
{
    let parts = prefix.len();
    let rest = total - sum;
    if k + 1 == parts {
        if rest <= prev && sum + rest <= prefix[k] {
            nu[k] = rest;
            return f(Weight::from_eps(nu));
        }
        return ControlFlow::Continue(());
    }
    let slots = (parts - k) as i64;
    let lo = (rest + slots - 1) / slots;
    let hi = prev.min(rest).min(prefix[k] - sum);
    let mut v = hi;
    while v >= lo {
        nu[k] = v;
        walk(k + 1, total, v, sum + v, prefix, nu, f)?;
        v -= 1;
    }
    ControlFlow::Continue(())
}

/// All dominant `μ ≼ λ`, `λ` included, in lexicographic order of
/// coefficient vectors.
pub fn subdominant_weights(lambda: &Weight) -> Result<Vec<Weight>> {
    let mut out = Vec::new();
    for_each_subdominant(lambda, |mu| {
        out.push(mu);
        ControlFlow::Continue(())
    })?;
    out.sort();
    Ok(out)
}

/// `Σ_{μ ≼ λ} |μ^W|`, a lower bound for `dim L(λ)` when `λ` is restricted.
pub fn premet_lower_bound(lambda: &Weight) -> Result<BigUint> {
    let mut sum = BigUint::zero();
    for_each_subdominant(lambda, |mu| {
        sum += multinomial(&mu.support_gaps());
        ControlFlow::Continue(())
    })?;
    Ok(sum)
}

/// Outcome of a Premet bound evaluation against a cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CappedBound {
    Within(BigUint),
    Exceeds,
}

/// Like [`premet_lower_bound`] but stops as soon as the partial sum passes
/// `cap`. The orbit of `λ` itself is checked before anything is enumerated.
pub fn premet_lower_bound_capped(lambda: &Weight, cap: &BigUint) -> Result<CappedBound> {
    let top = orbit_size(lambda)?;
    if &top > cap {
        return Ok(CappedBound::Exceeds);
    }
    let mut sum = BigUint::zero();
    let mut exceeded = false;
    for_each_subdominant(lambda, |mu| {
        sum += multinomial(&mu.support_gaps());
        if &sum > cap {
            exceeded = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(if exceeded {
        CappedBound::Exceeds
    } else {
        CappedBound::Within(sum)
    })
}
