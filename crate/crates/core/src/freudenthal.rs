//! Weight multiplicities of Weyl modules in characteristic zero via
//! Freudenthal's recursion, and the Weyl dimension formula.
//!
//! All arithmetic happens on integer ε-vectors of a fixed total size: a
//! dominant `μ ≼ λ` is stored as its partition shifted up by
//! `(|λ| - |μ|)/(l+1)`, so every vector in a table has the same coordinate
//! sum and differences of squared norms need no projection.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::root_system::{root_coordinates, Weight};
use crate::weyl_orbits::{orbit_size, subdominant_weights};

/// `m_{V(λ)}(μ)` for every dominant `μ ≼ λ`.
#[derive(Debug, Clone)]
pub struct WeylMultiplicityTable {
    lambda: Weight,
    entries: HashMap<Vec<i64>, u64>,
    order: Vec<Weight>,
}

impl WeylMultiplicityTable {
    pub fn new(lambda: &Weight) -> Result<Self> {
        let subs = subdominant_weights(lambda)?;
        let l = lambda.rank().get();
        let n = l as i64 + 1;
        let size = lambda.size();
        let top = lambda.eps();
        let rho: Vec<i64> = (0..=l as i64).rev().collect();
        let norm = |v: &[i64]| -> i64 { v.iter().zip(&rho).map(|(a, r)| (a + r) * (a + r)).sum() };
        let top_norm = norm(&top);

        // Process by increasing height of λ - μ so every μ + kα with a
        // nonzero multiplicity is already known.
        let mut layered: Vec<(i64, Vec<i64>, Weight)> = subs
            .into_iter()
            .map(|mu| {
                let h = root_coordinates(lambda, &mu)
                    .expect("same rank")
                    .expect("subdominant")
                    .height();
                let shift = (size - mu.size()) / n;
                let eps: Vec<i64> = mu.eps().into_iter().map(|x| x + shift).collect();
                (h, eps, mu)
            })
            .collect();
        layered.sort();

        let mut entries: HashMap<Vec<i64>, u64> = HashMap::new();
        let mut order = Vec::with_capacity(layered.len());
        for (h, eps, mu) in layered {
            if h == 0 {
                entries.insert(eps, 1);
                order.push(mu);
                continue;
            }
            let mut numer: i64 = 0;
            let mut shifted = eps.clone();
            for a in 0..=l {
                for b in (a + 1)..=l {
                    // α = ε_a - ε_b; walk the string μ + kα until it leaves the weights.
                    let mut k = 1;
                    loop {
                        shifted.copy_from_slice(&eps);
                        shifted[a] += k;
                        shifted[b] -= k;
                        let mut key = shifted.clone();
                        key.sort_unstable_by(|x, y| y.cmp(x));
                        match entries.get(&key) {
                            Some(&m) => {
                                let pairing = shifted[a] - shifted[b];
                                numer += pairing * m as i64;
                            }
                            None => break,
                        }
                        k += 1;
                    }
                }
            }
            let denom = top_norm - norm(&eps);
            assert!(denom > 0, "Freudenthal denominator must be positive");
            numer *= 2;
            assert_eq!(numer % denom, 0, "non-integral Freudenthal quotient at {mu}");
            let m = numer / denom;
            assert!(m >= 1, "subdominant weight with multiplicity {m} at {mu}");
            entries.insert(eps, m as u64);
            order.push(mu);
        }
        order.sort();
        Ok(WeylMultiplicityTable {
            lambda: lambda.clone(),
            entries,
            order,
        })
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// Dominant weights of the table in lexicographic order.
    pub fn weights(&self) -> &[Weight] {
        &self.order
    }

    pub fn get(&self, mu: &Weight) -> Option<u64> {
        if mu.rank() != self.lambda.rank() || !mu.is_dominant() {
            return None;
        }
        let n = self.lambda.rank().get() as i64 + 1;
        let diff = self.lambda.size() - mu.size();
        if diff.rem_euclid(n) != 0 {
            return None;
        }
        let shift = diff / n;
        let key: Vec<i64> = mu.eps().into_iter().map(|x| x + shift).collect();
        self.entries.get(&key).copied()
    }

    /// `Σ |μ^W| m(μ)`, which must equal the Weyl dimension.
    pub fn weighted_sum(&self) -> BigUint {
        self.order
            .iter()
            .map(|mu| orbit_size(mu).expect("dominant") * self.get(mu).expect("present"))
            .sum()
    }
}

fn cache() -> &'static RwLock<HashMap<Weight, Arc<WeylMultiplicityTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<Weight, Arc<WeylMultiplicityTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared, memoized table for `λ`. Concurrent callers may both compute a
/// missing table; the first insert wins and both see equal data.
pub fn multiplicity_table(lambda: &Weight) -> Result<Arc<WeylMultiplicityTable>> {
    if let Some(t) = cache().read().expect("cache poisoned").get(lambda) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(WeylMultiplicityTable::new(lambda)?);
    let mut guard = cache().write().expect("cache poisoned");
    Ok(Arc::clone(guard.entry(lambda.clone()).or_insert(table)))
}

/// `m_{V(λ)}(μ)` for dominant `μ ≼ λ`.
pub fn weyl_multiplicity(lambda: &Weight, mu: &Weight) -> Result<u64> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.clone()));
    }
    if root_coordinates(lambda, mu)?.is_none() {
        return Err(Error::NotSubdominant {
            lambda: lambda.clone(),
            mu: mu.clone(),
        });
    }
    let table = multiplicity_table(lambda)?;
    table.get(mu).ok_or_else(|| Error::NotSubdominant {
        lambda: lambda.clone(),
        mu: mu.clone(),
    })
}

/// `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(lambda: &Weight) -> Result<BigUint> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let l = lambda.rank().get();
    let eps = lambda.eps();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for a in 0..=l {
        for b in (a + 1)..=l {
            let gap = (b - a) as i64;
            num *= (eps[a] - eps[b] + gap) as u64;
            den *= gap as u64;
        }
    }
    Ok(num / den)
}
