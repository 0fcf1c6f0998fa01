//! The Weyl module `V(λ)` realized inside `⊗_k Γ^{a_k}(Λ^k V)`, `V` the
//! natural module, and its admissible lattice built one weight at a time.
//!
//! A basis vector of the ambient space is a multiset of subsets of
//! `{1, ..., l+1}` stored as sorted bitmasks; subsets of size `k` belong to
//! the `Γ^{a_k}(Λ^k V)` factor. The basis is the orbit-sum basis of the
//! symmetric tensors, on which the invariant form is diagonal with weight
//! `Π_k a_k! / Π_S m_S!` and the highest weight vector has norm 1.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::freudenthal::weyl_multiplicity;
use crate::linalg::{rank_residues, IntMatrix, LatticeBasis};
use crate::prime::Prime;
use crate::root_system::{root_coordinates, PositiveRoot, Weight};
use crate::verma_gram::{check_restricted, GramMatrix, PBWMonomial};

pub type Key = Vec<u64>;
pub type TensorVector = HashMap<Key, BigInt>;

/// Default cap on the total lattice rank held across all layers.
pub const DEFAULT_LATTICE_CAP: usize = 2_000_000;

fn add(out: &mut TensorVector, k: Key, c: BigInt) {
    use std::collections::hash_map::Entry;
    if c.is_zero() {
        return;
    }
    match out.entry(k) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// The highest weight vector `⊗_k (e_1 ∧ ... ∧ e_k)^{a_k}`.
pub fn highest_vector(lambda: &Weight) -> Result<TensorVector> {
    let l = lambda.rank().get();
    if l + 1 > 64 {
        return Err(Error::ResourceExceeded {
            what: "tensor realization rank".into(),
            size: l,
            cap: 63,
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let mut key = Vec::new();
    for k in 1..=l {
        let mask = (1u64 << k) - 1;
        for _ in 0..lambda.coeff(k) {
            key.push(mask);
        }
    }
    key.sort_unstable();
    let mut v = TensorVector::new();
    v.insert(key, BigInt::one());
    Ok(v)
}

/// `E_{to,from}` (bit indices) on one basis vector, accumulated into `out`.
fn unit_key(from: usize, to: usize, key: &[u64], coeff: &BigInt, out: &mut TensorVector) {
    let from_bit = 1u64 << from;
    let to_bit = 1u64 << to;
    let (lo, hi) = (from.min(to), from.max(to));
    let between = ((1u64 << hi) - 1) & !((1u64 << (lo + 1)) - 1);
    let mut idx = 0;
    while idx < key.len() {
        let s = key[idx];
        let mut run = 1;
        while idx + run < key.len() && key[idx + run] == s {
            run += 1;
        }
        if s & from_bit != 0 && s & to_bit == 0 {
            let t = (s & !from_bit) | to_bit;
            let sign = if (s & between).count_ones().is_multiple_of(2) { 1 } else { -1 };
            let mut nk = key.to_vec();
            nk[idx] = t;
            nk.sort_unstable();
            let mult = nk.iter().filter(|&&x| x == t).count() as i64;
            add(out, nk, coeff * (sign * mult));
        }
        idx += run;
    }
}

fn unit_vec(from: usize, to: usize, v: &TensorVector) -> TensorVector {
    let mut out = TensorVector::new();
    for (k, c) in v {
        unit_key(from, to, k, c, &mut out);
    }
    out
}

fn lower_vec(beta: PositiveRoot, v: &TensorVector) -> TensorVector {
    let (a, b) = beta.eps_pair();
    unit_vec(a, b, v)
}

/// `f_β v`.
pub fn lower(beta: PositiveRoot, v: &TensorVector) -> TensorVector {
    lower_vec(beta, v)
}

/// `e_α v`.
pub fn raise(alpha: PositiveRoot, v: &TensorVector) -> TensorVector {
    let (a, b) = alpha.eps_pair();
    unit_vec(b, a, v)
}

/// `v + c w`.
pub fn combine(v: &TensorVector, c: &BigInt, w: &TensorVector) -> TensorVector {
    let mut out = v.clone();
    for (k, d) in w {
        add(&mut out, k.clone(), c * d);
    }
    out
}

/// `f_β^{(s)} v`.
pub fn lower_divided(beta: PositiveRoot, s: u32, v: &TensorVector) -> TensorVector {
    let mut cur = v.clone();
    for _ in 0..s {
        cur = lower_vec(beta, &cur);
    }
    let fact: BigInt = (1..=s).fold(BigInt::one(), |acc, k| acc * k);
    if !fact.is_one() {
        for c in cur.values_mut() {
            let (q, r) = c.div_rem(&fact);
            assert!(r.is_zero(), "divided power left the lattice");
            *c = q;
        }
    }
    cur
}

/// Norm of a basis vector under the invariant form.
pub fn basis_norm(key: &[u64]) -> BigInt {
    let mut by_size: BTreeMap<u32, u64> = BTreeMap::new();
    for &s in key {
        *by_size.entry(s.count_ones()).or_default() += 1;
    }
    let mut num = BigInt::one();
    for (_, a) in by_size {
        for t in 2..=a {
            num *= t;
        }
    }
    let mut i = 0;
    while i < key.len() {
        let mut run = 1u64;
        while i + (run as usize) < key.len() && key[i + run as usize] == key[i] {
            run += 1;
        }
        for t in 2..=run {
            num /= t;
        }
        i += run as usize;
    }
    num
}

/// Invariant form on the ambient space.
pub fn form(x: &TensorVector, y: &TensorVector) -> BigInt {
    let (small, large) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    small
        .iter()
        .filter_map(|(k, c)| large.get(k).map(|d| c * d * basis_norm(k)))
        .sum()
}

/// `m v^λ` inside the realization.
pub fn apply_monomial(lambda: &Weight, m: &PBWMonomial) -> Result<TensorVector> {
    let mut v = highest_vector(lambda)?;
    for &(b, s) in m.factors().iter().rev() {
        v = lower_divided(b, s, &v);
    }
    Ok(v)
}

/// Gram matrix of the contravariant form on `labels`, evaluated in the
/// realization rather than the Verma module.
pub fn gram_realized(lambda: &Weight, labels: Vec<PBWMonomial>) -> Result<GramMatrix> {
    let vecs: Vec<TensorVector> = labels
        .par_iter()
        .map(|m| apply_monomial(lambda, m))
        .collect::<Result<_>>()?;
    let n = labels.len();
    let mut matrix = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let f = form(&vecs[i], &vecs[j]);
            matrix[(i, j)] = f.clone();
            matrix[(j, i)] = f;
        }
    }
    Ok(GramMatrix { labels, matrix })
}

/// A Z-basis of one weight space of the admissible lattice, in sparse form.
#[derive(Debug, Clone, Default)]
pub struct LatticeLayer {
    pub basis: Vec<TensorVector>,
}

impl LatticeLayer {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

fn echelon(gens: Vec<TensorVector>) -> LatticeLayer {
    let mut cols: BTreeMap<Key, usize> = BTreeMap::new();
    for g in &gens {
        for k in g.keys() {
            let n = cols.len();
            cols.entry(k.clone()).or_insert(n);
        }
    }
    // Reindex in sorted key order for determinism.
    let keys: Vec<Key> = cols.keys().cloned().collect();
    for (i, k) in keys.iter().enumerate() {
        cols.insert(k.clone(), i);
    }
    let mut lb = LatticeBasis::new(keys.len());
    for g in gens {
        let mut row = vec![BigInt::zero(); keys.len()];
        for (k, c) in g {
            row[cols[&k]] = c;
        }
        lb.insert(row);
    }
    let basis = lb
        .into_rows()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (keys[i].clone(), c))
                .collect()
        })
        .collect();
    LatticeLayer { basis }
}

/// Admissible lattice of `V(λ)` on every weight between `μ` and `λ`.
pub struct Lattice {
    lambda: Weight,
    layers: HashMap<Vec<i64>, LatticeLayer>,
}

impl Lattice {
    /// Builds `V_Z,ν = Σ_{β, s} f_β^{(s)} V_Z,ν+sβ` for all weights `ν` with
    /// `μ ≼ ν ≼ λ` that occur in `V(λ)`, processed by height of `λ - ν`.
    pub fn build(lambda: &Weight, mu: &Weight, cap: usize) -> Result<Self> {
        let top = root_coordinates(lambda, mu)?.ok_or_else(|| Error::NotSubdominant {
            lambda: lambda.clone(),
            mu: mu.clone(),
        })?;
        let bound = top.coeffs().to_vec();
        let l = bound.len();
        let roots = PositiveRoot::all(lambda.rank());
        let mut layers: HashMap<Vec<i64>, LatticeLayer> = HashMap::new();
        layers.insert(
            vec![0; l],
            LatticeLayer {
                basis: vec![highest_vector(lambda)?],
            },
        );
        let mut frontier = vec![vec![0i64; l]];
        let mut held = 1usize;
        while !frontier.is_empty() {
            // Next layer: one simple root below the current frontier.
            let mut next: Vec<Vec<i64>> = Vec::new();
            for c in &frontier {
                for i in 0..l {
                    if c[i] < bound[i] {
                        let mut d = c.clone();
                        d[i] += 1;
                        next.push(d);
                    }
                }
            }
            next.sort();
            next.dedup();
            let built: Vec<(Vec<i64>, LatticeLayer)> = next
                .into_par_iter()
                .map(|c| {
                    let mut gens = Vec::new();
                    for &b in &roots {
                        let rv = b.to_root_vector(lambda.rank());
                        for s in 1u32.. {
                            let src: Vec<i64> =
                                c.iter().zip(rv.coeffs()).map(|(x, y)| x - s as i64 * y).collect();
                            if src.iter().any(|&x| x < 0) {
                                break;
                            }
                            if let Some(layer) = layers.get(&src) {
                                for v in &layer.basis {
                                    let w = lower_divided(b, s, v);
                                    if !w.is_empty() {
                                        gens.push(w);
                                    }
                                }
                            }
                        }
                    }
                    (c, echelon(gens))
                })
                .collect();
            frontier.clear();
            for (c, layer) in built {
                if layer.rank() > 0 {
                    held += layer.rank();
                    frontier.push(c.clone());
                    layers.insert(c, layer);
                }
            }
            if held > cap {
                return Err(Error::ResourceExceeded {
                    what: format!("lattice of V({lambda}) down to {mu}"),
                    size: held,
                    cap,
                });
            }
        }
        Ok(Lattice {
            lambda: lambda.clone(),
            layers,
        })
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn layer(&self, mu: &Weight) -> Option<&LatticeLayer> {
        let c = root_coordinates(&self.lambda, mu).ok()??;
        self.layers.get(c.coeffs())
    }

    /// Gram matrix of the form on the lattice basis at `μ`.
    pub fn gram(&self, mu: &Weight) -> IntMatrix {
        let Some(layer) = self.layer(mu) else {
            return IntMatrix::zeros(0, 0);
        };
        let n = layer.rank();
        let mut g = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let f = form(&layer.basis[i], &layer.basis[j]);
                g[(i, j)] = f.clone();
                g[(j, i)] = f;
            }
        }
        g
    }

    /// Rank modulo `p` of the form on the lattice at `μ`.
    pub fn rank_mod_p(&self, mu: &Weight, p: Prime) -> usize {
        let Some(layer) = self.layer(mu) else {
            return 0;
        };
        let pm = BigInt::from(p.get());
        let n = layer.rank();
        let rows: Vec<Vec<u64>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| {
                        form(&layer.basis[i], &layer.basis[j])
                            .mod_floor(&pm)
                            .to_u64()
                            .expect("residue")
                    })
                    .collect()
            })
            .collect();
        rank_residues(rows, p.get())
    }
}

/// `m_{L(λ)}(μ)`: rank mod `p` of the contravariant form on the admissible
/// lattice of `V(λ)_μ`.
pub fn irreducible_multiplicity(lambda: &Weight, mu: &Weight, p: Prime) -> Result<u64> {
    irreducible_multiplicity_capped(lambda, mu, p, DEFAULT_LATTICE_CAP)
}

pub fn irreducible_multiplicity_capped(
    lambda: &Weight,
    mu: &Weight,
    p: Prime,
    cap: usize,
) -> Result<u64> {
    check_restricted(lambda, mu, p)?;
    if lambda == mu {
        return Ok(1);
    }
    let lattice = Lattice::build(lambda, mu, cap)?;
    let layer_rank = lattice.layer(mu).map_or(0, LatticeLayer::rank) as u64;
    let expect = weyl_multiplicity(lambda, mu)?;
    assert_eq!(layer_rank, expect, "lattice rank disagrees with Freudenthal at {mu} in V({lambda})");
    Ok(lattice.rank_mod_p(mu, p) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rank_mod_p, smith_normal_form};
    use crate::root_system::Rank;
    use crate::verma_gram::{gram_matrix, spanning_multiplicity, DEFAULT_MONOMIAL_CAP};
    use crate::weyl_orbits::subdominant_weights;

    fn r(l: usize) -> Rank {
        Rank::new(l).unwrap()
    }

    #[test]
    fn wedge_signs() {
        // f_{1,2} sends e_1 to e_3; on e_1 ∧ e_2 this is e_3 ∧ e_2 = -e_2 ∧ e_3.
        let lam = Weight::fundamental(r(3), 2);
        let v = highest_vector(&lam).unwrap();
        let w = lower_divided(PositiveRoot::new(1, 2), 1, &v);
        assert_eq!(w.len(), 1);
        assert_eq!(w.get(&vec![0b110]), Some(&BigInt::from(-1)));
    }

    #[test]
    fn realized_gram_equals_verma_gram() {
        for coeffs in [vec![2, 0, 1], vec![1, 1, 1], vec![0, 2, 0], vec![3, 0, 0], vec![1, 0, 2], vec![2, 1]] {
            let lam = Weight::new(coeffs).unwrap();
            for mu in subdominant_weights(&lam).unwrap() {
                let g = gram_matrix(&lam, &mu).unwrap();
                let h = gram_realized(&lam, g.labels.clone()).unwrap();
                assert_eq!(g.matrix, h.matrix, "{lam} at {mu}");
            }
        }
    }

    #[test]
    fn lattice_route_matches_spanning_route() {
        for coeffs in [vec![2, 0, 1], vec![1, 1, 1], vec![0, 2, 0], vec![1, 0, 1, 0], vec![2, 0, 0, 2], vec![1, 2, 0]] {
            let lam = Weight::new(coeffs).unwrap();
            for p in [2u64, 3, 5, 7] {
                let p = Prime::new(p).unwrap();
                if !lam.is_restricted(p.get()) {
                    continue;
                }
                for mu in subdominant_weights(&lam).unwrap() {
                    let a = irreducible_multiplicity(&lam, &mu, p).unwrap();
                    let b = spanning_multiplicity(&lam, &mu, p, DEFAULT_MONOMIAL_CAP).unwrap();
                    assert_eq!(a, b, "{lam} at {mu}, p={p}");
                }
            }
        }
    }

    #[test]
    fn lattice_gram_is_unimodularly_compatible() {
        // The spanning-set Gram and the lattice-basis Gram present the same
        // form on the same lattice, so their nonzero divisors agree.
        let lam = Weight::new(vec![2, 0, 2]).unwrap();
        let mu = Weight::zero(r(3));
        let lat = Lattice::build(&lam, &mu, DEFAULT_LATTICE_CAP).unwrap();
        let a = smith_normal_form(&lat.gram(&mu));
        let b: Vec<BigInt> = smith_normal_form(&gram_matrix(&lam, &mu).unwrap().matrix)
            .into_iter()
            .filter(|d| !d.is_zero())
            .collect();
        assert_eq!(a, b);
        for p in [2u64, 3, 5, 7] {
            let p = Prime::new(p).unwrap();
            assert_eq!(lat.rank_mod_p(&mu, p), rank_mod_p(&lat.gram(&mu), p));
        }
    }

    #[test]
    fn basis_norms() {
        assert_eq!(basis_norm(&[0b1, 0b1, 0b10]), BigInt::from(3));
        assert_eq!(basis_norm(&[0b1, 0b10, 0b100]), BigInt::from(6));
        assert_eq!(basis_norm(&[0b11, 0b11]), BigInt::one());
        assert_eq!(basis_norm(&[0b1, 0b11]), BigInt::one());
    }

    #[test]
    fn restricted_weights_only() {
        let lam = Weight::new(vec![3, 0]).unwrap();
        let p = Prime::new(3).unwrap();
        assert!(matches!(
            irreducible_multiplicity(&lam, &Weight::new(vec![1, 1]).unwrap(), p),
            Err(Error::NotRestricted { .. })
        ));
    }
}
