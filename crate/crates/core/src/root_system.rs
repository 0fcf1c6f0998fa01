//! The A_l root datum: weights in the fundamental-weight basis, root-lattice
//! vectors in the simple-root basis, positive roots as intervals, dominance,
//! duality and the invariant form.
//!
//! Internally most computations go through ε-coordinates: a dominant weight
//! `a_1 λ_1 + ... + a_l λ_l` becomes the partition `(P_1, ..., P_l, 0)` with
//! `P_k = a_k + ... + a_l`. Two weights in the same coset of the root lattice
//! differ there by an element of the hyperplane `Σ x_i = 0` after a uniform
//! shift, which is how [`root_coordinates`] decides comparability.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Rank `l` of `A_l`; the group is `SL_{l+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Rank(usize);

impl Rank {
    pub fn new(l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Rank(l))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Number of positive roots, `l(l+1)/2`.
    pub fn positive_root_count(self) -> usize {
        self.0 * (self.0 + 1) / 2
    }
}

/// A weight `a_1 λ_1 + ... + a_l λ_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coeffs: Vec<i64>,
}

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroRank);
        }
        Ok(Weight { coeffs })
    }

    pub fn zero(rank: Rank) -> Self {
        Weight {
            coeffs: vec![0; rank.get()],
        }
    }

    /// The fundamental weight `λ_i`, 1-based.
    pub fn fundamental(rank: Rank, i: usize) -> Self {
        assert!((1..=rank.get()).contains(&i), "fundamental index out of range");
        let mut w = Self::zero(rank);
        w.coeffs[i - 1] = 1;
        w
    }

    /// Builds a weight from `(index, coefficient)` pairs with 1-based indices.
    pub fn from_terms(rank: Rank, terms: &[(usize, i64)]) -> Self {
        let mut w = Self::zero(rank);
        for &(i, a) in terms {
            assert!((1..=rank.get()).contains(&i), "fundamental index out of range");
            w.coeffs[i - 1] += a;
        }
        w
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `λ_i`, 1-based. Indices `0` and `l+1` read as zero.
    pub fn coeff(&self, i: usize) -> i64 {
        if i == 0 || i > self.coeffs.len() {
            0
        } else {
            self.coeffs[i - 1]
        }
    }

    pub fn rank(&self) -> Rank {
        Rank(self.coeffs.len())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&a| a >= 0)
    }

    pub fn is_restricted(&self, p: u64) -> bool {
        self.coeffs.iter().all(|&a| a >= 0 && (a as u64) < p)
    }

    /// `I_λ`: 1-based indices of the nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Gaps of the support extended by `0` and `l+1`.
    pub fn support_gaps(&self) -> Vec<usize> {
        let mut prev = 0;
        let mut gaps = Vec::new();
        for i in self.support() {
            gaps.push(i - prev);
            prev = i;
        }
        gaps.push(self.coeffs.len() + 1 - prev);
        gaps
    }

    /// `Δ_λ`, the largest gap of the extended support.
    pub fn delta(&self) -> usize {
        self.support_gaps().into_iter().max().unwrap_or(0)
    }

    /// Highest weight of the dual module: the coefficient vector reversed.
    pub fn dual(&self) -> Weight {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Weight { coeffs }
    }

    pub fn is_self_dual(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Representative of `{λ, λ*}` used when listing weights up to duality:
    /// the lexicographically larger coefficient vector, so `λ_1` is kept
    /// over `λ_l`.
    pub fn duality_representative(&self) -> Weight {
        let d = self.dual();
        if d.coeffs > self.coeffs {
            d
        } else {
            self.clone()
        }
    }

    /// Sum of `i * a_i`, the number of boxes of the associated diagram.
    pub fn size(&self) -> i64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as i64 + 1) * a)
            .sum()
    }

    /// ε-coordinates `(P_1, ..., P_l, 0)` with `P_k = a_k + ... + a_l`.
    pub fn eps(&self) -> Vec<i64> {
        let l = self.coeffs.len();
        let mut out = vec![0; l + 1];
        for k in (0..l).rev() {
            out[k] = out[k + 1] + self.coeffs[k];
        }
        out
    }

    /// Inverse of [`Weight::eps`]; any uniform shift is ignored.
    pub fn from_eps(eps: &[i64]) -> Weight {
        assert!(eps.len() >= 2, "ε-vector too short");
        let coeffs = eps.windows(2).map(|w| w[0] - w[1]).collect();
        Weight { coeffs }
    }

    /// `λ - Σ c_i α_i`.
    pub fn sub_roots(&self, c: &RootVector) -> Result<Weight> {
        check_rank(self.coeffs.len(), c.coeffs.len())?;
        let l = self.coeffs.len();
        let mut coeffs = self.coeffs.clone();
        for i in 0..l {
            // α_i = -λ_{i-1} + 2λ_i - λ_{i+1}
            let ci = c.coeffs[i];
            coeffs[i] -= 2 * ci;
            if i > 0 {
                coeffs[i - 1] += ci;
            }
            if i + 1 < l {
                coeffs[i + 1] += ci;
            }
        }
        Ok(Weight { coeffs })
    }

    /// Parses the sparse form `i1:a1,i2:a2` (1-based, `0` or empty for the
    /// zero weight) or the dense form `[a1,...,al]`.
    pub fn parse(input: &str, rank: Rank) -> Result<Weight> {
        let s = input.trim();
        let err = |reason: String| Error::ParseWeight {
            input: input.to_string(),
            reason,
        };
        if let Some(body) = s.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| err("missing closing bracket".into()))?;
            let coeffs = if body.trim().is_empty() {
                Vec::new()
            } else {
                body.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<i64>()
                            .map_err(|e| err(format!("bad coefficient {t:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            if coeffs.len() != rank.get() {
                return Err(err(format!(
                    "expected {} coefficients, found {}",
                    rank.get(),
                    coeffs.len()
                )));
            }
            return Ok(Weight { coeffs });
        }
        let mut w = Weight::zero(rank);
        if s.is_empty() || s == "0" {
            return Ok(w);
        }
        for term in s.split(',') {
            let (i, a) = term
                .split_once(':')
                .ok_or_else(|| err(format!("term {term:?} is not index:coefficient")))?;
            let i: usize = i
                .trim()
                .parse()
                .map_err(|e| err(format!("bad index {i:?}: {e}")))?;
            let a: i64 = a
                .trim()
                .parse()
                .map_err(|e| err(format!("bad coefficient {a:?}: {e}")))?;
            if i == 0 || i > rank.get() {
                return Err(err(format!("index {i} outside 1..={}", rank.get())));
            }
            if w.coeffs[i - 1] != 0 {
                return Err(err(format!("index {i} given twice")));
            }
            w.coeffs[i - 1] = a;
        }
        Ok(w)
    }

    /// Sparse text form, `0` for the zero weight.
    pub fn to_sparse_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, a)| format!("{}:{}", i + 1, a))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn to_dense_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|a| a.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sparse_string())
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_sparse_string())
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.coeffs.len(), rhs.coeffs.len(), "rank mismatch");
        Weight {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// `Σ c_i α_i` in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootVector {
    coeffs: Vec<i64>,
}

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        RootVector { coeffs }
    }

    pub fn zero(rank: Rank) -> Self {
        RootVector {
            coeffs: vec![0; rank.get()],
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn reversed(&self) -> RootVector {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        RootVector { coeffs }
    }

    /// ε-coordinates: `c_i - c_{i-1}` sign-flipped, i.e. `Σ c_i (ε_i - ε_{i+1})`.
    pub fn eps(&self) -> Vec<i64> {
        let l = self.coeffs.len();
        let mut out = vec![0; l + 1];
        for i in 0..l {
            out[i] += self.coeffs[i];
            out[i + 1] -= self.coeffs[i];
        }
        out
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The positive root `α_i + ... + α_j`, `1 <= i <= j <= l`. In
/// ε-coordinates this is `ε_i - ε_{j+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PositiveRoot {
    pub i: u8,
    pub j: u8,
}

impl PositiveRoot {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(1 <= i && i <= j && j < 256, "invalid root interval ({i},{j})");
        PositiveRoot {
            i: i as u8,
            j: j as u8,
        }
    }

    pub fn simple(i: usize) -> Self {
        Self::new(i, i)
    }

    /// All positive roots in lexicographic order on `(i, j)`.
    pub fn all(rank: Rank) -> Vec<PositiveRoot> {
        let l = rank.get();
        (1..=l)
            .flat_map(|i| (i..=l).map(move |j| PositiveRoot::new(i, j)))
            .collect()
    }

    pub fn height(self) -> usize {
        (self.j - self.i + 1) as usize
    }

    pub fn is_simple(self) -> bool {
        self.i == self.j
    }

    /// The ε-indices `(a, b)`, 0-based, with the root equal to `ε_a - ε_b`.
    pub fn eps_pair(self) -> (usize, usize) {
        (self.i as usize - 1, self.j as usize)
    }

    pub fn to_root_vector(self, rank: Rank) -> RootVector {
        let mut c = vec![0; rank.get()];
        for k in self.i..=self.j {
            c[k as usize - 1] = 1;
        }
        RootVector { coeffs: c }
    }

    /// Pairing `<ν, self^∨>` of a weight given in ε-coordinates.
    pub fn coroot_pairing(self, eps: &[i64]) -> i64 {
        let (a, b) = self.eps_pair();
        eps[a] - eps[b]
    }

    /// Sum of two roots when it is a root.
    pub fn checked_add(self, other: PositiveRoot) -> Option<PositiveRoot> {
        if self.j + 1 == other.i {
            Some(PositiveRoot {
                i: self.i,
                j: other.j,
            })
        } else if other.j + 1 == self.i {
            Some(PositiveRoot {
                i: other.i,
                j: self.j,
            })
        } else {
            None
        }
    }

    /// `self - other` when it is a positive root.
    pub fn checked_sub(self, other: PositiveRoot) -> Option<PositiveRoot> {
        if self.i == other.i && other.j < self.j {
            Some(PositiveRoot {
                i: other.j + 1,
                j: self.j,
            })
        } else if self.j == other.j && self.i < other.i {
            Some(PositiveRoot {
                i: self.i,
                j: other.i - 1,
            })
        } else {
            None
        }
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{},{}", self.i, self.j)
    }
}

impl FromStr for Rank {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let l: usize = s
            .trim()
            .parse()
            .map_err(|e| Error::Invalid(format!("bad rank {s:?}: {e}")))?;
        Rank::new(l)
    }
}

fn check_rank(a: usize, b: usize) -> Result<()> {
    if a != b {
        Err(Error::RankMismatch { left: a, right: b })
    } else {
        Ok(())
    }
}

/// `λ - μ` in the simple-root basis, or `None` when `μ ⋠ λ`.
pub fn root_coordinates(lambda: &Weight, mu: &Weight) -> Result<Option<RootVector>> {
    check_rank(lambda.coeffs.len(), mu.coeffs.len())?;
    let l = lambda.coeffs.len();
    let n = l as i64 + 1;
    let d: Vec<i64> = lambda
        .eps()
        .iter()
        .zip(mu.eps())
        .map(|(x, y)| x - y)
        .collect();
    let total: i64 = d.iter().sum();
    if total.rem_euclid(n) != 0 {
        return Ok(None);
    }
    let shift = total / n;
    let mut c = Vec::with_capacity(l);
    let mut acc = 0;
    for &dk in d.iter().take(l) {
        acc += dk - shift;
        if acc < 0 {
            return Ok(None);
        }
        c.push(acc);
    }
    Ok(Some(RootVector { coeffs: c }))
}

/// `μ ≼ λ`.
pub fn dominance_leq(mu: &Weight, lambda: &Weight) -> Result<bool> {
    Ok(root_coordinates(lambda, mu)?.is_some())
}

/// The weight ρ, stored as `(1, ..., 1)`.
pub fn rho(rank: Rank) -> Weight {
    Weight {
        coeffs: vec![1; rank.get()],
    }
}

/// A vector in the `(l+1)`-dimensional ε-realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsVector(pub Vec<i64>);

impl From<&Weight> for EpsVector {
    fn from(w: &Weight) -> Self {
        EpsVector(w.eps())
    }
}

impl From<&RootVector> for EpsVector {
    fn from(c: &RootVector) -> Self {
        EpsVector(c.eps())
    }
}

/// The W-invariant form normalized so that roots have length 2. The trace
/// part is projected out; for root-lattice arguments it is zero anyway.
pub fn inner_product(x: &EpsVector, y: &EpsVector) -> Ratio<i64> {
    assert_eq!(x.0.len(), y.0.len(), "rank mismatch");
    let n = x.0.len() as i64;
    let dot: i64 = x.0.iter().zip(&y.0).map(|(a, b)| a * b).sum();
    let sx: i64 = x.0.iter().sum();
    let sy: i64 = y.0.iter().sum();
    Ratio::new(dot * n - sx * sy, n)
}
