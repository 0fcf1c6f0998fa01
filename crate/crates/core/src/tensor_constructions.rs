//! Explicit models of `L(λ_1+λ_2)`, `L(λ_1+λ_{l-1})` and `L(2λ_1+λ_l)`
//! inside tensor powers of the natural module over `F_p`, and the singular
//! vectors cutting out their second composition factors.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::freudenthal::weyl_dimension;
use crate::linalg::SparseEliminator;
use crate::prime::Prime;
use crate::realization::{self, TensorVector};
use crate::root_system::{PositiveRoot, Rank, Weight};

/// Largest rank for the contraction constructions.
pub const DEFAULT_CONTRACTION_CAP: usize = 8;
/// Largest rank for the Young symmetrizer, whose ambient space is `(l+1)^{l+2}`.
pub const DEFAULT_YOUNG_CAP: usize = 4;

/// Element of `V^{⊗k}` with integer coefficients; indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseTensor {
    dim: usize,
    degree: usize,
    entries: BTreeMap<Vec<u8>, i64>,
}

impl SparseTensor {
    pub fn zero(dim: usize, degree: usize) -> Self {
        SparseTensor {
            dim,
            degree,
            entries: BTreeMap::new(),
        }
    }

    /// `e_{b_1} ⊗ ... ⊗ e_{b_k}`.
    pub fn basis(dim: usize, index: &[u8]) -> Self {
        assert!(index.iter().all(|&b| (b as usize) < dim), "index out of range");
        let mut t = SparseTensor::zero(dim, index.len());
        t.entries.insert(index.to_vec(), 1);
        t
    }

    /// Antisymmetrization of `e_{b_1} ⊗ ... ⊗ e_{b_k}`, i.e. `e_{b_1} ∧ ... ∧ e_{b_k}`.
    pub fn wedge(dim: usize, index: &[u8]) -> Self {
        let all: Vec<usize> = (0..index.len()).collect();
        SparseTensor::basis(dim, index).antisymmetrize(&all)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[u8], i64)> {
        self.entries.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn coefficient(&self, index: &[u8]) -> i64 {
        self.entries.get(index).copied().unwrap_or(0)
    }

    fn push(&mut self, index: Vec<u8>, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(index) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// `self + c·other`.
    pub fn add_scaled(&mut self, other: &SparseTensor, c: i64) {
        assert_eq!((self.dim, self.degree), (other.dim, other.degree), "shape mismatch");
        for (k, &v) in &other.entries {
            self.push(k.clone(), c * v);
        }
    }

    pub fn scaled(&self, c: i64) -> SparseTensor {
        let mut out = SparseTensor::zero(self.dim, self.degree);
        out.add_scaled(self, c);
        out
    }

    /// `a ⊗ b`.
    pub fn tensor(&self, other: &SparseTensor) -> SparseTensor {
        assert_eq!(self.dim, other.dim, "shape mismatch");
        let mut out = SparseTensor::zero(self.dim, self.degree + other.degree);
        for (a, &x) in &self.entries {
            for (b, &y) in &other.entries {
                let mut k = a.clone();
                k.extend_from_slice(b);
                out.push(k, x * y);
            }
        }
        out
    }

    /// The derivation induced by `E_{to,from}`: each position holding
    /// `from` in turn is changed to `to`.
    pub fn apply_unit(&self, from: u8, to: u8) -> SparseTensor {
        let mut out = SparseTensor::zero(self.dim, self.degree);
        for (k, &c) in &self.entries {
            for pos in 0..k.len() {
                if k[pos] == from {
                    let mut nk = k.clone();
                    nk[pos] = to;
                    out.push(nk, c);
                }
            }
        }
        out
    }

    /// `f_β`, acting as `E_{j+1,i}` on every factor.
    pub fn lower(&self, beta: PositiveRoot) -> SparseTensor {
        let (a, b) = beta.eps_pair();
        self.apply_unit(a as u8, b as u8)
    }

    /// `e_α`, acting as `E_{i,j+1}` on every factor.
    pub fn raise(&self, alpha: PositiveRoot) -> SparseTensor {
        let (a, b) = alpha.eps_pair();
        self.apply_unit(b as u8, a as u8)
    }

    fn permuted_sum(&self, positions: &[usize], signed: bool) -> SparseTensor {
        let mut out = SparseTensor::zero(self.dim, self.degree);
        for (perm, sign) in permutations(positions.len()) {
            let s = if signed { sign } else { 1 };
            for (k, &c) in &self.entries {
                let mut nk = k.clone();
                for (slot, &src) in perm.iter().enumerate() {
                    nk[positions[slot]] = k[positions[src]];
                }
                out.push(nk, s * c);
            }
        }
        out
    }

    /// `Σ_σ σ·t` over permutations of `positions`.
    pub fn symmetrize(&self, positions: &[usize]) -> SparseTensor {
        self.permuted_sum(positions, false)
    }

    /// `Σ_σ sgn(σ) σ·t` over permutations of `positions`.
    pub fn antisymmetrize(&self, positions: &[usize]) -> SparseTensor {
        self.permuted_sum(positions, true)
    }

    /// `φ`: swap the first two factors.
    pub fn swap_first_two(&self) -> SparseTensor {
        let mut out = SparseTensor::zero(self.dim, self.degree);
        for (k, &c) in &self.entries {
            let mut nk = k.clone();
            nk.swap(0, 1);
            out.push(nk, c);
        }
        out
    }

    /// Column index of a basis tensor: the index read in base `dim`.
    pub fn column(&self, index: &[u8]) -> usize {
        index.iter().fold(0usize, |acc, &b| acc * self.dim + b as usize)
    }

    /// `(column, value)` pairs for an eliminator.
    pub fn row(&self) -> Vec<(usize, i64)> {
        self.entries.iter().map(|(k, &c)| (self.column(k), c)).collect()
    }

    /// Whether every coefficient is divisible by `p`.
    pub fn vanishes_mod(&self, p: Prime) -> bool {
        self.entries.values().all(|&c| c.rem_euclid(p.get() as i64) == 0)
    }

    /// Weight in the `ε` basis when all terms share one, else `None`.
    pub fn eps_weight(&self) -> Option<Vec<i64>> {
        let mut found: Option<Vec<i64>> = None;
        for k in self.entries.keys() {
            let mut w = vec![0i64; self.dim];
            for &b in k {
                w[b as usize] += 1;
            }
            match &found {
                Some(f) if *f != w => return None,
                Some(_) => {}
                None => found = Some(w),
            }
        }
        found
    }
}

impl fmt::Display for SparseTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.entries.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·e")?;
            for (q, b) in k.iter().enumerate() {
                if q > 0 {
                    f.write_str("⊗e")?;
                }
                write!(f, "{}", b + 1)?;
            }
        }
        Ok(())
    }
}

/// All permutations of `0..n` with their signs (Heap's algorithm).
fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i64;
    let mut out = vec![(a.clone(), sign)];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Span over `F_p` of the vectors obtained from `seeds` by repeatedly
/// applying simple lowering operators.
pub fn lowering_closure(seeds: &[SparseTensor], rank: usize, p: Prime) -> SparseEliminator {
    let mut elim = SparseEliminator::new(p);
    let mut queue: Vec<SparseTensor> = Vec::new();
    for s in seeds {
        if elim.insert(s.row()) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for k in 1..=rank {
            let w = v.lower(PositiveRoot::simple(k));
            if !w.vanishes_mod(p) && elim.insert(w.row()) {
                queue.push(w);
            }
        }
    }
    elim
}

/// Whether the spans of two generator lists coincide over `F_p`.
pub fn same_span(a: &[SparseTensor], b: &[SparseTensor], p: Prime) -> bool {
    let span = |gens: &[SparseTensor]| {
        let mut e = SparseEliminator::new(p);
        for g in gens {
            e.insert(g.row());
        }
        e
    };
    let ea = span(a);
    let eb = span(b);
    ea.rank() == eb.rank() && b.iter().all(|g| ea.contains(g.row()))
}

fn check_cap(l: usize, cap: usize, what: &str) -> Result<()> {
    if l > cap {
        return Err(Error::ResourceExceeded {
            what: what.to_string(),
            size: l,
            cap,
        });
    }
    Ok(())
}

/// Dimensions for `Ker(V ⊗ Λ^k V → Λ^{k+1} V)` over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionModule {
    pub k: usize,
    pub rank: usize,
    #[serde(rename = "char")]
    pub p: Prime,
    pub kernel: usize,
    /// `dim Ker / Λ^{k+1} V`, present when the embedded `Λ^{k+1} V` lies in the kernel.
    pub quotient: Option<usize>,
}

impl ContractionModule {
    /// The dimension of the irreducible head.
    pub fn irreducible(&self) -> usize {
        self.quotient.unwrap_or(self.kernel)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x as u8);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

pub fn contraction_kernel_dim(k: usize, l: usize, p: Prime) -> Result<ContractionModule> {
    contraction_kernel_dim_capped(k, l, p, DEFAULT_CONTRACTION_CAP)
}

/// `V ⊗ Λ^k V` has basis `e_a ⊗ e_S`; the contraction sends it to
/// `e_a ∧ e_S`, and `Λ^{k+1} V` embeds by `e_T ↦ Σ_q (-1)^q e_{t_q} ⊗ e_{T∖t_q}`.
pub fn contraction_kernel_dim_capped(k: usize, l: usize, p: Prime, cap: usize) -> Result<ContractionModule> {
    if k < 1 || k > l {
        return Err(Error::Invalid(format!("contraction needs 1 <= k <= l, got k = {k}, l = {l}")));
    }
    check_cap(l, cap, "contraction rank")?;
    let n = l + 1;
    let sources = subsets(n, k);
    let targets = subsets(n, k + 1);
    let target_index: BTreeMap<&[u8], usize> = targets.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let source_index: BTreeMap<&[u8], usize> = sources.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let pair = |a: usize, s: usize| a * sources.len() + s;

    let contract = |a: u8, s: &[u8]| -> Option<(usize, i64)> {
        if s.contains(&a) {
            return None;
        }
        let before = s.iter().filter(|&&x| x < a).count();
        let mut t = s.to_vec();
        t.insert(before, a);
        let sign = if before % 2 == 0 { 1 } else { -1 };
        Some((target_index[t.as_slice()], sign))
    };

    let mut image = SparseEliminator::new(p);
    for a in 0..n as u8 {
        for s in &sources {
            if let Some(entry) = contract(a, s) {
                image.insert([entry]);
            }
        }
    }
    let kernel = n * sources.len() - image.rank();

    let mut embedded = SparseEliminator::new(p);
    let mut inside = true;
    for t in &targets {
        let mut row: Vec<(usize, i64)> = Vec::with_capacity(t.len());
        let mut back: BTreeMap<usize, i64> = BTreeMap::new();
        for (q, &a) in t.iter().enumerate() {
            let rest: Vec<u8> = t.iter().copied().filter(|&x| x != a).collect();
            let sign = if q % 2 == 0 { 1 } else { -1 };
            row.push((pair(a as usize, source_index[rest.as_slice()]), sign));
            if let Some((col, s2)) = contract(a, &rest) {
                *back.entry(col).or_default() += sign * s2;
            }
        }
        if back.values().any(|&v| v.rem_euclid(p.get() as i64) != 0) {
            inside = false;
        }
        embedded.insert(row);
    }
    let quotient = inside.then(|| kernel - embedded.rank());
    Ok(ContractionModule {
        k,
        rank: l,
        p,
        kernel,
        quotient,
    })
}

/// Young symmetrizer for the shape `(3, 1^{l-1})` on `V^{⊗(l+2)}`: the row
/// is positions `0, 1, 2` and the column is positions `2, ..., l+1`, so the
/// image of `e_1^{⊗3} ⊗ e_2 ⊗ ... ⊗ e_l` is a multiple of
/// `(e_1·e_1) ⊗ (e_1 ∧ ... ∧ e_l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct YoungSymmetrizer {
    rank: usize,
}

impl YoungSymmetrizer {
    pub fn new(rank: usize) -> Result<Self> {
        if rank < 2 {
            return Err(Error::Invalid(format!("shape (3,1^(l-1)) needs l >= 2, got {rank}")));
        }
        Ok(YoungSymmetrizer { rank })
    }

    pub fn degree(&self) -> usize {
        self.rank + 2
    }

    fn row(&self) -> Vec<usize> {
        vec![0, 1, 2]
    }

    fn column(&self) -> Vec<usize> {
        (2..self.degree()).collect()
    }

    /// `c_T = b_T ∘ a_T`.
    pub fn apply(&self, t: &SparseTensor) -> SparseTensor {
        t.symmetrize(&self.row()).antisymmetrize(&self.column())
    }

    /// Product of hook lengths, the scalar `n` with `c_T² = n c_T`.
    pub fn hook_product(&self) -> i64 {
        let l = self.rank as i64;
        (l + 2) * 2 * (1..l).product::<i64>()
    }

    /// Basis tensors whose images span the image of `c_T`: the row
    /// symmetrizer makes the first three entries unordered, and `c_T`
    /// picks up a sign under permutations of the remaining column entries.
    pub fn generators(&self) -> Vec<Vec<u8>> {
        let n = self.rank + 1;
        let mut out = Vec::new();
        for a in 0..n as u8 {
            for b in a..n as u8 {
                for c in b..n as u8 {
                    for tail in subsets(n, self.rank - 1) {
                        let mut k = vec![a, b, c];
                        k.extend(tail);
                        out.push(k);
                    }
                }
            }
        }
        out
    }
}

/// Dimensions for the model of `L(2λ_1+λ_l)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YoungModule {
    pub rank: usize,
    #[serde(rename = "char")]
    pub p: Prime,
    /// `dim_{F_p}` of the image of `c_T`.
    pub image: usize,
    /// `dim R`, present when `p | l+2`.
    pub r_dim: Option<usize>,
    /// Whether `R` lies in the image.
    pub r_contained: Option<bool>,
    pub irreducible: usize,
}

/// `(id + φ)(e_i ⊗ e_1 ∧ ... ∧ e_{l+1})` for each `i`.
pub fn young_quotient_generators(l: usize) -> Vec<SparseTensor> {
    let n = l + 1;
    let all: Vec<u8> = (0..n as u8).collect();
    let top = SparseTensor::wedge(n, &all);
    (0..n as u8)
        .map(|i| {
            let t = SparseTensor::basis(n, &[i]).tensor(&top);
            let mut s = t.swap_first_two();
            s.add_scaled(&t, 1);
            s
        })
        .collect()
}

pub fn young_symmetrizer_module(l: usize, p: Prime) -> Result<YoungModule> {
    young_symmetrizer_module_capped(l, p, DEFAULT_YOUNG_CAP)
}

pub fn young_symmetrizer_module_capped(l: usize, p: Prime, cap: usize) -> Result<YoungModule> {
    check_cap(l, cap, "Young symmetrizer rank")?;
    let c = YoungSymmetrizer::new(l)?;
    let n = l + 1;
    let mut image = SparseEliminator::new(p);
    for g in c.generators() {
        let v = c.apply(&SparseTensor::basis(n, &g));
        if !v.vanishes_mod(p) {
            image.insert(v.row());
        }
    }
    let image_dim = image.rank();
    let (r_dim, r_contained, irreducible) = if p.epsilon(l as i64 + 2) == 1 {
        let gens = young_quotient_generators(l);
        let mut r = SparseEliminator::new(p);
        for g in &gens {
            r.insert(g.row());
        }
        let contained = gens.iter().all(|g| image.contains(g.row()));
        (Some(r.rank()), Some(contained), image_dim - r.rank())
    } else {
        (None, None, image_dim)
    };
    Ok(YoungModule {
        rank: l,
        p,
        image: image_dim,
        r_dim,
        r_contained,
        irreducible,
    })
}

/// `a_j f_{i,j} v − Σ_{r=i+1}^{j} f_{i,r-1} f_{r,j} v` for any lowering action.
pub fn lemma_combination<V, F, G>(v: &V, i: usize, j: usize, a_j: i64, lower: F, add_scaled: G) -> V
where
    F: Fn(PositiveRoot, &V) -> V,
    G: Fn(&V, i64, &V) -> V,
{
    let mut out = lower(PositiveRoot::new(i, j), v);
    out = add_scaled(&out, a_j - 1, &out);
    for r in (i + 1)..=j {
        let w = lower(PositiveRoot::new(i, r - 1), &lower(PositiveRoot::new(r, j), v));
        out = add_scaled(&out, -1, &w);
    }
    out
}

/// The vector `v_R` for a two-term weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularVector {
    pub lambda: Weight,
    pub i: usize,
    pub j: usize,
    /// `λ − (α_i + ... + α_j)`.
    pub mu: Weight,
    /// `a_i + a_j + j − i`.
    pub divisor: i64,
    /// `v_R` inside the tensor realization of `V(λ)`.
    pub vector: TensorVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularOutcome {
    Singular(SingularVector),
    NotSingular { divisor: i64 },
}

fn two_term_support(lambda: &Weight) -> Result<(usize, usize)> {
    match lambda.support()[..] {
        [i, j] => Ok((i, j)),
        _ => Err(Error::PatternMismatch(lambda.clone())),
    }
}

/// `v_R` in the realization together with its support `(i, j)`, whether or
/// not the divisibility condition holds.
pub fn lemma_vector(lambda: &Weight) -> Result<SingularVector> {
    let (i, j) = two_term_support(lambda)?;
    let top = realization::highest_vector(lambda)?;
    let vector = lemma_combination(&top, i, j, lambda.coeff(j), realization::lower, |x, c, y| {
        realization::combine(x, &BigInt::from(c), y)
    });
    let mut c = vec![0i64; lambda.rank().get()];
    c[i - 1..j].iter_mut().for_each(|x| *x = 1);
    let mu = lambda.sub_roots(&crate::root_system::RootVector::new(c))?;
    Ok(SingularVector {
        lambda: lambda.clone(),
        i,
        j,
        mu,
        divisor: lambda.coeff(i) + lambda.coeff(j) + (j - i) as i64,
        vector,
    })
}

fn vanishes_mod(v: &TensorVector, p: Prime) -> bool {
    let pm = BigInt::from(p.get());
    v.values().all(|c| c.mod_floor(&pm).is_zero())
}

/// Whether `v ≢ 0` and `e_{α_k} v ≡ 0 (mod p)` for every simple root.
pub fn is_singular_mod(v: &TensorVector, rank: Rank, p: Prime) -> bool {
    !vanishes_mod(v, p)
        && (1..=rank.get()).all(|k| vanishes_mod(&realization::raise(PositiveRoot::simple(k), v), p))
}

/// `v_R` when `p | a_i + a_j + j − i`, checked to be a highest weight vector mod `p`.
pub fn singular_vector(lambda: &Weight, p: Prime) -> Result<SingularOutcome> {
    let sv = lemma_vector(lambda)?;
    if p.epsilon(sv.divisor) == 0 {
        return Ok(SingularOutcome::NotSingular { divisor: sv.divisor });
    }
    assert!(
        is_singular_mod(&sv.vector, lambda.rank(), p),
        "v_R is not annihilated mod {p} in V({lambda})"
    );
    Ok(SingularOutcome::Singular(sv))
}

/// A named construction with its dimensions and the classifier's answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionReport {
    pub name: &'static str,
    pub lambda: Weight,
    #[serde(serialize_with = "decimal")]
    pub weyl_dimension: num_bigint::BigUint,
    pub ambient: String,
    pub kernel_or_image: usize,
    pub submodule: Option<usize>,
    pub irreducible: usize,
}

fn decimal<S: serde::Serializer, T: fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Which of the three explicit models to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    /// `λ_1 + λ_2` as a contraction kernel.
    L1L2,
    /// `λ_1 + λ_{l-1}` as a contraction kernel.
    L1Llm1,
    /// `2λ_1 + λ_l` as a Young symmetrizer image.
    TwoL1Ll,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::L1L2 => "l1l2",
            Construction::L1Llm1 => "l1llm1",
            Construction::TwoL1Ll => "2l1ll",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "l1l2" => Ok(Construction::L1L2),
            "l1llm1" => Ok(Construction::L1Llm1),
            "2l1ll" => Ok(Construction::TwoL1Ll),
            _ => Err(Error::Invalid(format!("unknown construction {s:?}"))),
        }
    }

    pub fn weight(self, l: usize) -> Result<Weight> {
        let r = Rank::new(l)?;
        match self {
            Construction::L1L2 if l >= 2 => Ok(Weight::from_terms(r, &[(1, 1), (2, 1)])),
            Construction::L1Llm1 if l >= 3 => Ok(Weight::from_terms(r, &[(1, 1), (l - 1, 1)])),
            Construction::TwoL1Ll if l >= 2 => Ok(Weight::from_terms(r, &[(1, 2), (l, 1)])),
            _ => Err(Error::Invalid(format!("{} needs a larger rank than {l}", self.name()))),
        }
    }

    pub fn build(self, l: usize, p: Prime, cap: Option<usize>) -> Result<ConstructionReport> {
        let lambda = self.weight(l)?;
        let weyl = weyl_dimension(&lambda)?;
        let (ambient, kernel_or_image, submodule, irreducible) = match self {
            Construction::L1L2 | Construction::L1Llm1 => {
                let k = if self == Construction::L1L2 { 2 } else { l - 1 };
                let m = contraction_kernel_dim_capped(k, l, p, cap.unwrap_or(DEFAULT_CONTRACTION_CAP))?;
                let sub = m.quotient.map(|q| m.kernel - q);
                (format!("V ⊗ Λ^{k} V"), m.kernel, sub, m.irreducible())
            }
            Construction::TwoL1Ll => {
                let m = young_symmetrizer_module_capped(l, p, cap.unwrap_or(DEFAULT_YOUNG_CAP))?;
                (format!("V^⊗{}", l + 2), m.image, m.r_dim, m.irreducible)
            }
        };
        Ok(ConstructionReport {
            name: self.name(),
            lambda,
            weyl_dimension: weyl,
            ambient,
            kernel_or_image,
            submodule,
            irreducible,
        })
    }
}

/// `v` reduced mod `p` and rescaled so that its first nonzero entry is 1.
pub fn normalized_mod(v: &SparseTensor, p: Prime) -> Vec<(usize, i64)> {
    let pm = p.get() as i64;
    let row: Vec<(usize, i64)> = v
        .row()
        .into_iter()
        .map(|(c, x)| (c, x.rem_euclid(pm)))
        .filter(|&(_, x)| x != 0)
        .collect();
    let Some(&(_, lead)) = row.first() else {
        return row;
    };
    let inv = mod_inverse(lead, pm);
    row.into_iter().map(|(c, x)| (c, (x * inv).rem_euclid(pm))).collect()
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    let e = num_integer::Integer::extended_gcd(&a, &p);
    e.x.rem_euclid(p)
}

/// Weight of a realization vector when homogeneous.
pub fn realization_weight(v: &TensorVector, rank: Rank) -> Option<Weight> {
    let mut found: Option<Vec<i64>> = None;
    for key in v.keys() {
        let mut eps = vec![0i64; rank.get() + 1];
        for &s in key {
            for (b, e) in eps.iter_mut().enumerate() {
                if s >> b & 1 == 1 {
                    *e += 1;
                }
            }
        }
        match &found {
            Some(f) if *f != eps => return None,
            Some(_) => {}
            None => found = Some(eps),
        }
    }
    found.map(|e| Weight::from_eps(&e))
}
