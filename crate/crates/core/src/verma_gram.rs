//! Divided-power PBW monomials in the Verma module `M(λ)`, the action of
//! raising and lowering root vectors on them, and the Gram matrix of the
//! contravariant form on the spanning set of a weight space.
//!
//! Root vectors are elementary matrices: `e_(i,j) = E_{i,j+1}` and
//! `f_(i,j) = E_{j+1,i}`. A monomial `f_{β_1}^{(s_1)} ... f_{β_N}^{(s_N)}`
//! always has `β_1 < ... < β_N` in lexicographic order; every operation
//! returns vectors in that normal form.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{rank_mod_p, IntMatrix};
use crate::prime::Prime;
use crate::root_system::{root_coordinates, PositiveRoot, Rank, RootVector, Weight};

/// Default maximum size of a spanning set before [`gram_matrix`] refuses.
pub const DEFAULT_MONOMIAL_CAP: usize = 20_000;

/// `f_{β_1}^{(s_1)} ... f_{β_N}^{(s_N)}` with strictly increasing roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PBWMonomial {
    factors: Vec<(PositiveRoot, u32)>,
}

impl PBWMonomial {
    pub fn one() -> Self {
        PBWMonomial { factors: Vec::new() }
    }

    /// Normalizes an arbitrary factor list; repeated roots are rejected
    /// because merging them would introduce a binomial coefficient.
    pub fn new(mut factors: Vec<(PositiveRoot, u32)>) -> Result<Self> {
        factors.retain(|&(_, s)| s > 0);
        factors.sort();
        if factors.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Invalid("repeated root in PBW monomial".into()));
        }
        Ok(PBWMonomial { factors })
    }

    pub fn factors(&self) -> &[(PositiveRoot, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// `Σ s_i β_i` in simple-root coordinates.
    pub fn root_vector(&self, rank: Rank) -> RootVector {
        let mut c = vec![0i64; rank.get()];
        for &(b, s) in &self.factors {
            for k in b.i..=b.j {
                c[k as usize - 1] += s as i64;
            }
        }
        RootVector::new(c)
    }
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(b, s)| if s == 1 { b.to_string() } else { format!("{b}^({s})") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

type Mono = Vec<(PositiveRoot, u32)>;
type Terms = HashMap<Mono, BigInt>;

fn add_term(out: &mut Terms, m: Mono, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match out.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// A vector `Σ c_m m v^λ` of `M(λ)` with integer coefficients in the
/// divided-power basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VermaVector {
    lambda: Weight,
    terms: Terms,
}

impl VermaVector {
    pub fn highest(lambda: &Weight) -> Self {
        Self::monomial(lambda, PBWMonomial::one())
    }

    pub fn monomial(lambda: &Weight, m: PBWMonomial) -> Self {
        let mut terms = Terms::new();
        terms.insert(m.factors, BigInt::one());
        VermaVector {
            lambda: lambda.clone(),
            terms,
        }
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &PBWMonomial) -> BigInt {
        self.terms.get(&m.factors).cloned().unwrap_or_default()
    }

    /// Coefficient of `v^λ`.
    pub fn top_coefficient(&self) -> BigInt {
        self.terms.get(&Vec::new()).cloned().unwrap_or_default()
    }

    /// Terms in sorted monomial order.
    pub fn terms(&self) -> Vec<(PBWMonomial, BigInt)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (PBWMonomial { factors: m.clone() }, c.clone()))
            .collect();
        v.sort();
        v
    }

    fn with_terms(&self, terms: Terms) -> Self {
        VermaVector {
            lambda: self.lambda.clone(),
            terms,
        }
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(m, c)| format!("{c}*{m}"))
            .collect();
        write!(f, "{} v", parts.join(" + "))
    }
}

/// A matrix unit `E_{a,b}`, 1-based.
type Unit = (usize, usize);

fn f_unit(b: PositiveRoot) -> Unit {
    (b.j as usize + 1, b.i as usize)
}

fn e_unit(a: PositiveRoot) -> Unit {
    (a.i as usize, a.j as usize + 1)
}

/// `[E_ab, E_cd] = δ_bc E_ad - δ_da E_cb`.
fn unit_bracket((a, b): Unit, (c, d): Unit) -> Vec<(Unit, i64)> {
    let mut out = Vec::with_capacity(2);
    if b == c {
        out.push(((a, d), 1));
    }
    if d == a {
        out.push(((c, b), -1));
    }
    out
}

enum RootVec {
    E(PositiveRoot),
    F(PositiveRoot),
}

/// Classifies an off-diagonal unit as a raising or lowering root vector.
fn classify(u: Unit) -> RootVec {
    let (a, b) = u;
    debug_assert_ne!(a, b);
    if a < b {
        RootVec::E(PositiveRoot::new(a, b - 1))
    } else {
        RootVec::F(PositiveRoot::new(b, a - 1))
    }
}

/// `[f_β, f_γ] = c f_δ` when `β + γ` is a root.
fn bracket_ff(beta: PositiveRoot, gamma: PositiveRoot) -> Option<(PositiveRoot, i64)> {
    let br = unit_bracket(f_unit(beta), f_unit(gamma));
    debug_assert!(br.len() <= 1);
    br.into_iter().map(|(u, c)| match classify(u) {
        RootVec::F(d) => (d, c),
        RootVec::E(_) => unreachable!("bracket of lowering vectors is lowering"),
    }).next()
}

/// `<ν, α^∨>` for `ν = λ - Σ s_i β_i`.
fn pairing(lambda_eps: &[i64], rest: &[(PositiveRoot, u32)], alpha: PositiveRoot) -> i64 {
    let (a, b) = alpha.eps_pair();
    let mut h = lambda_eps[a] - lambda_eps[b];
    for &(d, s) in rest {
        let (x, y) = d.eps_pair();
        let dp = i64::from(x == a) - i64::from(x == b) - i64::from(y == a) + i64::from(y == b);
        h -= s as i64 * dp;
    }
    h
}

fn prefixed(head: PositiveRoot, s: u32, tail: &[(PositiveRoot, u32)]) -> Mono {
    let mut m = Vec::with_capacity(tail.len() + 1);
    if s > 0 {
        m.push((head, s));
    }
    m.extend_from_slice(tail);
    m
}

/// `f_β m v^λ`, accumulated into `out` with weight `coeff`.
fn lower_mono(beta: PositiveRoot, m: &[(PositiveRoot, u32)], coeff: &BigInt, out: &mut Terms) {
    match m.first() {
        None => add_term(out, vec![(beta, 1)], coeff.clone()),
        Some(&(g, _)) if beta < g => add_term(out, prefixed(beta, 1, m), coeff.clone()),
        Some(&(g, s)) if beta == g => {
            add_term(out, prefixed(beta, s + 1, &m[1..]), coeff * (s + 1));
        }
        Some(&(g, s)) => {
            // f_β f_γ^{(s)} = f_γ^{(s)} f_β + f_γ^{(s-1)} [f_β, f_γ]; every
            // root produced from the tail is larger than γ.
            let rest = &m[1..];
            let mut tmp = Terms::new();
            lower_mono(beta, rest, coeff, &mut tmp);
            for (k, c) in tmp {
                debug_assert!(k.first().is_none_or(|f| f.0 > g));
                add_term(out, prefixed(g, s, &k), c);
            }
            if let Some((d, c)) = bracket_ff(beta, g) {
                let mut tmp = Terms::new();
                lower_mono(d, rest, &(coeff * c), &mut tmp);
                for (k, c) in tmp {
                    debug_assert!(k.first().is_none_or(|f| f.0 > g));
                    add_term(out, prefixed(g, s - 1, &k), c);
                }
            }
        }
    }
}

fn lower_terms(beta: PositiveRoot, terms: &Terms) -> Terms {
    let mut out = Terms::new();
    for (m, c) in terms {
        lower_mono(beta, m, c, &mut out);
    }
    out
}

fn factorial(t: u32) -> BigInt {
    (1..=t).fold(BigInt::one(), |acc, k| acc * k)
}

fn divide_exact(terms: &mut Terms, d: &BigInt) {
    if d.is_one() {
        return;
    }
    for c in terms.values_mut() {
        let (q, r) = c.div_rem(d);
        assert!(r.is_zero(), "divided power left a non-integral coefficient");
        *c = q;
    }
}

/// `f_β^{(t)} X`.
fn lower_divided_terms(beta: PositiveRoot, t: u32, terms: Terms) -> Terms {
    let mut cur = terms;
    for _ in 0..t {
        cur = lower_terms(beta, &cur);
    }
    divide_exact(&mut cur, &factorial(t));
    cur
}

/// `e_α m v^λ`, accumulated into `out`.
fn raise_mono(
    alpha: PositiveRoot,
    m: &[(PositiveRoot, u32)],
    coeff: &BigInt,
    lambda_eps: &[i64],
    out: &mut Terms,
) {
    let Some(&(g, t)) = m.first() else {
        return;
    };
    let rest = &m[1..];

    // f_γ^{(t)} e_α R v
    let mut tmp = Terms::new();
    raise_mono(alpha, rest, coeff, lambda_eps, &mut tmp);
    if !tmp.is_empty() {
        for (k, c) in lower_divided_terms(g, t, tmp) {
            add_term(out, k, c);
        }
    }

    // [e_α, f_γ^{(t)}] R v
    if alpha == g {
        let h = pairing(lambda_eps, rest, alpha) - t as i64 + 1;
        add_term(out, prefixed(g, t - 1, rest), coeff * h);
        return;
    }
    for (u, c) in unit_bracket(e_unit(alpha), f_unit(g)) {
        let c = coeff * c;
        let mut tmp = Terms::new();
        match classify(u) {
            RootVec::F(d) => lower_mono(d, rest, &c, &mut tmp),
            RootVec::E(d) => raise_mono(d, rest, &c, lambda_eps, &mut tmp),
        }
        if !tmp.is_empty() {
            for (k, c) in lower_divided_terms(g, t - 1, tmp) {
                add_term(out, k, c);
            }
        }
    }
}

fn raise_terms(alpha: PositiveRoot, terms: &Terms, lambda_eps: &[i64]) -> Terms {
    let mut out = Terms::new();
    for (m, c) in terms {
        raise_mono(alpha, m, c, lambda_eps, &mut out);
    }
    out
}

/// `f_β v`.
pub fn lower(beta: PositiveRoot, v: &VermaVector) -> VermaVector {
    v.with_terms(lower_terms(beta, &v.terms))
}

/// `f_β^{(t)} v`.
pub fn lower_divided(beta: PositiveRoot, t: u32, v: &VermaVector) -> VermaVector {
    v.with_terms(lower_divided_terms(beta, t, v.terms.clone()))
}

/// `e_α v`.
pub fn raise(alpha: PositiveRoot, v: &VermaVector) -> VermaVector {
    let eps = v.lambda.eps();
    v.with_terms(raise_terms(alpha, &v.terms, &eps))
}

/// `e_α^{(t)} v`.
pub fn raise_divided(alpha: PositiveRoot, t: u32, v: &VermaVector) -> VermaVector {
    let eps = v.lambda.eps();
    let mut cur = v.terms.clone();
    for _ in 0..t {
        cur = raise_terms(alpha, &cur, &eps);
    }
    divide_exact(&mut cur, &factorial(t));
    v.with_terms(cur)
}

/// Visits Kostant partitions of `c` as factor lists, stopping early once
/// `limit` have been produced. Returns the number visited.
fn kostant_walk(c: &mut [i64], start: usize, acc: &mut Mono, limit: usize, out: &mut Vec<Mono>) {
    if out.len() > limit {
        return;
    }
    let Some(k) = (start..c.len()).find(|&k| c[k] > 0) else {
        let mut m = acc.clone();
        m.sort();
        out.push(m);
        return;
    };
    // Exactly c[k] roots start at k; choose their end points.
    let need = c[k];
    choose_ends(c, k, k, need, acc, limit, out);
}

fn choose_ends(
    c: &mut [i64],
    k: usize,
    from: usize,
    need: i64,
    acc: &mut Mono,
    limit: usize,
    out: &mut Vec<Mono>,
) {
    if need == 0 {
        kostant_walk(c, k + 1, acc, limit, out);
        return;
    }
    // Ends are chosen in non-decreasing order; `from` is the smallest allowed.
    let mut j = from;
    while j < c.len() && c[j] > 0 {
        if j >= from {
            let maxs = (k..=j).map(|x| c[x]).min().unwrap().min(need);
            for s in (1..=maxs).rev() {
                for x in k..=j {
                    c[x] -= s;
                }
                acc.push((PositiveRoot::new(k + 1, j + 1), s as u32));
                choose_ends(c, k, j + 1, need - s, acc, limit, out);
                acc.pop();
                for x in k..=j {
                    c[x] += s;
                }
                if out.len() > limit {
                    return;
                }
            }
        }
        j += 1;
    }
}

fn kostant_partitions(c: &RootVector, limit: usize) -> Vec<Mono> {
    let mut cv = c.coeffs().to_vec();
    let mut out = Vec::new();
    kostant_walk(&mut cv, 0, &mut Vec::new(), limit, &mut out);
    out
}

/// `𝒲_{λ,μ}`: all divided-power monomials of weight `λ - μ`, sorted.
pub fn spanning_monomials(lambda: &Weight, mu: &Weight) -> Result<Vec<PBWMonomial>> {
    spanning_monomials_capped(lambda, mu, usize::MAX - 1)
}

/// As [`spanning_monomials`], failing once more than `cap` monomials exist.
pub fn spanning_monomials_capped(
    lambda: &Weight,
    mu: &Weight,
    cap: usize,
) -> Result<Vec<PBWMonomial>> {
    let c = root_coordinates(lambda, mu)?.ok_or_else(|| Error::NotSubdominant {
        lambda: lambda.clone(),
        mu: mu.clone(),
    })?;
    let raw = kostant_partitions(&c, cap);
    if raw.len() > cap {
        return Err(Error::ResourceExceeded {
            what: format!("spanning set for {mu} in M({lambda})"),
            size: raw.len(),
            cap,
        });
    }
    let mut out: Vec<PBWMonomial> = raw.into_iter().map(|factors| PBWMonomial { factors }).collect();
    out.sort();
    Ok(out)
}

/// Contravariant form on a spanning set, labelled by its monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub labels: Vec<PBWMonomial>,
    pub matrix: IntMatrix,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.labels.len()
    }
}

/// `F(v, w)`: the `v^λ` coefficient of `σ(v) w` where `σ` swaps `f` and
/// `e` and reverses products.
pub fn form_entry(lambda: &Weight, v: &PBWMonomial, w: &PBWMonomial) -> BigInt {
    let eps = lambda.eps();
    let mut cur = Terms::new();
    cur.insert(w.factors.clone(), BigInt::one());
    for &(b, s) in &v.factors {
        for _ in 0..s {
            cur = raise_terms(b, &cur, &eps);
            if cur.is_empty() {
                return BigInt::zero();
            }
        }
        divide_exact(&mut cur, &factorial(s));
    }
    cur.get(&Vec::new()).cloned().unwrap_or_default()
}

/// Gram matrix of the contravariant form on a list of monomials of one weight.
pub fn gram_on(lambda: &Weight, labels: Vec<PBWMonomial>) -> GramMatrix {
    let n = labels.len();
    let rows: Vec<Vec<BigInt>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| if j < i { BigInt::zero() } else { form_entry(lambda, &labels[i], &labels[j]) })
                .collect()
        })
        .collect();
    let mut matrix = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            matrix[(i, j)] = rows[i][j].clone();
            matrix[(j, i)] = rows[i][j].clone();
        }
    }
    debug_assert!(n > 8 || {
        // Symmetry spot-check on small matrices: the lower triangle computed
        // independently must agree.
        (0..n).all(|i| (0..i).all(|j| form_entry(lambda, &labels[i], &labels[j]) == matrix[(i, j)]))
    });
    GramMatrix { labels, matrix }
}

/// Gram matrix on `𝒲_{λ,μ}` with the default cap.
pub fn gram_matrix(lambda: &Weight, mu: &Weight) -> Result<GramMatrix> {
    gram_matrix_capped(lambda, mu, DEFAULT_MONOMIAL_CAP)
}

pub fn gram_matrix_capped(lambda: &Weight, mu: &Weight, cap: usize) -> Result<GramMatrix> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let labels = spanning_monomials_capped(lambda, mu, cap)?;
    Ok(gram_on(lambda, labels))
}

/// `m_{L(λ)}(μ)` as the rank mod `p` of the full spanning-set Gram matrix.
pub fn spanning_multiplicity(lambda: &Weight, mu: &Weight, p: Prime, cap: usize) -> Result<u64> {
    check_restricted(lambda, mu, p)?;
    let g = gram_matrix_capped(lambda, mu, cap)?;
    Ok(rank_mod_p(&g.matrix, p) as u64)
}

pub(crate) fn check_restricted(lambda: &Weight, mu: &Weight, p: Prime) -> Result<()> {
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch {
            left: lambda.rank().get(),
            right: mu.rank().get(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.clone()));
    }
    if !lambda.is_restricted(p.get()) {
        return Err(Error::NotRestricted {
            weight: lambda.clone(),
            p: p.get(),
        });
    }
    Ok(())
}
