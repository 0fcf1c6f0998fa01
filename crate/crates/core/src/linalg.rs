//! Exact integer linear algebra: dense `BigInt` matrices, rank modulo a
//! prime and over the rationals, Smith normal form, integral lattice bases,
//! and a streaming sparse eliminator over `F_p`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::prime::Prime;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone().into();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Plain-text dump: first line `n`, then `n` rows of `n` integers.
    pub fn to_dump(&self) -> String {
        assert!(self.is_square(), "dump format is for square matrices");
        let mut s = format!("{}\n", self.rows);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }

    pub fn from_dump(text: &str) -> Result<IntMatrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::ParseMatrix("empty input".into()))?;
        let n: usize = header
            .trim()
            .parse()
            .map_err(|e| Error::ParseMatrix(format!("bad size line {header:?}: {e}")))?;
        // Every entry takes at least one byte.
        if n.saturating_mul(n) > text.len() {
            return Err(Error::ParseMatrix(format!("size {n} is too large for the input")));
        }
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::ParseMatrix(format!("missing row {}", i + 1)))?;
            let vals: Vec<&str> = line.split_whitespace().collect();
            if vals.len() != n {
                return Err(Error::ParseMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    vals.len()
                )));
            }
            for (j, v) in vals.iter().enumerate() {
                m[(i, j)] = v
                    .parse::<BigInt>()
                    .map_err(|e| Error::ParseMatrix(format!("bad entry {v:?}: {e}")))?;
            }
        }
        if lines.next().is_some() {
            return Err(Error::ParseMatrix("trailing rows".into()));
        }
        Ok(m)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

fn mod_p(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("reduced residue fits")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Rank of a dense matrix of residues modulo `p`.
pub fn rank_residues(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(prow.iter()).skip(col) {
                *x = (*x + p - mul_mod(f, y, p)) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of `A` reduced modulo `p`.
pub fn rank_mod_p(a: &IntMatrix, p: Prime) -> usize {
    let p = p.get();
    let rows: Vec<Vec<u64>> = (0..a.rows())
        .map(|i| a.row(i).iter().map(|x| mod_p(x, p)).collect())
        .collect();
    rank_residues(rows, p)
}

/// Rank over `Q` by fraction-free (Bareiss) elimination.
pub fn rank_over_q(a: &IntMatrix) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
    let ncols = a.cols();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = prow[col].clone();
        for row in tail.iter_mut() {
            let f = row[col].clone();
            for j in col..ncols {
                let v = (&pv * &row[j] - &f * &prow[j]) / &prev;
                row[j] = v;
            }
        }
        prev = pv;
        rank += 1;
    }
    rank
}

/// Elementary divisors `d_1 | d_2 | ...` of a square integer matrix, zeros
/// last, all non-negative.
pub fn smith_normal_form(a: &IntMatrix) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
    let rows = a.rows();
    let cols = a.cols();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in (t + 1)..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                let (head, tail) = m.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(head[t].iter()).skip(t) {
                    *x -= &q * y;
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    done = false;
                }
            }
            for j in (t + 1)..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut() {
                    let y = row[t].clone();
                    row[j] -= &q * y;
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    done = false;
                }
            }
            if done {
                // Enforce divisibility by the rest of the block.
                let pv = m[t][t].clone();
                let bad = ((t + 1)..rows)
                    .find(|&i| ((t + 1)..cols).any(|j| !(&m[i][j] % &pv).is_zero()));
                match bad {
                    Some(i) => {
                        let (head, tail) = m.split_at_mut(i);
                        for (x, y) in head[t].iter_mut().zip(tail[0].iter()).skip(t) {
                            *x += y;
                        }
                    }
                    None => break,
                }
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    while diag.len() < rows.min(cols) {
        diag.push(BigInt::zero());
    }
    diag
}

/// Number of elementary divisors not divisible by `p`.
pub fn divisors_coprime_to(divs: &[BigInt], p: Prime) -> usize {
    let p = BigInt::from(p.get());
    divs.iter()
        .filter(|d| !d.is_zero() && !(*d % &p).is_zero())
        .count()
}

/// Incrementally built Z-basis of the lattice spanned by integer vectors of
/// a fixed width, kept in row echelon form with positive pivots.
#[derive(Debug, Clone)]
pub struct LatticeBasis {
    width: usize,
    pivots: BTreeMap<usize, Vec<BigInt>>,
}

impl LatticeBasis {
    pub fn new(width: usize) -> Self {
        LatticeBasis {
            width,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn insert(&mut self, mut v: Vec<BigInt>) {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        loop {
            let Some(c) = v.iter().position(|x| !x.is_zero()) else {
                return;
            };
            let Some(row) = self.pivots.get_mut(&c) else {
                if v[c].is_negative() {
                    for x in v.iter_mut() {
                        *x = -&*x;
                    }
                }
                self.pivots.insert(c, v);
                return;
            };
            let a = row[c].clone();
            let b = v[c].clone();
            if (&b % &a).is_zero() {
                let q = &b / &a;
                for (x, y) in v.iter_mut().zip(row.iter()).skip(c) {
                    *x -= &q * y;
                }
                continue;
            }
            let e = a.extended_gcd(&b);
            let (g, x, y) = (e.gcd, e.x, e.y);
            let ag = &a / &g;
            let bg = &b / &g;
            let mut new_row = Vec::with_capacity(self.width);
            let mut new_v = Vec::with_capacity(self.width);
            for (r, w) in row.iter().zip(v.iter()) {
                new_row.push(&x * r + &y * w);
                new_v.push(&ag * w - &bg * r);
            }
            *row = new_row;
            v = new_v;
        }
    }

    pub fn into_rows(self) -> Vec<Vec<BigInt>> {
        self.pivots.into_values().collect()
    }
}

/// Streaming Gaussian elimination over `F_p` on sparse rows.
#[derive(Debug, Clone)]
pub struct SparseEliminator {
    p: u64,
    pivots: BTreeMap<usize, Vec<(usize, u64)>>,
}

impl SparseEliminator {
    pub fn new(p: Prime) -> Self {
        SparseEliminator {
            p: p.get(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row given as `(column, value)` pairs with integer values;
    /// returns whether it increased the rank.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, i64)>) -> bool {
        let p = self.p as i64;
        let mut acc: BTreeMap<usize, u64> = BTreeMap::new();
        for (c, v) in row {
            let r = v.rem_euclid(p) as u64;
            if r != 0 {
                let e = acc.entry(c).or_insert(0);
                *e = (*e + r) % self.p;
            }
        }
        acc.retain(|_, v| *v != 0);
        loop {
            let Some((&c, &lead)) = acc.iter().next() else {
                return false;
            };
            match self.pivots.get(&c) {
                Some(prow) => {
                    for &(j, y) in prow {
                        let e = acc.entry(j).or_insert(0);
                        *e = (*e + self.p - mul_mod(lead, y, self.p)) % self.p;
                        if *e == 0 {
                            acc.remove(&j);
                        }
                    }
                }
                None => {
                    let inv = inv_mod(lead, self.p);
                    let normalized = acc.iter().map(|(&j, &v)| (j, mul_mod(v, inv, self.p))).collect();
                    self.pivots.insert(c, normalized);
                    return true;
                }
            }
        }
    }

    /// Whether the row lies in the current span.
    pub fn contains(&self, row: impl IntoIterator<Item = (usize, i64)>) -> bool {
        let mut probe = self.clone();
        !probe.insert(row)
    }
}
