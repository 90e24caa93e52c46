//! Exact linear algebra over ℚ: reduced row echelon form, span membership,
//! span equality and sums of subspaces.
//!
//! Vectors live in `ℚ^N` and are stored sparsely as strictly increasing
//! `(index, value)` lists with nonzero values. For the group algebra the
//! index is the lexicographic rank of a permutation.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{from_json_parts, to_json_parts, JsonInt, Rational};

/// Sparse vector: strictly increasing indices, nonzero values.
pub type SparseVector = Vec<(usize, Rational)>;

fn check_sparse(v: &[(usize, Rational)], ambient: usize) -> Result<()> {
    let mut prev = None;
    for (i, c) in v {
        if *i >= ambient {
            return Err(Error::DimensionMismatch {
                left: ambient,
                right: i + 1,
            });
        }
        if prev.is_some_and(|p| p >= *i) || c.is_zero() {
            return Err(Error::Parse(format!(
                "malformed sparse vector at index {i}"
            )));
        }
        prev = Some(*i);
    }
    Ok(())
}

/// Drops zeros from a dense vector.
pub fn sparsify(dense: &[Rational]) -> SparseVector {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn densify(v: &[(usize, Rational)], ambient: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); ambient];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// `x − c·y`, both sparse.
fn axpy(x: &[(usize, Rational)], c: &Rational, y: &[(usize, Rational)]) -> SparseVector {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(c * &y[j].1)));
            j += 1;
        } else {
            let v = &x[i].1 - &(c * &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A dense rectangular matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// `cols` is needed to describe matrices without rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    left: cols,
                    right: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(RationalMatrix {
            rows: n_rows,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// True iff every entry below the diagonal is zero.
    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn to_json(&self) -> Vec<Vec<JsonRational>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(JsonRational::from).collect())
            .collect()
    }

    pub fn from_json(cols: usize, rows: &[Vec<JsonRational>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(JsonRational::to_rational)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, rows)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `{num, den}` record used for matrix dumps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRational {
    pub num: JsonInt,
    pub den: JsonInt,
}

impl From<&Rational> for JsonRational {
    fn from(q: &Rational) -> Self {
        let (num, den) = to_json_parts(q);
        JsonRational { num, den }
    }
}

impl JsonRational {
    pub fn to_rational(&self) -> Result<Rational> {
        from_json_parts(&self.num, &self.den)
    }
}

/// A subspace of `ℚ^N` held as its canonical reduced row echelon basis.
///
/// Rows are sorted by pivot, each pivot entry is 1 and every pivot column is
/// zero in all other rows, so two subspaces are equal iff their bases are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient: usize,
    rows: Vec<SparseVector>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            rows: (0..ambient).map(|i| vec![(i, Rational::one())]).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of the given sparse vectors.
    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = SparseVector>,
    {
        let mut basis = Self::zero(ambient);
        for v in vectors {
            basis.insert(v)?;
        }
        Ok(basis)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        let rows = self.rows.iter().map(|r| densify(r, self.ambient)).collect();
        RationalMatrix::from_rows(self.ambient, rows).expect("rows have ambient length")
    }

    fn check_dim(&self, ambient: usize) -> Result<()> {
        if ambient != self.ambient {
            return Err(Error::DimensionMismatch {
                left: self.ambient,
                right: ambient,
            });
        }
        Ok(())
    }

    /// The residual of `v` after eliminating every pivot column.
    fn reduce_unchecked(&self, v: &[(usize, Rational)]) -> SparseVector {
        let mut acc = v.to_vec();
        let mut k = 0;
        // Each subtraction only touches non-pivot columns to the right, so
        // one left-to-right pass over the pivots suffices.
        while k < acc.len() {
            let col = acc[k].0;
            match self.pivots.binary_search(&col) {
                Ok(r) => {
                    let c = acc[k].1.clone();
                    acc = axpy(&acc, &c, &self.rows[r]);
                }
                Err(_) => k += 1,
            }
        }
        acc
    }

    pub fn reduce(&self, v: &[(usize, Rational)]) -> Result<SparseVector> {
        check_sparse(v, self.ambient)?;
        Ok(self.reduce_unchecked(v))
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVector) -> Result<bool> {
        check_sparse(&v, self.ambient)?;
        Ok(self.insert_unchecked(v))
    }

    fn insert_unchecked(&mut self, v: SparseVector) -> bool {
        let mut r = self.reduce_unchecked(&v);
        let Some((pivot, lead)) = r.first().cloned() else {
            return false;
        };
        if !lead.is_one() {
            let inv = Rational::one() / lead;
            for (_, c) in r.iter_mut() {
                *c *= &inv;
            }
        }
        for row in &mut self.rows {
            if let Ok(pos) = row.binary_search_by_key(&pivot, |(i, _)| *i) {
                let c = row[pos].1.clone();
                *row = axpy(row, &c, &r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, r);
        true
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> Result<bool> {
        Ok(self.reduce(v)?.is_empty())
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> Result<bool> {
        other.check_dim(self.ambient)?;
        if self.rank() > other.rank() {
            return Ok(false);
        }
        Ok(self
            .rows
            .iter()
            .all(|r| other.reduce_unchecked(r).is_empty()))
    }
}

impl fmt::Debug for SubspaceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SubspaceBasis(ambient={}, rank={}, pivots={:?})",
            self.ambient,
            self.rank(),
            self.pivots
        )
    }
}

/// Canonical reduced row echelon form of the row space, and its rank.
pub fn rref(m: &RationalMatrix) -> (SubspaceBasis, usize) {
    let mut basis = SubspaceBasis::zero(m.cols());
    for i in 0..m.rows() {
        basis.insert_unchecked(sparsify(m.row(i)));
    }
    let rank = basis.rank();
    (basis, rank)
}

pub fn span_contains(s: &SubspaceBasis, v: &[(usize, Rational)]) -> Result<bool> {
    s.contains(v)
}

pub fn span_equal(s: &SubspaceBasis, t: &SubspaceBasis) -> Result<bool> {
    s.check_dim(t.ambient)?;
    Ok(s == t)
}

pub fn subspace_sum(s: &SubspaceBasis, t: &SubspaceBasis) -> Result<SubspaceBasis> {
    s.check_dim(t.ambient)?;
    let (big, small) = if s.rank() >= t.rank() { (s, t) } else { (t, s) };
    let mut out = big.clone();
    for r in &small.rows {
        out.insert_unchecked(r.clone());
    }
    Ok(out)
}

/// True iff `columns[j]` has a 1 at index `j` and nothing at larger indices.
///
/// With indices the lexicographic ranks of permutations this says each
/// family member is its own permutation plus lexicographically smaller ones.
pub fn unitriangular_certificate(columns: &[SparseVector], ambient: usize) -> Result<bool> {
    if columns.len() != ambient {
        return Err(Error::NonSquare {
            members: columns.len(),
            dim: ambient,
        });
    }
    for col in columns {
        check_sparse(col, ambient)?;
    }
    Ok(columns
        .iter()
        .enumerate()
        .all(|(j, col)| matches!(col.last(), Some((i, c)) if *i == j && c.is_one())))
}
