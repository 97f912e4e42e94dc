//! Column-sparse complex matrices and sparse vectors.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::{Float, Zero};
use serde::Serialize;

/// Sparse vector keyed by basis index.
pub type SparseVec<T> = BTreeMap<usize, Complex<T>>;

pub fn basis_vector<T: Float>(i: usize) -> SparseVec<T> {
    let mut v = SparseVec::new();
    v.insert(i, Complex::new(T::one(), T::zero()));
    v
}

pub fn axpy<T: Float>(acc: &mut SparseVec<T>, c: Complex<T>, x: &SparseVec<T>) {
    for (&i, &v) in x {
        let slot = acc.entry(i).or_insert_with(Complex::zero);
        *slot = *slot + c * v;
    }
}

/// `max_i |x_i − y_i|`
pub fn max_abs_diff<T: Float>(x: &SparseVec<T>, y: &SparseVec<T>) -> T {
    let mut worst = T::zero();
    for (i, v) in x {
        let w = y.get(i).copied().unwrap_or_else(Complex::zero);
        worst = worst.max((*v - w).norm());
    }
    for (i, w) in y {
        if !x.contains_key(i) {
            worst = worst.max(w.norm());
        }
    }
    worst
}

pub fn max_abs<T: Float>(x: &SparseVec<T>) -> T {
    x.values().fold(T::zero(), |m, v| m.max(v.norm()))
}

/// Square matrix stored as one sparse column per basis index.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    dim: usize,
    cols: Vec<Vec<(usize, Complex<T>)>>,
}

impl<T: Float> SparseMatrix<T> {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix { dim, cols: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| Complex::new(T::one(), T::zero())).collect())
    }

    pub fn diagonal(entries: Vec<Complex<T>>) -> Self {
        SparseMatrix { dim: entries.len(), cols: entries.into_iter().enumerate().map(|(i, c)| vec![(i, c)]).collect() }
    }

    /// Build from explicit columns (entries with equal row are summed).
    pub fn from_columns(dim: usize, cols: Vec<SparseVec<T>>) -> Self {
        assert_eq!(cols.len(), dim);
        SparseMatrix {
            dim,
            cols: cols.into_iter().map(|c| c.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> SparseVec<T> {
        let mut v = SparseVec::new();
        for &(i, c) in &self.cols[j] {
            let slot = v.entry(i).or_insert_with(Complex::zero);
            *slot = *slot + c;
        }
        v
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.cols[j].iter().filter(|(r, _)| *r == i).fold(Complex::zero(), |a, (_, c)| a + *c)
    }

    pub fn apply(&self, x: &SparseVec<T>) -> SparseVec<T> {
        let mut out = SparseVec::new();
        for (&j, &v) in x {
            for &(i, c) in &self.cols[j] {
                let slot = out.entry(i).or_insert_with(Complex::zero);
                *slot = *slot + c * v;
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let cols = (0..self.dim).map(|j| self.apply(&other.column(j))).collect();
        Self::from_columns(self.dim, cols)
    }

    pub fn add_scaled(&self, other: &Self, c: Complex<T>) -> Self {
        assert_eq!(self.dim, other.dim);
        let cols = (0..self.dim)
            .map(|j| {
                let mut col = self.column(j);
                axpy(&mut col, c, &other.column(j));
                col
            })
            .collect();
        Self::from_columns(self.dim, cols)
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        SparseMatrix {
            dim: self.dim,
            cols: self.cols.iter().map(|col| col.iter().map(|&(i, v)| (i, v * c)).collect()).collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        let mut cols: Vec<SparseVec<T>> = vec![SparseVec::new(); self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, c) in col {
                let slot = cols[i].entry(j).or_insert_with(Complex::zero);
                *slot = *slot + c.conj();
            }
        }
        Self::from_columns(self.dim, cols)
    }

    /// Diagonal entries (off-diagonal parts ignored).
    pub fn diagonal_entries(&self) -> Vec<Complex<T>> {
        (0..self.dim).map(|j| self.get(j, j)).collect()
    }

    /// Row-major dense export as `[re, im]` pairs.
    pub fn to_dense(&self) -> DenseExport<T> {
        let mut rows = vec![vec![[T::zero(), T::zero()]; self.dim]; self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, c) in col {
                rows[i][j][0] = rows[i][j][0] + c.re;
                rows[i][j][1] = rows[i][j][1] + c.im;
            }
        }
        DenseExport { dimension: self.dim, rows }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DenseExport<T> {
    pub dimension: usize,
    pub rows: Vec<Vec<[T; 2]>>,
}
