//! Sparse matrices over an arbitrary scalar, with the Kronecker product and
//! the small dense routines (inverse, rank) the fiber evaluation needs.

use std::collections::BTreeMap;

use crate::error::LinalgError;
use crate::scalar::Scalar;

/// A sparse `rows x cols` matrix. Acts on column vectors, so composition of
/// linear maps `g after f` is the product `g * f`.
#[derive(Clone, PartialEq)]
pub struct LinearMap<S: Scalar> {
    pub rows: usize,
    pub cols: usize,
    entries: BTreeMap<(usize, usize), S>,
}

impl<S: Scalar> LinearMap<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_entries<I: IntoIterator<Item = ((usize, usize), S)>>(
        rows: usize,
        cols: usize,
        it: I,
    ) -> Self {
        let mut m = Self::zero(rows, cols);
        for ((i, j), s) in it {
            m.set(i, j, s);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<S>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                m.set(i, j, s.clone());
            }
        }
        m
    }

    pub fn set(&mut self, i: usize, j: usize, s: S) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if s.is_zero_tol(0.0) {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), s);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(S::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &S)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self, eps: f64) -> bool {
        self.entries.values().all(|s| s.is_zero_tol(eps))
    }

    pub fn transpose(&self) -> Self {
        LinearMap {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), s)| ((j, i), s.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut m = Self::zero(self.rows, self.cols);
        for (&(i, j), s) in &self.entries {
            m.set(i, j, s.mul(c));
        }
        m
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (&(i, j), s) in &other.entries {
            m.set(i, j, m.get(i, j).add(s));
        }
        m
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&S::one().neg()))
    }

    /// Matrix product `self * other`.
    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "product shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        // Group rhs entries by row for sparse traversal.
        let mut by_row: BTreeMap<usize, Vec<(usize, &S)>> = BTreeMap::new();
        for (&(i, j), s) in &other.entries {
            by_row.entry(i).or_default().push((j, s));
        }
        let mut acc: BTreeMap<(usize, usize), S> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for (j, b) in row {
                    let term = a.mul(b);
                    match acc.get_mut(&(i, *j)) {
                        Some(e) => *e = e.add(&term),
                        None => {
                            acc.insert((i, *j), term);
                        }
                    }
                }
            }
        }
        let mut m = Self::zero(self.rows, other.cols);
        for ((i, j), s) in acc {
            m.set(i, j, s);
        }
        m
    }

    /// Kronecker product with lexicographic basis ordering: block index
    /// `(iA * rowsB + iB, jA * colsB + jB)`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut m = Self::zero(self.rows * other.rows, self.cols * other.cols);
        for (&(ia, ja), a) in &self.entries {
            for (&(ib, jb), b) in &other.entries {
                m.set(ia * other.rows + ib, ja * other.cols + jb, a.mul(b));
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<S>> {
        let mut d = vec![vec![S::zero(); self.cols]; self.rows];
        for (&(i, j), s) in &self.entries {
            d[i][j] = s.clone();
        }
        d
    }

    /// Flatten row-major into a vector of length rows*cols.
    pub fn flatten(&self) -> Vec<S> {
        let mut v = vec![S::zero(); self.rows * self.cols];
        for (&(i, j), s) in &self.entries {
            v[i * self.cols + j] = s.clone();
        }
        v
    }

    /// Dense Gaussian inverse. Pivots by magnitude for numeric scalars.
    pub fn inverse(&self, eps: f64) -> Result<Self, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch(
                "inverse of non-square".into(),
            ));
        }
        let n = self.rows;
        let mut a = self.to_dense();
        let mut inv: Vec<Vec<S>> = LinearMap::identity(n).to_dense();
        for col in 0..n {
            // choose pivot
            let mut best = col;
            let mut best_size = a[col][col].pivot_size();
            for (r, row) in a.iter().enumerate().skip(col + 1) {
                let sz = row[col].pivot_size();
                if sz > best_size {
                    best = r;
                    best_size = sz;
                }
            }
            let tol = if S::is_exact() { 0.0 } else { eps };
            if best_size <= tol {
                return Err(LinalgError::SingularMatrix);
            }
            a.swap(col, best);
            inv.swap(col, best);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] = a[col][j].div(&p)?;
                inv[col][j] = inv[col][j].div(&p)?;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r][col].clone();
                if f.is_zero_tol(0.0) {
                    continue;
                }
                for j in 0..n {
                    a[r][j] = a[r][j].sub(&f.mul(&a[col][j]));
                    inv[r][j] = inv[r][j].sub(&f.mul(&inv[col][j]));
                }
            }
        }
        Ok(Self::from_dense(&inv))
    }

    /// Rank by Gaussian elimination with full pivoting; `eps` is the
    /// numeric pivot threshold (scaled by the largest magnitude seen).
    pub fn rank(&self, eps: f64) -> usize {
        let scale = if S::is_exact() {
            0.0
        } else {
            let m = self
                .entries
                .values()
                .map(|s| s.pivot_size())
                .fold(0.0_f64, f64::max);
            eps * m.max(1.0)
        };
        self.full_pivot_magnitudes()
            .into_iter()
            .filter(|&p| p > scale)
            .count()
    }

    /// Pivot magnitudes from full-pivoted Gaussian elimination, in the
    /// order chosen (non-increasing for numeric scalars). The count of
    /// nonzero entries is the rank for exact scalars.
    fn full_pivot_magnitudes(&self) -> Vec<f64> {
        let mut a = self.to_dense();
        let rows = self.rows;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut row = 0;
        let mut active_cols: Vec<usize> = (0..cols).collect();
        while row < rows && !active_cols.is_empty() {
            // full pivot: largest magnitude in the remaining submatrix
            let mut best = (row, 0usize, 0.0_f64);
            for r in row..rows {
                for (ci, &c) in active_cols.iter().enumerate() {
                    let sz = a[r][c].pivot_size();
                    if sz > best.2 {
                        best = (r, ci, sz);
                    }
                }
            }
            if best.2 <= 0.0 {
                break;
            }
            let col = active_cols.remove(best.1);
            a.swap(row, best.0);
            pivots.push(best.2);
            let p = a[row][col].clone();
            for r in row + 1..rows {
                if a[r][col].is_zero_tol(0.0) {
                    continue;
                }
                let f = a[r][col].div(&p).expect("pivot nonzero");
                for &j in std::iter::once(&col).chain(active_cols.iter()) {
                    a[r][j] = a[r][j].sub(&f.mul(&a[row][j]));
                }
            }
            row += 1;
        }
        pivots
    }

    /// Rank for Jordan-structure analysis, constrained to the interval
    /// `[lo, hi]` known from eigenvalue multiplicities and clamped there:
    /// exact scalars use the plain rank; numeric scalars count pivots above
    /// the absolute threshold `abs_tol` supplied by the caller (derived
    /// from the base matrix scale and escalated when the resulting block
    /// structure is inconsistent).
    pub fn rank_jordan(&self, lo: usize, hi: usize, abs_tol: f64) -> usize {
        if S::is_exact() {
            return self.rank(0.0);
        }
        let pivots = self.full_pivot_magnitudes();
        let lo = lo.min(hi);
        if pivots.is_empty() {
            return lo;
        }
        let count = pivots.iter().filter(|&&p| p > abs_tol).count();
        count.clamp(lo, hi)
    }

    /// Largest entry magnitude as seen by the pivoting heuristic.
    pub fn magnitude_scale(&self) -> f64 {
        self.entries
            .values()
            .map(|s| s.pivot_size())
            .fold(0.0_f64, f64::max)
    }

    /// Largest entry magnitude (numeric) or 0/inf residual style for exact.
    pub fn max_residual(&self) -> f64 {
        self.entries
            .values()
            .map(|s| s.residual())
            .fold(0.0_f64, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return false;
        }
        self.sub(other).is_zero(eps)
    }
}

impl<S: Scalar> std::fmt::Debug for LinearMap<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "LinearMap {}x{} [", self.rows, self.cols)?;
        for (&(i, j), s) in &self.entries {
            writeln!(f, "  ({}, {}) = {}", i, j, s)?;
        }
        write!(f, "]")
    }
}

/// Rank of a list of row vectors, used by the faithfulness check.
pub fn rank_of_rows<S: Scalar>(rows: &[Vec<S>], eps: f64) -> usize {
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let m = LinearMap::from_dense(
        &rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols);
                r.clone()
            })
            .collect::<Vec<_>>(),
    );
    m.rank(eps)
}
