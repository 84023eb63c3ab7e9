//! Dense exact matrices over a [`Scalar`], with reduced row echelon form,
//! rank, kernels and subspace comparisons.
//!
//! Sizes are desk scale throughout the crate (well under 10^3 rows), so a
//! dense representation with straightforward Gaussian elimination is the
//! right tool; no pivot-size heuristics are needed for correctness over an
//! exact field.

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Mat<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<F>) {
        debug_assert!(self.cols == 0 || row.len() == self.cols);
        if self.cols == 0 {
            self.cols = row.len();
        }
        self.data.extend(row);
        self.rows += 1;
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(sel) = (pr..self.rows).find(|&i| !self.at(i, pc).is_zero()) else {
                continue;
            };
            self.swap_rows(pr, sel);
            let inv = F::one() / self.at(pr, pc).clone();
            for j in pc..self.cols {
                let v = self.at(pr, j).clone() * inv.clone();
                self.set(pr, j, v);
            }
            for i in 0..self.rows {
                if i != pr && !self.at(i, pc).is_zero() {
                    let factor = self.at(i, pc).clone();
                    for j in pc..self.cols {
                        let v = self.at(i, j).clone() - factor.clone() * self.at(pr, j).clone();
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the right kernel `{ x : M x = 0 }`, one row per basis vector.
    pub fn kernel(mut self) -> Vec<Vec<F>> {
        let pivots = self.rref();
        let mut basis = Vec::new();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = vec![F::zero(); self.cols];
            x[free] = F::one();
            for (&pc, r) in pivots.iter().zip(0..) {
                x[pc] = F::zero() - self.at(r, free).clone();
            }
            basis.push(x);
        }
        basis
    }

    /// Solves `M x = b` when the solution is unique; `None` if the system is
    /// singular or inconsistent.
    pub fn solve_unique(&self, b: &[F]) -> Option<Vec<F>> {
        debug_assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        if pivots.len() != self.cols {
            return None; // underdetermined
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }
}

/// Row space of a matrix kept in reduced echelon form; the canonical
/// representation of a subspace, so equality of spans is structural equality.
#[derive(Debug, Clone, PartialEq)]
pub struct RowSpace<F> {
    cols: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> RowSpace<F> {
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let mut m = Mat::from_rows(rows);
        if m.cols() == 0 {
            m.cols = cols;
        }
        debug_assert_eq!(m.cols(), cols);
        let pivots = m.rref();
        let basis = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Self { cols, basis, pivots }
    }

    pub fn empty(cols: usize) -> Self {
        Self {
            cols,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.cols
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    /// Residual of `v` after eliminating all pivot coordinates.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        debug_assert_eq!(v.len(), self.cols);
        let mut w = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if !w[pc].is_zero() {
                let factor = w[pc].clone();
                for j in pc..self.cols {
                    w[j] = w[j].clone() - factor.clone() * row[j].clone();
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(F::is_zero)
    }

    pub fn contains_space(&self, other: &Self) -> bool {
        other.basis.iter().all(|row| self.contains(row))
    }
}
