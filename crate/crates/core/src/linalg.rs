//! Dense row reduction over `F_q`.

use crate::field::PrimeField;

/// Dense row-major matrix with canonical residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r.iter().map(|&v| v % field.order()));
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form in place. Returns the pivot columns; the
    /// first `pivots.len()` rows are the nonzero rows, each with a 1 at its
    /// pivot and zeros at every other pivot column.
    pub fn rref(&mut self) -> Vec<usize> {
        let k = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = k.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = k.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = k.sub(self.get(i, j), k.mul(f, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank_of(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> usize {
    Matrix::from_rows(field, cols, rows).rank()
}

/// Incrementally grown semi-echelon basis. Each stored row is monic at its
/// pivot and zero at the pivots of all rows inserted before it.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: PrimeField,
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place against the stored rows and returns the
    /// multipliers used (`v_original = sum mult_i * row_i + v_reduced`).
    pub fn reduce(&self, v: &mut [u64]) -> Vec<u64> {
        debug_assert_eq!(v.len(), self.cols);
        let k = self.field;
        let mut mult = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p];
            mult.push(f);
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = k.sub(*x, k.mul(f, y));
                }
            }
        }
        mult
    }

    pub fn is_in_span(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Inserts `v` if it is independent of the stored rows; returns whether
    /// the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let k = self.field;
        let inv = k.inv(v[p]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = k.mul(*x, inv);
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}
