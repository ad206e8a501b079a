//! Dense exact linear algebra over GF(p^h).
//!
//! The pivot rule in [`Matrix::rref`] is fixed (first nonzero entry scanning
//! top-down, columns left to right) so that downstream coordinate-set
//! selections are reproducible.

use rayon::prelude::*;
use thiserror::Error;

use crate::field::{Felt, Field};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrices belong to different fields")]
    FieldMismatch,
}

/// Row-major matrix over a fixed field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Felt>,
}

/// Result of reduced row echelon form.
#[derive(Clone)]
pub struct RrefResult {
    pub reduced: Matrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows.min(12) {
            let row: Vec<String> = (0..self.cols.min(16))
                .map(|j| self.field.fmt_elt(self[(i, j)]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Felt;
    fn index(&self, (i, j): (usize, usize)) -> &Felt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Felt {
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Felt::ZERO; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field.clone(), n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Felt>>) -> Result<Matrix, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Felt,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Felt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[Felt] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// Entrywise sigma^e.
    pub fn frobenius_entrywise(&self, e: u32) -> Matrix {
        let f = &self.field;
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.frobenius(x, e)).collect(),
        }
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field.clone();
        let (m, inner, n) = (self.rows, self.cols, other.cols);
        let work = m as u128 * inner as u128 * n as u128;
        let compute_row = |i: usize, out_row: &mut [Felt]| {
            for l in 0..inner {
                let a = self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(l);
                for j in 0..n {
                    let prod = f.mul(a, brow[j]);
                    out_row[j] = f.add(out_row[j], prod);
                }
            }
        };
        let mut data = vec![Felt::ZERO; m * n];
        if work >= 1 << 24 && m > 1 {
            data.par_chunks_mut(n)
                .enumerate()
                .for_each(|(i, chunk)| compute_row(i, chunk));
        } else {
            for (i, chunk) in data.chunks_mut(n).enumerate() {
                compute_row(i, chunk);
            }
        }
        Ok(Matrix {
            field: self.field.clone(),
            rows: m,
            cols: n,
            data,
        })
    }

    /// Reduced row echelon form with the fixed deterministic pivot rule.
    pub fn rref(&self) -> RrefResult {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pr = 0usize;
        for col in 0..m.cols {
            if pr == m.rows {
                break;
            }
            let Some(sel) = (pr..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pr, sel);
            let inv = f.inv(m[(pr, col)]).expect("pivot nonzero");
            m.scale_row(pr, inv);
            for i in 0..m.rows {
                if i != pr && !m[(i, col)].is_zero() {
                    let c = m[(i, col)];
                    m.add_scaled_row(i, pr, f.neg(c));
                }
            }
            pivot_cols.push(col);
            pr += 1;
        }
        RrefResult {
            rank: pivot_cols.len(),
            pivot_cols,
            reduced: m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space {x : M x^T = 0}, one row per free
    /// column in ascending order, then reduced to canonical form.
    pub fn nullspace(&self) -> Matrix {
        let f = self.field.clone();
        let r = self.rref();
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !r.pivot_cols.contains(c))
            .collect();
        let mut basis = Matrix::zeros(f.clone(), free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            basis[(bi, fc)] = f.one();
            for (pi, &pc) in r.pivot_cols.iter().enumerate() {
                basis[(bi, pc)] = f.neg(r.reduced[(pi, fc)]);
            }
        }
        basis.rref().reduced
    }

    /// Vertical stack.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "stack {} vs {} cols",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_cols(&self, keep: &[usize]) -> Matrix {
        Matrix::from_fn(self.field.clone(), self.rows, keep.len(), |i, j| {
            self[(i, keep[j])]
        })
    }

    /// Deletes the columns in `t` (indices into 0..cols).
    pub fn delete_cols(&self, t: &[usize]) -> Matrix {
        let keep: Vec<usize> = (0..self.cols).filter(|c| !t.contains(c)).collect();
        self.select_cols(&keep)
    }

    pub fn take_rows(&self, range: std::ops::Range<usize>) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: range.len(),
            cols: self.cols,
            data: self.data[range.start * self.cols..range.end * self.cols].to_vec(),
        }
    }

    /// Row-space equality via canonical forms.
    pub fn rowspace_eq(&self, other: &Matrix) -> bool {
        if self.field != other.field || self.cols != other.cols {
            return false;
        }
        let a = self.rref();
        let b = other.rref();
        a.rank == b.rank && a.reduced.take_rows(0..a.rank) == b.reduced.take_rows(0..b.rank)
    }

    /// Determinant of a square matrix by Gaussian elimination.
    pub fn det(&self) -> Result<Felt, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch("det of non-square".into()));
        }
        let f = self.field.clone();
        let mut m = self.clone();
        let n = m.rows;
        let mut det = f.one();
        for col in 0..n {
            let Some(sel) = (col..n).find(|&i| !m[(i, col)].is_zero()) else {
                return Ok(Felt::ZERO);
            };
            if sel != col {
                m.swap_rows(col, sel);
                det = f.neg(det);
            }
            let piv = m[(col, col)];
            det = f.mul(det, piv);
            let inv = f.inv(piv).expect("pivot nonzero");
            for i in col + 1..n {
                if !m[(i, col)].is_zero() {
                    let c = f.mul(m[(i, col)], inv);
                    m.add_scaled_row(i, col, f.neg(c));
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: Felt) {
        let f = self.field.clone();
        for j in 0..self.cols {
            self[(i, j)] = f.mul(self[(i, j)], c);
        }
    }

    fn add_scaled_row(&mut self, dst: usize, src: usize, c: Felt) {
        let f = self.field.clone();
        for j in 0..self.cols {
            let add = f.mul(self[(src, j)], c);
            self[(dst, j)] = f.add(self[(dst, j)], add);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64, h: u32) -> Field {
        Field::new(p, h, None).unwrap()
    }

    pub(crate) fn random_matrix(f: &Field, rows: usize, cols: usize, seed: u64) -> Matrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Matrix::from_fn(f.clone(), rows, cols, |_, _| {
            let v = rng.gen_range(0..f.q());
            if v == 0 {
                Felt::ZERO
            } else {
                f.elt(v - 1)
            }
        })
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = gf(3, 2);
        let id = Matrix::identity(f.clone(), 3);
        let r = id.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivot_cols, vec![0, 1, 2]);
        assert_eq!(r.reduced, id);

        let z = Matrix::zeros(f, 2, 5);
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivot_cols.is_empty());
    }

    #[test]
    fn rref_singular_gf3() {
        // [[1,2],[2,1]] over GF(3): det = 1 - 4 = 0, rank 1, pivot [0]
        let f = gf(3, 1);
        let m = Matrix::from_rows(
            f.clone(),
            vec![
                vec![f.from_int(1), f.from_int(2)],
                vec![f.from_int(2), f.from_int(1)],
            ],
        )
        .unwrap();
        assert_eq!(m.det().unwrap(), Felt::ZERO);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
    }

    #[test]
    fn nullspace_examples() {
        let f = gf(3, 2);
        let full = random_matrix(&f, 4, 4, 7);
        if full.rank() == 4 {
            assert_eq!(full.nullspace().rows(), 0);
        }

        let f3 = gf(3, 1);
        let m = Matrix::from_rows(f3.clone(), vec![vec![f3.one(), f3.one(), f3.one()]]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 2);
        for i in 0..2 {
            let s = ns
                .row(i)
                .iter()
                .fold(Felt::ZERO, |acc, &x| f3.add(acc, x));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn nullspace_product_is_zero() {
        let f = gf(3, 4);
        let m = random_matrix(&f, 4, 10, 42);
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 10 - m.rank());
        let prod = m.matmul(&ns.transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn matmul_and_frobenius() {
        let f = gf(3, 2);
        let a = random_matrix(&f, 3, 5, 1);
        let id = Matrix::identity(f.clone(), 5);
        assert_eq!(a.matmul(&id).unwrap(), a);
        assert_eq!(a.frobenius_entrywise(0), a);
        assert_eq!(a.frobenius_entrywise(2), a);

        let w = Matrix::from_rows(f.clone(), vec![vec![f.omega()]]).unwrap();
        assert_eq!(w.frobenius_entrywise(1)[(0, 0)], f.elt(3));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn rank_of_transpose(rows in 1usize..7, cols in 1usize..7, seed in 0u64..1000) {
            let f = gf(3, 2);
            let m = random_matrix(&f, rows, cols, seed);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(rows in 1usize..7, cols in 1usize..9, seed in 0u64..1000) {
            let f = gf(5, 2);
            let m = random_matrix(&f, rows, cols, seed);
            prop_assert_eq!(m.rank() + m.nullspace().rows(), cols);
        }

        #[test]
        fn rref_idempotent(rows in 1usize..6, cols in 1usize..8, seed in 0u64..1000) {
            let f = gf(3, 4);
            let m = random_matrix(&f, rows, cols, seed);
            let r1 = m.rref().reduced;
            let r2 = r1.rref().reduced;
            prop_assert_eq!(r1, r2);
        }
    }
}
