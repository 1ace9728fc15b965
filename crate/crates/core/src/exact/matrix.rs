use alloc::vec;
use alloc::vec::Vec;

use super::{Field, ProjPoint};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Rows must share one length; an empty list gives a 0×`cols` matrix.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| super::dot(self.row(i), v)).collect()
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = F::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns. Pivots are chosen among units,
    /// so over jets the elimination follows the value part.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c).is_unit()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("unit pivot");
            for j in 0..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(r, j).clone();
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null-space basis; the basis vector attached to a free column has a one there.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (m, pivots) = self.rref();
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(r, f).clone();
            }
            out.push(v);
        }
        out
    }

    /// Kernel basis in canonical projective normalization.
    pub fn kernel_points(&self) -> Vec<ProjPoint<F>> {
        self.kernel()
            .into_iter()
            .map(|v| ProjPoint::new(v).expect("kernel vectors are nonzero"))
            .collect()
    }

    /// Unique solution of M x = b.
    pub fn solve(&self, b: &[F]) -> Result<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (m, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(Error::Singular("inconsistent system"));
        }
        if pivots.len() < self.cols {
            return Err(Error::Singular("underdetermined system"));
        }
        Ok((0..self.cols).map(|r| m.get(r, self.cols).clone()).collect())
    }

    /// Determinant of a square matrix by elimination.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| m.get(i, c).is_unit()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            let inv = piv.inv().expect("unit pivot");
            det = det * piv;
            for i in c + 1..m.rows {
                let f = m.get(i, c).clone() * inv.clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(c, j).clone();
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, Q};
    use alloc::vec;
    use proptest::prelude::*;

    fn qm(rows: &[&[i64]]) -> Matrix<Q> {
        let cols = rows[0].len();
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Q::from(x)).collect()).collect(),
            cols,
        )
    }

    #[test]
    fn kernel_of_bun_rows() {
        let k = qm(&[&[-6, 8, -2], &[-6, 9, -3]]).kernel_points();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].coords(), &[Q::from(1), Q::from(1), Q::from(1)]);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(Matrix::<Q>::identity(3).kernel().is_empty());
    }

    #[test]
    fn zero_row_has_full_kernel() {
        assert_eq!(qm(&[&[0, 0, 0]]).kernel().len(), 3);
    }

    #[test]
    fn solve_and_det() {
        let m = qm(&[&[2, 1], &[1, 3]]);
        assert_eq!(m.det(), Q::from(5));
        assert_eq!(m.solve(&[Q::from(3), Q::from(4)]).unwrap(), vec![q(1, 1), q(1, 1)]);
        assert!(qm(&[&[1, 2], &[2, 4]]).solve(&[Q::from(1), Q::from(1)]).is_err());
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(entries in prop::collection::vec(-5i64..6, 12)) {
            let m = Matrix::from_rows(
                entries.chunks(4).map(|r| r.iter().map(|&x| Q::from(x)).collect()).collect(),
                4,
            );
            let ker = m.kernel();
            prop_assert_eq!(ker.len() + m.rank(), 4);
            for v in ker {
                prop_assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
            }
        }
    }
}
