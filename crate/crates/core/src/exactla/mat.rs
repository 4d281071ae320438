use std::fmt;

use super::scalar::{FieldSpec, Scalar};
use crate::exec::{self, Execution};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Work size above which row operations are spread over threads.
const PAR_THRESHOLD: usize = 64 * 64;

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_vec(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Mat { field, rows, cols, data }
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().cloned());
        }
        Mat { field, rows: rows.len(), cols, data }
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols);
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Mat { field, rows: rows.len(), cols, data }
    }

    /// Column vector.
    pub fn column(field: FieldSpec, v: &[Scalar]) -> Self {
        Mat::from_vec(field, v.len(), 1, v.to_vec())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let (n, m) = (self.rows, other.cols);
        let mut out = Mat::zeros(self.field, n, m);
        if m == 0 {
            return out;
        }
        let exec = if n * m * self.cols > PAR_THRESHOLD * 16 {
            Execution::default()
        } else {
            Execution::Sequential
        };
        exec::for_each_chunk_mut(exec, &mut out.data, m, |i, row| {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                for (o, b) in row.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o = o.add(&a.mul(b));
                    }
                }
            }
        });
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// `self + s * other`.
    pub fn add_scaled(&mut self, s: &Scalar, other: &Mat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = a.add(&s.mul(b));
            }
        }
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat::from_vec(self.field, self.rows + other.rows, self.cols, data)
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(other.row(i).iter().cloned());
        }
        Mat::from_vec(self.field, self.rows, cols, data)
    }

    /// Sub-matrix of the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self[(i, j)].clone());
            }
        }
        Mat::from_vec(self.field, rows.len(), cols.len(), data)
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Mat) -> Mat {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Mat::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a.mul(&other[(k, l)]);
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form, pivot columns and rank.
    pub fn rref(&self) -> (Mat, Vec<usize>, usize) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        (m, pivots, rank)
    }

    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self[(r, c)].inv();
            for j in c..cols {
                let v = self[(r, j)].mul(&inv);
                self[(r, j)] = v;
            }
            let pivot_row: Vec<Scalar> = self.row(r).to_vec();
            let exec = if rows * (cols - c) > PAR_THRESHOLD {
                Execution::default()
            } else {
                Execution::Sequential
            };
            exec::for_each_chunk_mut(exec, &mut self.data, cols, |i, row| {
                if i == r {
                    return;
                }
                let f = row[c].clone();
                if f.is_zero() {
                    return;
                }
                for j in c..cols {
                    if !pivot_row[j].is_zero() {
                        row[j] = row[j].sub(&f.mul(&pivot_row[j]));
                    }
                }
            });
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Inverse of a square matrix, if it is invertible.
    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Mat::identity(self.field, n));
        let (r, pivots, rank) = aug.rref();
        if rank < n || pivots[n - 1] >= n {
            return None;
        }
        let idx: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..2 * n).collect();
        Some(r.select(&idx, &right))
    }

    /// Some solution `x` of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let aug = self.hstack(&Mat::column(self.field, b));
        let (r, pivots, _) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Flattens row-major into a single vector.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rref_identity_is_fixed() {
        let i = Mat::identity(Q, 3);
        let (r, piv, rank) = i.rref();
        assert_eq!(r, i);
        assert_eq!(piv, vec![0, 1, 2]);
        assert_eq!(rank, 3);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = Mat::zeros(Q, 2, 4);
        let (r, piv, rank) = z.rref();
        assert_eq!(r, z);
        assert!(piv.is_empty());
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_rank_one_by_hand() {
        // [[1,2],[2,4]]: subtract twice the first row from the second.
        let m = Mat::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let (r, piv, rank) = m.rref();
        assert_eq!(r, Mat::from_i64(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(piv, vec![0]);
        assert_eq!(rank, 1);
    }

    #[test]
    fn inverse_and_solve() {
        let m = Mat::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(Q, 2));
        assert!(Mat::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
        let x = m.solve(&[Q.from_i64(3), Q.from_i64(2)]).unwrap();
        assert_eq!(x, vec![Q.from_i64(1), Q.from_i64(1)]);
        let s = Mat::from_i64(Q, &[&[1, 1], &[1, 1]]);
        assert!(s.solve(&[Q.from_i64(1), Q.from_i64(2)]).is_none());
    }

    #[test]
    fn large_rref_matches_sequential_path() {
        // Triggers the threaded elimination path.
        let f = FieldSpec::PrimeField(101);
        let n = 80;
        let data = (0..n * n).map(|k| f.from_i64(((k * 37 + 11) % 101) as i64)).collect();
        let m = Mat::from_vec(f, n, n, data);
        let (r, piv, _) = m.rref();
        // Row space is preserved: every original row reduces against r.
        for i in 0..n {
            let mut v = m.row(i).to_vec();
            for (k, &p) in piv.iter().enumerate() {
                let c = v[p].clone();
                for j in 0..n {
                    v[j] = v[j].sub_mul(&c, &r[(k, j)]);
                }
            }
            assert!(v.iter().all(Scalar::is_zero));
        }
    }
}
