use super::mat::Mat;
use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// A linear subspace of `k^n`, stored as its unique RREF basis (one vector per row).
///
/// Because the representative is canonical, `==` decides equality of subspaces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Mat::zeros(field, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Mat::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Mat) -> Self {
        let (r, pivots, rank) = m.rref();
        let idx: Vec<usize> = (0..rank).collect();
        let all: Vec<usize> = (0..m.cols()).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: r.select(&idx, &all),
            pivots,
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Mat) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn span(field: FieldSpec, n: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, n);
        }
        Self::row_space(&Mat::from_rows(field, n, vectors))
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Column indices not used as pivots; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&j| !is_pivot[j]).collect()
    }

    /// Normal form of `v` modulo the subspace (pivot coordinates cleared).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut v = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(k).iter().enumerate() {
                if !b.is_zero() {
                    v[j] = v[j].sub(&c.mul(b));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the RREF basis; `None` if `v` is outside.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates of `v` modulo the subspace, indexed by [`Self::free_columns`].
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.reduce(v);
        self.free_columns().into_iter().map(|j| r[j].clone()).collect()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        Ok(Self::row_space(&self.basis.vstack(&other.basis)))
    }

    /// Zassenhaus intersection: row-reduce `[[A, A], [B, 0]]` and keep the
    /// right halves of rows whose left half vanished.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let f = self.field();
        let n = self.ambient_dim;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f, n));
        }
        let top = self.basis.hstack(&self.basis);
        let bottom = other.basis.hstack(&Mat::zeros(f, other.dim(), n));
        let (r, pivots, _) = top.vstack(&bottom).rref();
        let rows: Vec<Vec<Scalar>> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| r.row(i)[n..].to_vec())
            .collect();
        Ok(Self::span(f, n, &rows))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(other.basis_vectors().iter().all(|v| self.contains(v)))
    }

    /// Image of the subspace under a linear map given as a matrix acting on columns.
    pub fn image_under(&self, m: &Mat) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        let vs: Vec<Vec<Scalar>> = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Self::span(self.field(), m.rows(), &vs)
    }
}

/// Combined result of [`subspace_ops`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    /// Whether `a ⊆ b`.
    pub contains: bool,
}

pub fn subspace_ops(a: &Subspace, b: &Subspace) -> Result<SubspaceOps> {
    Ok(SubspaceOps {
        sum: a.sum(b)?,
        intersection: a.intersection(b)?,
        contains: b.contains_subspace(a)?,
    })
}

/// Null space `{v : m v = 0}`.
pub fn kernel_basis(m: &Mat) -> Subspace {
    let f = m.field();
    let n = m.cols();
    let (r, pivots, _) = m.rref();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vecs: Vec<Vec<Scalar>> = (0..n)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = vec![f.zero(); n];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r[(i, free)].neg();
            }
            v
        })
        .collect();
    Subspace::span(f, n, &vecs)
}

/// `(rref, pivots, rank)`, re-exported as a free function.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>, usize) {
    m.rref()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn e(i: usize, n: usize) -> Vec<Scalar> {
        let mut v = vec![Q.zero(); n];
        v[i] = Q.one();
        v
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert!(kernel_basis(&Mat::identity(Q, 4)).is_zero());
        assert!(kernel_basis(&Mat::zeros(Q, 2, 3)).is_full());
    }

    #[test]
    fn kernel_over_f2_by_enumeration() {
        // Over F2 the vectors of F2^2 with x + y = 0 are (0,0) and (1,1).
        let f2 = FieldSpec::PrimeField(2);
        let k = kernel_basis(&Mat::from_i64(f2, &[&[1, 1]]));
        assert_eq!(k, Subspace::span(f2, 2, &[vec![f2.one(), f2.one()]]));
    }

    #[test]
    fn coordinate_axes() {
        let a = Subspace::span(Q, 2, &[e(0, 2)]);
        let b = Subspace::span(Q, 2, &[e(1, 2)]);
        let ops = subspace_ops(&a, &b).unwrap();
        assert!(ops.sum.is_full());
        assert!(ops.intersection.is_zero());
        assert!(!ops.contains);
    }

    #[test]
    fn containment_case() {
        let a = Subspace::span(Q, 3, &[vec![Q.one(), Q.one(), Q.zero()]]);
        let b = Subspace::span(Q, 3, &[e(0, 3), e(1, 3)]);
        let ops = subspace_ops(&a, &b).unwrap();
        assert_eq!(ops.sum, b);
        assert_eq!(ops.intersection, a);
        assert!(ops.contains);
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = Subspace::zero(Q, 2);
        let b = Subspace::zero(Q, 3);
        assert_eq!(
            a.sum(&b).unwrap_err(),
            Error::AmbientMismatch { left: 2, right: 3 }
        );
    }

    #[test]
    fn canonical_representative() {
        let a = Subspace::span(Q, 2, &[vec![Q.from_i64(2), Q.from_i64(4)]]);
        let b = Subspace::span(Q, 2, &[vec![Q.from_i64(-1), Q.from_i64(-2)]]);
        assert_eq!(a, b);
        assert_eq!(a.coords(&[Q.from_i64(3), Q.from_i64(6)]), Some(vec![Q.from_i64(3)]));
        assert_eq!(a.coords(&[Q.from_i64(3), Q.from_i64(5)]), None);
    }
}
