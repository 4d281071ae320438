//! Incremental sparse elimination for homogeneous systems.
//!
//! Commutation systems (Hom spaces, commutants) have thousands of unknowns but
//! only a handful of nonzeros per equation. Equations are reduced on arrival
//! against a semi-echelon basis keyed by leading column; the kernel is read off
//! after a final back-substitution.

use std::collections::BTreeMap;

use super::scalar::{FieldSpec, Scalar};
use super::subspace::Subspace;
use super::mat::Mat;

type Row = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct SparseSystem {
    field: FieldSpec,
    unknowns: usize,
    /// Leading column → row with leading coefficient 1, sorted by column.
    pivots: BTreeMap<usize, Row>,
}

fn axpy(field: FieldSpec, x: &Row, c: &Scalar, y: &Row) -> Row {
    // x - c*y, both sorted.
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let xi = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let yj = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if xi < yj {
            out.push(x[i].clone());
            i += 1;
        } else if yj < xi {
            out.push((yj, field.zero().sub(&c.mul(&y[j].1))));
            j += 1;
        } else {
            let v = x[i].1.sub(&c.mul(&y[j].1));
            if !v.is_zero() {
                out.push((xi, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl SparseSystem {
    pub fn new(field: FieldSpec, unknowns: usize) -> Self {
        SparseSystem {
            field,
            unknowns,
            pivots: BTreeMap::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds the equation `Σ coeff·x_col = 0`. Entries may repeat columns and
    /// appear in any order. Returns whether the rank grew.
    pub fn add_equation(&mut self, entries: impl IntoIterator<Item = (usize, Scalar)>) -> bool {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.unknowns, "column {c} out of range");
            if v.is_zero() {
                continue;
            }
            let e = acc.entry(c).or_insert_with(|| self.field.zero());
            *e = e.add(&v);
        }
        let mut row: Row = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        loop {
            let Some((lead, coeff)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(self.field, &row, &coeff, p),
                None => {
                    let inv = coeff.inv();
                    for e in row.iter_mut() {
                        e.1 = e.1.mul(&inv);
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Basis of the solution space.
    pub fn kernel(&self) -> Subspace {
        let f = self.field;
        let n = self.unknowns;
        // Back-substitute from the last pivot so each row mentions only free columns.
        let mut reduced: BTreeMap<usize, Row> = BTreeMap::new();
        for (&lead, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            let mut k = 1;
            while k < r.len() {
                let (c, v) = r[k].clone();
                if let Some(p) = reduced.get(&c) {
                    r = axpy(f, &r, &v, p);
                    // r[0] is still the leading entry; entry c is gone, so k stays.
                } else {
                    k += 1;
                }
            }
            reduced.insert(lead, r);
        }
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains_key(c)).collect();
        let mut index = vec![usize::MAX; n];
        for (i, &c) in free.iter().enumerate() {
            index[c] = i;
        }
        // Kernel vector for free column `c`: x_c = 1, x_lead = -row[lead][c].
        let mut vecs = vec![vec![f.zero(); n]; free.len()];
        for (i, &c) in free.iter().enumerate() {
            vecs[i][c] = f.one();
        }
        for (&lead, row) in &reduced {
            for (c, v) in &row[1..] {
                vecs[index[*c]][lead] = v.neg();
            }
        }
        if vecs.is_empty() {
            return Subspace::zero(f, n);
        }
        Subspace::row_space(&Mat::from_rows(f, n, &vecs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::subspace::kernel_basis;

    #[test]
    fn matches_dense_kernel() {
        let q = FieldSpec::Rationals;
        let m = Mat::from_i64(q, &[&[1, 2, 0, -1, 3], &[2, 4, 1, 0, 0], &[3, 6, 1, -1, 3], &[0, 0, 0, 1, 1]]);
        let mut s = SparseSystem::new(q, 5);
        for r in m.row_vecs() {
            s.add_equation(r.into_iter().enumerate());
        }
        assert_eq!(s.rank(), m.rank());
        assert_eq!(s.kernel(), kernel_basis(&m));
    }

    #[test]
    fn dependent_equations_do_not_raise_rank() {
        let f = FieldSpec::PrimeField(3);
        let mut s = SparseSystem::new(f, 3);
        assert!(s.add_equation([(0, f.one()), (2, f.one())]));
        assert!(!s.add_equation([(2, f.from_i64(2)), (0, f.from_i64(2))]));
        assert!(!s.add_equation([(1, f.one()), (1, f.from_i64(2))]));
        assert_eq!(s.kernel().dim(), 2);
    }
}
