//! Finite-dimensional coalgebras by structure constants.

use std::collections::{BTreeMap, HashSet};

use crate::alg::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, FieldSpec, Mat, Scalar, Subspace};
use crate::quiver::Quiver;

/// First failing coalgebra axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoalgebraViolation {
    /// `(ε⊗id)Δ ≠ id` at the named basis element.
    LeftCounit { basis: usize, label: String },
    /// `(id⊗ε)Δ ≠ id`.
    RightCounit { basis: usize, label: String },
    Coassociativity { basis: usize, label: String },
}

/// A coalgebra on basis `b_0..b_{n-1}` with `Δ(b_c) = Σ d[c][a,b] b_a⊗b_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    field: FieldSpec,
    labels: Vec<String>,
    /// `delta[c]` lists `(a, b, d[c][a,b])`, nonzero, sorted by `(a, b)`.
    delta: Vec<Vec<(usize, usize, Scalar)>>,
    eps: Vec<Scalar>,
}

/// Label of the dual basis vector: appends `*`, or strips a trailing one.
pub fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(s) => s.to_string(),
        None => format!("{l}*"),
    }
}

impl Coalgebra {
    pub(crate) fn from_parts(
        field: FieldSpec,
        labels: Vec<String>,
        delta: Vec<Vec<(usize, usize, Scalar)>>,
        eps: Vec<Scalar>,
    ) -> Self {
        let delta = delta
            .into_iter()
            .map(|terms| {
                let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
                for (a, b, v) in terms {
                    let e = acc.entry((a, b)).or_insert_with(|| field.zero());
                    *e = e.add(&v);
                }
                acc.into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|((a, b), v)| (a, b, v))
                    .collect()
            })
            .collect();
        Coalgebra {
            field,
            labels,
            delta,
            eps,
        }
    }

    /// Builds a coalgebra from `(c, a, b, coeff)` entries; repeated entries add
    /// up. Axioms are not checked; see [`Coalgebra::validate`].
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        eps: Vec<Scalar>,
    ) -> Result<Self> {
        let n = labels.len();
        if eps.len() != n {
            return Err(Error::Malformed(format!("counit has {} entries, expected {n}", eps.len())));
        }
        let mut delta = vec![Vec::new(); n];
        for (c, a, b, v) in entries {
            if a >= n || b >= n || c >= n {
                return Err(Error::Malformed(format!("index ({c},{a},{b}) out of range")));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(v.field().to_string(), field.to_string()));
            }
            delta[c].push((a, b, v));
        }
        for v in &eps {
            if v.field() != field {
                return Err(Error::FieldMismatch(v.field().to_string(), field.to_string()));
            }
        }
        Ok(Self::from_parts(field, labels, delta, eps))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn delta(&self, c: usize) -> &[(usize, usize, Scalar)] {
        &self.delta[c]
    }

    pub fn eps(&self) -> &[Scalar] {
        &self.eps
    }

    /// Every nonzero `(c, a, b, coeff)`, sorted.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        self.delta
            .iter()
            .enumerate()
            .flat_map(|(c, t)| t.iter().map(move |(a, b, v)| (c, *a, *b, v.clone())))
            .collect()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    /// `Δ(v)` as the matrix `T` with `Δ(v) = Σ T[a][b] b_a⊗b_b`.
    pub fn delta_matrix(&self, v: &[Scalar]) -> Mat {
        let n = self.dim();
        let mut t = Mat::zeros(self.field, n, n);
        for (c, vc) in v.iter().enumerate() {
            if vc.is_zero() {
                continue;
            }
            for (a, b, d) in &self.delta[c] {
                t[(*a, *b)] = t[(*a, *b)].add(&vc.mul(d));
            }
        }
        t
    }

    /// Counit laws first, then coassociativity, per basis element in order.
    pub fn validate(&self) -> std::result::Result<(), CoalgebraViolation> {
        let n = self.dim();
        let f = self.field;
        for c in 0..n {
            let label = self.labels[c].clone();
            let mut left = vec![f.zero(); n];
            let mut right = vec![f.zero(); n];
            for (a, b, d) in &self.delta[c] {
                left[*b] = left[*b].add(&self.eps[*a].mul(d));
                right[*a] = right[*a].add(&self.eps[*b].mul(d));
            }
            let mut unit = vec![f.zero(); n];
            unit[c] = f.one();
            if left != unit {
                return Err(CoalgebraViolation::LeftCounit { basis: c, label });
            }
            if right != unit {
                return Err(CoalgebraViolation::RightCounit { basis: c, label });
            }
            let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (a, b, d) in &self.delta[c] {
                for (x, y, e) in &self.delta[*a] {
                    let k = lhs.entry((*x, *y, *b)).or_insert_with(|| f.zero());
                    *k = k.add(&d.mul(e));
                }
                for (x, y, e) in &self.delta[*b] {
                    let k = rhs.entry((*a, *x, *y)).or_insert_with(|| f.zero());
                    *k = k.add(&d.mul(e));
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            rhs.retain(|_, v| !v.is_zero());
            if lhs != rhs {
                return Err(CoalgebraViolation::Coassociativity { basis: c, label });
            }
        }
        Ok(())
    }

    /// Path coalgebra: basis the paths (see [`Quiver::enumerate_paths`]),
    /// `Δ(w) = Σ_{w=uv} u⊗v` including trivial factors, `ε(w) = [len w = 0]`.
    pub fn path_coalgebra(field: FieldSpec, q: &Quiver, max_len: Option<usize>) -> Result<Coalgebra> {
        let paths = q.enumerate_paths(max_len)?;
        let index: std::collections::HashMap<_, _> =
            paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let vertex_path = |v: usize| index[&crate::quiver::Path::trivial(v)];
        let mut delta = Vec::with_capacity(paths.len());
        for p in &paths {
            let mut terms = Vec::new();
            for k in 0..=p.len() {
                let (u, v) = p.arrows.split_at(k);
                let ui = if u.is_empty() {
                    vertex_path(p.start)
                } else {
                    index[&crate::quiver::Path {
                        start: p.start,
                        end: q.arrows()[u[u.len() - 1]].target,
                        arrows: u.to_vec(),
                    }]
                };
                let vi = if v.is_empty() {
                    vertex_path(p.end)
                } else {
                    index[&crate::quiver::Path {
                        start: q.arrows()[v[0]].source,
                        end: p.end,
                        arrows: v.to_vec(),
                    }]
                };
                terms.push((ui, vi, field.one()));
            }
            delta.push(terms);
        }
        let eps = paths
            .iter()
            .map(|p| if p.is_trivial() { field.one() } else { field.zero() })
            .collect();
        let labels = paths.iter().map(|p| q.path_label(p)).collect();
        Ok(Self::from_parts(field, labels, delta, eps))
    }

    /// Matrix coalgebra: `Δ(E_ij) = Σ_l E_il⊗E_lj`, `ε(E_ij) = δ_ij`; basis
    /// `E_i_j` row-major, 1-based.
    pub fn matrix_coalgebra(field: FieldSpec, n: usize) -> Coalgebra {
        Algebra::matrix_algebra(field, n).dual_coalgebra().with_labels(
            (1..=n)
                .flat_map(|i| (1..=n).map(move |j| format!("E_{i}_{j}")))
                .collect(),
        )
    }

    /// Divided-power coalgebra truncated to `1, x, …, x^{n-1}`; equal to the
    /// path coalgebra of a loop with paths of length below `n`.
    pub fn truncated_divided_power(field: FieldSpec, n: usize) -> Coalgebra {
        assert!(n >= 1);
        let q = Quiver::from_labels(&["v"], &[("x", "v", "v")]).unwrap();
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        Self::path_coalgebra(field, &q, Some(n - 1))
            .unwrap()
            .with_labels(labels)
    }

    /// `m` pairwise orthogonal group-like elements `g1..gm` (`g` when `m = 1`).
    pub fn group_like(field: FieldSpec, m: usize) -> Coalgebra {
        let labels = if m == 1 {
            vec!["g".to_string()]
        } else {
            (1..=m).map(|i| format!("g{i}")).collect()
        };
        let delta = (0..m).map(|i| vec![(i, i, field.one())]).collect();
        Self::from_parts(field, labels, delta, vec![field.one(); m])
    }

    /// Block-diagonal sum. Colliding labels get the 1-based block index appended.
    pub fn direct_sum(cs: &[Coalgebra]) -> Result<Coalgebra> {
        let field = cs
            .first()
            .map(|c| c.field)
            .ok_or_else(|| Error::Malformed("empty direct sum".into()))?;
        for c in cs {
            if c.field != field {
                return Err(Error::FieldMismatch(c.field.to_string(), field.to_string()));
            }
        }
        let raw: Vec<&String> = cs.iter().flat_map(|c| c.labels.iter()).collect();
        let unique = raw.iter().collect::<HashSet<_>>().len() == raw.len();
        let mut labels = Vec::new();
        let mut delta = Vec::new();
        let mut eps = Vec::new();
        let mut off = 0;
        for (k, c) in cs.iter().enumerate() {
            labels.extend(c.labels.iter().map(|l| if unique { l.clone() } else { format!("{l}_{}", k + 1) }));
            delta.extend(
                c.delta
                    .iter()
                    .map(|t| t.iter().map(|(a, b, v)| (a + off, b + off, v.clone())).collect()),
            );
            eps.extend(c.eps.iter().cloned());
            off += c.dim();
        }
        Ok(Self::from_parts(field, labels, delta, eps))
    }

    /// Dual algebra with the convolution product: `m[a,b→c] = d[c][a,b]`, unit `ε`.
    pub fn dual_algebra(&self) -> Algebra {
        Algebra::new(
            self.field,
            self.labels.iter().map(|l| dual_label(l)).collect(),
            self.entries().into_iter().map(|(c, a, b, v)| (a, b, c, v)),
            self.eps.clone(),
        )
        .unwrap()
    }

    /// Coradical: the annihilator of `Jac(C*)` under the canonical pairing.
    pub fn coradical(&self) -> Result<Subspace> {
        let j = self.dual_algebra().radical()?;
        if j.is_zero() {
            return Ok(Subspace::full(self.field, self.dim()));
        }
        Ok(kernel_basis(j.basis()))
    }

    /// Whether `Δ(V) ⊆ V⊗V`: every row and column of each `Δ(v)` lies in `V`.
    pub fn is_subcoalgebra(&self, v: &Subspace) -> bool {
        v.basis_vectors().iter().all(|x| {
            let t = self.delta_matrix(x);
            t.row_vecs().iter().all(|r| v.contains(r)) && t.col_vecs().iter().all(|c| v.contains(c))
        })
    }

    /// Whether `Δ(K) ⊆ K⊗C + C⊗K` and `ε(K) = 0`.
    pub fn is_coideal(&self, k: &Subspace) -> bool {
        let free = k.free_columns();
        let f = self.field;
        // P maps C onto C/K on the complement basis.
        let p = Mat::from_rows(
            f,
            free.len(),
            &(0..self.dim())
                .map(|i| {
                    let mut e = vec![f.zero(); self.dim()];
                    e[i] = f.one();
                    k.quotient_coords(&e)
                })
                .collect::<Vec<_>>(),
        )
        .transpose();
        debug_assert_eq!(p.rows(), free.len());
        k.basis_vectors().iter().all(|x| {
            let eps: Scalar = x
                .iter()
                .zip(&self.eps)
                .fold(f.zero(), |acc, (a, b)| acc.add(&a.mul(b)));
            eps.is_zero() && p.mul(&self.delta_matrix(x)).mul(&p.transpose()).is_zero()
        })
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|c| {
            let t = self.delta_matrix(&{
                let mut e = vec![self.field.zero(); self.dim()];
                e[c] = self.field.one();
                e
            });
            t == t.transpose()
        })
    }

    /// Checks that `pi` (matrix of a linear map `self → target`) satisfies
    /// `(π⊗π)Δ = Δπ` and `ε_target π = ε`, reporting the first failure.
    pub fn check_morphism(&self, pi: &Mat, target: &Coalgebra) -> std::result::Result<(), String> {
        if pi.rows() != target.dim() || pi.cols() != self.dim() {
            return Err(format!(
                "map is {}×{}, expected {}×{}",
                pi.rows(),
                pi.cols(),
                target.dim(),
                self.dim()
            ));
        }
        let f = self.field;
        for c in 0..self.dim() {
            let mut e = vec![f.zero(); self.dim()];
            e[c] = f.one();
            let image = pi.mul_vec(&e);
            let lhs = pi.mul(&self.delta_matrix(&e)).mul(&pi.transpose());
            if lhs != target.delta_matrix(&image) {
                return Err(format!("comultiplication not preserved at `{}`", self.labels[c]));
            }
            let eps_img = image
                .iter()
                .zip(&target.eps)
                .fold(f.zero(), |acc, (a, b)| acc.add(&a.mul(b)));
            if eps_img != self.eps[c] {
                return Err(format!("counit not preserved at `{}`", self.labels[c]));
            }
        }
        Ok(())
    }
}
