//! Finite-dimensional associative unital algebras by structure constants.

mod idempotents;
mod radical;

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::coalg::{dual_label, Coalgebra};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Mat, Scalar, Subspace};
use crate::quiver::Quiver;

pub use idempotents::WedderburnBlocks;
pub use radical::radical_by_enumeration;

/// Which axiom failed, and on which basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraViolation {
    Associativity { a: usize, b: usize, c: usize },
    LeftUnit { basis: usize },
    RightUnit { basis: usize },
}

#[derive(Clone, Debug, Default)]
struct Cache {
    radical: OnceLock<Result<Subspace>>,
    idempotents: OnceLock<Result<Vec<Vec<Scalar>>>>,
    generators: OnceLock<Vec<Vec<Scalar>>>,
}

/// An algebra on basis `b_0..b_{n-1}` with `b_a b_b = Σ_c m[a,b→c] b_c`.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: FieldSpec,
    labels: Vec<String>,
    /// `mult[a*n + b]` lists `(c, m[a,b→c])` with nonzero coefficients, sorted by `c`.
    mult: Vec<Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
    cache: Cache,
}

impl PartialEq for Algebra {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.labels == o.labels && self.mult == o.mult && self.unit == o.unit
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Builds an algebra from `(a, b, c, coeff)` entries; repeated entries add up.
    /// Axioms are not checked here; see [`Algebra::validate`].
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Vec<Scalar>,
    ) -> Result<Self> {
        let n = labels.len();
        if unit.len() != n {
            return Err(Error::Malformed(format!("unit has {} entries, expected {n}", unit.len())));
        }
        let mut acc: HashMap<(usize, usize, usize), Scalar> = HashMap::new();
        for (a, b, c, v) in entries {
            if a >= n || b >= n || c >= n {
                return Err(Error::Malformed(format!("index ({a},{b},{c}) out of range")));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(v.field().to_string(), field.to_string()));
            }
            let e = acc.entry((a, b, c)).or_insert_with(|| field.zero());
            *e = e.add(&v);
        }
        let mut mult = vec![Vec::new(); n * n];
        for ((a, b, c), v) in acc {
            if !v.is_zero() {
                mult[a * n + b].push((c, v));
            }
        }
        for l in &mut mult {
            l.sort_by_key(|e| e.0);
        }
        Ok(Algebra {
            field,
            labels,
            mult,
            unit,
            cache: Cache::default(),
        })
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

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Nonzero `(c, m[a,b→c])`.
    pub fn product(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        &self.mult[a * self.dim() + b]
    }

    /// Every nonzero structure constant as `(a, b, c, coeff)`, sorted.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for (c, v) in self.product(a, b) {
                    out.push((a, b, *c, v.clone()));
                }
            }
        }
        out
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.zero_vec();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let s = xa.mul(yb);
                for (c, v) in &self.mult[a * n + b] {
                    out[*c] = out[*c].add(&s.mul(v));
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y` on column vectors.
    pub fn left_mult(&self, x: &[Scalar]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(self.field, n, n);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for b in 0..n {
                for (c, v) in self.product(a, b) {
                    m[(*c, b)] = m[(*c, b)].add(&xa.mul(v));
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ y·x` on column vectors.
    pub fn right_mult(&self, x: &[Scalar]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(self.field, n, n);
        for (b, xb) in x.iter().enumerate() {
            if xb.is_zero() {
                continue;
            }
            for a in 0..n {
                for (c, v) in self.product(a, b) {
                    m[(*c, a)] = m[(*c, a)].add(&xb.mul(v));
                }
            }
        }
        m
    }

    pub fn is_nilpotent(&self, x: &[Scalar]) -> bool {
        let mut p = x.to_vec();
        for _ in 0..self.dim() {
            if p.iter().all(Scalar::is_zero) {
                return true;
            }
            p = self.mul(&p, x);
        }
        p.iter().all(Scalar::is_zero)
    }

    /// First failing axiom, checking the unit laws before associativity.
    pub fn validate(&self) -> std::result::Result<(), AlgebraViolation> {
        let n = self.dim();
        for b in 0..n {
            let e = self.basis_vec(b);
            if self.mul(&self.unit, &e) != e {
                return Err(AlgebraViolation::LeftUnit { basis: b });
            }
            if self.mul(&e, &self.unit) != e {
                return Err(AlgebraViolation::RightUnit { basis: b });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(&self.basis_vec(a), &self.basis_vec(b));
                for c in 0..n {
                    let ec = self.basis_vec(c);
                    let bc = self.mul(&self.basis_vec(b), &ec);
                    if self.mul(&ab, &ec) != self.mul(&self.basis_vec(a), &bc) {
                        return Err(AlgebraViolation::Associativity { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// The coalgebra on the dual basis: `d[c][a,b] = m[a,b→c]`, `ε = unit`.
    pub fn dual_coalgebra(&self) -> Coalgebra {
        let n = self.dim();
        let mut delta = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                for (c, v) in self.product(a, b) {
                    delta[*c].push((a, b, v.clone()));
                }
            }
        }
        Coalgebra::from_parts(
            self.field,
            self.labels.iter().map(|l| dual_label(l)).collect(),
            delta,
            self.unit.clone(),
        )
    }

    /// Same space with `a ∘ b = b·a`.
    pub fn opposite(&self) -> Algebra {
        let entries = self.entries().into_iter().map(|(a, b, c, v)| (b, a, c, v));
        Algebra::new(self.field, self.labels.clone(), entries, self.unit.clone()).unwrap()
    }

    /// Full matrix algebra with basis `E_i_j` (1-based, row-major).
    pub fn matrix_algebra(field: FieldSpec, n: usize) -> Algebra {
        let idx = |i: usize, j: usize| i * n + j;
        let mut labels = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                labels.push(format!("E_{i}_{j}"));
            }
        }
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    entries.push((idx(i, j), idx(j, l), idx(i, l), field.one()));
                }
            }
        }
        let mut unit = vec![field.zero(); n * n];
        for i in 0..n {
            unit[idx(i, i)] = field.one();
        }
        Algebra::new(field, labels, entries, unit).unwrap()
    }

    /// Path algebra of an acyclic quiver; the product `p·q` is `p` followed by `q`.
    pub fn path_algebra(field: FieldSpec, q: &Quiver) -> Result<Algebra> {
        if q.has_cycle() {
            return Err(Error::CyclicQuiver);
        }
        let paths = q.enumerate_paths(None)?;
        let index: HashMap<_, _> = paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut entries = Vec::new();
        for (i, p) in paths.iter().enumerate() {
            for (j, r) in paths.iter().enumerate() {
                if p.end != r.start {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.extend_from_slice(&r.arrows);
                let joined = crate::quiver::Path {
                    start: p.start,
                    end: r.end,
                    arrows,
                };
                entries.push((i, j, index[&joined], field.one()));
            }
        }
        let unit = paths
            .iter()
            .map(|p| if p.is_trivial() { field.one() } else { field.zero() })
            .collect();
        let labels = paths.iter().map(|p| q.path_label(p)).collect();
        Algebra::new(field, labels, entries, unit)
    }

    /// The algebra `(k 0; R R)` with `R = k[x]/(x²)`, on the basis
    /// `e1, e2, r, m, rm`: `e1` the corner idempotent, `e2 + r·x` spanning the
    /// diagonal copy of `R`, and `m, rm` spanning the off-diagonal `R`.
    pub fn triangular_example(field: FieldSpec) -> Algebra {
        let labels = ["e1", "e2", "r", "m", "rm"].map(String::from).to_vec();
        let (e1, e2, r, m, rm) = (0, 1, 2, 3, 4);
        let one = field.one();
        let table = [
            (e1, e1, e1),
            (e2, e2, e2),
            (e2, r, r),
            (e2, m, m),
            (e2, rm, rm),
            (r, e2, r),
            (r, m, rm),
            (m, e1, m),
            (rm, e1, rm),
        ];
        let entries: Vec<_> = table.iter().map(|&(a, b, c)| (a, b, c, one.clone())).collect();
        let mut unit = vec![field.zero(); 5];
        unit[e1] = one.clone();
        unit[e2] = one;
        Algebra::new(field, labels, entries, unit).unwrap()
    }

    /// `k[Z]/(Z^n)` on `1, Z, …, Z^{n-1}`.
    pub fn truncated_polynomial(field: FieldSpec, n: usize) -> Algebra {
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "Z".to_string(),
                _ => format!("Z^{i}"),
            })
            .collect();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n - i {
                entries.push((i, j, i + j, field.one()));
            }
        }
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        Algebra::new(field, labels, entries, unit).unwrap()
    }

    /// Direct product; labels are kept unless they collide, in which case
    /// they are suffixed with the factor index.
    pub fn direct_product(parts: &[Algebra]) -> Result<Algebra> {
        let field = parts.first().map(|a| a.field).ok_or_else(|| Error::Malformed("empty product".into()))?;
        for a in parts {
            if a.field != field {
                return Err(Error::FieldMismatch(a.field.to_string(), field.to_string()));
            }
        }
        let raw: Vec<&String> = parts.iter().flat_map(|a| a.labels.iter()).collect();
        let unique = raw.iter().collect::<std::collections::HashSet<_>>().len() == raw.len();
        let mut labels = Vec::new();
        let mut entries = Vec::new();
        let mut unit = Vec::new();
        let mut off = 0;
        for (k, a) in parts.iter().enumerate() {
            for l in &a.labels {
                labels.push(if unique { l.clone() } else { format!("{l}_{}", k + 1) });
            }
            for (x, y, z, v) in a.entries() {
                entries.push((x + off, y + off, z + off, v));
            }
            unit.extend(a.unit.iter().cloned());
            off += a.dim();
        }
        Algebra::new(field, labels, entries, unit)
    }

    /// The algebra whose basis is the given subspace of flattened `rows×rows`
    /// matrices, with matrix multiplication. The span must be closed under
    /// products and contain the identity.
    pub fn from_matrix_span(span: &Subspace, rows: usize) -> Result<Algebra> {
        let f = span.field();
        if span.ambient_dim() != rows * rows {
            return Err(Error::AmbientMismatch {
                left: span.ambient_dim(),
                right: rows * rows,
            });
        }
        let mats: Vec<Mat> = span
            .basis_vectors()
            .into_iter()
            .map(|v| Mat::from_vec(f, rows, rows, v))
            .collect();
        let mut entries = Vec::new();
        for (a, ma) in mats.iter().enumerate() {
            for (b, mb) in mats.iter().enumerate() {
                let p = ma.mul(mb).flatten();
                let cs = span
                    .coords(&p)
                    .ok_or_else(|| Error::Internal("matrix span not closed under products".into()))?;
                for (c, v) in cs.into_iter().enumerate() {
                    if !v.is_zero() {
                        entries.push((a, b, c, v));
                    }
                }
            }
        }
        let unit = span
            .coords(&Mat::identity(f, rows).flatten())
            .ok_or_else(|| Error::Internal("matrix span does not contain the identity".into()))?;
        let labels = (0..mats.len()).map(|i| format!("h{i}")).collect();
        Algebra::new(f, labels, entries, unit)
    }

    /// A generating set (as algebra elements) chosen greedily from the basis.
    pub fn generators(&self) -> &[Vec<Scalar>] {
        self.cache.generators.get_or_init(|| {
            let n = self.dim();
            let mut gens: Vec<Vec<Scalar>> = Vec::new();
            let mut span = Subspace::span(self.field, n, &[self.unit.clone()]);
            for b in 0..n {
                let e = self.basis_vec(b);
                if span.contains(&e) {
                    continue;
                }
                gens.push(e);
                loop {
                    let mut vs = span.basis_vectors();
                    for g in &gens {
                        for v in span.basis_vectors() {
                            vs.push(self.mul(g, &v));
                        }
                    }
                    let next = Subspace::span(self.field, n, &vs);
                    if next.dim() == span.dim() {
                        break;
                    }
                    span = next;
                }
                if span.is_full() {
                    break;
                }
            }
            gens
        })
    }
}
