//! Finite-dimensional one-sided modules, maps between them, and the
//! submodule calculus (radical, socle, singular submodule, Hom spaces).
//!
//! Every action matrix acts on column vectors. A left module satisfies
//! `ρ(ab) = ρ(a)ρ(b)`, a right module `ρ(ab) = ρ(b)ρ(a)`; in both cases a
//! homomorphism `F` satisfies `F·ρ_X(a) = ρ_Y(a)·F`.

mod cover;
pub mod oracle;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::alg::Algebra;
use crate::coalg::Coalgebra;
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Mat, Scalar, SparseSystem, Subspace};

pub use cover::{is_codense_cover, InjectiveHull, ProjectiveCover};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A finite-dimensional module given by one action matrix per basis element
/// of its algebra.
#[derive(Clone, Debug)]
pub struct FDModule {
    algebra: Arc<Algebra>,
    side: Side,
    dim: usize,
    action: Arc<Vec<Mat>>,
}

/// A linear map `source → target`, `matrix` of shape `target.dim × source.dim`.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: FDModule,
    pub target: FDModule,
    pub matrix: Mat,
}

/// A subspace of `module` stable under the action.
#[derive(Clone, Debug)]
pub struct Submodule {
    pub module: FDModule,
    pub space: Subspace,
}

/// Radical and socle of a module.
#[derive(Clone, Debug)]
pub struct RadicalSocle {
    pub radical: Submodule,
    pub socle: Submodule,
}

/// `trace` = Σ images of `X → target`; `reject` = ∩ kernels of `target → X`.
#[derive(Clone, Debug)]
pub struct TraceReject {
    pub trace: Submodule,
    pub reject: Submodule,
}

fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FDModule {
    /// Checks shapes only; see [`FDModule::validate`] for the module axioms.
    pub fn new(algebra: Arc<Algebra>, side: Side, dim: usize, action: Vec<Mat>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::Malformed(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        for m in &action {
            if m.rows() != dim || m.cols() != dim || m.field() != algebra.field() {
                return Err(Error::Malformed("action matrix of wrong shape or field".into()));
            }
        }
        Ok(FDModule {
            algebra,
            side,
            dim,
            action: Arc::new(action),
        })
    }

    /// The algebra acting on itself by multiplication from `side`.
    pub fn regular(algebra: Arc<Algebra>, side: Side) -> Self {
        let n = algebra.dim();
        let action = (0..n)
            .map(|a| {
                let e = algebra.basis_vec(a);
                match side {
                    Side::Left => algebra.left_mult(&e),
                    Side::Right => algebra.right_mult(&e),
                }
            })
            .collect();
        FDModule::new(algebra, side, n, action).unwrap()
    }

    /// A coalgebra as a module over `algebra = C*`: from the left by
    /// `f ⇀ c = Σ c₁ f(c₂)`, from the right by `c ↼ f = Σ f(c₁) c₂`.
    pub fn from_coalgebra(c: &Coalgebra, algebra: Arc<Algebra>, side: Side) -> Result<Self> {
        if algebra.dim() != c.dim() || algebra.field() != c.field() {
            return Err(Error::AlgebraMismatch);
        }
        let f = c.field();
        let n = c.dim();
        let mut action = vec![Mat::zeros(f, n, n); n];
        for cc in 0..n {
            for (a, b, d) in c.delta(cc) {
                match side {
                    Side::Left => action[*b][(*a, cc)] = action[*b][(*a, cc)].add(d),
                    Side::Right => action[*a][(*b, cc)] = action[*a][(*b, cc)].add(d),
                }
            }
        }
        FDModule::new(algebra, side, n, action)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, x: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(self.field(), self.dim, self.dim);
        for (a, xa) in x.iter().enumerate() {
            if !xa.is_zero() {
                m.add_scaled(xa, &self.action[a]);
            }
        }
        m
    }

    /// Action matrices of the algebra's generators.
    pub fn generator_actions(&self) -> Vec<Mat> {
        self.algebra.generators().iter().map(|g| self.act(g)).collect()
    }

    /// Checks `ρ(1) = I` and multiplicativity on all basis pairs.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let a = &self.algebra;
        if self.act(a.unit()) != Mat::identity(self.field(), self.dim) {
            return Err("unit does not act as the identity".into());
        }
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let prod = self.act(&a.mul(&a.basis_vec(x), &a.basis_vec(y)));
                let expect = match self.side {
                    Side::Left => self.action[x].mul(&self.action[y]),
                    Side::Right => self.action[y].mul(&self.action[x]),
                };
                if prod != expect {
                    return Err(format!("action not multiplicative on ({}, {})", a.labels()[x], a.labels()[y]));
                }
            }
        }
        Ok(())
    }

    fn compatible(&self, o: &FDModule) -> Result<()> {
        if self.side != o.side {
            return Err(Error::SideMismatch);
        }
        if !same_algebra(&self.algebra, &o.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Whether `s` is stable under the action.
    pub fn is_submodule(&self, s: &Subspace) -> bool {
        let gens = self.generator_actions();
        s.basis_vectors()
            .iter()
            .all(|v| gens.iter().all(|g| s.contains(&g.mul_vec(v))))
    }

    pub fn submodule(&self, space: Subspace) -> Result<Submodule> {
        if space.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch {
                left: space.ambient_dim(),
                right: self.dim,
            });
        }
        if !self.is_submodule(&space) {
            return Err(Error::Malformed("subspace is not stable under the action".into()));
        }
        Ok(Submodule {
            module: self.clone(),
            space,
        })
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule {
            module: self.clone(),
            space: Subspace::zero(self.field(), self.dim),
        }
    }

    pub fn full_submodule(&self) -> Submodule {
        Submodule {
            module: self.clone(),
            space: Subspace::full(self.field(), self.dim),
        }
    }

    /// Smallest submodule containing `vectors`.
    pub fn generated(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let gens = self.generator_actions();
        let mut span = Subspace::span(self.field(), self.dim, vectors);
        loop {
            let mut vs = span.basis_vectors();
            for g in &gens {
                for v in span.basis_vectors() {
                    vs.push(g.mul_vec(&v));
                }
            }
            let next = Subspace::span(self.field(), self.dim, &vs);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    /// Linear dual with transposed action, side swapped. `(M*)* = M` exactly.
    pub fn k_dual(&self) -> FDModule {
        FDModule {
            algebra: self.algebra.clone(),
            side: self.side.flip(),
            dim: self.dim,
            action: Arc::new(self.action.iter().map(Mat::transpose).collect()),
        }
    }

    pub fn direct_sum(parts: &[FDModule]) -> Result<FDModule> {
        let first = parts.first().ok_or_else(|| Error::Malformed("empty direct sum".into()))?;
        for p in parts {
            first.compatible(p)?;
        }
        let f = first.field();
        let dim: usize = parts.iter().map(|p| p.dim).sum();
        let action = (0..first.algebra.dim())
            .map(|a| {
                let mut m = Mat::zeros(f, dim, dim);
                let mut off = 0;
                for p in parts {
                    for i in 0..p.dim {
                        for j in 0..p.dim {
                            m[(off + i, off + j)] = p.action[a][(i, j)].clone();
                        }
                    }
                    off += p.dim;
                }
                m
            })
            .collect();
        FDModule::new(first.algebra.clone(), first.side, dim, action)
    }

    /// `Rad M = J·M` and `Soc M = {m : J·m = 0}` (action from the module's side).
    pub fn radical_socle(&self) -> Result<RadicalSocle> {
        let j = self.algebra.radical()?;
        let f = self.field();
        let acts: Vec<Mat> = j.basis_vectors().iter().map(|x| self.act(x)).collect();
        let mut cols = Vec::new();
        for m in &acts {
            cols.extend(m.col_vecs());
        }
        let radical = Subspace::span(f, self.dim, &cols);
        let socle = if acts.is_empty() {
            Subspace::full(f, self.dim)
        } else {
            let stacked = acts.iter().skip(1).fold(acts[0].clone(), |acc, m| acc.vstack(m));
            crate::exactla::kernel_basis(&stacked)
        };
        Ok(RadicalSocle {
            radical: Submodule {
                module: self.clone(),
                space: radical,
            },
            socle: Submodule {
                module: self.clone(),
                space: socle,
            },
        })
    }

    pub fn radical(&self) -> Result<Submodule> {
        Ok(self.radical_socle()?.radical)
    }

    pub fn socle(&self) -> Result<Submodule> {
        Ok(self.radical_socle()?.socle)
    }

    /// `Z(M) = {m : Soc(A)·m = 0}` with `Soc(A)` the socle of the regular
    /// module on the same side: an annihilator is essential iff it contains it.
    pub fn singular_submodule(&self) -> Result<Submodule> {
        let reg = FDModule::regular(self.algebra.clone(), self.side);
        let soc = reg.socle()?.space;
        let acts: Vec<Mat> = soc.basis_vectors().iter().map(|s| self.act(s)).collect();
        let space = if acts.is_empty() {
            Subspace::full(self.field(), self.dim)
        } else {
            let stacked = acts.iter().skip(1).fold(acts[0].clone(), |acc, m| acc.vstack(m));
            crate::exactla::kernel_basis(&stacked)
        };
        Ok(Submodule {
            module: self.clone(),
            space,
        })
    }

    pub fn is_non_singular(&self) -> Result<bool> {
        Ok(self.singular_submodule()?.space.is_zero())
    }

    /// Number of composition factors of the top, i.e. `dim_k` of
    /// `M/Rad M` measured in simple summands.
    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.radical()?.space.is_zero())
    }
}

/// Basis of the matrices `F` (`dy × dx`, flattened row-major) with
/// `F·xs[i] = ys[i]·F` for all `i`.
///
/// `blocks`, when given, are complete families of orthogonal projections on
/// each side that every solution is known to commute with; the system is then
/// solved block by block.
pub fn intertwiners(
    field: FieldSpec,
    dx: usize,
    dy: usize,
    xs: &[Mat],
    ys: &[Mat],
    blocks: Option<(&[Mat], &[Mat])>,
) -> Subspace {
    assert_eq!(xs.len(), ys.len());
    let (sx, sx_inv, bx, sy, sy_inv, by) = match blocks {
        Some((px, py)) => {
            let (sx, bx) = block_basis(field, dx, px);
            let (sy, by) = block_basis(field, dy, py);
            let sx_inv = sx.inverse().expect("block projections do not decompose the source");
            let sy_inv = sy.inverse().expect("block projections do not decompose the target");
            (sx, sx_inv, bx, sy, sy_inv, by)
        }
        None => {
            let i = Mat::identity(field, dx);
            let j = Mat::identity(field, dy);
            (i.clone(), i, vec![0; dx], j.clone(), j, vec![0; dy])
        }
    };
    // Unknowns: F'[r][c] with matching blocks.
    let mut index = vec![usize::MAX; dy * dx];
    let mut unknowns = Vec::new();
    for r in 0..dy {
        for c in 0..dx {
            if by[r] == bx[c] {
                index[r * dx + c] = unknowns.len();
                unknowns.push((r, c));
            }
        }
    }
    let mut sys = SparseSystem::new(field, unknowns.len());
    for (x, y) in xs.iter().zip(ys) {
        let xp = sx_inv.mul(x).mul(&sx);
        let yp = sy_inv.mul(y).mul(&sy);
        for r in 0..dy {
            for k in 0..dx {
                let mut eq = Vec::new();
                for j in 0..dx {
                    let u = index[r * dx + j];
                    if u != usize::MAX && !xp[(j, k)].is_zero() {
                        eq.push((u, xp[(j, k)].clone()));
                    }
                }
                for l in 0..dy {
                    let u = index[l * dx + k];
                    if u != usize::MAX && !yp[(r, l)].is_zero() {
                        eq.push((u, yp[(r, l)].neg()));
                    }
                }
                if !eq.is_empty() {
                    sys.add_equation(eq);
                }
            }
        }
    }
    let ker = sys.kernel();
    let vecs: Vec<Vec<Scalar>> = ker
        .basis_vectors()
        .iter()
        .map(|v| {
            let mut fp = Mat::zeros(field, dy, dx);
            for (u, &(r, c)) in unknowns.iter().enumerate() {
                fp[(r, c)] = v[u].clone();
            }
            sy.mul(&fp).mul(&sx_inv).flatten()
        })
        .collect();
    Subspace::span(field, dy * dx, &vecs)
}

/// Columns: concatenated bases of the images of `projs`; plus block index per column.
fn block_basis(field: FieldSpec, d: usize, projs: &[Mat]) -> (Mat, Vec<usize>) {
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    let mut block = Vec::new();
    for (i, p) in projs.iter().enumerate() {
        for v in Subspace::column_space(p).basis_vectors() {
            cols.push(v);
            block.push(i);
        }
    }
    (Mat::from_rows(field, d, &cols).transpose(), block)
}

/// Basis of `Hom(x, y)` in RREF order of the flattened matrices.
pub fn hom_space(x: &FDModule, y: &FDModule) -> Result<Vec<ModuleMap>> {
    x.compatible(y)?;
    let alg = x.algebra();
    let gens = alg.generators();
    let xs: Vec<Mat> = gens.iter().map(|g| x.act(g)).collect();
    let ys: Vec<Mat> = gens.iter().map(|g| y.act(g)).collect();
    let idems = alg
        .primitive_idempotents()
        .unwrap_or_else(|_| vec![alg.unit().to_vec()]);
    let px: Vec<Mat> = idems.iter().map(|e| x.act(e)).collect();
    let py: Vec<Mat> = idems.iter().map(|e| y.act(e)).collect();
    let space = intertwiners(x.field(), x.dim, y.dim, &xs, &ys, Some((&px, &py)));
    Ok(space
        .basis_vectors()
        .into_iter()
        .map(|v| ModuleMap {
            source: x.clone(),
            target: y.clone(),
            matrix: Mat::from_vec(x.field(), y.dim, x.dim, v),
        })
        .collect())
}

/// `End(m)` as an algebra on the RREF basis of its matrices.
pub fn endomorphism_algebra(m: &FDModule) -> Result<Algebra> {
    let basis = hom_space(m, m)?;
    let vecs: Vec<Vec<Scalar>> = basis.iter().map(|f| f.matrix.flatten()).collect();
    let span = Subspace::span(m.field(), m.dim * m.dim, &vecs);
    Algebra::from_matrix_span(&span, m.dim)
}

pub fn trace_and_reject(x: &FDModule, target: &FDModule) -> Result<TraceReject> {
    let f = target.field();
    let mut cols = Vec::new();
    for h in hom_space(x, target)? {
        cols.extend(h.matrix.col_vecs());
    }
    let trace = Subspace::span(f, target.dim, &cols);
    let maps = hom_space(target, x)?;
    let reject = if maps.is_empty() {
        Subspace::full(f, target.dim)
    } else {
        let stacked = maps
            .iter()
            .skip(1)
            .fold(maps[0].matrix.clone(), |acc, h| acc.vstack(&h.matrix));
        crate::exactla::kernel_basis(&stacked)
    };
    Ok(TraceReject {
        trace: Submodule {
            module: target.clone(),
            space: trace,
        },
        reject: Submodule {
            module: target.clone(),
            space: reject,
        },
    })
}

/// `∇(X, Y)`: homomorphisms whose image lies in `Rad Y`, i.e. is small.
pub fn nabla(x: &FDModule, y: &FDModule) -> Result<Vec<ModuleMap>> {
    x.compatible(y)?;
    let rad = y.radical()?;
    let (r, incl) = rad.as_module();
    Ok(hom_space(x, &r)?
        .into_iter()
        .map(|h| ModuleMap {
            source: x.clone(),
            target: y.clone(),
            matrix: incl.matrix.mul(&h.matrix),
        })
        .collect())
}

const UNIT_TRIALS: usize = 16;
const RANDOM_TRIALS: usize = 48;

/// An isomorphism `x → y` if one exists, searched among seeded random
/// combinations of a `Hom(x, y)` basis. A `None` after the search is only
/// conclusive when `Hom(x, y)` has no invertible element; it is exact over ℚ
/// and over large prime fields with high probability.
pub fn find_isomorphism(x: &FDModule, y: &FDModule) -> Result<Option<ModuleMap>> {
    x.compatible(y)?;
    if x.dim != y.dim {
        return Ok(None);
    }
    let basis = hom_space(x, y)?;
    if basis.is_empty() {
        return Ok(x.dim == 0).map(|ok| {
            ok.then(|| ModuleMap {
                source: x.clone(),
                target: y.clone(),
                matrix: Mat::zeros(x.field(), 0, 0),
            })
        });
    }
    let f = x.field();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0c0);
    // The sum of the basis, then single basis maps, then random combinations.
    let units = basis.len().min(UNIT_TRIALS);
    for attempt in 0..1 + units + RANDOM_TRIALS {
        let mut m = Mat::zeros(f, y.dim, x.dim);
        for (i, h) in basis.iter().enumerate() {
            let c = if attempt == 0 {
                f.one()
            } else if attempt <= units {
                if i + 1 == attempt { f.one() } else { f.zero() }
            } else {
                f.from_i64(rng.gen_range(-50..=50))
            };
            m.add_scaled(&c, &h.matrix);
        }
        if m.rank() == x.dim {
            return Ok(Some(ModuleMap {
                source: x.clone(),
                target: y.clone(),
                matrix: m,
            }));
        }
    }
    Ok(None)
}

impl ModuleMap {
    pub fn new(source: FDModule, target: FDModule, matrix: Mat) -> Result<Self> {
        source.compatible(&target)?;
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::Malformed("map matrix has the wrong shape".into()));
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub fn identity(m: &FDModule) -> Self {
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            matrix: Mat::identity(m.field(), m.dim),
        }
    }

    /// Whether the map commutes with every action matrix.
    pub fn is_homomorphism(&self) -> bool {
        self.source
            .action
            .iter()
            .zip(self.target.action.iter())
            .all(|(x, y)| self.matrix.mul(x) == y.mul(&self.matrix))
    }

    pub fn kernel(&self) -> Submodule {
        Submodule {
            module: self.source.clone(),
            space: crate::exactla::kernel_basis(&self.matrix),
        }
    }

    pub fn image(&self) -> Submodule {
        Submodule {
            module: self.target.clone(),
            space: Subspace::column_space(&self.matrix),
        }
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleMap) -> ModuleMap {
        ModuleMap {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix: next.matrix.mul(&self.matrix),
        }
    }
}

impl Submodule {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    /// The submodule as a module on its RREF basis, with the inclusion.
    pub fn as_module(&self) -> (FDModule, ModuleMap) {
        let m = &self.module;
        let f = m.field();
        let basis = self.space.basis_vectors();
        let k = basis.len();
        let action = m
            .action
            .iter()
            .map(|a| {
                let cols: Vec<Vec<Scalar>> = basis
                    .iter()
                    .map(|v| self.space.coords(&a.mul_vec(v)).expect("subspace is not a submodule"))
                    .collect();
                if k == 0 {
                    Mat::zeros(f, 0, 0)
                } else {
                    Mat::from_rows(f, k, &cols).transpose()
                }
            })
            .collect();
        let sub = FDModule::new(m.algebra.clone(), m.side, k, action).unwrap();
        let incl = if k == 0 {
            Mat::zeros(f, m.dim, 0)
        } else {
            self.space.basis().transpose()
        };
        (
            sub.clone(),
            ModuleMap {
                source: sub,
                target: m.clone(),
                matrix: incl,
            },
        )
    }

    /// `M/N` on the complement basis of free columns, with the projection.
    pub fn quotient(&self) -> (FDModule, ModuleMap) {
        let m = &self.module;
        let f = m.field();
        let free = self.space.free_columns();
        let q = free.len();
        let unit = |i: usize| {
            let mut e = vec![f.zero(); m.dim];
            e[i] = f.one();
            e
        };
        let action = m
            .action
            .iter()
            .map(|a| {
                let mut out = Mat::zeros(f, q, q);
                for (j, &c) in free.iter().enumerate() {
                    let img = self.space.quotient_coords(&a.mul_vec(&unit(c)));
                    for (i, v) in img.into_iter().enumerate() {
                        out[(i, j)] = v;
                    }
                }
                out
            })
            .collect();
        let quo = FDModule::new(m.algebra.clone(), m.side, q, action).unwrap();
        let mut proj = Mat::zeros(f, q, m.dim);
        for c in 0..m.dim {
            for (i, v) in self.space.quotient_coords(&unit(c)).into_iter().enumerate() {
                proj[(i, c)] = v;
            }
        }
        (
            quo.clone(),
            ModuleMap {
                source: m.clone(),
                target: quo,
                matrix: proj,
            },
        )
    }

    /// `N ≪ M` ⟺ `N ⊆ Rad M` (finitely generated `M`).
    pub fn is_small(&self) -> Result<bool> {
        let rad = self.module.radical()?.space;
        rad.contains_subspace(&self.space)
    }

    /// `N` essential ⟺ `Soc M ⊆ N` (artinian `M`).
    pub fn is_essential(&self) -> Result<bool> {
        let soc = self.module.socle()?.space;
        self.space.contains_subspace(&soc)
    }
}
