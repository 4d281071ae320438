//! Projective covers, injective hulls and the codense/copolyform predicates.

use std::sync::Arc;

use super::{hom_space, nabla, FDModule, ModuleMap, Side, Submodule};
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Mat, Scalar, Subspace};

#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub module: FDModule,
    pub map: ModuleMap,
    /// `(index into primitive_idempotents, multiplicity)` per summand class.
    pub summands: Vec<(usize, usize)>,
    /// Dimensions of the indecomposable summands, in coordinate order.
    pub part_dims: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct InjectiveHull {
    pub module: FDModule,
    pub embedding: ModuleMap,
    /// Dimensions of the indecomposable summands, in coordinate order.
    pub part_dims: Vec<usize>,
}

fn zero_module(m: &FDModule) -> FDModule {
    let f = m.field();
    let action = vec![Mat::zeros(f, 0, 0); m.algebra().dim()];
    FDModule::new(m.algebra().clone(), m.side(), 0, action).unwrap()
}

impl FDModule {
    /// `P → M` with `P` a sum of indecomposable projectives `Ae` (left) or
    /// `eA` (right), one per simple summand of the top of `M`.
    pub fn projective_cover(&self) -> Result<ProjectiveCover> {
        let alg = self.algebra().clone();
        let f = self.field();
        let idems = alg.primitive_idempotents()?;
        let j = alg.radical()?;
        // One representative per isomorphism class: e_i ~ e_j iff e_i A e_j ⊄ J.
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..idems.len() {
            let seen = reps.iter().any(|&r| {
                let corner = alg.mul_corner(&idems[r], &idems[i]);
                !j.contains_subspace(&corner).unwrap()
            });
            if !seen {
                reps.push(i);
            }
        }
        let mut current = self.radical()?.space;
        let mut parts = Vec::new();
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        let mut summands = Vec::new();
        for &r in &reps {
            let e = &idems[r];
            let proj = match self.side() {
                Side::Left => alg.right_mult(e),
                Side::Right => alg.left_mult(e),
            };
            let regular = FDModule::regular(alg.clone(), self.side());
            let space = Subspace::column_space(&proj);
            let basis = space.basis_vectors();
            let (summand, _) = Submodule {
                module: regular,
                space,
            }
            .as_module();
            let mut count = 0;
            for m in self.act(e).col_vecs() {
                let mut gens = current.basis_vectors();
                gens.push(m.clone());
                let next = self.generated(&gens);
                if next.dim() > current.dim() {
                    current = next;
                    count += 1;
                    parts.push(summand.clone());
                    cols.extend(basis.iter().map(|w| self.act(w).mul_vec(&m)));
                }
            }
            if count > 0 {
                summands.push((r, count));
            }
        }
        if !current.is_full() {
            return Err(Error::Internal("projective cover does not reach the top".into()));
        }
        let p = if parts.is_empty() {
            zero_module(self)
        } else {
            FDModule::direct_sum(&parts)?
        };
        let matrix = if cols.is_empty() {
            Mat::zeros(f, self.dim(), 0)
        } else {
            Mat::from_rows(f, self.dim(), &cols).transpose()
        };
        let map = ModuleMap {
            source: p.clone(),
            target: self.clone(),
            matrix,
        };
        if !map.is_surjective() || !map.kernel().is_small()? {
            return Err(Error::Internal("projective cover failed its own checks".into()));
        }
        Ok(ProjectiveCover {
            part_dims: parts.iter().map(FDModule::dim).collect(),
            module: p,
            map,
            summands,
        })
    }

    /// `E(M) = P(M*)*`, with the transposed cover as embedding.
    pub fn injective_hull(&self) -> Result<InjectiveHull> {
        let pc = self.k_dual().projective_cover()?;
        let e = pc.module.k_dual();
        let embedding = ModuleMap {
            source: self.clone(),
            target: e.clone(),
            matrix: pc.map.matrix.transpose(),
        };
        Ok(InjectiveHull {
            module: e,
            embedding,
            part_dims: pc.part_dims,
        })
    }

    /// Annihilator `{a : ρ(a) = 0}` as a subspace of the algebra.
    pub fn annihilator(&self) -> Subspace {
        let f = self.field();
        let n = self.algebra().dim();
        if self.dim() == 0 {
            return Subspace::full(f, n);
        }
        let rows: Vec<Vec<Scalar>> = self.action().iter().map(Mat::flatten).collect();
        let cols = Mat::from_rows(f, self.dim() * self.dim(), &rows).transpose();
        kernel_basis(&cols)
    }

    /// The same module over `A/Ann(M)`, over which it is faithful.
    pub fn faithful(&self) -> FDModule {
        let ann = self.annihilator();
        if ann.is_zero() {
            return self.clone();
        }
        let b = self.algebra().quotient_by(&ann);
        let action = ann.free_columns().iter().map(|&c| self.action()[c].clone()).collect();
        FDModule::new(Arc::new(b), self.side(), self.dim(), action).unwrap()
    }

    /// Copolyform: `Jac End(P) = 0` for the projective cover `P` of `M` taken
    /// in `σ[M]`, the modules over `A/Ann(M)`. For projective `P`,
    /// `Jac End(P) = Hom(P, Rad P) = ∇(P, P)`.
    pub fn is_copolyform(&self) -> Result<bool> {
        if self.dim() == 0 {
            return Ok(true);
        }
        let p = self.faithful().projective_cover()?.module;
        Ok(nabla(&p, &p)?.is_empty())
    }

    /// `M/Rad M` simple.
    pub fn is_hollow(&self) -> Result<bool> {
        if self.dim() == 0 {
            return Ok(false);
        }
        let pc = self.projective_cover()?;
        Ok(pc.summands.iter().map(|&(_, k)| k).sum::<usize>() == 1)
    }

    pub fn is_epiform(&self) -> Result<bool> {
        Ok(self.is_hollow()? && self.is_copolyform()?)
    }

    /// `P/Tr(P, Ker π)` for the projective cover `π: P → M`, with the induced
    /// epimorphism onto `M`.
    pub fn maximal_codense_cover(&self) -> Result<(FDModule, ModuleMap)> {
        let pc = self.projective_cover()?;
        let p = &pc.module;
        let (k, incl) = pc.map.kernel().as_module();
        let mut cols = Vec::new();
        for h in hom_space(p, &k)? {
            cols.extend(incl.matrix.mul(&h.matrix).col_vecs());
        }
        let trace = Submodule {
            module: p.clone(),
            space: Subspace::span(self.field(), p.dim(), &cols),
        };
        let (cover, proj) = trace.quotient();
        // π factors through the projection; read it off on the free columns.
        let free = trace.space.free_columns();
        let matrix = pc.map.matrix.select(&(0..self.dim()).collect::<Vec<_>>(), &free);
        let map = ModuleMap {
            source: cover.clone(),
            target: self.clone(),
            matrix,
        };
        debug_assert!(map.matrix.mul(&proj.matrix) == pc.map.matrix);
        if !map.is_homomorphism() || !is_codense_cover(&map)? {
            return Err(Error::Internal("maximal codense cover failed its own checks".into()));
        }
        Ok((cover, map))
    }
}

/// `π` codense ⟺ `Hom(P, Ker π) = 0` for `P` a projective cover of the source.
pub fn is_codense_cover(pi: &ModuleMap) -> Result<bool> {
    if !pi.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let (k, _) = pi.kernel().as_module();
    if k.dim() == 0 {
        return Ok(true);
    }
    let p = pi.source.projective_cover()?.module;
    Ok(hom_space(&p, &k)?.is_empty())
}
