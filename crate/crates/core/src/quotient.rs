//! Maximal rings of quotients of finite-dimensional algebras and the
//! covering coalgebra `D = Q_max(C*)*  →  C`.
//!
//! The ring structure on `Q_max` is taken from the bicommutant of the
//! injective hull and checked against the reject description
//! `{x ∈ E : f(x) = 0 for all f ∈ End(E) with f(A) = 0}`.

use std::sync::Arc;

use serde::Serialize;

use crate::alg::Algebra;
use crate::coalg::Coalgebra;
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Mat, Scalar, Subspace};
use crate::fdmod::{find_isomorphism, hom_space, intertwiners, is_codense_cover, FDModule, ModuleMap, Side, Submodule};
use crate::quiver::Quiver;

#[derive(Clone, Debug)]
pub struct QmaxResult {
    /// Basis: the basis of `A` (same labels) followed by `q{k}` extras.
    pub q: Algebra,
    /// `dim Q × dim A`; with the basis above it is `[I; 0]`.
    pub embedding: Mat,
    pub hull: FDModule,
    pub q_subspace: Submodule,
    pub side: Side,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoverFlags {
    pub surjective: bool,
    pub kernel_small: bool,
    pub codense: bool,
    pub maximal_checked: bool,
}

#[derive(Clone, Debug)]
pub struct CoverResult {
    pub d: Coalgebra,
    /// `dim C × dim D`.
    pub pi: Mat,
    /// `Ker π` inside `D` viewed as a left `C*`-module.
    pub kernel: Submodule,
    pub flags: CoverFlags,
}

/// `Q_max` of `a` on the given side.
pub fn qmax(a: &Algebra, side: Side) -> Result<QmaxResult> {
    match side {
        Side::Right => qmax_right(a),
        Side::Left => {
            let mut r = qmax_right(&a.opposite())?;
            r.q = r.q.opposite();
            r.side = Side::Left;
            Ok(r)
        }
    }
}

fn qmax_right(a: &Algebra) -> Result<QmaxResult> {
    let f = a.field();
    let n = a.dim();
    let alg = Arc::new(a.clone());
    let reg = FDModule::regular(alg.clone(), Side::Right);
    let hull = reg.injective_hull()?;
    let e = &hull.module;
    let de = e.dim();
    let iota = &hull.embedding.matrix;

    let h: Vec<Mat> = hom_space(e, e)?.into_iter().map(|m| m.matrix).collect();

    // H₀ = {h ∈ H : h ι = 0}, then Q = ∩ ker H₀.
    let cols: Vec<Vec<Scalar>> = h.iter().map(|m| m.mul(iota).flatten()).collect();
    let h0_coeffs = kernel_basis(&Mat::from_rows(f, de * n, &cols).transpose());
    let h0: Vec<Mat> = h0_coeffs
        .basis_vectors()
        .iter()
        .map(|c| {
            let mut m = Mat::zeros(f, de, de);
            for (k, ck) in c.iter().enumerate() {
                if !ck.is_zero() {
                    m.add_scaled(ck, &h[k]);
                }
            }
            m
        })
        .collect();
    let q_space = if h0.is_empty() {
        Subspace::full(f, de)
    } else {
        kernel_basis(&h0.iter().skip(1).fold(h0[0].clone(), |acc, m| acc.vstack(m)))
    };

    // Bicommutant, solved blockwise on the hull's indecomposable summands.
    let mut projs = Vec::new();
    let mut off = 0;
    for &d in &hull.part_dims {
        let mut p = Mat::zeros(f, de, de);
        for i in off..off + d {
            p[(i, i)] = f.one();
        }
        projs.push(p);
        off += d;
    }
    let b = intertwiners(f, de, de, &h, &h, Some((&projs, &projs)));
    if b.dim() != q_space.dim() {
        return Err(Error::BicommutantMismatch {
            bicommutant: b.dim(),
            reject: q_space.dim(),
        });
    }
    let u = iota.mul_vec(a.unit());
    let b_mats: Vec<Mat> = b
        .basis_vectors()
        .into_iter()
        .map(|v| Mat::from_vec(f, de, de, v))
        .collect();
    let evals: Vec<Vec<Scalar>> = b_mats.iter().map(|m| m.mul_vec(&u)).collect();
    if Subspace::span(f, de, &evals) != q_space {
        return Err(Error::BicommutantMismatch {
            bicommutant: b.dim(),
            reject: q_space.dim(),
        });
    }

    // Basis of B: right multiplications by A's basis, then extras from B.
    let mut chosen: Vec<Vec<Scalar>> = (0..n).map(|i| e.act(&a.basis_vec(i)).flatten()).collect();
    let mut span = Subspace::span(f, de * de, &chosen);
    if span.dim() != n {
        return Err(Error::Internal("algebra does not act faithfully on its hull".into()));
    }
    for v in b.basis_vectors() {
        if !span.contains(&v) {
            chosen.push(v);
            span = Subspace::span(f, de * de, &chosen);
        }
    }
    let m = chosen.len();
    // coords in `chosen` = (RREF coords of b) · T⁻¹ with T rows = RREF coords of chosen.
    let t_rows: Vec<Vec<Scalar>> = chosen.iter().map(|v| b.coords(v).unwrap()).collect();
    let t_inv = Mat::from_rows(f, m, &t_rows)
        .inverse()
        .ok_or_else(|| Error::Internal("bicommutant basis change is singular".into()))?;
    let coords = |v: &[Scalar]| -> Vec<Scalar> {
        let r = b.coords(v).expect("product left the bicommutant");
        t_inv.transpose().mul_vec(&r)
    };
    let mats: Vec<Mat> = chosen.iter().map(|v| Mat::from_vec(f, de, de, v.clone())).collect();
    // Right action composes backwards: q₁·q₂ acts as q₂ ∘ q₁.
    let mut entries = Vec::new();
    for (i, mi) in mats.iter().enumerate() {
        for (j, mj) in mats.iter().enumerate() {
            for (k, v) in coords(&mj.mul(mi).flatten()).into_iter().enumerate() {
                if !v.is_zero() {
                    entries.push((i, j, k, v));
                }
            }
        }
    }
    let unit = coords(&Mat::identity(f, de).flatten());
    let labels: Vec<String> = a
        .labels()
        .iter()
        .cloned()
        .chain((n..m).map(|k| format!("q{k}")))
        .collect();
    let q = Algebra::new(f, labels, entries, unit)?;
    let mut embedding = Mat::zeros(f, m, n);
    for i in 0..n {
        embedding[(i, i)] = f.one();
    }
    check_embedding(a, &q, &embedding)?;
    let q_subspace = e.submodule(q_space)?;
    Ok(QmaxResult {
        q,
        embedding,
        hull: e.clone(),
        q_subspace,
        side: Side::Right,
    })
}

fn check_embedding(a: &Algebra, q: &Algebra, emb: &Mat) -> Result<()> {
    if emb.mul_vec(a.unit()) != q.unit() {
        return Err(Error::Internal("embedding is not unital".into()));
    }
    for x in 0..a.dim() {
        for y in 0..a.dim() {
            let (ex, ey) = (a.basis_vec(x), a.basis_vec(y));
            if emb.mul_vec(&a.mul(&ex, &ey)) != q.mul(&emb.mul_vec(&ex), &emb.mul_vec(&ey)) {
                return Err(Error::Internal("embedding is not multiplicative".into()));
            }
        }
    }
    Ok(())
}

/// `End(Soc(A_A))` for right non-singular `a`.
pub fn qmax_socle_fastpath(a: &Algebra) -> Result<Algebra> {
    let reg = FDModule::regular(Arc::new(a.clone()), Side::Right);
    let z = reg.singular_submodule()?;
    if !z.is_zero() {
        return Err(Error::NotNonSingular(z.dim()));
    }
    let (soc, _) = reg.socle()?.as_module();
    crate::fdmod::endomorphism_algebra(&soc)
}

/// Predicted Wedderburn block dimensions `n_i²` of `Q_max` of a path algebra,
/// one per sink `i` with `n_i` paths ending there.
pub fn predicted_block_dims(q: &Quiver) -> Result<Vec<usize>> {
    Ok(q.sinks_and_path_counts()?.into_iter().map(|(_, n)| n * n).collect())
}

/// `D` restricted to a left `C*`-module along the embedding `ι: C* → D*`.
fn restricted_left_module(d: &Coalgebra, iota: &Mat, alg: Arc<Algebra>) -> Result<FDModule> {
    let f = d.field();
    let dd = d.dim();
    let d_alg = Arc::new(d.dual_algebra());
    let dm = FDModule::from_coalgebra(d, d_alg, Side::Left)?;
    let action = (0..alg.dim())
        .map(|a| {
            let mut m = Mat::zeros(f, dd, dd);
            for k in 0..dd {
                if !iota[(k, a)].is_zero() {
                    m.add_scaled(&iota[(k, a)], &dm.action()[k]);
                }
            }
            m
        })
        .collect();
    FDModule::new(alg, Side::Left, dd, action)
}

/// The covering coalgebra `D = Q^r_max(C*)*` with `π = ιᵀ: D → C`.
pub fn covering_coalgebra(c: &Coalgebra) -> Result<CoverResult> {
    let f = c.field();
    let a = Arc::new(c.dual_algebra());
    let qr = qmax(&a, Side::Right)?;
    let d = qr.q.dual_coalgebra();
    let pi = qr.embedding.transpose();
    d.check_morphism(&pi, c).map_err(Error::CoalgebraMorphismFailure)?;

    let mut flags = CoverFlags {
        surjective: pi.rank() == c.dim(),
        ..CoverFlags::default()
    };
    let kernel_space = kernel_basis(&pi);
    if !d.is_coideal(&kernel_space) {
        return Err(Error::CoalgebraMorphismFailure("kernel is not a coideal".into()));
    }
    let dm = restricted_left_module(&d, &qr.embedding, a.clone())?;
    let cm = FDModule::from_coalgebra(c, a, Side::Left)?;
    let kernel = dm.submodule(kernel_space)?;
    flags.kernel_small = kernel.is_small()?;
    let map = ModuleMap::new(dm.clone(), cm.clone(), pi.clone())?;
    if !map.is_homomorphism() {
        return Err(Error::CoalgebraMorphismFailure("π is not C*-linear".into()));
    }
    if flags.surjective {
        flags.codense = is_codense_cover(&map)?;
        let (cover, _) = cm.maximal_codense_cover()?;
        flags.maximal_checked = cover.dim() == dm.dim() && find_isomorphism(&cover, &dm)?.is_some();
    }
    debug_assert_eq!(f, d.field());
    Ok(CoverResult {
        d,
        pi,
        kernel,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn ab() -> Quiver {
        Quiver::from_labels(&["a", "b"], &[("x", "a", "b")]).unwrap()
    }

    #[test]
    fn triangular_algebra_has_matrix_quotient_ring() {
        let a = Algebra::path_algebra(Q, &ab()).unwrap();
        let r = qmax(&a, Side::Right).unwrap();
        assert_eq!(r.q.dim(), 4);
        assert_eq!(r.q.validate(), Ok(()));
        assert!(r.q.is_simple().unwrap());
        assert_eq!(r.q.wedderburn_blocks().unwrap().block_dims, vec![4]);
        assert!(r.q_subspace.dim() == 4);
    }

    #[test]
    fn self_injective_algebras_are_their_own_quotient_rings() {
        for a in [Algebra::truncated_polynomial(Q, 3), Algebra::matrix_algebra(Q, 2)] {
            for side in [Side::Left, Side::Right] {
                let r = qmax(&a, side).unwrap();
                assert_eq!(r.q.dim(), a.dim());
                assert_eq!(r.q, a);
            }
        }
    }

    #[test]
    fn socle_fastpath_agrees() {
        let a = Algebra::path_algebra(Q, &ab()).unwrap();
        let s = qmax_socle_fastpath(&a).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.is_simple().unwrap());
        let kr = Quiver::from_labels(&["a", "b"], &[("x", "a", "b"), ("y", "a", "b")]).unwrap();
        let a = Algebra::path_algebra(Q, &kr).unwrap();
        assert_eq!(qmax_socle_fastpath(&a).unwrap().dim(), 9);
        assert_eq!(qmax(&a, Side::Right).unwrap().q.dim(), 9);
        assert_eq!(predicted_block_dims(&kr).unwrap(), vec![9]);
        let t = Algebra::truncated_polynomial(Q, 2);
        assert!(matches!(qmax_socle_fastpath(&t), Err(Error::NotNonSingular(1))));
    }

    #[test]
    fn cover_of_single_arrow() {
        let c = Coalgebra::path_coalgebra(Q, &ab(), None).unwrap();
        let r = covering_coalgebra(&c).unwrap();
        assert_eq!(r.d.dim(), 4);
        assert_eq!(r.d.validate(), Ok(()));
        assert!(r.d.dual_algebra().is_simple().unwrap());
        assert_eq!(r.kernel.dim(), 1);
        assert_eq!(
            r.flags,
            CoverFlags {
                surjective: true,
                kernel_small: true,
                codense: true,
                maximal_checked: true
            }
        );
        assert_eq!(&r.d.labels()[..3], c.labels());
    }

    #[test]
    fn self_covering_coalgebras() {
        for c in [Coalgebra::truncated_divided_power(Q, 3), Coalgebra::matrix_coalgebra(Q, 2)] {
            let r = covering_coalgebra(&c).unwrap();
            assert_eq!(r.d, c);
            assert_eq!(r.pi, Mat::identity(Q, c.dim()));
            assert!(r.flags.maximal_checked && r.flags.codense);
        }
    }
}
