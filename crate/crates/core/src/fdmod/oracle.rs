//! Exhaustive definitional checks over small prime fields.
//!
//! Everything here enumerates vectors, submodules or matrices outright and
//! uses none of the Rad/Soc shortcuts of the parent module, so it can serve
//! as an independent cross-check.

use std::collections::BTreeSet;

use super::{FDModule, ModuleMap, Submodule};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Mat, Scalar, Subspace};
use crate::exec::{self, Execution};

const LIMIT: u64 = 1 << 16;

fn field_order(field: FieldSpec, exponent: usize) -> Result<u64> {
    let too_large = || Error::TooLarge(format!("exhaustive search over {} in dimension {exponent}", field.name()));
    let p = field.order().ok_or_else(too_large)?;
    let mut total: u64 = 1;
    for _ in 0..exponent {
        total = total.checked_mul(p).filter(|&t| t <= LIMIT).ok_or_else(too_large)?;
    }
    Ok(total)
}

/// The `i`-th vector of `F_p^n` in base-`p` order.
fn nth_vector(field: FieldSpec, n: usize, mut i: u64) -> Vec<Scalar> {
    let p = field.order().unwrap();
    (0..n)
        .map(|_| {
            let d = i % p;
            i /= p;
            field.element(d)
        })
        .collect()
}

fn closure(m: &FDModule, vectors: &[Vec<Scalar>]) -> Subspace {
    let mut span = Subspace::span(m.field(), m.dim(), vectors);
    loop {
        let mut vs = span.basis_vectors();
        for a in m.action() {
            for v in span.basis_vectors() {
                vs.push(a.mul_vec(&v));
            }
        }
        let next = Subspace::span(m.field(), m.dim(), &vs);
        if next.dim() == span.dim() {
            return span;
        }
        span = next;
    }
}

fn key(s: &Subspace) -> (usize, Vec<u32>) {
    (s.dim(), s.basis().data().iter().map(|x| x.residue().unwrap()).collect())
}

/// Every submodule, sorted by dimension then RREF basis.
pub fn brute_force_submodules(m: &FDModule) -> Result<Vec<Subspace>> {
    let total = field_order(m.field(), m.dim())?;
    let f = m.field();
    let n = m.dim();
    let cyclic = exec::map_range(Execution::default(), total as usize, |i| {
        closure(m, &[nth_vector(f, n, i as u64)])
    });
    let mut seen: BTreeSet<(usize, Vec<u32>)> = BTreeSet::new();
    let mut all: Vec<Subspace> = Vec::new();
    for c in &cyclic {
        if seen.insert(key(c)) {
            all.push(c.clone());
        }
    }
    let cyclic: Vec<Subspace> = all.clone();
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for c in &cyclic {
                let t = s.sum(c)?;
                if seen.insert(key(&t)) {
                    next.push(t.clone());
                    all.push(t);
                }
            }
        }
        frontier = next;
    }
    all.sort_by_key(key);
    Ok(all)
}

/// `N ≪ M`: `N + L = M` forces `L = M`.
pub fn is_small(n: &Submodule) -> Result<bool> {
    let subs = brute_force_submodules(&n.module)?;
    for l in &subs {
        if !l.is_full() && n.space.sum(l)?.is_full() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `N` essential: meets every nonzero submodule.
pub fn is_essential(n: &Submodule) -> Result<bool> {
    let subs = brute_force_submodules(&n.module)?;
    for l in &subs {
        if !l.is_zero() && n.space.intersection(l)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every homomorphism `x → y`, found by enumerating all matrices.
pub fn all_homs(x: &FDModule, y: &FDModule) -> Result<Vec<Mat>> {
    let f = x.field();
    let total = field_order(f, x.dim() * y.dim())?;
    let (dx, dy) = (x.dim(), y.dim());
    let found = exec::map_range(Execution::default(), total as usize, |i| {
        let m = Mat::from_vec(f, dy, dx, nth_vector(f, dx * dy, i as u64));
        let ok = x
            .action()
            .iter()
            .zip(y.action())
            .all(|(a, b)| m.mul(a) == b.mul(&m));
        ok.then_some(m)
    });
    Ok(found.into_iter().flatten().collect())
}

fn has_nonzero_hom(x: &FDModule, y: &FDModule) -> Result<bool> {
    if y.dim() == 0 || x.dim() == 0 {
        return Ok(false);
    }
    Ok(all_homs(x, y)?.iter().any(|m| !m.is_zero()))
}

/// `M` copolyform: for every small `N`, no nonzero `M → M/N` has small image.
pub fn is_copolyform(m: &FDModule) -> Result<bool> {
    for n in brute_force_submodules(m)? {
        let n = Submodule {
            module: m.clone(),
            space: n,
        };
        if !is_small(&n)? {
            continue;
        }
        let (q, _) = n.quotient();
        for h in all_homs(m, &q)? {
            if h.is_zero() {
                continue;
            }
            let image = Submodule {
                module: q.clone(),
                space: Subspace::column_space(&h),
            };
            if is_small(&image)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `π: Y → X` codense: `Hom(Y, Ker π / L) = 0` for every submodule `L ⊆ Ker π`.
pub fn is_codense(pi: &ModuleMap) -> Result<bool> {
    if !pi.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let (k, _) = pi.kernel().as_module();
    for l in brute_force_submodules(&k)? {
        let (kl, _) = Submodule { module: k.clone(), space: l }.quotient();
        if has_nonzero_hom(&pi.source, &kl)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coretractable: every proper submodule is killed by a nonzero endomorphism.
pub fn is_coretractable(m: &FDModule) -> Result<bool> {
    let ends = all_homs(m, m)?;
    for n in brute_force_submodules(m)? {
        if n.is_full() {
            continue;
        }
        let kills = ends.iter().any(|h| {
            !h.is_zero() && n.basis_vectors().iter().all(|v| h.mul_vec(v).iter().all(Scalar::is_zero))
        });
        if !kills {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alg::Algebra;
    use crate::fdmod::Side;
    use std::sync::Arc;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn submodule_counts() {
        let t = Arc::new(Algebra::truncated_polynomial(f2(), 3));
        let reg = FDModule::regular(t.clone(), Side::Left);
        assert_eq!(brute_force_submodules(&reg).unwrap().len(), 4);
        let (s, _) = reg.radical().unwrap().quotient();
        assert_eq!(brute_force_submodules(&s).unwrap().len(), 2);
        let ss = FDModule::direct_sum(&[s.clone(), s]).unwrap();
        assert_eq!(brute_force_submodules(&ss).unwrap().len(), 5);
    }

    #[test]
    fn guard_refuses_rationals_and_large_spaces() {
        let t = Arc::new(Algebra::truncated_polynomial(FieldSpec::Rationals, 2));
        let reg = FDModule::regular(t, Side::Left);
        assert!(matches!(brute_force_submodules(&reg), Err(Error::TooLarge(_))));
        let m = Arc::new(Algebra::matrix_algebra(FieldSpec::prime(7).unwrap(), 3));
        let reg = FDModule::regular(m, Side::Left);
        assert!(matches!(brute_force_submodules(&reg), Err(Error::TooLarge(_))));
    }

    #[test]
    fn homs_of_dual_numbers() {
        let t = Arc::new(Algebra::truncated_polynomial(f2(), 2));
        let reg = FDModule::regular(t, Side::Left);
        assert_eq!(all_homs(&reg, &reg).unwrap().len(), 4);
        assert!(!is_copolyform(&reg).unwrap());
        assert!(is_coretractable(&reg).unwrap());
    }
}
