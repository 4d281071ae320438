//! Exhaustive cross-checks over 𝔽₂ and 𝔽₃: every fast algorithm against the
//! definition it implements.

mod common;

use cocover::alg::radical_by_enumeration;
use cocover::exactla::kernel_basis;
use cocover::exec::Execution;
use cocover::fdmod::{hom_space, oracle, FDModule};
use cocover::{Algebra, FieldSpec, Mat, Scalar, Subspace};
use common::{quivers, small_algebras, small_modules};

fn fields() -> [FieldSpec; 2] {
    [FieldSpec::prime(2).unwrap(), FieldSpec::prime(3).unwrap()]
}

/// Every vector of `F^n`.
fn all_vectors(f: FieldSpec, n: usize) -> Vec<Vec<Scalar>> {
    let q = f.order().unwrap();
    (0..q.pow(n as u32))
        .map(|mut i| {
            (0..n)
                .map(|_| {
                    let d = i % q;
                    i /= q;
                    f.element(d)
                })
                .collect()
        })
        .collect()
}

fn count(f: FieldSpec, dim: usize) -> usize {
    f.order().unwrap().pow(dim as u32) as usize
}

/// All subspaces of `F^n`, found as spans of every subset of at most `n` vectors.
fn all_subspaces(f: FieldSpec, n: usize) -> Vec<Subspace> {
    let vs = all_vectors(f, n);
    let mut out: Vec<Subspace> = vec![Subspace::zero(f, n)];
    let mut frontier = out.clone();
    for _ in 0..n {
        let mut next = Vec::new();
        for s in &frontier {
            for v in &vs {
                if s.contains(v) {
                    continue;
                }
                let mut b = s.basis_vectors();
                b.push(v.clone());
                let t = Subspace::span(f, n, &b);
                if !out.contains(&t) && !next.contains(&t) {
                    next.push(t);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn linear_algebra_matches_enumeration() {
    for f in fields() {
        let vs = all_vectors(f, 4);
        // A few fixed matrices with varied rank.
        let mats = [
            Mat::from_i64(f, &[&[1, 1, 0, 2], &[0, 1, 1, 1], &[1, 2, 1, 3]]),
            Mat::from_i64(f, &[&[2, 0, 1, 1], &[1, 1, 1, 1]]),
            Mat::from_i64(f, &[&[0, 0, 0, 0]]),
            Mat::from_i64(f, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
        ];
        for m in &mats {
            let k = kernel_basis(m);
            let brute = vs.iter().filter(|v| m.mul_vec(v).iter().all(Scalar::is_zero)).count();
            assert_eq!(count(f, k.dim()), brute);
            assert!(vs.iter().all(|v| k.contains(v) == m.mul_vec(v).iter().all(Scalar::is_zero)));
            let row = Subspace::row_space(m);
            for other in &mats {
                let o = Subspace::row_space(other);
                let meet = row.intersection(&o).unwrap();
                let sum = row.sum(&o).unwrap();
                assert!(vs.iter().all(|v| meet.contains(v) == (row.contains(v) && o.contains(v))));
                let sums = vs.iter().filter(|v| sum.contains(v)).count();
                let reachable = vs
                    .iter()
                    .filter(|v| vs.iter().any(|a| row.contains(a) && o.contains(&sub(v, a))))
                    .count();
                assert_eq!(sums, reachable);
            }
        }
    }
}

fn sub(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a.sub(b)).collect()
}

#[test]
fn submodule_lattices_match_enumeration() {
    for f in fields() {
        for (name, m) in small_modules(f, 3) {
            let fast = oracle::brute_force_submodules(&m).unwrap();
            let slow: Vec<Subspace> =
                all_subspaces(f, m.dim()).into_iter().filter(|s| m.is_submodule(s)).collect();
            assert_eq!(fast.len(), slow.len(), "{name}");
            assert!(slow.iter().all(|s| fast.contains(s)), "{name}");
        }
    }
}

#[test]
fn hom_dimensions_match_enumeration() {
    for f in fields() {
        let modules = small_modules(f, 3);
        for (nx, x) in &modules {
            for (ny, y) in &modules {
                if x.algebra() != y.algebra() || x.side() != y.side() || x.dim() * y.dim() > 6 {
                    continue;
                }
                let homs = hom_space(x, y).unwrap();
                let brute = oracle::all_homs(x, y).unwrap();
                assert_eq!(count(f, homs.len()), brute.len(), "{nx} → {ny}");
            }
        }
    }
}

/// `Rad M` is the intersection of the maximal submodules, `Soc M` the sum of
/// the minimal ones.
#[test]
fn radical_and_socle_match_their_definitions() {
    for f in fields() {
        for (name, m) in small_modules(f, 4) {
            let subs = oracle::brute_force_submodules(&m).unwrap();
            let proper: Vec<&Subspace> = subs.iter().filter(|s| !s.is_full()).collect();
            let maximal: Vec<&Subspace> = proper
                .iter()
                .copied()
                .filter(|s| !proper.iter().any(|t| t.dim() > s.dim() && t.contains_subspace(s).unwrap()))
                .collect();
            let rad = maximal
                .iter()
                .fold(Subspace::full(f, m.dim()), |acc, s| acc.intersection(s).unwrap());
            let nonzero: Vec<&Subspace> = subs.iter().filter(|s| !s.is_zero()).collect();
            let minimal: Vec<&Subspace> = nonzero
                .iter()
                .copied()
                .filter(|s| !nonzero.iter().any(|t| t.dim() < s.dim() && s.contains_subspace(t).unwrap()))
                .collect();
            let soc = minimal.iter().fold(Subspace::zero(f, m.dim()), |acc, s| acc.sum(s).unwrap());
            assert_eq!(m.radical().unwrap().space, rad, "{name}: radical");
            assert_eq!(m.socle().unwrap().space, soc, "{name}: socle");
        }
    }
}

#[test]
fn algebra_radicals_match_enumeration() {
    for f in fields() {
        let mut algebras: Vec<(String, Algebra)> = small_algebras(f);
        algebras.push(("triangular".into(), Algebra::triangular_example(f)));
        for (name, q) in quivers() {
            algebras.push((format!("path {name}"), Algebra::path_algebra(f, &q).unwrap()));
        }
        for n in 5..=8 {
            algebras.push((format!("k[Z]/Z^{n}"), Algebra::truncated_polynomial(f, n)));
        }
        let mut checked = 0;
        for (name, a) in &algebras {
            let Ok(expected) = radical_by_enumeration(a, Execution::Parallel) else {
                continue;
            };
            assert_eq!(a.radical().unwrap(), expected, "{name} over {f}");
            checked += 1;
        }
        assert!(checked >= 14, "only {checked} algebras enumerable over {f}");
    }
}

/// Predicates with exhaustive oracles: copolyform via all `N` and all maps
/// `M → M/N`, and codense via all maps from the cover into its kernel.
#[test]
fn module_predicates_match_oracles() {
    let f = FieldSpec::prime(2).unwrap();
    let mut compared = 0;
    for (name, m) in small_modules(f, 3) {
        assert_eq!(m.is_copolyform().unwrap(), oracle::is_copolyform(&m).unwrap(), "{name}");
        let pc = m.projective_cover().unwrap();
        if pc.module.dim() <= 4 {
            assert_eq!(
                cocover::fdmod::is_codense_cover(&pc.map).unwrap(),
                oracle::is_codense(&pc.map).unwrap(),
                "{name}: codense"
            );
        }
        compared += 1;
    }
    assert!(compared > 50);
}

#[test]
fn regular_modules_are_free_of_rank_one() {
    for f in fields() {
        for (name, a) in small_algebras(f) {
            let a = std::sync::Arc::new(a);
            for side in [cocover::Side::Left, cocover::Side::Right] {
                let reg = FDModule::regular(a.clone(), side);
                for (_, m) in small_modules(f, 3).into_iter().filter(|(_, m)| m.algebra() == &a && m.side() == side) {
                    assert_eq!(hom_space(&reg, &m).unwrap().len(), m.dim(), "{name}");
                }
            }
        }
    }
}
