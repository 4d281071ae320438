//! Shared corpora for the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use cocover::fdmod::{oracle, FDModule, Side, Submodule};
use cocover::{Algebra, Coalgebra, FieldSpec, Quiver};

pub const Q: FieldSpec = FieldSpec::Rationals;

pub fn f2() -> FieldSpec {
    FieldSpec::prime(2).unwrap()
}

/// Ten acyclic quivers, at most 6 vertices and 8 arrows each.
pub fn quivers() -> Vec<(&'static str, Quiver)> {
    let q = |v: &[&str], a: &[(&str, &str, &str)]| Quiver::from_labels(v, a).unwrap();
    vec![
        ("a->b", q(&["a", "b"], &[("x", "a", "b")])),
        ("kronecker", q(&["a", "b"], &[("x", "a", "b"), ("y", "a", "b")])),
        ("A3", q(&["a", "b", "c"], &[("x", "a", "b"), ("y", "b", "c")])),
        ("sink-middle", q(&["a", "b", "c"], &[("x", "a", "b"), ("y", "c", "b")])),
        ("source-middle", q(&["a", "b", "c"], &[("x", "b", "a"), ("y", "b", "c")])),
        (
            "D4",
            q(&["a", "b", "c", "d"], &[("x", "a", "d"), ("y", "b", "d"), ("z", "c", "d")]),
        ),
        (
            "diamond",
            q(
                &["a", "b", "c", "d"],
                &[("x", "a", "b"), ("y", "a", "c"), ("z", "b", "d"), ("w", "c", "d")],
            ),
        ),
        (
            "A5",
            q(
                &["a", "b", "c", "d", "e"],
                &[("x1", "a", "b"), ("x2", "b", "c"), ("x3", "c", "d"), ("x4", "d", "e")],
            ),
        ),
        (
            "two-sinks",
            q(
                &["a", "b", "c", "d", "e", "f"],
                &[
                    ("x1", "a", "b"),
                    ("x2", "b", "c"),
                    ("x3", "a", "d"),
                    ("x4", "d", "e"),
                    ("x5", "b", "e"),
                    ("x6", "f", "c"),
                    ("x7", "f", "e"),
                ],
            ),
        ),
        (
            "wide",
            q(
                &["a", "b", "c", "d", "e", "f"],
                &[
                    ("x1", "a", "f"),
                    ("x2", "b", "f"),
                    ("x3", "c", "f"),
                    ("x4", "d", "f"),
                    ("x5", "e", "f"),
                    ("y1", "a", "b"),
                    ("y2", "c", "d"),
                    ("y3", "a", "e"),
                ],
            ),
        ),
    ]
}

/// The triangular example's dual coalgebra: its dual algebra is the opposite
/// of the triangular algebra.
pub fn triangular_dual(f: FieldSpec) -> Coalgebra {
    Algebra::triangular_example(f).opposite().dual_coalgebra()
}

/// Path coalgebras of [`quivers`], matrix:1..3, dividedpower:2..5 and the
/// triangular dual.
pub fn coalgebra_corpus(f: FieldSpec) -> Vec<(String, Coalgebra)> {
    let mut out: Vec<(String, Coalgebra)> = quivers()
        .into_iter()
        .map(|(n, q)| (format!("path:{n}"), Coalgebra::path_coalgebra(f, &q, None).unwrap()))
        .collect();
    for n in 1..=3 {
        out.push((format!("matrix:{n}"), Coalgebra::matrix_coalgebra(f, n)));
    }
    for n in 2..=5 {
        out.push((format!("dividedpower:{n}"), Coalgebra::truncated_divided_power(f, n)));
    }
    out.push(("triangular-dual".into(), triangular_dual(f)));
    out
}

/// `k[x, y]/(x, y)²`.
pub fn square_zero_local(f: FieldSpec) -> Algebra {
    let one = f.one();
    Algebra::new(
        f,
        vec!["1".into(), "x".into(), "y".into()],
        vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 0, 1, one.clone()),
            (0, 2, 2, one.clone()),
            (2, 0, 2, one.clone()),
        ],
        vec![one, f.zero(), f.zero()],
    )
    .unwrap()
}

/// Algebras of dimension ≤ 4.
pub fn small_algebras(f: FieldSpec) -> Vec<(String, Algebra)> {
    let ab = Quiver::from_labels(&["a", "b"], &[("x", "a", "b")]).unwrap();
    let kr = Quiver::from_labels(&["a", "b"], &[("x", "a", "b"), ("y", "a", "b")]).unwrap();
    let k = Algebra::matrix_algebra(f, 1);
    vec![
        ("k".into(), k.clone()),
        ("k x k".into(), Algebra::direct_product(&[k.clone(), k.clone()]).unwrap()),
        ("k[Z]/Z^2".into(), Algebra::truncated_polynomial(f, 2)),
        ("k[Z]/Z^3".into(), Algebra::truncated_polynomial(f, 3)),
        ("k[Z]/Z^4".into(), Algebra::truncated_polynomial(f, 4)),
        (
            "k x k[Z]/Z^2".into(),
            Algebra::direct_product(&[k, Algebra::truncated_polynomial(f, 2)]).unwrap(),
        ),
        ("path a->b".into(), Algebra::path_algebra(f, &ab).unwrap()),
        ("path kronecker".into(), Algebra::path_algebra(f, &kr).unwrap()),
        ("M_2".into(), Algebra::matrix_algebra(f, 2)),
        ("k[x,y]/(x,y)^2".into(), square_zero_local(f)),
    ]
}

/// Modules of dimension 1..=max_dim over the [`small_algebras`]: regular
/// modules, their duals, submodules and quotients, and small direct sums.
pub fn small_modules(f: FieldSpec, max_dim: usize) -> Vec<(String, FDModule)> {
    let mut out: Vec<(String, FDModule)> = Vec::new();
    for (name, a) in small_algebras(f) {
        let a = Arc::new(a);
        for side in [Side::Left, Side::Right] {
            let reg = FDModule::regular(a.clone(), side);
            let mut local = vec![(format!("{name} {side:?} regular"), reg.clone())];
            local.push((format!("{name} {side:?} regular dual"), reg.k_dual()));
            for (i, s) in oracle::brute_force_submodules(&reg).unwrap().into_iter().enumerate() {
                if s.is_zero() || s.is_full() {
                    continue;
                }
                let sub = Submodule { module: reg.clone(), space: s };
                local.push((format!("{name} {side:?} sub{i}"), sub.as_module().0));
                local.push((format!("{name} {side:?} quo{i}"), sub.quotient().0));
            }
            let singles: Vec<FDModule> = local.iter().map(|(_, m)| m.clone()).filter(|m| m.dim() == 1 && m.side() == side).collect();
            if let (Some(x), Some(y)) = (singles.first(), singles.last()) {
                local.push((format!("{name} {side:?} simple sum"), FDModule::direct_sum(&[x.clone(), y.clone()]).unwrap()));
            }
            out.extend(local.into_iter().filter(|(_, m)| m.dim() >= 1 && m.dim() <= max_dim));
        }
    }
    out
}
