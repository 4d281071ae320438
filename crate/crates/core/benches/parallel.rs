use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cocover::alg::radical_by_enumeration;
use cocover::exec::Execution;
use cocover::props::verify_corpus;
use cocover::{Algebra, Coalgebra, FieldSpec, Quiver};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn corpus() -> Vec<(String, Coalgebra)> {
    let f = FieldSpec::Rationals;
    let q = |v: &[&str], a: &[(&str, &str, &str)]| Quiver::from_labels(v, a).unwrap();
    let quivers = [
        ("a->b", q(&["a", "b"], &[("x", "a", "b")])),
        ("kronecker", q(&["a", "b"], &[("x", "a", "b"), ("y", "a", "b")])),
        ("A3", q(&["a", "b", "c"], &[("x", "a", "b"), ("y", "b", "c")])),
        ("D4", q(&["a", "b", "c", "d"], &[("x", "a", "d"), ("y", "b", "d"), ("z", "c", "d")])),
    ];
    let mut out: Vec<(String, Coalgebra)> = quivers
        .iter()
        .map(|(n, q)| (n.to_string(), Coalgebra::path_coalgebra(f, q, None).unwrap()))
        .collect();
    for n in 2..=3 {
        out.push((format!("matrix:{n}"), Coalgebra::matrix_coalgebra(f, n)));
        out.push((format!("dividedpower:{n}"), Coalgebra::truncated_divided_power(f, n)));
    }
    out
}

fn bench_corpus(c: &mut Criterion) {
    let corpus = corpus();
    let mut g = c.benchmark_group("verify_corpus");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| verify_corpus(&corpus, mode)));
    }
    g.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let f2 = FieldSpec::prime(2).unwrap();
    let a = Algebra::truncated_polynomial(f2, 8);
    let mut g = c.benchmark_group("radical_by_enumeration");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| radical_by_enumeration(&a, mode).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bench_corpus, bench_enumeration);
criterion_main!(benches);
