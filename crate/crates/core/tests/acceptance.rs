//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runs without the libtest harness so the lines always show.

mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use cocover::fdmod::{is_codense_cover, oracle, FDModule, Side, Submodule};
use cocover::props::{self, Flag, Verdict};
use cocover::quotient::{covering_coalgebra, predicted_block_dims, qmax, qmax_socle_fastpath};
use cocover::{Algebra, Coalgebra};

use common::{coalgebra_corpus, f2, quivers, small_modules, triangular_dual, Q};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    ensure(t.elapsed() <= limit, || format!("took {:.2?}, limit {limit:?}", t.elapsed()))
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let (_, q) = &quivers()[0];
    let c = Coalgebra::path_coalgebra(Q, q, None).map_err(|e| e.to_string())?;
    let r = covering_coalgebra(&c).map_err(|e| e.to_string())?;
    let ds = r.d.dual_algebra();
    let blocks = ds.wedderburn_blocks().map_err(|e| e.to_string())?;
    ensure(r.d.dim() == 4, || format!("dim D = {}", r.d.dim()))?;
    ensure(ds.is_simple().unwrap() && blocks.block_dims == vec![4], || format!("blocks {:?}", blocks.block_dims))?;
    ensure(r.kernel.dim() == 1, || format!("kernel dim {}", r.kernel.dim()))?;
    ensure(r.flags.kernel_small && r.flags.codense, || format!("flags {:?}", r.flags))?;
    let cm = FDModule::from_coalgebra(&c, Arc::new(c.dual_algebra()), Side::Left).unwrap();
    let (cover, _) = cm.maximal_codense_cover().map_err(|e| e.to_string())?;
    ensure(cover.dim() == r.d.dim(), || format!("maximal codense cover dim {}", cover.dim()))?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("D ≅ M2^c, kernel dim 1, small and codense ({:.0?})", t.elapsed()))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    for (name, q) in quivers() {
        let a = Algebra::path_algebra(Q, &q).unwrap();
        let mut predicted = predicted_block_dims(&q).unwrap();
        predicted.sort_unstable();
        let fast = qmax_socle_fastpath(&a).map_err(|e| format!("{name}: {e}"))?;
        let mut blocks = fast.wedderburn_blocks().map_err(|e| format!("{name}: {e}"))?.block_dims;
        blocks.sort_unstable();
        ensure(fast.is_semisimple().unwrap() && blocks == predicted, || {
            format!("{name}: socle blocks {blocks:?}, predicted {predicted:?}")
        })?;
        let full = qmax(&a, Side::Right).map_err(|e| format!("{name}: {e}"))?;
        let total: usize = predicted.iter().sum();
        ensure(full.q.dim() == total, || format!("{name}: bicommutant dim {} vs {total}", full.q.dim()))?;
    }
    within(t, Duration::from_secs(30))?;
    Ok(format!("10 quivers: socle blocks = sink path counts = bicommutant dims ({:.1?})", t.elapsed()))
}

fn criterion_3() -> Outcome {
    let mut violations = Vec::new();
    for (name, c) in coalgebra_corpus(Q) {
        let r = props::coalgebra_report(&c);
        let (cs, her, ns) = (r.cosemisimple.value(), r.hereditary.value(), r.non_singular.value());
        if cs.is_none() || her.is_none() || ns.is_none() {
            return Err(format!("{name}: flag failed to compute"));
        }
        if her == Some(true) && ns == Some(false) {
            violations.push(format!("{name}: hereditary but singular"));
        }
        if cs == Some(true) && her == Some(false) {
            violations.push(format!("{name}: cosemisimple but not hereditary"));
        }
    }
    ensure(violations.is_empty(), || violations.join("; "))?;
    let r = props::coalgebra_report(&triangular_dual(Q));
    ensure(r.non_singular == Flag::Value(true) && r.hereditary == Flag::Value(false), || {
        format!("triangular dual: non_singular {:?}, hereditary {:?}", r.non_singular, r.hereditary)
    })?;
    Ok("hierarchy holds on the corpus; triangular dual non-singular, not hereditary".into())
}

fn criterion_4() -> Outcome {
    let corpus = coalgebra_corpus(Q);
    for (name, c) in &corpus {
        match props::verify_cosemisimple_flat(c) {
            Ok(Verdict::Ok) => {}
            other => return Err(format!("{name}: {other:?}")),
        }
    }
    Ok(format!("cosemisimple ⟺ non-singular ∧ self-injective dual on {} coalgebras", corpus.len()))
}

fn criterion_5() -> Outcome {
    for n in 2..=5 {
        let c = Coalgebra::truncated_divided_power(Q, n);
        let r = covering_coalgebra(&c).map_err(|e| e.to_string())?;
        ensure(r.d == c, || format!("dividedpower:{n}: D has dim {}", r.d.dim()))?;
        ensure(r.flags.codense && r.flags.maximal_checked, || format!("dividedpower:{n}: {:?}", r.flags))?;
    }
    Ok("D = C for dividedpower:2..5".into())
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let modules = small_modules(f2(), 3);
    let mut pairs = 0;
    let mut maps = 0;
    for (name, m) in &modules {
        for s in oracle::brute_force_submodules(m).unwrap() {
            let n = Submodule { module: m.clone(), space: s };
            let fast = (n.is_small().unwrap(), n.is_essential().unwrap());
            let def = (oracle::is_small(&n).unwrap(), oracle::is_essential(&n).unwrap());
            ensure(fast == def, || format!("(a) {name}: submodule {:?} fast {fast:?} oracle {def:?}", n.space))?;
            pairs += 1;

            let (_, pi) = n.quotient();
            let fast = is_codense_cover(&pi).unwrap();
            let def = oracle::is_codense(&pi).unwrap();
            ensure(fast == def, || format!("(c) {name}: quotient by {:?} fast {fast} oracle {def}", n.space))?;
            maps += 1;
        }
        let fast = m.is_copolyform().unwrap();
        let def = oracle::is_copolyform(m).unwrap();
        ensure(fast == def, || format!("(b) {name}: fast {fast} oracle {def}"))?;

        let pc = m.projective_cover().unwrap();
        if pc.module.dim() <= 3 {
            let fast = is_codense_cover(&pc.map).unwrap();
            let def = oracle::is_codense(&pc.map).unwrap();
            ensure(fast == def, || format!("(c) {name}: projective cover fast {fast} oracle {def}"))?;
            maps += 1;
        }
    }
    let mut checked = 0;
    for field in [Q, f2()] {
        let cs = [
            Coalgebra::path_coalgebra(field, &quivers()[0].1, None).unwrap(),
            Coalgebra::truncated_divided_power(field, 3),
            Coalgebra::matrix_coalgebra(field, 2),
            triangular_dual(field),
        ];
        for c in &cs {
            for side in [Side::Left, Side::Right] {
                let (n, z) = props::cosingular_vs_singular(c, side).map_err(|e| e.to_string())?;
                ensure(n == z, || format!("(d) dim ∇(C,C) = {n}, dim Z(End) = {z}"))?;
                checked += 1;
            }
        }
    }
    within(t, Duration::from_secs(120))?;
    Ok(format!(
        "{} modules, {pairs} submodule pairs, {maps} maps agree with oracles; (d) on {checked} cases ({:.1?})",
        modules.len(),
        t.elapsed()
    ))
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    for field in [Q, f2()] {
        for (name, c) in coalgebra_corpus(field) {
            c.validate().map_err(|v| format!("{name}: {v:?}"))?;
            let a = c.dual_algebra();
            a.validate().map_err(|v| format!("{name}*: {v:?}"))?;
            ensure(a.dual_coalgebra() == c, || format!("{name}: C** ≠ C"))?;
            ensure(a.dual_coalgebra().dual_algebra() == a, || format!("{name}: A** ≠ A"))?;
            let a = Arc::new(a);
            let mut modules = vec![
                FDModule::from_coalgebra(&c, a.clone(), Side::Left).unwrap(),
                FDModule::from_coalgebra(&c, a.clone(), Side::Right).unwrap(),
                FDModule::regular(a.clone(), Side::Left),
                FDModule::regular(a.clone(), Side::Right),
            ];
            if c.dim() <= 16 {
                let rad = modules[2].radical().unwrap();
                modules.push(rad.as_module().0);
                modules.push(rad.quotient().0);
            }
            for m in &modules {
                m.validate().map_err(|e| format!("{name}: {e}"))?;
                check_cover_and_hull(m).map_err(|e| format!("{name}: {e}"))?;
                count += 1;
            }
        }
    }
    for (name, m) in small_modules(f2(), 3) {
        m.validate().map_err(|e| format!("{name}: {e}"))?;
        check_cover_and_hull(&m).map_err(|e| format!("{name}: {e}"))?;
        count += 1;
    }
    for field in [Q, f2()] {
        for (name, a) in common::small_algebras(field) {
            a.validate().map_err(|v| format!("{name}: {v:?}"))?;
        }
        Algebra::triangular_example(field).validate().map_err(|v| format!("triangular: {v:?}"))?;
    }
    Ok(format!("axioms, round trips, small kernels and essential hulls on {count} modules"))
}

fn check_cover_and_hull(m: &FDModule) -> Result<(), String> {
    let pc = m.projective_cover().map_err(|e| e.to_string())?;
    ensure(pc.map.is_homomorphism() && pc.map.is_surjective(), || "cover map".into())?;
    ensure(pc.map.kernel().is_small().unwrap(), || "cover kernel not small".into())?;
    let h = m.injective_hull().map_err(|e| e.to_string())?;
    ensure(h.embedding.is_homomorphism() && h.embedding.is_injective(), || "hull map".into())?;
    ensure(h.embedding.image().is_essential().unwrap(), || "hull embedding not essential".into())
}

fn criterion_8() -> Outcome {
    let mut algebras: Vec<(String, Algebra)> = coalgebra_corpus(Q)
        .into_iter()
        .map(|(n, c)| (format!("{n}*"), c.dual_algebra()))
        .collect();
    for (n, q) in quivers() {
        algebras.push((format!("path algebra {n}"), Algebra::path_algebra(Q, &q).unwrap()));
    }
    algebras.push(("triangular".into(), Algebra::triangular_example(Q)));
    algebras.push(("triangular^op".into(), Algebra::triangular_example(Q).opposite()));
    let mut nonsingular = 0;
    for (name, a) in &algebras {
        let reg = FDModule::regular(Arc::new(a.clone()), Side::Right);
        if !reg.is_non_singular().unwrap() {
            continue;
        }
        let r = qmax(a, Side::Right).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.q.is_semisimple().unwrap(), || format!("{name}: Q_max has a radical"))?;
        nonsingular += 1;
    }
    for n in 2..=5 {
        let a = Algebra::truncated_polynomial(Q, n);
        let r = qmax(&a, Side::Right).map_err(|e| e.to_string())?;
        ensure(r.q == a, || format!("k[Z]/Z^{n}: Q_max has dim {}", r.q.dim()))?;
    }
    Ok(format!("{nonsingular} non-singular algebras have semisimple Q_max; k[Z]/Z^n is its own"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("covering coalgebra of a->b", criterion_1),
        ("socle formula on 10 quivers", criterion_2),
        ("cosemisimple ⇒ hereditary ⇒ non-singular", criterion_3),
        ("cosemisimple ⟺ non-singular and flat", criterion_4),
        ("divided powers cover themselves", criterion_5),
        ("oracle equivalences over F2", criterion_6),
        ("axiom suites", criterion_7),
        ("Q_max of non-singular algebras is semisimple", criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {title}: {detail} [{:.2?}]", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title}: {why} [{:.2?}]", i + 1, t.elapsed());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
