//! Structural properties of a finite-dimensional coalgebra, read off from its
//! dual algebra and module categories, and checks of the implications among
//! them.

use std::sync::Arc;

use serde::Serialize;

use crate::alg::Algebra;
use crate::coalg::Coalgebra;
use crate::error::Result;
use crate::exactla::Subspace;
use crate::exec::{self, Execution};
use crate::fdmod::{endomorphism_algebra, nabla, FDModule, Side};
use crate::quotient::{covering_coalgebra, CoverFlags};

/// A computed value or the reason it could not be computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Flag<T> {
    Value(T),
    Failed {
        error: String,
        /// Set when a self-check failed rather than a precondition.
        #[serde(skip_serializing_if = "std::ops::Not::not")]
        internal: bool,
    },
}

impl<T: Copy> Flag<T> {
    pub fn value(&self) -> Option<T> {
        match self {
            Flag::Value(v) => Some(*v),
            Flag::Failed { .. } => None,
        }
    }
}

impl<T> Flag<T> {
    pub fn internal_error(&self) -> Option<&str> {
        match self {
            Flag::Failed { error, internal: true } => Some(error),
            _ => None,
        }
    }
}

impl<T> From<Result<T>> for Flag<T> {
    fn from(r: Result<T>) -> Self {
        match r {
            Ok(v) => Flag::Value(v),
            Err(e) => Flag::Failed {
                error: e.to_string(),
                internal: e.is_internal(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverSummary {
    pub d_dim: usize,
    pub kernel_dim: usize,
    pub flags: CoverFlags,
}

/// Subspaces behind the flags, as rows of RREF basis entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificates {
    /// `Z(_{C*}C*)`.
    pub singular_basis: Option<Vec<Vec<String>>>,
    /// `Jac(C*)`.
    pub radical_basis: Option<Vec<Vec<String>>>,
    pub coradical_basis: Option<Vec<Vec<String>>>,
    /// `(dim Jac, dim P(Jac))` for the left module `Jac(C*)`.
    pub radical_cover_dims: Option<(usize, usize)>,
    /// `(dim C*, dim E(_{C*}C*))`.
    pub hull_dims: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub dim: usize,
    pub non_singular: Flag<bool>,
    pub cosemisimple: Flag<bool>,
    pub cosemiprime: Flag<bool>,
    pub hereditary: Flag<bool>,
    pub coprime_simple: Flag<bool>,
    pub copolyform_left: Flag<bool>,
    pub copolyform_right: Flag<bool>,
    pub self_injective_dual: Flag<bool>,
    pub coradical_dim: Flag<usize>,
    pub radical_dim: Flag<usize>,
    pub cover_summary: Flag<CoverSummary>,
    pub certificates: Certificates,
}

impl PropertyReport {
    /// `(flag, error)` for every flag whose computation failed a self-check.
    pub fn internal_failures(&self) -> Vec<(&'static str, &str)> {
        let flags = [
            ("non_singular", self.non_singular.internal_error()),
            ("cosemisimple", self.cosemisimple.internal_error()),
            ("cosemiprime", self.cosemiprime.internal_error()),
            ("hereditary", self.hereditary.internal_error()),
            ("coprime_simple", self.coprime_simple.internal_error()),
            ("copolyform_left", self.copolyform_left.internal_error()),
            ("copolyform_right", self.copolyform_right.internal_error()),
            ("self_injective_dual", self.self_injective_dual.internal_error()),
            ("coradical_dim", self.coradical_dim.internal_error()),
            ("radical_dim", self.radical_dim.internal_error()),
            ("cover_summary", self.cover_summary.internal_error()),
        ];
        flags.into_iter().filter_map(|(n, e)| e.map(|e| (n, e))).collect()
    }
}

/// Outcome of checking one implication or equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Verdict {
    Ok,
    Counterexample(String),
    NotApplicable(String),
}

impl Verdict {
    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::Counterexample(_))
    }
}

fn rows(s: &Subspace) -> Vec<Vec<String>> {
    s.basis_vectors()
        .iter()
        .map(|v| v.iter().map(ToString::to_string).collect())
        .collect()
}

fn module(c: &Coalgebra, a: &Arc<Algebra>, side: Side) -> Result<FDModule> {
    FDModule::from_coalgebra(c, a.clone(), side)
}

pub fn coalgebra_report(c: &Coalgebra) -> PropertyReport {
    let a = Arc::new(c.dual_algebra());
    let left = FDModule::regular(a.clone(), Side::Left);
    let mut cert = Certificates::default();

    let singular = left.singular_submodule();
    if let Ok(z) = &singular {
        cert.singular_basis = Some(rows(&z.space));
    }
    let radical = a.radical();
    if let Ok(j) = &radical {
        cert.radical_basis = Some(rows(j));
    }
    let coradical = c.coradical();
    if let Ok(r) = &coradical {
        cert.coradical_basis = Some(rows(r));
    }
    let semisimple = radical.as_ref().map(Subspace::is_zero).map_err(Clone::clone);

    let hereditary = (|| {
        let j = left.submodule(a.radical()?)?;
        let (jm, _) = j.as_module();
        let p = jm.projective_cover()?.module;
        cert.radical_cover_dims = Some((jm.dim(), p.dim()));
        Ok(p.dim() == jm.dim())
    })();
    let self_injective = (|| {
        let e = left.injective_hull()?.module;
        cert.hull_dims = Some((a.dim(), e.dim()));
        Ok(e.dim() == a.dim())
    })();
    let cover = covering_coalgebra(c).map(|r| CoverSummary {
        d_dim: r.d.dim(),
        kernel_dim: r.kernel.dim(),
        flags: r.flags,
    });

    PropertyReport {
        dim: c.dim(),
        non_singular: singular.map(|z| z.is_zero()).into(),
        cosemisimple: semisimple.clone().into(),
        cosemiprime: semisimple.into(),
        hereditary: hereditary.into(),
        coprime_simple: a.is_simple().into(),
        copolyform_left: module(c, &a, Side::Left).and_then(|m| m.is_copolyform()).into(),
        copolyform_right: module(c, &a, Side::Right).and_then(|m| m.is_copolyform()).into(),
        self_injective_dual: self_injective.into(),
        coradical_dim: coradical.map(|r| r.dim()).into(),
        radical_dim: radical.map(|j| j.dim()).into(),
        cover_summary: cover.into(),
        certificates: cert,
    }
}

/// For `M = C` on each side: `M` copolyform ⟺ `∇(M, M) = 0` ⟺
/// `End(M)` left non-singular ⟺ `C*` non-singular on the side opposite to
/// the action (`End(_{C*}C) ≅ C*^op`, `End(C_{C*}) ≅ C*`), endomorphisms
/// composed as functions.
pub fn verify_nonsingular_equivalences(c: &Coalgebra) -> Result<Verdict> {
    let a = Arc::new(c.dual_algebra());
    let mut problems = Vec::new();
    for side in [Side::Left, Side::Right] {
        let m = module(c, &a, side)?;
        let copolyform = m.is_copolyform()?;
        let cosingular_zero = nabla(&m, &m)?.is_empty();
        let t = Arc::new(endomorphism_algebra(&m)?);
        let end_ns = FDModule::regular(t, Side::Left).is_non_singular()?;
        let dual_ns = FDModule::regular(a.clone(), side.flip()).is_non_singular()?;
        if !(copolyform == cosingular_zero && cosingular_zero == end_ns && end_ns == dual_ns) {
            problems.push(format!(
                "{side:?}: copolyform={copolyform} nabla_zero={cosingular_zero} \
                 end_left_non_singular={end_ns} dual_{:?}_non_singular={dual_ns}",
                side.flip()
            ));
        }
    }
    if problems.is_empty() {
        Ok(Verdict::Ok)
    } else {
        Ok(Verdict::Counterexample(problems.join("; ")))
    }
}

/// `(dim ∇(M, M), dim Z(_T T))` for `M = C` on `side` and `T = End(M)`.
pub fn cosingular_vs_singular(c: &Coalgebra, side: Side) -> Result<(usize, usize)> {
    let a = Arc::new(c.dual_algebra());
    let m = module(c, &a, side)?;
    let n = nabla(&m, &m)?.len();
    let t = Arc::new(endomorphism_algebra(&m)?);
    let z = FDModule::regular(t, Side::Left).singular_submodule()?.dim();
    Ok((n, z))
}

/// Cosemisimple iff non-singular with self-injective dual.
pub fn verify_cosemisimple_flat(c: &Coalgebra) -> Result<Verdict> {
    let a = Arc::new(c.dual_algebra());
    let left = FDModule::regular(a.clone(), Side::Left);
    let cosemisimple = a.is_semisimple()?;
    let ns = left.is_non_singular()?;
    let si = left.injective_hull()?.module.dim() == a.dim();
    if cosemisimple == (ns && si) {
        Ok(Verdict::Ok)
    } else {
        Ok(Verdict::Counterexample(format!(
            "cosemisimple={cosemisimple} non_singular={ns} self_injective_dual={si}"
        )))
    }
}

/// For coprime `C` (simple `C*`): `C`, the simple modules and the cover's
/// `D` are projective, injective and non-singular.
pub fn verify_coprime_dichotomy(c: &Coalgebra) -> Result<Verdict> {
    let a = Arc::new(c.dual_algebra());
    if !a.is_simple()? {
        return Ok(Verdict::NotApplicable("dual algebra is not simple".into()));
    }
    let cm = module(c, &a, Side::Left)?;
    let mut sample = vec![("C".to_string(), cm)];
    let reg = FDModule::regular(a.clone(), Side::Left);
    for (i, e) in a.primitive_idempotents()?.iter().enumerate() {
        let space = reg.generated(&[e.clone()]);
        let (s, _) = reg.submodule(space)?.as_module();
        sample.push((format!("simple {i}"), s));
    }
    let cover = covering_coalgebra(c)?;
    if cover.d != *c {
        return Ok(Verdict::Counterexample("covering coalgebra differs from C".into()));
    }
    for (name, m) in &sample {
        let projective = m.projective_cover()?.module.dim() == m.dim();
        let injective = m.injective_hull()?.module.dim() == m.dim();
        let ns = m.is_non_singular()?;
        if !(projective && injective && ns) {
            return Ok(Verdict::Counterexample(format!(
                "{name}: projective={projective} injective={injective} non_singular={ns}"
            )));
        }
    }
    Ok(Verdict::Ok)
}

/// Cocommutative and non-singular implies cosemisimple.
pub fn verify_cocommutative_theorem(c: &Coalgebra) -> Result<Verdict> {
    if !c.is_cocommutative() {
        return Ok(Verdict::NotApplicable("not cocommutative".into()));
    }
    let a = Arc::new(c.dual_algebra());
    if !FDModule::regular(a.clone(), Side::Left).is_non_singular()? {
        return Ok(Verdict::NotApplicable("not non-singular".into()));
    }
    if a.is_semisimple()? {
        Ok(Verdict::Ok)
    } else {
        Ok(Verdict::Counterexample("cocommutative and non-singular but not cosemisimple".into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    pub report: PropertyReport,
    pub nonsingular_equivalences: Flag<Verdict>,
    pub cosemisimple_flat: Flag<Verdict>,
    pub coprime_dichotomy: Flag<Verdict>,
    pub cocommutative: Flag<Verdict>,
    /// Violations of cosemisimple ⇒ hereditary ⇒ non-singular.
    pub hierarchy_violations: Vec<String>,
}

impl CorpusEntry {
    /// Whether any check produced a counterexample or failed to run.
    pub fn has_violation(&self) -> bool {
        let bad = |f: &Flag<Verdict>| match f {
            Flag::Value(v) => v.is_violation(),
            Flag::Failed { .. } => true,
        };
        !self.hierarchy_violations.is_empty()
            || bad(&self.nonsingular_equivalences)
            || bad(&self.cosemisimple_flat)
            || bad(&self.coprime_dichotomy)
            || bad(&self.cocommutative)
    }
}

fn hierarchy(r: &PropertyReport) -> Vec<String> {
    let mut v = Vec::new();
    let (cs, her, ns) = (r.cosemisimple.value(), r.hereditary.value(), r.non_singular.value());
    if cs == Some(true) && her == Some(false) {
        v.push("cosemisimple but not hereditary".into());
    }
    if her == Some(true) && ns == Some(false) {
        v.push("hereditary but singular".into());
    }
    v
}

pub fn verify_entry(name: &str, c: &Coalgebra) -> CorpusEntry {
    let report = coalgebra_report(c);
    CorpusEntry {
        name: name.to_string(),
        hierarchy_violations: hierarchy(&report),
        report,
        nonsingular_equivalences: verify_nonsingular_equivalences(c).into(),
        cosemisimple_flat: verify_cosemisimple_flat(c).into(),
        coprime_dichotomy: verify_coprime_dichotomy(c).into(),
        cocommutative: verify_cocommutative_theorem(c).into(),
    }
}

/// Runs every check on every named coalgebra, one task per coalgebra;
/// output order follows the input.
pub fn verify_corpus(corpus: &[(String, Coalgebra)], exec: Execution) -> Vec<CorpusEntry> {
    exec::map(exec, corpus, |(name, c)| verify_entry(name, c))
}
