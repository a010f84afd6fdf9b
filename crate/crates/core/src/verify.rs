//! Seeded property verification over the corpus and random structures.
//!
//! Every structure is checked independently (in parallel); results are
//! collected in a fixed order, so the summary depends only on the seed and
//! the requested dimensions.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cohomology::SymplecticCohomology;
use crate::exterior::Form;
use crate::lie::{LieAlgebra, LieError};
use crate::linalg::{Matrix, Subspace};
use crate::model::{corpus, corpus_model};
use crate::random::{Family, Generator};
use crate::symplectic::{SymplecticError, SymplecticStructure};
use crate::{QForm, QLieAlgebra, Rational};

/// Random structures checked per dimension unless overridden.
pub fn default_count(dim: usize) -> usize {
    match dim {
        0..=6 => 20,
        8 => 10,
        _ => 2,
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub dims: Vec<usize>,
    /// Overrides [`default_count`] for every dimension.
    pub count: Option<usize>,
    pub include_corpus: bool,
}

impl VerifyConfig {
    pub fn new(seed: u64, dims: Vec<usize>) -> Self {
        VerifyConfig { seed, dims, count: None, include_corpus: true }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug)]
pub struct StructureResult {
    pub label: String,
    pub dim: usize,
    pub kind: String,
    /// `(property, holds)` in check order.
    pub outcomes: Vec<(String, bool)>,
    pub hlc: Option<bool>,
}

#[derive(Clone, Debug, Default)]
pub struct VerifySummary {
    pub structures: Vec<StructureResult>,
    pub properties: BTreeMap<String, Tally>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.properties.values().all(|t| t.failed == 0)
    }

    pub fn random_count(&self) -> usize {
        self.structures.iter().filter(|s| s.kind != "corpus").count()
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for s in &self.structures {
            for (p, ok) in &s.outcomes {
                if !ok {
                    out.push(format!("{} [{}]: {p}", s.label, s.kind));
                }
            }
        }
        out
    }

    /// The tally of every property whose name starts with `prefix`.
    pub fn tally(&self, prefix: &str) -> Tally {
        let mut t = Tally::default();
        for (name, v) in &self.properties {
            if name.starts_with(prefix) {
                t.passed += v.passed;
                t.failed += v.failed;
            }
        }
        t
    }

    pub fn render(&self) -> String {
        let mut t = String::new();
        let corpus = self.structures.len() - self.random_count();
        let _ = writeln!(t, "structures: {} corpus, {} random", corpus, self.random_count());
        let width = self.properties.keys().map(|k| k.chars().count()).max().unwrap_or(0);
        for (name, v) in &self.properties {
            let status = if v.failed == 0 { "ok  " } else { "FAIL" };
            let pad = width - name.chars().count();
            let _ = writeln!(t, "{status} {name}{} {:>5} passed {:>3} failed", " ".repeat(pad), v.passed, v.failed);
        }
        for f in self.failures() {
            let _ = writeln!(t, "failure: {f}");
        }
        let _ = writeln!(t, "{}", if self.all_passed() { "all properties hold" } else { "some properties FAILED" });
        t
    }
}

struct Job {
    label: String,
    kind: String,
    algebra: QLieAlgebra,
    omega: QForm,
    forms: Vec<QForm>,
    seed: u64,
}

pub fn run_verify(config: &VerifyConfig) -> VerifySummary {
    let mut jobs = Vec::new();
    if config.include_corpus {
        for (i, m) in corpus().into_iter().enumerate() {
            let model = m.build().expect("corpus builds");
            jobs.push(Job {
                label: m.name.clone(),
                kind: "corpus".into(),
                algebra: model.algebra,
                omega: model.omega.expect("corpus has ω"),
                forms: model.forms.into_values().collect(),
                seed: config.seed.wrapping_add(i as u64),
            });
        }
    }
    let mut gen = Generator::new(config.seed);
    for &dim in &config.dims {
        let count = config.count.unwrap_or_else(|| default_count(dim));
        for (i, s) in gen.samples::<Rational>(dim, count).into_iter().enumerate() {
            jobs.push(Job {
                label: format!("dim {dim} #{i} {}", s.label),
                kind: match s.family {
                    Family::Nilpotent => "nilpotent".into(),
                    Family::Solvable => "solvable".into(),
                },
                algebra: s.algebra,
                omega: s.omega,
                forms: Vec::new(),
                seed: config.seed.wrapping_mul(1_000_003).wrapping_add(jobs.len() as u64),
            });
        }
    }

    let mut structures: Vec<StructureResult> = jobs.par_iter().map(check_structure).collect();
    if config.include_corpus {
        structures.push(negative_checks());
    }
    let mut properties: BTreeMap<String, Tally> = BTreeMap::new();
    for s in &structures {
        for (p, ok) in &s.outcomes {
            let t = properties.entry(p.clone()).or_default();
            if *ok {
                t.passed += 1;
            } else {
                t.failed += 1;
            }
        }
    }
    VerifySummary { structures, properties }
}

fn random_form(rng: &mut ChaCha8Rng, dim: usize, k: usize) -> QForm {
    let coords: Vec<Rational> = (0..crate::scalar::binomial(dim, k))
        .map(|_| Rational::from_integer(rng.gen_range(-3i64..=3).into()))
        .collect();
    Form::from_coords(dim, k, &coords)
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<Rational> {
    Matrix::from_fn(rows, cols, |_, _| {
        if rng.gen_bool(0.4) {
            Rational::from_integer(rng.gen_range(-2i64..=2).into())
        } else {
            Rational::zero()
        }
    })
}

fn check_structure(job: &Job) -> StructureResult {
    let dim = job.algebra.dim();
    let mut out = StructureResult { label: job.label.clone(), dim, kind: job.kind.clone(), outcomes: Vec::new(), hlc: None };
    let push = |out: &mut StructureResult, name: &str, ok: bool| out.outcomes.push((name.to_string(), ok));
    let mut rng = ChaCha8Rng::seed_from_u64(job.seed);

    let props = job.algebra.properties();
    push(&mut out, "lie: nilpotent ⇒ solvable and unimodular", !props.nilpotent || (props.solvable && props.unimodular));
    for k in 0..dim {
        let a = random_form(&mut rng, dim, k);
        let kb = rng.gen_range(0..=dim - k);
        let b = random_form(&mut rng, dim, kb);
        let d = |f: &QForm| job.algebra.differential(f);
        let lhs = d(&a.wedge(&b).unwrap());
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let rhs = d(&a).wedge(&b).unwrap().try_add(&a.wedge(&d(&b)).unwrap().scale(&Rational::from_integer(sign.into())));
        push(&mut out, "exterior: derivation law for d", rhs.map(|r| r == lhs).unwrap_or(false));
        let kc = rng.gen_range(0..=dim - k - kb);
        let c = random_form(&mut rng, dim, kc);
        let left = a.wedge(&b).and_then(|ab| ab.wedge(&c)).unwrap();
        let right = b.wedge(&c).and_then(|bc| a.wedge(&bc)).unwrap();
        let assoc = left == right || (left.is_zero() && right.is_zero());
        push(&mut out, "exterior: wedge is associative", assoc);
        let sign = if (k * b.degree()).is_multiple_of(2) { 1 } else { -1 };
        let comm = a.wedge(&b).unwrap() == b.wedge(&a).unwrap().scale(&Rational::from_integer(sign.into()));
        push(&mut out, "exterior: wedge is graded-commutative", comm || a.wedge(&b).unwrap().is_zero());
    }
    let m = random_matrix(&mut rng, dim, dim + 1);
    let kernel = m.kernel();
    push(&mut out, "linalg: rank + nullity = columns", m.rank() + kernel.dim() == m.ncols());
    push(&mut out, "linalg: kernel is annihilated", kernel.basis().rows().all(|v| m.mul_vec(v).iter().all(Zero::is_zero)));
    let sq = random_matrix(&mut rng, dim, dim);
    if let Some(inv) = sq.inverse() {
        push(&mut out, "linalg: inverse", &sq * &inv == Matrix::identity(dim));
    }
    let u = Subspace::span(dim, random_matrix(&mut rng, 3, dim).to_rows());
    let v = Subspace::span(dim, random_matrix(&mut rng, 3, dim).to_rows());
    let sum = u.sum(&v).unwrap();
    let meet = u.intersect(&v).unwrap();
    push(&mut out, "linalg: dim(U+V) + dim(U∩V) = dim U + dim V", sum.dim() + meet.dim() == u.dim() + v.dim());
    push(&mut out, "linalg: U∩V ⊆ U ⊆ U+V", meet.is_subspace_of(&u) && u.is_subspace_of(&sum));

    let s = match SymplecticStructure::new(job.algebra.clone(), job.omega.clone()) {
        Ok(s) => s,
        Err(_) => {
            push(&mut out, "symplectic: structure validates", false);
            return out;
        }
    };
    push(&mut out, "symplectic: structure validates", true);
    for id in s.operator_identities() {
        push(&mut out, &format!("identity [{}]: {}", id.group, id.name), id.holds);
    }
    for k in 0..=dim {
        let a = random_form(&mut rng, dim, k);
        match s.lefschetz_decompose(&a) {
            Ok(parts) => {
                push(&mut out, "lefschetz: reassembly of a random form", s.reassemble(&parts) == a);
                push(&mut out, "lefschetz: closed formula = linear solve", parts.formula_agrees);
                push(&mut out, "lefschetz: components are primitive", parts.components.values().all(|b| s.is_primitive(b)));
            }
            Err(_) => push(&mut out, "lefschetz: reassembly of a random form", false),
        }
    }

    let c = match SymplecticCohomology::new(&s) {
        Ok(c) => c,
        Err(_) => {
            push(&mut out, "cohomology: computes", false);
            return out;
        }
    };
    push(&mut out, "cohomology: computes", true);
    for k in 1..=dim {
        let beta = random_form(&mut rng, dim, k - 1);
        let exact = job.algebra.differential(&beta);
        let zero = c.class_of(&exact).map(|v| v.iter().all(Zero::is_zero));
        push(&mut out, "cohomology: class of an exact form is zero", zero.unwrap_or(false));
    }
    match c.theorem_checks() {
        Ok(checks) => {
            for t in checks {
                push(&mut out, &format!("theorem: {}", t.name), t.holds);
            }
        }
        Err(_) => push(&mut out, "theorem: checks run", false),
    }
    for f in &job.forms {
        push(&mut out, "corpus: named form is closed", job.algebra.differential(f).is_zero());
        push(&mut out, "corpus: named form is primitive", s.is_primitive(f));
    }
    if let Ok(hlc) = c.hlc_check() {
        out.hlc = Some(hlc.holds());
        if props.nilpotent {
            push(&mut out, "Benson–Gordon: nilpotent has HLC iff abelian", hlc.holds() == job.algebra.is_abelian());
        }
    }
    out
}

/// Inputs that must be rejected: a corrupted structure and a flipped `Π`.
fn negative_checks() -> StructureResult {
    let mut out = StructureResult {
        label: "negative checks".into(),
        dim: 6,
        kind: "corpus".into(),
        outcomes: Vec::new(),
        hlc: None,
    };
    let corrupted = LieAlgebra::<Rational>::parse("0,0,0,12,14-23,15+24", None);
    out.outcomes.push((
        "negative: corrupted structure constants are rejected by Jacobi".into(),
        matches!(corrupted, Err(LieError::JacobiViolation { .. })),
    ));
    let model = corpus_model("example1").expect("corpus").build().expect("builds");
    let flipped = SymplecticStructure::with_flipped_poisson_sign(model.algebra, model.omega.expect("ω"));
    out.outcomes.push((
        "negative: flipped Poisson sign fails Λω = n".into(),
        matches!(flipped, Err(SymplecticError::Inconsistent { ref check, .. }) if check == "Λω = n"),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let summary = run_verify(&VerifyConfig { seed: 3, dims: vec![4], count: Some(4), include_corpus: true });
        assert!(summary.all_passed(), "{}", summary.render());
        assert_eq!(summary.random_count(), 4);
        assert!(summary.tally("negative:").passed == 2);
        assert!(summary.tally("theorem:").passed > 0);
    }
}
