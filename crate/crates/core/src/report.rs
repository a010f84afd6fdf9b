//! The report produced by `compute`: every cohomological invariant of one
//! model, in a fixed JSON layout and a plain-text rendering.
//!
//! Rationals are serialized as strings (`"3"`, `"-1/2"`), dimensions as
//! integers. Field order is the declaration order below, so serializing a
//! deserialized report reproduces the original bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohomology::{primitive_ph_d, CohomologyError, SymplecticCohomology};
use crate::linalg::Matrix;
use crate::model::{ErrorKind, Flag, ModelError, ModelFile};
use crate::Rational;

pub const CAVEAT_LOWER_BOUND: &str = "Lie-algebra cohomology; lower bound for manifold groups";
pub const CAVEAT_NOT_UNIMODULAR: &str = "not unimodular: no lattice exists and duality checks are skipped";

#[derive(Debug, Error)]
pub enum ComputeError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error("internal inconsistency: {} check(s) failed: {}", failures.len(), failures.join("; "))]
    ChecksFailed { failures: Vec<String>, report: Box<Report> },
}

impl ComputeError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            ComputeError::Model(e) => e.kind(),
            ComputeError::Cohomology(CohomologyError::NotClosed { .. }) => ErrorKind::Input,
            ComputeError::Cohomology(_) | ComputeError::ChecksFailed { .. } => ErrorKind::Inconsistent,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub model: ModelEcho,
    pub properties: Properties,
    pub volume: String,
    pub betti: Vec<usize>,
    pub cohomology: CohomologyDims,
    pub de_rham_representatives: Vec<DegreeRepresentatives>,
    pub hrs: Vec<HrsEntry>,
    pub decompositions: Vec<DecompositionEntry>,
    pub hlc: HlcEntry,
    pub dd_lemma: DdLemmaEntry,
    pub forms: Vec<FormEntry>,
    pub identities: Vec<CheckEntry>,
    pub theorems: Vec<TheoremEntry>,
    pub caveats: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelEcho {
    pub name: String,
    pub dim: usize,
    pub structure: String,
    pub omega: String,
    pub flags: Vec<String>,
    pub forms: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Properties {
    pub nilpotent: bool,
    pub solvable: bool,
    pub unimodular: bool,
    pub abelian: bool,
    pub assert_completely_solvable: bool,
    pub assert_lattice: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyDims {
    pub de_rham: Vec<usize>,
    pub d_lambda: Vec<usize>,
    pub d_plus_d_lambda: Vec<usize>,
    pub dd_lambda: Vec<usize>,
    pub primitive_d_plus_d_lambda: Vec<usize>,
    pub primitive_d: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRepresentatives {
    pub degree: usize,
    pub representatives: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HrsEntry {
    pub r: usize,
    pub s: usize,
    pub degree: usize,
    pub dim: usize,
    pub representatives: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub r: usize,
    pub s: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionEntry {
    pub degree: usize,
    pub betti: usize,
    pub sum_dim: usize,
    pub direct: bool,
    pub full: bool,
    pub summands: Vec<Summand>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzMapEntry {
    pub k: usize,
    pub source_degree: usize,
    pub target_degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub isomorphism: bool,
    /// Rows of the matrix in the bases of harmonic representatives.
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HlcEntry {
    pub maps: Vec<LefschetzMapEntry>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DdLemmaEntry {
    pub kernel_dims: Vec<usize>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormEntry {
    pub name: String,
    pub form: String,
    pub degree: usize,
    pub closed: bool,
    pub primitive: bool,
    /// De Rham class coordinates; empty when the form is not closed.
    pub class: Vec<String>,
    pub class_is_zero: bool,
    /// Every `(r, s)` whose group contains the class.
    pub in_hrs: Vec<Summand>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub group: String,
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremEntry {
    pub name: String,
    pub instance: String,
    pub holds: bool,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn matrix_strings(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    m.rows().map(strings).collect()
}

/// Computes the full report. Theorem checks and operator identities run in
/// assert mode: any failure is an internal inconsistency.
pub fn run_compute(file: &ModelFile) -> Result<Report, ComputeError> {
    let model = file.build()?;
    let s = model.symplectic()?;
    let c = SymplecticCohomology::new(&s)?;
    let dim = s.dim();
    let n = s.n();
    let props = model.algebra.properties();

    let mut cohomology = CohomologyDims {
        de_rham: c.betti(),
        d_lambda: c.d_lambda().dims(),
        d_plus_d_lambda: c.d_plus_d_lambda().dims(),
        dd_lambda: c.dd_lambda().dims(),
        primitive_d_plus_d_lambda: Vec::new(),
        primitive_d: Vec::new(),
    };
    for k in 0..=dim {
        cohomology.primitive_d_plus_d_lambda.push(c.ph_plus(k)?.by_intersection.rank());
        cohomology.primitive_d.push(primitive_ph_d(&s, k)?.rank());
    }

    let de_rham_representatives = (0..=dim)
        .map(|k| DegreeRepresentatives {
            degree: k,
            representatives: c.de_rham().degree(k).representatives().iter().map(|f| f.render()).collect(),
        })
        .collect();

    let mut hrs = Vec::new();
    let mut decompositions = Vec::new();
    for k in 0..=dim {
        for ((r, s_), g) in c.hrs_groups_in_degree(k)? {
            hrs.push(HrsEntry {
                r,
                s: s_,
                degree: k,
                dim: g.dim(),
                representatives: g.representatives.iter().map(|f| f.render()).collect(),
            });
        }
        let v = c.decomposition_analysis(k)?;
        decompositions.push(DecompositionEntry {
            degree: k,
            betti: v.betti,
            sum_dim: v.sum_dim,
            direct: v.direct,
            full: v.full,
            summands: v.summand_dims.iter().map(|(&(r, s), &dim)| Summand { r, s, dim }).collect(),
        });
    }

    let mut maps = Vec::new();
    for k in 0..=n {
        let m = c.l_power_on_cohomology(k, n - k)?;
        let rank = m.rank();
        maps.push(LefschetzMapEntry {
            k,
            source_degree: n - k,
            target_degree: n + k,
            source_dim: m.ncols(),
            target_dim: m.nrows(),
            rank,
            isomorphism: m.nrows() == m.ncols() && rank == m.ncols(),
            matrix: matrix_strings(&m),
        });
    }
    let hlc = HlcEntry { holds: maps.iter().all(|m| m.isomorphism), maps };
    let dd = c.dd_lemma_check()?;
    let dd_lemma = DdLemmaEntry { holds: dd.holds(), kernel_dims: dd.kernel_dims };

    let mut forms = Vec::new();
    for (name, f) in &model.forms {
        let closed = model.algebra.differential(f).is_zero();
        let k = f.degree();
        let (class, in_hrs) = if closed {
            let class = c.class_of(f)?;
            let mut in_hrs = Vec::new();
            for ((r, s_), g) in c.hrs_groups_in_degree(k)? {
                if g.classes.contains(&class) {
                    in_hrs.push(Summand { r, s: s_, dim: g.dim() });
                }
            }
            (class, in_hrs)
        } else {
            (Vec::new(), Vec::new())
        };
        forms.push(FormEntry {
            name: name.clone(),
            form: f.render(),
            degree: k,
            closed,
            primitive: s.is_primitive(f),
            class_is_zero: closed && class.iter().all(Zero::is_zero),
            class: strings(&class),
            in_hrs,
        });
    }

    let identities: Vec<CheckEntry> = s
        .operator_identities()
        .into_iter()
        .map(|i| CheckEntry { group: i.group, name: i.name, holds: i.holds })
        .collect();
    let theorems: Vec<TheoremEntry> = c
        .theorem_checks()?
        .into_iter()
        .map(|t| TheoremEntry { name: t.name, instance: t.instance, holds: t.holds })
        .collect();

    let mut caveats = Vec::new();
    if !props.nilpotent && !file.has_flag(Flag::AssertCompletelySolvable) {
        caveats.push(CAVEAT_LOWER_BOUND.to_string());
    }
    if !props.unimodular {
        caveats.push(CAVEAT_NOT_UNIMODULAR.to_string());
    }

    let report = Report {
        model: ModelEcho {
            name: file.name.clone(),
            dim,
            structure: model.algebra.structure().render(),
            omega: s.omega().render(),
            flags: file.flags.iter().map(|f| f.to_string()).collect(),
            forms: model.forms.iter().map(|(k, v)| (k.clone(), v.render())).collect(),
        },
        properties: Properties {
            nilpotent: props.nilpotent,
            solvable: props.solvable,
            unimodular: props.unimodular,
            abelian: model.algebra.is_abelian(),
            assert_completely_solvable: file.has_flag(Flag::AssertCompletelySolvable),
            assert_lattice: file.has_flag(Flag::AssertLattice),
        },
        volume: s.volume().to_string(),
        betti: c.betti(),
        cohomology,
        de_rham_representatives,
        hrs,
        decompositions,
        hlc,
        dd_lemma,
        forms,
        identities,
        theorems,
        caveats,
    };

    let failures: Vec<String> = report.failed_checks();
    if !failures.is_empty() {
        return Err(ComputeError::ChecksFailed { failures, report: Box::new(report) });
    }
    Ok(report)
}

impl Report {
    /// Every identity or theorem check that does not hold.
    pub fn failed_checks(&self) -> Vec<String> {
        let ids = self.identities.iter().filter(|c| !c.holds).map(|c| format!("[{}] {}", c.group, c.name));
        let thms = self.theorems.iter().filter(|t| !t.holds).map(|t| format!("{} ({})", t.name, t.instance));
        ids.chain(thms).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Keeps only the per-degree entries of degree `k`. Whole-complex data
    /// (dimension lists, HLC, identities, theorem checks) is kept.
    pub fn restricted_to_degree(&self, k: usize) -> Report {
        let mut out = self.clone();
        out.de_rham_representatives.retain(|r| r.degree == k);
        out.hrs.retain(|h| h.degree == k);
        out.decompositions.retain(|d| d.degree == k);
        out.forms.retain(|f| f.degree == k);
        out
    }

    pub fn to_text(&self) -> String {
        let mut t = String::new();
        let m = &self.model;
        let _ = writeln!(t, "model {} (dim {})", m.name, m.dim);
        let _ = writeln!(t, "  structure  {}", m.structure);
        let _ = writeln!(t, "  omega      {}", m.omega);
        let _ = writeln!(t, "  top coefficient of omega^n  {}", self.volume);
        if !m.flags.is_empty() {
            let _ = writeln!(t, "  flags      {}", m.flags.join(", "));
        }
        let p = &self.properties;
        let _ = writeln!(
            t,
            "  nilpotent {}  solvable {}  unimodular {}  abelian {}",
            p.nilpotent, p.solvable, p.unimodular, p.abelian
        );
        let _ = writeln!(t);
        let row = |v: &[usize]| v.iter().map(|x| format!("{x:>3}")).collect::<String>();
        let _ = writeln!(t, "dimensions by degree  {}", row(&(0..self.betti.len()).collect::<Vec<_>>()));
        let c = &self.cohomology;
        for (label, v) in [
            ("de Rham", &c.de_rham),
            ("d^Lambda", &c.d_lambda),
            ("d+d^Lambda", &c.d_plus_d_lambda),
            ("dd^Lambda", &c.dd_lambda),
            ("PH d+d^Lambda", &c.primitive_d_plus_d_lambda),
            ("PH d", &c.primitive_d),
        ] {
            let _ = writeln!(t, "  {label:<19}{}", row(v));
        }
        let _ = writeln!(t);
        for r in &self.de_rham_representatives {
            let _ = writeln!(t, "H^{} = <{}>", r.degree, r.representatives.join(", "));
        }
        let _ = writeln!(t);
        for d in &self.decompositions {
            let _ = writeln!(
                t,
                "degree {}: b = {}, dim sum = {}, {}, {}",
                d.degree,
                d.betti,
                d.sum_dim,
                if d.full { "full" } else { "not full" },
                if d.direct { "direct" } else { "not direct" }
            );
            for h in self.hrs.iter().filter(|h| h.degree == d.degree) {
                let _ = writeln!(t, "  H^({},{}) dim {}  <{}>", h.r, h.s, h.dim, h.representatives.join(", "));
            }
        }
        let _ = writeln!(t);
        let _ = writeln!(t, "Hard Lefschetz: {}", self.hlc.holds);
        for l in &self.hlc.maps {
            let _ = writeln!(
                t,
                "  L^{}: H^{} -> H^{}  {}x{} rank {}{}",
                l.k,
                l.source_degree,
                l.target_degree,
                l.target_dim,
                l.source_dim,
                l.rank,
                if l.isomorphism { "  iso" } else { "" }
            );
        }
        let _ = writeln!(t, "dd^Lambda-lemma: {}  (kernel dims {:?})", self.dd_lemma.holds, self.dd_lemma.kernel_dims);
        for f in &self.forms {
            let groups: Vec<String> = f.in_hrs.iter().map(|h| format!("H^({},{})", h.r, h.s)).collect();
            let _ = writeln!(
                t,
                "form {} = {}: closed {}, primitive {}, class [{}]{}",
                f.name,
                f.form,
                f.closed,
                f.primitive,
                f.class.join(", "),
                if groups.is_empty() { String::new() } else { format!(" in {}", groups.join(", ")) }
            );
        }
        let _ = writeln!(t);
        let ids = self.identities.iter().filter(|c| c.holds).count();
        let thms = self.theorems.iter().filter(|c| c.holds).count();
        let _ = writeln!(t, "operator identities {}/{} hold", ids, self.identities.len());
        let _ = writeln!(t, "theorem checks      {}/{} hold", thms, self.theorems.len());
        for f in self.failed_checks() {
            let _ = writeln!(t, "  FAILED {f}");
        }
        for c in &self.caveats {
            let _ = writeln!(t, "caveat: {c}");
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::corpus_model;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let r = run_compute(&corpus_model("example4").unwrap()).unwrap();
        let json = r.to_json();
        let back = Report::from_json(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), json);
        assert_eq!(r.caveats, [CAVEAT_LOWER_BOUND]);
        let psi = &r.forms[0];
        assert!(psi.closed && psi.primitive && !psi.class_is_zero);
        assert!(psi.in_hrs.iter().any(|h| (h.r, h.s) == (0, 3)));
    }

    #[test]
    fn degree_filter_keeps_one_degree() {
        let r = run_compute(&corpus_model("example1").unwrap()).unwrap().restricted_to_degree(3);
        assert!(r.hrs.iter().all(|h| h.degree == 3));
        assert_eq!(r.decompositions.len(), 1);
        assert!(!r.decompositions[0].full && !r.decompositions[0].direct);
        assert!(r.to_text().contains("degree 3"));
    }
}
