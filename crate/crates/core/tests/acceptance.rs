//! One PASS/FAIL line per acceptance criterion. Exits non-zero on any FAIL.

use std::process::ExitCode;

use symplectic_hodge::cohomology::SymplecticCohomology;
use symplectic_hodge::linalg::Subspace;
use symplectic_hodge::model::{corpus, corpus_model};
use symplectic_hodge::notation::parse_form;
use symplectic_hodge::verify::{run_verify, VerifyConfig, VerifySummary};
use symplectic_hodge::{QForm, QSymplectic, Rational};

struct Criterion {
    checks: Vec<(String, bool)>,
}

impl Criterion {
    fn new() -> Self {
        Criterion { checks: Vec::new() }
    }

    fn check(&mut self, what: impl Into<String>, ok: bool) {
        self.checks.push((what.into(), ok));
    }

    fn report(self, number: usize, title: &str) -> bool {
        let failed: Vec<&str> = self.checks.iter().filter(|c| !c.1).map(|c| c.0.as_str()).collect();
        let ok = failed.is_empty() && !self.checks.is_empty();
        println!("{} criterion {number}: {title} ({} checks)", if ok { "PASS" } else { "FAIL" }, self.checks.len());
        for f in failed {
            println!("     failed: {f}");
        }
        ok
    }
}

fn f(text: &str) -> QForm {
    parse_form(text, 6).unwrap()
}

fn corpus_structure(name: &str) -> QSymplectic {
    corpus_model(name).unwrap().build().unwrap().symplectic().unwrap()
}

/// The classes of `forms` in de Rham coordinates.
fn class_span(c: &SymplecticCohomology<'_, Rational>, forms: &[&str]) -> Subspace<Rational> {
    let k = f(forms[0]).degree();
    let rank = c.de_rham().degree(k).rank();
    Subspace::span(rank, forms.iter().map(|t| c.class_of(&f(t)).unwrap()))
}

fn example_one() -> bool {
    let mut cr = Criterion::new();
    let s = corpus_structure("example1");
    let c = SymplecticCohomology::new(&s).unwrap();
    let b = c.betti();
    cr.check("b1 = 3, b2 = 4, b3 = 4", b[1..=3] == [3, 4, 4]);
    let h1 = c.de_rham().degree(1).closed().clone();
    let e123 = Subspace::span(6, [f("1"), f("2"), f("3")].iter().map(|x| x.to_coords()));
    cr.check("H¹ = <e1, e2, e3>", h1 == e123 && c.de_rham().degree(0).exact().is_zero());
    cr.check("dim H^(1,0) = 1", c.hrs_group(1, 0).unwrap().dim() == 1);
    cr.check("dim H^(0,2) = 3", c.hrs_group(0, 2).unwrap().dim() == 3);
    cr.check(
        "H^(0,2) = <e13, e14+e23, 2e24-e16-e35>",
        c.hrs_group(0, 2).unwrap().classes == class_span(&c, &["13", "14+23", "2*24-16-35"]),
    );
    let v2 = c.decomposition_analysis(2).unwrap();
    cr.check("degree 2 full and direct", v2.full && v2.direct);
    let v3 = c.decomposition_analysis(3).unwrap();
    cr.check("degree 3 not full and not direct", !v3.full && !v3.direct);
    let witness = c.class_of(&f("136")).unwrap();
    let meet = c.hrs_intersection((1, 1), (0, 3)).unwrap();
    cr.check("[e136] ≠ 0 lies in H^(1,1) ∩ H^(0,3)", meet.contains(&witness) && witness.iter().any(|x| *x != Rational::from_integer(0.into())));
    let sum = c.hrs_group(1, 1).unwrap().classes.sum(&c.hrs_group(0, 3).unwrap().classes).unwrap();
    let rest = class_span(&c, &["146+1/2*236+1/2*345", "245"]);
    cr.check("<e146+½e236+½e345, e245> ∩ (H^(0,3)+H^(1,1)) = 0", rest.intersect(&sum).unwrap().is_zero());
    let reps: Vec<QForm> = c.de_rham().degree(3).representatives();
    let printed = [f("126-145-2*235"), f("136"), f("146+1/2*236+1/2*345"), f("245")];
    cr.check("harmonic representatives of H³ are the printed ones", reps == printed);
    let cases = [
        ("126-145-2*235", "-1/2*126-1/2*235-145", "-3/2*2", "3/2*126-3/2*235"),
        ("136", "1/2*136-1/2*234", "-1/2*3", "1/2*136+1/2*234"),
        ("146+1/2*236+1/2*345", "1/4*146-1/4*345+1/2*236", "-3/4*4", "3/4*146+3/4*345"),
        ("245", "1/2*156+1/2*245", "1/2*5", "-1/2*156+1/2*245"),
    ];
    for (a, p3, p1, lp1) in cases {
        let parts = s.lefschetz_decompose(&f(a)).unwrap();
        let ok = parts.formula_agrees
            && parts.component(0) == Some(&f(p3))
            && parts.component(1) == Some(&f(p1))
            && s.op_l(&f(p1)) == f(lp1)
            && s.reassemble(&parts) == f(a);
        cr.check(format!("printed Lefschetz decomposition of {a}"), ok);
    }
    cr.report(1, "Example 1 reproduction")
}

fn example_two() -> bool {
    let mut cr = Criterion::new();
    let s = corpus_structure("example2");
    let c = SymplecticCohomology::new(&s).unwrap();
    cr.check("b = (1,2,3,4,3,2,1)", c.betti() == [1, 2, 3, 4, 3, 2, 1]);
    let printed: [&[((usize, usize), usize)]; 7] = [
        &[((0, 0), 1)],
        &[((0, 1), 2)],
        &[((0, 2), 2), ((1, 0), 1)],
        &[((0, 3), 2), ((1, 1), 2)],
        &[((0, 4), 0), ((1, 2), 2), ((2, 0), 1)],
        &[((0, 5), 0), ((1, 3), 0), ((2, 1), 2)],
        &[((0, 6), 0), ((1, 4), 0), ((2, 2), 0), ((3, 0), 1)],
    ];
    for (k, dims) in printed.iter().enumerate() {
        let v = c.decomposition_analysis(k).unwrap();
        let got: Vec<((usize, usize), usize)> = v.summand_dims.into_iter().collect();
        cr.check(format!("degree {k} full and direct"), v.full && v.direct);
        cr.check(format!("degree {k} (r,s) dims"), got == *dims);
    }
    let spans: [((usize, usize), &[&str]); 6] = [
        ((0, 2), &["12-36", "12-45"]),
        ((1, 1), &["123+345", "126+456"]),
        ((0, 3), &["123-345", "126-456"]),
        ((2, 0), &["1236+1245+3456"]),
        ((1, 2), &["1236-1245", "1236-3456"]),
        ((2, 1), &["12456", "12345"]),
    ];
    for ((r, s_), forms) in spans {
        cr.check(format!("H^({r},{s_}) is the printed span"), c.hrs_group(r, s_).unwrap().classes == class_span(&c, forms));
    }
    cr.check("HLC holds", c.hlc_check().unwrap().holds());
    cr.check("dd^Λ-lemma holds", c.dd_lemma_check().unwrap().holds());
    cr.report(2, "Example 2 reproduction")
}

fn example_three() -> bool {
    let mut cr = Criterion::new();
    let s = corpus_structure("example3");
    let c = SymplecticCohomology::new(&s).unwrap();
    let b = c.betti();
    cr.check("b1 = 3, b2 = 5, b3 = 6", b[1..=3] == [3, 5, 6]);
    let v2 = c.decomposition_analysis(2).unwrap();
    cr.check("degree 2 = 1 + 4, full and direct", v2.full && v2.direct && v2.summand_dims[&(1, 0)] == 1 && v2.summand_dims[&(0, 2)] == 4);
    let v3 = c.decomposition_analysis(3).unwrap();
    cr.check("degree 3 sum is strictly smaller than H³", v3.sum_dim < v3.betti);
    let sum = c.hrs_group(0, 3).unwrap().classes.sum(&c.hrs_group(1, 1).unwrap().classes).unwrap();
    cr.check("[e136] ∉ H^(0,3) + H^(1,1)", !sum.contains(&c.class_of(&f("136")).unwrap()));
    cr.check(
        "H^(0,3) ⊇ <e123-e345, e126-e456, e245>",
        class_span(&c, &["123-345", "126-456", "245"]).is_subspace_of(&c.hrs_group(0, 3).unwrap().classes),
    );
    cr.report(3, "Example 3 reproduction")
}

fn example_four() -> bool {
    let mut cr = Criterion::new();
    let model = corpus_model("example4").unwrap().build().unwrap();
    let s = model.symplectic();
    cr.check("ω is closed and non-degenerate", s.is_ok());
    let Ok(s) = s else { return cr.report(4, "Example 4 half-flat structure") };
    let c = SymplecticCohomology::new(&s).unwrap();
    let psi = &model.forms["re_psi"];
    cr.check("Re ψ is closed", model.algebra.differential(psi).is_zero());
    cr.check("Re ψ is primitive", s.is_primitive(psi));
    let class = c.class_of(psi).unwrap();
    cr.check("[Re ψ] ≠ 0", class.iter().any(|x| *x != Rational::from_integer(0.into())));
    cr.check("[Re ψ] ∈ H^(0,3)", c.hrs_group(0, 3).unwrap().classes.contains(&class));
    let hlc = c.hlc_check().unwrap();
    let n = s.n();
    for m in &hlc.maps {
        let exact_to_exact = c.l_power_on_cohomology(m.k, n - m.k).is_ok();
        cr.check(format!("L^{}: H^{} → H^{} well defined, rank {}", m.k, n - m.k, n + m.k, m.rank), exact_to_exact);
        println!("     L^{}: H^{} → H^{}  {}x{} rank {}", m.k, n - m.k, n + m.k, m.target_dim, m.source_dim, m.rank);
    }
    cr.check("HLC verdict agrees with the dd^Λ-lemma", hlc.holds() == c.dd_lemma_check().unwrap().holds());
    cr.report(4, "Example 4 half-flat structure")
}

fn tally_clean(cr: &mut Criterion, summary: &VerifySummary, prefix: &str) {
    let t = summary.tally(prefix);
    cr.check(format!("{prefix} ({} passed, {} failed)", t.passed, t.failed), t.failed == 0 && t.passed > 0);
}

fn theorem_suite(summary: &VerifySummary) -> bool {
    let mut cr = Criterion::new();
    let random = summary.random_count();
    cr.check(format!("{random} random structures on dims 4, 6, 8 (≥ 50)"), random >= 50);
    for dim in [4, 6, 8] {
        let count = summary.structures.iter().filter(|s| s.kind != "corpus" && s.dim == dim).count();
        cr.check(format!("{count} random structures of dim {dim}"), count > 0);
    }
    let corpus_count = corpus().len();
    let validated = summary.tally("symplectic: structure validates");
    cr.check("every structure validates", validated.failed == 0 && validated.passed == corpus_count + random);
    tally_clean(&mut cr, summary, "theorem: H² = H^(1,0) ⊕ H^(0,2)");
    tally_clean(&mut cr, summary, "theorem: H^(k,0) ∩ H^(0,2k) = 0");
    tally_clean(&mut cr, summary, "theorem: H^(r,s) = L^r H^(0,s)");
    tally_clean(&mut cr, summary, "theorem: H^(r,0) = ⟨[ω^r]⟩");
    tally_clean(&mut cr, summary, "theorem: full in degree k ⇒ direct in degree 2n−k");
    tally_clean(&mut cr, summary, "theorem: cup pairing non-degenerate");
    tally_clean(&mut cr, summary, "theorem:");
    cr.report(5, "theorem suite on the corpus and random structures")
}

fn identity_suite(summary: &VerifySummary) -> bool {
    let mut cr = Criterion::new();
    for group in ["sl2", "star", "commutation", "differentials", "opposite sign", "lefschetz"] {
        tally_clean(&mut cr, summary, &format!("identity [{group}]"));
    }
    let commutation = summary.properties.keys().filter(|k| k.starts_with("identity [commutation]")).count();
    cr.check(format!("{commutation} commutation entries (9)"), commutation == 9);
    tally_clean(&mut cr, summary, "identity [star]: ⋆⋆ = id");
    tally_clean(&mut cr, summary, "identity [opposite sign]: Λ̃ = −⋆L⋆");
    tally_clean(&mut cr, summary, "lefschetz: reassembly of a random form");
    tally_clean(&mut cr, summary, "lefschetz: closed formula = linear solve");
    tally_clean(&mut cr, summary, "lefschetz: components are primitive");
    tally_clean(&mut cr, summary, "negative:");
    cr.report(6, "operator identities as exact matrix identities")
}

fn equivalence_suite(summary: &VerifySummary) -> bool {
    let mut cr = Criterion::new();
    tally_clean(&mut cr, summary, "theorem: HLC ⇔ dd^Λ-lemma");
    tally_clean(&mut cr, summary, "theorem: dim H^k_{d^Λ} = b_{2n−k}");
    tally_clean(&mut cr, summary, "theorem: dim H^k_{dd^Λ} = dim H^{2n−k}_{d+d^Λ}");
    tally_clean(&mut cr, summary, "theorem: L^k: H^{n−k}_{d+d^Λ} ≅ H^{n+k}_{d+d^Λ}");
    tally_clean(&mut cr, summary, "theorem: H^k_{d+d^Λ} = ⊕ L^r PH^{k−2r}_{d+d^Λ}");
    tally_clean(&mut cr, summary, "theorem: PH_{d+d^Λ} routes agree");
    let both = summary.structures.iter().filter(|s| s.hlc.is_some()).count();
    cr.check("HLC decided on every structure", both == summary.structures.len() - 1);
    cr.report(7, "equivalence suite")
}

fn benson_gordon(summary: &VerifySummary) -> bool {
    let mut cr = Criterion::new();
    tally_clean(&mut cr, summary, "Benson–Gordon: nilpotent has HLC iff abelian");
    let non_abelian = summary
        .structures
        .iter()
        .filter(|s| s.kind == "nilpotent" || s.label == "example1")
        .collect::<Vec<_>>();
    cr.check(format!("{} non-abelian nilpotent structures fail HLC", non_abelian.len()), non_abelian.len() > 20 && non_abelian.iter().all(|s| s.hlc == Some(false)));
    let torus = summary.structures.iter().find(|s| s.label == "torus6");
    cr.check("the torus satisfies HLC", torus.and_then(|t| t.hlc) == Some(true));
    cr.report(8, "Benson–Gordon: non-abelian nilpotent algebras fail HLC")
}

fn main() -> ExitCode {
    let mut ok = vec![example_one(), example_two(), example_three(), example_four()];
    let summary = run_verify(&VerifyConfig::new(0, vec![4, 6, 8]));
    ok.push(theorem_suite(&summary));
    ok.push(identity_suite(&summary));
    ok.push(equivalence_suite(&summary));
    ok.push(benson_gordon(&summary));
    let passed = ok.iter().filter(|x| **x).count();
    println!("acceptance: {passed}/{} criteria pass", ok.len());
    if passed == ok.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
