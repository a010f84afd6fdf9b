//! Cohomologies of the invariant complex and the subgroups `H^(r,s)_ω`.
//!
//! Every quotient is realized with [`Quotient`], so classes are coordinate
//! vectors relative to representatives orthogonal to the subspace being
//! divided out (the harmonic representatives for the coefficient inner
//! product). Checks of statements that are theorems are reported as
//! [`TheoremCheck`]s; a failing one means an implementation bug, not a
//! mathematical discovery.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exterior::{Form, GradedOperator};
use crate::lie::LieAlgebra;
use crate::linalg::{LinalgError, Matrix, Quotient, Subspace};
use crate::scalar::{binomial, Field};
use crate::symplectic::SymplecticStructure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("degree {degree} is outside 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("{form} is not closed for this cohomology")]
    NotClosed { form: String },
    #[error("the cup pairing is only defined on unimodular algebras")]
    NotUnimodular,
    #[error("internal inconsistency in {check}: {detail}")]
    Inconsistent { check: String, detail: String },
}

fn inconsistent(check: &str, detail: impl Into<String>) -> CohomologyError {
    CohomologyError::Inconsistent { check: check.to_string(), detail: detail.into() }
}

/// Image of block `k` of an operator, or `{0}` when that block has no source.
fn image_into<T: Field>(op: &GradedOperator<T>, source: Option<usize>, target_dim: usize) -> Subspace<T> {
    match source {
        Some(k) if k <= op.dim() => op.block(k).image(),
        _ => Subspace::zero(target_dim),
    }
}

/// Block `k` of an operator whose source degree is `target − shift`, if any.
fn source_degree(target: usize, shift: isize, dim: usize) -> Option<usize> {
    let s = target as isize - shift;
    (0..=dim as isize).contains(&s).then_some(s as usize)
}

/// One degree of a cohomology theory: `closed / exact`.
#[derive(Clone, Debug)]
pub struct CohomologySpace<T: Field> {
    dim: usize,
    degree: usize,
    quotient: Quotient<T>,
}

impl<T: Field> CohomologySpace<T> {
    pub fn new(dim: usize, degree: usize, exact: &Subspace<T>, closed: &Subspace<T>) -> Result<Self, CohomologyError> {
        let quotient = Quotient::new(exact, closed).map_err(|e| match e {
            LinalgError::NotSubspace => inconsistent("quotient", format!("boundaries not inside cycles in degree {degree}")),
            other => inconsistent("quotient", other.to_string()),
        })?;
        Ok(CohomologySpace { dim, degree, quotient })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The dimension of the cohomology group.
    pub fn rank(&self) -> usize {
        self.quotient.dim()
    }

    pub fn closed(&self) -> &Subspace<T> {
        self.quotient.space()
    }

    pub fn exact(&self) -> &Subspace<T> {
        self.quotient.sub()
    }

    pub fn representative_vectors(&self) -> &[Vec<T>] {
        self.quotient.representatives()
    }

    pub fn representatives(&self) -> Vec<Form<T>> {
        self.representative_vectors().iter().map(|v| Form::from_coords(self.dim, self.degree, v)).collect()
    }

    /// Coordinates of `[v]` for a closed coefficient vector `v`.
    pub fn class_of_vector(&self, v: &[T]) -> Result<Vec<T>, CohomologyError> {
        self.quotient.coordinates(v).map_err(|_| CohomologyError::NotClosed {
            form: Form::from_coords(self.dim, self.degree, v).render(),
        })
    }

    /// Coordinates of `[a]`; `a` must be closed.
    pub fn class_of(&self, a: &Form<T>) -> Result<Vec<T>, CohomologyError> {
        if a.is_zero() {
            return Ok(vec![T::zero(); self.rank()]);
        }
        if a.degree() != self.degree || a.dim() != self.dim {
            return Err(CohomologyError::NotClosed { form: a.render() });
        }
        self.class_of_vector(&a.to_coords())
    }

    /// The harmonic representative with the given coordinates.
    pub fn lift(&self, coords: &[T]) -> Form<T> {
        Form::from_coords(self.dim, self.degree, &self.quotient.lift(coords))
    }

    /// The classes of the vectors of a subspace of closed forms.
    pub fn classes_of(&self, closed: &Subspace<T>) -> Result<Subspace<T>, CohomologyError> {
        let mut out = Vec::with_capacity(closed.dim());
        for v in closed.basis().rows() {
            out.push(self.class_of_vector(v)?);
        }
        Ok(Subspace::span(self.rank(), out))
    }
}

/// A cohomology theory in every degree `0..=dim`.
#[derive(Clone, Debug)]
pub struct Cohomology<T: Field> {
    spaces: Vec<CohomologySpace<T>>,
}

impl<T: Field> Cohomology<T> {
    fn from_parts(
        dim: usize,
        mut part: impl FnMut(usize) -> Result<(Subspace<T>, Subspace<T>), CohomologyError>,
    ) -> Result<Self, CohomologyError> {
        let mut spaces = Vec::with_capacity(dim + 1);
        for k in 0..=dim {
            let (exact, closed) = part(k)?;
            spaces.push(CohomologySpace::new(dim, k, &exact, &closed)?);
        }
        Ok(Cohomology { spaces })
    }

    pub fn degree(&self, k: usize) -> &CohomologySpace<T> {
        &self.spaces[k]
    }

    pub fn spaces(&self) -> &[CohomologySpace<T>] {
        &self.spaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.rank()).collect()
    }
}

/// `H^k = ker d_k / im d_{k−1}`.
pub fn de_rham_cohomology<T: Field>(g: &LieAlgebra<T>) -> Result<Cohomology<T>, CohomologyError> {
    let dim = g.dim();
    let d = g.d();
    Cohomology::from_parts(dim, |k| {
        let closed = d.block(k).kernel();
        let exact = image_into(d, source_degree(k, 1, dim), binomial(dim, k));
        Ok((exact, closed))
    })
}

/// `H^k_{d^Λ} = ker d^Λ_k / im d^Λ_{k+1}`.
pub fn dlambda_cohomology<T: Field>(s: &SymplecticStructure<T>) -> Result<Cohomology<T>, CohomologyError> {
    let dim = s.dim();
    let dl = s.d_lambda();
    Cohomology::from_parts(dim, |k| {
        let closed = dl.block(k).kernel();
        let exact = image_into(dl, source_degree(k, -1, dim), binomial(dim, k));
        Ok((exact, closed))
    })
}

/// `ker d ∩ ker d^Λ` in degree `k`.
fn d_and_dlambda_closed<T: Field>(s: &SymplecticStructure<T>, k: usize) -> Subspace<T> {
    s.d().block(k).kernel().intersect(&s.d_lambda().block(k).kernel()).expect("same ambient")
}

/// `H^k_{d+d^Λ} = (ker d ∩ ker d^Λ) / im dd^Λ`.
pub fn d_plus_dlambda_cohomology<T: Field>(s: &SymplecticStructure<T>) -> Result<Cohomology<T>, CohomologyError> {
    Cohomology::from_parts(s.dim(), |k| Ok((s.dd_lambda().block(k).image(), d_and_dlambda_closed(s, k))))
}

/// `H^k_{dd^Λ} = ker dd^Λ / (im d + im d^Λ)`.
pub fn ddlambda_cohomology<T: Field>(s: &SymplecticStructure<T>) -> Result<Cohomology<T>, CohomologyError> {
    let dim = s.dim();
    Cohomology::from_parts(dim, |k| {
        let amb = binomial(dim, k);
        let im_d = image_into(s.d(), source_degree(k, 1, dim), amb);
        let im_dl = image_into(s.d_lambda(), source_degree(k, -1, dim), amb);
        Ok((im_d.sum(&im_dl).expect("same ambient"), s.dd_lambda().block(k).kernel()))
    })
}

/// `PH^k_{d+d^Λ}` computed as `(ker d ∩ ker d^Λ ∩ P) / (im dd^Λ ∩ P)` and as
/// `(ker d ∩ P) / dd^Λ(P)`.
#[derive(Clone, Debug)]
pub struct PrimitivePlus<T: Field> {
    pub by_intersection: CohomologySpace<T>,
    pub by_image: CohomologySpace<T>,
}

impl<T: Field> PrimitivePlus<T> {
    pub fn routes_agree(&self) -> bool {
        self.by_intersection.rank() == self.by_image.rank()
            && self.by_intersection.closed() == self.by_image.closed()
            && self.by_intersection.exact() == self.by_image.exact()
    }
}

pub fn primitive_ph_plus<T: Field>(s: &SymplecticStructure<T>, k: usize) -> Result<PrimitivePlus<T>, CohomologyError> {
    let dim = s.dim();
    let p = s.primitive_subspace(k);
    let closed_1 = d_and_dlambda_closed(s, k).intersect(p).expect("same ambient");
    let exact_1 = s.dd_lambda().block(k).image().intersect(p).expect("same ambient");
    let closed_2 = s.d().block(k).kernel().intersect(p).expect("same ambient");
    let exact_2 = p.map(s.dd_lambda().block(k));
    Ok(PrimitivePlus {
        by_intersection: CohomologySpace::new(dim, k, &exact_1, &closed_1)?,
        by_image: CohomologySpace::new(dim, k, &exact_2, &closed_2)?,
    })
}

/// `PH^k_d = (ker d ∩ ker d^Λ ∩ P^k) / d(P^{k−1} ∩ ker d^Λ)`.
pub fn primitive_ph_d<T: Field>(s: &SymplecticStructure<T>, k: usize) -> Result<CohomologySpace<T>, CohomologyError> {
    let dim = s.dim();
    let p = s.primitive_subspace(k);
    let closed = d_and_dlambda_closed(s, k).intersect(p).expect("same ambient");
    let exact = if k == 0 {
        Subspace::zero(1)
    } else {
        let source = s.primitive_subspace(k - 1).intersect(&s.d_lambda().block(k - 1).kernel()).expect("same ambient");
        source.map(s.d().block(k - 1))
    };
    CohomologySpace::new(dim, k, &exact, &closed)
}

/// `H^(r,s)_ω` as a subspace of the class coordinates of `H^{2r+s}`.
#[derive(Clone, Debug)]
pub struct HrsGroup<T: Field> {
    pub r: usize,
    pub s: usize,
    pub classes: Subspace<T>,
    /// Closed forms `L^r β` with `β` primitive whose classes form a basis.
    pub representatives: Vec<Form<T>>,
}

impl<T: Field> HrsGroup<T> {
    pub fn degree(&self) -> usize {
        2 * self.r + self.s
    }

    pub fn dim(&self) -> usize {
        self.classes.dim()
    }
}

/// The sum `Σ_{2r+s=k} H^(r,s)_ω` compared with `H^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionVerdict {
    pub degree: usize,
    pub summand_dims: BTreeMap<(usize, usize), usize>,
    pub sum_dim: usize,
    pub betti: usize,
    pub direct: bool,
    pub full: bool,
}

/// `L^k: H^{n−k} → H^{n+k}` for one `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzMap {
    pub k: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl LefschetzMap {
    pub fn is_isomorphism(&self) -> bool {
        self.source_dim == self.target_dim && self.rank == self.source_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HlcVerdict {
    pub maps: Vec<LefschetzMap>,
}

impl HlcVerdict {
    pub fn holds(&self) -> bool {
        self.maps.iter().all(|m| m.is_isomorphism())
    }
}

/// Kernel dimensions of `H^k_{d+d^Λ} → H^k_{dR}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DdLemmaVerdict {
    pub kernel_dims: Vec<usize>,
}

impl DdLemmaVerdict {
    pub fn holds(&self) -> bool {
        self.kernel_dims.iter().all(|&k| k == 0)
    }
}

/// The result of checking one instance of a statement known to be true.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub name: String,
    pub instance: String,
    pub holds: bool,
}

impl TheoremCheck {
    fn new(name: &str, instance: impl Into<String>, holds: bool) -> Self {
        TheoremCheck { name: name.to_string(), instance: instance.into(), holds }
    }
}

/// All cohomological data of a symplectic Lie algebra.
#[derive(Clone, Debug)]
pub struct SymplecticCohomology<'a, T: Field> {
    s: &'a SymplecticStructure<T>,
    de_rham: Cohomology<T>,
    d_lambda: Cohomology<T>,
    d_plus_d_lambda: Cohomology<T>,
    dd_lambda: Cohomology<T>,
    hrs: BTreeMap<(usize, usize), HrsGroup<T>>,
    ph_plus: Vec<PrimitivePlus<T>>,
}

impl<'a, T: Field> SymplecticCohomology<'a, T> {
    pub fn new(s: &'a SymplecticStructure<T>) -> Result<Self, CohomologyError> {
        let mut out = SymplecticCohomology {
            s,
            de_rham: de_rham_cohomology(s.algebra())?,
            d_lambda: dlambda_cohomology(s)?,
            d_plus_d_lambda: d_plus_dlambda_cohomology(s)?,
            dd_lambda: ddlambda_cohomology(s)?,
            hrs: BTreeMap::new(),
            ph_plus: Vec::new(),
        };
        let dim = s.dim();
        let mut hrs = BTreeMap::new();
        for k in 0..=dim {
            for r in 0..=k / 2 {
                hrs.insert((r, k - 2 * r), out.compute_hrs_group(r, k - 2 * r)?);
            }
        }
        out.hrs = hrs;
        out.ph_plus = (0..=dim).map(|k| primitive_ph_plus(s, k)).collect::<Result<_, _>>()?;
        Ok(out)
    }

    /// Both routes to `PH^k_{d+d^Λ}`.
    pub fn ph_plus(&self, k: usize) -> Result<&PrimitivePlus<T>, CohomologyError> {
        self.check_degree(k)?;
        Ok(&self.ph_plus[k])
    }

    pub fn structure(&self) -> &SymplecticStructure<T> {
        self.s
    }

    pub fn de_rham(&self) -> &Cohomology<T> {
        &self.de_rham
    }

    pub fn d_lambda(&self) -> &Cohomology<T> {
        &self.d_lambda
    }

    pub fn d_plus_d_lambda(&self) -> &Cohomology<T> {
        &self.d_plus_d_lambda
    }

    pub fn dd_lambda(&self) -> &Cohomology<T> {
        &self.dd_lambda
    }

    pub fn betti(&self) -> Vec<usize> {
        self.de_rham.dims()
    }

    fn check_degree(&self, k: usize) -> Result<(), CohomologyError> {
        if k > self.s.dim() {
            return Err(CohomologyError::DegreeOutOfRange { degree: k, top: self.s.dim() });
        }
        Ok(())
    }

    /// `[a]` in de Rham coordinates.
    pub fn class_of(&self, a: &Form<T>) -> Result<Vec<T>, CohomologyError> {
        self.check_degree(a.degree())?;
        self.de_rham.degree(a.degree()).class_of(a)
    }

    /// Matrix of `L^r: H^k → H^{k+2r}` in class coordinates. Asserts that
    /// `L^r` maps exact forms to exact forms.
    pub fn l_power_on_cohomology(&self, r: usize, k: usize) -> Result<Matrix<T>, CohomologyError> {
        let target = k + 2 * r;
        self.check_degree(target)?;
        let lr = self.s.l_power(r).block(k);
        let source = self.de_rham.degree(k);
        let target_space = self.de_rham.degree(target);
        for v in source.exact().basis().rows() {
            if target_space.class_of_vector(&lr.mul_vec(v))?.iter().any(|c| !c.is_zero()) {
                return Err(inconsistent("L^r on cohomology", format!("L^{r} of an exact {k}-form is not exact")));
            }
        }
        let mut columns = Vec::with_capacity(source.rank());
        for rep in source.representative_vectors() {
            columns.push(target_space.class_of_vector(&lr.mul_vec(rep))?);
        }
        Ok(Matrix::from_columns(target_space.rank(), &columns))
    }

    /// `H^(r,s)_ω = {[L^r β] : β ∈ P^s, dL^rβ = 0}`, computed from
    /// `ker d ∩ L^r P^s` before passing to classes.
    pub fn hrs_group(&self, r: usize, s: usize) -> Result<HrsGroup<T>, CohomologyError> {
        match self.hrs.get(&(r, s)) {
            Some(g) => Ok(g.clone()),
            None => self.compute_hrs_group(r, s),
        }
    }

    fn compute_hrs_group(&self, r: usize, s: usize) -> Result<HrsGroup<T>, CohomologyError> {
        let k = 2 * r + s;
        let dim = self.s.dim();
        if k > dim {
            return Ok(HrsGroup { r, s, classes: Subspace::zero(0), representatives: Vec::new() });
        }
        let space = self.de_rham.degree(k);
        let lr_p = self.s.primitive_subspace(s).map(self.s.l_power(r).block(s));
        let closed = lr_p.intersect(&self.s.d().block(k).kernel()).expect("same ambient");
        let mut classes: Subspace<T> = Subspace::zero(space.rank());
        let mut representatives = Vec::new();
        for v in closed.basis().rows() {
            let c = space.class_of_vector(v)?;
            if !classes.contains(&c) {
                classes = classes.sum(&Subspace::span(space.rank(), [c])).expect("same ambient");
                representatives.push(Form::from_coords(dim, k, v));
            }
        }
        Ok(HrsGroup { r, s, classes, representatives })
    }

    /// Every `H^(r,s)_ω` with `2r + s = k`, keyed by `(r, s)`.
    pub fn hrs_groups_in_degree(&self, k: usize) -> Result<BTreeMap<(usize, usize), HrsGroup<T>>, CohomologyError> {
        self.check_degree(k)?;
        let mut out = BTreeMap::new();
        for r in 0..=k / 2 {
            out.insert((r, k - 2 * r), self.hrs_group(r, k - 2 * r)?);
        }
        Ok(out)
    }

    pub fn decomposition_analysis(&self, k: usize) -> Result<DecompositionVerdict, CohomologyError> {
        let groups = self.hrs_groups_in_degree(k)?;
        let betti = self.de_rham.degree(k).rank();
        let mut sum = Subspace::zero(betti);
        let mut summand_dims = BTreeMap::new();
        let mut total = 0;
        for (key, g) in &groups {
            sum = sum.sum(&g.classes).expect("same ambient");
            summand_dims.insert(*key, g.dim());
            total += g.dim();
        }
        Ok(DecompositionVerdict {
            degree: k,
            summand_dims,
            sum_dim: sum.dim(),
            betti,
            direct: sum.dim() == total,
            full: sum.dim() == betti,
        })
    }

    /// `H^(r1,s1) ∩ H^(r2,s2)` inside `H^{2r1+s1}`.
    pub fn hrs_intersection(&self, a: (usize, usize), b: (usize, usize)) -> Result<Subspace<T>, CohomologyError> {
        if 2 * a.0 + a.1 != 2 * b.0 + b.1 {
            return Err(inconsistent("hrs intersection", "groups live in different degrees"));
        }
        let ga = self.hrs_group(a.0, a.1)?;
        let gb = self.hrs_group(b.0, b.1)?;
        Ok(ga.classes.intersect(&gb.classes).expect("same ambient"))
    }

    /// `L^k: H^{n−k} → H^{n+k}` for every `k ∈ 0..=n`.
    pub fn hlc_check(&self) -> Result<HlcVerdict, CohomologyError> {
        let n = self.s.n();
        let mut maps = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let m = self.l_power_on_cohomology(k, n - k)?;
            maps.push(LefschetzMap { k, source_dim: m.ncols(), target_dim: m.nrows(), rank: m.rank() });
        }
        Ok(HlcVerdict { maps })
    }

    /// Injectivity of `H_{d+d^Λ} → H_{dR}` in every degree.
    pub fn dd_lemma_check(&self) -> Result<DdLemmaVerdict, CohomologyError> {
        let mut kernel_dims = Vec::with_capacity(self.s.dim() + 1);
        for k in 0..=self.s.dim() {
            let source = self.d_plus_d_lambda.degree(k);
            let target = self.de_rham.degree(k);
            let mut columns = Vec::with_capacity(source.rank());
            for rep in source.representative_vectors() {
                columns.push(target.class_of_vector(rep)?);
            }
            let rank = Matrix::from_columns(target.rank(), &columns).rank();
            kernel_dims.push(source.rank() - rank);
        }
        Ok(DdLemmaVerdict { kernel_dims })
    }

    /// `⟨[a], [b]⟩ = top(a ∧ b)` for closed forms of complementary degree.
    pub fn cup_pairing(&self, a: &Form<T>, b: &Form<T>) -> Result<T, CohomologyError> {
        if !self.s.algebra().is_unimodular() {
            return Err(CohomologyError::NotUnimodular);
        }
        for f in [a, b] {
            if !self.s.algebra().differential(f).is_zero() {
                return Err(CohomologyError::NotClosed { form: f.render() });
            }
        }
        let w = a.wedge(b).map_err(|e| inconsistent("cup pairing", e.to_string()))?;
        if w.is_zero() {
            return Ok(T::zero());
        }
        if w.degree() != self.s.dim() {
            return Err(inconsistent("cup pairing", "degrees are not complementary"));
        }
        Ok(w.top_coefficient().expect("top degree"))
    }

    /// Pairing matrix between harmonic representatives of `H^k` and `H^{2n−k}`.
    pub fn cup_pairing_matrix(&self, k: usize) -> Result<Matrix<T>, CohomologyError> {
        self.check_degree(k)?;
        let left = self.de_rham.degree(k).representatives();
        let right = self.de_rham.degree(self.s.dim() - k).representatives();
        let mut rows = Vec::with_capacity(left.len());
        for a in &left {
            let mut row = Vec::with_capacity(right.len());
            for b in &right {
                row.push(self.cup_pairing(a, b)?);
            }
            rows.push(row);
        }
        Ok(Matrix::from_rows(right.len(), rows))
    }

    /// `H^(r,s) = L^r H^(0,s)` for every `2r + s ≤ n`.
    pub fn lr_equals_hr_check(&self) -> Result<Vec<TheoremCheck>, CohomologyError> {
        let n = self.s.n();
        let mut out = Vec::new();
        for r in 1..=n / 2 {
            for s in 0..=(n - 2 * r) {
                let lhs = self.hrs_group(r, s)?.classes;
                let base = self.hrs_group(0, s)?.classes;
                let image = base.map(&self.l_power_on_cohomology(r, s)?);
                out.push(TheoremCheck::new("H^(r,s) = L^r H^(0,s)", format!("(r,s) = ({r},{s})"), lhs == image));
            }
        }
        Ok(out)
    }

    /// `H^(k,0) ∩ H^(0,2k) = {0}` for `1 ≤ k ≤ ⌊n/2⌋`.
    pub fn intersection_remark_check(&self) -> Result<Vec<TheoremCheck>, CohomologyError> {
        let mut out = Vec::new();
        for k in 1..=self.s.n() / 2 {
            let meet = self.hrs_intersection((k, 0), (0, 2 * k))?;
            out.push(TheoremCheck::new("H^(k,0) ∩ H^(0,2k) = 0", format!("k = {k}"), meet.is_zero()));
        }
        Ok(out)
    }

    /// Every statement that holds for all symplectic Lie algebras in the
    /// tested class (unimodular where duality is involved).
    pub fn theorem_checks(&self) -> Result<Vec<TheoremCheck>, CohomologyError> {
        let dim = self.s.dim();
        let n = self.s.n();
        let unimodular = self.s.algebra().is_unimodular();
        let betti = self.betti();
        let mut out = Vec::new();

        let h2 = self.decomposition_analysis(2.min(dim))?;
        out.push(TheoremCheck::new("H² = H^(1,0) ⊕ H^(0,2)", "k = 2", h2.full && h2.direct));
        out.extend(self.intersection_remark_check()?);
        out.extend(self.lr_equals_hr_check()?);
        for r in 1..=n / 2 {
            let g = self.hrs_group(r, 0)?;
            let omega_r = self.s.omega().wedge_power(r);
            let spanned = g.dim() == 1 && g.classes.contains(&self.class_of(&omega_r)?);
            out.push(TheoremCheck::new("H^(r,0) = ⟨[ω^r]⟩", format!("r = {r}"), spanned));
        }

        let hlc = self.hlc_check()?.holds();
        let dd = self.dd_lemma_check()?.holds();
        out.push(TheoremCheck::new("HLC ⇔ dd^Λ-lemma", format!("hlc = {hlc}, dd^Λ-lemma = {dd}"), hlc == dd));

        let dl = self.d_lambda.dims();
        let dpl = self.d_plus_d_lambda.dims();
        let ddl = self.dd_lambda.dims();
        for k in 0..=dim {
            out.push(TheoremCheck::new("dim H^k_{d^Λ} = b_{2n−k}", format!("k = {k}"), dl[k] == betti[dim - k]));
            out.push(TheoremCheck::new(
                "dim H^k_{dd^Λ} = dim H^{2n−k}_{d+d^Λ}",
                format!("k = {k}"),
                ddl[k] == dpl[dim - k],
            ));
            let ph = &self.ph_plus[k];
            out.push(TheoremCheck::new("PH_{d+d^Λ} routes agree", format!("k = {k}"), ph.routes_agree()));
            let lefschetz_sum: usize = (k.saturating_sub(n)..=k / 2)
                .map(|r| self.ph_plus[k - 2 * r].by_intersection.rank())
                .sum();
            out.push(TheoremCheck::new(
                "H^k_{d+d^Λ} = ⊕ L^r PH^{k−2r}_{d+d^Λ}",
                format!("k = {k}"),
                lefschetz_sum == dpl[k],
            ));
        }
        for k in 0..=n {
            let m = self.l_power_on_d_plus_dlambda(k)?;
            let iso = m.nrows() == m.ncols() && m.rank() == m.ncols();
            out.push(TheoremCheck::new("L^k: H^{n−k}_{d+d^Λ} ≅ H^{n+k}_{d+d^Λ}", format!("k = {k}"), iso));
        }

        if unimodular {
            for k in 0..=dim {
                out.push(TheoremCheck::new("b_k = b_{2n−k}", format!("k = {k}"), betti[k] == betti[dim - k]));
                let m = self.cup_pairing_matrix(k)?;
                let nondegenerate = m.nrows() == m.ncols() && m.rank() == m.nrows();
                out.push(TheoremCheck::new("cup pairing non-degenerate", format!("k = {k}"), nondegenerate));
                let full = self.decomposition_analysis(k)?.full;
                let dual_direct = self.decomposition_analysis(dim - k)?.direct;
                out.push(TheoremCheck::new(
                    "full in degree k ⇒ direct in degree 2n−k",
                    format!("k = {k}"),
                    !full || dual_direct,
                ));
            }
        }

        if hlc {
            for k in 0..=dim {
                let v = self.decomposition_analysis(k)?;
                out.push(TheoremCheck::new("HLC ⇒ H^k = ⊕ H^(r,k−2r)", format!("k = {k}"), v.full && v.direct));
                let via_l: usize = (0..=k / 2)
                    .map(|r| {
                        let base = self.hrs_group(0, k - 2 * r)?.classes;
                        Ok(base.map(&self.l_power_on_cohomology(r, k - 2 * r)?).dim())
                    })
                    .sum::<Result<usize, CohomologyError>>()?;
                out.push(TheoremCheck::new("HLC ⇒ b_k = Σ dim L^r H^(0,k−2r)", format!("k = {k}"), via_l == betti[k]));
                let phd = primitive_ph_d(self.s, k)?.rank();
                let h0s = self.hrs_group(0, k)?.dim();
                out.push(TheoremCheck::new("HLC ⇒ dim PH^k_d = dim H^(0,k)", format!("k = {k}"), phd == h0s));
            }
        }
        Ok(out)
    }

    /// Matrix of `L^k: H^{n−k}_{d+d^Λ} → H^{n+k}_{d+d^Λ}`.
    pub fn l_power_on_d_plus_dlambda(&self, k: usize) -> Result<Matrix<T>, CohomologyError> {
        let n = self.s.n();
        let source = self.d_plus_d_lambda.degree(n - k);
        let target = self.d_plus_d_lambda.degree(n + k);
        let lk = self.s.l_power(k).block(n - k);
        let mut columns = Vec::with_capacity(source.rank());
        for rep in source.representative_vectors() {
            columns.push(target.class_of_vector(&lk.mul_vec(rep))?);
        }
        Ok(Matrix::from_columns(target.rank(), &columns))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_form;
    use crate::Rational;

    fn structure(eqs: &str, omega: &str) -> SymplecticStructure<Rational> {
        let g = LieAlgebra::parse(eqs, None).unwrap();
        let dim = g.dim();
        SymplecticStructure::new(g, parse_form(omega, dim).unwrap()).unwrap()
    }

    #[test]
    fn torus_is_binomial() {
        let s = structure("0^6", "14+25+36");
        let c = SymplecticCohomology::new(&s).unwrap();
        assert_eq!(c.betti(), vec![1, 6, 15, 20, 15, 6, 1]);
        assert_eq!(c.d_lambda().dims(), c.betti());
        assert_eq!(c.d_plus_d_lambda().dims(), c.betti());
        assert_eq!(c.dd_lambda().dims(), c.betti());
        assert!(c.hlc_check().unwrap().holds());
        assert!(c.dd_lemma_check().unwrap().holds());
        assert_eq!(primitive_ph_plus(&s, 1).unwrap().by_image.rank(), 6);
        assert!(c.theorem_checks().unwrap().iter().all(|t| t.holds));
    }

    #[test]
    fn example_one() {
        let s = structure("0,0,0,12,14-23,15+34", "16+35+24");
        let c = SymplecticCohomology::new(&s).unwrap();
        assert_eq!(c.betti(), vec![1, 3, 4, 4, 4, 3, 1]);
        let h1: Vec<String> = c.de_rham().degree(1).representatives().iter().map(|f| f.render()).collect();
        assert_eq!(h1, ["e1", "e2", "e3"]);
        assert_eq!(c.hrs_group(1, 0).unwrap().dim(), 1);
        assert_eq!(c.hrs_group(0, 2).unwrap().dim(), 3);
        let v2 = c.decomposition_analysis(2).unwrap();
        assert!(v2.full && v2.direct);
        let v3 = c.decomposition_analysis(3).unwrap();
        assert!(!v3.full && !v3.direct);
        let e136 = c.class_of(&parse_form("136", 6).unwrap()).unwrap();
        let meet = c.hrs_intersection((1, 1), (0, 3)).unwrap();
        assert!(meet.contains(&e136));
        assert!(!c.hlc_check().unwrap().holds());
        assert!(!c.dd_lemma_check().unwrap().holds());
        for t in c.theorem_checks().unwrap() {
            assert!(t.holds, "{} fails at {}", t.name, t.instance);
        }
    }

    #[test]
    fn class_of_exact_is_zero_and_non_closed_is_rejected() {
        let s = structure("0,0,0,12,14-23,15+34", "16+35+24");
        let c = SymplecticCohomology::new(&s).unwrap();
        let exact = s.algebra().differential(&parse_form("26+45", 6).unwrap());
        assert!(c.class_of(&exact).unwrap().iter().all(|x| x == &Rational::from_int(0)));
        assert!(matches!(c.class_of(&parse_form("4", 6).unwrap()), Err(CohomologyError::NotClosed { .. })));
    }

    #[test]
    fn cup_pairing_needs_unimodular() {
        let g = LieAlgebra::<Rational>::parse("0,12,0,0", None).unwrap();
        let s = SymplecticStructure::new(g, parse_form("12+34", 4).unwrap()).unwrap();
        assert!(!s.algebra().is_unimodular());
        let c = SymplecticCohomology::new(&s).unwrap();
        assert!(matches!(c.cup_pairing(&Form::one(4), s.omega()), Err(CohomologyError::NotUnimodular)));
    }
}
