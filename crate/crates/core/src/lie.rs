//! Lie algebras presented by structure equations, and their
//! Chevalley–Eilenberg complex `(∧•g*, d)`.
//!
//! The structure equations give `d` on `g*`; with `(dα)(x, y) = −α([x, y])`
//! this means `de^k = −Σ_{i<j} c^k_{ij} e^{ij}` where `[e_i, e_j] = Σ_k c^k_{ij} e_k`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exterior::{monomial_basis, Form, GradedOperator, MultiIndex};
use crate::linalg::{Matrix, Subspace};
use crate::notation::{self, ParseError};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("d e^{index} must be a 2-form in dimension {dim}")]
    NotATwoForm { index: usize, dim: usize },
    #[error("Jacobi identity fails: d^2 e^{witness} = {image} (degree {degree})")]
    JacobiViolation { degree: usize, witness: String, image: String },
}

/// The list `de^1, …, de^m` together with the text it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureEquations<T: Field> {
    dim: usize,
    differentials: Vec<Form<T>>,
    source: String,
}

impl<T: Field> StructureEquations<T> {
    pub fn parse(text: &str, dim: Option<usize>) -> Result<Self, ParseError> {
        let differentials = notation::parse_differentials(text, dim)?;
        Ok(StructureEquations { dim: differentials.len(), differentials, source: text.to_string() })
    }

    pub fn from_differentials(differentials: Vec<Form<T>>) -> Result<Self, LieError> {
        let dim = differentials.len();
        for (i, f) in differentials.iter().enumerate() {
            if f.dim() != dim || (!f.is_zero() && f.degree() != 2) {
                return Err(LieError::NotATwoForm { index: i + 1, dim });
            }
        }
        let differentials: Vec<Form<T>> = differentials
            .into_iter()
            .map(|f| if f.is_zero() { Form::zero(dim, 2) } else { f })
            .collect();
        let source = notation::render_differentials(&differentials);
        Ok(StructureEquations { dim, differentials, source })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `d e^{i+1}` (0-based `i`).
    pub fn differential(&self, i: usize) -> &Form<T> {
        &self.differentials[i]
    }

    pub fn differentials(&self) -> &[Form<T>] {
        &self.differentials
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Canonical text, e.g. `0,0,0,12,14-23,15+34`.
    pub fn render(&self) -> String {
        notation::render_differentials(&self.differentials)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieProperties {
    pub nilpotent: bool,
    pub solvable: bool,
    pub unimodular: bool,
}

/// A Lie algebra with its Chevalley–Eilenberg differential in every degree.
#[derive(Clone, Debug)]
pub struct LieAlgebra<T: Field> {
    structure: StructureEquations<T>,
    d: GradedOperator<T>,
    /// `c^k_{ij}` at `[(i * dim + j) * dim + k]`.
    constants: Vec<T>,
}

impl<T: Field> LieAlgebra<T> {
    pub fn parse(text: &str, dim: Option<usize>) -> Result<Self, LieError> {
        Self::new(StructureEquations::parse(text, dim)?)
    }

    /// Extends `d` to all degrees as an odd derivation and checks `d² = 0`.
    pub fn new(structure: StructureEquations<T>) -> Result<Self, LieError> {
        let dim = structure.dim;
        let d = GradedOperator::from_fn(dim, 1, |m| derivation_on_monomial(&structure, m));
        for k in 0..dim.saturating_sub(1) {
            let dd = d.block(k + 1) * d.block(k);
            if let Some(col) = (0..dd.ncols()).find(|&c| dd.column(c).iter().any(|x| !x.is_zero())) {
                let witness = monomial_basis(dim, k)[col];
                let image = Form::from_coords(dim, k + 2, &dd.column(col));
                return Err(LieError::JacobiViolation {
                    degree: k,
                    witness: witness.render(dim),
                    image: image.render(),
                });
            }
        }
        let mut constants = vec![T::zero(); dim * dim * dim];
        for (k, de) in structure.differentials.iter().enumerate() {
            for (idx, c) in de.terms() {
                let mut it = idx.indices();
                let (i, j) = (it.next().unwrap(), it.next().unwrap());
                constants[(i * dim + j) * dim + k] = -c.clone();
                constants[(j * dim + i) * dim + k] = c.clone();
            }
        }
        Ok(LieAlgebra { structure, d, constants })
    }

    pub fn dim(&self) -> usize {
        self.structure.dim
    }

    pub fn structure(&self) -> &StructureEquations<T> {
        &self.structure
    }

    pub fn d(&self) -> &GradedOperator<T> {
        &self.d
    }

    pub fn differential(&self, form: &Form<T>) -> Form<T> {
        self.d.apply(form)
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.differentials.iter().all(|f| f.is_zero())
    }

    /// `c^k_{ij}`, the `e_k` component of `[e_i, e_j]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &T {
        let n = self.dim();
        &self.constants[(i * n + j) * n + k]
    }

    pub fn bracket(&self, x: &[T], y: &[T]) -> Vec<T> {
        let n = self.dim();
        let mut out = vec![T::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        *o = o.clone() + c.clone() * xi.clone() * yj.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_{e_i}` acting on column vectors.
    pub fn ad(&self, i: usize) -> Matrix<T> {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.structure_constant(i, j, k).clone())
    }

    fn bracket_span(&self, a: &Subspace<T>, b: &Subspace<T>) -> Subspace<T> {
        let av = a.basis_vectors();
        let bv = b.basis_vectors();
        let vectors = av.iter().flat_map(|x| bv.iter().map(move |y| (x, y))).map(|(x, y)| self.bracket(x, y));
        Subspace::span(self.dim(), vectors)
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …` until it stabilises.
    pub fn lower_central_series(&self) -> Vec<Subspace<T>> {
        let full = Subspace::full(self.dim());
        let mut series = vec![full.clone()];
        loop {
            let next = self.bracket_span(&full, series.last().unwrap());
            if next.dim() == series.last().unwrap().dim() {
                return series;
            }
            series.push(next);
        }
    }

    /// `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ …` until it stabilises.
    pub fn derived_series(&self) -> Vec<Subspace<T>> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(last, last);
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_unimodular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).fold(T::zero(), |acc, j| acc + self.structure_constant(i, j, j).clone()).is_zero())
    }

    pub fn properties(&self) -> LieProperties {
        LieProperties {
            nilpotent: self.lower_central_series().last().unwrap().is_zero(),
            solvable: self.derived_series().last().unwrap().is_zero(),
            unimodular: self.is_unimodular(),
        }
    }
}

/// `d(e^{i1…ik}) = Σ_p (−1)^p e^{i1…i(p−1)} ∧ de^{ip} ∧ e^{i(p+1)…ik}`.
fn derivation_on_monomial<T: Field>(s: &StructureEquations<T>, m: MultiIndex) -> Form<T> {
    let dim = s.dim;
    let indices: Vec<usize> = m.indices().collect();
    let mut out = Form::zero(dim, m.degree() + 1);
    for (p, &i) in indices.iter().enumerate() {
        let de = &s.differentials[i];
        if de.is_zero() {
            continue;
        }
        let prefix = MultiIndex::from_indices(&indices[..p]).unwrap();
        let suffix = MultiIndex::from_indices(&indices[p + 1..]).unwrap();
        let sign = if p % 2 == 0 { T::one() } else { -T::one() };
        let term = Form::monomial(dim, prefix, sign)
            .wedge(de)
            .and_then(|f| f.wedge(&Form::monomial(dim, suffix, T::one())))
            .expect("same dimension");
        out = out.try_add(&term).expect("homogeneous");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn e(dim: usize, idx: &[usize]) -> Form<Rational> {
        Form::basis(dim, idx)
    }

    #[test]
    fn abelian_has_zero_differential() {
        let g = LieAlgebra::<Rational>::parse("0^6", None).unwrap();
        assert!(g.d().is_zero());
        assert_eq!(g.properties(), LieProperties { nilpotent: true, solvable: true, unimodular: true });
    }

    #[test]
    fn derivation_rule_on_two_form() {
        let g = LieAlgebra::<Rational>::parse("0,0,0,12,14-23,15+34", None).unwrap();
        // d(e56) = de5∧e6 − e5∧de6
        let de5 = &e(6, &[1, 4]) - &e(6, &[2, 3]);
        let de6 = &e(6, &[1, 5]) + &e(6, &[3, 4]);
        let expected = &de5.wedge(&e(6, &[6])).unwrap() - &e(6, &[5]).wedge(&de6).unwrap();
        assert_eq!(g.differential(&e(6, &[5, 6])), expected);
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // d(de1) = d(e34) = −e3∧e12 ≠ 0.
        let err = LieAlgebra::<Rational>::parse("34,0,0,12", None).unwrap_err();
        assert!(matches!(err, LieError::JacobiViolation { degree: 1, .. }), "{err:?}");
    }

    #[test]
    fn small_nilpotent_algebra() {
        let g = LieAlgebra::<Rational>::parse("0,0,12,13", Some(4)).unwrap();
        assert!(g.properties().nilpotent);
        assert_eq!(g.lower_central_series().iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![4, 2, 1, 0]);
    }

    #[test]
    fn bracket_sign_convention() {
        // de3 = e12  ⇒  c^3_{12} = −1, i.e. [e1, e2] = −e3.
        let g = LieAlgebra::<Rational>::parse("0,0,12", None).unwrap();
        let q = |n| Rational::from_int(n);
        assert_eq!(g.bracket(&[q(1), q(0), q(0)], &[q(0), q(1), q(0)]), vec![q(0), q(0), q(-1)]);
        assert_eq!(g.bracket(&[q(0), q(1), q(0)], &[q(1), q(0), q(0)]), vec![q(0), q(0), q(1)]);
    }

    #[test]
    fn solvable_examples() {
        let ex1 = LieAlgebra::<Rational>::parse("0,0,0,12,14-23,15+34", None).unwrap();
        assert_eq!(ex1.properties(), LieProperties { nilpotent: true, solvable: true, unimodular: true });
        let ex2 = LieAlgebra::<Rational>::parse("-13,23,0,-56,46,0", None).unwrap();
        assert_eq!(ex2.properties(), LieProperties { nilpotent: false, solvable: true, unimodular: true });
        let aff = LieAlgebra::<Rational>::parse("0,-12", None).unwrap();
        assert_eq!(aff.properties(), LieProperties { nilpotent: false, solvable: true, unimodular: false });
    }

    #[test]
    fn render_is_canonical() {
        let s = StructureEquations::<Rational>::parse("(0^3, 12, -23+14, 43+15)", None).unwrap();
        assert_eq!(s.render(), "0,0,0,12,14-23,15-34");
        let again = StructureEquations::<Rational>::parse(&s.render(), None).unwrap();
        assert_eq!(again.render(), s.render());
    }
}
