//! Symplectic linear algebra on the invariant complex: the `sl(2)` triple
//! `⟨L, Λ, H⟩`, the symplectic star, `d^Λ`, primitive forms and the
//! Lefschetz decomposition.
//!
//! Conventions. `W_ij = ω(e_i, e_j)`. The pairing on 1-forms is
//! `ω^{-1}(α, β) = ω(I^{-1}α, I^{-1}β)` with `I(v) = ω(v, ·)`, which in
//! coordinates is the matrix `G = (W^{-1})^T`. The Poisson bivector is
//! `Π = Σ_{i<j} G_ij e_i ∧ e_j` and `Λ = −ι_Π`. With these choices `Λω = n`,
//! which construction asserts together with the rest of the `sl(2)` relations.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exterior::{monomial_basis, Bivector, Form, GradedOperator, MultiIndex};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{factorial, Field};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("a symplectic form needs an even dimension, got {0}")]
    OddDimension(usize),
    #[error("form has dimension {found}, algebra has dimension {expected}")]
    DimMismatch { expected: usize, found: usize },
    #[error("ω must be a 2-form, got degree {0}")]
    WrongDegree(usize),
    #[error("ω is not closed: dω = {witness}")]
    NotClosed { witness: String },
    #[error("ω is degenerate: ω^{n} = 0")]
    Degenerate { n: usize },
    #[error("internal inconsistency in {check}: {detail}")]
    Inconsistent { check: String, detail: String },
}

impl SymplecticError {
    fn inconsistent(check: &str, detail: impl Into<String>) -> Self {
        SymplecticError::Inconsistent { check: check.to_string(), detail: detail.into() }
    }
}

/// A validated symplectic form on a Lie algebra, with every operator block
/// materialized.
#[derive(Clone, Debug)]
pub struct SymplecticStructure<T: Field> {
    algebra: LieAlgebra<T>,
    omega: Form<T>,
    n: usize,
    gram: Matrix<T>,
    gram_inv: Matrix<T>,
    pairing: Matrix<T>,
    pi: Bivector<T>,
    volume: T,
    l: GradedOperator<T>,
    lambda: GradedOperator<T>,
    h: GradedOperator<T>,
    /// `⋆` on degree `k`, a map `∧^k → ∧^{2n−k}`.
    star: Vec<Matrix<T>>,
    d_lambda: GradedOperator<T>,
    d_lambda_via_star: GradedOperator<T>,
    dd_lambda: GradedOperator<T>,
    l_powers: Vec<GradedOperator<T>>,
    primitive: Vec<Subspace<T>>,
    lefschetz: Vec<LefschetzBasis<T>>,
}

/// The basis of `∧^k` adapted to `⊕_r L^r P^{k−2r}`, for the linear-solve
/// route of the decomposition.
#[derive(Clone, Debug)]
struct LefschetzBasis<T: Field> {
    /// `(r, number of columns)` blocks in column order.
    blocks: Vec<(usize, usize)>,
    /// Primitive basis vectors per block.
    primitives: Vec<Vec<Vec<T>>>,
    inverse: Matrix<T>,
}

/// `A = Σ_r (1/r!) L^r B^{(k−2r)}` with each `B` primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzComponents<T: Field> {
    pub degree: usize,
    /// `r ↦ B^{(k−2r)}`.
    pub components: BTreeMap<usize, Form<T>>,
    /// Whether the closed coefficient formula matched the linear-solve route.
    /// When it does not, the components come from the linear solve.
    pub formula_agrees: bool,
}

impl<T: Field> LefschetzComponents<T> {
    pub fn component(&self, r: usize) -> Option<&Form<T>> {
        self.components.get(&r)
    }
}

/// One entry of an operator identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub group: String,
    pub name: String,
    pub holds: bool,
}

/// `a_{r,ℓ,(n,k)} = (−1)^ℓ (n−k+2r+1)² Π_{i=0}^{r} 1/(n−k+2r+1−i) Π_{j=0}^{ℓ} 1/(n−k+2r+1+j)`.
pub fn lefschetz_coefficient<T: Field>(r: usize, l: usize, n: usize, k: usize) -> Result<T, SymplecticError> {
    let base = n as i64 - k as i64 + 2 * r as i64 + 1;
    let mut acc = T::from_int(base) * T::from_int(base);
    for i in 0..=r as i64 {
        let den = base - i;
        if den == 0 {
            return Err(SymplecticError::inconsistent(
                "lefschetz coefficient",
                format!("zero denominator at r={r}, l={l}, n={n}, k={k}"),
            ));
        }
        acc = acc / T::from_int(den);
    }
    for j in 0..=l as i64 {
        let den = base + j;
        if den == 0 {
            return Err(SymplecticError::inconsistent(
                "lefschetz coefficient",
                format!("zero denominator at r={r}, l={l}, n={n}, k={k}"),
            ));
        }
        acc = acc / T::from_int(den);
    }
    Ok(if l % 2 == 1 { -acc } else { acc })
}

fn sign<T: Field>(odd: bool) -> T {
    if odd {
        -T::one()
    } else {
        T::one()
    }
}

impl<T: Field> SymplecticStructure<T> {
    /// Checks that `omega` is a closed non-degenerate 2-form on `algebra` and
    /// builds every operator.
    pub fn new(algebra: LieAlgebra<T>, omega: Form<T>) -> Result<Self, SymplecticError> {
        Self::build(algebra, omega, false)
    }

    /// Builds with the opposite sign for `Π`, which must be rejected by the
    /// construction-time checks.
    #[doc(hidden)]
    pub fn with_flipped_poisson_sign(algebra: LieAlgebra<T>, omega: Form<T>) -> Result<Self, SymplecticError> {
        Self::build(algebra, omega, true)
    }

    fn build(algebra: LieAlgebra<T>, omega: Form<T>, flip: bool) -> Result<Self, SymplecticError> {
        let dim = algebra.dim();
        if dim % 2 == 1 {
            return Err(SymplecticError::OddDimension(dim));
        }
        if omega.dim() != dim {
            return Err(SymplecticError::DimMismatch { expected: dim, found: omega.dim() });
        }
        let n = dim / 2;
        if omega.is_zero() {
            return Err(SymplecticError::Degenerate { n });
        }
        if omega.degree() != 2 {
            return Err(SymplecticError::WrongDegree(omega.degree()));
        }
        let d_omega = algebra.differential(&omega);
        if !d_omega.is_zero() {
            return Err(SymplecticError::NotClosed { witness: d_omega.render() });
        }
        let volume = omega.wedge_power(n).top_coefficient().expect("top degree");
        if volume.is_zero() {
            return Err(SymplecticError::Degenerate { n });
        }

        let gram = Matrix::from_fn(dim, dim, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => omega.coefficient(MultiIndex::from_indices(&[i, j]).unwrap()),
            std::cmp::Ordering::Greater => -omega.coefficient(MultiIndex::from_indices(&[j, i]).unwrap()),
            std::cmp::Ordering::Equal => T::zero(),
        });
        let gram_inv = gram.inverse().ok_or_else(|| SymplecticError::inconsistent("ω", "ω^n ≠ 0 but W is singular"))?;
        let pairing = gram_inv.transpose();
        let pi = Bivector::from_antisymmetric(&pairing);
        let pi = if flip { pi.scale(&-T::one()) } else { pi };

        let l = GradedOperator::from_fn(dim, 2, |m| {
            Form::monomial(dim, m, T::one()).wedge(&omega).expect("same dimension")
        });
        let lambda = GradedOperator::from_fn(dim, -2, |m| {
            let c = Form::monomial(dim, m, T::one()).contract(&pi).expect("same dimension");
            -&c
        });
        let h = GradedOperator::diagonal(dim, |k| T::from_int(n as i64 - k as i64));

        // Liouville normalization: ⋆⋆ = id needs ω^n/n! on the right-hand side.
        let star = star_blocks(dim, &pairing, &(volume.clone() / factorial::<T>(n)));
        let d = algebra.d().clone();
        let d_lambda = d.commutator(&lambda);
        let mut blocks = vec![Matrix::zeros(0, 1)];
        for k in 1..=dim {
            let b = &(&star[dim - k + 1] * d.block(dim - k)) * &star[k];
            blocks.push(b.scale(&sign(k % 2 == 1)));
        }
        let d_lambda_via_star = GradedOperator::from_blocks(dim, -1, blocks);

        let lambda_omega = lambda.apply(&omega);
        if lambda_omega != Form::scalar(dim, T::from_int(n as i64)) {
            return Err(SymplecticError::inconsistent(
                "Λω = n",
                format!("Λω = {} but n = {n}", lambda_omega.render()),
            ));
        }
        let sl2 = [
            ("[Λ,L] = H", lambda.commutator(&l), h.clone()),
            ("[H,L] = −2L", h.commutator(&l), l.scale(&T::from_int(-2))),
            ("[H,Λ] = 2Λ", h.commutator(&lambda), lambda.scale(&T::from_int(2))),
            ("dΛ − Λd = (−1)^k ⋆d⋆", d_lambda.clone(), d_lambda_via_star.clone()),
        ];
        for (name, lhs, rhs) in &sl2 {
            if let Some(k) = lhs.first_difference(rhs) {
                return Err(SymplecticError::inconsistent(name, format!("fails on degree {k}")));
            }
        }
        if let Some(k) = (0..=dim).find(|&k| &star[dim - k] * &star[k] != Matrix::identity(star[k].ncols())) {
            return Err(SymplecticError::inconsistent("⋆⋆ = id", format!("fails on degree {k}")));
        }
        if let Some(k) = (2..=dim).find(|&k| star_conjugate(&star, &l, k) != *lambda.block(k)) {
            return Err(SymplecticError::inconsistent("Λ = ⋆L⋆", format!("fails on degree {k}")));
        }
        let dd_lambda = d.compose(&d_lambda);

        let mut l_powers = vec![GradedOperator::identity(dim)];
        for r in 1..=n + 1 {
            let next = l.compose(&l_powers[r - 1]);
            l_powers.push(next);
        }

        let mut primitive = Vec::with_capacity(dim + 1);
        for k in 0..=dim {
            let p = lambda.block(k).kernel();
            let expected = if k <= n { l_powers[n - k + 1].block(k).kernel() } else { Subspace::zero(p.ambient_dim()) };
            if p != expected {
                return Err(SymplecticError::inconsistent(
                    "ker Λ = ker L^(n−k+1)",
                    format!("primitive spaces differ on degree {k}"),
                ));
            }
            primitive.push(p);
        }

        let mut lefschetz = Vec::with_capacity(dim + 1);
        for k in 0..=dim {
            lefschetz.push(lefschetz_basis(dim, n, k, &primitive, &l_powers)?);
        }

        Ok(SymplecticStructure {
            algebra,
            omega,
            n,
            gram,
            gram_inv,
            pairing,
            pi,
            volume,
            l,
            lambda,
            h,
            star,
            d_lambda,
            d_lambda_via_star,
            dd_lambda,
            l_powers,
            primitive,
            lefschetz,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra<T> {
        &self.algebra
    }

    pub fn omega(&self) -> &Form<T> {
        &self.omega
    }

    /// Half the dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// `W_ij = ω(e_i, e_j)`.
    pub fn gram(&self) -> &Matrix<T> {
        &self.gram
    }

    pub fn gram_inverse(&self) -> &Matrix<T> {
        &self.gram_inv
    }

    /// `ω^{-1}(e^i, e^j)`.
    pub fn pairing_matrix(&self) -> &Matrix<T> {
        &self.pairing
    }

    pub fn poisson(&self) -> &Bivector<T> {
        &self.pi
    }

    /// Top coefficient of `ω^n`.
    pub fn volume(&self) -> &T {
        &self.volume
    }

    pub fn d(&self) -> &GradedOperator<T> {
        self.algebra.d()
    }

    pub fn l(&self) -> &GradedOperator<T> {
        &self.l
    }

    pub fn lambda(&self) -> &GradedOperator<T> {
        &self.lambda
    }

    pub fn h(&self) -> &GradedOperator<T> {
        &self.h
    }

    /// `L^r` for `r ≤ n + 1`; higher powers vanish in every degree.
    pub fn l_power(&self, r: usize) -> &GradedOperator<T> {
        assert!(r <= self.n + 1, "L^{r} vanishes identically for r > n + 1");
        &self.l_powers[r]
    }

    /// Matrix of `⋆: ∧^k → ∧^{2n−k}`.
    pub fn star_block(&self, k: usize) -> &Matrix<T> {
        &self.star[k]
    }

    pub fn d_lambda(&self) -> &GradedOperator<T> {
        &self.d_lambda
    }

    /// `d^Λ` assembled as `(−1)^{k+1} ⋆ d ⋆`; equal to [`Self::d_lambda`].
    pub fn d_lambda_via_star(&self) -> &GradedOperator<T> {
        &self.d_lambda_via_star
    }

    /// `d ∘ d^Λ`.
    pub fn dd_lambda(&self) -> &GradedOperator<T> {
        &self.dd_lambda
    }

    pub fn op_l(&self, a: &Form<T>) -> Form<T> {
        self.l.apply(a)
    }

    pub fn op_lambda(&self, a: &Form<T>) -> Form<T> {
        self.lambda.apply(a)
    }

    pub fn op_h(&self, a: &Form<T>) -> Form<T> {
        self.h.apply(a)
    }

    pub fn symplectic_star(&self, a: &Form<T>) -> Form<T> {
        let k = a.degree();
        let target = self.dim() - k;
        if a.is_zero() {
            return Form::zero(self.dim(), target);
        }
        Form::from_coords(self.dim(), target, &self.star[k].mul_vec(&a.to_coords()))
    }

    pub fn apply_d_lambda(&self, a: &Form<T>) -> Form<T> {
        self.d_lambda.apply(a)
    }

    /// `(ω^{-1})^k(e^I, e^J) = det(ω^{-1}(e^{i_a}, e^{j_b}))`.
    pub fn pairing(&self, a: &Form<T>, b: &Form<T>) -> T {
        if a.degree() != b.degree() {
            return T::zero();
        }
        let mut acc = T::zero();
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                acc = acc + x.clone() * y.clone() * monomial_pairing(&self.pairing, *i, *j);
            }
        }
        acc
    }

    /// `P∧^k = ker Λ` as a subspace of coefficient vectors.
    pub fn primitive_subspace(&self, k: usize) -> &Subspace<T> {
        &self.primitive[k]
    }

    pub fn is_primitive(&self, a: &Form<T>) -> bool {
        self.op_lambda(a).is_zero()
    }

    /// Lefschetz decomposition via the closed coefficient formula, checked
    /// against the linear-solve route.
    pub fn lefschetz_decompose(&self, a: &Form<T>) -> Result<LefschetzComponents<T>, SymplecticError> {
        let k = a.degree();
        let dim = self.dim();
        let n = self.n;
        // Λ^j A for j = 0..=k/2.
        let mut lambda_powers = vec![a.clone()];
        for j in 1..=k / 2 {
            let next = self.lambda.apply(&lambda_powers[j - 1]);
            lambda_powers.push(next);
        }
        let mut components = BTreeMap::new();
        for r in k.saturating_sub(n)..=k / 2 {
            let mut b = Form::zero(dim, k - 2 * r);
            for l in 0..=(k / 2 - r) {
                let coeff: T = lefschetz_coefficient(r, l, n, k)?;
                let term = self.l_powers[l].apply(&lambda_powers[r + l]);
                let scale = coeff / factorial::<T>(l);
                b = b.try_add(&term.scale(&scale)).expect("same degree");
            }
            components.insert(r, b);
        }
        let formula = LefschetzComponents { degree: k, components, formula_agrees: true };
        let oracle = self.lefschetz_decompose_by_solve(a);
        if formula.components == oracle.components {
            Ok(formula)
        } else {
            Ok(LefschetzComponents { formula_agrees: false, ..oracle })
        }
    }

    /// Lefschetz decomposition by solving in a basis adapted to
    /// `⊕_r L^r P^{k−2r}`.
    pub fn lefschetz_decompose_by_solve(&self, a: &Form<T>) -> LefschetzComponents<T> {
        let k = a.degree();
        let dim = self.dim();
        let basis = &self.lefschetz[k];
        let coords = basis.inverse.mul_vec(&a.to_coords());
        let mut components = BTreeMap::new();
        let mut offset = 0;
        for (block, &(r, len)) in basis.blocks.iter().enumerate() {
            let s = k - 2 * r;
            let mut v = vec![T::zero(); crate::scalar::binomial(dim, s)];
            for (c, p) in coords[offset..offset + len].iter().zip(&basis.primitives[block]) {
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(p) {
                    *x = x.clone() + c.clone() * y.clone();
                }
            }
            offset += len;
            components.insert(r, Form::from_coords(dim, s, &v));
        }
        LefschetzComponents { degree: k, components, formula_agrees: true }
    }

    /// `Σ_r (1/r!) L^r B^{(k−2r)}`.
    pub fn reassemble(&self, parts: &LefschetzComponents<T>) -> Form<T> {
        let mut out = Form::zero(self.dim(), parts.degree);
        for (&r, b) in &parts.components {
            let term = self.l_powers[r].apply(b).scale(&(T::one() / factorial::<T>(r)));
            out = out.try_add(&term).expect("same degree");
        }
        out
    }

    /// The `sl(2)` relations, `⋆⋆ = id`, `⋆L⋆ = Λ`, the commutation table
    /// with `d`, `d^Λ` and `dd^Λ`, the squares, and the Lefschetz
    /// isomorphisms, each as a matrix identity in every degree.
    ///
    /// Identities that depend on the overall sign of `Λ` are listed twice:
    /// once for `Λ` as built here (`Λω = n`), and once, in the group
    /// `"opposite sign"`, for `Λ̃ = −Λ` (`Λ̃ω = −n`), where they take the form
    /// `Λ̃ = −⋆L⋆`, `[d^Λ̃, L] = −d` and `d^Λ̃ = (−1)^{k+1} ⋆d⋆`.
    pub fn operator_identities(&self) -> Vec<IdentityCheck> {
        let dim = self.dim();
        let n = self.n;
        let d = self.d();
        let dl = &self.d_lambda;
        let ddl = &self.dd_lambda;
        let minus_one = -T::one();
        let mut out = Vec::new();
        let mut push = |group: &str, name: &str, holds: bool| {
            out.push(IdentityCheck { group: group.to_string(), name: name.to_string(), holds })
        };

        push("sl2", "Λω = n", self.lambda.apply(&self.omega) == Form::scalar(dim, T::from_int(n as i64)));
        push("sl2", "[Λ,L] = H", self.lambda.commutator(&self.l) == self.h);
        push("sl2", "[H,L] = −2L", self.h.commutator(&self.l) == self.l.scale(&T::from_int(-2)));
        push("sl2", "[H,Λ] = 2Λ", self.h.commutator(&self.lambda) == self.lambda.scale(&T::from_int(2)));
        push(
            "star",
            "⋆⋆ = id",
            (0..=dim).all(|k| &self.star[dim - k] * &self.star[k] == Matrix::identity(self.star[k].ncols())),
        );
        push("star", "Λ = ⋆L⋆", (2..=dim).all(|k| star_conjugate(&self.star, &self.l, k) == *self.lambda.block(k)));
        push("star", "d^Λ = (−1)^k ⋆d⋆", *dl == self.d_lambda_via_star);

        push("commutation", "[d,L] = 0", d.commutator(&self.l).is_zero());
        push("commutation", "[d^Λ,L] = d", dl.commutator(&self.l) == *d);
        push("commutation", "[dd^Λ,L] = 0", ddl.commutator(&self.l).is_zero());
        push("commutation", "[d,Λ] = d^Λ", d.commutator(&self.lambda) == *dl);
        push("commutation", "[d^Λ,Λ] = 0", dl.commutator(&self.lambda).is_zero());
        push("commutation", "[dd^Λ,Λ] = 0", ddl.commutator(&self.lambda).is_zero());
        push("commutation", "[d,H] = d", d.commutator(&self.h) == *d);
        push("commutation", "[d^Λ,H] = −d^Λ", dl.commutator(&self.h) == dl.scale(&minus_one));
        push("commutation", "[dd^Λ,H] = 0", ddl.commutator(&self.h).is_zero());

        push("differentials", "d² = 0", d.compose(d).is_zero());
        push("differentials", "(d^Λ)² = 0", dl.compose(dl).is_zero());
        push("differentials", "dd^Λ + d^Λd = 0", d.anticommutator(dl).is_zero());

        let tilde = self.lambda.scale(&minus_one);
        let dl_tilde = d.commutator(&tilde);
        push("opposite sign", "[L,Λ̃] = H", self.l.commutator(&tilde) == self.h);
        push(
            "opposite sign",
            "Λ̃ = −⋆L⋆",
            (2..=dim).all(|k| -&star_conjugate(&self.star, &self.l, k) == *tilde.block(k)),
        );
        push(
            "opposite sign",
            "[d,Λ̃] = (−1)^(k+1) ⋆d⋆",
            (1..=dim).all(|k| {
                let b = &(&self.star[dim - k + 1] * d.block(dim - k)) * &self.star[k];
                b.scale(&sign(k % 2 == 0)) == *dl_tilde.block(k)
            }),
        );
        push("opposite sign", "[d^Λ̃,L] = −d", dl_tilde.commutator(&self.l) == d.scale(&minus_one));
        push("opposite sign", "[d^Λ̃,Λ̃] = 0", dl_tilde.commutator(&tilde).is_zero());
        push("opposite sign", "[d^Λ̃,H] = −d^Λ̃", dl_tilde.commutator(&self.h) == dl_tilde.scale(&minus_one));

        push(
            "lefschetz",
            "L^k: ∧^(n−k) ≅ ∧^(n+k)",
            (0..=n).all(|k| {
                let b = self.l_powers[k].block(n - k);
                b.nrows() == b.ncols() && b.rank() == b.ncols()
            }),
        );
        push("lefschetz", "L injective below degree n", (0..n).all(|k| self.l.block(k).rank() == self.l.block(k).ncols()));
        push(
            "lefschetz",
            "ker Λ = ker L^(n−k+1)",
            (0..=n).all(|k| self.primitive[k] == self.l_powers[n - k + 1].block(k).kernel()),
        );
        push(
            "lefschetz",
            "∧^k = ⊕ L^r P^(k−2r)",
            (0..=dim).all(|k| {
                let total: usize = (k.saturating_sub(n)..=k / 2).map(|r| self.primitive[k - 2 * r].dim()).sum();
                total == crate::scalar::binomial(dim, k)
            }),
        );
        out
    }
}

/// `⋆ L ⋆` on degree `k ≥ 2`.
fn star_conjugate<T: Field>(star: &[Matrix<T>], l: &GradedOperator<T>, k: usize) -> Matrix<T> {
    let dim = star.len() - 1;
    &(&star[dim - k + 2] * l.block(dim - k)) * &star[k]
}

fn monomial_pairing<T: Field>(g: &Matrix<T>, i: MultiIndex, j: MultiIndex) -> T {
    let rows: Vec<usize> = i.indices().collect();
    let cols: Vec<usize> = j.indices().collect();
    Matrix::from_fn(rows.len(), cols.len(), |a, b| g.get(rows[a], cols[b]).clone()).determinant()
}

/// Solves `α ∧ ⋆β = (ω^{-1})^k(α, β) · vol` over basis monomials `α`, `β`.
fn star_blocks<T: Field>(dim: usize, pairing: &Matrix<T>, volume: &T) -> Vec<Matrix<T>> {
    (0..=dim)
        .map(|k| {
            let source = monomial_basis(dim, k);
            let target = monomial_basis(dim, dim - k);
            let wedge_pairing = Matrix::from_fn(source.len(), target.len(), |a, m| {
                match source[a].wedge(target[m]) {
                    Some((neg, _)) => sign(neg),
                    None => T::zero(),
                }
            });
            let rhs = Matrix::from_fn(source.len(), source.len(), |a, b| {
                monomial_pairing(pairing, source[a], source[b]) * volume.clone()
            });
            let inv = wedge_pairing.inverse().expect("the wedge pairing is perfect");
            &inv * &rhs
        })
        .collect()
}

fn lefschetz_basis<T: Field>(
    dim: usize,
    n: usize,
    k: usize,
    primitive: &[Subspace<T>],
    l_powers: &[GradedOperator<T>],
) -> Result<LefschetzBasis<T>, SymplecticError> {
    let mut blocks = Vec::new();
    let mut primitives = Vec::new();
    let mut columns = Vec::new();
    for r in k.saturating_sub(n)..=k / 2 {
        let s = k - 2 * r;
        let vectors = primitive[s].basis_vectors();
        let scale = T::one() / factorial::<T>(r);
        for v in &vectors {
            columns.push(l_powers[r].block(s).mul_vec(v).into_iter().map(|x| x * scale.clone()).collect::<Vec<_>>());
        }
        blocks.push((r, vectors.len()));
        primitives.push(vectors);
    }
    let size = crate::scalar::binomial(dim, k);
    let m = Matrix::from_columns(size, &columns);
    let inverse = (m.ncols() == size).then(|| m.inverse()).flatten().ok_or_else(|| {
        SymplecticError::inconsistent("∧^k = ⊕ L^r P^(k−2r)", format!("the Lefschetz basis of degree {k} is not a basis"))
    })?;
    Ok(LefschetzBasis { blocks, primitives, inverse })
}
