//! Seeded generators of symplectic Lie algebras and test forms.
//!
//! Nilpotent algebras are built by iterated central extensions: each new
//! generator gets `de^j` equal to a random closed 2-form of the algebra
//! spanned by the previous generators, so `d² = 0` holds by construction.
//! Solvable unimodular algebras come from a small list of base algebras,
//! direct sums and integral changes of coframe. Only unimodular algebras are
//! produced, since duality-based checks need Poincaré duality.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exterior::{monomial_basis, Form};
use crate::lie::{LieAlgebra, StructureEquations};
use crate::linalg::Matrix;
use crate::scalar::Field;

/// Four-dimensional unimodular solvable algebras with a symplectic form.
const SOLVABLE_4: &[(&str, &str)] = &[("-13,23,0,0", "12+34"), ("23,-13,0,0", "12+34")];

/// Six-dimensional unimodular solvable algebras with a symplectic form.
const SOLVABLE_6: &[(&str, &str)] = &[
    ("-13,23,0,-56,46,0", "12+36+45"),
    ("-23,0,0,-46,56,0", "12+36+45"),
    ("0,12-45,-13+46,0,15-24,-16+34", "14+35+62"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Nilpotent,
    Solvable,
}

/// A generated Lie algebra together with a symplectic form on it.
#[derive(Clone, Debug)]
pub struct Sample<T: Field> {
    pub label: String,
    pub family: Family,
    pub algebra: LieAlgebra<T>,
    pub omega: Form<T>,
}

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn small_int<T: Field>(&mut self) -> T {
        let v = *[-2i64, -1, 1, 2].choose(&mut self.rng).expect("non-empty");
        T::from_int(v)
    }

    /// A random form of degree `k` with small integer coefficients.
    pub fn form<T: Field>(&mut self, dim: usize, k: usize) -> Form<T> {
        let mut coords = Vec::new();
        for _ in monomial_basis(dim, k) {
            let c = if self.rng.gen_bool(0.5) { self.small_int() } else { T::zero() };
            coords.push(c);
        }
        Form::from_coords(dim, k, &coords)
    }

    /// A random vector with small integer entries.
    pub fn vector<T: Field>(&mut self, len: usize) -> Vec<T> {
        (0..len).map(|_| T::from_int(self.rng.gen_range(-3..=3))).collect()
    }

    /// A random `rows × cols` matrix of small integers, sparse with
    /// probability `1 − density`.
    pub fn matrix<T: Field>(&mut self, rows: usize, cols: usize, density: f64) -> Matrix<T> {
        Matrix::from_fn(rows, cols, |_, _| {
            if self.rng.gen_bool(density) {
                T::from_int(self.rng.gen_range(-2..=2))
            } else {
                T::zero()
            }
        })
    }

    /// A random combination of a basis of closed 2-forms, each basis vector
    /// taken with probability `p`.
    fn closed_two_form<T: Field>(&mut self, g: &LieAlgebra<T>, p: f64) -> Form<T> {
        let closed = g.d().block(2).kernel();
        let mut out = vec![T::zero(); closed.ambient_dim()];
        for v in closed.basis().rows() {
            if self.rng.gen_bool(p) {
                let c: T = self.small_int();
                for (x, y) in out.iter_mut().zip(v) {
                    *x = x.clone() + c.clone() * y.clone();
                }
            }
        }
        Form::from_coords(g.dim(), 2, &out)
    }

    /// A nilpotent Lie algebra of dimension `dim` with `first_layer`
    /// generators that are closed.
    pub fn nilpotent_algebra<T: Field>(&mut self, dim: usize, first_layer: usize) -> LieAlgebra<T> {
        let mut differentials: Vec<Form<T>> = vec![Form::zero(first_layer, 2); first_layer];
        for j in first_layer..dim {
            let partial = LieAlgebra::new(StructureEquations::from_differentials(differentials.clone()).expect("2-forms"))
                .expect("central extensions satisfy Jacobi");
            let de = self.closed_two_form(&partial, 0.25);
            differentials = differentials.iter().map(|f| f.embed(j + 1, 0)).collect();
            differentials.push(de.embed(j + 1, 0));
        }
        LieAlgebra::new(StructureEquations::from_differentials(differentials).expect("2-forms")).expect("Jacobi")
    }

    /// A random closed 2-form `ω` with `ω^n ≠ 0`, if one is found.
    pub fn symplectic_form<T: Field>(&mut self, g: &LieAlgebra<T>, attempts: usize) -> Option<Form<T>> {
        let n = g.dim() / 2;
        for _ in 0..attempts {
            let omega = self.closed_two_form(g, 0.6);
            if !omega.is_zero() && !omega.wedge_power(n).is_zero() {
                return Some(omega);
            }
        }
        None
    }

    /// A unimodular integral matrix: a permutation times a few elementary
    /// row operation.
    fn unimodular_matrix<T: Field>(&mut self, dim: usize) -> Matrix<T> {
        let mut perm: Vec<usize> = (0..dim).collect();
        perm.shuffle(&mut self.rng);
        let mut m = Matrix::from_fn(dim, dim, |i, j| if perm[i] == j { T::one() } else { T::zero() });
        for _ in 0..1 {
            let i = self.rng.gen_range(0..dim);
            let j = (i + self.rng.gen_range(1..dim)) % dim;
            let c = T::from_int(if self.rng.gen_bool(0.5) { 1 } else { -1 });
            let mut e = Matrix::identity(dim);
            e.set(i, j, c);
            m = &e * &m;
        }
        m
    }

    /// Rewrites `(g, ω)` in the coframe `f` with `e^j = Σ_l m[j][l] f^l`.
    pub fn change_coframe<T: Field>(&mut self, g: &LieAlgebra<T>, omega: &Form<T>) -> (LieAlgebra<T>, Form<T>) {
        let dim = g.dim();
        let m = self.unimodular_matrix(dim);
        let inv = m.inverse().expect("unimodular");
        let images: Vec<Form<T>> = g.structure().differentials().iter().map(|f| f.substitute(&m)).collect();
        let differentials = (0..dim)
            .map(|i| {
                let mut acc = Form::zero(dim, 2);
                for (j, img) in images.iter().enumerate() {
                    acc = acc.try_add(&img.scale(inv.get(i, j))).expect("2-forms");
                }
                acc
            })
            .collect();
        let h = LieAlgebra::new(StructureEquations::from_differentials(differentials).expect("2-forms"))
            .expect("isomorphic algebra satisfies Jacobi");
        (h, omega.substitute(&m))
    }

    fn parse_base<T: Field>(&mut self, table: &[(&str, &str)]) -> (String, LieAlgebra<T>, Form<T>) {
        let (eqs, omega) = *table.choose(&mut self.rng).expect("non-empty");
        let g = LieAlgebra::parse(eqs, None).expect("valid base algebra");
        let omega = crate::notation::parse_form(omega, g.dim()).expect("valid base form");
        (eqs.to_string(), g, omega)
    }

    /// A nilpotent symplectic sample (non-abelian unless `dim = 2`).
    pub fn nilpotent_sample<T: Field>(&mut self, dim: usize) -> Sample<T> {
        loop {
            let first = self.rng.gen_range(2..=(dim / 2 + 1).min(dim - 1));
            let g: LieAlgebra<T> = self.nilpotent_algebra(dim, first);
            if g.is_abelian() {
                continue;
            }
            if let Some(omega) = self.symplectic_form(&g, 20) {
                let (g, omega) = self.change_coframe(&g, &omega);
                return Sample { label: format!("nilpotent({})", g.structure().render()), family: Family::Nilpotent, algebra: g, omega };
            }
        }
    }

    /// A unimodular solvable, non-nilpotent sample of dimension 4, 6 or 8.
    pub fn solvable_sample<T: Field>(&mut self, dim: usize) -> Sample<T> {
        let (g, omega): (LieAlgebra<T>, Form<T>) = match dim {
            4 => {
                let (_, g, _) = self.parse_base(SOLVABLE_4);
                let omega = self.symplectic_form(&g, 50).expect("base algebra is symplectic");
                (g, omega)
            }
            6 if self.rng.gen_bool(0.5) => {
                let (_, g, _) = self.parse_base(SOLVABLE_6);
                let omega = self.symplectic_form(&g, 50).expect("base algebra is symplectic");
                (g, omega)
            }
            _ => {
                let (_, a, wa) = self.parse_base(SOLVABLE_4);
                let rest = dim - 4;
                let b: LieAlgebra<T> = if rest >= 4 && self.rng.gen_bool(0.5) {
                    self.parse_base(SOLVABLE_4).1
                } else if rest >= 4 && self.rng.gen_bool(0.5) {
                    loop {
                        let b: LieAlgebra<T> = self.nilpotent_algebra(rest, 2);
                        if self.symplectic_form(&b, 20).is_some() {
                            break b;
                        }
                    }
                } else {
                    LieAlgebra::parse(&format!("0^{rest}"), None).expect("abelian")
                };
                let wb = self.symplectic_form(&b, 50).expect("symplectic summand");
                let g = direct_sum(&a, &b);
                let omega = wa.embed(dim, 0).try_add(&wb.embed(dim, 4)).expect("2-forms");
                // A random closed perturbation keeps the form generic when possible.
                let omega = match self.symplectic_form(&g, 10) {
                    Some(w) if self.rng.gen_bool(0.5) => w,
                    _ => omega,
                };
                (g, omega)
            }
        };
        let (g, omega) = self.change_coframe(&g, &omega);
        Sample { label: format!("solvable({})", g.structure().render()), family: Family::Solvable, algebra: g, omega }
    }

    /// `count` samples of dimension `dim`, alternating between families.
    pub fn samples<T: Field>(&mut self, dim: usize, count: usize) -> Vec<Sample<T>> {
        (0..count)
            .map(|i| if i % 2 == 0 { self.nilpotent_sample(dim) } else { self.solvable_sample(dim) })
            .collect()
    }
}

/// `g ⊕ h` with the generators of `h` placed after those of `g`.
pub fn direct_sum<T: Field>(g: &LieAlgebra<T>, h: &LieAlgebra<T>) -> LieAlgebra<T> {
    let dim = g.dim() + h.dim();
    let differentials = g
        .structure()
        .differentials()
        .iter()
        .map(|f| f.embed(dim, 0))
        .chain(h.structure().differentials().iter().map(|f| f.embed(dim, g.dim())))
        .collect();
    LieAlgebra::new(StructureEquations::from_differentials(differentials).expect("2-forms")).expect("direct sums satisfy Jacobi")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::SymplecticStructure;
    use crate::Rational;

    #[test]
    fn samples_are_valid_and_deterministic() {
        let mut a = Generator::new(7);
        let mut b = Generator::new(7);
        for dim in [4, 6] {
            let xs: Vec<Sample<Rational>> = a.samples(dim, 4);
            let ys: Vec<Sample<Rational>> = b.samples(dim, 4);
            for (x, y) in xs.iter().zip(&ys) {
                assert_eq!(x.algebra.structure().render(), y.algebra.structure().render());
                assert_eq!(x.omega, y.omega);
                let props = x.algebra.properties();
                assert!(props.unimodular && props.solvable);
                assert_eq!(props.nilpotent, x.family == Family::Nilpotent, "{}", x.label);
                SymplecticStructure::new(x.algebra.clone(), x.omega.clone()).unwrap();
            }
        }
    }

    #[test]
    fn coframe_change_preserves_betti_numbers() {
        let mut gen = Generator::new(3);
        let g = LieAlgebra::<Rational>::parse("0,0,0,12,14-23,15+34", None).unwrap();
        let omega = crate::notation::parse_form("16+35+24", 6).unwrap();
        let (h, w) = gen.change_coframe(&g, &omega);
        let b = |x: &LieAlgebra<Rational>| crate::cohomology::de_rham_cohomology(x).unwrap().dims();
        assert_eq!(b(&g), b(&h));
        SymplecticStructure::new(h, w).unwrap();
    }
}
