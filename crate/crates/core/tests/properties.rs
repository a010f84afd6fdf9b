use proptest::prelude::*;

use symplectic_hodge::cohomology::SymplecticCohomology;
use symplectic_hodge::exterior::Form;
use symplectic_hodge::lie::LieAlgebra;
use symplectic_hodge::linalg::{Matrix, Subspace};
use symplectic_hodge::notation::parse_form;
use symplectic_hodge::random::Generator;
use symplectic_hodge::symplectic::SymplecticStructure;
use symplectic_hodge::{QForm, QMatrix, Rational};

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn form_strategy(dim: usize, k: usize) -> impl Strategy<Value = QForm> {
    let len = symplectic_hodge::scalar::binomial(dim, k);
    prop::collection::vec(-3i64..=3, len).prop_map(move |c| Form::from_coords(dim, k, &c.into_iter().map(q).collect::<Vec<_>>()))
}

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-2i64..=2, rows * cols).prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| q(v[i * cols + j])))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn render_parse_round_trip(a in (1usize..=5).prop_flat_map(|k| form_strategy(5, k))) {
        let back: QForm = parse_form(&a.render(), 5).unwrap();
        prop_assert!(back == a || (back.is_zero() && a.is_zero()));
    }

    #[test]
    fn wedge_is_graded_commutative(a in form_strategy(5, 2), b in form_strategy(5, 3), c in form_strategy(5, 1)) {
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
        prop_assert_eq!(b.wedge(&c).unwrap(), c.wedge(&b).unwrap().scale(&q(-1)));
        prop_assert_eq!(c.wedge(&c).unwrap().is_zero(), true);
    }

    #[test]
    fn rank_nullity_and_kernel(m in matrix_strategy(4, 6)) {
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.dim(), 6);
        for v in kernel.basis().rows() {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == q(0)));
        }
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
    }

    #[test]
    fn determinant_detects_invertibility(m in matrix_strategy(4, 4)) {
        let det = m.determinant();
        match m.inverse() {
            Some(inv) => {
                prop_assert!(det != q(0));
                prop_assert_eq!(&m * &inv, Matrix::identity(4));
            }
            None => prop_assert_eq!(det, q(0)),
        }
    }

    #[test]
    fn subspace_dimension_formula(a in matrix_strategy(3, 5), b in matrix_strategy(3, 5)) {
        let u = Subspace::span(5, a.to_rows());
        let v = Subspace::span(5, b.to_rows());
        let sum = u.sum(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&sum) && v.is_subspace_of(&sum));
    }

    #[test]
    fn leibniz_rule_on_example_one(a in form_strategy(6, 2), b in form_strategy(6, 1)) {
        let g = LieAlgebra::<Rational>::parse("0,0,0,12,14-23,15+34", None).unwrap();
        let lhs = g.differential(&a.wedge(&b).unwrap());
        let rhs = g.differential(&a).wedge(&b).unwrap().try_add(&a.wedge(&g.differential(&b)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lefschetz_reassembly_on_example_one(k in 0usize..=6, seed in any::<u64>()) {
        let g = LieAlgebra::<Rational>::parse("0,0,0,12,14-23,15+34", None).unwrap();
        let s = SymplecticStructure::new(g, parse_form("16+35+24", 6).unwrap()).unwrap();
        let a: QForm = Generator::new(seed).form(6, k);
        let parts = s.lefschetz_decompose(&a).unwrap();
        prop_assert!(parts.formula_agrees);
        prop_assert!(parts.components.values().all(|b| s.is_primitive(b)));
        prop_assert_eq!(s.reassemble(&parts), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    /// The degree-2 decomposition holds for every symplectic Lie algebra.
    #[test]
    fn degree_two_is_full_and_direct(seed in any::<u64>(), six in any::<bool>()) {
        let dim = if six { 6 } else { 4 };
        let mut gen = Generator::new(seed);
        let sample = if seed % 2 == 0 { gen.nilpotent_sample::<Rational>(dim) } else { gen.solvable_sample::<Rational>(dim) };
        let s = SymplecticStructure::new(sample.algebra, sample.omega).unwrap();
        let c = SymplecticCohomology::new(&s).unwrap();
        let v = c.decomposition_analysis(2).unwrap();
        prop_assert!(v.full && v.direct, "{}", sample.label);
        prop_assert!(c.intersection_remark_check().unwrap().iter().all(|t| t.holds));
        prop_assert!(c.lr_equals_hr_check().unwrap().iter().all(|t| t.holds));
        let n = s.n();
        prop_assert_eq!(c.d_lambda().dims(), c.betti().into_iter().rev().collect::<Vec<_>>());
        prop_assert_eq!(c.hlc_check().unwrap().holds(), c.dd_lemma_check().unwrap().holds());
        prop_assert_eq!(c.hlc_check().unwrap().maps.len(), n + 1);
    }
}
