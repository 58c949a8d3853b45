mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use secfan::fan::{enumerate_effective_subdivisions, CensusBudget};
use secfan::multiplicity::{
    count_components_vs, formula_value, gluing_matrix, principal_index, saturated_lattice_basis, severi_multiplicity,
    Mode, Provenance, RationalSubspace,
};
use secfan::subdivision::classify;
use secfan::{Error, MarkedCell, MarkedPolygon, Rational, Subdivision};

fn diagonal_square() -> Subdivision {
    Subdivision::new(
        unit_square(),
        vec![
            MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(1, 1)]).unwrap(),
            MarkedCell::fully_marked(&[p(0, 0), p(0, 1), p(1, 1)]).unwrap(),
        ],
    )
    .unwrap()
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn index_matches_coset_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in 2..=4 {
        for _ in 0..25 {
            let (a, b) = random_complementary_pair(&mut rng, n);
            let (l1, l2) = (RationalSubspace::new(n, a).unwrap(), RationalSubspace::new(n, b).unwrap());
            let (s1, s2) = (to_i64_rows(&saturated_lattice_basis(&l1)), to_i64_rows(&saturated_lattice_basis(&l2)));
            assert_eq!(maximal_minor_gcd(&s1), 1);
            assert_eq!(maximal_minor_gcd(&s2), 1);
            let stacked: Vec<Vec<i64>> = s1.iter().chain(&s2).cloned().collect();
            let idx = principal_index(&l1, &l2).unwrap();
            assert_eq!(idx, big(parallelepiped_count(&stacked) as i64));
            assert_eq!(idx, principal_index(&l2, &l1).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn index_is_invariant_under_unimodular_maps(seed in any::<u64>(), shear in -3i64..=3, swap in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = random_complementary_pair(&mut rng, 3);
        // v ↦ v·U with U = shear of the first coordinate into the second, then an optional swap
        let map = |rows: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
            rows.iter().map(|v| {
                let mut w = vec![v[0].clone(), v[1].clone() + v[0].clone() * q(shear, 1), v[2].clone()];
                if swap { w.swap(0, 2); }
                w
            }).collect()
        };
        let before = principal_index(&RationalSubspace::new(3, a.clone()).unwrap(), &RationalSubspace::new(3, b.clone()).unwrap()).unwrap();
        let after = principal_index(&RationalSubspace::new(3, map(&a)).unwrap(), &RationalSubspace::new(3, map(&b)).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn coordinate_subspaces_have_index_one(n in 2usize..=5, k in 1usize..5) {
        prop_assume!(k < n);
        let e = |i: usize| (0..n).map(|j| q(i64::from(i == j), 1)).collect::<Vec<_>>();
        let l1 = RationalSubspace::new(n, (0..k).map(e).collect()).unwrap();
        let l2 = RationalSubspace::new(n, (k..n).map(e).collect()).unwrap();
        prop_assert_eq!(principal_index(&l1, &l2).unwrap(), big(1));
    }
}

#[test]
fn component_count_examples() {
    let c = count_components_vs(&diagonal_square(), None).unwrap();
    assert_eq!((c.value, c.provenance), (big(1), Provenance::Computed));
    let c = count_components_vs(&diagonal_square(), Some(2)).unwrap();
    assert_eq!((c.value, c.provenance), (big(2), Provenance::Override));
    let unit = Subdivision::trivial(polygon(&[(0, 0), (1, 0), (0, 1)]));
    assert_eq!(count_components_vs(&unit, None).unwrap().value, big(1));

    assert_eq!(count_components_vs(&Subdivision::trivial(triangle_2()), None), Err(Error::NotSimple));
    let pentagon = Subdivision::trivial(polygon(&[(0, 0), (1, 0), (2, 1), (1, 2), (0, 1)]));
    assert_eq!(count_components_vs(&pentagon, None), Err(Error::NotNodal));
}

#[test]
fn unimodular_triangulations_have_one_component() {
    let base = polygon(&[(0, 0), (2, 0), (0, 2)]);
    let census = enumerate_effective_subdivisions::<Rational>(&base, CensusBudget::default()).unwrap();
    let mut seen = 0;
    for e in census.effective() {
        let s = &e.subdivision;
        if s.cells().iter().all(|c| c.is_triangle() && c.twice_area() == 1) {
            seen += 1;
            assert_eq!(count_components_vs(s, None).unwrap().value, big(1));
            assert_eq!(gluing_matrix(s).len(), s.edges().len());
        }
    }
    assert!(seen > 0);
}

#[test]
fn multiplicity_examples() {
    for mode in [Mode::Tilde, Mode::Full] {
        let r = severi_multiplicity(&diagonal_square(), mode, None).unwrap();
        assert_eq!(r.triangle_factor, big(1));
        assert_eq!(r.edge_product_full, big(1));
        assert_eq!(r.value, q(1, 1));
    }
    assert_eq!(
        formula_value(Mode::Full, &big(2), &big(1), &big(2), &big(2), &big(1)),
        q(1, 1)
    );
    let diamond = Subdivision::trivial(MarkedPolygon::from_points(&[p(0, 0), p(1, 1), p(2, 0), p(1, -1)]).unwrap());
    assert!(matches!(severi_multiplicity(&diamond, Mode::Full, None), Err(Error::PreconditionViolated(_))));
    assert!(severi_multiplicity(&diamond, Mode::Tilde, None).is_ok());
    assert!(matches!(
        severi_multiplicity(&Subdivision::trivial(triangle_2()), Mode::Tilde, None),
        Err(Error::PreconditionViolated(_))
    ));
}

#[test]
fn two_squares_identity() {
    let base = rectangle_2x1();
    let s = Subdivision::new(
        base,
        vec![
            MarkedCell::fully_marked(&[p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap(),
            MarkedCell::fully_marked(&[p(1, 0), p(2, 0), p(2, 1), p(1, 1)]).unwrap(),
        ],
    )
    .unwrap();
    let tilde = severi_multiplicity(&s, Mode::Tilde, None).unwrap();
    let full = severi_multiplicity(&s, Mode::Full, None).unwrap();
    assert_eq!(tilde.value, full.value);
    assert_eq!(full.edge_product_full, full.edge_product_classes.clone() * full.parallelogram_factor.clone());
    assert_eq!(classify(&s).edge_classes.len(), 3);
}

#[test]
fn formula_identity_on_censuses() {
    let bases = [unit_square(), rectangle_2x1(), triangle_2(), polygon(&[(0, 0), (2, 0), (3, 1), (1, 1)])];
    let mut checked = 0;
    for base in bases {
        let census = enumerate_effective_subdivisions::<Rational>(&base, CensusBudget::default()).unwrap();
        for e in census.effective() {
            let r = classify(&e.subdivision);
            if !(r.is_simple && r.is_nodal && !r.has_special_points()) {
                continue;
            }
            let tilde = severi_multiplicity(&e.subdivision, Mode::Tilde, None).unwrap();
            let full = severi_multiplicity(&e.subdivision, Mode::Full, None).unwrap();
            assert_eq!(tilde.value, full.value);
            assert_eq!(full.edge_product_full, full.edge_product_classes * full.parallelogram_factor);
            checked += 1;
        }
    }
    assert!(checked > 5);
}
