use num_traits::{One, Zero};
use proptest::prelude::*;
use quivmod::chow::{characters, chern_to_ch, euler_char, euler_pairing, twist, ChernData};
use quivmod::exact::{binary_gcd, rat, ratio, resultant, BinaryForm, MatQ, Rational};
use quivmod::quiver::*;
use quivmod::classify_sheaf;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = MatQ> {
    proptest::collection::vec(-2i64..=2, rows * cols)
        .prop_map(move |v| MatQ::from_vec(rows, cols, v.into_iter().map(rat).collect()).unwrap())
}

/// Entries in [-2, 2]: small enough that degenerate strata show up often.
fn rep() -> impl Strategy<Value = Rep22> {
    proptest::collection::vec(-2i64..=2, 12)
        .prop_map(|v| Rep22::from_coordinates(&v.into_iter().map(rat).collect::<Vec<_>>()).unwrap())
}

fn invertible() -> impl Strategy<Value = MatQ> {
    proptest::collection::vec(-5i64..=5, 4)
        .prop_filter("invertible", |v| v[0] * v[3] != v[1] * v[2])
        .prop_map(|v| MatQ::from_vec(2, 2, v.into_iter().map(rat).collect()).unwrap())
}

fn line() -> impl Strategy<Value = LinePoint> {
    proptest::array::uniform3(small_rational())
        .prop_filter("nonzero", |c| c.iter().any(|x| !x.is_zero()))
        .prop_map(|c| LinePoint::new(c).unwrap())
}

fn form(max_degree: usize) -> impl Strategy<Value = BinaryForm> {
    (0..=max_degree)
        .prop_flat_map(|d| proptest::collection::vec(-3i64..=3, d + 1))
        .prop_map(|c| BinaryForm::new(c.into_iter().map(rat).collect()))
}

/// Product of random linear factors, so shared roots are common.
fn factored_form() -> impl Strategy<Value = BinaryForm> {
    proptest::collection::vec((-2i64..=2, -2i64..=2), 1..=4).prop_map(|fs| {
        fs.into_iter()
            .map(|(a, b)| BinaryForm::new(vec![rat(a), rat(b)]))
            .reduce(|x, y| x.mul(&y))
            .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn rank_is_transpose_invariant(m in (1usize..=4, 1usize..=6).prop_flat_map(|(r, c)| matrix(r, c))) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_vectors_are_killed(m in (1usize..=6, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c))) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len(), m.cols() - m.rank());
        for v in &kernel {
            prop_assert!((&m * v).is_zero());
        }
    }

    #[test]
    fn gcd_nonconstant_iff_resultant_vanishes(f in form(4), g in form(4)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let shared = !binary_gcd(&f, &g).is_nonzero_constant();
        prop_assert_eq!(shared, resultant(&f, &g).unwrap().is_zero());
    }

    #[test]
    fn gcd_cross_oracle_on_factored_forms(f in factored_form(), g in factored_form()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let gcd = binary_gcd(&f, &g);
        prop_assert_eq!(!gcd.is_nonzero_constant(), resultant(&f, &g).unwrap().is_zero());
        // normalized: first nonzero coefficient is one
        prop_assert!(gcd.coeffs().iter().find(|c| !c.is_zero()).unwrap().is_one());
    }

    #[test]
    fn rationals_stay_reduced(a in small_rational(), b in small_rational()) {
        for x in [&a * &b, &a + &b, &a - &b] {
            prop_assert!(*x.denom() > num_bigint::BigInt::zero());
            prop_assert!(num_integer::Integer::gcd(x.numer(), x.denom()).is_one());
        }
    }

    #[test]
    fn twisted_euler_characteristic_is_integral(
        rank in 0i64..=3, c1 in -4i64..=4, c2 in -6i64..=6, c3 in -6i64..=6, n in -10i64..=10
    ) {
        let data = ChernData::new(rank, c1, c2, c3);
        let chi = euler_char(&twist(&chern_to_ch(&data), n));
        prop_assert_eq!(chi.denom().is_one(), data.satisfies_parity());
    }

    #[test]
    fn pairing_with_structure_sheaf_is_euler_char(
        rank in 0i64..=3, c1 in -4i64..=4, c2 in -6i64..=6, c3 in -6i64..=6
    ) {
        let ch = chern_to_ch(&ChernData::new(rank, c1, c2, c3));
        prop_assert_eq!(euler_pairing(&characters::ch_o(), &ch), euler_char(&ch));
    }

    #[test]
    fn git_semistability_matches_king(r in rep()) {
        let nonzero = semi_invariants(&r).iter().any(|c| !c.is_zero());
        prop_assert_eq!(is_semistable(&r), nonzero);
        prop_assert_eq!(moduli_point(&r).is_ok(), is_semistable(&r));
    }

    #[test]
    fn discriminant_coefficients_are_semi_invariants(r in rep()) {
        prop_assert_eq!(discriminant_form(&r).coeffs(), semi_invariants(&r));
    }

    #[test]
    fn stable_implies_semistable(r in rep()) {
        if is_stable(&r) {
            prop_assert!(is_semistable(&r));
        }
    }

    /// Stable points of P⁵ are exactly the smooth conics.
    #[test]
    fn stable_iff_semistable_with_smooth_discriminant(r in rep()) {
        let smooth = discriminant_form(&r).rank() == 3;
        prop_assert_eq!(is_stable(&r), is_semistable(&r) && smooth);
    }

    #[test]
    fn action_scales_semi_invariants(g1 in invertible(), g2 in invertible(), r in rep()) {
        let factor = g2.det().unwrap() / g1.det().unwrap();
        let moved = act(&g1, &g2, &r).unwrap();
        prop_assert_eq!(semi_invariants(&moved), semi_invariants(&r).map(|c| c * &factor));
        prop_assert_eq!(stability_class(&moved).tag(), stability_class(&r).tag());
        if is_semistable(&r) {
            prop_assert_eq!(moduli_point(&moved).unwrap(), moduli_point(&r).unwrap());
        }
    }

    #[test]
    fn sheaf_classification_commutes_with_action(g1 in invertible(), g2 in invertible(), r in rep()) {
        let moved = act(&g1, &g2, &r).unwrap();
        prop_assert_eq!(classify_sheaf(&moved), classify_sheaf(&r));
    }

    #[test]
    fn extensions_collapse_to_direct_sums(a in line(), b in line(), e in proptest::array::uniform3(small_rational())) {
        let ext = extension_rep(&a, &b, &e);
        let split = moduli_point(&direct_sum(&a, &b)).unwrap();
        prop_assert_eq!(moduli_point(&ext).unwrap(), split.clone());
        prop_assert_eq!(moduli_point(&direct_sum(&b, &a)).unwrap(), split);
        prop_assert!(!is_stable(&ext));
        prop_assert_eq!(s_equiv_lines(&ext).unwrap(), LinePair::from_lines(a, b));
    }

    #[test]
    fn direct_sum_discriminant_is_product(a in line(), b in line()) {
        prop_assert_eq!(
            discriminant_form(&direct_sum(&a, &b)),
            TernaryQuadric::product(a.coords(), b.coords())
        );
    }

    #[test]
    fn line_factors_reconstruct_discriminant(r in rep()) {
        if let StabilityClass::StrictlySemistable(pair) = stability_class(&r) {
            prop_assert!(pair.product().proportional(&discriminant_form(&r)));
            prop_assert!(pair.quadric_rank() == discriminant_form(&r).rank());
        }
    }

    #[test]
    fn unstable_witnesses_hold(r in rep()) {
        if let StabilityClass::Unstable(w) = stability_class(&r) {
            prop_assert!(witness_holds(&r, &w));
            prop_assert!(theta_weight(w.dim()) < 0);
        }
    }

    /// Central differences against the cofactor formula ∂det/∂(a,b,c,d) = (d,−c,−b,a).
    #[test]
    fn jacobian_matches_cofactor_derivatives(r in rep()) {
        let jac = semi_invariant_jacobian(&r);
        let grad = |y: &MatQ| {
            let e = y.entries();
            [e[3].clone(), -e[2].clone(), -e[1].clone(), e[0].clone()]
        };
        let ys = r.ys();
        // det(Y_i + Y_j) differentiated in Y_i's coordinates
        let rows: [(usize, Option<usize>); 6] =
            [(0, None), (1, None), (2, None), (0, Some(1)), (0, Some(2)), (1, Some(2))];
        for (row, (i, j)) in rows.iter().enumerate() {
            let mut expected = vec![Rational::zero(); 12];
            match j {
                None => {
                    for (k, g) in grad(&ys[*i]).into_iter().enumerate() {
                        expected[4 * i + k] = g;
                    }
                }
                Some(j) => {
                    // m_ij is bilinear: ∂/∂Y_i is the cofactor gradient of Y_j and vice versa
                    for (k, g) in grad(&ys[*j]).into_iter().enumerate() {
                        expected[4 * i + k] = g;
                    }
                    for (k, g) in grad(&ys[*i]).into_iter().enumerate() {
                        expected[4 * j + k] = g;
                    }
                }
            }
            prop_assert_eq!(jac.row(row), &expected[..]);
        }
    }
}

#[test]
fn jacobian_rank_six_at_r_a() {
    assert_eq!(semi_invariant_jacobian(&reference::r_a()).rank(), 6);
}
