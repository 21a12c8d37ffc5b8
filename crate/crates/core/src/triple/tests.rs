use proptest::prelude::*;

use super::*;
use crate::liealg::{act_w, grading_operator};
use crate::sample::{random_dual, random_jordan, random_scalars, random_vector};
use crate::testutil::{cal, rng};

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn v(alpha: i64, r: JordanElement, s: JordanElement, beta: i64) -> FreudenthalVector {
    FreudenthalVector::from_parts(int(alpha), r, s, int(beta))
}

/// Cayley's 2×2×2 hyperdeterminant written out term by term.
fn cayley(t: &Tensor222) -> Scalar {
    let a = |i: usize, j: usize, k: usize| t[i][j][k].clone();
    let sq = |x: Scalar| &x * &x;
    let prod = |xs: [Scalar; 4]| xs.into_iter().product::<Scalar>();
    let squares = [
        sq(&a(0, 0, 0) * &a(1, 1, 1)),
        sq(&a(0, 0, 1) * &a(1, 1, 0)),
        sq(&a(0, 1, 0) * &a(1, 0, 1)),
        sq(&a(1, 0, 0) * &a(0, 1, 1)),
    ]
    .into_iter()
    .sum::<Scalar>();
    let mixed = [
        prod([a(0, 0, 0), a(0, 0, 1), a(1, 1, 0), a(1, 1, 1)]),
        prod([a(0, 0, 0), a(0, 1, 0), a(1, 0, 1), a(1, 1, 1)]),
        prod([a(0, 0, 0), a(1, 0, 0), a(0, 1, 1), a(1, 1, 1)]),
        prod([a(0, 0, 1), a(0, 1, 0), a(1, 0, 1), a(1, 1, 0)]),
        prod([a(0, 0, 1), a(1, 0, 0), a(0, 1, 1), a(1, 1, 0)]),
        prod([a(0, 1, 0), a(1, 0, 0), a(0, 1, 1), a(1, 0, 1)]),
    ]
    .into_iter()
    .sum::<Scalar>();
    let cross = &prod([a(0, 0, 0), a(0, 1, 1), a(1, 0, 1), a(1, 1, 0)])
        + &prod([a(0, 0, 1), a(0, 1, 0), a(1, 0, 0), a(1, 1, 1)]);
    &(&squares - &mixed.scale_int(2)) + &cross.scale_int(4)
}

/// Textbook discriminant `18abcd − 4b³d + b²c² − 4ac³ − 27a²d²`.
fn textbook_discriminant(p: &[Scalar; 4]) -> Scalar {
    let [a, b, c, d] = p;
    let terms = [
        ((a * b) * (c * d)).scale_int(18),
        -&(&b.pow(3) * d).scale_int(4),
        (b * b) * (c * c),
        -&(a * &c.pow(3)).scale_int(4),
        -&((a * a) * (d * d)).scale_int(27),
    ];
    terms.into_iter().sum()
}

fn tensor(v: &[Scalar]) -> Tensor222 {
    std::array::from_fn(|i| std::array::from_fn(|j| std::array::from_fn(|k| v[4 * i + 2 * j + k].clone())))
}

#[test]
fn calibrated_constants() {
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        assert_eq!(c.lambda_pair, int(6), "{tag}");
        assert_eq!(c.lambda_c, int(6), "{tag}");
        assert_eq!(c.lambda_cstar, int(6), "{tag}");
        assert_eq!(c.lambda_q, Scalar::from_ratio(1, 3), "{tag}");
        let third = Scalar::from_ratio(1, 3);
        assert_eq!(c.delta_z_scaling, [Scalar::ONE, third.clone(), third, Scalar::ONE], "{tag}");
        assert_eq!(c.hyperdet_scale, int(9), "{tag}");
        assert_eq!(c.lambda_moment, Scalar::from_ratio(-1, 24), "{tag}");
    }
}

#[test]
fn dimensions() {
    assert_eq!(FreudenthalVector::dim_for(AlgebraTag::Zero), 8);
    for tag in AlgebraTag::NONZERO {
        assert_eq!(FreudenthalVector::dim_for(tag), 6 * tag.dim() + 8);
    }
}

#[test]
fn omega_examples() {
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        let ea = FreudenthalVector::from_ints(tag, 1, 0);
        let eb = FreudenthalVector::from_ints(tag, 0, 1);
        assert_eq!(omega(c, &ea, &eb).unwrap(), int(6));
        assert_eq!(omega(c, &eb, &ea).unwrap(), int(-6));
        let mut g = rng(1);
        let r = random_jordan(&mut g, tag, 5);
        let s = random_jordan(&mut g, tag, 5);
        let z = JordanElement::zero(tag);
        let lhs = omega(c, &v(0, r.clone(), z.clone(), 0), &v(0, z, s.clone(), 0)).unwrap();
        assert_eq!(lhs, -&r.trace_form(&s).scale_int(6));
    }
}

#[test]
fn omega_tag_mismatch() {
    let c = cal(AlgebraTag::R);
    let u = FreudenthalVector::zero(AlgebraTag::R);
    let w = FreudenthalVector::zero(AlgebraTag::C);
    assert!(matches!(omega(c, &u, &w), Err(Error::TagMismatch { .. })));
    let c_h = cal(AlgebraTag::H);
    assert!(omega(c_h, &u, &u).is_err());
}

#[test]
fn omega_gram_matches_form() {
    let tag = AlgebraTag::C;
    let c = cal(tag);
    let g = omega_gram(c, tag);
    let mut r = rng(2);
    let u = random_vector(&mut r, tag, 4);
    let w = random_vector(&mut r, tag, 4);
    assert_eq!(dot(&u.coords(), &g.mul_vec(&w.coords())), omega(c, &u, &w).unwrap());
    let h = omega_covector(c, &u);
    assert_eq!(dot(&h, &w.coords()), omega(c, &u, &w).unwrap());
    assert_eq!(omega_dual(c, tag, &h).unwrap(), u);
    assert!(omega_dual(c, tag, &h[1..]).is_err());
}

#[test]
fn quartic_examples() {
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        assert_eq!(quartic(c, &FreudenthalVector::from_ints(tag, 1, 1)), int(9));
        let mut g = rng(3);
        for _ in 0..5 {
            let r = random_jordan(&mut g, tag, 5);
            assert!(quartic(c, &v(0, r, JordanElement::zero(tag), 0)).is_zero());
            let p = random_jordan(&mut g, tag, 5);
            assert!(quartic(c, &phi(&Scalar::ONE, &p)).is_zero(), "{tag}");
        }
    }
}

#[test]
fn quartic_phi_holdout() {
    let mut g = rng(4);
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        for _ in 0..20 {
            let z = crate::sample::random_scalar(&mut g, 4);
            let p = random_jordan(&mut g, tag, 6);
            assert!(quartic(c, &phi(&z, &p)).is_zero());
        }
    }
}

#[test]
fn polarization_symmetric_and_multilinear() {
    let tag = AlgebraTag::H;
    let c = cal(tag);
    let mut g = rng(5);
    let w: Vec<FreudenthalVector> = (0..5).map(|_| random_vector(&mut g, tag, 3)).collect();
    let base = quartic_polarized(c, [&w[0], &w[1], &w[2], &w[3]]).unwrap();
    for perm in [[1, 0, 2, 3], [3, 2, 1, 0], [2, 3, 0, 1], [0, 2, 3, 1]] {
        let args = perm.map(|i| &w[i]);
        assert_eq!(quartic_polarized(c, args).unwrap(), base);
    }
    let k = int(3);
    let combo = &w[0].scale(&k) + &w[4];
    let lhs = quartic_polarized(c, [&combo, &w[1], &w[2], &w[3]]).unwrap();
    let rhs = &(&k * &base) + &quartic_polarized(c, [&w[4], &w[1], &w[2], &w[3]]).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(quartic_polarized(c, [&w[0]; 4]).unwrap(), quartic(c, &w[0]));
}

#[test]
fn polarization_rejects_mixed_tags() {
    let c = cal(AlgebraTag::R);
    let a = FreudenthalVector::zero(AlgebraTag::R);
    let b = FreudenthalVector::zero(AlgebraTag::C);
    assert!(quartic_polarized(c, [&a, &a, &a, &b]).is_err());
}

#[test]
fn derivatives_at_origin_and_euler() {
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        let zero = FreudenthalVector::zero(tag);
        assert!(grad_q(c, &zero).iter().all(Scalar::is_zero));
        assert!(hess_q(c, &zero).is_zero());
        let mut g = rng(6);
        let w = random_vector(&mut g, tag, 4);
        let grad = grad_q(c, &w);
        assert_eq!(dot(&grad, &w.coords()), quartic(c, &w).scale_int(4));
        // Euler for the gradient: H·w = 3·gradQ.
        let hw = hess_q(c, &w).mul_vec(&w.coords());
        assert_eq!(hw, grad.iter().map(|x| x.scale_int(3)).collect::<Vec<_>>());
    }
}

#[test]
fn gradient_matches_finite_difference() {
    // Q is a quartic polynomial, so the central difference with step 1 and
    // step 2 gives the exact directional derivative by Richardson extrapolation.
    let tag = AlgebraTag::C;
    let c = cal(tag);
    let mut g = rng(7);
    let w = random_vector(&mut g, tag, 3);
    let d = random_vector(&mut g, tag, 3);
    let at = |t: i64| quartic(c, &(&w + &d.scale_int(t)));
    let d1 = &at(1) - &at(-1);
    let d2 = &at(2) - &at(-2);
    let deriv = &(&d1.scale_int(8) - &d2) / &int(12);
    assert_eq!(dot(&grad_q(c, &w), &d.coords()), deriv);
}

#[test]
fn gradient_vanishes_on_rank_two() {
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        let w = v(0, JordanElement::diag_ints(tag, [1, 1, 0]), JordanElement::zero(tag), 0);
        assert!(grad_q(c, &w).iter().all(Scalar::is_zero), "{tag}");
        assert!(!hess_q(c, &w).is_zero());
    }
}

#[test]
fn phi_examples() {
    for tag in AlgebraTag::ALL {
        let one = Scalar::ONE;
        assert_eq!(phi(&one, &JordanElement::zero(tag)), FreudenthalVector::from_ints(tag, 1, 0));
        let i = JordanElement::identity(tag);
        assert_eq!(phi(&one, &i), v(1, i.clone(), i.clone(), 1));
        let p = JordanElement::diag_ints(tag, [1, 2, 3]);
        assert_eq!(phi(&one, &p), v(1, p.clone(), JordanElement::diag_ints(tag, [6, 3, 2]), 6));
    }
}

#[test]
fn tangent_space_is_legendrian() {
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        let mut g = rng(8);
        let p = random_jordan(&mut g, tag, 4);
        let ts = affine_tangent_space(&p);
        assert_eq!(vector_rank(&ts), 3 * tag.dim() + 4);
        for a in &ts {
            for b in &ts {
                assert!(omega(c, a, b).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn classifier_examples() {
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        let z = JordanElement::zero(tag);
        assert_eq!(classify(c, &FreudenthalVector::zero(tag)), OrbitLabel::Origin);
        assert_eq!(classify(c, &FreudenthalVector::from_ints(tag, 1, 0)), OrbitLabel::ClosedOrbit);
        let det = classify_detailed(c, &FreudenthalVector::from_ints(tag, 1, 1));
        assert_eq!(det.label, OrbitLabel::Generic);
        assert_eq!(det.q, int(9));
        let rank2 = v(0, JordanElement::diag_ints(tag, [1, 1, 0]), z.clone(), 0);
        assert_eq!(classify(c, &rank2), OrbitLabel::SigmaPlus, "{tag}");
        let id = v(0, JordanElement::identity(tag), z, 0);
        assert_eq!(classify(c, &id), OrbitLabel::Tangential, "{tag}");
    }
}

#[test]
fn classifier_tangent_witnesses() {
    let mut g = rng(9);
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        for _ in 0..3 {
            let p = random_jordan(&mut g, tag, 4);
            assert_eq!(classify(c, &phi(&Scalar::ONE, &p)), OrbitLabel::ClosedOrbit);
            let t = random_jordan(&mut g, tag, 4);
            if !t.det().is_zero() {
                let w = &phi(&Scalar::ONE, &p) + &dphi(&p, &t);
                assert_eq!(classify(c, &w), OrbitLabel::Tangential, "{tag}");
            }
            // A rank-two direction: upper 2×2 block with nonzero comatrix.
            let d = random_scalars(&mut g, 2, 4);
            let mut x = JordanElement::zero(tag).x().clone();
            if tag != AlgebraTag::Zero {
                x[2] = crate::sample::random_composition(&mut g, tag, 4);
            }
            let t2 = JordanElement::new(tag, [d[0].clone(), d[1].clone(), Scalar::ZERO], x).unwrap();
            if t2.comatrix().is_zero() {
                continue;
            }
            let w = &phi(&Scalar::ONE, &p) + &dphi(&p, &t2);
            assert_eq!(classify(c, &w), OrbitLabel::SigmaPlus, "{tag}");
        }
    }
}

#[test]
fn classification_serializes_with_field_names() {
    let c = cal(AlgebraTag::R);
    let out = serde_json::to_value(classify_detailed(c, &FreudenthalVector::from_ints(AlgebraTag::R, 1, 1))).unwrap();
    assert_eq!(out["label"], "Generic");
    assert_eq!(out["Q"], "9");
    assert_eq!(out["gradZero"], false);
}

#[test]
fn discriminant_examples() {
    assert!(discriminant(&CubicCoefficients::from_ints([1, 0, 0, 0])).is_zero());
    assert_eq!(discriminant(&CubicCoefficients::from_ints([1, 0, -1, 0])), int(-4));
    assert!(discriminant(&CubicCoefficients::from_ints([0, 0, 0, 1])).is_zero());
    // (x − 1)²(x + 2): double root.
    assert!(discriminant(&CubicCoefficients::from_ints([1, 0, -3, 2])).is_zero());
}

#[test]
fn discriminant_on_diagonal_slice() {
    let mut g = rng(10);
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        for _ in 0..10 {
            let p: [Scalar; 4] = random_scalars(&mut g, 4, 5).try_into().unwrap();
            let s = &c.delta_z_scaling;
            let w = delta_z_point(tag, &(&p[0] * &s[0]), &(&p[1] * &s[1]), &(&p[2] * &s[2]), &(&p[3] * &s[3]));
            assert_eq!(quartic(c, &w), &c.lambda_q * &discriminant(&CubicCoefficients::new(p)));
        }
    }
}

#[test]
fn hyperdeterminant_examples() {
    let mut id = [Scalar::ZERO; 8].to_vec();
    id[0] = Scalar::ONE;
    id[7] = Scalar::ONE;
    assert_eq!(hyperdeterminant222(&tensor(&id)), Scalar::ONE);
    assert_eq!(cayley(&tensor(&id)), Scalar::ONE);
    let mut g = rng(11);
    let (a, b, cc) = (random_scalars(&mut g, 2, 5), random_scalars(&mut g, 2, 5), random_scalars(&mut g, 2, 5));
    let t: Tensor222 = std::array::from_fn(|i| std::array::from_fn(|j| std::array::from_fn(|k| &(&a[i] * &b[j]) * &cc[k])));
    assert!(hyperdeterminant222(&t).is_zero());
}

#[test]
fn quartic_is_scaled_hyperdeterminant() {
    let tag = AlgebraTag::Zero;
    let c = cal(tag);
    let mut g = rng(12);
    for _ in 0..30 {
        let t = tensor(&random_scalars(&mut g, 8, 5));
        assert_eq!(quartic(c, &tensor_to_vector(tag, &t)), &c.hyperdet_scale * &cayley(&t));
    }
}

#[test]
fn moment_map_examples() {
    for tag in [AlgebraTag::Zero, AlgebraTag::R, AlgebraTag::C] {
        let c = cal(tag);
        let n = FreudenthalVector::dim_for(tag);
        assert!(moment_map(c, &FreudenthalVector::zero(tag)).is_zero());
        assert!(moment_map(c, &FreudenthalVector::from_ints(tag, 1, 0)).is_zero());
        let mut g = rng(13);
        let w = random_vector(&mut g, tag, 3);
        let m = moment_map(c, &w);
        assert_eq!(m.rows(), n);
        let gram = omega_gram(c, tag);
        // Ω(Mu, v) + Ω(u, Mv) = 0 for all u, v.
        let lhs = &m.transpose().matmul(&gram) + &gram.matmul(&m);
        assert!(lhs.is_zero(), "{tag}");
        // Ω(M u, v) = Q̃(w, w, u, v) up to the correction term.
        let raw = moment_map_raw(c, &w);
        let u = random_vector(&mut g, tag, 3);
        let x = random_vector(&mut g, tag, 3);
        let omega_raw = dot(&raw.mul_vec(&u.coords()), &gram.mul_vec(&x.coords()));
        assert_eq!(omega_raw, quartic_polarized(c, [&w, &w, &u, &x]).unwrap());
    }
}

#[test]
fn quadric_rank_examples() {
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        let n = FreudenthalVector::dim_for(tag);
        assert_eq!(quadric_rank(c, tag, &Matrix::zeros(n, n)), 0);
        assert_eq!(quadric_rank(c, tag, &grading_operator(tag).matrix), n);
        let x = act_w(c, &JordanElement::idempotent(tag, 0)).matrix;
        assert_eq!(quadric_rank(c, tag, &x), tag.dim() + 4, "{tag}");
    }
}

#[test]
fn hyperplane_examples() {
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        let cov = |w: &FreudenthalVector| omega_covector(c, w);
        let z = JordanElement::zero(tag);
        let generic = FreudenthalVector::from_ints(tag, 1, 1);
        assert_eq!(classify_hyperplane(c, tag, &cov(&generic)).unwrap(), HyperplaneType::Type1Smooth);
        let tangential = v(0, JordanElement::identity(tag), z.clone(), 0);
        assert_eq!(classify_hyperplane(c, tag, &cov(&tangential)).unwrap(), HyperplaneType::Type2OrdinaryDoublePoint);
        let sigma = v(0, JordanElement::diag_ints(tag, [1, 1, 0]), z, 0);
        assert_eq!(classify_hyperplane(c, tag, &cov(&sigma)).unwrap(), HyperplaneType::Type3QuadricSingularLocus);
        let p = JordanElement::diag_ints(tag, [2, -1, 3]);
        let closed = phi(&Scalar::ONE, &p);
        assert_eq!(classify_hyperplane(c, tag, &cov(&closed)).unwrap(), HyperplaneType::Type4ConeOverSeveri);
        let n = FreudenthalVector::dim_for(tag);
        assert!(classify_hyperplane(c, tag, &vec![Scalar::ZERO; n]).is_err());
        assert!(classify_hyperplane(c, tag, &vec![Scalar::ONE; n + 1]).is_err());
    }
}

#[test]
fn severi_sections() {
    let tag = AlgebraTag::O;
    let d = |x: [i64; 3]| JordanDual(JordanElement::diag_ints(tag, x));
    assert_eq!(classify_severi_hyperplane(&d([1, 1, 1])).unwrap(), SeveriSection::SmoothHomogeneous);
    assert_eq!(classify_severi_hyperplane(&d([1, 1, 0])).unwrap(), SeveriSection::OneQuadraticSingularity);
    assert_eq!(classify_severi_hyperplane(&d([1, 0, 0])).unwrap(), SeveriSection::SingularAlongAP1);
    assert!(classify_severi_hyperplane(&d([0, 0, 0])).is_err());
}

#[test]
fn cubic_contraction_identity() {
    let mut g = rng(14);
    for tag in AlgebraTag::ALL {
        let c = cal(tag);
        let r = random_jordan(&mut g, tag, 4);
        let t = random_jordan(&mut g, tag, 4);
        let s = random_dual(&mut g, tag, 4);
        let crr = c.c_quad(&r, &r);
        let lhs = c.pair(&c.cstar_quad(&s, &c.c_quad(&r, &t)), &crr).scale_int(2);
        let rhs = &(&c.pair(&t, &s) * &c.c_cubic(&r)) + &(&c.pair(&r, &s) * &c.pair(&t, &crr)).scale_int(3);
        assert_eq!(lhs, rhs, "{tag}");
    }
}

#[test]
fn vector_coords_round_trip() {
    let tag = AlgebraTag::O;
    let mut g = rng(15);
    let w = random_vector(&mut g, tag, 5);
    assert_eq!(FreudenthalVector::from_coords(tag, &w.coords()).unwrap(), w);
    assert!(FreudenthalVector::from_coords(tag, &w.coords()[1..]).is_err());
    let json = serde_json::to_string(&w).unwrap();
    let back: FreudenthalVector = serde_json::from_str(&json).unwrap();
    assert_eq!(back, w);
    let bad = r#"{"tag":"R","alpha":"1","r":{"tag":"C","d":["0","0","0"],"x":[["0","0"],["0","0"],["0","0"]]},"sstar":{"tag":"R","d":["0","0","0"],"x":[["0"],["0"],["0"]]},"betastar":"0"}"#;
    assert!(serde_json::from_str::<FreudenthalVector>(bad).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn omega_antisymmetric(seed in any::<u64>(), t in 0usize..5) {
        let tag = AlgebraTag::ALL[t];
        let c = cal(tag);
        let mut g = rng(seed);
        let u = random_vector(&mut g, tag, 6);
        let w = random_vector(&mut g, tag, 6);
        prop_assert!(omega(c, &u, &u).unwrap().is_zero());
        prop_assert_eq!(omega(c, &u, &w).unwrap(), -omega(c, &w, &u).unwrap());
    }

    #[test]
    fn quartic_degree_four(seed in any::<u64>(), t in 0usize..5, k in -4i64..5) {
        let tag = AlgebraTag::ALL[t];
        let c = cal(tag);
        let w = random_vector(&mut rng(seed), tag, 5);
        prop_assert_eq!(quartic(c, &w.scale_int(k)), quartic(c, &w).scale_int(k.pow(4)));
    }

    #[test]
    fn discriminant_matches_textbook(p in proptest::array::uniform4(-30i64..30)) {
        let s = p.map(Scalar::from_int);
        prop_assert_eq!(discriminant(&CubicCoefficients::new(s.clone())), -textbook_discriminant(&s));
    }

    #[test]
    fn hyperdeterminant_matches_cayley(v in proptest::collection::vec(-20i64..20, 8)) {
        let t = tensor(&v.into_iter().map(Scalar::from_int).collect::<Vec<_>>());
        prop_assert_eq!(hyperdeterminant222(&t), cayley(&t));
    }
}
