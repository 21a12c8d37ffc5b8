//! Solving for the normalizing constants.
//!
//! The action of `W` is fixed up to the constants in
//! `t.(α, r, s*, β*) = (0, 3αt, κ·cross(r,t), h·tr(t∘s*))`, and similarly
//! for `W*` with `(κ*, h*)`. Requiring that `W` moves the affine chart
//! `φ(1,P)` along its own translations, `t·φ(1,P) = dφ_P(3t)`, and that `W*`
//! does the same on the dual chart `(det S, com S, S, 1)`, gives linear
//! equations for all four. Everything else is then validated, and the
//! discriminant, hyperdeterminant and moment-map scales are fitted.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::liealg::{apply_theta, apply_w, apply_wstar, theta_semisimple_on_w};
use crate::sample::{random_dual, random_jordan, random_scalars, random_vector};

const SAMPLES: usize = 4;
const BOUND: i64 = 4;

fn fail(what: &str) -> Error {
    Error::Calibration(what.to_string())
}

/// The unique `c` with `c·a = b` for every pair, if one exists.
fn common_ratio(name: &str, pairs: &[(Vec<Scalar>, Vec<Scalar>)]) -> Result<Scalar> {
    let mut found: Option<Scalar> = None;
    for (a, b) in pairs {
        if let Some(k) = a.iter().position(|x| !x.is_zero()) {
            let c = &b[k] / &a[k];
            match &found {
                Some(f) if *f != c => return Err(fail(&format!("{name}: inconsistent samples"))),
                _ => found = Some(c),
            }
        }
    }
    let c = found.ok_or_else(|| fail(&format!("{name}: no informative sample")))?;
    for (a, b) in pairs {
        if a.iter().zip(b).any(|(x, y)| &(&c * x) != y) {
            return Err(fail(&format!("{name}: not a scalar multiple")));
        }
    }
    Ok(c)
}

/// Computes and validates the constants for `tag`.
pub fn calibrate(tag: AlgebraTag) -> Result<CalibrationConstants> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_ca1b ^ tag.dim() as u64);
    let three = Scalar::from_int(3);

    // W on the affine chart: s-slot gives κ, β-slot gives h.
    let mut kappa_eq = Vec::new();
    let mut h_eq = Vec::new();
    // W* on the dual chart: r-slot gives κ*, α-slot gives h*.
    let mut kappa_star_eq = Vec::new();
    let mut h_star_eq = Vec::new();
    for _ in 0..SAMPLES {
        let p = random_jordan(&mut rng, tag, BOUND);
        let t = random_jordan(&mut rng, tag, BOUND);
        let target = dphi(&p, &t.scale(&three));
        kappa_eq.push((p.cross(&t).0.coords(), target.sstar.coords()));
        h_eq.push((vec![t.trace_form(&p.comatrix())], vec![target.betastar.clone()]));

        let s = random_jordan(&mut rng, tag, BOUND);
        let u = random_jordan(&mut rng, tag, BOUND);
        // d/dε of (det, com, id, 1) at S along 3u.
        let d_alpha = &s.comatrix().trace_form(&u) * &three;
        let d_r = s.cross(&u).0.scale(&three);
        kappa_star_eq.push((s.cross(&u).0.coords(), d_r.coords()));
        h_star_eq.push((vec![s.comatrix().trace_form(&u)], vec![d_alpha]));
    }
    let kappa = common_ratio("W action on the quadratic slot", &kappa_eq)?;
    let h = common_ratio("W action on the top slot", &h_eq)?;
    let kappa_star = common_ratio("W* action on the quadratic slot", &kappa_star_eq)?;
    let h_star = common_ratio("W* action on the bottom slot", &h_star_eq)?;
    if h != h_star {
        return Err(fail("pairing scales of W and W* disagree, so the symplectic form cannot be invariant"));
    }
    let two = Scalar::from_int(2);
    let mut cal = CalibrationConstants {
        tag,
        lambda_c: &kappa * &two,
        lambda_cstar: &kappa_star * &two,
        lambda_pair: &h * &two,
        lambda_q: Scalar::ONE,
        delta_z_scaling: [Scalar::ONE, Scalar::ONE, Scalar::ONE, Scalar::ONE],
        hyperdet_scale: Scalar::ONE,
        lambda_moment: Scalar::ZERO,
    };

    validate_identities(&cal, &mut rng)?;
    let (lambda_q, scaling) = fit_discriminant(&cal, &mut rng)?;
    cal.lambda_q = lambda_q;
    cal.delta_z_scaling = scaling;
    cal.hyperdet_scale = fit_hyperdeterminant(&cal, &mut rng)?;
    cal.lambda_moment = fit_moment_correction(&cal)?;
    Ok(cal)
}

fn validate_identities(cal: &CalibrationConstants, rng: &mut ChaCha8Rng) -> Result<()> {
    let tag = cal.tag;
    for _ in 0..SAMPLES {
        let p = random_jordan(rng, tag, BOUND);
        if !quartic(cal, &phi(&Scalar::ONE, &p)).is_zero() {
            return Err(fail("quartic does not vanish on the image of phi"));
        }

        let w = random_vector(rng, tag, BOUND);
        let v = random_vector(rng, tag, BOUND);
        let t = random_jordan(rng, tag, BOUND);
        let ts = random_dual(rng, tag, BOUND);
        let g = grad_q(cal, &w);
        for xw in [apply_w(cal, &t, &w), apply_wstar(cal, &ts, &w), apply_theta(cal, &t, &ts, &w)] {
            if !dot(&g, &xw.coords()).is_zero() {
                return Err(fail("quartic is not invariant under the action"));
            }
        }
        let inv_w = &omega_unchecked(cal, &apply_w(cal, &t, &w), &v) + &omega_unchecked(cal, &w, &apply_w(cal, &t, &v));
        let inv_ws =
            &omega_unchecked(cal, &apply_wstar(cal, &ts, &w), &v) + &omega_unchecked(cal, &w, &apply_wstar(cal, &ts, &v));
        if !inv_w.is_zero() || !inv_ws.is_zero() {
            return Err(fail("symplectic form is not invariant under the action"));
        }

        // 2⟨C*(s*C(rt)), C(r²)⟩ = ⟨t,s*⟩C(r³) + 3⟨r,s*⟩C(r²t)
        let r = random_jordan(rng, tag, BOUND);
        let s = random_dual(rng, tag, BOUND);
        let crr = cal.c_quad(&r, &r);
        let lhs = cal.pair(&cal.cstar_quad(&s, &cal.c_quad(&r, &t)), &crr).scale_int(2);
        let rhs = &(&cal.pair(&t, &s) * &cal.c_cubic(&r)) + &(&cal.pair(&r, &s) * &cal.pair(&t, &crr)).scale_int(3);
        if lhs != rhs {
            return Err(fail("cubic contraction identity fails"));
        }

        // θ(r⊗t*)s ∓ θ(s⊗t*)r on the semisimple part.
        let s2 = random_jordan(rng, tag, BOUND);
        let a = theta_semisimple_on_w(cal, &r, &ts, &s2);
        let b = theta_semisimple_on_w(cal, &s2, &ts, &r);
        let st = cal.pair(&s2, &ts);
        let rt = cal.pair(&r, &ts);
        if &a - &b != &r.scale(&st) - &s2.scale(&rt) {
            return Err(fail("antisymmetric theta identity fails"));
        }
        let expected = &(&r.scale(&st) + &s2.scale(&rt)).scale_int(2) - &cal.cstar_quad(&ts, &cal.c_quad(&r, &s2)).scale_int(2);
        if &a + &b != expected {
            return Err(fail("symmetric theta identity fails"));
        }
    }
    Ok(())
}

/// Exponents `(a, b, c, d)` with sum 4, in a fixed order.
fn quartic_monomials() -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in 0..=4 {
        for b in 0..=4 - a {
            for c in 0..=4 - a - b {
                out.push([a, b, c, 4 - a - b - c]);
            }
        }
    }
    out
}

fn eval_monomial(e: &[u32; 4], x: &[Scalar; 4]) -> Scalar {
    (0..4).map(|i| x[i].pow(e[i])).product()
}

/// Fits `Q(s₀p₀, s₁λ, s₂μ, s₃p₃) = c·Δ(p)` on the diagonal slice, with
/// `s₀ = s₃ = 1`. Returns `c` and `[1, s₁, s₂, 1]`.
fn fit_discriminant(cal: &CalibrationConstants, rng: &mut ChaCha8Rng) -> Result<(Scalar, [Scalar; 4])> {
    let tag = cal.tag;
    let monos = quartic_monomials();
    let restricted = |x: &[Scalar; 4]| quartic(cal, &delta_z_point(tag, &x[0], &x[1], &x[2], &x[3]));
    // Interpolate the 35 coefficients of the restriction.
    let coeffs = loop {
        let points: Vec<[Scalar; 4]> = (0..monos.len())
            .map(|_| std::array::from_fn(|_| Scalar::from_int(rng.random_range(-6..=6))))
            .collect();
        let vander = Matrix::from_fn(monos.len(), monos.len(), |i, j| eval_monomial(&monos[j], &points[i]));
        let values: Vec<Scalar> = points.iter().map(restricted).collect();
        if let Some(c) = vander.solve(&values) {
            break c;
        }
    };
    let coeff = |e: [u32; 4]| coeffs[monos.iter().position(|m| *m == e).expect("monomial")].clone();
    // Δ = 27p₀²p₃² − 18p₀p₁p₂p₃ − p₁²p₂² + 4p₀p₂³ + 4p₁³p₃.
    let delta = |e: [u32; 4]| -> i64 {
        match e {
            [2, 0, 0, 2] => 27,
            [1, 1, 1, 1] => -18,
            [0, 2, 2, 0] => -1,
            [1, 0, 3, 0] => 4,
            [0, 3, 0, 1] => 4,
            _ => 0,
        }
    };
    let c = &coeff([2, 0, 0, 2]) / &Scalar::from_int(27);
    let mu_cube = &c.scale_int(4) / &nonzero(coeff([1, 0, 3, 0]), "discriminant fit: missing p0 p2^3 term")?;
    let lambda_cube = &c.scale_int(4) / &nonzero(coeff([0, 3, 0, 1]), "discriminant fit: missing p1^3 p3 term")?;
    let l = lambda_cube.real_cube_root().ok_or_else(|| fail("discriminant fit: scale is not a rational cube"))?;
    let m = mu_cube.real_cube_root().ok_or_else(|| fail("discriminant fit: scale is not a rational cube"))?;
    let scaling = [Scalar::ONE, l, m, Scalar::ONE];
    for e in &monos {
        let scaled = &coeff(*e) * &eval_monomial(e, &scaling);
        if scaled != c.scale_int(delta(*e)) {
            return Err(fail("restriction to the diagonal slice is not a multiple of the discriminant"));
        }
    }
    if c.is_zero() {
        return Err(fail("restriction to the diagonal slice vanishes"));
    }
    Ok((c, scaling))
}

fn nonzero(x: Scalar, what: &str) -> Result<Scalar> {
    if x.is_zero() {
        Err(fail(what))
    } else {
        Ok(x)
    }
}

fn fit_hyperdeterminant(cal: &CalibrationConstants, rng: &mut ChaCha8Rng) -> Result<Scalar> {
    let tag = cal.tag;
    let mut pairs = Vec::new();
    for _ in 0..SAMPLES * 2 {
        let v = random_scalars(rng, 8, BOUND);
        let t: Tensor222 = std::array::from_fn(|i| std::array::from_fn(|j| std::array::from_fn(|k| v[4 * i + 2 * j + k].clone())));
        pairs.push((vec![hyperdeterminant222(&t)], vec![quartic(cal, &tensor_to_vector(tag, &t))]));
    }
    common_ratio("hyperdeterminant fit", &pairs)
}

/// At `w = e_α` the moment map must vanish; the raw map there is a multiple
/// of `u ↦ Ω(w,u)w`.
fn fit_moment_correction(cal: &CalibrationConstants) -> Result<Scalar> {
    let w = FreudenthalVector::from_ints(cal.tag, 1, 0);
    let raw = moment_map_raw(cal, &w);
    let k = rank_one_symplectic(cal, &w);
    let neg_raw = -&raw;
    common_ratio("moment map correction", &[(k.data().to_vec(), neg_raw.data().to_vec())])
}
