//! Randomized exact verification suites with replayable reports.
//!
//! Trial `k` of a run with seed `s` draws from a ChaCha8 stream seeded with
//! `s` on stream `k`, so any failing trial can be replayed on its own.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{clifford_map, clifford_quadratic, AlgebraTag};
use crate::catalog::{catalog_checks, check_orbit_dims};
use crate::error::{Error, Result};
use crate::jordan::JordanElement;
use crate::liealg::{
    act_w, act_wstar, apply_theta, build_sp6, killing_proxy, magic_dimensions, quadric_representative,
    quartic_derivative_along, theta_semisimple_on_w, Sp6Basis,
};
use crate::linalg::Matrix;
use crate::sample::{random_composition, random_dual, random_imaginary, random_jordan, random_scalars, random_vector};
use crate::scalar::Scalar;
use crate::triple::{
    delta_z_point, discriminant, dot, grad_q, hyperdeterminant222, moment_map, omega_gram, phi, quadric_rank,
    quartic, quartic_polarized, tensor_to_vector, CalibrationConstants, CubicCoefficients, Tensor222,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Algebra,
    Clifford,
    Jordan,
    Omega,
    Quartic,
    #[serde(rename = "lemma51")]
    BracketIdentities,
    Sp6,
    Moment,
    QuadricRank,
    Hyperdet,
    Discriminant,
    Catalog,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Algebra,
        Suite::Clifford,
        Suite::Jordan,
        Suite::Omega,
        Suite::Quartic,
        Suite::BracketIdentities,
        Suite::Sp6,
        Suite::Moment,
        Suite::QuadricRank,
        Suite::Hyperdet,
        Suite::Discriminant,
        Suite::Catalog,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Clifford => "clifford",
            Suite::Jordan => "jordan",
            Suite::Omega => "omega",
            Suite::Quartic => "quartic",
            Suite::BracketIdentities => "lemma51",
            Suite::Sp6 => "sp6",
            Suite::Moment => "moment",
            Suite::QuadricRank => "quadric-rank",
            Suite::Hyperdet => "hyperdet",
            Suite::Discriminant => "discriminant",
            Suite::Catalog => "catalog",
        }
    }

    /// Whether the suite reads calibration constants.
    pub fn needs_calibration(self) -> bool {
        !matches!(self, Suite::Algebra | Suite::Clifford | Suite::Jordan)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub trials: u64,
    pub seed: u64,
    pub coeff_bound: i64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { trials: 100, seed: 0, coeff_bound: 5 }
    }
}

/// The first failing trial of a run, with enough data to replay it.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub trial: u64,
    pub seed: u64,
    pub check: String,
    pub inputs: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub algebra: AlgebraTag,
    pub trials: u64,
    pub seed: u64,
    #[serde(rename = "coeffBound")]
    pub coeff_bound: i64,
    /// Number of individual identity checks performed.
    pub checks: u64,
    pub failures: u64,
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    /// Filled in by callers that time the run.
    #[serde(rename = "elapsedMs", skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// The RNG for one trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

struct Failure {
    check: String,
    inputs: Value,
}

fn failure(check: &str, inputs: Value) -> Failure {
    Failure { check: check.to_string(), inputs }
}

struct Runner {
    report: VerificationReport,
}

impl Runner {
    fn new(suite: Suite, tag: AlgebraTag, opts: &VerifyOptions) -> Self {
        Runner {
            report: VerificationReport {
                suite,
                algebra: tag,
                trials: 0,
                seed: opts.seed,
                coeff_bound: opts.coeff_bound,
                checks: 0,
                failures: 0,
                counterexample: None,
                skipped: None,
                elapsed_ms: None,
            },
        }
    }

    /// Runs `trials` trials; each returns its check count or a failure.
    fn trials(
        mut self,
        trials: u64,
        seed: u64,
        mut f: impl FnMut(&mut ChaCha8Rng) -> std::result::Result<u64, Failure>,
    ) -> VerificationReport {
        for k in 0..trials {
            let mut rng = trial_rng(seed, k);
            self.record(k, seed, f(&mut rng));
        }
        self.report.trials = trials;
        self.report
    }

    fn record(&mut self, trial: u64, seed: u64, outcome: std::result::Result<u64, Failure>) {
        match outcome {
            Ok(n) => self.report.checks += n,
            Err(fl) => {
                self.report.checks += 1;
                self.report.failures += 1;
                if self.report.counterexample.is_none() {
                    self.report.counterexample =
                        Some(Counterexample { trial, seed, check: fl.check, inputs: fl.inputs });
                }
            }
        }
    }

    fn skipped(mut self, why: &str) -> VerificationReport {
        self.report.skipped = Some(why.to_string());
        self.report
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or(Value::Null)
}

fn require_cal(suite: Suite, tag: AlgebraTag, cal: Option<&CalibrationConstants>) -> Result<&CalibrationConstants> {
    let cal = cal.ok_or_else(|| Error::Calibration(format!("suite `{suite}` needs calibration constants for {tag}")))?;
    if cal.tag != tag {
        return Err(Error::TagMismatch { left: cal.tag, right: tag });
    }
    Ok(cal)
}

/// Expected `dim sp₆(A)` and `θ`-span dimension.
pub fn expected_sp6_dims(tag: AlgebraTag) -> (usize, usize) {
    match tag {
        AlgebraTag::Zero => (9, 3),
        AlgebraTag::R => (21, 9),
        AlgebraTag::C => (35, 17),
        AlgebraTag::H => (66, 36),
        AlgebraTag::O => (133, 79),
    }
}

/// Expected total dimension of the five-step graded algebra.
pub fn expected_magic_total(tag: AlgebraTag) -> usize {
    match tag {
        AlgebraTag::Zero => 28,
        AlgebraTag::R => 52,
        AlgebraTag::C => 78,
        AlgebraTag::H => 133,
        AlgebraTag::O => 248,
    }
}

/// Runs one suite. `basis` may be supplied to avoid rebuilding `sp₆(A)`.
pub fn run_suite(
    suite: Suite,
    tag: AlgebraTag,
    cal: Option<&CalibrationConstants>,
    basis: Option<&Sp6Basis>,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let runner = Runner::new(suite, tag, opts);
    let (n, seed, bound) = (opts.trials, opts.seed, opts.coeff_bound);
    if bound < 1 {
        return Err(Error::InvalidInput("coefficient bound must be positive".into()));
    }
    let owned;
    let need_basis = matches!(suite, Suite::Omega | Suite::Quartic | Suite::Sp6 | Suite::Moment);
    let basis = match basis {
        Some(b) => Some(b),
        None if need_basis => {
            owned = build_sp6(require_cal(suite, tag, cal)?, tag)?;
            Some(&owned)
        }
        None => None,
    };
    Ok(match suite {
        Suite::Algebra => runner.trials(n, seed, |rng| algebra_trial(rng, tag, bound)),
        Suite::Clifford => {
            if !matches!(tag, AlgebraTag::C | AlgebraTag::H | AlgebraTag::O) {
                return Ok(runner.skipped("the Clifford map needs algebras C, H or O"));
            }
            runner.trials(n, seed, |rng| clifford_trial(rng, tag, bound))
        }
        Suite::Jordan => runner.trials(n, seed, |rng| jordan_trial(rng, tag, bound)),
        Suite::Omega => {
            let cal = require_cal(suite, tag, cal)?;
            let basis = basis.expect("basis built above");
            let g = omega_gram(cal, tag);
            runner.trials(n, seed, |rng| omega_trial(rng, cal, basis, &g, bound))
        }
        Suite::Quartic => {
            let cal = require_cal(suite, tag, cal)?;
            let basis = basis.expect("basis built above");
            runner.trials(n, seed, |rng| quartic_trial(rng, cal, basis, bound))
        }
        Suite::BracketIdentities => {
            let cal = require_cal(suite, tag, cal)?;
            runner.trials(n, seed, |rng| lemma_trial(rng, cal, bound))
        }
        Suite::Sp6 => {
            let cal = require_cal(suite, tag, cal)?;
            sp6_structure(runner, cal, basis.expect("basis built above"), seed)
        }
        Suite::Moment => {
            let cal = require_cal(suite, tag, cal)?;
            let basis = basis.expect("basis built above");
            runner.trials(n, seed, |rng| {
                let w = random_vector(rng, tag, bound);
                let m = moment_map(cal, &w);
                if basis.contains(&m) {
                    Ok(1)
                } else {
                    Err(failure("moment map lies in sp6", json!({ "w": to_json(&w) })))
                }
            })
        }
        Suite::QuadricRank => {
            let cal = require_cal(suite, tag, cal)?;
            let expected = tag.dim() + 4;
            runner.trials(n, seed, |rng| {
                let a = random_jordan(rng, tag, bound);
                let b = random_dual(rng, tag, bound);
                let x = quadric_representative(cal, &a, &b);
                let rank = quadric_rank(cal, tag, &x);
                if rank == expected {
                    Ok(1)
                } else {
                    Err(failure(
                        &format!("quadric rank {rank} equals {expected}"),
                        json!({ "a": to_json(&a), "b": to_json(&b) }),
                    ))
                }
            })
        }
        Suite::Hyperdet => {
            if tag != AlgebraTag::Zero {
                return Ok(runner.skipped("the hyperdeterminant lives on the algebra Zero"));
            }
            let cal = require_cal(suite, tag, cal)?;
            runner.trials(n, seed, |rng| {
                let v = random_scalars(rng, 8, bound);
                let t: Tensor222 =
                    std::array::from_fn(|i| std::array::from_fn(|j| std::array::from_fn(|k| v[4 * i + 2 * j + k].clone())));
                let q = quartic(cal, &tensor_to_vector(tag, &t));
                if q == &cal.hyperdet_scale * &hyperdeterminant222(&t) {
                    Ok(1)
                } else {
                    Err(failure("Q equals the scaled hyperdeterminant", json!({ "tensor": to_json(&v) })))
                }
            })
        }
        Suite::Discriminant => {
            let cal = require_cal(suite, tag, cal)?;
            runner.trials(n, seed, |rng| discriminant_trial(rng, cal, bound))
        }
        Suite::Catalog => {
            let mut runner = runner;
            for c in catalog_checks() {
                let outcome = if c.passed { Ok(1) } else { Err(failure(&c.name, Value::Null)) };
                runner.record(0, seed, outcome);
            }
            if let Some(cal) = cal.filter(|c| c.tag == tag) {
                let mut rng = trial_rng(seed, 0);
                let samples = n.clamp(1, 20) as usize;
                let rep = check_orbit_dims(cal, tag, samples, bound, &mut rng)?;
                let outcome = if rep.passed {
                    Ok(samples as u64)
                } else {
                    Err(failure("rank of dphi and tangential hypersurface", to_json(&rep)))
                };
                runner.record(0, seed, outcome);
            }
            runner.report.trials = 1;
            runner.report
        }
    })
}

fn algebra_trial(rng: &mut ChaCha8Rng, tag: AlgebraTag, bound: i64) -> std::result::Result<u64, Failure> {
    let x = random_composition(rng, tag, bound);
    let y = random_composition(rng, tag, bound);
    let inputs = || json!({ "x": to_json(&x), "y": to_json(&y) });
    let xy = x.mul(&y);
    if xy.norm() != &x.norm() * &y.norm() {
        return Err(failure("N(xy) = N(x)N(y)", inputs()));
    }
    if xy.conj() != y.conj().mul(&x.conj()) {
        return Err(failure("conj(xy) = conj(y)conj(x)", inputs()));
    }
    if x.mul(&xy) != x.mul(&x).mul(&y) {
        return Err(failure("x(xy) = (xx)y", inputs()));
    }
    if xy.mul(&y) != x.mul(&y.mul(&y)) {
        return Err(failure("(xy)y = x(yy)", inputs()));
    }
    Ok(4)
}

fn clifford_trial(rng: &mut ChaCha8Rng, tag: AlgebraTag, bound: i64) -> std::result::Result<u64, Failure> {
    let mut checks = 0;
    for tb in [AlgebraTag::C, AlgebraTag::H, AlgebraTag::O] {
        let a = random_imaginary(rng, tag, bound);
        let b = random_imaginary(rng, tb, bound);
        let inputs = || json!({ "a": to_json(&a), "b": to_json(&b) });
        let phi = clifford_map(&a, &b).map_err(|e| failure(&e.to_string(), inputs()))?;
        let q = clifford_quadratic(&a, &b);
        if phi.matmul(&phi) != Matrix::scalar(phi.rows(), &q) {
            return Err(failure(&format!("phi(a+b)^2 = Q(a+b) Id on {tag}x{tb}"), inputs()));
        }
        checks += 1;
    }
    Ok(checks)
}

fn jordan_trial(rng: &mut ChaCha8Rng, tag: AlgebraTag, bound: i64) -> std::result::Result<u64, Failure> {
    let p = random_jordan(rng, tag, bound);
    let inputs = || json!({ "P": to_json(&p) });
    let det = p.det();
    let com = p.comatrix();
    let id = JordanElement::identity(tag);
    if com.jordan_product(&p) != id.scale(&det) {
        return Err(failure("com(P) P = det(P) I", inputs()));
    }
    if com.comatrix() != p.scale(&det) {
        return Err(failure("com(com(P)) = det(P) P", inputs()));
    }
    if p.cubic_trilinear(&p, &p) != det.scale_int(6) {
        return Err(failure("T(P,P,P) = 6 det(P)", inputs()));
    }
    if com.trace_form(&p) != det.scale_int(3) {
        return Err(failure("tr(com(P) P) = 3 det(P)", inputs()));
    }
    Ok(4)
}

fn omega_trial(
    rng: &mut ChaCha8Rng,
    cal: &CalibrationConstants,
    basis: &Sp6Basis,
    g: &Matrix,
    bound: i64,
) -> std::result::Result<u64, Failure> {
    let tag = cal.tag;
    let u = random_vector(rng, tag, bound).coords();
    let v = random_vector(rng, tag, bound).coords();
    let gv = g.mul_vec(&v);
    let gtu = g.transpose().mul_vec(&u);
    if dot(&u, &gv) != -dot(&v, &g.mul_vec(&u)) {
        return Err(failure("Omega is antisymmetric", json!({ "u": to_json(&u), "v": to_json(&v) })));
    }
    for (i, x) in basis.operators.iter().enumerate() {
        // Ω(Xu, v) + Ω(u, Xv) with Ω(a, b) = aᵀGb.
        let lhs = &dot(&x.matrix.mul_vec(&u), &gv) + &dot(&gtu, &x.matrix.mul_vec(&v));
        if !lhs.is_zero() {
            return Err(failure(
                &format!("Omega invariant under basis operator {i}"),
                json!({ "u": to_json(&u), "v": to_json(&v), "operator": i }),
            ));
        }
    }
    Ok(1 + basis.dim() as u64)
}

fn quartic_trial(
    rng: &mut ChaCha8Rng,
    cal: &CalibrationConstants,
    basis: &Sp6Basis,
    bound: i64,
) -> std::result::Result<u64, Failure> {
    let tag = cal.tag;
    let w = random_vector(rng, tag, bound);
    let inputs = || json!({ "w": to_json(&w) });
    let q = quartic(cal, &w);
    let grad = grad_q(cal, &w);
    if dot(&grad, &w.coords()) != q.scale_int(4) {
        return Err(failure("Euler identity gradQ(w).w = 4Q(w)", inputs()));
    }
    match quartic_polarized(cal, [&w, &w, &w, &w]) {
        Ok(p) if p == q => {}
        _ => return Err(failure("polarization restricts to Q", inputs())),
    }
    let p = random_jordan(rng, tag, bound);
    if !quartic(cal, &phi(&Scalar::ONE, &p)).is_zero() {
        return Err(failure("Q vanishes on phi(1, P)", json!({ "P": to_json(&p) })));
    }
    for (i, x) in basis.operators.iter().enumerate() {
        if !quartic_derivative_along(&grad, x, &w).is_zero() {
            return Err(failure(
                &format!("gradQ(w).(Xw) = 0 for basis operator {i}"),
                json!({ "w": to_json(&w), "operator": i }),
            ));
        }
    }
    Ok(3 + basis.dim() as u64)
}

fn lemma_trial(rng: &mut ChaCha8Rng, cal: &CalibrationConstants, bound: i64) -> std::result::Result<u64, Failure> {
    let tag = cal.tag;
    let r = random_jordan(rng, tag, bound);
    let s = random_jordan(rng, tag, bound);
    let t = random_dual(rng, tag, bound);
    let inputs = || json!({ "r": to_json(&r), "s": to_json(&s), "t": to_json(&t) });
    let a = theta_semisimple_on_w(cal, &r, &t, &s);
    let b = theta_semisimple_on_w(cal, &s, &t, &r);
    let st = cal.pair(&s, &t);
    let rt = cal.pair(&r, &t);
    if &a - &b != &r.scale(&st) - &s.scale(&rt) {
        return Err(failure("theta(r,t)s - theta(s,t)r = <s,t>r - <r,t>s", inputs()));
    }
    let sym = &(&r.scale(&st) + &s.scale(&rt)).scale_int(2) - &cal.cstar_quad(&t, &cal.c_quad(&r, &s)).scale_int(2);
    if &a + &b != sym {
        return Err(failure("theta(r,t)s + theta(s,t)r = 2<s,t>r + 2<r,t>s - 2C*(t C(rs))", inputs()));
    }
    // The closed form of θ agrees with the commutator of the two actions.
    let w = random_vector(rng, tag, bound);
    let xw = act_w(cal, &r);
    let yw = act_wstar(cal, &t);
    let comm = xw.bracket(&yw).apply(&w);
    if comm != apply_theta(cal, &r, &t, &w) {
        return Err(failure("theta closed form equals the commutator", json!({ "r": to_json(&r), "t": to_json(&t), "w": to_json(&w) })));
    }
    Ok(3)
}

fn discriminant_trial(rng: &mut ChaCha8Rng, cal: &CalibrationConstants, bound: i64) -> std::result::Result<u64, Failure> {
    let p: [Scalar; 4] = random_scalars(rng, 4, bound).try_into().expect("four scalars");
    let s = &cal.delta_z_scaling;
    let w = delta_z_point(cal.tag, &(&p[0] * &s[0]), &(&p[1] * &s[1]), &(&p[2] * &s[2]), &(&p[3] * &s[3]));
    let d = discriminant(&CubicCoefficients::new(p.clone()));
    if quartic(cal, &w) == &cal.lambda_q * &d {
        Ok(1)
    } else {
        Err(failure("Q on the diagonal slice is the scaled discriminant", json!({ "p": to_json(&p) })))
    }
}

fn sp6_structure(mut runner: Runner, cal: &CalibrationConstants, basis: &Sp6Basis, seed: u64) -> VerificationReport {
    let tag = cal.tag;
    let (dim, theta_dim) = expected_sp6_dims(tag);
    let mut check = |ok: bool, name: String, inputs: Value| {
        runner.record(0, seed, if ok { Ok(1) } else { Err(failure(&name, inputs)) });
    };
    check(basis.dim() == dim, format!("dim sp6 = {dim} (got {})", basis.dim()), Value::Null);
    check(basis.theta_dim == theta_dim, format!("dim theta-span = {theta_dim} (got {})", basis.theta_dim), Value::Null);
    let closure = basis.check_closure();
    check(closure.is_ok(), "span is closed under commutators".into(), json!(closure.err()));
    let rank = killing_proxy(basis).rank();
    check(rank == basis.dim(), format!("trace form has full rank (got {rank})"), Value::Null);
    let total = magic_dimensions(tag, basis.dim()).total;
    let expected = expected_magic_total(tag);
    check(total == expected, format!("graded total = {expected} (got {total})"), Value::Null);
    runner.report.trials = 1;
    runner.report
}

/// Runs every suite in order, building `sp₆(A)` once.
pub fn run_all(
    tag: AlgebraTag,
    cal: Option<&CalibrationConstants>,
    opts: &VerifyOptions,
) -> Result<Vec<VerificationReport>> {
    let cal = require_cal(Suite::Sp6, tag, cal)?;
    let basis = build_sp6(cal, tag)?;
    Suite::ALL.iter().map(|&s| run_suite(s, tag, Some(cal), Some(&basis), opts)).collect()
}
