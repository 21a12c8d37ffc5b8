//! The Freudenthal space `V = C ⊕ W ⊕ W* ⊕ C` over `W = J₃(A)`: symplectic
//! form, quartic invariant and its derivatives, the cubic-curve map `φ`,
//! orbit and hyperplane classifiers, and the degenerate-case specializations
//! (cubic discriminant, 2×2×2 hyperdeterminant).

mod calibration;

pub use calibration::calibrate;

use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraTag;
use crate::error::{same_tag, Error, Result};
use crate::jordan::{JordanDual, JordanElement, JordanRank};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A point `α ⊕ r ⊕ s* ⊕ β*` of `V`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "VectorRepr", into = "VectorRepr")]
pub struct FreudenthalVector {
    tag: AlgebraTag,
    pub alpha: Scalar,
    pub r: JordanElement,
    pub sstar: JordanDual,
    pub betastar: Scalar,
}

#[derive(Serialize, Deserialize)]
struct VectorRepr {
    tag: AlgebraTag,
    alpha: Scalar,
    r: JordanElement,
    sstar: JordanElement,
    betastar: Scalar,
}

impl TryFrom<VectorRepr> for FreudenthalVector {
    type Error = Error;
    fn try_from(v: VectorRepr) -> Result<Self> {
        FreudenthalVector::new(v.tag, v.alpha, v.r, JordanDual(v.sstar), v.betastar)
    }
}

impl From<FreudenthalVector> for VectorRepr {
    fn from(v: FreudenthalVector) -> Self {
        VectorRepr { tag: v.tag, alpha: v.alpha, r: v.r, sstar: v.sstar.0, betastar: v.betastar }
    }
}

impl FreudenthalVector {
    /// `6m + 8`.
    pub const fn dim_for(tag: AlgebraTag) -> usize {
        2 * JordanElement::dim_for(tag) + 2
    }

    pub fn new(
        tag: AlgebraTag,
        alpha: Scalar,
        r: JordanElement,
        sstar: JordanDual,
        betastar: Scalar,
    ) -> Result<Self> {
        same_tag(tag, r.tag())?;
        same_tag(tag, sstar.tag())?;
        Ok(FreudenthalVector { tag, alpha, r, sstar, betastar })
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        FreudenthalVector {
            tag,
            alpha: Scalar::ZERO,
            r: JordanElement::zero(tag),
            sstar: JordanDual::zero(tag),
            betastar: Scalar::ZERO,
        }
    }

    /// `(α, r, s*, β*)` with scalar and Jordan parts given directly.
    pub fn from_parts(alpha: Scalar, r: JordanElement, sstar: JordanElement, betastar: Scalar) -> Self {
        let tag = r.tag();
        assert_eq!(tag, sstar.tag(), "algebra mismatch");
        FreudenthalVector { tag, alpha, r, sstar: JordanDual(sstar), betastar }
    }

    pub fn from_ints(tag: AlgebraTag, alpha: i64, betastar: i64) -> Self {
        FreudenthalVector {
            alpha: Scalar::from_int(alpha),
            betastar: Scalar::from_int(betastar),
            ..Self::zero(tag)
        }
    }

    pub fn basis(tag: AlgebraTag, k: usize) -> Self {
        let mut c = vec![Scalar::ZERO; Self::dim_for(tag)];
        c[k] = Scalar::ONE;
        Self::from_coords(tag, &c).expect("length matches")
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        Self::dim_for(self.tag)
    }

    /// Coordinates `(α, coords(r), coords(s*), β*)`.
    pub fn coords(&self) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(self.dim());
        v.push(self.alpha.clone());
        v.extend(self.r.coords());
        v.extend(self.sstar.coords());
        v.push(self.betastar.clone());
        v
    }

    pub fn from_coords(tag: AlgebraTag, c: &[Scalar]) -> Result<Self> {
        let n = JordanElement::dim_for(tag);
        if c.len() != 2 * n + 2 {
            return Err(Error::InvalidInput(format!(
                "vector over {tag} needs {} coordinates, got {}",
                2 * n + 2,
                c.len()
            )));
        }
        Ok(FreudenthalVector {
            tag,
            alpha: c[0].clone(),
            r: JordanElement::from_coords(tag, &c[1..1 + n])?,
            sstar: JordanDual(JordanElement::from_coords(tag, &c[1 + n..1 + 2 * n])?),
            betastar: c[2 * n + 1].clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.r.is_zero() && self.sstar.is_zero() && self.betastar.is_zero()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        FreudenthalVector {
            tag: self.tag,
            alpha: &self.alpha * s,
            r: self.r.scale(s),
            sstar: JordanDual(self.sstar.scale(s)),
            betastar: &self.betastar * s,
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Scalar::from_int(k))
    }
}

impl Add for &FreudenthalVector {
    type Output = FreudenthalVector;
    fn add(self, rhs: &FreudenthalVector) -> FreudenthalVector {
        FreudenthalVector {
            tag: self.tag,
            alpha: &self.alpha + &rhs.alpha,
            r: &self.r + &rhs.r,
            sstar: JordanDual(&self.sstar.0 + &rhs.sstar.0),
            betastar: &self.betastar + &rhs.betastar,
        }
    }
}

impl Sub for &FreudenthalVector {
    type Output = FreudenthalVector;
    fn sub(self, rhs: &FreudenthalVector) -> FreudenthalVector {
        FreudenthalVector {
            tag: self.tag,
            alpha: &self.alpha - &rhs.alpha,
            r: &self.r - &rhs.r,
            sstar: JordanDual(&self.sstar.0 - &rhs.sstar.0),
            betastar: &self.betastar - &rhs.betastar,
        }
    }
}

/// Dot product of a covector and a vector given in coordinates.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "length mismatch");
    let mut acc = Scalar::ZERO;
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Normalizing constants of the pairing, the cubic forms and the quartic.
///
/// `⟨r, s*⟩ = λ_pair·tr(r∘s)`, `C(r²) = λ_C·com(r)`, `C*(s*²) = λ_C*·com(s*)`;
/// the quartic restricted to `(α, λI, μI, β*)` equals `λ_Q` times the cubic
/// discriminant after the substitution `(α, λ, μ, β*) = (s₀p₀, s₁p₁, s₂p₂, s₃p₃)`
/// with `[s₀…s₃] = delta_z_scaling`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CalibrationConstants {
    pub tag: AlgebraTag,
    pub lambda_c: Scalar,
    pub lambda_cstar: Scalar,
    pub lambda_pair: Scalar,
    pub lambda_q: Scalar,
    pub delta_z_scaling: [Scalar; 4],
    /// `Q = hyperdet_scale · Det` on the diagonal (hyperdeterminant) slice.
    pub hyperdet_scale: Scalar,
    /// Coefficient of the rank-one correction `u ↦ Ω(w,u)·w` in the moment map.
    pub lambda_moment: Scalar,
}

impl CalibrationConstants {
    /// `⟨r, s*⟩`.
    pub fn pair(&self, r: &JordanElement, s: &JordanElement) -> Scalar {
        &self.lambda_pair * &r.trace_form(s)
    }

    /// `C(rt) ∈ W*`, the polarized quadratic map with `C(rr) = λ_C·com(r)`.
    pub fn c_quad(&self, r: &JordanElement, t: &JordanElement) -> JordanDual {
        JordanDual(r.cross(t).0.scale(&(&self.lambda_c * &Scalar::from_ratio(1, 2))))
    }

    /// `C*(s*u*) ∈ W`.
    pub fn cstar_quad(&self, s: &JordanElement, u: &JordanElement) -> JordanElement {
        s.cross(u).0.scale(&(&self.lambda_cstar * &Scalar::from_ratio(1, 2)))
    }

    /// `C(r³) = ⟨r, C(r²)⟩`.
    pub fn c_cubic(&self, r: &JordanElement) -> Scalar {
        self.pair(r, &self.c_quad(r, r))
    }

    /// `C*(s*³) = ⟨C*(s*²), s*⟩`.
    pub fn cstar_cubic(&self, s: &JordanElement) -> Scalar {
        self.pair(&self.cstar_quad(s, s), s)
    }

    fn check(&self, tag: AlgebraTag) {
        assert_eq!(self.tag, tag, "calibration belongs to another algebra");
    }
}

/// `Ω(u, v) = 6(α_u β*_v − α_v β*_u) − (⟨r_u, s*_v⟩ − ⟨r_v, s*_u⟩)`.
pub fn omega(cal: &CalibrationConstants, u: &FreudenthalVector, v: &FreudenthalVector) -> Result<Scalar> {
    same_tag(u.tag, v.tag)?;
    same_tag(cal.tag, u.tag)?;
    Ok(omega_unchecked(cal, u, v))
}

pub(crate) fn omega_unchecked(cal: &CalibrationConstants, u: &FreudenthalVector, v: &FreudenthalVector) -> Scalar {
    let six = Scalar::from_int(6);
    let sym = &(&u.alpha * &v.betastar) - &(&v.alpha * &u.betastar);
    &(&six * &sym) - &(&cal.pair(&u.r, &v.sstar) - &cal.pair(&v.r, &u.sstar))
}

/// Gram matrix `G_ij = Ω(e_i, e_j)` of the symplectic form.
pub fn omega_gram(cal: &CalibrationConstants, tag: AlgebraTag) -> Matrix {
    let n = FreudenthalVector::dim_for(tag);
    let j = JordanElement::dim_for(tag);
    let mut g = Matrix::zeros(n, n);
    g[(0, n - 1)] = Scalar::from_int(6);
    g[(n - 1, 0)] = Scalar::from_int(-6);
    for a in 0..j {
        let ea = JordanElement::basis(tag, a);
        let tf = ea.trace_form_coords();
        for (b, v) in tf.iter().enumerate() {
            if !v.is_zero() {
                let p = &cal.lambda_pair * v;
                g[(1 + a, 1 + j + b)] = -&p;
                g[(1 + j + b, 1 + a)] = p;
            }
        }
    }
    g
}

/// The covector `Ω(y, ·)` in coordinates.
pub fn omega_covector(cal: &CalibrationConstants, y: &FreudenthalVector) -> Vec<Scalar> {
    let g = omega_gram(cal, y.tag);
    g.transpose().mul_vec(&y.coords())
}

/// The vector `y` with `Ω(y, ·) = h`.
pub fn omega_dual(cal: &CalibrationConstants, tag: AlgebraTag, h: &[Scalar]) -> Result<FreudenthalVector> {
    let g = omega_gram(cal, tag);
    if h.len() != g.rows() {
        return Err(Error::InvalidInput(format!("covector needs {} coordinates", g.rows())));
    }
    let y = g.transpose().solve(h).ok_or_else(|| Error::Construction("degenerate symplectic form".into()))?;
    FreudenthalVector::from_coords(tag, &y)
}

/// `3αβ* − ½⟨r, s*⟩`.
fn quartic_a(cal: &CalibrationConstants, w: &FreudenthalVector) -> Scalar {
    &(&w.alpha * &w.betastar).scale_int(3) - &(&cal.pair(&w.r, &w.sstar) * &Scalar::from_ratio(1, 2))
}

/// `Q(w) = (3αβ* − ½⟨r,s*⟩)² + ⅓(β*C(r³) + αC*(s*³)) − ⅙⟨C*(s*²), C(r²)⟩`.
pub fn quartic(cal: &CalibrationConstants, w: &FreudenthalVector) -> Scalar {
    cal.check(w.tag);
    let a = quartic_a(cal, w);
    let crr = cal.c_quad(&w.r, &w.r);
    let css = cal.cstar_quad(&w.sstar, &w.sstar);
    let cubic = &(&w.betastar * &cal.pair(&w.r, &crr)) + &(&w.alpha * &cal.pair(&css, &w.sstar));
    let cross_term = cal.pair(&css, &crr);
    &(&(&a * &a) + &(&cubic * &Scalar::from_ratio(1, 3))) - &(&cross_term * &Scalar::from_ratio(1, 6))
}

/// The symmetric 4-linear form with `Q̃(w,w,w,w) = Q(w)`, by
/// inclusion–exclusion over the 16 partial sums.
pub fn quartic_polarized(cal: &CalibrationConstants, w: [&FreudenthalVector; 4]) -> Result<Scalar> {
    for x in &w[1..] {
        same_tag(w[0].tag, x.tag)?;
    }
    let mut acc = Scalar::ZERO;
    for mask in 1u32..16 {
        let mut sum = FreudenthalVector::zero(w[0].tag);
        for (i, x) in w.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = &sum + x;
            }
        }
        let q = quartic(cal, &sum);
        if (4 - mask.count_ones()) % 2 == 0 {
            acc += q;
        } else {
            acc -= q;
        }
    }
    Ok(&acc * &Scalar::from_ratio(1, 24))
}

/// Gradient of `Q` at `w`, as a covector in coordinates.
pub fn grad_q(cal: &CalibrationConstants, w: &FreudenthalVector) -> Vec<Scalar> {
    cal.check(w.tag);
    let third = Scalar::from_ratio(1, 3);
    let a = quartic_a(cal, w);
    let (r, s) = (&w.r, &w.sstar.0);
    let crr = cal.c_quad(r, r).0;
    let css = cal.cstar_quad(s, s);
    let d_alpha = &(&a * &w.betastar).scale_int(6) + &(&cal.pair(&css, s) * &third);
    let d_beta = &(&a * &w.alpha).scale_int(6) + &(&cal.pair(r, &crr) * &third);
    // Covectors on W and W*, represented in the opposite slot.
    let cov_r = &(&crr.scale(&w.betastar) - &s.scale(&a)) - &cal.c_quad(r, &css).0.scale(&third);
    let cov_s = &(&css.scale(&w.alpha) - &r.scale(&a)) - &cal.cstar_quad(s, &crr).scale(&third);
    let mut g = Vec::with_capacity(w.dim());
    g.push(d_alpha);
    g.extend(cov_r.trace_form_coords().iter().map(|x| x * &cal.lambda_pair));
    g.extend(cov_s.trace_form_coords().iter().map(|x| x * &cal.lambda_pair));
    g.push(d_beta);
    g
}

/// Hessian of `Q` at `w`. Column `j` is the derivative of the (cubic)
/// gradient along `e_j`, taken with the five-point stencil, which is exact
/// on polynomials of degree at most four.
pub fn hess_q(cal: &CalibrationConstants, w: &FreudenthalVector) -> Matrix {
    let n = w.dim();
    let base = w.coords();
    let at = |j: usize, k: i64| {
        let mut c = base.clone();
        c[j] += Scalar::from_int(k);
        grad_q(cal, &FreudenthalVector::from_coords(w.tag, &c).expect("length"))
    };
    let twelfth = Scalar::from_ratio(1, 12);
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| {
            let (p1, m1, p2, m2) = (at(j, 1), at(j, -1), at(j, 2), at(j, -2));
            (0..n)
                .map(|i| {
                    let v = &(&p1[i] - &m1[i]).scale_int(8) - &(&p2[i] - &m2[i]);
                    &v * &twelfth
                })
                .collect()
        })
        .collect();
    Matrix::from_columns(n, &cols)
}

/// `φ(z, P) = (z³, z²P, z·com(P), det P)`; at `z = 1` the affine chart
/// `(1, P, com P, det P)`.
pub fn phi(z: &Scalar, p: &JordanElement) -> FreudenthalVector {
    FreudenthalVector::from_parts(z.pow(3), p.scale(&z.pow(2)), p.comatrix().scale(z), p.det())
}

/// Derivative of `P ↦ φ(1, P)` in direction `T`: `(0, T, cross(P,T), tr(com P ∘ T))`.
pub fn dphi(p: &JordanElement, t: &JordanElement) -> FreudenthalVector {
    FreudenthalVector::from_parts(Scalar::ZERO, t.clone(), p.cross(t).0, p.comatrix().trace_form(t))
}

/// Spanning set of the affine tangent space to the cone over the `φ`-image
/// at `φ(1,P)`: the point itself and `dφ_P(e_k)` for every basis `e_k`.
pub fn affine_tangent_space(p: &JordanElement) -> Vec<FreudenthalVector> {
    let mut out = vec![phi(&Scalar::ONE, p)];
    out.extend(JordanElement::basis_all(p.tag()).iter().map(|e| dphi(p, e)));
    out
}

/// Rank of a list of vectors.
pub fn vector_rank(vs: &[FreudenthalVector]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    Matrix::from_rows(&vs.iter().map(FreudenthalVector::coords).collect::<Vec<_>>()).rank()
}

/// The four orbits of the symplectic group on `V`, plus the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrbitLabel {
    Origin,
    ClosedOrbit,
    SigmaPlus,
    Tangential,
    Generic,
}

/// Output of [`classify_detailed`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub label: OrbitLabel,
    #[serde(rename = "Q")]
    pub q: Scalar,
    #[serde(rename = "gradZero")]
    pub grad_zero: bool,
    #[serde(rename = "hessZero")]
    pub hess_zero: bool,
    /// The quadrics spanned by second derivatives (the moment map) vanish at `w`.
    #[serde(rename = "momentZero")]
    pub moment_zero: bool,
}

pub fn classify_detailed(cal: &CalibrationConstants, w: &FreudenthalVector) -> Classification {
    let q = quartic(cal, w);
    let grad_zero = grad_q(cal, w).iter().all(Scalar::is_zero);
    let hess_zero = grad_zero && hess_q(cal, w).is_zero();
    let moment_zero = grad_zero && moment_map(cal, w).is_zero();
    let label = if w.is_zero() {
        OrbitLabel::Origin
    } else if !q.is_zero() {
        OrbitLabel::Generic
    } else if !grad_zero {
        OrbitLabel::Tangential
    } else if !moment_zero {
        OrbitLabel::SigmaPlus
    } else {
        OrbitLabel::ClosedOrbit
    };
    Classification { label, q, grad_zero, hess_zero, moment_zero }
}

pub fn classify(cal: &CalibrationConstants, w: &FreudenthalVector) -> OrbitLabel {
    classify_detailed(cal, w).label
}

/// Coefficients of `p₀x³ + p₁x² + p₂x + p₃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicCoefficients {
    pub p0: Scalar,
    pub p1: Scalar,
    pub p2: Scalar,
    pub p3: Scalar,
}

impl CubicCoefficients {
    pub fn new(p: [Scalar; 4]) -> Self {
        let [p0, p1, p2, p3] = p;
        CubicCoefficients { p0, p1, p2, p3 }
    }

    pub fn from_ints(p: [i64; 4]) -> Self {
        Self::new(p.map(Scalar::from_int))
    }
}

/// `3(3p₀p₃ − p₁p₂)² + 4(p₀p₂³ + p₁³p₃) − 4p₁²p₂²`.
pub fn discriminant(c: &CubicCoefficients) -> Scalar {
    let CubicCoefficients { p0, p1, p2, p3 } = c;
    let t = &(p0 * p3).scale_int(3) - &(p1 * p2);
    let first = (&t * &t).scale_int(3);
    let second = (&(p0 * &p2.pow(3)) + &(&p1.pow(3) * p3)).scale_int(4);
    let third = (&(p1 * p1) * &(p2 * p2)).scale_int(4);
    &(&first + &second) - &third
}

/// The diagonal slice `(α, λI, μI, β*)`.
pub fn delta_z_point(tag: AlgebraTag, alpha: &Scalar, lambda: &Scalar, mu: &Scalar, beta: &Scalar) -> FreudenthalVector {
    let i = JordanElement::identity(tag);
    FreudenthalVector::from_parts(alpha.clone(), i.scale(lambda), i.scale(mu), beta.clone())
}

/// A 2×2×2 array, indexed `t[i][j][k]`.
pub type Tensor222 = [[[Scalar; 2]; 2]; 2];

/// Cayley's hyperdeterminant, computed as the discriminant of the binary
/// quadratic `det(A₀ + x·A₁)` where `A_i` are the slices `t[i]`.
pub fn hyperdeterminant222(t: &Tensor222) -> Scalar {
    let a = |i: usize, j: usize, k: usize| &t[i][j][k];
    let c0 = &(a(0, 0, 0) * a(0, 1, 1)) - &(a(0, 0, 1) * a(0, 1, 0));
    let c1 = &(&(&(a(0, 0, 0) * a(1, 1, 1)) + &(a(1, 0, 0) * a(0, 1, 1))) - &(a(0, 0, 1) * a(1, 1, 0)))
        - &(a(1, 0, 1) * a(0, 1, 0));
    let c2 = &(a(1, 0, 0) * a(1, 1, 1)) - &(a(1, 0, 1) * a(1, 1, 0));
    &(&c1 * &c1) - &(&c0 * &c2).scale_int(4)
}

/// Places a 2×2×2 array on the diagonal slice: `x₀₀₀ = α`, `x₁₁₁ = β*`,
/// `(x₁₀₀, x₀₁₀, x₀₀₁)` on the diagonal of `r`, `(x₀₁₁, x₁₀₁, x₁₁₀)` on the
/// diagonal of `s*`.
pub fn tensor_to_vector(tag: AlgebraTag, t: &Tensor222) -> FreudenthalVector {
    let r = JordanElement::diag(tag, [t[1][0][0].clone(), t[0][1][0].clone(), t[0][0][1].clone()]);
    let s = JordanElement::diag(tag, [t[0][1][1].clone(), t[1][0][1].clone(), t[1][1][0].clone()]);
    FreudenthalVector::from_parts(t[0][0][0].clone(), r, s, t[1][1][1].clone())
}

/// The operator `M` with `Ω(Mu, v) = Q̃(w, w, u, v)`: `M = −G⁻¹H` with `G`
/// the symplectic Gram matrix and `H = hess/12`.
pub fn moment_map_raw(cal: &CalibrationConstants, w: &FreudenthalVector) -> Matrix {
    let g = omega_gram(cal, w.tag);
    let ginv = g.inverse().expect("symplectic form is nondegenerate");
    let h = hess_q(cal, w).scale(&Scalar::from_ratio(1, 12));
    -&ginv.matmul(&h)
}

/// `u ↦ Ω(w, u)·w`.
pub fn rank_one_symplectic(cal: &CalibrationConstants, w: &FreudenthalVector) -> Matrix {
    let cov = omega_covector(cal, w);
    let wc = w.coords();
    Matrix::from_fn(wc.len(), wc.len(), |i, j| &wc[i] * &cov[j])
}

/// Moment map into the symplectic Lie algebra of `A`: the raw map
/// corrected by `λ_M·Ω(w,·)w`, which removes its component outside
/// `sp₆(A)`.
pub fn moment_map(cal: &CalibrationConstants, w: &FreudenthalVector) -> Matrix {
    let raw = moment_map_raw(cal, w);
    &raw + &rank_one_symplectic(cal, w).scale(&cal.lambda_moment)
}

/// Rank of `q_X(u, v) = ½(Ω(Xu, v) + Ω(Xv, u))`.
pub fn quadric_rank(cal: &CalibrationConstants, tag: AlgebraTag, x: &Matrix) -> usize {
    let g = omega_gram(cal, tag);
    let xtg = x.transpose().matmul(&g);
    let sym = (&xtg + &xtg.transpose()).scale(&Scalar::from_ratio(1, 2));
    sym.rank()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HyperplaneType {
    Type1Smooth,
    Type2OrdinaryDoublePoint,
    Type3QuadricSingularLocus,
    Type4ConeOverSeveri,
}

/// Classifies the hyperplane `{h = 0}` through its `Ω`-dual point.
pub fn classify_hyperplane(cal: &CalibrationConstants, tag: AlgebraTag, h: &[Scalar]) -> Result<HyperplaneType> {
    if h.iter().all(Scalar::is_zero) {
        return Err(Error::InvalidInput("zero hyperplane".into()));
    }
    let y = omega_dual(cal, tag, h)?;
    Ok(match classify(cal, &y) {
        OrbitLabel::Generic => HyperplaneType::Type1Smooth,
        OrbitLabel::Tangential => HyperplaneType::Type2OrdinaryDoublePoint,
        OrbitLabel::SigmaPlus => HyperplaneType::Type3QuadricSingularLocus,
        OrbitLabel::ClosedOrbit => HyperplaneType::Type4ConeOverSeveri,
        OrbitLabel::Origin => unreachable!("nonzero covector has nonzero dual"),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeveriSection {
    SmoothHomogeneous,
    OneQuadraticSingularity,
    SingularAlongAP1,
}

/// Classifies a hyperplane section of the rank-one locus in `P(W)` by the
/// rank of the defining element of `W*`.
pub fn classify_severi_hyperplane(h: &JordanDual) -> Result<SeveriSection> {
    match h.rank_classify() {
        JordanRank::Rank3 => Ok(SeveriSection::SmoothHomogeneous),
        JordanRank::Rank2 => Ok(SeveriSection::OneQuadraticSingularity),
        JordanRank::Rank1 => Ok(SeveriSection::SingularAlongAP1),
        JordanRank::Zero => Err(Error::InvalidInput("zero hyperplane".into())),
    }
}

#[cfg(test)]
mod tests;
