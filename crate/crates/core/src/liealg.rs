//! The graded Lie algebra `sp₆(A) = W* ⊕ (h ⊕ C) ⊕ W` acting on `V`, built
//! as explicit operators from the action of `W` and `W*`.

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraTag;
use crate::error::{Error, Result};
use crate::jordan::{JordanDual, JordanElement};
use crate::linalg::{Matrix, SparseVec, Span};
use crate::scalar::Scalar;
use crate::triple::{
    dot, moment_map, omega_covector, omega_dual, quartic, quartic_polarized, CalibrationConstants,
    FreudenthalVector,
};

/// Which graded piece an operator was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GradeLabel {
    FromW,
    FromWstar,
    FromG0,
    Mixed,
}

/// An endomorphism of `V` in the coordinates of [`FreudenthalVector`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieOperator {
    pub tag: AlgebraTag,
    pub matrix: Matrix,
    #[serde(rename = "gradeLabel")]
    pub grade: GradeLabel,
}

impl LieOperator {
    pub fn apply(&self, w: &FreudenthalVector) -> FreudenthalVector {
        FreudenthalVector::from_coords(self.tag, &self.matrix.mul_vec(&w.coords())).expect("shape")
    }

    pub fn bracket(&self, other: &LieOperator) -> LieOperator {
        let grade = match (self.grade, other.grade) {
            (GradeLabel::FromW, GradeLabel::FromWstar) | (GradeLabel::FromWstar, GradeLabel::FromW) => {
                GradeLabel::FromG0
            }
            (GradeLabel::FromG0, g) | (g, GradeLabel::FromG0) => g,
            _ => GradeLabel::Mixed,
        };
        LieOperator { tag: self.tag, matrix: self.matrix.commutator(&other.matrix), grade }
    }

    /// The matrix flattened row-major as a sparse vector.
    pub fn to_sparse(&self) -> SparseVec {
        matrix_to_sparse(&self.matrix)
    }
}

pub fn matrix_to_sparse(m: &Matrix) -> SparseVec {
    m.data()
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i as u32, v.clone()))
        .collect()
}

fn operator_from_map(
    tag: AlgebraTag,
    grade: GradeLabel,
    f: impl Fn(&FreudenthalVector) -> FreudenthalVector,
) -> LieOperator {
    let n = FreudenthalVector::dim_for(tag);
    let cols: Vec<Vec<Scalar>> = (0..n).map(|k| f(&FreudenthalVector::basis(tag, k)).coords()).collect();
    LieOperator { tag, matrix: Matrix::from_columns(n, &cols), grade }
}

/// `t.(α ⊕ r ⊕ s* ⊕ β*) = 0 ⊕ 3αt ⊕ C(rt) ⊕ ½⟨t, s*⟩`.
pub fn apply_w(cal: &CalibrationConstants, t: &JordanElement, w: &FreudenthalVector) -> FreudenthalVector {
    FreudenthalVector::from_parts(
        Scalar::ZERO,
        t.scale(&w.alpha.scale_int(3)),
        cal.c_quad(&w.r, t).0,
        &cal.pair(t, &w.sstar) * &Scalar::from_ratio(1, 2),
    )
}

/// `t*.(α ⊕ r ⊕ s* ⊕ β*) = ½⟨r, t*⟩ ⊕ C*(s*t*) ⊕ 3β*t* ⊕ 0`.
pub fn apply_wstar(cal: &CalibrationConstants, t: &JordanDual, w: &FreudenthalVector) -> FreudenthalVector {
    FreudenthalVector::from_parts(
        &cal.pair(&w.r, t) * &Scalar::from_ratio(1, 2),
        cal.cstar_quad(&w.sstar, t),
        t.scale(&w.betastar.scale_int(3)),
        Scalar::ZERO,
    )
}

pub fn act_w(cal: &CalibrationConstants, t: &JordanElement) -> LieOperator {
    operator_from_map(t.tag(), GradeLabel::FromW, |w| apply_w(cal, t, w))
}

pub fn act_wstar(cal: &CalibrationConstants, t: &JordanDual) -> LieOperator {
    operator_from_map(t.tag(), GradeLabel::FromWstar, |w| apply_wstar(cal, t, w))
}

/// Multiplication by `−3/2, −1/2, 1/2, 3/2` on the four summands.
pub fn grading_operator(tag: AlgebraTag) -> LieOperator {
    let n = FreudenthalVector::dim_for(tag);
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = match i {
            0 => Scalar::from_ratio(-3, 2),
            _ if i == n - 1 => Scalar::from_ratio(3, 2),
            _ if i <= JordanElement::dim_for(tag) => Scalar::from_ratio(-1, 2),
            _ => Scalar::from_ratio(1, 2),
        };
    }
    LieOperator { tag, matrix: m, grade: GradeLabel::FromG0 }
}

/// `[r, t*]` applied to `w`, blockwise:
/// `α ↦ −(3/2)⟨r,t*⟩α`, `x ↦ (3/2)⟨x,t*⟩r − C*(t*C(rx))`,
/// `u* ↦ C(r·C*(u*t*)) − (3/2)⟨r,u*⟩t*`, `β* ↦ (3/2)⟨r,t*⟩β*`.
pub fn apply_theta(
    cal: &CalibrationConstants,
    r: &JordanElement,
    t: &JordanDual,
    w: &FreudenthalVector,
) -> FreudenthalVector {
    let three_halves = Scalar::from_ratio(3, 2);
    let z = &cal.pair(r, t) * &three_halves;
    let x = &w.r;
    let u = &w.sstar;
    let w_part = &r.scale(&(&cal.pair(x, t) * &three_halves)) - &cal.cstar_quad(t, &cal.c_quad(r, x));
    let wstar_part = &cal.c_quad(r, &cal.cstar_quad(u, t)).0 - &t.scale(&(&cal.pair(r, u) * &three_halves));
    FreudenthalVector::from_parts(-&(&z * &w.alpha), w_part, wstar_part, &z * &w.betastar)
}

/// `θ(r ⊗ t*) = [act_w(r), act_wstar(t*)]`, assembled from the closed form.
pub fn theta(cal: &CalibrationConstants, r: &JordanElement, t: &JordanDual) -> LieOperator {
    operator_from_map(r.tag(), GradeLabel::FromG0, |w| apply_theta(cal, r, t, w))
}

/// The component of `θ(r ⊗ t*)` in `h`: `θ(r ⊗ t*) − ⟨r,t*⟩·grading`.
pub fn theta_semisimple(cal: &CalibrationConstants, r: &JordanElement, t: &JordanDual) -> LieOperator {
    let th = theta(cal, r, t);
    let g = grading_operator(r.tag()).matrix.scale(&cal.pair(r, t));
    LieOperator { matrix: &th.matrix - &g, ..th }
}

/// The `W`-block of [`theta_semisimple`] applied to `s`:
/// `(3/2)⟨s,t*⟩r + ½⟨r,t*⟩s − C*(t*C(rs))`.
pub fn theta_semisimple_on_w(
    cal: &CalibrationConstants,
    r: &JordanElement,
    t: &JordanDual,
    s: &JordanElement,
) -> JordanElement {
    let a = r.scale(&(&cal.pair(s, t) * &Scalar::from_ratio(3, 2)));
    let b = s.scale(&(&cal.pair(r, t) * &Scalar::from_ratio(1, 2)));
    &(&a + &b) - &cal.cstar_quad(t, &cal.c_quad(r, s))
}

/// A basis of `sp₆(A)` realized inside `End(V)`.
pub struct Sp6Basis {
    pub tag: AlgebraTag,
    /// `W`-operators, then `W*`-operators, then a basis of the `θ`-span.
    pub operators: Vec<LieOperator>,
    pub w_count: usize,
    pub wstar_count: usize,
    pub theta_dim: usize,
    span: Span,
}

impl Sp6Basis {
    pub fn dim(&self) -> usize {
        self.operators.len()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.span.contains(&matrix_to_sparse(m))
    }

    /// Coefficients of `m` over [`Self::operators`].
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.span.coordinates(&matrix_to_sparse(m))
    }

    /// Checks that the bracket of every pair of basis operators stays in
    /// the span. Returns the first offending pair.
    pub fn check_closure(&self) -> std::result::Result<(), (usize, usize)> {
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let c = self.operators[i].matrix.commutator(&self.operators[j].matrix);
                if !self.span.contains(&matrix_to_sparse(&c)) {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }
}

/// Builds `{act_w(e_i)} ∪ {act_wstar(e_j)} ∪ basis of span{θ(e_i ⊗ e_j)}`.
/// The `θ` operators are the commutators of the first two families.
pub fn build_sp6(cal: &CalibrationConstants, tag: AlgebraTag) -> Result<Sp6Basis> {
    let n = FreudenthalVector::dim_for(tag);
    let jb = JordanElement::basis_all(tag);
    let w_ops: Vec<LieOperator> = jb.iter().map(|e| act_w(cal, e)).collect();
    let wstar_ops: Vec<LieOperator> = jb.iter().map(|e| act_wstar(cal, &JordanDual(e.clone()))).collect();
    let mut span = Span::new(n * n);
    let mut operators = Vec::new();
    for op in w_ops.iter().chain(&wstar_ops) {
        if !span.insert(&op.to_sparse()) {
            return Err(Error::Construction("graded operators are linearly dependent".into()));
        }
        operators.push(op.clone());
    }
    let mut theta_dim = 0;
    for x in &w_ops {
        for y in &wstar_ops {
            let th = x.bracket(y);
            if span.insert(&th.to_sparse()) {
                operators.push(th);
                theta_dim += 1;
            }
        }
    }
    Ok(Sp6Basis { tag, operators, w_count: jb.len(), wstar_count: jb.len(), theta_dim, span })
}

/// `B(x, y) = trace(ρ(x)ρ(y))` on the basis.
pub fn killing_proxy(basis: &Sp6Basis) -> Matrix {
    let ops = &basis.operators;
    let n = ops.len();
    let mut b = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = ops[i].matrix.trace_of_product(&ops[j].matrix);
            b[(j, i)] = v.clone();
            b[(i, j)] = v;
        }
    }
    b
}

/// Projective dimension of the orbit through `w`: `rank({Xw} ∪ {w}) − 1`.
pub fn orbit_dimension(basis: &Sp6Basis, w: &FreudenthalVector) -> usize {
    let mut rows: Vec<Vec<Scalar>> = basis.operators.iter().map(|x| x.matrix.mul_vec(&w.coords())).collect();
    rows.push(w.coords());
    Matrix::from_rows(&rows).rank().saturating_sub(1)
}

/// `g·X·g⁻¹` for `X = act_w(E₁₁)` and `g = exp(act_w(a))·exp(act_wstar(b))`,
/// a point of the adjoint orbit of `X`.
pub fn quadric_representative(cal: &CalibrationConstants, a: &JordanElement, b: &JordanDual) -> Matrix {
    let tag = a.tag();
    let x = act_w(cal, &JordanElement::idempotent(tag, 0)).matrix;
    let na = act_w(cal, a).matrix;
    let nb = act_wstar(cal, b).matrix;
    let g = na.exp_nilpotent().matmul(&nb.exp_nilpotent());
    let ginv = (-&nb).exp_nilpotent().matmul(&(-&na).exp_nilpotent());
    g.matmul(&x).matmul(&ginv)
}

/// Coordinates of the `C ⊕ sp₆(A)` component of `ψ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G0Component {
    pub coeffs: Vec<Scalar>,
    #[serde(rename = "inSpan")]
    pub in_span: bool,
}

/// Image of `ψ` in `C* ⊕ V* ⊕ (C ⊕ sp₆(A)) ⊕ V ⊕ C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiImage {
    pub u4: Scalar,
    #[serde(rename = "Vstar")]
    pub vstar: Vec<Scalar>,
    pub u3v: Scalar,
    pub g0: G0Component,
    #[serde(rename = "V")]
    pub v: Vec<Scalar>,
    pub scalar: Scalar,
}

/// `ψ(u, A, v) = (u⁴, u³A, u³v, u²Q(A,A,·,·), u²vA − uQ(A,·,·,·), u²v² − Q(A))`.
///
/// `u³A` is written in `V*` as the covector `u³Ω(A, ·)`; `Q(A,A,·,·)` is the
/// moment map, given in coordinates over `basis`; `Q(A,·,·,·)` is read as
/// the vector `y` with `Ω(y, ·) = Q̃(A,A,A,·)`.
pub fn psi(
    cal: &CalibrationConstants,
    basis: &Sp6Basis,
    u: &Scalar,
    a: &FreudenthalVector,
    v: &Scalar,
) -> Result<PsiImage> {
    let tag = a.tag();
    let u2 = u.pow(2);
    let u3 = u.pow(3);
    let vstar = omega_covector(cal, a).iter().map(|x| x * &u3).collect();
    let m = moment_map(cal, a).scale(&u2);
    let coeffs = basis
        .coordinates(&m)
        .ok_or_else(|| Error::Construction("moment map left the symplectic Lie algebra".into()))?;
    let n = FreudenthalVector::dim_for(tag);
    let cubic_cov: Vec<Scalar> = (0..n)
        .map(|k| quartic_polarized(cal, [a, a, a, &FreudenthalVector::basis(tag, k)]))
        .collect::<Result<_>>()?;
    let y = omega_dual(cal, tag, &cubic_cov)?;
    let vpart = &a.scale(&(&u2 * v)) - &y.scale(u);
    let scalar = &(&u2 * &v.pow(2)) - &quartic(cal, a);
    Ok(PsiImage {
        u4: u.pow(4),
        vstar,
        u3v: &u3 * v,
        g0: G0Component { coeffs, in_span: true },
        v: vpart.coords(),
        scalar,
    })
}

/// Graded dimensions of `C* ⊕ V* ⊕ (C ⊕ sp₆(A)) ⊕ V ⊕ C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedAlgebraDescription {
    pub tag: AlgebraTag,
    pub pieces: [usize; 5],
    pub total: usize,
}

/// Graded dimension count from a computed `sp₆(A)` dimension.
pub fn magic_dimensions(tag: AlgebraTag, sp6_dim: usize) -> GradedAlgebraDescription {
    let v = FreudenthalVector::dim_for(tag);
    let pieces = [1, v, 1 + sp6_dim, v, 1];
    GradedAlgebraDescription { tag, pieces, total: pieces.iter().sum() }
}

/// Directional derivative of `Q` along the vector field `w ↦ Xw`.
pub fn quartic_derivative_along(grad: &[Scalar], x: &LieOperator, w: &FreudenthalVector) -> Scalar {
    dot(grad, &x.matrix.mul_vec(&w.coords()))
}
