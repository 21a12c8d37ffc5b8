//! The exceptional-type Jordan algebra `J₃(A)` of 3×3 `A`-Hermitian matrices.
//!
//! An element stores the diagonal `(d₁, d₂, d₃)` and the off-diagonal
//! entries `(x₁, x₂, x₃)` of
//!
//! ```text
//! ⎡ d₁  x̄₃  x̄₂ ⎤
//! ⎢ x₃  d₂  x̄₁ ⎥
//! ⎣ x₂  x₁  d₃ ⎦
//! ```

use std::ops::{Add, Deref, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::algebra::{basis_norm, AlgebraTag, CompositionElement};
use crate::error::{same_tag, Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "JordanRepr", into = "JordanRepr")]
pub struct JordanElement {
    tag: AlgebraTag,
    d: [Scalar; 3],
    x: [CompositionElement; 3],
}

#[derive(Serialize, Deserialize)]
struct JordanRepr {
    tag: AlgebraTag,
    d: Vec<Scalar>,
    x: Vec<Vec<Scalar>>,
}

impl TryFrom<JordanRepr> for JordanElement {
    type Error = Error;
    fn try_from(r: JordanRepr) -> Result<Self> {
        let d: [Scalar; 3] = r
            .d
            .try_into()
            .map_err(|_| Error::InvalidInput("`d` needs 3 entries".into()))?;
        if r.x.len() != 3 {
            return Err(Error::InvalidInput("`x` needs 3 entries".into()));
        }
        let mut xs = r.x.into_iter().map(|c| CompositionElement::new(r.tag, c));
        let x = [xs.next().unwrap()?, xs.next().unwrap()?, xs.next().unwrap()?];
        Ok(JordanElement { tag: r.tag, d, x })
    }
}

impl From<JordanElement> for JordanRepr {
    fn from(j: JordanElement) -> Self {
        JordanRepr {
            tag: j.tag,
            d: j.d.to_vec(),
            x: j.x.into_iter().map(CompositionElement::into_coeffs).collect(),
        }
    }
}

/// An element of `W*`, identified with `J₃(A)` through the trace form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JordanDual(pub JordanElement);

impl Deref for JordanDual {
    type Target = JordanElement;
    fn deref(&self) -> &JordanElement {
        &self.0
    }
}

impl JordanDual {
    pub fn zero(tag: AlgebraTag) -> Self {
        JordanDual(JordanElement::zero(tag))
    }

    pub fn into_inner(self) -> JordanElement {
        self.0
    }
}

/// A literal 3×3 matrix over a composition algebra.
pub type Mat3 = [[CompositionElement; 3]; 3];

/// Literal matrix product.
pub fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = a[i][0].mul(&b[0][j]);
            for k in 1..3 {
                acc = &acc + &a[i][k].mul(&b[k][j]);
            }
            acc
        })
    })
}

/// Rank stratum of a Jordan element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JordanRank {
    Zero,
    Rank1,
    Rank2,
    Rank3,
}

impl JordanElement {
    /// Number of coordinates, `3m + 3`.
    pub const fn dim_for(tag: AlgebraTag) -> usize {
        3 * tag.dim() + 3
    }

    pub fn new(tag: AlgebraTag, d: [Scalar; 3], x: [CompositionElement; 3]) -> Result<Self> {
        for xi in &x {
            same_tag(tag, xi.tag())?;
        }
        Ok(JordanElement { tag, d, x })
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        let z = CompositionElement::zero(tag);
        JordanElement { tag, d: [Scalar::ZERO, Scalar::ZERO, Scalar::ZERO], x: [z.clone(), z.clone(), z] }
    }

    pub fn diag(tag: AlgebraTag, d: [Scalar; 3]) -> Self {
        JordanElement { d, ..Self::zero(tag) }
    }

    pub fn diag_ints(tag: AlgebraTag, d: [i64; 3]) -> Self {
        Self::diag(tag, d.map(Scalar::from_int))
    }

    pub fn identity(tag: AlgebraTag) -> Self {
        Self::diag_ints(tag, [1, 1, 1])
    }

    /// The diagonal idempotent `E_ii` (`i` in `0..3`).
    pub fn idempotent(tag: AlgebraTag, i: usize) -> Self {
        let mut d = [0; 3];
        d[i] = 1;
        Self::diag_ints(tag, d)
    }

    /// The `k`-th coordinate basis vector.
    pub fn basis(tag: AlgebraTag, k: usize) -> Self {
        let mut c = vec![Scalar::ZERO; Self::dim_for(tag)];
        c[k] = Scalar::ONE;
        Self::from_coords(tag, &c).expect("length matches")
    }

    pub fn basis_all(tag: AlgebraTag) -> Vec<Self> {
        (0..Self::dim_for(tag)).map(|k| Self::basis(tag, k)).collect()
    }

    /// Coordinates `(d₁, d₂, d₃, x₁…, x₂…, x₃…)`.
    pub fn coords(&self) -> Vec<Scalar> {
        let mut v = self.d.to_vec();
        for xi in &self.x {
            v.extend_from_slice(xi.coeffs());
        }
        v
    }

    pub fn from_coords(tag: AlgebraTag, c: &[Scalar]) -> Result<Self> {
        let m = tag.dim();
        if c.len() != Self::dim_for(tag) {
            return Err(Error::InvalidInput(format!(
                "Jordan element over {tag} needs {} coordinates, got {}",
                Self::dim_for(tag),
                c.len()
            )));
        }
        let off = |k: usize| CompositionElement::new(tag, c[3 + k * m..3 + (k + 1) * m].to_vec());
        Ok(JordanElement {
            tag,
            d: [c[0].clone(), c[1].clone(), c[2].clone()],
            x: [off(0)?, off(1)?, off(2)?],
        })
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn d(&self) -> &[Scalar; 3] {
        &self.d
    }

    pub fn x(&self) -> &[CompositionElement; 3] {
        &self.x
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(Scalar::is_zero) && self.x.iter().all(CompositionElement::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        JordanElement {
            tag: self.tag,
            d: std::array::from_fn(|i| &self.d[i] * s),
            x: std::array::from_fn(|i| self.x[i].scale(s)),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Scalar::from_int(k))
    }

    pub fn trace(&self) -> Scalar {
        &(&self.d[0] + &self.d[1]) + &self.d[2]
    }

    /// Algebra in which the literal matrix entries live (`R` stands in for
    /// the degenerate algebra, whose off-diagonal entries are all zero).
    fn entry_tag(&self) -> AlgebraTag {
        if self.tag == AlgebraTag::Zero {
            AlgebraTag::R
        } else {
            self.tag
        }
    }

    fn off_entry(&self, k: usize) -> CompositionElement {
        if self.tag == AlgebraTag::Zero {
            CompositionElement::zero(AlgebraTag::R)
        } else {
            self.x[k].clone()
        }
    }

    /// The full Hermitian matrix.
    pub fn to_matrix(&self) -> Mat3 {
        let t = self.entry_tag();
        let dg = |i: usize| CompositionElement::real(t, self.d[i].clone());
        let (x1, x2, x3) = (self.off_entry(0), self.off_entry(1), self.off_entry(2));
        [
            [dg(0), x3.conj(), x2.conj()],
            [x3, dg(1), x1.conj()],
            [x2, x1, dg(2)],
        ]
    }

    /// Reads back a Hermitian matrix.
    ///
    /// # Panics
    /// If `m` is not Hermitian with real diagonal; this signals an internal
    /// arithmetic error.
    pub fn from_hermitian(tag: AlgebraTag, m: &Mat3) -> Self {
        for i in 0..3 {
            assert!(m[i][i].is_real(), "internal error: non-real diagonal entry");
            for j in 0..i {
                assert_eq!(m[i][j].conj(), m[j][i], "internal error: result is not Hermitian");
            }
        }
        let off = |e: &CompositionElement| {
            if tag == AlgebraTag::Zero {
                assert!(e.is_zero(), "internal error: degenerate algebra entry");
                CompositionElement::zero(tag)
            } else {
                e.clone()
            }
        };
        JordanElement {
            tag,
            d: std::array::from_fn(|i| m[i][i].re()),
            x: [off(&m[2][1]), off(&m[2][0]), off(&m[1][0])],
        }
    }

    /// `A∘B = ½(AB + BA)`.
    pub fn jordan_product(&self, other: &Self) -> Self {
        assert_eq!(self.tag, other.tag, "algebra mismatch");
        let (a, b) = (self.to_matrix(), other.to_matrix());
        let ab = mat3_mul(&a, &b);
        let ba = mat3_mul(&b, &a);
        let half = Scalar::from_ratio(1, 2);
        let sym: Mat3 =
            std::array::from_fn(|i| std::array::from_fn(|j| (&ab[i][j] + &ba[i][j]).scale(&half)));
        Self::from_hermitian(self.tag, &sym)
    }

    /// `tr(A∘B)`.
    pub fn trace_form(&self, other: &Self) -> Scalar {
        assert_eq!(self.tag, other.tag, "algebra mismatch");
        let mut acc = Scalar::ZERO;
        for i in 0..3 {
            if !self.d[i].is_zero() && !other.d[i].is_zero() {
                acc += &self.d[i] * &other.d[i];
            }
            acc += self.x[i].norm_polar(&other.x[i]);
        }
        acc
    }

    /// The vector `g` with `trace_form(Y, self) = Σ coords(Y)ₖ gₖ`.
    pub fn trace_form_coords(&self) -> Vec<Scalar> {
        let mut v = self.d.to_vec();
        for xi in &self.x {
            for (j, c) in xi.coeffs().iter().enumerate() {
                v.push(c.scale_int(2 * basis_norm(j)));
            }
        }
        v
    }

    /// The cubic norm
    /// `d₁d₂d₃ − d₁N(x₁) − d₂N(x₂) − d₃N(x₃) + 2·Re((x̄₃x̄₁)x₂)`.
    pub fn det(&self) -> Scalar {
        let [d1, d2, d3] = &self.d;
        let [x1, x2, x3] = &self.x;
        let mut acc = &(d1 * d2) * d3;
        acc -= d1 * &x1.norm();
        acc -= d2 * &x2.norm();
        acc -= d3 * &x3.norm();
        if self.tag != AlgebraTag::Zero {
            acc += x3.conj().mul(&x1.conj()).mul(x2).re().scale_int(2);
        }
        acc
    }

    /// `com(P) = P² − tr(P)·P + ½((tr P)² − tr P²)·I`.
    pub fn comatrix(&self) -> Self {
        let tr = self.trace();
        let p2 = self.jordan_product(self);
        let c = &(&(&tr * &tr) - &self.trace_form(self)) * &Scalar::from_ratio(1, 2);
        &(&p2 - &self.scale(&tr)) + &Self::identity(self.tag).scale(&c)
    }

    /// Polarization of the comatrix, `com(P+Q) − com(P) − com(Q)`.
    pub fn cross(&self, other: &Self) -> JordanDual {
        assert_eq!(self.tag, other.tag, "algebra mismatch");
        let (tp, tq) = (self.trace(), other.trace());
        let pq = self.jordan_product(other);
        let c = &(&tp * &tq) - &pq.trace();
        let out = &(&(&pq.scale_int(2) - &other.scale(&tp)) - &self.scale(&tq))
            + &Self::identity(self.tag).scale(&c);
        JordanDual(out)
    }

    /// Symmetric trilinear form with `T(P,P,P) = 6·det(P)`.
    pub fn cubic_trilinear(&self, q: &Self, r: &Self) -> Scalar {
        let pq = self + q;
        let mut acc = (&pq + r).det();
        acc -= pq.det();
        acc -= (self + r).det();
        acc -= (q + r).det();
        acc += self.det();
        acc += q.det();
        acc += r.det();
        acc
    }

    pub fn rank_classify(&self) -> JordanRank {
        if !self.det().is_zero() {
            JordanRank::Rank3
        } else if !self.comatrix().is_zero() {
            JordanRank::Rank2
        } else if !self.is_zero() {
            JordanRank::Rank1
        } else {
            JordanRank::Zero
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        assert_eq!(self.tag, other.tag, "algebra mismatch");
        let x = std::array::from_fn(|i| {
            let c = self.x[i].coeffs().iter().zip(other.x[i].coeffs()).map(|(a, b)| f(a, b)).collect();
            CompositionElement::new(self.tag, c).expect("length matches")
        });
        JordanElement { tag: self.tag, d: std::array::from_fn(|i| f(&self.d[i], &other.d[i])), x }
    }
}

impl Add for &JordanElement {
    type Output = JordanElement;
    fn add(self, rhs: &JordanElement) -> JordanElement {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &JordanElement {
    type Output = JordanElement;
    fn sub(self, rhs: &JordanElement) -> JordanElement {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &JordanElement {
    type Output = JordanElement;
    fn neg(self) -> JordanElement {
        self.scale_int(-1)
    }
}

/// Checked Jordan product.
pub fn jordan_product(a: &JordanElement, b: &JordanElement) -> Result<JordanElement> {
    same_tag(a.tag, b.tag)?;
    Ok(a.jordan_product(b))
}

pub fn trace_form(a: &JordanElement, b: &JordanElement) -> Result<Scalar> {
    same_tag(a.tag, b.tag)?;
    Ok(a.trace_form(b))
}

pub fn cross(p: &JordanElement, q: &JordanElement) -> Result<JordanDual> {
    same_tag(p.tag, q.tag)?;
    Ok(p.cross(q))
}

pub fn cubic_trilinear(p: &JordanElement, q: &JordanElement, r: &JordanElement) -> Result<Scalar> {
    same_tag(p.tag, q.tag)?;
    same_tag(p.tag, r.tag)?;
    Ok(p.cubic_trilinear(q, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::sample::random_jordan;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    #[test]
    fn identities_and_idempotents() {
        for tag in AlgebraTag::ALL {
            let i = JordanElement::identity(tag);
            let e11 = JordanElement::idempotent(tag, 0);
            let e22 = JordanElement::idempotent(tag, 1);
            assert_eq!(i.trace(), Scalar::from_int(3));
            assert_eq!(e11.trace_form(&e11), Scalar::ONE);
            assert!(e11.jordan_product(&e22).is_zero());
            assert_eq!(i.det(), Scalar::ONE);
            assert_eq!(i.comatrix(), i);
            assert!(e11.comatrix().is_zero());
            assert_eq!(i.cross(&i).0, i.scale_int(2));
            assert_eq!(e11.cross(&e22).0, JordanElement::idempotent(tag, 2));
            assert_eq!(i.cubic_trilinear(&i, &i), Scalar::from_int(6));
            assert_eq!(e11.cubic_trilinear(&e22, &JordanElement::idempotent(tag, 2)), Scalar::ONE);
        }
    }

    #[test]
    fn diagonal_det_and_adjugate() {
        let p = JordanElement::diag_ints(AlgebraTag::H, [2, 3, 5]);
        assert_eq!(p.det(), Scalar::from_int(30));
        assert_eq!(p.comatrix(), JordanElement::diag_ints(AlgebraTag::H, [15, 10, 6]));
    }

    #[test]
    fn all_ones_real_matrix_is_singular() {
        let one = CompositionElement::one(AlgebraTag::R);
        let p = JordanElement::new(
            AlgebraTag::R,
            [Scalar::ONE, Scalar::ONE, Scalar::ONE],
            [one.clone(), one.clone(), one],
        )
        .unwrap();
        assert!(p.det().is_zero());
        assert_eq!(p.rank_classify(), JordanRank::Rank1);
    }

    #[test]
    fn rank_labels() {
        let t = AlgebraTag::O;
        assert_eq!(JordanElement::identity(t).rank_classify(), JordanRank::Rank3);
        assert_eq!(JordanElement::diag_ints(t, [1, 1, 0]).rank_classify(), JordanRank::Rank2);
        assert_eq!(JordanElement::idempotent(t, 0).rank_classify(), JordanRank::Rank1);
        assert_eq!(JordanElement::zero(t).rank_classify(), JordanRank::Zero);
    }

    #[test]
    fn trilinear_vanishes_on_repeated_idempotent_against_offdiagonal() {
        let mut rng = rng();
        let t = AlgebraTag::O;
        let e11 = JordanElement::idempotent(t, 0);
        let mut y = random_jordan(&mut rng, t, 4);
        y = &y - &JordanElement::diag(t, y.d().clone());
        assert!(e11.cubic_trilinear(&e11, &y).is_zero());
    }

    #[test]
    fn trace_form_gram_is_nondegenerate() {
        for tag in AlgebraTag::ALL {
            let b = JordanElement::basis_all(tag);
            let g = Matrix::from_fn(b.len(), b.len(), |i, j| b[i].trace_form(&b[j]));
            assert_eq!(g.rank(), JordanElement::dim_for(tag));
        }
    }

    #[test]
    fn trace_form_coords_agree() {
        let mut rng = rng();
        for tag in AlgebraTag::ALL {
            let a = random_jordan(&mut rng, tag, 5);
            let b = random_jordan(&mut rng, tag, 5);
            let g = b.trace_form_coords();
            let lhs: Scalar = a.coords().iter().zip(&g).map(|(x, y)| x * y).sum();
            assert_eq!(lhs, a.trace_form(&b));
        }
    }

    #[test]
    fn det_invariant_under_index_swap() {
        let mut rng = rng();
        for tag in AlgebraTag::ALL {
            let p = random_jordan(&mut rng, tag, 5);
            let [d1, d2, d3] = p.d().clone();
            let [x1, x2, x3] = p.x().clone();
            let swapped = JordanElement::new(tag, [d2, d1, d3], [x2, x1, x3.conj()]).unwrap();
            assert_eq!(swapped.det(), p.det());
        }
    }

    #[test]
    fn det_invariant_under_unimodular_scaling_real() {
        let mut rng = rng();
        let tag = AlgebraTag::R;
        let p = random_jordan(&mut rng, tag, 5);
        let (a, b, c) = (Scalar::from_int(2), Scalar::from_ratio(1, 3), Scalar::from_ratio(3, 2));
        let m = p.to_matrix();
        let scale = [a, b, c];
        let scaled: Mat3 = std::array::from_fn(|i| {
            std::array::from_fn(|j| m[i][j].scale(&(&scale[i] * &scale[j])))
        });
        assert_eq!(JordanElement::from_hermitian(tag, &scaled).det(), p.det());
    }

    #[test]
    fn json_round_trip() {
        let mut rng = rng();
        let p = random_jordan(&mut rng, AlgebraTag::H, 3);
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.starts_with("{\"tag\":\"H\",\"d\":["));
        let q: JordanElement = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<JordanElement>(r#"{"tag":"H","d":["1","0"],"x":[[],[],[]]}"#).is_err());
    }
}
