//! Split composition algebras of dimension 0, 1, 2, 4, 8, their tensor
//! products, and the Clifford map on imaginary parts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{same_tag, Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Which composition algebra. `Zero` is the degenerate 0-dimensional case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraTag {
    Zero,
    R,
    C,
    H,
    O,
}

impl AlgebraTag {
    pub const ALL: [AlgebraTag; 5] =
        [AlgebraTag::Zero, AlgebraTag::R, AlgebraTag::C, AlgebraTag::H, AlgebraTag::O];
    pub const NONZERO: [AlgebraTag; 4] = [AlgebraTag::R, AlgebraTag::C, AlgebraTag::H, AlgebraTag::O];

    pub const fn dim(self) -> usize {
        match self {
            AlgebraTag::Zero => 0,
            AlgebraTag::R => 1,
            AlgebraTag::C => 2,
            AlgebraTag::H => 4,
            AlgebraTag::O => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraTag::Zero => "Zero",
            AlgebraTag::R => "R",
            AlgebraTag::C => "C",
            AlgebraTag::H => "H",
            AlgebraTag::O => "O",
        }
    }

    pub fn from_dim(m: usize) -> Option<AlgebraTag> {
        AlgebraTag::ALL.into_iter().find(|t| t.dim() == m)
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Zero" | "0" => Ok(AlgebraTag::Zero),
            "R" => Ok(AlgebraTag::R),
            "C" => Ok(AlgebraTag::C),
            "H" => Ok(AlgebraTag::H),
            "O" => Ok(AlgebraTag::O),
            _ => Err(Error::InvalidInput(format!("unknown algebra tag `{s}`"))),
        }
    }
}

/// `e_i · e_j = sign · e_k`, stored as `(sign, k)`, for the split octonions
/// built by doubling `(a,b)(c,d) = (ac + d̄b, da + bc̄)`. The algebras of
/// dimension 1, 2, 4 are the leading square blocks.
pub const MULT_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (1, 0), (1, 3), (1, 2), (1, 5), (1, 4), (-1, 7), (-1, 6)],
    [(1, 2), (-1, 3), (1, 0), (-1, 1), (1, 6), (1, 7), (1, 4), (1, 5)],
    [(1, 3), (-1, 2), (1, 1), (-1, 0), (1, 7), (1, 6), (-1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (1, 0), (-1, 1), (-1, 2), (-1, 3)],
    [(1, 5), (-1, 4), (-1, 7), (-1, 6), (1, 1), (-1, 0), (1, 3), (1, 2)],
    [(1, 6), (1, 7), (-1, 4), (1, 5), (1, 2), (-1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (1, 6), (-1, 5), (1, 4), (1, 3), (-1, 2), (1, 1), (1, 0)],
];

/// Regenerates the multiplication table of dimension `n` (a power of two up
/// to 8) from the split doubling recurrence.
pub fn doubling_table(n: usize) -> Vec<Vec<(i8, u8)>> {
    fn conj(x: &[i64]) -> Vec<i64> {
        if x.len() == 1 {
            return x.to_vec();
        }
        let h = x.len() / 2;
        let mut out = conj(&x[..h]);
        out.extend(x[h..].iter().map(|v| -v));
        out
    }
    fn add(x: &[i64], y: &[i64]) -> Vec<i64> {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }
    fn mul(x: &[i64], y: &[i64]) -> Vec<i64> {
        if x.len() == 1 {
            return vec![x[0] * y[0]];
        }
        let h = x.len() / 2;
        let (a, b) = x.split_at(h);
        let (c, d) = y.split_at(h);
        let mut out = add(&mul(a, c), &mul(&conj(d), b));
        out.extend(add(&mul(d, a), &mul(b, &conj(c))));
        out
    }
    assert!(n.is_power_of_two() && n <= 8);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut ei = vec![0; n];
                    let mut ej = vec![0; n];
                    ei[i] = 1;
                    ej[j] = 1;
                    let p = mul(&ei, &ej);
                    let k = p.iter().position(|&v| v != 0).expect("basis product is nonzero");
                    (p[k] as i8, k as u8)
                })
                .collect()
        })
        .collect()
}

/// `N(e_i)`: +1 for `e_0`, and `−e_i²` for imaginary units.
pub fn basis_norm(i: usize) -> i64 {
    if i == 0 {
        1
    } else {
        let (s, k) = MULT_TABLE[i][i];
        debug_assert_eq!(k, 0);
        -(s as i64)
    }
}

/// An element of the split composition algebra with the given tag.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "CompositionRepr")]
pub struct CompositionElement {
    tag: AlgebraTag,
    coeffs: Vec<Scalar>,
}

#[derive(Deserialize)]
struct CompositionRepr {
    tag: AlgebraTag,
    coeffs: Vec<Scalar>,
}

impl TryFrom<CompositionRepr> for CompositionElement {
    type Error = Error;
    fn try_from(r: CompositionRepr) -> Result<Self> {
        CompositionElement::new(r.tag, r.coeffs)
    }
}

impl CompositionElement {
    pub fn new(tag: AlgebraTag, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != tag.dim() {
            return Err(Error::InvalidInput(format!(
                "algebra {tag} needs {} coefficients, got {}",
                tag.dim(),
                coeffs.len()
            )));
        }
        Ok(CompositionElement { tag, coeffs })
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        CompositionElement { tag, coeffs: vec![Scalar::ZERO; tag.dim()] }
    }

    /// The unit, or zero for the degenerate algebra.
    pub fn one(tag: AlgebraTag) -> Self {
        Self::real(tag, Scalar::ONE)
    }

    pub fn real(tag: AlgebraTag, s: Scalar) -> Self {
        let mut x = Self::zero(tag);
        if let Some(c) = x.coeffs.first_mut() {
            *c = s;
        }
        x
    }

    pub fn basis(tag: AlgebraTag, i: usize) -> Self {
        let mut x = Self::zero(tag);
        x.coeffs[i] = Scalar::ONE;
        x
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// The `e_0` coefficient.
    pub fn re(&self) -> Scalar {
        self.coeffs.first().cloned().unwrap_or(Scalar::ZERO)
    }

    pub fn is_imaginary(&self) -> bool {
        self.re().is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().skip(1).all(Scalar::is_zero)
    }

    pub fn conj(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i == 0 { c.clone() } else { -c })
            .collect();
        CompositionElement { tag: self.tag, coeffs }
    }

    /// The imaginary part: the `e_0` coefficient set to zero.
    pub fn imag_part(&self) -> Self {
        let mut x = self.clone();
        if let Some(c) = x.coeffs.first_mut() {
            *c = Scalar::ZERO;
        }
        x
    }

    /// `N(x)`, the scalar with `x·x̄ = N(x)·1`.
    pub fn norm(&self) -> Scalar {
        let mut acc = Scalar::ZERO;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += (c * c).scale_int(basis_norm(i));
            }
        }
        acc
    }

    /// The polar form `N(x+y) − N(x) − N(y)`.
    pub fn norm_polar(&self, other: &Self) -> Scalar {
        assert_eq!(self.tag, other.tag, "algebra mismatch");
        let mut acc = Scalar::ZERO;
        for (i, (a, b)) in self.coeffs.iter().zip(&other.coeffs).enumerate() {
            if !a.is_zero() && !b.is_zero() {
                acc += (a * b).scale_int(2 * basis_norm(i));
            }
        }
        acc
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        CompositionElement { tag: self.tag, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// # Panics
    /// On a tag mismatch; see [`mul`] for the checked form.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.tag, other.tag, "algebra mismatch");
        let n = self.tag.dim();
        let mut out = vec![Scalar::ZERO; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (s, k) = MULT_TABLE[i][j];
                let p = a * b;
                if s > 0 {
                    out[k as usize] += p;
                } else {
                    out[k as usize] -= p;
                }
            }
        }
        CompositionElement { tag: self.tag, coeffs: out }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        assert_eq!(self.tag, other.tag, "algebra mismatch");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        CompositionElement { tag: self.tag, coeffs }
    }
}

impl Add for &CompositionElement {
    type Output = CompositionElement;
    fn add(self, rhs: &CompositionElement) -> CompositionElement {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &CompositionElement {
    type Output = CompositionElement;
    fn sub(self, rhs: &CompositionElement) -> CompositionElement {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &CompositionElement {
    type Output = CompositionElement;
    fn neg(self) -> CompositionElement {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Mul for &CompositionElement {
    type Output = CompositionElement;
    fn mul(self, rhs: &CompositionElement) -> CompositionElement {
        CompositionElement::mul(self, rhs)
    }
}

/// Checked product.
pub fn mul(x: &CompositionElement, y: &CompositionElement) -> Result<CompositionElement> {
    same_tag(x.tag, y.tag)?;
    Ok(x.mul(y))
}

pub fn conj(x: &CompositionElement) -> CompositionElement {
    x.conj()
}

pub fn norm(x: &CompositionElement) -> Scalar {
    x.norm()
}

pub fn imag_part(x: &CompositionElement) -> CompositionElement {
    x.imag_part()
}

/// An element of `A ⊗ B`, with `coeffs[i][j]` the coefficient of `e_i ⊗ f_j`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TensorElement {
    tag_a: AlgebraTag,
    tag_b: AlgebraTag,
    coeffs: Vec<Vec<Scalar>>,
}

impl TensorElement {
    pub fn zero(tag_a: AlgebraTag, tag_b: AlgebraTag) -> Self {
        TensorElement { tag_a, tag_b, coeffs: vec![vec![Scalar::ZERO; tag_b.dim()]; tag_a.dim()] }
    }

    pub fn new(tag_a: AlgebraTag, tag_b: AlgebraTag, coeffs: Vec<Vec<Scalar>>) -> Result<Self> {
        if coeffs.len() != tag_a.dim() || coeffs.iter().any(|r| r.len() != tag_b.dim()) {
            return Err(Error::InvalidInput("tensor coefficient shape".into()));
        }
        Ok(TensorElement { tag_a, tag_b, coeffs })
    }

    pub fn pure(a: &CompositionElement, b: &CompositionElement) -> Self {
        let coeffs =
            a.coeffs().iter().map(|x| b.coeffs().iter().map(|y| x * y).collect()).collect();
        TensorElement { tag_a: a.tag(), tag_b: b.tag(), coeffs }
    }

    pub fn tags(&self) -> (AlgebraTag, AlgebraTag) {
        (self.tag_a, self.tag_b)
    }

    pub fn coeffs(&self) -> &[Vec<Scalar>] {
        &self.coeffs
    }

    pub fn conj(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, c)| if (i == 0) == (j == 0) { c.clone() } else { -c })
                    .collect()
            })
            .collect();
        TensorElement { tag_a: self.tag_a, tag_b: self.tag_b, coeffs }
    }

    /// # Panics
    /// On a tag mismatch; see [`tensor_mul`] for the checked form.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.tag_a, self.tag_b), (other.tag_a, other.tag_b), "algebra mismatch");
        let mut out = Self::zero(self.tag_a, self.tag_b);
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (k, row2) in other.coeffs.iter().enumerate() {
                    let (sa, ka) = MULT_TABLE[i][k];
                    for (l, y) in row2.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let (sb, kb) = MULT_TABLE[j][l];
                        let p = x * y;
                        let slot = &mut out.coeffs[ka as usize][kb as usize];
                        if sa * sb > 0 {
                            *slot += p;
                        } else {
                            *slot -= p;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.tag_a, self.tag_b), (other.tag_a, other.tag_b), "algebra mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
            .collect();
        TensorElement { tag_a: self.tag_a, tag_b: self.tag_b, coeffs }
    }
}

/// Checked tensor product.
pub fn tensor_mul(u: &TensorElement, v: &TensorElement) -> Result<TensorElement> {
    same_tag(u.tag_a, v.tag_a)?;
    same_tag(u.tag_b, v.tag_b)?;
    Ok(u.mul(v))
}

/// The operator `(u, v) ↦ (L v, M u)` on `(A⊗B) ⊕ (A⊗B)` for imaginary
/// `a ∈ A`, `b ∈ B`, where
/// `L(x⊗y) = i·ax⊗ȳ + x⊗ȳb` and `M(x⊗y) = i·ax⊗ȳ + x⊗bȳ`.
/// Its square is `(−a² − b²)·Id`.
pub fn clifford_map(a: &CompositionElement, b: &CompositionElement) -> Result<Matrix> {
    for x in [a, b] {
        if !matches!(x.tag(), AlgebraTag::C | AlgebraTag::H | AlgebraTag::O) {
            return Err(Error::InvalidInput(format!(
                "clifford map needs algebras C, H or O, got {}",
                x.tag()
            )));
        }
        if !x.is_imaginary() {
            return Err(Error::InvalidInput("clifford map needs imaginary arguments".into()));
        }
    }
    let (ta, tb) = (a.tag(), b.tag());
    let (ma, mb) = (ta.dim(), tb.dim());
    let n = ma * mb;
    let ia = a.scale(&Scalar::I);
    let mut out = Matrix::zeros(2 * n, 2 * n);
    for x in 0..ma {
        let ex = CompositionElement::basis(ta, x);
        let iax = ia.mul(&ex);
        for y in 0..mb {
            let ey_bar = CompositionElement::basis(tb, y).conj();
            let col = x * mb + y;
            let l_tail = ey_bar.mul(b);
            let m_tail = b.mul(&ey_bar);
            // Shared term i·ax ⊗ ȳ.
            for (p, cp) in iax.coeffs().iter().enumerate() {
                if cp.is_zero() {
                    continue;
                }
                for (q, cq) in ey_bar.coeffs().iter().enumerate() {
                    if cq.is_zero() {
                        continue;
                    }
                    let v = cp * cq;
                    out[(p * mb + q, n + col)] += &v;
                    out[(n + p * mb + q, col)] += &v;
                }
            }
            for (q, cq) in l_tail.coeffs().iter().enumerate() {
                if !cq.is_zero() {
                    out[(x * mb + q, n + col)] += cq;
                }
            }
            for (q, cq) in m_tail.coeffs().iter().enumerate() {
                if !cq.is_zero() {
                    out[(n + x * mb + q, col)] += cq;
                }
            }
        }
    }
    Ok(out)
}

/// `−a² − b²` for imaginary `a`, `b`, read as a scalar.
pub fn clifford_quadratic(a: &CompositionElement, b: &CompositionElement) -> Scalar {
    -(a.mul(a).re() + b.mul(b).re())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_composition, random_imaginary};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn golden_table_matches_recurrence() {
        let generated = doubling_table(8);
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(generated[i][j], MULT_TABLE[i][j], "entry ({i},{j})");
            }
        }
        // Smaller algebras are the leading blocks of the larger ones.
        for n in [1, 2, 4] {
            let t = doubling_table(n);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(t[i][j], MULT_TABLE[i][j]);
                }
            }
        }
    }

    #[test]
    fn split_complex_unit_squares_to_one() {
        let e1 = CompositionElement::basis(AlgebraTag::C, 1);
        assert_eq!(e1.mul(&e1), CompositionElement::one(AlgebraTag::C));
    }

    #[test]
    fn unit_conj_norm_imag() {
        for tag in AlgebraTag::NONZERO {
            let one = CompositionElement::one(tag);
            assert_eq!(one.conj(), one);
            assert_eq!(one.norm(), Scalar::ONE);
        }
        let x = &CompositionElement::basis(AlgebraTag::H, 0) + &CompositionElement::basis(AlgebraTag::H, 1);
        assert_eq!(x.imag_part(), CompositionElement::basis(AlgebraTag::H, 1));
    }

    #[test]
    fn norm_is_x_times_conj() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for tag in AlgebraTag::NONZERO {
            for _ in 0..20 {
                let x = random_composition(&mut rng, tag, 5);
                assert_eq!(x.mul(&x.conj()), CompositionElement::real(tag, x.norm()));
                let y = random_composition(&mut rng, tag, 5);
                assert_eq!(x.norm_polar(&y), (&x + &y).norm() - x.norm() - y.norm());
            }
        }
    }

    #[test]
    fn clifford_rejects_bad_input() {
        let r = CompositionElement::zero(AlgebraTag::R);
        let c = CompositionElement::zero(AlgebraTag::C);
        assert!(clifford_map(&r, &c).is_err());
        assert!(clifford_map(&CompositionElement::one(AlgebraTag::C), &c).is_err());
    }

    #[test]
    fn clifford_small_case() {
        let e1 = CompositionElement::basis(AlgebraTag::C, 1);
        let z = CompositionElement::zero(AlgebraTag::C);
        let phi = clifford_map(&e1, &z).unwrap();
        let q = -e1.mul(&e1).re();
        assert_eq!(phi.matmul(&phi), Matrix::scalar(8, &q));
        let zero = clifford_map(&z, &z).unwrap();
        assert!(zero.matmul(&zero).is_zero());
    }

    #[test]
    fn clifford_mixed_tags() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random_imaginary(&mut rng, AlgebraTag::H, 3);
        let b = random_imaginary(&mut rng, AlgebraTag::C, 3);
        let phi = clifford_map(&a, &b).unwrap();
        assert_eq!(phi.matmul(&phi), Matrix::scalar(16, &clifford_quadratic(&a, &b)));
    }
}
