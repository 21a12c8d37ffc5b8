//! Random test points with small Gaussian-integer coordinates.

use rand::Rng;

use crate::algebra::{AlgebraTag, CompositionElement};
use crate::jordan::{JordanDual, JordanElement};
use crate::scalar::Scalar;
use crate::triple::FreudenthalVector;

/// A Gaussian integer `a + bi` with `|a|, |b| ≤ bound`.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Scalar {
    Scalar::gaussian(rng.random_range(-bound..=bound), rng.random_range(-bound..=bound))
}

pub fn random_scalars<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Vec<Scalar> {
    (0..n).map(|_| random_scalar(rng, bound)).collect()
}

pub fn random_composition<R: Rng + ?Sized>(rng: &mut R, tag: AlgebraTag, bound: i64) -> CompositionElement {
    CompositionElement::new(tag, random_scalars(rng, tag.dim(), bound)).expect("length matches")
}

pub fn random_imaginary<R: Rng + ?Sized>(rng: &mut R, tag: AlgebraTag, bound: i64) -> CompositionElement {
    random_composition(rng, tag, bound).imag_part()
}

pub fn random_jordan<R: Rng + ?Sized>(rng: &mut R, tag: AlgebraTag, bound: i64) -> JordanElement {
    JordanElement::from_coords(tag, &random_scalars(rng, 3 * tag.dim() + 3, bound))
        .expect("length matches")
}

pub fn random_dual<R: Rng + ?Sized>(rng: &mut R, tag: AlgebraTag, bound: i64) -> JordanDual {
    JordanDual(random_jordan(rng, tag, bound))
}

pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, tag: AlgebraTag, bound: i64) -> FreudenthalVector {
    FreudenthalVector::from_coords(tag, &random_scalars(rng, FreudenthalVector::dim_for(tag), bound))
        .expect("length matches")
}
