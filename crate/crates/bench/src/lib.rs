//! Shared fixtures for the benchmarks.

use magickit::sample::{random_composition, random_jordan, random_vector};
use magickit::{calibrate, AlgebraTag, CalibrationConstants, CompositionElement, FreudenthalVector, JordanElement};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random inputs for one algebra, drawn from a fixed seed.
pub struct Fixture {
    pub tag: AlgebraTag,
    pub cal: CalibrationConstants,
    pub x: CompositionElement,
    pub y: CompositionElement,
    pub p: JordanElement,
    pub w: FreudenthalVector,
}

pub fn fixture(tag: AlgebraTag, seed: u64) -> Fixture {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cal = calibrate(tag).expect("calibration succeeds");
    Fixture {
        tag,
        x: random_composition(&mut rng, tag, 5),
        y: random_composition(&mut rng, tag, 5),
        p: random_jordan(&mut rng, tag, 5),
        w: random_vector(&mut rng, tag, 5),
        cal,
    }
}
