#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use lande_core::{Direction, Mat2, Complex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform on the sphere.
pub fn random_direction(rng: &mut impl Rng) -> Direction {
    let theta = (1.0 - 2.0 * rng.gen::<f64>()).clamp(-1.0, 1.0).acos();
    Direction::new(theta, TAU * rng.gen::<f64>()).unwrap()
}

/// Uniform in the angles, which puts more mass near the poles.
pub fn random_angles(rng: &mut impl Rng) -> Direction {
    Direction::new(PI * rng.gen::<f64>(), TAU * rng.gen::<f64>()).unwrap()
}

pub fn random_complex(rng: &mut impl Rng) -> Complex {
    Complex::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

pub fn random_matrix(rng: &mut impl Rng) -> Mat2 {
    Mat2::new(random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng))
}

pub fn random_hermitian(rng: &mut impl Rng) -> Mat2 {
    let off = random_complex(rng);
    Mat2::new(
        Complex::new(rng.gen_range(-3.0..3.0), 0.0),
        off,
        off.conj(),
        Complex::new(rng.gen_range(-3.0..3.0), 0.0),
    )
}

pub fn cis(x: f64) -> Complex {
    Complex::new(x.cos(), x.sin())
}

pub fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}
