//! Seeded random streams.
//!
//! The generator is xoshiro256** seeded through SplitMix64
//! (`Xoshiro256StarStar::seed_from_u64`). Uniform doubles take the top 53
//! bits of each output; Gaussians use the Box–Muller transform on pairs of
//! uniforms, rejecting a zero first uniform, and consume both outputs of a
//! pair in order.

use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::matrix::{Field, Matrix};
use crate::C64;

pub const ALGORITHM: &str = "xoshiro256** (SplitMix64 seeding), Box-Muller";

pub struct SeededSource {
    seed: u64,
    rng: Xoshiro256StarStar,
    spare: Option<f64>,
}

impl SeededSource {
    pub fn new(seed: u64) -> Self {
        SeededSource { seed, rng: Xoshiro256StarStar::seed_from_u64(seed), spare: None }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal.
    pub fn gaussian(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = loop {
            let u = self.uniform();
            if u > 0.0 {
                break u;
            }
        };
        let u2 = self.uniform();
        let radius = libm::sqrt(-2.0 * libm::log(u1));
        let (s, c) = libm::sincos(2.0 * core::f64::consts::PI * u2);
        self.spare = Some(radius * s);
        radius * c
    }

    /// Standard normal over the field: real `N(0,1)`, or complex with
    /// independent real and imaginary parts of variance 1/2.
    pub fn gaussian_scalar(&mut self, field: Field) -> C64 {
        match field {
            Field::Real => C64::new(self.gaussian(), 0.0),
            Field::Complex => {
                let re = self.gaussian();
                let im = self.gaussian();
                C64::new(re, im) * core::f64::consts::FRAC_1_SQRT_2
            }
        }
    }

    /// Row-major i.i.d. Gaussian matrix.
    pub fn gaussian_matrix(&mut self, rows: usize, cols: usize, field: Field) -> Matrix {
        let data: Vec<C64> = (0..rows * cols).map(|_| self.gaussian_scalar(field)).collect();
        Matrix::from_vec(rows, cols, data)
    }

    /// Uniformly random permutation of `0..n` (Fisher–Yates).
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (self.next_u64() % (i as u64 + 1)) as usize;
            p.swap(i, j);
        }
        p
    }
}
