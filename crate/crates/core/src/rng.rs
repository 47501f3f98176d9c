//! Seeded, portable random stream for Monte-Carlo estimates.
//!
//! The generator is xoshiro256++ whose 256-bit state is filled from a
//! 64-bit seed by four successive SplitMix64 outputs. Derived draws are
//! defined bit-for-bit so another implementation can reproduce a run:
//!
//! | draw            | definition                                          |
//! |-----------------|-----------------------------------------------------|
//! | `uniform()`     | `(next_u64() >> 11) · 2⁻⁵³`, in `[0, 1)`            |
//! | `angle()`       | `2π · uniform()`, in `[0, 2π)`                      |
//! | `sign()`        | `+1` if the top bit of `next_u64()` is 0, else `−1` |
//! | `normal_pair()` | Box–Muller on `u₁ = 1 − uniform()`, `u₂ = uniform()` |

use std::f64::consts::TAU;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

#[derive(Debug, Clone)]
pub struct PortableRng {
    inner: Xoshiro256PlusPlus,
}

impl PortableRng {
    pub fn from_seed(seed: u64) -> Self {
        Self {
            inner: Xoshiro256PlusPlus::seed_from_u64(seed),
        }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    #[inline]
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    #[inline]
    pub fn angle(&mut self) -> f64 {
        TAU * self.uniform()
    }

    #[inline]
    pub fn sign(&mut self) -> i8 {
        if self.next_u64() >> 63 == 0 {
            1
        } else {
            -1
        }
    }

    /// Two independent standard normal deviates.
    pub fn normal_pair(&mut self) -> (f64, f64) {
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let radius = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (TAU * u2).sin_cos();
        (radius * c, radius * s)
    }
}
