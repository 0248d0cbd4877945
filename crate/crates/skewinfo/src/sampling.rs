//! Deterministic seeded generators for random states, observables, and unitaries.
//!
//! Used by the multi-start optimizer in [`crate::entanglement`] and throughout the
//! test suites. Every generator is a pure function of the supplied RNG state, so a
//! fixed seed reproduces a run bit for bit.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::hermitian::{Complex64, ComplexMatrix, DensityMatrix, HermitianOperator};

/// A ChaCha8 RNG seeded from a u64.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn standard_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// A Haar-uniform unit vector (normalized vector of complex Gaussians).
pub fn random_unit_vector<R: Rng>(dim: usize, rng: &mut R) -> DVector<Complex64> {
    loop {
        let v = DVector::from_fn(dim, |_, _| standard_complex(rng));
        let norm = v.norm();
        if norm > 1e-6 {
            return v / Complex64::new(norm, 0.0);
        }
    }
}

/// A Ginibre matrix: independent standard complex Gaussian entries.
pub fn random_ginibre<R: Rng>(dim: usize, rng: &mut R) -> DMatrix<Complex64> {
    DMatrix::from_fn(dim, dim, |_, _| standard_complex(rng))
}

/// A Haar-random pure state projector.
pub fn random_pure<R: Rng>(dim: usize, rng: &mut R) -> DensityMatrix {
    let v = random_unit_vector(dim, rng);
    DensityMatrix::pure(v.as_slice()).expect("normalized vector gives a valid pure state")
}

/// A full-rank mixed state from the Hilbert-Schmidt ensemble: GG†/Tr(GG†).
pub fn random_density<R: Rng>(dim: usize, rng: &mut R) -> DensityMatrix {
    loop {
        let g = random_ginibre(dim, rng);
        let m = &g * g.adjoint();
        let trace = m.trace().re;
        if trace > 1e-9 {
            let mat = ComplexMatrix::new(m / Complex64::new(trace, 0.0))
                .expect("Ginibre product is a valid matrix");
            return DensityMatrix::new(mat).expect("normalized GG† is a valid state");
        }
    }
}

/// A GUE-style random observable (G + G†)/2.
pub fn random_hermitian<R: Rng>(dim: usize, rng: &mut R) -> HermitianOperator {
    let g = random_ginibre(dim, rng);
    let h = (&g + g.adjoint()).scale(0.5);
    HermitianOperator::new(ComplexMatrix::new(h).expect("finite entries"))
        .expect("symmetrized Ginibre is Hermitian")
}

/// A Haar-random unitary: QR of a Ginibre matrix with the R diagonal phases
/// absorbed into Q.
pub fn random_unitary<R: Rng>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let qr = random_ginibre(dim, rng).qr();
    let r_diag: Vec<Complex64> = (0..dim).map(|i| qr.r()[(i, i)]).collect();
    let q = qr.q();
    let phases = DMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            let d = r_diag[i];
            if d.norm() > 0.0 {
                d / Complex64::new(d.norm(), 0.0)
            } else {
                Complex64::new(1.0, 0.0)
            }
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    ComplexMatrix::new(q * phases).expect("unitary has finite entries")
}

/// A probability vector of the given length (uniform weights normalized).
pub fn random_probabilities<R: Rng>(len: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let raw: Vec<f64> = (0..len).map(|_| rng.random::<f64>()).collect();
        let total: f64 = raw.iter().sum();
        if total > 1e-9 {
            return raw.into_iter().map(|w| w / total).collect();
        }
    }
}
