//! Bipartite machinery: sum observables, additivity and monotonicity of skew
//! information under partial trace, convexity verification of Q(ρ) for explicit
//! product decompositions, optimal local uncertainty constants, and the
//! local-uncertainty-relation entanglement witness.

use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::ObservableSet;
use crate::hermitian::{Complex64, DensityMatrix, HermitianOperator, Subsystem};
use crate::sampling::random_unit_vector;
use crate::skew::{q_total, skew_information, ObservableBasis};
use crate::{Error, Result};

/// Tolerance below which a witness total is considered to violate the threshold.
pub const WITNESS_TOL: f64 = 1e-9;

/// The sum observable A ⊗ I + I ⊗ B on the composite system.
pub fn sum_observable(a: &HermitianOperator, b: &HermitianOperator) -> Result<HermitianOperator> {
    let ia = HermitianOperator::identity(a.dim())?;
    let ib = HermitianOperator::identity(b.dim())?;
    let left = a.matrix().tensor(ib.matrix())?;
    let right = ia.matrix().tensor(b.matrix())?;
    Ok(HermitianOperator::from_exact(&left + &right))
}

/// Additivity of skew information on product states: returns
/// (I_{ρ_A⊗ρ_B}(A⊗I + I⊗B), I_{ρ_A}(A) + I_{ρ_B}(B)); the two agree within 1e-9.
pub fn check_additivity(
    rho_a: &DensityMatrix,
    rho_b: &DensityMatrix,
    a: &HermitianOperator,
    b: &HermitianOperator,
) -> Result<(f64, f64)> {
    if rho_a.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            left: rho_a.dim(),
            right: a.dim(),
        });
    }
    if rho_b.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: rho_b.dim(),
            right: b.dim(),
        });
    }
    let product = rho_a.tensor(rho_b)?;
    let m = sum_observable(a, b)?;
    let lhs = skew_information(&product, &m)?;
    let rhs = skew_information(rho_a, a)? + skew_information(rho_b, b)?;
    Ok((lhs, rhs))
}

/// Monotonicity under partial trace: returns (I_ρ(A⊗I), I_{Tr_B ρ}(A));
/// the global value never falls below the local one.
pub fn check_monotonicity(
    rho: &DensityMatrix,
    dim_a: usize,
    dim_b: usize,
    a: &HermitianOperator,
) -> Result<(f64, f64)> {
    if a.dim() != dim_a {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: dim_a,
        });
    }
    let lifted = HermitianOperator::from_exact(
        a.matrix()
            .tensor(HermitianOperator::identity(dim_b)?.matrix())?,
    );
    let global = skew_information(rho, &lifted)?;
    let marginal = rho.partial_trace(dim_a, dim_b, Subsystem::First)?;
    let local = skew_information(&marginal, a)?;
    Ok((global, local))
}

/// An explicit convex combination of product states Σ_k p_k ρ_A^k ⊗ ρ_B^k.
#[derive(Debug, Clone)]
pub struct ProductDecomposition {
    weights: Vec<f64>,
    factors: Vec<(DensityMatrix, DensityMatrix)>,
}

impl ProductDecomposition {
    /// Validates nonnegative normalized weights and uniform factor dimensions.
    pub fn new(weights: Vec<f64>, factors: Vec<(DensityMatrix, DensityMatrix)>) -> Result<Self> {
        if weights.is_empty() || weights.len() != factors.len() {
            return Err(Error::InvalidWeights {
                reason: format!(
                    "{} weights for {} product terms",
                    weights.len(),
                    factors.len()
                ),
            });
        }
        if let Some(w) = weights.iter().find(|w| **w < 0.0) {
            return Err(Error::InvalidWeights {
                reason: format!("negative weight {w}"),
            });
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidWeights {
                reason: format!("weights sum to {total}"),
            });
        }
        let (dim_a, dim_b) = (factors[0].0.dim(), factors[0].1.dim());
        for (rho_a, rho_b) in &factors {
            if rho_a.dim() != dim_a || rho_b.dim() != dim_b {
                return Err(Error::DimensionMismatch {
                    left: dim_a * dim_b,
                    right: rho_a.dim() * rho_b.dim(),
                });
            }
        }
        Ok(Self { weights, factors })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn factors(&self) -> &[(DensityMatrix, DensityMatrix)] {
        &self.factors
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.factors[0].0.dim(), self.factors[0].1.dim())
    }

    /// The separable state Σ_k p_k ρ_A^k ⊗ ρ_B^k this decomposition describes.
    pub fn assemble(&self) -> Result<DensityMatrix> {
        let products: Vec<DensityMatrix> = self
            .factors
            .iter()
            .map(|(a, b)| a.tensor(b))
            .collect::<Result<_>>()?;
        let terms: Vec<(f64, &DensityMatrix)> =
            self.weights.iter().copied().zip(products.iter()).collect();
        DensityMatrix::mix(&terms)
    }
}

/// Outcome of checking Q(ρ) ≤ Σ_k p_k Q(ρ_A^k ⊗ ρ_B^k) for a given decomposition.
#[derive(Debug, Clone, Copy)]
pub struct QConvexityCheck {
    /// Q of the assembled mixture.
    pub lhs: f64,
    /// Weighted average of the product-state Q values.
    pub rhs: f64,
    /// lhs ≤ rhs + 1e-9.
    pub holds: bool,
}

/// Verifies the convexity inequality for an explicit decomposition. The state is
/// assembled from the decomposition itself, so ρ and its claimed decomposition can
/// never disagree. This verifies, it does not search decompositions.
pub fn verify_q_convexity(
    decomp: &ProductDecomposition,
    basis: &ObservableBasis,
) -> Result<QConvexityCheck> {
    let rho = decomp.assemble()?;
    if basis.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            left: basis.dim(),
            right: rho.dim(),
        });
    }
    let lhs = q_total(&rho, basis)?;
    let mut rhs = 0.0;
    for (weight, (rho_a, rho_b)) in decomp.weights().iter().zip(decomp.factors()) {
        rhs += weight * q_total(&rho_a.tensor(rho_b)?, basis)?;
    }
    Ok(QConvexityCheck {
        lhs,
        rhs,
        holds: lhs <= rhs + WITNESS_TOL,
    })
}

/// Σ_i (‖A_i ψ‖² − ⟨ψ|A_i|ψ⟩²): the pure-state objective minimized by
/// [`optimal_constant`] (skew information equals variance on pure states).
fn pure_state_objective(set: &ObservableSet, psi: &DVector<Complex64>) -> f64 {
    set.operators()
        .iter()
        .map(|op| {
            let w = op.matrix().inner() * psi;
            let mean = psi.dotc(&w).re;
            let second = w.norm_squared();
            second - mean * mean
        })
        .sum()
}

fn descend(set: &ObservableSet, psi: &mut DVector<Complex64>, value: &mut f64) {
    let dim = psi.len();
    let mut step = 0.5;
    while step >= 1e-10 {
        let mut improved = false;
        for coord in 0..2 * dim {
            for sign in [1.0f64, -1.0] {
                let mut candidate = psi.clone();
                let delta = sign * step;
                let z = candidate[coord / 2];
                candidate[coord / 2] = if coord % 2 == 0 {
                    Complex64::new(z.re + delta, z.im)
                } else {
                    Complex64::new(z.re, z.im + delta)
                };
                let norm = candidate.norm();
                if norm < 1e-9 {
                    continue;
                }
                candidate /= Complex64::new(norm, 0.0);
                let cand_value = pure_state_objective(set, &candidate);
                if cand_value < *value {
                    *value = cand_value;
                    *psi = candidate;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
}

/// Numerical estimate of the optimal uncertainty constant c = min over pure states
/// of Σ_i I_ψ(A_i), by multi-start random sampling plus coordinate descent with a
/// shrinking step. Deterministic for a given (trials, seed); the result is an upper
/// estimate of the true minimum.
///
/// The minimum is taken over pure states only: over all mixed states it is
/// trivially 0 (the maximally mixed state commutes with everything), which would
/// make the witness threshold vacuous.
pub fn optimal_constant(set: &ObservableSet, trials: usize, seed: u64) -> f64 {
    let dim = set.dim();
    let mut best = f64::INFINITY;
    for trial in 0..trials.max(1) {
        let trial_seed = seed.wrapping_add((trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let mut psi = random_unit_vector(dim, &mut rng);
        let mut value = pure_state_objective(set, &psi);
        descend(set, &mut psi, &mut value);
        if value < best {
            best = value;
        }
    }
    best
}

/// A local-uncertainty-relation witness evaluation.
#[derive(Debug, Clone, Copy)]
pub struct WitnessVerdict {
    /// Σ_i I_ρ(A_i ⊗ I + I ⊗ B_i).
    pub total: f64,
    /// c_A + c_B.
    pub threshold: f64,
    /// total < threshold − 1e-9. A violation is a sufficient condition for
    /// entanglement of states honoring the constants' local bounds.
    pub violated: bool,
}

/// Evaluates Σ_i I_ρ(M_i) against c_A + c_B for M_i = A_i ⊗ I + I ⊗ B_i.
pub fn lur_witness(
    rho: &DensityMatrix,
    a_set: &ObservableSet,
    b_set: &ObservableSet,
    c_a: f64,
    c_b: f64,
) -> Result<WitnessVerdict> {
    if a_set.len() != b_set.len() {
        return Err(Error::SetSizeMismatch {
            left: a_set.len(),
            right: b_set.len(),
        });
    }
    if a_set.dim() * b_set.dim() != rho.dim() {
        return Err(Error::BadFactorization {
            dim: rho.dim(),
            dim_a: a_set.dim(),
            dim_b: b_set.dim(),
        });
    }
    let mut total = 0.0;
    for (a, b) in a_set.operators().iter().zip(b_set.operators()) {
        total += skew_information(rho, &sum_observable(a, b)?)?;
    }
    let threshold = c_a + c_b;
    Ok(WitnessVerdict {
        total,
        threshold,
        violated: total < threshold - WITNESS_TOL,
    })
}
