//! Skew information, variance, orthonormal observable bases, and the basis-summed
//! total uncertainty Q(ρ).

use nalgebra::DMatrix;

use crate::hermitian::{Complex64, ComplexMatrix, DensityMatrix, HermitianOperator};
use crate::{Error, Result, MAX_DIM};

/// Pairwise Hilbert-Schmidt orthonormality tolerance for observable bases.
pub const BASIS_ORTHONORMALITY_TOL: f64 = 1e-10;

/// Skew information I_ρ(H) = ½‖[√ρ, H]‖²_F.
///
/// The norm form is the canonical computation (it cannot go negative from
/// rounding); the trace form Tr(ρH²) − Tr(√ρH√ρH) is kept as a test oracle.
/// Vanishes exactly when ρ and H commute.
pub fn skew_information(rho: &DensityMatrix, h: &HermitianOperator) -> Result<f64> {
    if rho.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: h.dim(),
        });
    }
    let c = rho.sqrt().matrix().commutator(h.matrix())?;
    let norm = c.frobenius_norm();
    Ok(0.5 * norm * norm)
}

/// Variance Tr(ρH²) − (Tr(ρH))². Coincides with skew information on pure states
/// and dominates it on mixed states.
pub fn variance(rho: &DensityMatrix, h: &HermitianOperator) -> Result<f64> {
    if rho.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: h.dim(),
        });
    }
    let rho_h = rho.matrix() * h.matrix();
    let second_moment = rho_h.trace_product(h.matrix()).re;
    let mean = rho_h.trace().re;
    Ok((second_moment - mean * mean).max(0.0))
}

/// An ordered Hilbert-Schmidt orthonormal basis of the n²-dimensional real space of
/// Hermitian operators on an n-dimensional system: Tr(H_i H_j) = δ_ij.
#[derive(Debug, Clone)]
pub struct ObservableBasis {
    dim: usize,
    operators: Vec<HermitianOperator>,
}

impl ObservableBasis {
    /// Validates the element count (n²) and pairwise orthonormality.
    pub fn new(operators: Vec<HermitianOperator>) -> Result<Self> {
        let dim = operators.first().ok_or(Error::EmptyObservableSet)?.dim();
        let expected = dim * dim;
        if operators.len() != expected {
            return Err(Error::BasisSize {
                dim,
                expected,
                got: operators.len(),
            });
        }
        for op in &operators {
            if op.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: op.dim(),
                });
            }
        }
        for i in 0..operators.len() {
            for j in i..operators.len() {
                let overlap = operators[i]
                    .matrix()
                    .trace_product(operators[j].matrix())
                    .re;
                let target = if i == j { 1.0 } else { 0.0 };
                let deviation = (overlap - target).abs();
                if deviation > BASIS_ORTHONORMALITY_TOL {
                    return Err(Error::BasisNotOrthonormal { i, j, deviation });
                }
            }
        }
        Ok(Self { dim, operators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    pub fn operators(&self) -> &[HermitianOperator] {
        &self.operators
    }
}

/// The generalized Gell-Mann basis of dimension n, Hilbert-Schmidt normalized, with
/// I/√n prepended: for n = 2 this is {I/√2, σ₁/√2, σ₂/√2, σ₃/√2}.
///
/// Ordering: identity, then for each index pair j < k the symmetric then the
/// antisymmetric element, then the n − 1 diagonal elements.
pub fn gell_mann_basis(n: usize) -> Result<ObservableBasis> {
    if !(2..=MAX_DIM).contains(&n) {
        return Err(Error::BasisDimRange {
            dim: n,
            max: MAX_DIM,
        });
    }
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut ops = Vec::with_capacity(n * n);
    ops.push(HermitianOperator::identity(n)?.scale(1.0 / (n as f64).sqrt()));
    for j in 0..n {
        for k in (j + 1)..n {
            let mut sym = DMatrix::<Complex64>::zeros(n, n);
            sym[(j, k)] = Complex64::new(inv_sqrt2, 0.0);
            sym[(k, j)] = Complex64::new(inv_sqrt2, 0.0);
            ops.push(HermitianOperator::from_exact(
                ComplexMatrix::from_inner_unchecked(sym),
            ));
            let mut asym = DMatrix::<Complex64>::zeros(n, n);
            asym[(j, k)] = Complex64::new(0.0, -inv_sqrt2);
            asym[(k, j)] = Complex64::new(0.0, inv_sqrt2);
            ops.push(HermitianOperator::from_exact(
                ComplexMatrix::from_inner_unchecked(asym),
            ));
        }
    }
    for l in 1..n {
        let norm = 1.0 / ((l * (l + 1)) as f64).sqrt();
        let mut diag = DMatrix::<Complex64>::zeros(n, n);
        for i in 0..l {
            diag[(i, i)] = Complex64::new(norm, 0.0);
        }
        diag[(l, l)] = Complex64::new(-(l as f64) * norm, 0.0);
        ops.push(HermitianOperator::from_exact(
            ComplexMatrix::from_inner_unchecked(diag),
        ));
    }
    ObservableBasis::new(ops)
}

/// Q(ρ) = Σ_i I_ρ(H_i) over an orthonormal observable basis. Basis-independent.
pub fn q_total(rho: &DensityMatrix, basis: &ObservableBasis) -> Result<f64> {
    if rho.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: basis.dim(),
        });
    }
    basis
        .operators()
        .iter()
        .map(|h| skew_information(rho, h))
        .sum()
}

/// Closed form n − (Tr√ρ)² for [`q_total`], derived from the completeness relation
/// Σ_i (H_i)_ab (H_i)_cd = δ_ad δ_bc of any Hilbert-Schmidt orthonormal Hermitian
/// basis. Kept as a separate helper: the basis sum is the defining quantity, this is
/// its derived oracle.
pub fn q_total_closed_form(rho: &DensityMatrix) -> f64 {
    let trace_sqrt: f64 = rho.eigenvalues().iter().map(|v| v.sqrt()).sum();
    rho.dim() as f64 - trace_sqrt * trace_sqrt
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{bloch_state, sigma_x, sigma_y, sigma_z, spin1_jx, BlochVector};
    use crate::sampling;
    use approx::assert_relative_eq;
    use rand::Rng;

    /// Trace-form oracle Tr(ρH²) − Tr(√ρH√ρH), independent of the norm-form path.
    fn skew_trace_form(rho: &DensityMatrix, h: &HermitianOperator) -> f64 {
        let second = (&(rho.matrix() * h.matrix()) * h.matrix()).trace().re;
        let sqrt_h = rho.sqrt().matrix() * h.matrix();
        second - (&sqrt_h * &sqrt_h).trace().re
    }

    #[test]
    fn maximally_mixed_state_has_zero_skew_information() {
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        assert_eq!(skew_information(&rho, &sigma_x()).unwrap(), 0.0);
    }

    #[test]
    fn eigenstate_has_zero_skew_information() {
        let rho =
            DensityMatrix::pure(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]).unwrap();
        assert!(skew_information(&rho, &sigma_z()).unwrap() < 1e-30);
    }

    #[test]
    fn bloch_state_skew_of_sigma_difference() {
        let r = BlochVector::new([3.0f64.sqrt() / 2.0, 0.0, 0.0]).unwrap();
        let rho = bloch_state(&r).unwrap();
        let h = &sigma_x() - &sigma_y();
        assert_relative_eq!(skew_information(&rho, &h).unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn spin1_state_skew_of_jx_at_quarter_turn() {
        let (rho, _) = crate::catalog::figure_family(
            crate::catalog::FigureFamily::Fig2Spin1,
            std::f64::consts::FRAC_PI_2,
        )
        .unwrap();
        assert_relative_eq!(
            skew_information(&rho, &spin1_jx()).unwrap(),
            1.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn norm_form_matches_trace_form_oracle() {
        let mut rng = sampling::rng(17);
        for _ in 0..40 {
            let dim = 2 + rng.random_range(0..5usize);
            let rho = sampling::random_density(dim, &mut rng);
            let h = sampling::random_hermitian(dim, &mut rng);
            let norm_form = skew_information(&rho, &h).unwrap();
            let trace_form = skew_trace_form(&rho, &h);
            assert!(
                (norm_form - trace_form).abs() < 1e-9,
                "dim {dim}: {norm_form} vs {trace_form}"
            );
        }
    }

    #[test]
    fn skew_information_dimension_mismatch() {
        let rho = DensityMatrix::maximally_mixed(3).unwrap();
        assert!(matches!(
            skew_information(&rho, &sigma_x()),
            Err(Error::DimensionMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn variance_reference_values() {
        let ground =
            DensityMatrix::pure(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]).unwrap();
        assert_relative_eq!(variance(&ground, &sigma_x()).unwrap(), 1.0, epsilon = 1e-14);
        assert!(variance(&ground, &sigma_z()).unwrap() < 1e-14);
    }

    #[test]
    fn variance_strictly_exceeds_skew_information_on_mixed_states() {
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        assert_relative_eq!(variance(&rho, &sigma_z()).unwrap(), 1.0, epsilon = 1e-14);
        assert_eq!(skew_information(&rho, &sigma_z()).unwrap(), 0.0);
    }

    #[test]
    fn gell_mann_basis_qubit_matches_scaled_paulis() {
        let basis = gell_mann_basis(2).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let expected = [
            HermitianOperator::identity(2).unwrap().scale(s),
            sigma_x().scale(s),
            sigma_y().scale(s),
            sigma_z().scale(s),
        ];
        assert_eq!(basis.len(), 4);
        for (got, want) in basis.operators().iter().zip(&expected) {
            assert!(got.matrix().max_abs_diff(want.matrix()) < 1e-15);
        }
    }

    #[test]
    fn gell_mann_gram_matrix_is_identity_to_machine_precision() {
        for n in [2usize, 3] {
            let basis = gell_mann_basis(n).unwrap();
            for (i, a) in basis.operators().iter().enumerate() {
                for (j, b) in basis.operators().iter().enumerate() {
                    let overlap = (a.matrix() * b.matrix()).trace().re;
                    let target = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (overlap - target).abs() < 1e-15,
                        "n={n} pair ({i},{j}): {overlap}"
                    );
                }
            }
        }
    }

    #[test]
    fn gell_mann_basis_dimension_range() {
        assert!(matches!(
            gell_mann_basis(1),
            Err(Error::BasisDimRange { .. })
        ));
        assert!(matches!(
            gell_mann_basis(65),
            Err(Error::BasisDimRange { .. })
        ));
        assert_eq!(gell_mann_basis(5).unwrap().len(), 25);
    }

    #[test]
    fn basis_spans_hermitian_space() {
        let mut rng = sampling::rng(23);
        for n in [2usize, 3, 4] {
            let basis = gell_mann_basis(n).unwrap();
            let x = sampling::random_hermitian(n, &mut rng);
            let mut terms = Vec::new();
            let coeffs: Vec<f64> = basis
                .operators()
                .iter()
                .map(|h| (h.matrix() * x.matrix()).trace().re)
                .collect();
            for (c, h) in coeffs.iter().zip(basis.operators()) {
                terms.push((*c, h));
            }
            let rebuilt = HermitianOperator::linear_combination(&terms).unwrap();
            assert!(rebuilt.matrix().max_abs_diff(x.matrix()) < 1e-9);
        }
    }

    #[test]
    fn rejects_wrong_basis_cardinality() {
        let ops = vec![sigma_x(), sigma_y(), sigma_z()];
        assert!(matches!(
            ObservableBasis::new(ops),
            Err(Error::BasisSize {
                dim: 2,
                expected: 4,
                got: 3
            })
        ));
    }

    #[test]
    fn rejects_non_orthonormal_basis() {
        let ops = vec![sigma_x(), sigma_x(), sigma_y(), sigma_z()];
        assert!(matches!(
            ObservableBasis::new(ops),
            Err(Error::BasisNotOrthonormal { .. })
        ));
    }

    #[test]
    fn q_total_of_maximally_mixed_state_vanishes() {
        for n in [2usize, 3] {
            let rho = DensityMatrix::maximally_mixed(n).unwrap();
            let basis = gell_mann_basis(n).unwrap();
            assert!(q_total(&rho, &basis).unwrap() < 1e-20);
        }
    }

    #[test]
    fn q_total_of_pure_qubit_is_one() {
        let rho =
            DensityMatrix::pure(&[Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)]).unwrap();
        let basis = gell_mann_basis(2).unwrap();
        assert_relative_eq!(q_total(&rho, &basis).unwrap(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(q_total_closed_form(&rho), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn q_total_of_bloch_state_matches_hand_value() {
        let r = BlochVector::new([3.0f64.sqrt() / 2.0, 0.0, 0.0]).unwrap();
        let rho = bloch_state(&r).unwrap();
        let basis = gell_mann_basis(2).unwrap();
        assert_relative_eq!(q_total(&rho, &basis).unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn q_total_matches_closed_form_on_random_states() {
        let mut rng = sampling::rng(31);
        for n in [2usize, 3, 4] {
            let basis = gell_mann_basis(n).unwrap();
            for _ in 0..10 {
                let rho = sampling::random_density(n, &mut rng);
                let sum = q_total(&rho, &basis).unwrap();
                let closed = q_total_closed_form(&rho);
                assert!((sum - closed).abs() < 1e-9, "n={n}: {sum} vs {closed}");
            }
        }
    }

    #[test]
    fn q_total_is_basis_independent() {
        let mut rng = sampling::rng(37);
        for n in [2usize, 3] {
            let basis = gell_mann_basis(n).unwrap();
            let u = sampling::random_unitary(n, &mut rng);
            let rotated: Vec<HermitianOperator> = basis
                .operators()
                .iter()
                .map(|h| {
                    let m = &(&(u.clone()) * h.matrix()) * &u.adjoint();
                    HermitianOperator::new(m).unwrap()
                })
                .collect();
            let rotated = ObservableBasis::new(rotated).unwrap();
            let rho = sampling::random_density(n, &mut rng);
            let a = q_total(&rho, &basis).unwrap();
            let b = q_total(&rho, &rotated).unwrap();
            assert!((a - b).abs() < 1e-9, "n={n}: {a} vs {b}");
        }
    }

    #[test]
    fn q_total_dimension_mismatch() {
        let rho = DensityMatrix::maximally_mixed(3).unwrap();
        let basis = gell_mann_basis(2).unwrap();
        assert!(matches!(
            q_total(&rho, &basis),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
