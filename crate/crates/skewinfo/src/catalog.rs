//! Named operators and parameterized state families: Pauli matrices, spin-1 angular
//! momentum, Bloch-vector qubit states, the two figure-scan families, and the Bell
//! states used as entanglement fixtures.

use std::f64::consts::FRAC_1_SQRT_2;
use std::str::FromStr;

use crate::bounds::ObservableSet;
use crate::hermitian::{Complex64, ComplexMatrix, DensityMatrix, HermitianOperator};
use crate::{Error, Result};

fn hermitian_from_rows(rows: &[&[Complex64]]) -> HermitianOperator {
    let dim = rows.len();
    let mat = ComplexMatrix::from_fn(dim, |i, j| rows[i][j]).expect("catalog operator is valid");
    HermitianOperator::new(mat).expect("catalog operator is Hermitian")
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// σ₁ (Pauli X).
pub fn sigma_x() -> HermitianOperator {
    hermitian_from_rows(&[&[c(0.0, 0.0), c(1.0, 0.0)], &[c(1.0, 0.0), c(0.0, 0.0)]])
}

/// σ₂ (Pauli Y).
pub fn sigma_y() -> HermitianOperator {
    hermitian_from_rows(&[&[c(0.0, 0.0), c(0.0, -1.0)], &[c(0.0, 1.0), c(0.0, 0.0)]])
}

/// σ₃ (Pauli Z).
pub fn sigma_z() -> HermitianOperator {
    hermitian_from_rows(&[&[c(1.0, 0.0), c(0.0, 0.0)], &[c(0.0, 0.0), c(-1.0, 0.0)]])
}

/// The ordered Pauli triple {σ₁, σ₂, σ₃}.
pub fn pauli() -> ObservableSet {
    ObservableSet::new(vec![sigma_x(), sigma_y(), sigma_z()]).expect("pauli set is valid")
}

/// Spin-1 J_x = (1/√2)·tridiag(1).
pub fn spin1_jx() -> HermitianOperator {
    let s = FRAC_1_SQRT_2;
    hermitian_from_rows(&[
        &[c(0.0, 0.0), c(s, 0.0), c(0.0, 0.0)],
        &[c(s, 0.0), c(0.0, 0.0), c(s, 0.0)],
        &[c(0.0, 0.0), c(s, 0.0), c(0.0, 0.0)],
    ])
}

/// Spin-1 J_y = (1/√2)·tridiag(∓i).
pub fn spin1_jy() -> HermitianOperator {
    let s = FRAC_1_SQRT_2;
    hermitian_from_rows(&[
        &[c(0.0, 0.0), c(0.0, -s), c(0.0, 0.0)],
        &[c(0.0, s), c(0.0, 0.0), c(0.0, -s)],
        &[c(0.0, 0.0), c(0.0, s), c(0.0, 0.0)],
    ])
}

/// Spin-1 J_z = diag(1, 0, −1), the normalization that closes the su(2) algebra
/// [J_x, J_y] = iJ_z alongside the tridiagonal J_x, J_y.
pub fn spin1_jz() -> HermitianOperator {
    hermitian_from_rows(&[
        &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        &[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        &[c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
    ])
}

/// The ordered angular-momentum triple {J_x, J_y, J_z} for spin 1 (ħ = 1).
pub fn spin1() -> ObservableSet {
    ObservableSet::new(vec![spin1_jx(), spin1_jy(), spin1_jz()]).expect("spin-1 set is valid")
}

/// A qubit Bloch vector with |r| ≤ 1 (up to 1e-12 of rounding).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    r: [f64; 3],
}

impl BlochVector {
    pub fn new(r: [f64; 3]) -> Result<Self> {
        let norm = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
        if norm > 1.0 + 1e-12 || norm.is_nan() {
            return Err(Error::BlochNorm { norm });
        }
        Ok(Self { r })
    }

    pub fn components(&self) -> [f64; 3] {
        self.r
    }

    pub fn norm(&self) -> f64 {
        (self.r[0] * self.r[0] + self.r[1] * self.r[1] + self.r[2] * self.r[2]).sqrt()
    }
}

/// ρ = ½(I + r·σ); eigenvalues are ½(1 ± |r|).
pub fn bloch_state(r: &BlochVector) -> Result<DensityMatrix> {
    let [x, y, z] = r.components();
    let op = HermitianOperator::linear_combination(&[
        (0.5, &HermitianOperator::identity(2)?),
        (0.5 * x, &sigma_x()),
        (0.5 * y, &sigma_y()),
        (0.5 * z, &sigma_z()),
    ])?;
    DensityMatrix::from_hermitian(op)
}

/// The two parameterized figure families reproduced by the CLI scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureFamily {
    /// Qubit family: Bloch vector (√3/2·cosθ, √3/2·sinθ, 0) with the Pauli triple.
    Fig1Bloch,
    /// Spin-1 family: pure state cos(θ/2)|0⟩ + sin(θ/2)|2⟩ with {J_x, J_y, J_z}.
    Fig2Spin1,
}

impl FigureFamily {
    pub fn name(&self) -> &'static str {
        match self {
            FigureFamily::Fig1Bloch => "fig1_bloch",
            FigureFamily::Fig2Spin1 => "fig2_spin1",
        }
    }
}

impl FromStr for FigureFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1_bloch" => Ok(FigureFamily::Fig1Bloch),
            "fig2_spin1" => Ok(FigureFamily::Fig2Spin1),
            other => Err(Error::UnknownFamily {
                name: other.to_string(),
            }),
        }
    }
}

/// The state and observable set of a figure family at angle θ ∈ [0, 2π).
pub fn figure_family(family: FigureFamily, theta: f64) -> Result<(DensityMatrix, ObservableSet)> {
    match family {
        FigureFamily::Fig1Bloch => {
            let half_sqrt3 = 3.0f64.sqrt() / 2.0;
            let r = BlochVector::new([half_sqrt3 * theta.cos(), half_sqrt3 * theta.sin(), 0.0])?;
            Ok((bloch_state(&r)?, pauli()))
        }
        FigureFamily::Fig2Spin1 => {
            let psi = [
                c((theta / 2.0).cos(), 0.0),
                c(0.0, 0.0),
                c((theta / 2.0).sin(), 0.0),
            ];
            Ok((DensityMatrix::pure(&psi)?, spin1()))
        }
    }
}

/// The four Bell-state projectors, ordered |Φ+⟩, |Φ−⟩, |Ψ+⟩, |Ψ−⟩.
pub fn bell_states() -> [DensityMatrix; 4] {
    let s = FRAC_1_SQRT_2;
    let make = |amps: [f64; 4]| {
        DensityMatrix::pure(&[
            c(amps[0], 0.0),
            c(amps[1], 0.0),
            c(amps[2], 0.0),
            c(amps[3], 0.0),
        ])
        .expect("Bell state is valid")
    };
    [
        make([s, 0.0, 0.0, s]),
        make([s, 0.0, 0.0, -s]),
        make([0.0, s, s, 0.0]),
        make([0.0, s, -s, 0.0]),
    ]
}

/// The singlet |Ψ−⟩⟨Ψ−|.
pub fn singlet() -> DensityMatrix {
    let [_, _, _, psi_minus] = bell_states();
    psi_minus
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::Subsystem;
    use crate::skew::skew_information;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn pauli_matrices_square_to_identity_and_are_traceless() {
        for sigma in pauli().operators() {
            let sq = sigma.matrix() * sigma.matrix();
            assert!(sq.max_abs_diff(&ComplexMatrix::identity(2).unwrap()) < 1e-15);
            assert_eq!(sigma.trace(), 0.0);
        }
    }

    #[test]
    fn pauli_commutation_relation() {
        let comm = sigma_x().matrix().commutator(sigma_y().matrix()).unwrap();
        let expected = sigma_z().matrix().scale_complex(c(0.0, 2.0));
        assert!(comm.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn spin1_su2_algebra_closes_with_corrected_jz() {
        let comm = spin1_jx().matrix().commutator(spin1_jy().matrix()).unwrap();
        let expected = spin1_jz().matrix().scale_complex(c(0.0, 1.0));
        assert!(comm.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn spin1_casimir_is_two() {
        let mut acc = ComplexMatrix::zeros(3).unwrap();
        for j in spin1().operators() {
            acc = &acc + &(j.matrix() * j.matrix());
        }
        let expected = ComplexMatrix::identity(3).unwrap().scale(2.0);
        assert!(acc.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn spin1_skew_information_at_half_pi() {
        let (rho, _) = figure_family(FigureFamily::Fig2Spin1, FRAC_PI_2).unwrap();
        assert_relative_eq!(
            skew_information(&rho, &spin1_jx()).unwrap(),
            1.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn bloch_zero_vector_gives_maximally_mixed() {
        let rho = bloch_state(&BlochVector::new([0.0, 0.0, 0.0]).unwrap()).unwrap();
        let expected = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(rho.matrix().max_abs_diff(expected.matrix()) < 1e-15);
    }

    #[test]
    fn bloch_north_pole_gives_ground_projector() {
        let rho = bloch_state(&BlochVector::new([0.0, 0.0, 1.0]).unwrap()).unwrap();
        assert_eq!(rho.matrix().get(0, 0), c(1.0, 0.0));
        assert_eq!(rho.matrix().get(1, 1), c(0.0, 0.0));
    }

    #[test]
    fn bloch_eigenvalues_follow_radius() {
        let r = BlochVector::new([0.3, -0.4, 0.5]).unwrap();
        let rho = bloch_state(&r).unwrap();
        let norm = r.norm();
        assert_relative_eq!(rho.eigenvalues()[0], 0.5 * (1.0 + norm), epsilon = 1e-12);
        assert_relative_eq!(rho.eigenvalues()[1], 0.5 * (1.0 - norm), epsilon = 1e-12);
    }

    #[test]
    fn bloch_vector_rejects_norm_above_one() {
        assert!(matches!(
            BlochVector::new([1.0, 0.1, 0.0]),
            Err(Error::BlochNorm { .. })
        ));
        assert!(BlochVector::new([1.0, 0.0, 0.0]).is_ok());
    }

    #[test]
    fn figure_family_names_round_trip() {
        for family in [FigureFamily::Fig1Bloch, FigureFamily::Fig2Spin1] {
            assert_eq!(family.name().parse::<FigureFamily>().unwrap(), family);
        }
        assert!(matches!(
            "fig3_nope".parse::<FigureFamily>(),
            Err(Error::UnknownFamily { .. })
        ));
    }

    #[test]
    fn fig1_at_quarter_turn_matches_closed_form() {
        let (rho, set) = figure_family(FigureFamily::Fig1Bloch, FRAC_PI_2).unwrap();
        let diff = set.get(0) - set.get(2);
        assert_relative_eq!(skew_information(&rho, &diff).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn fig2_at_zero_matches_closed_form() {
        let (rho, set) = figure_family(FigureFamily::Fig2Spin1, 0.0).unwrap();
        assert_relative_eq!(
            skew_information(&rho, set.get(1)).unwrap(),
            0.5,
            epsilon = 1e-12
        );
    }

    #[test]
    fn fig2_difference_value_forced_by_parallelogram_law() {
        // I(J_x − J_y) = 2(I(J_x) + I(J_y)) − I(J_x + J_y) = 1 for every θ on this
        // family; the printed 0 is inconsistent with the sum values.
        let (rho, set) = figure_family(FigureFamily::Fig2Spin1, FRAC_PI_2).unwrap();
        let diff = set.get(0) - set.get(1);
        assert_relative_eq!(skew_information(&rho, &diff).unwrap(), 1.0, epsilon = 1e-12);
    }

    /// The four qubit-family closed forms (σ₁−σ₂ carries the parallelogram-consistent
    /// coefficient) at 32 grid points.
    #[test]
    fn fig1_closed_forms_across_grid() {
        for k in 0..32 {
            let theta = 2.0 * PI * k as f64 / 32.0;
            let (rho, set) = figure_family(FigureFamily::Fig1Bloch, theta).unwrap();
            let (s1, s2, s3) = (set.get(0), set.get(1), set.get(2));
            let cases = [
                (s1 - s2, 0.5 * (1.0 + (2.0 * theta).sin())),
                (s1 - s3, 0.25 * (3.0 - (2.0 * theta).cos())),
                (s2 - s3, 0.25 * (3.0 + (2.0 * theta).cos())),
                (&(s1 + s2) + s3, 1.0 - 0.5 * (2.0 * theta).sin()),
            ];
            for (h, expected) in cases {
                let got = skew_information(&rho, &h).unwrap();
                assert!(
                    (got - expected).abs() < 1e-10,
                    "θ={theta}: got {got}, expected {expected}"
                );
            }
        }
    }

    /// All nine spin-1 closed forms (differences corrected through the
    /// parallelogram identity) at 32 grid points.
    #[test]
    fn fig2_closed_forms_across_grid() {
        for k in 0..32 {
            let theta = 2.0 * PI * k as f64 / 32.0;
            let (rho, set) = figure_family(FigureFamily::Fig2Spin1, theta).unwrap();
            let (jx, jy, jz) = (set.get(0), set.get(1), set.get(2));
            let s = theta.sin();
            let cases = [
                (jx.clone(), 0.5 * (1.0 + s)),
                (jy.clone(), 0.5 * (1.0 - s)),
                (jz.clone(), s * s),
                (jx + jy, 1.0),
                (jx + jz, 0.5 * (1.0 + s) + s * s),
                (jy + jz, 0.5 * (1.0 - s) + s * s),
                (&(jx + jy) + jz, 1.0 + s * s),
                (jx - jy, 1.0),
                (jx - jz, 0.5 * (1.0 + s) + s * s),
                (jy - jz, 0.5 * (1.0 - s) + s * s),
            ];
            for (h, expected) in cases {
                let got = skew_information(&rho, &h).unwrap();
                assert!(
                    (got - expected).abs() < 1e-10,
                    "θ={theta}: got {got}, expected {expected}"
                );
            }
        }
    }

    #[test]
    fn bell_states_are_pure_with_maximally_mixed_marginals() {
        for bell in bell_states() {
            assert_eq!(bell.dim(), 4);
            assert_relative_eq!(bell.eigenvalues()[0], 1.0, epsilon = 1e-12);
            assert!(bell.eigenvalues()[1..].iter().all(|&v| v < 1e-12));
            for keep in [Subsystem::First, Subsystem::Second] {
                let marginal = bell.partial_trace(2, 2, keep).unwrap();
                let mixed = DensityMatrix::maximally_mixed(2).unwrap();
                assert!(marginal.matrix().max_abs_diff(mixed.matrix()) < 1e-12);
            }
        }
    }

    #[test]
    fn singlet_is_annihilated_by_total_spin() {
        let rho = singlet();
        for sigma in pauli().operators() {
            let m = crate::entanglement::sum_observable(sigma, sigma).unwrap();
            assert!(skew_information(&rho, &m).unwrap() < 1e-12);
        }
    }

    #[test]
    fn catalog_operators_pass_validation_exactly() {
        for op in pauli().operators().iter().chain(spin1().operators()) {
            assert_eq!(op.matrix().max_abs_diff(&op.matrix().adjoint()), 0.0);
        }
    }
}
