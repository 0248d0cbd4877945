//! Validated complex Hermitian and density-matrix types plus the spectral machinery
//! (eigendecomposition, PSD square root, commutator, norms, tensor product, partial
//! trace) everything else builds on.
//!
//! All types are immutable after construction; spectral data for density matrices is
//! computed eagerly so reads never mutate.

use nalgebra::linalg::SymmetricEigen;
use nalgebra::DMatrix;

use crate::{Error, Result, MAX_DIM};

pub type Complex64 = nalgebra::Complex<f64>;

/// Relative tolerance for accepting a nearly Hermitian input.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Absolute tolerance on |Tr ρ − 1|.
pub const TRACE_TOL: f64 = 1e-10;
/// Most negative eigenvalue still attributed to rounding noise.
pub const EIGENVALUE_FLOOR: f64 = -1e-10;
/// Magnitude below which a computed eigenvalue is treated as an exact zero.
/// The square root amplifies solver noise ε to √ε, so zeros of rank-deficient
/// states must be snapped to 0 before √ρ is formed.
pub const EIGENVALUE_NOISE_FLOOR: f64 = 1e-13;
/// Frobenius tolerance for √ρ·√ρ reconstructing ρ.
pub const SQRT_RECONSTRUCTION_TOL: f64 = 1e-9;

const EIGEN_MAX_ITER: usize = 100_000;

/// Which subsystem of a bipartite state survives a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// A square complex matrix with finite entries and dimension between 1 and [`MAX_DIM`].
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<Complex64>,
}

impl ComplexMatrix {
    /// Validates squareness, the dimension range, and entry finiteness.
    pub fn new(inner: DMatrix<Complex64>) -> Result<Self> {
        let (rows, cols) = inner.shape();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if rows == 0 {
            return Err(Error::EmptyMatrix);
        }
        if rows > MAX_DIM {
            return Err(Error::DimensionTooLarge {
                dim: rows,
                max: MAX_DIM,
            });
        }
        for row in 0..rows {
            for col in 0..cols {
                let z = inner[(row, col)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFiniteEntry { row, col });
                }
            }
        }
        Ok(Self { inner })
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        Self::new(DMatrix::from_fn(dim, dim, f))
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::new(DMatrix::identity(dim, dim))
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(DMatrix::zeros(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.inner[(row, col)]
    }

    pub(crate) fn inner(&self) -> &DMatrix<Complex64> {
        &self.inner
    }

    pub(crate) fn from_inner_unchecked(inner: DMatrix<Complex64>) -> Self {
        Self { inner }
    }

    pub fn trace(&self) -> Complex64 {
        self.inner.trace()
    }

    /// Tr(AB) in O(dim²) without forming the product.
    pub fn trace_product(&self, other: &Self) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "trace_product dimension mismatch");
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                acc += self.inner[(i, j)] * other.inner[(j, i)];
            }
        }
        acc
    }

    pub fn adjoint(&self) -> Self {
        Self {
            inner: self.inner.adjoint(),
        }
    }

    /// √(Σ|m_ij|²); zero iff the matrix is zero.
    pub fn frobenius_norm(&self) -> f64 {
        self.inner.norm()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.inner.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            inner: self.inner.scale(factor),
        }
    }

    pub fn scale_complex(&self, factor: Complex64) -> Self {
        Self {
            inner: &self.inner * factor,
        }
    }

    /// AB − BA. Anti-Hermitian whenever both arguments are Hermitian.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Self {
            inner: &self.inner * &other.inner - &other.inner * &self.inner,
        })
    }

    /// Kronecker product with row-major block layout: block (i,j) equals a_ij · B.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        Self::new(self.inner.kronecker(&other.inner))
    }

    /// Max entry modulus of the difference; infinity norm used by tests and validators.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "max_abs_diff dimension mismatch");
        let mut max = 0.0f64;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                max = max.max((self.inner[(i, j)] - other.inner[(i, j)]).norm());
            }
        }
        max
    }
}

impl std::ops::Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            inner: &self.inner + &rhs.inner,
        }
    }
}

impl std::ops::Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            inner: &self.inner - &rhs.inner,
        }
    }
}

impl std::ops::Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            inner: &self.inner * &rhs.inner,
        }
    }
}

/// A validated Hermitian operator. The stored matrix satisfies M = M† exactly:
/// construction symmetrizes to (M + M†)/2 after checking the input is within
/// [`HERMITICITY_TOL`] · max(1, ‖M‖_F) of Hermitian.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    mat: ComplexMatrix,
}

impl HermitianOperator {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        let deviation = mat.max_abs_diff(&mat.adjoint());
        let tolerance = HERMITICITY_TOL * mat.frobenius_norm().max(1.0);
        if deviation > tolerance {
            return Err(Error::NotHermitian {
                deviation,
                tolerance,
            });
        }
        Ok(Self::symmetrize(&mat))
    }

    /// (M + M†)/2 with the diagonal imaginary parts zeroed and each lower entry
    /// stored as the exact conjugate of its upper partner.
    fn symmetrize(mat: &ComplexMatrix) -> Self {
        let n = mat.dim();
        let mut out = DMatrix::zeros(n, n);
        for i in 0..n {
            out[(i, i)] = Complex64::new(mat.get(i, i).re, 0.0);
            for j in (i + 1)..n {
                let z = (mat.get(i, j) + mat.get(j, i).conj()).scale(0.5);
                out[(i, j)] = z;
                out[(j, i)] = z.conj();
            }
        }
        Self {
            mat: ComplexMatrix::from_inner_unchecked(out),
        }
    }

    /// Wraps a matrix already exactly Hermitian by construction (sums, real scalings,
    /// and symmetrized products of exact operators).
    pub(crate) fn from_exact(mat: ComplexMatrix) -> Self {
        debug_assert_eq!(
            mat.max_abs_diff(&mat.adjoint()),
            0.0,
            "from_exact requires an exactly Hermitian matrix"
        );
        Self { mat }
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Ok(Self::from_exact(ComplexMatrix::identity(dim)?))
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Ok(Self::from_exact(ComplexMatrix::zeros(dim)?))
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    /// Real trace (the symmetrized diagonal is exactly real).
    pub fn trace(&self) -> f64 {
        self.mat.trace().re
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::from_exact(self.mat.scale(factor))
    }

    /// Σ c_k H_k for real coefficients; all terms must share one dimension.
    pub fn linear_combination(terms: &[(f64, &HermitianOperator)]) -> Result<Self> {
        let first = terms.first().ok_or(Error::EmptyObservableSet)?;
        let dim = first.1.dim();
        let mut acc = DMatrix::<Complex64>::zeros(dim, dim);
        for (coeff, op) in terms {
            if op.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: op.dim(),
                });
            }
            acc += op.mat.inner().scale(*coeff);
        }
        Ok(Self::from_exact(ComplexMatrix::from_inner_unchecked(acc)))
    }

    /// Eigenvalues sorted descending (ties left in solver order) and the matching
    /// unitary of column eigenvectors.
    pub fn spectral_decompose(&self) -> Result<(Vec<f64>, ComplexMatrix)> {
        let dim = self.dim();
        let eig = SymmetricEigen::try_new(self.mat.inner().clone(), f64::EPSILON, EIGEN_MAX_ITER)
            .ok_or(Error::EigenConvergence { dim })?;
        let mut order: Vec<usize> = (0..dim).collect();
        order.sort_by(|&a, &b| {
            eig.eigenvalues[b]
                .partial_cmp(&eig.eigenvalues[a])
                .expect("Hermitian eigenvalues are finite")
        });
        let values: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
        let mut vectors = DMatrix::zeros(dim, dim);
        for (col, &k) in order.iter().enumerate() {
            vectors.set_column(col, &eig.eigenvectors.column(k));
        }
        Ok((values, ComplexMatrix::from_inner_unchecked(vectors)))
    }
}

impl std::ops::Add for &HermitianOperator {
    type Output = HermitianOperator;
    fn add(self, rhs: &HermitianOperator) -> HermitianOperator {
        HermitianOperator::from_exact(&self.mat + &rhs.mat)
    }
}

impl std::ops::Sub for &HermitianOperator {
    type Output = HermitianOperator;
    fn sub(self, rhs: &HermitianOperator) -> HermitianOperator {
        HermitianOperator::from_exact(&self.mat - &rhs.mat)
    }
}

/// A validated density matrix: Hermitian, unit trace, positive semidefinite, with
/// spectral data and the principal square root cached at construction.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    op: HermitianOperator,
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
    sqrt: HermitianOperator,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        Self::from_hermitian(HermitianOperator::new(mat)?)
    }

    pub fn from_hermitian(op: HermitianOperator) -> Result<Self> {
        let trace = op.trace();
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidTrace { trace });
        }
        let (raw_values, eigenvectors) = op.spectral_decompose()?;
        let min_eigenvalue = raw_values.iter().copied().fold(f64::INFINITY, f64::min);
        if min_eigenvalue < EIGENVALUE_FLOOR {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
        }
        // Eigenvalues in [-1e-10, 1e-13) are rounding noise around zero; snap them
        // to 0 before the square root, and clamp the rest to [0, 1].
        let eigenvalues: Vec<f64> = raw_values
            .iter()
            .map(|&v| {
                if v < EIGENVALUE_NOISE_FLOOR {
                    0.0
                } else {
                    v.min(1.0)
                }
            })
            .collect();

        let dim = op.dim();
        let diag_sqrt = DMatrix::from_fn(dim, dim, |i, j| {
            if i == j {
                Complex64::new(eigenvalues[i].sqrt(), 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let v = eigenvectors.inner();
        let sqrt_mat = v * diag_sqrt * v.adjoint();
        let sqrt = HermitianOperator::new(ComplexMatrix::new(sqrt_mat)?)?;

        let residual = (&(sqrt.matrix() * sqrt.matrix()) - op.matrix()).frobenius_norm();
        if residual > SQRT_RECONSTRUCTION_TOL {
            return Err(Error::SqrtReconstruction { dim, residual });
        }

        Ok(Self {
            op,
            eigenvalues,
            eigenvectors,
            sqrt,
        })
    }

    /// Rank-1 projector |ψ⟩⟨ψ| from a (not necessarily normalized) state vector.
    pub fn pure(amplitudes: &[Complex64]) -> Result<Self> {
        let dim = amplitudes.len();
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq <= 0.0 || !norm_sq.is_finite() {
            return Err(Error::ZeroStateVector);
        }
        let norm = norm_sq.sqrt();
        let psi: Vec<Complex64> = amplitudes.iter().map(|z| z / norm).collect();
        let mat = ComplexMatrix::from_fn(dim, |i, j| psi[i] * psi[j].conj())?;
        Self::new(mat)
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::new(ComplexMatrix::identity(dim)?.scale(1.0 / dim as f64))
    }

    /// Convex combination Σ p_k ρ_k. Weights must be a probability vector.
    pub fn mix(terms: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let first = terms.first().ok_or(Error::InvalidWeights {
            reason: "empty mixture".into(),
        })?;
        let dim = first.1.dim();
        if let Some((w, _)) = terms.iter().find(|(w, _)| *w < 0.0) {
            return Err(Error::InvalidWeights {
                reason: format!("negative weight {w}"),
            });
        }
        let total: f64 = terms.iter().map(|(w, _)| w).sum();
        if (total - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidWeights {
                reason: format!("weights sum to {total}"),
            });
        }
        let mut acc = DMatrix::<Complex64>::zeros(dim, dim);
        for (w, rho) in terms {
            if rho.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: rho.dim(),
                });
            }
            acc += rho.matrix().inner().scale(*w);
        }
        Self::new(ComplexMatrix::new(acc)?)
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.op.matrix()
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.op
    }

    /// Cached spectrum, descending, clamped to [0, 1].
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary of column eigenvectors matching [`Self::eigenvalues`].
    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    /// Principal PSD square root √ρ, computed once at construction.
    pub fn sqrt(&self) -> &HermitianOperator {
        &self.sqrt
    }

    /// Product state ρ_A ⊗ ρ_B.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        Self::new(self.matrix().tensor(other.matrix())?)
    }

    /// Reduces a bipartite state (dim = dim_a · dim_b) to the kept subsystem.
    pub fn partial_trace(&self, dim_a: usize, dim_b: usize, keep: Subsystem) -> Result<Self> {
        if dim_a * dim_b != self.dim() || dim_a == 0 || dim_b == 0 {
            return Err(Error::BadFactorization {
                dim: self.dim(),
                dim_a,
                dim_b,
            });
        }
        let rho = self.matrix().inner();
        let reduced = match keep {
            Subsystem::First => DMatrix::from_fn(dim_a, dim_a, |i, j| {
                (0..dim_b)
                    .map(|k| rho[(i * dim_b + k, j * dim_b + k)])
                    .sum()
            }),
            Subsystem::Second => DMatrix::from_fn(dim_b, dim_b, |i, j| {
                (0..dim_a)
                    .map(|k| rho[(k * dim_b + i, k * dim_b + j)])
                    .sum()
            }),
        };
        Self::new(ComplexMatrix::new(reduced)?)
    }
}
