//! Additive uncertainty-relation lower bounds on Σ_i I_ρ(A_i) for a set of
//! observables, the exact parallelogram identity, the weighted two-observable
//! sandwich, and a combined comparison report.

use std::collections::BTreeMap;

use crate::hermitian::{DensityMatrix, HermitianOperator};
use crate::skew::skew_information;
use crate::{Error, Result};

/// Absolute slack allowed when flagging an inequality as satisfied; sits above
/// accumulated eigensolver error at the supported dimensions.
pub const SATISFACTION_TOL: f64 = 1e-9;

/// Square root with values in [-1e-12, 0) clamped to zero so rounding noise never
/// produces NaN.
fn sqrt_clamped(x: f64) -> f64 {
    debug_assert!(x > -1e-12, "skew information {x} below rounding tolerance");
    x.max(0.0).sqrt()
}

/// An ordered, nonempty set of same-dimension observables.
#[derive(Debug, Clone)]
pub struct ObservableSet {
    operators: Vec<HermitianOperator>,
}

impl ObservableSet {
    pub fn new(operators: Vec<HermitianOperator>) -> Result<Self> {
        let dim = operators.first().ok_or(Error::EmptyObservableSet)?.dim();
        for op in &operators {
            if op.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: op.dim(),
                });
            }
        }
        Ok(Self { operators })
    }

    /// Number of observables in the set.
    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    /// Matrix dimension shared by every observable.
    pub fn dim(&self) -> usize {
        self.operators[0].dim()
    }

    pub fn operators(&self) -> &[HermitianOperator] {
        &self.operators
    }

    pub fn get(&self, index: usize) -> &HermitianOperator {
        &self.operators[index]
    }
}

fn check_state(rho: &DensityMatrix, set: &ObservableSet) -> Result<()> {
    if rho.dim() != set.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: set.dim(),
        });
    }
    Ok(())
}

/// Σ_i I_ρ(A_i), the left-hand side every lower bound is compared against.
pub fn sum_skew(rho: &DensityMatrix, set: &ObservableSet) -> Result<f64> {
    check_state(rho, set)?;
    set.operators()
        .iter()
        .map(|a| skew_information(rho, a))
        .sum()
}

/// Multi-observable lower bound
/// (1/n)·I_ρ(ΣA_i) + (1/n²)·(Σ_{i<j} √I_ρ(A_i − A_j))², n ≥ 2.
///
/// The 1/n² constant makes this a genuine lower bound on Σ_i I_ρ(A_i) only for
/// n ≤ 3: the Cauchy-Schwarz step behind it runs over the C(n,2) pairwise terms,
/// so for n ≥ 4 the expression can exceed the sum (replace 1/n² with 2/(n²(n−1))
/// for a bound valid at every n). Reports evaluated at n ≥ 4 may therefore carry
/// an unsatisfied flag.
pub fn theorem1_bound(rho: &DensityMatrix, set: &ObservableSet) -> Result<f64> {
    let n = set.len();
    if n < 2 {
        return Err(Error::BoundArity {
            bound: "multi-observable",
            min: 2,
            got: n,
        });
    }
    check_state(rho, set)?;
    let total = HermitianOperator::linear_combination(
        &set.operators().iter().map(|a| (1.0, a)).collect::<Vec<_>>(),
    )?;
    let head = skew_information(rho, &total)? / n as f64;
    let mut root_sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let diff = set.get(i) - set.get(j);
            root_sum += sqrt_clamped(skew_information(rho, &diff)?);
        }
    }
    Ok(head + root_sum * root_sum / (n * n) as f64)
}

/// Two-observable corollary: returns (tight, loose) with
/// tight = ½I(A+B) + ¼I(A−B) and loose = ½I(A+B).
///
/// On pure states the loose member is the Maccone-Pati variance bound; the tight
/// member always dominates it.
pub fn corollary_bound(
    rho: &DensityMatrix,
    a: &HermitianOperator,
    b: &HermitianOperator,
) -> Result<(f64, f64)> {
    let sum = skew_information(rho, &(a + b))?;
    let diff = skew_information(rho, &(a - b))?;
    let loose = 0.5 * sum;
    Ok((loose + 0.25 * diff, loose))
}

/// Chen-style bound
/// (1/(n−2))·[Σ_{i<j} I(A_i+A_j) − (1/(n−1)²)(Σ_{i<j} √I(A_i+A_j))²], n ≥ 3.
pub fn chen_bound(rho: &DensityMatrix, set: &ObservableSet) -> Result<f64> {
    let n = set.len();
    if n < 3 {
        return Err(Error::BoundArity {
            bound: "chen",
            min: 3,
            got: n,
        });
    }
    check_state(rho, set)?;
    let mut pair_sum = 0.0;
    let mut root_sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let value = skew_information(rho, &(set.get(i) + set.get(j)))?;
            pair_sum += value;
            root_sum += sqrt_clamped(value);
        }
    }
    let m = (n - 1) as f64;
    Ok((pair_sum - root_sum * root_sum / (m * m)) / (n - 2) as f64)
}

/// Exact identity I(A) + I(B) = ½(I(A+B) + I(A−B)); returns (lhs, rhs).
pub fn parallelogram_identity(
    rho: &DensityMatrix,
    a: &HermitianOperator,
    b: &HermitianOperator,
) -> Result<(f64, f64)> {
    let lhs = skew_information(rho, a)? + skew_information(rho, b)?;
    let rhs = 0.5 * (skew_information(rho, &(a + b))? + skew_information(rho, &(a - b))?);
    Ok((lhs, rhs))
}

fn pairwise_bound(rho: &DensityMatrix, set: &ObservableSet, sign: f64) -> Result<f64> {
    let n = set.len();
    if n < 2 {
        return Err(Error::BoundArity {
            bound: "pairwise",
            min: 2,
            got: n,
        });
    }
    check_state(rho, set)?;
    let mut acc = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let combined =
                HermitianOperator::linear_combination(&[(1.0, set.get(i)), (sign, set.get(j))])?;
            acc += skew_information(rho, &combined)?;
        }
    }
    Ok(acc / (2.0 * (n - 1) as f64))
}

/// (1/(2(n−1)))·Σ_{i<j} I(A_i + A_j), n ≥ 2.
pub fn pairwise_sum_bound(rho: &DensityMatrix, set: &ObservableSet) -> Result<f64> {
    pairwise_bound(rho, set, 1.0)
}

/// (1/(2(n−1)))·Σ_{i<j} I(A_i − A_j), n ≥ 2.
pub fn pairwise_diff_bound(rho: &DensityMatrix, set: &ObservableSet) -> Result<f64> {
    pairwise_bound(rho, set, -1.0)
}

/// The weighted sandwich for one weight λ ∈ [½, 1):
/// lower ≤ (1/λ)I(A) + (1/(1−λ))I(B) ≤ upper, all three coinciding at λ = ½.
#[derive(Debug, Clone, Copy)]
pub struct WeightedRelation {
    pub lambda: f64,
    /// I(A−B) + I(((λ−1)/λ)A − B)
    pub lower: f64,
    /// (1/λ)I(A) + (1/(1−λ))I(B), the weighted sum being sandwiched.
    pub middle: f64,
    /// I(A−B) + I(A − (λ/(λ−1))B)
    pub upper: f64,
    /// lower − tol ≤ middle ≤ upper + tol with tol = [`SATISFACTION_TOL`].
    pub satisfied: bool,
}

/// Evaluates the weighted relation; λ must lie in [½, 1).
pub fn weighted_relation(
    rho: &DensityMatrix,
    a: &HermitianOperator,
    b: &HermitianOperator,
    lambda: f64,
) -> Result<WeightedRelation> {
    if !(0.5..1.0).contains(&lambda) {
        return Err(Error::InvalidWeight { lambda });
    }
    let diff = skew_information(rho, &(a - b))?;
    let lower_mix =
        HermitianOperator::linear_combination(&[((lambda - 1.0) / lambda, a), (-1.0, b)])?;
    let upper_mix =
        HermitianOperator::linear_combination(&[(1.0, a), (-lambda / (lambda - 1.0), b)])?;
    let lower = diff + skew_information(rho, &lower_mix)?;
    let upper = diff + skew_information(rho, &upper_mix)?;
    let middle = skew_information(rho, a)? / lambda + skew_information(rho, b)? / (1.0 - lambda);
    let satisfied = lower <= middle + SATISFACTION_TOL && middle <= upper + SATISFACTION_TOL;
    Ok(WeightedRelation {
        lambda,
        lower,
        middle,
        upper,
        satisfied,
    })
}

/// Σ_i I_ρ(A_i) next to every applicable lower bound, with satisfaction flags.
///
/// `bounds` maps bound names (`theorem1`, `chen`, `pairwise_sum`, `pairwise_diff`)
/// to their values; each carries a flag in `satisfied` computed as
/// sum_skew ≥ bound − [`SATISFACTION_TOL`]. Weighted relations sandwich the weighted
/// sum rather than sum_skew, so they are reported structurally in `weighted` with
/// their own ordering flags.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub sum_skew: f64,
    pub bounds: BTreeMap<String, f64>,
    pub satisfied: BTreeMap<String, bool>,
    pub weighted: Vec<WeightedRelation>,
}

impl BoundReport {
    /// True when every listed bound and weighted relation holds within tolerance.
    pub fn all_satisfied(&self) -> bool {
        self.satisfied.values().all(|&ok| ok) && self.weighted.iter().all(|w| w.satisfied)
    }
}

/// Evaluates every applicable bound: the multi-observable and pairwise bounds for
/// n ≥ 2, the Chen bound when n ≥ 3, and the weighted relations (one per λ in
/// `lambdas`) when n = 2 exactly.
pub fn evaluate_all(
    rho: &DensityMatrix,
    set: &ObservableSet,
    lambdas: &[f64],
) -> Result<BoundReport> {
    let n = set.len();
    let total = sum_skew(rho, set)?;
    let mut bounds = BTreeMap::new();
    bounds.insert("theorem1".to_string(), theorem1_bound(rho, set)?);
    if n >= 3 {
        bounds.insert("chen".to_string(), chen_bound(rho, set)?);
    }
    bounds.insert("pairwise_sum".to_string(), pairwise_sum_bound(rho, set)?);
    bounds.insert("pairwise_diff".to_string(), pairwise_diff_bound(rho, set)?);
    let satisfied = bounds
        .iter()
        .map(|(name, value)| (name.clone(), total >= value - SATISFACTION_TOL))
        .collect();
    let mut weighted = Vec::new();
    if n == 2 {
        for &lambda in lambdas {
            weighted.push(weighted_relation(rho, set.get(0), set.get(1), lambda)?);
        }
    }
    Ok(BoundReport {
        sum_skew: total,
        bounds,
        satisfied,
        weighted,
    })
}
