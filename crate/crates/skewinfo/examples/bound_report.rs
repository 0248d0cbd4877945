//! Evaluates every applicable lower bound for the Pauli triple on a Bloch-vector
//! qubit state and prints the comparison report.

use skewinfo::bounds::evaluate_all;
use skewinfo::catalog::{bloch_state, pauli, BlochVector};

fn main() -> Result<(), skewinfo::Error> {
    let r = BlochVector::new([3f64.sqrt() / 2.0, 0.0, 0.0])?;
    let rho = bloch_state(&r)?;
    let report = evaluate_all(&rho, &pauli(), &[])?;
    assert!(report.all_satisfied());
    println!("sum of skew informations = {:.12}", report.sum_skew);
    for (name, value) in &report.bounds {
        println!(
            "{name:>13} = {value:.12}  (satisfied: {})",
            report.satisfied[name]
        );
    }
    Ok(())
}
