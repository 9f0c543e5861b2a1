//! Certify a singular vector: positive-mode annihilation, zero-mode
//! eigenvalues, and a JSON report.
//!
//! Run with: cargo run --example verify_annihilation

use wfock::screening::{singular_vector, ScreeningSpec};
use wfock::verify::check_singular;

fn main() {
    let spec = ScreeningSpec::plus(3, vec![2, 2], vec![-1, -1]).unwrap();
    println!("{spec}  grade {}", spec.grade());
    let v = singular_vector(&spec).unwrap();
    println!("{} terms", v.num_terms());
    let report = check_singular(&v, &spec).unwrap();
    println!("{}", report.to_json());
    assert!(report.passed);
}
