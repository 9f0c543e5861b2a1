//! The grade-2 singular vector at the 3-state Potts central charge
//! (t = 4/5): exact symbolic computation, then specialization.
//!
//! Run with: cargo run --example singular_vector_potts

use num_rational::BigRational;
use wfock::screening::{singular_vector, ScreeningSpec, TParam};

fn main() {
    let spec = ScreeningSpec::plus(3, vec![1, 1], vec![-1, -1]).unwrap();
    let t0 = BigRational::new(4.into(), 5.into());
    println!("{}", spec.to_line(&TParam::Rational(t0.clone())));
    println!("grade = {}", spec.grade());
    println!("source weight = {}", spec.source_weight());
    println!("target weight = {}", spec.target_weight());
    println!();

    let v = singular_vector(&spec).unwrap();
    println!("symbolic coefficients:");
    println!("{v}");
    println!();

    println!("specialized at t = 4/5 (exact quadratic values):");
    for (mono, c) in v.terms() {
        let value = c.eval_quad(&t0, 1).unwrap();
        println!("{mono} : {value}  ~ {}", value.to_decimal_string(64));
    }
}
