//! A grade-3 singular vector with fully symbolic Jack parameter: every
//! coefficient is an exact rational function of t times a power of the
//! screening constant.
//!
//! Run with: cargo run --example singular_vector_symbolic

use wfock::heisenberg::virasoro_mode;
use wfock::screening::{singular_vector, ScreeningSpec};

fn main() {
    let spec = ScreeningSpec::plus(3, vec![2, 1], vec![-1, -1]).unwrap();
    println!("{spec}  (grade {})", spec.grade());
    let v = singular_vector(&spec).unwrap();
    println!("{v}");
    println!();
    for n in 1..=3 {
        println!("L_{n} v = {}", virasoro_mode(n, &v));
    }
}
