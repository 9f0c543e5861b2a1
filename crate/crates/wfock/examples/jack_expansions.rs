//! Jack functions, dual norms and evaluation norms at symbolic t.
//!
//! Run with: cargo run --example jack_expansions

use wfock::partition::{partitions_of, Partition};
use wfock::symfunc::{dual_norm_b, integral_norm_c, jack, jack_norm};

fn main() {
    for n in 0..=4u64 {
        for lam in partitions_of(n) {
            println!("J{lam} = {}", jack(&lam));
        }
    }
    println!();

    let lam = Partition::new(vec![2, 1]);
    println!("b{lam}     = {}", dual_norm_b(&lam));
    println!("<J,J>{lam} = {}", jack_norm(&lam));
    println!("c{lam}(2)  = {}", integral_norm_c(&lam, 2));

    // duality: <J, J> * b = 1
    let product = &jack_norm(&lam) * &dual_norm_b(&lam);
    println!("norm * b   = {product}");
}
