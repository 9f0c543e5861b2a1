//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its runtime.  Run with `cargo test --test acceptance -- --nocapture`
//! to see the table.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::time::Instant;
use wfock::heisenberg::{
    miura_mode, virasoro_mode, w3_mode, CreationMonomial, FockVector, Weight,
};
use wfock::partition::{partitions_of, partitions_up_to, Partition};
use wfock::scalar::{Poly, Quad, RatFun, Scalar};
use wfock::screening::{singular_vector, vacuum_module_specs, ScreeningSpec, TParam};
use wfock::symfunc::{
    cauchy_truncated, dual_norm_b, inner_product, integral_norm_c, jack, jack_norm, schur_pbasis,
    skew_jack, SymFunc,
};
use wfock::verify::{
    brute_force_kernel, brute_force_kernel_at, check_mode_algebra, check_singular,
    check_singular_with, default_generators,
};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn sc(n: i64, d: i64) -> Scalar {
    Scalar::from_rational(q(n, d))
}

fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn report(criterion: u32, start: Instant, what: &str) {
    println!(
        "criterion {criterion:2} PASS ({:7.2}s): {what}",
        start.elapsed().as_secs_f64()
    );
}

#[test]
fn criterion_01_example_one_bit_exact() {
    let start = Instant::now();
    let spec = ScreeningSpec::plus(3, vec![1, 1], vec![-1, -1]).unwrap();
    let v = singular_vector(&spec).unwrap();
    assert_eq!(v.num_terms(), 3);
    assert_eq!(v.homogeneous_grade(), Some(2));

    let id = CreationMonomial::identity(2);
    let t0 = q(4, 5);
    // a^1_{-1} a^2_{-1} coefficient 1
    let c = v
        .coefficient(&id.with_created(1, 1).with_created(2, 1))
        .eval_quad(&t0, 1)
        .unwrap();
    assert_eq!(c, Quad::one());
    // (a^1_{-1})^2 coefficient 5/8
    let c = v
        .coefficient(&id.with_created(1, 1).with_created(1, 1))
        .eval_quad(&t0, 1)
        .unwrap();
    assert_eq!(c, Quad::rational(q(5, 8)));
    // a^1_{-2} coefficient sqrt(5)/4 = (2 alpha_+)/4 at t = 4/5; exact both
    // symbolically and after specialization
    let sym = v.coefficient(&id.with_created(1, 2));
    let expect_sym = &(&Scalar::from_int(2) * &Scalar::alpha_plus()) * &sc(1, 4);
    assert_eq!(sym, expect_sym);
    let spec5 = sym.eval_quad(&t0, 1).unwrap();
    assert_eq!(spec5, Quad::sqrt_of_rational(q(1, 4), &q(5, 1)));

    assert!(start.elapsed().as_secs_f64() < 1.0, "runtime budget 1 s");
    report(1, start, "grade-2 singular vector bit-exact at t = 4/5");
}

#[test]
fn criterion_02_example_one_weights() {
    let start = Instant::now();
    let spec = ScreeningSpec::plus(3, vec![1, 1], vec![-1, -1]).unwrap();
    let eta = spec.source_weight();
    let theta = spec.target_weight();
    let t0 = q(4, 5);

    let h_eta = eta.conformal_weight().eval_quad(&t0, 1).unwrap();
    assert_eq!(h_eta, Quad::rational(q(13, 6)));
    let h_theta = theta.conformal_weight().eval_quad(&t0, 1).unwrap();
    assert_eq!(h_theta, Quad::rational(q(1, 6)));

    // Weight-3 eigenvalue factors.  Exact evaluation gives all three
    // factors of X negative for both weights, so the ratio is +187/7; the
    // tabulated eigenvalues are matched exactly in branch-free squared
    // form, 3 beta X^2 = w^2 (and the magnitudes (187/9)/(7/9) agree).
    let x_eta = eta.w3_weight_unnormalized().unwrap();
    let x_theta = theta.w3_weight_unnormalized().unwrap();
    let ratio = x_eta.div(&x_theta).unwrap().eval_quad(&t0, 1).unwrap();
    assert_eq!(ratio, Quad::rational(q(187, 7)));

    let a0 = Scalar::alpha_zero();
    let beta = Scalar::from_int(2)
        .div(&(&Scalar::from_int(4) - &(&Scalar::from_int(15) * &(&a0 * &a0))))
        .unwrap();
    let three_beta = &Scalar::from_int(3) * &beta;
    let w_eta_sq = (&three_beta * &(&x_eta * &x_eta)).eval_quad(&t0, 1).unwrap();
    assert_eq!(w_eta_sq, Quad::rational(q(187 * 187, 81 * 390)));
    let w_theta_sq = (&three_beta * &(&x_theta * &x_theta))
        .eval_quad(&t0, 1)
        .unwrap();
    assert_eq!(w_theta_sq, Quad::rational(q(49, 81 * 390)));

    report(2, start, "h = 13/6, 1/6; |X ratio| = 187/7 with exact squared eigenvalues");
}

#[test]
fn criterion_03_example_two_symbolic() {
    let start = Instant::now();
    let spec = ScreeningSpec::plus(3, vec![2, 1], vec![-1, -1]).unwrap();
    let v = singular_vector(&spec).unwrap();
    assert_eq!(v.homogeneous_grade(), Some(3));
    assert_eq!(v.num_terms(), 5);

    let id = CreationMonomial::identity(2);
    let inv_alpha = &Scalar::t() * &Scalar::alpha(); // 1/alpha_+
    let t = Scalar::t();
    let one = Scalar::one();
    let tp1 = &t + &one;
    let tt2p1 = &(&Scalar::from_int(2) * &t) + &one;
    let denom = &tp1 * &tt2p1;

    let expected: Vec<(CreationMonomial, Scalar)> = vec![
        (
            id.with_created(1, 1).with_created(1, 1).with_created(1, 1),
            (&Scalar::from_int(2) * &inv_alpha).div(&denom).unwrap(),
        ),
        (
            id.with_created(1, 1).with_created(1, 1).with_created(2, 1),
            inv_alpha.div(&tp1).unwrap(),
        ),
        (
            id.with_created(1, 2).with_created(1, 1),
            (&Scalar::from_int(2) * &(&t - &one)).div(&denom).unwrap(),
        ),
        (
            id.with_created(1, 2).with_created(2, 1),
            (-&one).div(&tp1).unwrap(),
        ),
        // the formula forces the factor 2 here; halving it breaks L_1
        // annihilation
        (
            id.with_created(1, 3),
            (&Scalar::from_int(-2) * &inv_alpha).div(&denom).unwrap(),
        ),
    ];
    for (mono, expect) in expected {
        assert_eq!(v.coefficient(&mono), expect, "coefficient of {mono}");
    }

    assert!(start.elapsed().as_secs_f64() < 5.0, "runtime budget 5 s");
    report(3, start, "grade-3 singular vector symbolic in t, five exact coefficients");
}

#[test]
fn criterion_04_jack_goldens() {
    let start = Instant::now();
    // J_[1,1] and J_[2,1] expansions
    let j11 = jack(&pt(&[1, 1]));
    assert_eq!(j11.coefficient(&pt(&[1, 1])), sc(1, 2));
    assert_eq!(j11.coefficient(&pt(&[2])), sc(-1, 2));
    assert_eq!(j11.num_terms(), 2);

    let j21 = jack(&pt(&[2, 1]));
    let tp2 = Poly::from_coeffs(vec![q(2, 1), q(1, 1)]);
    assert_eq!(
        j21.coefficient(&pt(&[1, 1, 1])),
        Scalar::from_ratfun(RatFun::new(Poly::one(), tp2.clone()))
    );
    assert_eq!(
        j21.coefficient(&pt(&[2, 1])),
        Scalar::from_ratfun(RatFun::new(
            Poly::from_coeffs(vec![q(-1, 1), q(1, 1)]),
            tp2.clone()
        ))
    );
    assert_eq!(
        j21.coefficient(&pt(&[3])),
        Scalar::from_ratfun(RatFun::new(Poly::from_coeffs(vec![q(0, 1), q(-1, 1)]), tp2))
    );

    // c_[1,1](2) = 2/(t(t+1))
    let c11 = integral_norm_c(&pt(&[1, 1]), 2);
    let expect = Scalar::from_int(2)
        .div(&(&Scalar::t() * &(&Scalar::t() + &Scalar::one())))
        .unwrap();
    assert_eq!(c11, expect);

    // c_[2,1](2) = (2/(t+1)) (1/t) ((t+2)/(2t+1))
    let c21 = integral_norm_c(&pt(&[2, 1]), 2);
    let t = Scalar::t();
    let f1 = Scalar::from_int(2).div(&(&t + &Scalar::one())).unwrap();
    let f2 = Scalar::one().div(&t).unwrap();
    let f3 = (&t + &Scalar::from_int(2))
        .div(&(&(&Scalar::from_int(2) * &t) + &Scalar::one()))
        .unwrap();
    let expect = &(&f1 * &f2) * &f3;
    assert_eq!(c21, expect);

    // values at t = 4/5: c_[1](1) = 5/4, c_[2](1) = (5/4)(9/8)
    let t0 = q(4, 5);
    assert_eq!(
        integral_norm_c(&pt(&[1]), 1).eval_quad(&t0, 1).unwrap(),
        Quad::rational(q(5, 4))
    );
    assert_eq!(
        integral_norm_c(&pt(&[2]), 1).eval_quad(&t0, 1).unwrap(),
        Quad::rational(q(5, 4) * q(9, 8))
    );

    report(4, start, "Jack and evaluation-norm goldens exact");
}

#[test]
fn criterion_05_annihilation_suite() {
    let start = Instant::now();
    let mut checked = 0;
    for r1 in 0..=2i64 {
        for r2 in 0..=2i64 {
            for s1 in 0..=2i64 {
                for s2 in 0..=2i64 {
                    let spec = ScreeningSpec::plus(3, vec![r1, r2], vec![-s1, -s2]).unwrap();
                    assert!(spec.grade() <= 8);
                    let v = singular_vector(&spec).unwrap();
                    let report = check_singular(&v, &spec).unwrap();
                    assert!(
                        report.passed,
                        "annihilation/eigenvalue suite failed for {spec}: {}",
                        report.to_json()
                    );
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 81);
    assert!(
        start.elapsed().as_secs_f64() < 600.0,
        "runtime budget 10 min"
    );
    report(
        5,
        start,
        "all 81 specs with r, -s in {0,1,2}^2 annihilated, eigenvalues match (symbolic t)",
    );
}

#[test]
fn criterion_06_oracle_equivalence() {
    let start = Instant::now();

    // Examples at symbolic t: kernel membership with certificates.
    for (r, s) in [(vec![1, 1], vec![-1, -1]), (vec![2, 1], vec![-1, -1])] {
        let spec = ScreeningSpec::plus(3, r, s).unwrap();
        let v = singular_vector(&spec).unwrap();
        let kernel =
            brute_force_kernel(&spec.target_weight(), spec.grade(), &default_generators(3))
                .unwrap();
        let coeffs = kernel.express(&v).expect("formula output must lie in the kernel");
        // re-verify the certificate by recombination
        let mut rebuilt = FockVector::zero(spec.target_weight());
        for (c, b) in coeffs.iter().zip(&kernel.basis) {
            rebuilt = rebuilt.add(&b.scale(c));
        }
        assert_eq!(rebuilt, v, "certificate recombination for {spec}");
    }

    // Example 2 at three random rational t: one-dimensional kernels
    // matching the specialized formula.
    let spec2 = ScreeningSpec::plus(3, vec![2, 1], vec![-1, -1]).unwrap();
    let v2 = singular_vector(&spec2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x57f0c8);
    let mut random_t = || -> BigRational {
        loop {
            let num = rng.gen_range(1..40i64);
            let den = rng.gen_range(1..40i64);
            let t0 = q(num, den);
            if num_integer::gcd(num, den) == 1 && t0 != q(1, 1) {
                return t0;
            }
        }
    };
    for _ in 0..3 {
        let t0 = random_t();
        let kernel = brute_force_kernel_at(
            &spec2.target_weight(),
            spec2.grade(),
            &default_generators(3),
            &t0,
            1,
        )
        .unwrap();
        assert_eq!(kernel.basis.len(), 1, "kernel dimension at t = {t0}");
        let coeffs = kernel.express(&v2).unwrap();
        assert!(coeffs.is_some(), "specialized formula output in kernel at t = {t0}");
    }

    // Three random in-range specs at random rational t.
    let mut rng2 = ChaCha8Rng::seed_from_u64(0xace5);
    let mut picked = 0;
    while picked < 3 {
        let r = vec![rng2.gen_range(0..=2i64), rng2.gen_range(0..=2i64)];
        let s = vec![-rng2.gen_range(0..=2i64), -rng2.gen_range(0..=2i64)];
        let spec = ScreeningSpec::plus(3, r, s).unwrap();
        let d = spec.grade();
        if d == 0 || d > 6 {
            continue;
        }
        picked += 1;
        let num = rng2.gen_range(1..20i64);
        let den = rng2.gen_range(1..20i64);
        let t0 = q(num, den);
        let v = singular_vector(&spec).unwrap();
        let kernel =
            brute_force_kernel_at(&spec.target_weight(), d, &default_generators(3), &t0, 1)
                .unwrap();
        let coeffs = kernel.express(&v).unwrap();
        let Some(coeffs) = coeffs else {
            panic!("formula output not in kernel for {spec} at t = {t0}");
        };
        // recombine in the quadratic field as the certificate check
        let coords: Vec<Quad> = kernel
            .monomials
            .iter()
            .map(|m| v.coefficient(m).eval_quad(&t0, 1).unwrap())
            .collect();
        for (i, target) in coords.iter().enumerate() {
            let mut acc = Quad::zero();
            for (c, b) in coeffs.iter().zip(&kernel.basis) {
                acc = &acc + &(c * &b[i]);
            }
            assert_eq!(&acc, target, "certificate column {i} for {spec} at t = {t0}");
        }
    }

    report(6, start, "kernel oracle contains formula outputs, certificates verified");
}

#[test]
fn criterion_07_wn_spot_check() {
    let start = Instant::now();
    let spec = ScreeningSpec::plus(4, vec![1, 1, 1], vec![-1, -1, -1]).unwrap();
    let v = singular_vector(&spec).unwrap();
    assert!(!v.is_zero());
    assert_eq!(v.homogeneous_grade(), Some(3));
    for n in 1..=3 {
        assert!(virasoro_mode(n, &v).is_zero(), "L_{n} residual");
    }
    for k in 3..=4 {
        for n in 1..=2 {
            assert!(
                miura_mode(k, n, &v).unwrap().is_zero(),
                "U^{k}_{n} residual"
            );
        }
    }
    assert!(
        start.elapsed().as_secs_f64() < 120.0,
        "runtime budget 2 min"
    );
    report(7, start, "rank-3 spot check: grade-3 vector killed by L and Miura modes");
}

/// Expand a symmetric function over a split alphabet x | y:
/// `p_k -> p_k(x) + p_k(y)`, collected as pairs of partitions.
fn split_alphabet(f: &SymFunc) -> BTreeMap<(Partition, Partition), Scalar> {
    let mut out: BTreeMap<(Partition, Partition), Scalar> = BTreeMap::new();
    for (lam, c) in f.terms() {
        let parts = lam.parts();
        let n = parts.len();
        for mask in 0u32..(1 << n) {
            let mut xs = Vec::new();
            let mut ys = Vec::new();
            for (i, &p) in parts.iter().enumerate() {
                if mask & (1 << i) == 0 {
                    xs.push(p);
                } else {
                    ys.push(p);
                }
            }
            let key = (Partition::new(xs), Partition::new(ys));
            let entry = out.entry(key).or_insert_with(Scalar::zero);
            *entry = &*entry + c;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[test]
fn criterion_08_property_suites() {
    let start = Instant::now();

    // Triangularity and orthogonality for |lambda| <= 7.
    for n in 0..=7u64 {
        let parts = partitions_of(n);
        for lam in &parts {
            let j = jack(lam);
            let mons = j.to_monomials(n.max(1) as usize);
            assert!(
                mons.get(lam).map(Scalar::is_one).unwrap_or(lam.weight() == 0),
                "leading coefficient of J{lam}"
            );
            for mu in mons.keys() {
                assert!(
                    lam.dominates(mu).unwrap(),
                    "J{lam} has support on {mu} not below it"
                );
            }
        }
        for (i, lam) in parts.iter().enumerate() {
            for mu in parts.iter().skip(i + 1) {
                assert!(
                    inner_product(&jack(lam), &jack(mu)).is_zero(),
                    "<J{lam}, J{mu}> != 0"
                );
            }
        }
    }

    // Duality with b_lambda for |lambda| <= 6 (cross terms vanish by
    // orthogonality; diagonal equals 1).
    for n in 0..=6u64 {
        for lam in partitions_of(n) {
            assert!(
                (&jack_norm(&lam) * &dual_norm_b(&lam)).is_one(),
                "<J, bJ> != 1 for {lam}"
            );
        }
    }

    // Truncated Cauchy identity through degree 5 in 3 + 3 variables.
    let (lhs, rhs) = cauchy_truncated(5, 3, 3);
    assert_eq!(lhs, rhs, "Cauchy kernel tables differ");

    // Rectangular Jack: pi_n(J_[m^n]) is the bare monomial, for m, n <= 3.
    for m in 1..=3u32 {
        for n in 1..=3usize {
            let rect = Partition::rectangle(m, n);
            let mons = jack(&rect).to_monomials(n);
            assert_eq!(mons.len(), 1, "J{rect} projected to {n} variables");
            assert!(mons[&rect].is_one());
        }
    }

    // Rectangular Pieri: pi_n(J_[m^n] J_lambda) = pi_n(J_{lambda+[m^n]})
    // for m, n <= 3 and |lambda| <= 4 with len(lambda) <= n.
    for m in 1..=3u32 {
        for n in 1..=3usize {
            let rect = Partition::rectangle(m, n);
            let j_rect = jack(&rect);
            for w in 0..=4u64 {
                for lam in partitions_of(w) {
                    if lam.len() > n {
                        continue;
                    }
                    let product = j_rect.mul(&jack(&lam));
                    let shifted = lam.add_rectangle(m, n).unwrap();
                    assert_eq!(
                        product.to_monomials(n),
                        jack(&shifted).to_monomials(n),
                        "Pieri failed for {lam} + [{m}^{n}]"
                    );
                }
            }
        }
    }

    // Skew/union consistency through degree 6:
    // J_lambda(x u y) = sum_nu J_nu(x) J_{lambda/nu}(y).
    for lam in partitions_up_to(6) {
        let lhs = split_alphabet(&jack(&lam));
        let mut rhs: BTreeMap<(Partition, Partition), Scalar> = BTreeMap::new();
        for w in 0..=lam.weight() {
            for nu in partitions_of(w) {
                if !lam.contains(&nu) {
                    continue;
                }
                let skew = skew_jack(&lam, &nu);
                if skew.is_zero() {
                    continue;
                }
                for (kappa, ck) in jack(&nu).terms() {
                    for (mu, cm) in skew.terms() {
                        let key = (kappa.clone(), mu.clone());
                        let add = ck * cm;
                        let entry = rhs.entry(key).or_insert_with(Scalar::zero);
                        *entry = &*entry + &add;
                    }
                }
            }
        }
        rhs.retain(|_, v| !v.is_zero());
        assert_eq!(lhs, rhs, "union decomposition failed for {lam}");
    }

    // t = 1 cross-check against the Jacobi-Trudi determinant route.
    for lam in partitions_up_to(5) {
        let schur = schur_pbasis(&lam);
        let at_one = jack(&lam).eval_t(&q(1, 1)).unwrap();
        let schur_map = schur.eval_t(&q(1, 1)).unwrap();
        assert_eq!(at_one, schur_map, "J{lam} at t = 1 vs Schur");
    }

    report(8, start, "triangularity, orthogonality, duality, Cauchy, rectangles, union, Schur");
}

#[test]
fn criterion_09_example3_structure() {
    let start = Instant::now();
    // First vacuum-family spec at t = 3/2: grade 6 = 3(u-1)(v-1).
    let spec = vacuum_module_specs(3, 2).unwrap().next().unwrap();
    assert_eq!(spec.grade(), 6);
    assert_eq!(spec.grade(), 3 * (3 - 1) * (2 - 1));
    let theta = spec.target_weight();
    for label in theta.labels() {
        assert!(label.eval_quad(&q(3, 2), 1).unwrap().is_zero());
    }
    let v = singular_vector(&spec).unwrap();
    let verdict = check_singular(&v, &spec).unwrap();
    assert!(verdict.passed, "{}", verdict.to_json());

    // Shifted Weyl invariance of (h, X) for all six group elements on
    // randomized weights.
    let words: [&[usize]; 6] = [&[], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]];
    let mut rng = ChaCha8Rng::seed_from_u64(0x933);
    for _ in 0..4 {
        let labels: Vec<Scalar> = (0..2)
            .map(|_| {
                let base = sc(rng.gen_range(-6..7), rng.gen_range(1..5));
                if rng.gen_bool(0.5) {
                    &base + &Scalar::alpha()
                } else {
                    &base - &Scalar::t()
                }
            })
            .collect();
        let zeta = Weight::new(labels);
        let h = zeta.conformal_weight();
        let x = zeta.w3_weight_unnormalized().unwrap();
        for word in words {
            let moved = zeta.shifted_weyl_action(word);
            assert_eq!(moved.conformal_weight(), h);
            assert_eq!(moved.w3_weight_unnormalized().unwrap(), x);
        }
    }

    report(9, start, "vacuum-family grade 6 at t = 3/2 verified; shifted Weyl invariance");
}

#[test]
fn criterion_10_mode_algebra() {
    let start = Instant::now();
    let algebra = check_mode_algebra(3).unwrap();
    assert!(algebra.passed, "{}", algebra.to_json());
    // spot-check the central charge on a highest-weight vector:
    // [L_2, L_{-2}] - 4 L_0 = c/2 with c = 2 - 24 alpha_0^2
    let zeta = Weight::new(vec![Scalar::from_int(3), Scalar::alpha()]);
    let hw = FockVector::highest_weight(zeta);
    let lhs = virasoro_mode(2, &virasoro_mode(-2, &hw))
        .sub(&virasoro_mode(-2, &virasoro_mode(2, &hw)))
        .sub(&virasoro_mode(0, &hw).scale(&Scalar::from_int(4)));
    let a0 = Scalar::alpha_zero();
    let c = &Scalar::from_int(2) - &(&Scalar::from_int(24) * &(&a0 * &a0));
    assert_eq!(lhs, hw.scale(&(&c * &sc(1, 2))));
    // and the mixed relation [L_1, W_1] = W_2 on a grade-2 vector
    let v = hw.create(1, 2);
    let mixed = virasoro_mode(1, &w3_mode(1, &v).unwrap())
        .sub(&w3_mode(1, &virasoro_mode(1, &v)).unwrap());
    assert_eq!(mixed, w3_mode(2, &v).unwrap());

    report(10, start, "Virasoro + mixed mode algebra on graded vectors to grade 3");
}
