//! Mode actions of the energy-momentum tensor, the weight-3 W field and
//! the quantum Miura generators on Fock vectors.
//!
//! All fields here are normal-ordered polynomials in the Heisenberg
//! currents and their derivatives.  For free fields the nested
//! normal-ordered product expands, mode by mode, into fully reordered
//! monomials (creation operators left), because every reordering involved
//! is between commuting modes; each monomial is applied by
//! [`apply_normal_ordered`].  On a graded vector all mode sums truncate.
//!
//! Conventions:
//!
//! - `virasoro_mode`: `L_n = sum_i [ (1/2) sum_m :a^i_m adual^i_{n-m}:
//!   - alpha_0 (n+1) adual^i_n ]` with `adual^i = sum_j (A^{-1})_{ij} a^j`
//! - `w3_mode`: the mode of the bracketed weight-3 field with the overall
//!   `sqrt(beta)/(18 sqrt(3))` prefactor dropped, so that the zero mode
//!   acts on `|zeta>` by `54 X_zeta` (see
//!   [`Weight::w3_weight_unnormalized`])
//! - `miura_mode`: `U^k_n` extracted from the quantum Miura transform
//!   `R_N = -sum_k U_k (alpha_0 d)^{N-k} = :(alpha_0 d - eps^1) ...
//!   (alpha_0 d - eps^N):`, expanded recursively right to left; `U^2`
//!   agrees with the Virasoro modes.

use super::fock::{apply_normal_ordered, FockVector, Mode};
use super::weight::Weight;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Apply the Virasoro mode `L_n` (any rank).
pub fn virasoro_mode(n: i64, v: &FockVector) -> FockVector {
    let rank = v.rank();
    let mut out = FockVector::zero(v.highest_weight_label().clone());
    if v.is_zero() {
        return out;
    }
    let d = v.max_grade() as i64;
    let half = Scalar::from_rational(num_rational::BigRational::new(1.into(), 2.into()));

    // Quadratic part: (1/2) sum_i sum_m :(alpha_i)_m (omega_i)_{n-m}:.
    for m in (n - d)..=d {
        for i in 1..=rank {
            let factors = [
                Mode::new(Weight::simple_root(rank, i), m),
                Mode::new(Weight::fundamental(rank, i), n - m),
            ];
            apply_normal_ordered(&mut out, &factors, &half, v);
        }
    }

    // Linear part: -alpha_0 (n+1) sum_i (omega_i)_n = -alpha_0 (n+1) rho_n.
    let lin = &(-&Scalar::alpha_zero()) * &Scalar::from_int(n + 1);
    if !lin.is_zero() {
        let factors = [Mode::new(Weight::weyl_vector(rank), n)];
        apply_normal_ordered(&mut out, &factors, &lin, v);
    }
    out
}

/// Apply the unnormalised weight-3 mode for N = 3.
///
/// The field is `2:(a^2 - a^1)(a^1 + 2a^2)(2a^1 + a^2): + 9 alpha_0
/// (:da^2 (a^1 + 2a^2): - :da^1 (2a^1 + a^2):) + 9 alpha_0^2 (d^2 a^2 -
/// d^2 a^1)`, the bracket of the conventional W normalised by
/// `18 sqrt(3) / sqrt(beta)`.
pub fn w3_mode(n: i64, v: &FockVector) -> Result<FockVector> {
    let rank = v.rank();
    if rank != 2 {
        return Err(Error::RequiresRankTwo(rank + 1));
    }
    let mut out = FockVector::zero(v.highest_weight_label().clone());
    if v.is_zero() {
        return Ok(out);
    }
    let d = v.max_grade() as i64;

    let a1 = Weight::simple_root(2, 1);
    let a2 = Weight::simple_root(2, 2);
    // A = a^2 - a^1, B = a^1 + 2 a^2, C = 2 a^1 + a^2
    let fa = a2.sub(&a1);
    let fb = a1.add(&a2.scale(&Scalar::from_int(2)));
    let fc = a1.scale(&Scalar::from_int(2)).add(&a2);

    // Cubic: 2 sum_{k+l+m=n} :A_k B_l C_m:.
    let two = Scalar::from_int(2);
    let lo = n - 2 * d;
    for k in lo..=d {
        for l in lo..=d {
            let m = n - k - l;
            if m < lo || m > d {
                continue;
            }
            let factors = [
                Mode::new(fa.clone(), k),
                Mode::new(fb.clone(), l),
                Mode::new(fc.clone(), m),
            ];
            apply_normal_ordered(&mut out, &factors, &two, v);
        }
    }

    // Quadratic: 9 alpha_0 sum_{k+l=n} (-(k+1)) [ :a^2_k B_l: - :a^1_k C_l: ].
    let nine_a0 = &Scalar::from_int(9) * &Scalar::alpha_zero();
    for k in (n - d)..=d {
        let l = n - k;
        let deriv = Scalar::from_int(-(k + 1));
        if deriv.is_zero() {
            continue;
        }
        let scale = &nine_a0 * &deriv;
        apply_normal_ordered(
            &mut out,
            &[Mode::new(a2.clone(), k), Mode::new(fb.clone(), l)],
            &scale,
            v,
        );
        apply_normal_ordered(
            &mut out,
            &[Mode::new(a1.clone(), k), Mode::new(fc.clone(), l)],
            &(-&scale),
            v,
        );
    }

    // Linear: 9 alpha_0^2 (n+1)(n+2) (a^2_n - a^1_n).
    let a0 = Scalar::alpha_zero();
    let lin = &(&(&Scalar::from_int(9) * &(&a0 * &a0)) * &Scalar::from_int(n + 1))
        * &Scalar::from_int(n + 2);
    if !lin.is_zero() {
        apply_normal_ordered(&mut out, &[Mode::new(a2.sub(&a1), n)], &lin, v);
    }
    Ok(out)
}

/// One normal-ordered field monomial `:d^{c1} b^1 ... d^{cp} b^p:` with a
/// scalar prefactor; the building block of the Miura generators.
#[derive(Clone, Debug)]
struct FieldMonomial {
    coeff: Scalar,
    factors: Vec<(Weight, u32)>,
}

type FieldSum = Vec<FieldMonomial>;

/// d/dz acts as a derivation of the normal-ordered product.
fn derivative(sum: &FieldSum) -> FieldSum {
    let mut out = FieldSum::new();
    for mono in sum {
        for i in 0..mono.factors.len() {
            let mut factors = mono.factors.clone();
            factors[i].1 += 1;
            out.push(FieldMonomial {
                coeff: mono.coeff.clone(),
                factors,
            });
        }
    }
    out
}

/// Left-multiply by `-eps(z)` under nested normal ordering.
fn prepend_epsilon(eps: &Weight, sum: &FieldSum) -> FieldSum {
    sum.iter()
        .map(|mono| {
            let mut factors = Vec::with_capacity(mono.factors.len() + 1);
            factors.push((eps.clone(), 0));
            factors.extend(mono.factors.iter().cloned());
            FieldMonomial {
                coeff: -&mono.coeff,
                factors,
            }
        })
        .collect()
}

/// Expand the Miura product for sl(N): returns `G_d` with
/// `R_N = sum_d G_d (alpha_0 d)^d`, so `U_k = -G_{N-k}`.
fn miura_fields(big_n: usize) -> Arc<Vec<FieldSum>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<FieldSum>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&big_n) {
        return hit.clone();
    }
    let rank = big_n - 1;
    let a0 = Scalar::alpha_zero();
    // Build up one factor at a time with eps^1 innermost; this nesting is
    // the one under which U^2 reproduces the Virasoro modes.
    let mut g: Vec<FieldSum> = vec![vec![FieldMonomial {
        coeff: Scalar::one(),
        factors: Vec::new(),
    }]];
    for j in 1..=big_n {
        let eps = Weight::defining_rep_weight(rank, j);
        let mut next: Vec<FieldSum> = vec![FieldSum::new(); g.len() + 1];
        for (deg, sum) in g.iter().enumerate() {
            // (alpha_0 d) G (alpha_0 d)^deg = alpha_0 G' (alpha_0 d)^deg
            //                                + G (alpha_0 d)^{deg+1}
            next[deg + 1].extend(sum.iter().cloned());
            for mono in derivative(sum) {
                next[deg].push(FieldMonomial {
                    coeff: &mono.coeff * &a0,
                    factors: mono.factors,
                });
            }
            // (-eps) G (alpha_0 d)^deg
            next[deg].extend(prepend_epsilon(&eps, sum));
        }
        g = next;
    }
    let arc = Arc::new(g);
    cache.lock().unwrap().insert(big_n, arc.clone());
    arc
}

/// Apply the Miura generator mode `U^k_n` for sl(N), `2 <= k <= N`, where
/// N = rank + 1 of the underlying Fock module.
pub fn miura_mode(k: usize, n: i64, v: &FockVector) -> Result<FockVector> {
    let big_n = v.rank() + 1;
    if k < 2 || k > big_n {
        return Err(Error::MiuraIndexOutOfRange(k, big_n));
    }
    let fields = miura_fields(big_n);
    let sum = &fields[big_n - k];
    let mut out = FockVector::zero(v.highest_weight_label().clone());
    if v.is_zero() {
        return Ok(out);
    }
    let d = v.max_grade() as i64;
    for mono in sum {
        // U_k = -G_{N-k}
        let base = -&mono.coeff;
        apply_field_monomial(&mut out, &base, &mono.factors, n, d, v);
    }
    Ok(out)
}

/// Modes of `:d^{c1} b^1 ... d^{cp} b^p:`: sum over index tuples with
/// `k_1 + ... + k_p = n`, each factor contributing
/// `(-1)^{c} (k+1)...(k+c) b_k`.
fn apply_field_monomial(
    out: &mut FockVector,
    base: &Scalar,
    factors: &[(Weight, u32)],
    n: i64,
    d: i64,
    v: &FockVector,
) {
    let p = factors.len();
    if p == 0 {
        // constant field: only the n = 0 mode acts, as the identity
        if n == 0 {
            for (mono, c) in v.terms() {
                out.add_term(mono.clone(), base * c);
            }
        }
        return;
    }
    let lo = n - (p as i64 - 1).max(0) * d;
    let hi = d;
    let mut indices = vec![0i64; p];
    enumerate_modes(out, base, factors, n, lo, hi, 0, &mut indices, v);
}

fn deriv_coeff(k: i64, c: u32) -> i64 {
    let mut acc = 1i64;
    for r in 1..=c as i64 {
        acc *= k + r;
    }
    if c % 2 == 1 {
        -acc
    } else {
        acc
    }
}

#[allow(clippy::too_many_arguments)]
fn enumerate_modes(
    out: &mut FockVector,
    base: &Scalar,
    factors: &[(Weight, u32)],
    remaining: i64,
    lo: i64,
    hi: i64,
    pos: usize,
    indices: &mut Vec<i64>,
    v: &FockVector,
) {
    let p = factors.len();
    if pos == p - 1 {
        let k = remaining;
        if k < lo || k > hi {
            return;
        }
        indices[pos] = k;
        let mut scale = base.clone();
        let mut modes = Vec::with_capacity(p);
        for (i, (w, c)) in factors.iter().enumerate() {
            let dc = deriv_coeff(indices[i], *c);
            if dc == 0 {
                return;
            }
            if dc != 1 {
                scale = &scale * &Scalar::from_int(dc);
            }
            modes.push(Mode::new(w.clone(), indices[i]));
        }
        apply_normal_ordered(out, &modes, &scale, v);
        return;
    }
    for k in lo..=hi {
        if deriv_coeff(k, factors[pos].1) == 0 {
            continue;
        }
        indices[pos] = k;
        enumerate_modes(out, base, factors, remaining - k, lo, hi, pos + 1, indices, v);
    }
}
