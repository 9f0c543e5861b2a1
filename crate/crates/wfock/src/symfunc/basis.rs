//! Exact conversion between the power-sum and monomial bases.
//!
//! `p_lambda` expands in monomial symmetric functions with integer
//! coefficients by multiset convolution, one power sum at a time; only
//! partitions dominating `lambda` appear.  Per-degree transition matrices
//! are triangular in the graded-revlex order and inverted by back
//! substitution.  Both directions are memoized process-wide.

use crate::partition::{partitions_of, Partition};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

type MonExpansion = BTreeMap<Partition, BigRational>;

struct BasisTables {
    p_in_m: HashMap<Partition, Arc<MonExpansion>>,
    m_in_p: HashMap<Partition, Arc<MonExpansion>>,
    levels_done: HashMap<u64, ()>,
}

fn tables() -> &'static Mutex<BasisTables> {
    static TABLES: OnceLock<Mutex<BasisTables>> = OnceLock::new();
    TABLES.get_or_init(|| {
        Mutex::new(BasisTables {
            p_in_m: HashMap::new(),
            m_in_p: HashMap::new(),
            levels_done: HashMap::new(),
        })
    })
}

/// Multiply a monomial-basis expansion by the power sum `p_r`.
///
/// For each distinct part value `u` of `mu` (and `u = 0` for appending a
/// new part), one part `u` becomes `u + r`; the resulting `m_nu` picks up
/// the multiplicity of `u + r` in `nu`.
fn multiply_by_power_sum(expansion: &MonExpansion, r: u32) -> MonExpansion {
    let mut out = MonExpansion::new();
    for (mu, c) in expansion {
        let mut values: Vec<u32> = vec![0];
        let mut last = 0;
        for &p in mu.parts() {
            if p != last {
                values.push(p);
                last = p;
            }
        }
        for u in values {
            let nu = if u == 0 {
                mu.insert_part(r)
            } else {
                mu.remove_part(u).expect("part exists").insert_part(u + r)
            };
            let mult = nu.multiplicity(u + r);
            let add = c * BigRational::from_integer(mult.into());
            *out.entry(nu).or_insert_with(BigRational::zero) += add;
        }
    }
    out
}

/// Monomial expansion of `p_lambda` (all lengths, exact integer
/// coefficients).
pub fn power_sum_in_monomials(lambda: &Partition) -> Arc<MonExpansion> {
    if let Some(hit) = tables().lock().unwrap().p_in_m.get(lambda) {
        return hit.clone();
    }
    let mut expansion = MonExpansion::new();
    expansion.insert(Partition::empty(), BigRational::one());
    for &r in lambda.parts() {
        expansion = multiply_by_power_sum(&expansion, r);
    }
    let arc = Arc::new(expansion);
    tables()
        .lock()
        .unwrap()
        .p_in_m
        .insert(lambda.clone(), arc.clone());
    arc
}

/// Power-sum expansion of `m_mu`, with rational coefficients.
pub fn monomial_in_power_sums(mu: &Partition) -> Arc<MonExpansion> {
    let degree = mu.weight();
    {
        let t = tables().lock().unwrap();
        if let Some(hit) = t.m_in_p.get(mu) {
            return hit.clone();
        }
    }
    compute_level(degree);
    tables()
        .lock()
        .unwrap()
        .m_in_p
        .get(mu)
        .expect("level computed")
        .clone()
}

/// Invert the p-to-m transition matrix for one degree.
fn compute_level(degree: u64) {
    {
        let t = tables().lock().unwrap();
        if t.levels_done.contains_key(&degree) {
            return;
        }
    }
    let parts = partitions_of(degree);
    let k = parts.len();
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();

    // R[i][j] = coefficient of m_{parts[j]} in p_{parts[i]}; upper
    // triangular since the monomial support of p_lambda dominates lambda.
    let mut r = vec![vec![BigRational::zero(); k]; k];
    for (i, lam) in parts.iter().enumerate() {
        let exp = power_sum_in_monomials(lam);
        for (mu, c) in exp.iter() {
            let j = index[mu];
            debug_assert!(j >= i);
            r[i][j] = c.clone();
        }
    }

    // Back-substitute for S = R^{-1}, also upper triangular.
    let mut s = vec![vec![BigRational::zero(); k]; k];
    for i in (0..k).rev() {
        let dinv = BigRational::one() / r[i][i].clone();
        s[i][i] = dinv.clone();
        for j in (i + 1..k).rev() {
            let mut acc = BigRational::zero();
            for m in i + 1..=j {
                if !r[i][m].is_zero() && !s[m][j].is_zero() {
                    acc += &r[i][m] * &s[m][j];
                }
            }
            if !acc.is_zero() {
                s[i][j] = -(acc * dinv.clone());
            }
        }
    }
    // With p_i = sum_j R_ij m_j, row i of S = R^{-1} expands m_{parts[i]}
    // in power sums.
    let mut t = tables().lock().unwrap();
    for (i, mu) in parts.iter().enumerate() {
        let mut exp = MonExpansion::new();
        for (j, lam) in parts.iter().enumerate() {
            if !s[i][j].is_zero() {
                exp.insert(lam.clone(), s[i][j].clone());
            }
        }
        t.m_in_p.insert(mu.clone(), Arc::new(exp));
    }
    t.levels_done.insert(degree, ());
}
