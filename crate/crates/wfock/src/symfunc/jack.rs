//! Jack symmetric functions and their norm constants.
//!
//! `J_lambda` is pinned down by upper triangularity against the monomial
//! basis in dominance order (monic on `m_lambda`) together with
//! orthogonality under the t-deformed power-sum pairing.  The computation
//! here is Gram-Schmidt over one weight level at a time, in the
//! graded-revlex total order refining dominance; results are memoized
//! process-wide and reused by every caller.

use super::basis::monomial_in_power_sums;
use super::{inner_product, z_factor, SymFunc};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::scalar::{Poly, RatFun, Scalar};
use num_rational::BigRational;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

struct JackStore {
    jack: HashMap<Partition, Arc<SymFunc>>,
    norm: HashMap<Partition, Scalar>,
    skew: HashMap<(Partition, Partition), Arc<SymFunc>>,
    levels_done: HashMap<u64, ()>,
}

fn store() -> &'static Mutex<JackStore> {
    static STORE: OnceLock<Mutex<JackStore>> = OnceLock::new();
    STORE.get_or_init(|| {
        Mutex::new(JackStore {
            jack: HashMap::new(),
            norm: HashMap::new(),
            skew: HashMap::new(),
            levels_done: HashMap::new(),
        })
    })
}

/// `m_lambda` rewritten in the power-sum basis, coefficients rational.
fn monomial_as_symfunc(lambda: &Partition) -> SymFunc {
    let exp = monomial_in_power_sums(lambda);
    SymFunc::from_terms(
        exp.iter()
            .map(|(mu, c)| (mu.clone(), Scalar::from_rational(c.clone()))),
    )
}

/// Compute one whole weight level of Jack functions by Gram-Schmidt and
/// install it in the store.
pub fn warm_jack_level(degree: u64) {
    {
        let s = store().lock().unwrap();
        if s.levels_done.contains_key(&degree) {
            return;
        }
    }
    let parts = partitions_of(degree);
    let mut jacks: Vec<Arc<SymFunc>> = Vec::with_capacity(parts.len());
    let mut norms: Vec<Scalar> = Vec::with_capacity(parts.len());
    for lam in &parts {
        let target = monomial_as_symfunc(lam);
        let mut j = target.clone();
        for (k, prev) in jacks.iter().enumerate() {
            let overlap = inner_product(&target, prev);
            if overlap.is_zero() {
                continue;
            }
            let coeff = overlap.div(&norms[k]).expect("nonzero Jack norm");
            j = j.sub(&prev.scale(&coeff));
        }
        let norm = inner_product(&j, &j);
        debug_assert!(!norm.is_zero());
        jacks.push(Arc::new(j));
        norms.push(norm);
    }
    let mut s = store().lock().unwrap();
    for ((lam, j), n) in parts.iter().zip(jacks).zip(norms) {
        s.jack.entry(lam.clone()).or_insert(j);
        s.norm.entry(lam.clone()).or_insert(n);
    }
    s.levels_done.insert(degree, ());
}

/// The Jack function `J_lambda` in the power-sum basis, defined at
/// symbolic `t`; memoized.
pub fn jack(lambda: &Partition) -> Arc<SymFunc> {
    {
        let s = store().lock().unwrap();
        if let Some(hit) = s.jack.get(lambda) {
            return hit.clone();
        }
    }
    warm_jack_level(lambda.weight());
    store().lock().unwrap().jack[lambda].clone()
}

/// `<J_lambda, J_lambda>`, memoized alongside `jack`.
pub fn jack_norm(lambda: &Partition) -> Scalar {
    {
        let s = store().lock().unwrap();
        if let Some(hit) = s.norm.get(lambda) {
            return hit.clone();
        }
    }
    warm_jack_level(lambda.weight());
    store().lock().unwrap().norm[lambda].clone()
}

/// Installs an externally provided Jack expansion (cache loading);
/// returns false if a certificate fails.
pub(crate) fn install_jack(lambda: &Partition, f: SymFunc) -> bool {
    // Certificates: homogeneous of the right degree, monic on m_lambda,
    // and norm equal to 1/b_lambda.
    if !f.is_homogeneous() {
        return false;
    }
    if lambda.weight() > 0 && f.max_degree() != Some(lambda.weight()) {
        return false;
    }
    let norm = inner_product(&f, &f);
    let b = dual_norm_b(lambda);
    if !(&norm * &b).is_one() {
        return false;
    }
    let monomials = f.to_monomials(lambda.len().max(1));
    if !monomials
        .get(lambda)
        .map(|c| c.is_one())
        .unwrap_or(lambda.weight() == 0)
    {
        return false;
    }
    let mut s = store().lock().unwrap();
    s.jack.entry(lambda.clone()).or_insert_with(|| Arc::new(f));
    s.norm.entry(lambda.clone()).or_insert(norm);
    true
}

/// `b_lambda(t) = prod_cells (a t + l + 1) / ((a+1) t + l)`, the constant
/// with `Q_lambda = b_lambda J_lambda` and `<J_lambda, J_lambda> = 1/b`.
pub fn dual_norm_b(lambda: &Partition) -> Scalar {
    let mut num = Poly::one();
    let mut den = Poly::one();
    for (i, j) in lambda.cells() {
        let a = lambda.arm(i, j).expect("cell in diagram") as i64;
        let l = lambda.leg(i, j).expect("cell in diagram") as i64;
        let f_num = Poly::from_coeffs(vec![
            BigRational::from_integer((l + 1).into()),
            BigRational::from_integer(a.into()),
        ]);
        let f_den = Poly::from_coeffs(vec![
            BigRational::from_integer(l.into()),
            BigRational::from_integer((a + 1).into()),
        ]);
        num = &num * &f_num;
        den = &den * &f_den;
    }
    Scalar::from_ratfun(RatFun::new(num, den))
}

/// Evaluation norm `c_lambda(n) = prod_cells (n + a' t - l') /
/// (n + (a'+1) t - l' - 1)`; the coefficient in the singular-vector
/// formula.
pub fn integral_norm_c(lambda: &Partition, n: u32) -> Scalar {
    let n = n as i64;
    let mut num = Poly::one();
    let mut den = Poly::one();
    for (i, j) in lambda.cells() {
        let ca = lambda.coarm(i, j).expect("cell in diagram") as i64;
        let cl = lambda.coleg(i, j).expect("cell in diagram") as i64;
        let f_num = Poly::from_coeffs(vec![
            BigRational::from_integer((n - cl).into()),
            BigRational::from_integer(ca.into()),
        ]);
        let f_den = Poly::from_coeffs(vec![
            BigRational::from_integer((n - cl - 1).into()),
            BigRational::from_integer((ca + 1).into()),
        ]);
        num = &num * &f_num;
        den = &den * &f_den;
    }
    Scalar::from_ratfun(RatFun::new(num, den))
}

/// Skew Jack function `J_{lambda/mu}`, zero unless `mu` is contained in
/// `lambda`; `J_{lambda/[]} = J_lambda`.
pub fn skew_jack(lambda: &Partition, mu: &Partition) -> Arc<SymFunc> {
    if !lambda.contains(mu) {
        return Arc::new(SymFunc::zero());
    }
    if mu.is_empty() {
        return jack(lambda);
    }
    let key = (lambda.clone(), mu.clone());
    {
        let s = store().lock().unwrap();
        if let Some(hit) = s.skew.get(&key) {
            return hit.clone();
        }
    }
    // J_{lambda/mu} = sum_nu b_mu b_nu <J_lambda, J_mu J_nu> J_nu over
    // |nu| = |lambda| - |mu|.
    let d = lambda.weight() - mu.weight();
    let j_lambda = jack(lambda);
    let j_mu = jack(mu);
    let b_mu = dual_norm_b(mu);
    let mut out = SymFunc::zero();
    for nu in partitions_of(d) {
        let j_nu = jack(&nu);
        let pairing = inner_product(&j_lambda, &j_mu.mul(&j_nu));
        if pairing.is_zero() {
            continue;
        }
        let c = &(&b_mu * &dual_norm_b(&nu)) * &pairing;
        out = out.add(&j_nu.scale(&c));
    }
    let arc = Arc::new(out);
    store().lock().unwrap().skew.insert(key, arc.clone());
    arc
}

/// Monomial-coefficient table in two alphabets: `(mu, nu) -> c` meaning
/// `c * m_mu(y) m_nu(z)`.
pub type TwoAlphabetTable = BTreeMap<(Partition, Partition), Scalar>;

/// Expand both sides of the Cauchy kernel identity
/// `prod_m exp(p_m(y) p_m(z) / (t m)) = sum_lambda J_lambda(y) Q_lambda(z)`
/// through total degree `max_degree`, in `n1` variables `y` and `n2`
/// variables `z`.  The two tables are computed along independent routes
/// and returned for comparison.
pub fn cauchy_truncated(
    max_degree: u64,
    n1: usize,
    n2: usize,
) -> (TwoAlphabetTable, TwoAlphabetTable) {
    let mut lhs = TwoAlphabetTable::new();
    let mut rhs = TwoAlphabetTable::new();
    for lam in partitions_up_to(max_degree) {
        // Left side: the exponential expands to
        // sum_lambda p_lambda(y) p_lambda(z) / (t^len z_lambda).
        let coeff = Scalar::t_power(-(lam.len() as i64))
            .div(&Scalar::from_rational(z_factor(&lam)))
            .expect("z factor nonzero");
        let p = SymFunc::term(lam.clone(), Scalar::one());
        let ymons = p.to_monomials(n1);
        let zmons = p.to_monomials(n2);
        for (mu, cy) in &ymons {
            for (nu, cz) in &zmons {
                let add = &(&coeff * cy) * cz;
                accumulate(&mut lhs, mu.clone(), nu.clone(), add);
            }
        }
        // Right side: J_lambda(y) b_lambda J_lambda(z).
        let j = jack(&lam);
        let b = dual_norm_b(&lam);
        let ymons = j.to_monomials(n1);
        let zmons = j.scale(&b).to_monomials(n2);
        for (mu, cy) in &ymons {
            for (nu, cz) in &zmons {
                accumulate(&mut rhs, mu.clone(), nu.clone(), cy * cz);
            }
        }
    }
    (lhs, rhs)
}

fn accumulate(table: &mut TwoAlphabetTable, mu: Partition, nu: Partition, add: Scalar) {
    if add.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match table.entry((mu, nu)) {
        Entry::Vacant(e) => {
            e.insert(add);
        }
        Entry::Occupied(mut e) => {
            let sum = &*e.get() + &add;
            if sum.is_zero() {
                e.remove();
            } else {
                e.insert(sum);
            }
        }
    }
}

/// Complete homogeneous symmetric function `h_k` in the power-sum basis:
/// `h_k = sum_{|mu| = k} p_mu / z_mu`.
fn complete_homogeneous(k: u64) -> SymFunc {
    SymFunc::from_terms(partitions_of(k).into_iter().map(|mu| {
        let z = z_factor(&mu);
        (
            mu,
            Scalar::from_rational(BigRational::new(1.into(), 1.into()) / z),
        )
    }))
}

/// Schur function `s_lambda` in the power-sum basis via the Jacobi-Trudi
/// determinant `det(h_{lambda_i - i + j})`.  This route never touches the
/// Jack recursion and serves as the independent `t = 1` cross-check.
pub fn schur_pbasis(lambda: &Partition) -> SymFunc {
    let l = lambda.len();
    if l == 0 {
        return SymFunc::one();
    }
    let entry = |i: usize, j: usize| -> SymFunc {
        let k = lambda.part(i + 1) as i64 - (i as i64 + 1) + (j as i64 + 1);
        if k < 0 {
            SymFunc::zero()
        } else {
            complete_homogeneous(k as u64)
        }
    };
    let mat: Vec<Vec<SymFunc>> = (0..l).map(|i| (0..l).map(|j| entry(i, j)).collect()).collect();
    determinant(&mat)
}

fn determinant(mat: &[Vec<SymFunc>]) -> SymFunc {
    let n = mat.len();
    if n == 0 {
        return SymFunc::one();
    }
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = SymFunc::zero();
    for (j, top) in mat[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<SymFunc>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let sub = top.mul(&determinant(&minor));
        if j % 2 == 0 {
            acc = acc.add(&sub);
        } else {
            acc = acc.sub(&sub);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn sc(n: i64, d: i64) -> Scalar {
        Scalar::from_rational(q(n, d))
    }

    #[test]
    fn jack_of_single_box_is_p1() {
        let j = jack(&pt(&[1]));
        assert_eq!(*j, SymFunc::power_sum(1));
    }

    #[test]
    fn jack_11_golden() {
        // J_[1,1] = 1/2 p_[1,1] - 1/2 p_[2]
        let j = jack(&pt(&[1, 1]));
        assert_eq!(j.coefficient(&pt(&[1, 1])), sc(1, 2));
        assert_eq!(j.coefficient(&pt(&[2])), sc(-1, 2));
        assert_eq!(j.num_terms(), 2);
    }

    #[test]
    fn jack_21_golden() {
        // J_[2,1] = 1/(t+2) p_[1,1,1] + (t-1)/(t+2) p_[2,1] - t/(t+2) p_[3]
        let j = jack(&pt(&[2, 1]));
        let tp2 = Poly::from_coeffs(vec![q(2, 1), q(1, 1)]);
        let expect_111 = Scalar::from_ratfun(RatFun::new(Poly::one(), tp2.clone()));
        let expect_21 = Scalar::from_ratfun(RatFun::new(
            Poly::from_coeffs(vec![q(-1, 1), q(1, 1)]),
            tp2.clone(),
        ));
        let expect_3 = Scalar::from_ratfun(RatFun::new(
            Poly::from_coeffs(vec![q(0, 1), q(-1, 1)]),
            tp2,
        ));
        assert_eq!(j.coefficient(&pt(&[1, 1, 1])), expect_111);
        assert_eq!(j.coefficient(&pt(&[2, 1])), expect_21);
        assert_eq!(j.coefficient(&pt(&[3])), expect_3);
    }

    #[test]
    fn jack_2_at_potts_point() {
        // J_[2] at t = 4/5 is (5/9) p_[1,1] + (4/9) p_[2]
        let j = jack(&pt(&[2]));
        let vals = j.eval_t(&q(4, 5)).unwrap();
        assert_eq!(vals[&pt(&[1, 1])], q(5, 9));
        assert_eq!(vals[&pt(&[2])], q(4, 9));
    }

    #[test]
    fn dual_norm_examples() {
        assert_eq!(dual_norm_b(&Partition::empty()), Scalar::one());
        assert_eq!(dual_norm_b(&pt(&[1])), Scalar::t_power(-1));
    }

    #[test]
    fn duality_against_norm() {
        // <J_lambda, b_lambda J_lambda> = 1 for small weights
        for n in 0..=4u64 {
            for lam in partitions_of(n) {
                let norm = jack_norm(&lam);
                let b = dual_norm_b(&lam);
                assert!(
                    (&norm * &b).is_one(),
                    "duality failed for {lam}"
                );
            }
        }
    }

    #[test]
    fn skew_examples() {
        assert_eq!(*skew_jack(&pt(&[1]), &pt(&[1])), SymFunc::one());
        assert_eq!(*skew_jack(&pt(&[1]), &Partition::empty()), SymFunc::power_sum(1));
        assert!(skew_jack(&pt(&[1]), &pt(&[2])).is_zero());
    }

    #[test]
    fn evaluation_norm_examples() {
        // c_[1](1) = 1/t -> 5/4 at t = 4/5
        let c1 = integral_norm_c(&pt(&[1]), 1);
        assert_eq!(c1, Scalar::t_power(-1));
        // c_[2](1) = (1/t) (1+t)/(2t) -> (5/4)(9/8) at t = 4/5
        let c2 = integral_norm_c(&pt(&[2]), 1);
        let at = c2.eval_components(&q(4, 5)).unwrap().0;
        assert_eq!(at, q(5, 4) * q(9, 8));
        // c_[1,1](2) = (2/(t+1)) (1/t)
        let c11 = integral_norm_c(&pt(&[1, 1]), 2);
        let expect = Scalar::from_ratfun(RatFun::new(
            Poly::from_coeffs(vec![q(2, 1)]),
            Poly::from_coeffs(vec![q(0, 1), q(1, 1), q(1, 1)]),
        ));
        assert_eq!(c11, expect);
        // empty partition: empty product regardless of n
        assert!(integral_norm_c(&Partition::empty(), 0).is_one());
    }

    #[test]
    fn cauchy_degree_zero_and_one() {
        let (lhs, rhs) = cauchy_truncated(0, 2, 2);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 1);
        let key = (Partition::empty(), Partition::empty());
        assert!(lhs[&key].is_one());

        let (lhs, rhs) = cauchy_truncated(1, 2, 2);
        assert_eq!(lhs, rhs);
        // degree-1 coefficient is (1/t) m_[1](y) m_[1](z)
        let key = (pt(&[1]), pt(&[1]));
        assert_eq!(lhs[&key], Scalar::t_power(-1));
    }

    #[test]
    fn schur_small_cases() {
        // s_[1] = p_1, s_[2] = (p_[1,1] + p_[2])/2, s_[1,1] = (p_[1,1] - p_[2])/2
        assert_eq!(schur_pbasis(&pt(&[1])), SymFunc::power_sum(1));
        let s2 = schur_pbasis(&pt(&[2]));
        assert_eq!(s2.coefficient(&pt(&[1, 1])), sc(1, 2));
        assert_eq!(s2.coefficient(&pt(&[2])), sc(1, 2));
        let s11 = schur_pbasis(&pt(&[1, 1]));
        assert_eq!(s11.coefficient(&pt(&[1, 1])), sc(1, 2));
        assert_eq!(s11.coefficient(&pt(&[2])), sc(-1, 2));
    }

    #[test]
    fn projection_kills_long_monomials() {
        // pi_1 of m_[1,1] is 0: expand p_[1,1] and check the length filter
        let p11 = SymFunc::term(pt(&[1, 1]), Scalar::one());
        let mons = p11.to_monomials(1);
        assert!(mons.get(&pt(&[1, 1])).is_none());
        assert_eq!(mons[&pt(&[2])], Scalar::one());
    }
}
