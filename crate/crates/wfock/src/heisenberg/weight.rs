//! Weight-space geometry of sl(N) in Dynkin-label coordinates.
//!
//! A [`Weight`] stores its coefficients on the fundamental weights
//! `omega_i`; the bilinear form is the one whose Gram matrix on the simple
//! roots is the Cartan matrix, so `(omega_i, omega_j) = (A^{-1})_{ij} =
//! min(i,j) - ij/N` and `(alpha_i, omega_j) = delta_{ij}`.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

/// An element of the dual Cartan space of sl(N), N = rank + 1, written in
/// Dynkin labels (coefficients on fundamental weights).  Labels are exact
/// [`Scalar`]s, so weights like the screening sources and targets, which
/// involve `alpha_+` and `alpha_-`, live here directly.
#[derive(Clone, PartialEq, Debug)]
pub struct Weight {
    labels: Vec<Scalar>,
}

impl Weight {
    pub fn new(labels: Vec<Scalar>) -> Self {
        assert!(!labels.is_empty(), "weight of rank 0");
        Weight { labels }
    }

    pub fn zero(rank: usize) -> Self {
        Weight::new(vec![Scalar::zero(); rank])
    }

    /// Fundamental weight `omega_i`, 1-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!(1 <= i && i <= rank);
        let mut labels = vec![Scalar::zero(); rank];
        labels[i - 1] = Scalar::one();
        Weight::new(labels)
    }

    /// Simple root `alpha_i = sum_j A_{ji} omega_j`, 1-based.
    pub fn simple_root(rank: usize, i: usize) -> Self {
        assert!(1 <= i && i <= rank);
        let mut labels = vec![Scalar::zero(); rank];
        for j in 1..=rank {
            let a = cartan_entry(j, i);
            if a != 0 {
                labels[j - 1] = Scalar::from_int(a);
            }
        }
        Weight::new(labels)
    }

    /// The Weyl vector `rho = sum_i omega_i`.
    pub fn weyl_vector(rank: usize) -> Self {
        Weight::new(vec![Scalar::one(); rank])
    }

    /// Weight of the i-th vector of the defining representation:
    /// `epsilon_i = omega_1 - alpha_1 - ... - alpha_{i-1}`, 1-based,
    /// `1 <= i <= N`.
    pub fn defining_rep_weight(rank: usize, i: usize) -> Self {
        assert!(1 <= i && i <= rank + 1);
        let mut w = Weight::fundamental(rank, 1);
        for j in 1..i {
            w = w.sub(&Weight::simple_root(rank, j));
        }
        w
    }

    /// The screening-family weight with labels
    /// `(1 - u_i) alpha_+ + (1 - v_i) alpha_-` on `omega_i`.
    pub fn from_uv_labels(u: &[i64], v: &[i64]) -> Result<Self> {
        if u.len() != v.len() || u.is_empty() {
            return Err(Error::RankMismatch(u.len(), v.len()));
        }
        let plus = Scalar::alpha_plus();
        let minus = Scalar::alpha_minus();
        let labels = u
            .iter()
            .zip(v)
            .map(|(&ui, &vi)| {
                &(&Scalar::from_int(1 - ui) * &plus) + &(&Scalar::from_int(1 - vi) * &minus)
            })
            .collect();
        Ok(Weight::new(labels))
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// N of sl(N).
    pub fn big_n(&self) -> usize {
        self.labels.len() + 1
    }

    pub fn labels(&self) -> &[Scalar] {
        &self.labels
    }

    /// Dynkin label on `omega_i`, 1-based.
    pub fn label(&self, i: usize) -> &Scalar {
        &self.labels[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight::new(
            self.labels
                .iter()
                .zip(&rhs.labels)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight::new(
            self.labels
                .iter()
                .zip(&rhs.labels)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Scalar) -> Weight {
        Weight::new(self.labels.iter().map(|a| a * c).collect())
    }

    /// Coordinates in the simple-root basis: `self = sum_j c_j alpha_j`
    /// with `c = A^{-1} labels`.
    pub fn root_coordinates(&self) -> Vec<Scalar> {
        let rank = self.rank();
        let n = rank + 1;
        (1..=rank)
            .map(|j| {
                let mut acc = Scalar::zero();
                for (i, lab) in self.labels.iter().enumerate() {
                    if lab.is_zero() {
                        continue;
                    }
                    let entry = cartan_inverse_entry(j, i + 1, n);
                    acc = &acc + &(lab * &Scalar::from_rational(entry));
                }
                acc
            })
            .collect()
    }

    /// The induced bilinear form: `sum_{ij} z_i e_j (A^{-1})_{ij}`.
    pub fn bilinear(&self, rhs: &Weight) -> Result<Scalar> {
        if self.rank() != rhs.rank() {
            return Err(Error::RankMismatch(self.rank(), rhs.rank()));
        }
        let n = self.big_n();
        let mut acc = Scalar::zero();
        for (i, a) in self.labels.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.labels.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let entry = cartan_inverse_entry(i + 1, j + 1, n);
                acc = &acc + &(&(a * b) * &Scalar::from_rational(entry));
            }
        }
        Ok(acc)
    }

    /// Conformal weight `h = (1/2)(zeta, zeta - 2 alpha_0 rho)`.
    pub fn conformal_weight(&self) -> Scalar {
        let rho = Weight::weyl_vector(self.rank());
        let shift = rho.scale(&(&Scalar::from_int(2) * &Scalar::alpha_zero()));
        let form = self.bilinear(&self.sub(&shift)).expect("equal ranks");
        &form * &Scalar::from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)))
    }

    /// The unnormalised weight-3 eigenvalue factor for N = 3:
    /// `X = (zeta, w2 - w1) ((zeta, w1) - alpha_0) ((zeta, w2) - alpha_0)`.
    /// The conventionally normalised eigenvalue is `sqrt(3 beta) X`.
    pub fn w3_weight_unnormalized(&self) -> Result<Scalar> {
        if self.rank() != 2 {
            return Err(Error::RequiresRankTwo(self.big_n()));
        }
        let w1 = Weight::fundamental(2, 1);
        let w2 = Weight::fundamental(2, 2);
        let a0 = Scalar::alpha_zero();
        let f0 = self.bilinear(&w2.sub(&w1))?;
        let f1 = &self.bilinear(&w1)? - &a0;
        let f2 = &self.bilinear(&w2)? - &a0;
        Ok(&(&f0 * &f1) * &f2)
    }

    /// Simple Weyl reflection `s_i(zeta) = zeta - (zeta, alpha_i) alpha_i`.
    pub fn simple_reflection(&self, i: usize) -> Weight {
        let coeff = self.label(i).clone();
        self.sub(&Weight::simple_root(self.rank(), i).scale(&coeff))
    }

    /// Shifted Weyl action `w . zeta = w(zeta - alpha_0 rho) + alpha_0 rho`
    /// for a word in simple reflections (applied left to right).
    pub fn shifted_weyl_action(&self, word: &[usize]) -> Weight {
        let rho_shift = Weight::weyl_vector(self.rank()).scale(&Scalar::alpha_zero());
        let mut w = self.sub(&rho_shift);
        for &i in word {
            w = w.simple_reflection(i);
        }
        w.add(&rho_shift)
    }

    /// Apply the `alpha_+ <-> alpha_-` swap to every label.
    pub fn swap_alpha(&self) -> Weight {
        Weight::new(self.labels.iter().map(Scalar::swap_alpha).collect())
    }
}

/// Cartan matrix entry of sl(N), 1-based.
pub fn cartan_entry(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i + 1 == j || j + 1 == i {
        -1
    } else {
        0
    }
}

/// `(A^{-1})_{ij} = min(i,j) - ij/N`, 1-based.
pub fn cartan_inverse_entry(i: usize, j: usize, n: usize) -> BigRational {
    let min = i.min(j) as i64;
    BigRational::from_integer(BigInt::from(min))
        - BigRational::new(BigInt::from((i * j) as i64), BigInt::from(n as i64))
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn root_pairings() {
        for rank in 1..=4 {
            let a1 = Weight::simple_root(rank, 1);
            assert_eq!(a1.bilinear(&a1).unwrap(), Scalar::from_int(2));
            if rank >= 2 {
                let a2 = Weight::simple_root(rank, 2);
                assert_eq!(a1.bilinear(&a2).unwrap(), Scalar::from_int(-1));
            }
            for i in 1..=rank {
                for j in 1..=rank {
                    let ai = Weight::simple_root(rank, i);
                    let wj = Weight::fundamental(rank, j);
                    let expect = if i == j { 1 } else { 0 };
                    assert_eq!(ai.bilinear(&wj).unwrap(), Scalar::from_int(expect));
                }
            }
        }
    }

    #[test]
    fn fundamental_pairing_sl3() {
        let w1 = Weight::fundamental(2, 1);
        assert_eq!(
            w1.bilinear(&w1).unwrap(),
            Scalar::from_rational(q(2, 3))
        );
    }

    #[test]
    fn rank_mismatch_rejected() {
        let a = Weight::zero(2);
        let b = Weight::zero(3);
        assert!(matches!(a.bilinear(&b), Err(Error::RankMismatch(2, 3))));
    }

    #[test]
    fn defining_rep_weights_sum_to_zero_and_pair_correctly() {
        for rank in 1..=3 {
            let n = rank + 1;
            let mut total = Weight::zero(rank);
            for i in 1..=n {
                total = total.add(&Weight::defining_rep_weight(rank, i));
            }
            assert!(total.is_zero());
            for i in 1..=n {
                for j in 1..=n {
                    let ei = Weight::defining_rep_weight(rank, i);
                    let ej = Weight::defining_rep_weight(rank, j);
                    let expect = if i == j {
                        q(n as i64 - 1, n as i64)
                    } else {
                        q(-1, n as i64)
                    };
                    assert_eq!(
                        ei.bilinear(&ej).unwrap(),
                        Scalar::from_rational(expect),
                        "(eps_{i}, eps_{j}) at rank {rank}"
                    );
                }
            }
        }
    }

    #[test]
    fn uv_weight_vanishes_at_all_ones() {
        let w = Weight::from_uv_labels(&[1, 1], &[1, 1]).unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn example_one_conformal_weights() {
        // eta = zeta_{(0,-1),(1,-1)}, theta = zeta_{(-1,-1),(0,-1)} in the
        // per-color pairing; h_eta = 13/6 and h_theta = 1/6 at t = 4/5.
        let eta = Weight::from_uv_labels(&[0, 1], &[-1, -1]).unwrap();
        let theta = Weight::from_uv_labels(&[-1, 0], &[-1, -1]).unwrap();
        let t0 = q(4, 5);
        let h_eta = eta.conformal_weight().eval_quad(&t0, 1).unwrap();
        assert!(h_eta.is_rational());
        assert_eq!(h_eta.a, q(13, 6));
        let h_theta = theta.conformal_weight().eval_quad(&t0, 1).unwrap();
        assert_eq!(h_theta.a, q(1, 6));
        assert!(Weight::zero(2).conformal_weight().is_zero());
    }

    #[test]
    fn example_one_w3_ratio() {
        // At t = 4/5 all three factors of X are negative for both weights,
        // so X_eta / X_theta = 187/7 exactly; the squared magnitudes match
        // the conventional eigenvalues: 3 beta X^2 = w^2 with
        // w_eta^2 = (187)^2/(81*390), w_theta^2 = 49/(81*390).
        let eta = Weight::from_uv_labels(&[0, 1], &[-1, -1]).unwrap();
        let theta = Weight::from_uv_labels(&[-1, 0], &[-1, -1]).unwrap();
        let x_eta = eta.w3_weight_unnormalized().unwrap();
        let x_theta = theta.w3_weight_unnormalized().unwrap();
        let ratio = x_eta.div(&x_theta).unwrap().eval_quad(&q(4, 5), 1).unwrap();
        assert!(ratio.is_rational());
        assert_eq!(ratio.a, q(187, 7));

        // beta = 2/(4 - 15 alpha_0^2)
        let a0 = Scalar::alpha_zero();
        let beta = Scalar::from_int(2)
            .div(&(&Scalar::from_int(4) - &(&Scalar::from_int(15) * &(&a0 * &a0))))
            .unwrap();
        let three_beta = &Scalar::from_int(3) * &beta;
        let we2 = (&three_beta * &(&x_eta * &x_eta)).eval_quad(&q(4, 5), 1).unwrap();
        assert_eq!(we2.a, q(187 * 187, 81 * 390));
        let wt2 = (&three_beta * &(&x_theta * &x_theta)).eval_quad(&q(4, 5), 1).unwrap();
        assert_eq!(wt2.a, q(49, 81 * 390));
    }

    #[test]
    fn w3_weight_of_zero_vanishes() {
        assert!(Weight::zero(2).w3_weight_unnormalized().unwrap().is_zero());
        assert!(matches!(
            Weight::zero(3).w3_weight_unnormalized(),
            Err(Error::RequiresRankTwo(4))
        ));
    }

    #[test]
    fn shifted_weyl_invariance() {
        // h and X are invariant under the shifted Weyl action of S_3.
        let words: [&[usize]; 6] = [&[], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]];
        let samples = [
            Weight::new(vec![Scalar::from_rational(q(3, 7)), Scalar::from_int(-2)]),
            Weight::new(vec![&Scalar::t() + &Scalar::alpha(), Scalar::from_rational(q(1, 2))]),
        ];
        for zeta in &samples {
            let h = zeta.conformal_weight();
            let x = zeta.w3_weight_unnormalized().unwrap();
            for word in words {
                let moved = zeta.shifted_weyl_action(word);
                assert_eq!(moved.conformal_weight(), h, "h not invariant under {word:?}");
                assert_eq!(
                    moved.w3_weight_unnormalized().unwrap(),
                    x,
                    "X not invariant under {word:?}"
                );
            }
        }
    }

    #[test]
    fn root_coordinates_roundtrip() {
        let zeta = Weight::new(vec![Scalar::from_int(3), Scalar::alpha_zero()]);
        let coords = zeta.root_coordinates();
        let mut back = Weight::zero(2);
        for (j, c) in coords.iter().enumerate() {
            back = back.add(&Weight::simple_root(2, j + 1).scale(c));
        }
        assert_eq!(back, zeta);
    }
}
