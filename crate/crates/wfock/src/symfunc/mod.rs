//! The ring of symmetric functions over [`Scalar`], in the power-sum basis.
//!
//! A [`SymFunc`] is a finite linear combination of power sums `p_lambda`
//! indexed by partitions.  On top of the ring structure this module
//! provides:
//!
//! - [`SymFunc::to_monomials`]: exact expansion into monomial symmetric
//!   functions through a bounded number of variables
//! - [`inner_product`]: the t-deformed pairing with
//!   `<p_lambda, p_mu> = delta t^len z_lambda`
//! - [`jack`]: Jack functions `J_lambda`, monic on `m_lambda`, memoized
//! - [`dual_norm_b`]: the arm/leg norm constant with `Q_lambda = b J`
//! - [`skew_jack`]: skew Jack functions `J_{lambda/mu}`
//! - [`integral_norm_c`]: the evaluation norm entering the
//!   singular-vector formula
//! - [`cauchy_truncated`]: both sides of the Cauchy kernel identity
//! - [`schur_pbasis`]: an independent Jacobi-Trudi route to Schur
//!   functions, the `t = 1` cross-check for Jacks

mod basis;
mod cache_file;
mod jack;

pub use basis::{monomial_in_power_sums, power_sum_in_monomials};
pub use cache_file::{load_jack_cache, save_jack_cache};
pub use jack::{
    cauchy_truncated, dual_norm_b, integral_norm_c, jack, jack_norm, schur_pbasis, skew_jack,
    warm_jack_level,
};

use crate::partition::Partition;
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A finite Scalar-linear combination of power sums `p_lambda`.
///
/// No zero coefficients are stored; the zero function has an empty term
/// map.  Multiplication merges indexing partitions:
/// `p_lambda p_mu = p_{sort(lambda U mu)}`.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Scalar>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc {
            terms: BTreeMap::new(),
        }
    }

    /// The constant symmetric function 1 (the empty power sum).
    pub fn one() -> Self {
        SymFunc::term(Partition::empty(), Scalar::one())
    }

    /// The generator `p_k`.
    pub fn power_sum(k: u32) -> Self {
        assert!(k > 0);
        SymFunc::term(Partition::new(vec![k]), Scalar::one())
    }

    /// A single term `c * p_lambda`.
    pub fn term(lambda: Partition, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        SymFunc { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Partition, Scalar)>) -> Self {
        let mut out = SymFunc::zero();
        for (lam, c) in pairs {
            out.add_term(lam, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Scalar {
        self.terms.get(lambda).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest `|lambda|` in the support, or None for the zero function.
    pub fn max_degree(&self) -> Option<u64> {
        self.terms.keys().map(|l| l.weight()).max()
    }

    /// True if all terms share one degree (the zero function counts).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|l| l.weight());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, lambda: Partition, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn add(&self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (lam, c) in &rhs.terms {
            out.add_term(lam.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (lam, c) in &rhs.terms {
            out.add_term(lam.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(lam, x)| (lam.clone(), x * c))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (la, ca) in &self.terms {
            for (lb, cb) in &rhs.terms {
                out.add_term(la.merge(lb), ca * cb);
            }
        }
        out
    }

    /// Monomial-basis expansion of the projection to `max_len` variables:
    /// coefficients of `m_mu` with `len(mu) <= max_len`.
    pub fn to_monomials(&self, max_len: usize) -> BTreeMap<Partition, Scalar> {
        let mut out: BTreeMap<Partition, Scalar> = BTreeMap::new();
        for (lam, c) in &self.terms {
            let expansion = power_sum_in_monomials(lam);
            for (mu, q) in expansion.iter() {
                if mu.len() > max_len {
                    continue;
                }
                let add = c * &Scalar::from_rational(q.clone());
                if add.is_zero() {
                    continue;
                }
                use std::collections::btree_map::Entry;
                match out.entry(mu.clone()) {
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
        }
        out
    }

    /// Substitute `t -> t0` in every coefficient (keeping the `a` part
    /// symbolic is meaningless here, so coefficients must be free of `a`).
    pub fn eval_t(&self, t0: &BigRational) -> crate::error::Result<BTreeMap<Partition, BigRational>> {
        let mut out = BTreeMap::new();
        for (lam, c) in &self.terms {
            let (plain, root) = c.eval_components(t0)?;
            assert!(root.is_zero(), "eval_t on a coefficient involving the square root");
            out.insert(lam.clone(), plain);
        }
        Ok(out)
    }
}

/// `z_lambda = prod_i i^{m_i} m_i!` with `m_i` the multiplicity of `i`.
pub fn z_factor(lambda: &Partition) -> BigRational {
    let mut z = BigInt::from(1);
    let mut run_value = 0u32;
    let mut run_len = 0u64;
    for &p in lambda.parts().iter().rev() {
        if p == run_value {
            run_len += 1;
        } else {
            run_value = p;
            run_len = 1;
        }
        z *= BigInt::from(p) * BigInt::from(run_len);
    }
    BigRational::from_integer(z)
}

/// The t-deformed power-sum pairing, extended bilinearly:
/// `<p_lambda, p_mu> = delta_{lambda,mu} t^{len(lambda)} z_lambda`.
pub fn inner_product(f: &SymFunc, g: &SymFunc) -> Scalar {
    let (small, large) = if f.num_terms() <= g.num_terms() {
        (f, g)
    } else {
        (g, f)
    };
    let mut acc = Scalar::zero();
    for (lam, cf) in small.terms() {
        let cg = large.terms.get(lam);
        let Some(cg) = cg else { continue };
        let weight = &Scalar::t_power(lam.len() as i64) * &Scalar::from_rational(z_factor(lam));
        acc = &acc + &(&(cf * cg) * &weight);
    }
    acc
}

impl SymFunc {
    /// JSON form: a list of `{partition, coefficient}` records.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(lam, c)| {
                serde_json::json!({
                    "partition": lam.parts().to_vec(),
                    "coefficient": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    /// Parse the [`SymFunc::to_json`] format.
    pub fn from_json(value: &serde_json::Value) -> crate::error::Result<SymFunc> {
        use crate::error::Error;
        let terms = value["terms"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing terms array".into()))?;
        let mut out = SymFunc::zero();
        for term in terms {
            let parts = term["partition"]
                .as_array()
                .ok_or_else(|| Error::Parse("partition not an array".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|v| v as u32)
                        .ok_or_else(|| Error::Parse("bad part".into()))
                })
                .collect::<crate::error::Result<Vec<u32>>>()?;
            let coeff: Scalar = term["coefficient"]
                .as_str()
                .ok_or_else(|| Error::Parse("coefficient not a string".into()))?
                .parse()?;
            out.add_term(Partition::new(parts), coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for SymFunc {
    /// Renders `c1*p[2,1] + c2*p[3]`, scalars in parentheses when needed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lam, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if lam.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*p{lam}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for SymFunc {
    type Err = crate::error::Error;

    /// Parses the `Display` format: `(scalar)*p[..] + ...` or `0`.
    fn from_str(s: &str) -> crate::error::Result<SymFunc> {
        let s = s.trim();
        if s == "0" {
            return Ok(SymFunc::zero());
        }
        // Split on " + " at parenthesis depth 0 only; coefficients may
        // contain sums themselves.
        let mut chunks: Vec<String> = Vec::new();
        let mut depth = 0usize;
        let mut current = String::new();
        let bytes: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c == '(' {
                depth += 1;
            } else if c == ')' {
                depth = depth.saturating_sub(1);
            }
            if depth == 0 && c == ' ' && i + 2 < bytes.len() && bytes[i + 1] == '+' && bytes[i + 2] == ' ' {
                chunks.push(std::mem::take(&mut current));
                i += 3;
                continue;
            }
            current.push(c);
            i += 1;
        }
        chunks.push(current);
        let mut out = SymFunc::zero();
        for chunk in &chunks {
            let chunk = chunk.trim();
            let (coeff_str, lam) = match chunk.rfind(")*p") {
                Some(idx) => {
                    let lam: Partition = chunk[idx + 3..].parse()?;
                    (&chunk[..idx + 1], lam)
                }
                None => (chunk, Partition::empty()),
            };
            let c: Scalar = coeff_str.parse()?;
            out.add_term(lam, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn z_values() {
        assert_eq!(z_factor(&Partition::empty()), BigRational::from_integer(1.into()));
        assert_eq!(z_factor(&pt(&[1])), BigRational::from_integer(1.into()));
        assert_eq!(z_factor(&pt(&[2, 1])), BigRational::from_integer(2.into()));
        // z_[2,2,1] = 2^2 * 2! * 1 * 1! = 8
        assert_eq!(z_factor(&pt(&[2, 2, 1])), BigRational::from_integer(8.into()));
    }

    #[test]
    fn pairing_examples() {
        let p1 = SymFunc::power_sum(1);
        assert_eq!(inner_product(&p1, &p1), Scalar::t());

        let p21 = SymFunc::term(pt(&[2, 1]), Scalar::one());
        let two_t2 = &Scalar::from_int(2) * &Scalar::t_power(2);
        assert_eq!(inner_product(&p21, &p21), two_t2);

        let p2 = SymFunc::power_sum(2);
        let p11 = SymFunc::term(pt(&[1, 1]), Scalar::one());
        assert!(inner_product(&p2, &p11).is_zero());
    }

    #[test]
    fn multiplication_merges_partitions() {
        let p2 = SymFunc::power_sum(2);
        let p11 = SymFunc::term(pt(&[1, 1]), Scalar::one());
        let prod = p2.mul(&p11);
        assert_eq!(prod.coefficient(&pt(&[2, 1, 1])), Scalar::one());
        assert_eq!(prod.num_terms(), 1);
    }

    #[test]
    fn pairing_is_symmetric_and_bilinear() {
        for n in 1..=5u64 {
            let parts = partitions_of(n);
            for a in &parts {
                for b in &parts {
                    let fa = SymFunc::term(a.clone(), Scalar::t());
                    let fb = SymFunc::term(b.clone(), Scalar::alpha());
                    assert_eq!(inner_product(&fa, &fb), inner_product(&fb, &fa));
                }
            }
        }
    }

    #[test]
    fn display_roundtrip() {
        let f = SymFunc::from_terms(vec![
            (pt(&[2, 1]), Scalar::alpha_zero()),
            (pt(&[3]), -&Scalar::t()),
            (Partition::empty(), Scalar::from_int(7)),
        ]);
        let back: SymFunc = f.to_string().parse().unwrap();
        assert_eq!(back, f);
    }
}
