//! Rational functions in `t` over `Q`, kept in canonical form.

use super::poly::Poly;
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// A ratio of polynomials in `t`.
///
/// Canonical form: the denominator is monic and coprime to the numerator;
/// zero is represented uniquely as `0 / 1`.  Equality is therefore
/// syntactic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut rf = RatFun { num, den };
        rf.reduce();
        rf
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        RatFun::from_poly(Poly::constant(q))
    }

    pub fn from_int(n: i64) -> Self {
        RatFun::from_poly(Poly::from_int(n))
    }

    pub fn zero() -> Self {
        RatFun::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn t() -> Self {
        RatFun::from_poly(Poly::t())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a constant rational (denominator 1, numerator
    /// of degree 0).
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_one() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        if !self.den.is_one() {
            let g = self.num.gcd(&self.den);
            if !g.is_one() {
                self.num = self.num.exact_div(&g);
                self.den = self.den.exact_div(&g);
            }
        }
        if !self.den.is_monic() {
            let lead = self.den.leading();
            let inv = BigRational::one() / lead;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn recip(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::ScalarDivisionByZero);
        }
        Ok(RatFun::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &RatFun) -> Result<RatFun> {
        Ok(self * &rhs.recip()?)
    }

    /// Substitute `t -> 1/t`.
    pub fn substitute_inverse_t(&self) -> RatFun {
        if self.is_zero() {
            return RatFun::zero();
        }
        let dn = self.num.degree();
        let dd = self.den.degree();
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        // f(1/t) = rev(num) t^dd / (rev(den) t^dn)
        if dd >= dn {
            num = &num * &Poly::monomial(BigRational::one(), dd - dn);
        } else {
            den = &den * &Poly::monomial(BigRational::one(), dn - dd);
        }
        RatFun::new(num, den)
    }

    /// Evaluate at a rational point; errors if the denominator vanishes.
    pub fn eval(&self, t0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(Error::PoleAtSpecialization(t0.to_string()));
        }
        Ok(self.num.eval(t0) / d)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Shared-denominator fast path; dominates in mode-action sums.
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFun::new(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RatFun::new(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFun::new(num, &self.den * &rhs.den);
        }
        let da = self.den.exact_div(&g);
        let db = rhs.den.exact_div(&g);
        let num = &(&self.num * &db) + &(&rhs.num * &da);
        RatFun::new(num, &self.den * &db)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // Cross-cancel before multiplying to keep degrees small.
        let g1 = if rhs.den.is_one() {
            Poly::one()
        } else {
            self.num.gcd(&rhs.den)
        };
        let g2 = if self.den.is_one() {
            Poly::one()
        } else {
            rhs.num.gcd(&self.den)
        };
        let na = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.exact_div(&g1)
        };
        let nb = if g2.is_one() {
            rhs.num.clone()
        } else {
            rhs.num.exact_div(&g2)
        };
        let da = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.exact_div(&g2)
        };
        let db = if g1.is_one() {
            rhs.den.clone()
        } else {
            rhs.den.exact_div(&g1)
        };
        let mut out = RatFun {
            num: &na * &nb,
            den: &da * &db,
        };
        // Cross-cancelled parts are already coprime; only the leading
        // coefficient may need normalising.
        if !out.den.is_monic() {
            let lead = out.den.leading();
            let inv = BigRational::one() / lead;
            out.num = out.num.scale(&inv);
            out.den = out.den.scale(&inv);
        }
        out
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        &self + &rhs
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        &self - &rhs
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}
