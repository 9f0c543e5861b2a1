//! Exact values in a real quadratic extension `Q(sqrt(D))`.
//!
//! Specializing a [`super::Scalar`] at a rational `t = t0 > 0` lands here:
//! the value is `a + b*sqrt(D)` with `D` the squarefree part of `1/t0`.
//! When `1/t0` is a perfect rational square the value collapses to an exact
//! rational.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b * sqrt(radicand)` with `radicand` a squarefree positive integer.
///
/// Values with `b = 0` carry `radicand = 1`, so equality is componentwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quad {
    pub a: BigRational,
    pub b: BigRational,
    pub radicand: BigUint,
}

impl Quad {
    pub fn rational(a: BigRational) -> Self {
        Quad {
            a,
            b: BigRational::zero(),
            radicand: BigUint::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Quad::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Quad::from_int(0)
    }

    pub fn one() -> Self {
        Quad::from_int(1)
    }

    /// `c * sqrt(r)` for a non-negative rational `r`, normalised so the
    /// radicand is a squarefree integer.
    pub fn sqrt_of_rational(c: BigRational, r: &BigRational) -> Self {
        assert!(!r.is_negative(), "negative radicand");
        if r.is_zero() || c.is_zero() {
            return Quad::zero();
        }
        // sqrt(p/q) = sqrt(p*q)/q
        let p = r.numer().magnitude().clone();
        let q = r.denom().magnitude().clone();
        let mut rad = &p * &q;
        let mut scale = BigRational::new(BigInt::one(), BigInt::from(q));
        let s = extract_square_part(&mut rad);
        scale *= BigRational::from_integer(BigInt::from(s));
        if rad.is_one() {
            Quad::rational(c * scale)
        } else {
            Quad {
                a: BigRational::zero(),
                b: c * scale,
                radicand: rad,
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn same_field(&self, rhs: &Quad) -> BigUint {
        if self.b.is_zero() {
            return rhs.radicand.clone();
        }
        if rhs.b.is_zero() {
            return self.radicand.clone();
        }
        assert_eq!(
            self.radicand, rhs.radicand,
            "mixed quadratic extensions in arithmetic"
        );
        self.radicand.clone()
    }

    pub fn recip(&self) -> Quad {
        assert!(!self.is_zero(), "division by zero Quad");
        if self.b.is_zero() {
            return Quad::rational(BigRational::one() / self.a.clone());
        }
        let d = BigRational::from_integer(BigInt::from(self.radicand.clone()));
        let norm = &self.a * &self.a - &self.b * &self.b * d;
        // norm != 0 because radicand is squarefree > 1
        Quad {
            a: &self.a / &norm,
            b: -(&self.b / &norm),
            radicand: self.radicand.clone(),
        }
    }

    pub fn div(&self, rhs: &Quad) -> Quad {
        self * &rhs.recip()
    }

    /// Decimal approximation good to `bits` bits, as a rational.
    pub fn approximate(&self, bits: u32) -> BigRational {
        if self.b.is_zero() {
            return self.a.clone();
        }
        let sqrt = sqrt_approx(&self.radicand, bits + 8);
        &self.a + &self.b * sqrt
    }

    /// Decimal string with roughly `bits` bits of precision.
    pub fn to_decimal_string(&self, bits: u32) -> String {
        let digits = ((bits as f64) * 0.30103).ceil() as u32 + 1;
        decimal_string(&self.approximate(bits), digits as usize)
    }
}

/// Remove the largest square factor of `n` (by trial division; inputs are
/// desk-scale) and return its square root.
fn extract_square_part(n: &mut BigUint) -> u64 {
    let mut s: u64 = 1;
    let mut p: u64 = 2;
    loop {
        let pp = BigUint::from(p) * BigUint::from(p);
        if &pp > n {
            break;
        }
        while (&*n % &pp).is_zero() {
            *n /= &pp;
            s *= p;
        }
        p += 1;
        if p > 1_000_000 {
            break;
        }
    }
    s
}

/// Floor of `2^bits * sqrt(n)` over `2^bits`, so the error is below `2^-bits`.
fn sqrt_approx(n: &BigUint, bits: u32) -> BigRational {
    let scaled = n << (2 * bits as usize);
    let root = scaled.sqrt();
    BigRational::new(BigInt::from(root), BigInt::from(BigUint::one() << bits as usize))
}

/// Fixed-point decimal rendering of a rational.
pub fn decimal_string(x: &BigRational, digits: usize) -> String {
    let neg = x.is_negative();
    let ax = x.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (ax.numer() * &scale) / ax.denom();
    let s = scaled.to_string();
    let (int_part, frac_part) = if s.len() > digits {
        (s[..s.len() - digits].to_string(), s[s.len() - digits..].to_string())
    } else {
        ("0".to_string(), format!("{:0>width$}", s, width = digits))
    };
    let sign = if neg { "-" } else { "" };
    format!("{sign}{int_part}.{frac_part}")
}

impl Add for &Quad {
    type Output = Quad;
    fn add(self, rhs: &Quad) -> Quad {
        let rad = self.same_field(rhs);
        let b = &self.b + &rhs.b;
        Quad {
            a: &self.a + &rhs.a,
            radicand: if b.is_zero() { BigUint::one() } else { rad },
            b,
        }
    }
}

impl Sub for &Quad {
    type Output = Quad;
    fn sub(self, rhs: &Quad) -> Quad {
        self + &(-rhs)
    }
}

impl Mul for &Quad {
    type Output = Quad;
    fn mul(self, rhs: &Quad) -> Quad {
        let rad = self.same_field(rhs);
        let d = BigRational::from_integer(BigInt::from(rad.clone()));
        let a = &self.a * &rhs.a + (&self.b * &rhs.b) * d;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Quad {
            a,
            radicand: if b.is_zero() { BigUint::one() } else { rad },
            b,
        }
    }
}

impl Neg for &Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad {
            a: -self.a.clone(),
            b: -self.b.clone(),
            radicand: self.radicand.clone(),
        }
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = format!("sqrt({})", self.radicand);
        let bpart = if self.b.is_one() {
            root
        } else if (-self.b.clone()).is_one() {
            format!("-{root}")
        } else {
            format!("{}*{}", self.b, root)
        };
        if self.a.is_zero() {
            write!(f, "{bpart}")
        } else if self.b.is_negative() {
            write!(f, "{} - {}", self.a, bpart.trim_start_matches('-'))
        } else {
            write!(f, "{} + {}", self.a, bpart)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sqrt_of_square_collapses() {
        // sqrt(9/4) = 3/2 exactly
        let v = Quad::sqrt_of_rational(BigRational::one(), &q(9, 4));
        assert!(v.is_rational());
        assert_eq!(v.a, q(3, 2));
    }

    #[test]
    fn sqrt_five_quarters() {
        // sqrt(5/4) = (1/2) sqrt(5)
        let v = Quad::sqrt_of_rational(BigRational::one(), &q(5, 4));
        assert_eq!(v.b, q(1, 2));
        assert_eq!(v.radicand, BigUint::from(5u32));
        // squares back to 5/4
        let sq = &v * &v;
        assert!(sq.is_rational());
        assert_eq!(sq.a, q(5, 4));
    }

    #[test]
    fn reciprocal() {
        let v = Quad::sqrt_of_rational(q(1, 2), &q(5, 4)); // sqrt(5)/4
        let inv = v.recip();
        assert_eq!(&v * &inv, Quad::one());
    }

    #[test]
    fn decimal_rendering() {
        let v = Quad::sqrt_of_rational(BigRational::one(), &q(5, 1));
        let s = v.to_decimal_string(64);
        assert!(s.starts_with("2.2360679"));
        assert_eq!(decimal_string(&q(-5, 4), 3), "-1.250");
    }
}
