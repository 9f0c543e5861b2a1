//! Exact coefficient arithmetic in the field `Q(t)[a] / (a^2 t - 1)`.
//!
//! Every coefficient in this crate is a [`Scalar`]: a rational function of
//! the Jack parameter `t` plus a rational-function multiple of the
//! distinguished square root `a` with `a^2 = 1/t`.  The screening constants
//! live here:
//!
//! - `alpha_plus = a`
//! - `alpha_minus = -t a`
//! - `alpha_zero = (1 - t) a`
//!
//! so that `alpha_plus * alpha_minus = -1` and
//! `alpha_plus + alpha_minus = alpha_zero`.
//!
//! Scalars are immutable values; all operations are pure and exact.

mod parse;
mod poly;
mod quad;
mod ratfun;

pub use poly::Poly;
pub use quad::{decimal_string, Quad};
pub use ratfun::RatFun;

use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// An element `a(t) + b(t) * a` of `Q(t)` adjoined `a` with `a^2 = 1/t`.
///
/// Both components are kept in canonical form, so a Scalar is zero exactly
/// when both components are zero and equality is syntactic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scalar {
    a: RatFun,
    b: RatFun,
}

impl Scalar {
    pub fn new(a: RatFun, b: RatFun) -> Self {
        Scalar { a, b }
    }

    pub fn zero() -> Self {
        Scalar::new(RatFun::zero(), RatFun::zero())
    }

    pub fn one() -> Self {
        Scalar::new(RatFun::one(), RatFun::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(RatFun::from_int(n), RatFun::zero())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar::new(RatFun::from_rational(q), RatFun::zero())
    }

    pub fn from_ratfun(f: RatFun) -> Self {
        Scalar::new(f, RatFun::zero())
    }

    /// The parameter `t`.
    pub fn t() -> Self {
        Scalar::from_ratfun(RatFun::t())
    }

    /// `t^k` for any integer `k`.
    pub fn t_power(k: i64) -> Self {
        let f = if k >= 0 {
            RatFun::from_poly(Poly::monomial(num_traits::One::one(), k as usize))
        } else {
            RatFun::new(Poly::one(), Poly::monomial(num_traits::One::one(), (-k) as usize))
        };
        Scalar::from_ratfun(f)
    }

    /// The distinguished square root `a` with `a^2 = 1/t`; equals `alpha_+`.
    pub fn alpha() -> Self {
        Scalar::new(RatFun::zero(), RatFun::one())
    }

    pub fn alpha_plus() -> Self {
        Scalar::alpha()
    }

    /// `alpha_- = -t a`, the other root of `x^2 - alpha_0 x - 1`.
    pub fn alpha_minus() -> Self {
        Scalar::new(RatFun::zero(), -&RatFun::t())
    }

    /// `alpha_0 = alpha_+ + alpha_- = (1 - t) a`.
    pub fn alpha_zero() -> Self {
        let one_minus_t = &RatFun::one() - &RatFun::t();
        Scalar::new(RatFun::zero(), one_minus_t)
    }

    /// Rational-function component without `a`.
    pub fn plain_part(&self) -> &RatFun {
        &self.a
    }

    /// Coefficient of `a`.
    pub fn root_part(&self) -> &RatFun {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Some(q) when the value is the constant rational `q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.b.is_zero() {
            self.a.as_rational()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::ScalarDivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(Scalar::new(self.a.recip()?, RatFun::zero()));
        }
        // 1/(a + b r) = (a - b r) / (a^2 - b^2 / t); the norm cannot vanish
        // for nonzero input because 1/t is not a square in Q(t).
        let inv_t = RatFun::new(Poly::one(), Poly::t());
        let norm = &(&self.a * &self.a) - &(&(&self.b * &self.b) * &inv_t);
        let ninv = norm.recip()?;
        Ok(Scalar::new(&self.a * &ninv, -&(&self.b * &ninv)))
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.recip()?)
    }

    /// Integer powers, negative allowed for nonzero values.
    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut out = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// The field automorphism sending `t -> 1/t` and `alpha_+ -> alpha_-`,
    /// i.e. `a -> -t a`.  Swaps the two screening families.
    pub fn swap_alpha(&self) -> Scalar {
        let a = self.a.substitute_inverse_t();
        let b = self.b.substitute_inverse_t();
        let minus_t = -&RatFun::t();
        Scalar::new(a, &b * &minus_t)
    }

    /// Evaluate both components at a rational `t0`, without touching the
    /// square root.
    pub fn eval_components(&self, t0: &BigRational) -> Result<(BigRational, BigRational)> {
        Ok((self.a.eval(t0)?, self.b.eval(t0)?))
    }

    /// Exact evaluation at `t = t0 > 0`, with `a` sent to
    /// `sign * sqrt(1/t0)`.
    pub fn eval_quad(&self, t0: &BigRational, sign: i8) -> Result<Quad> {
        if !t0.is_positive() {
            return Err(Error::ParameterOutsideDomain(t0.to_string()));
        }
        let (a0, b0) = self.eval_components(t0)?;
        let inv_t0 = BigRational::new(t0.denom().clone(), t0.numer().clone());
        let signed = if sign < 0 { -b0 } else { b0 };
        Ok(&Quad::rational(a0) + &Quad::sqrt_of_rational(signed, &inv_t0))
    }

    /// Specialize to a high-precision real value; exact when `1/t0` is a
    /// perfect rational square.
    pub fn specialize(&self, t0: &BigRational, sign: i8, bits: u32) -> Result<Specialized> {
        let q = self.eval_quad(t0, sign)?;
        if q.is_rational() {
            Ok(Specialized::Exact(q.a))
        } else {
            Ok(Specialized::Real { value: q, bits })
        }
    }
}

/// Result of [`Scalar::specialize`]: an exact rational when possible,
/// otherwise an exact quadratic value rendered to the requested precision.
#[derive(Clone, Debug, PartialEq)]
pub enum Specialized {
    Exact(BigRational),
    Real { value: Quad, bits: u32 },
}

impl fmt::Display for Specialized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialized::Exact(q) => write!(f, "{q}"),
            Specialized::Real { value, bits } => write!(f, "{}", value.to_decimal_string(*bits)),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        // (a1 + b1 r)(a2 + b2 r) = a1 a2 + b1 b2 / t + (a1 b2 + a2 b1) r
        let mut plain = &self.a * &rhs.a;
        if !self.b.is_zero() && !rhs.b.is_zero() {
            let inv_t = RatFun::new(Poly::one(), Poly::t());
            plain = &plain + &(&(&self.b * &rhs.b) * &inv_t);
        }
        let root = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        Scalar::new(plain, root)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.a, -&self.b)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn poly_to_string(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let unit = num_traits::One::is_one(&mag);
        match (k, unit) {
            (0, _) => out.push_str(&mag.to_string()),
            (1, true) => out.push('t'),
            (1, false) => out.push_str(&format!("{mag}*t")),
            (_, true) => out.push_str(&format!("t^{k}")),
            (_, false) => out.push_str(&format!("{mag}*t^{k}")),
        }
    }
    out
}

fn poly_is_atom(p: &Poly) -> bool {
    // a single term with positive coefficient prints without parentheses
    let nonzero: Vec<_> = p.coeffs().iter().filter(|c| !c.is_zero()).collect();
    nonzero.len() == 1 && !nonzero[0].is_negative()
}

fn ratfun_to_string(f: &RatFun) -> String {
    if f.denominator().is_one() {
        poly_to_string(f.numerator())
    } else {
        format!(
            "({})/({})",
            poly_to_string(f.numerator()),
            poly_to_string(f.denominator())
        )
    }
}

/// Rendering safe to juxtapose with `*a`.
fn ratfun_atom(f: &RatFun) -> String {
    if f.denominator().is_one() {
        if poly_is_atom(f.numerator()) {
            poly_to_string(f.numerator())
        } else {
            format!("({})", poly_to_string(f.numerator()))
        }
    } else if poly_is_atom(f.numerator()) {
        format!(
            "{}/({})",
            poly_to_string(f.numerator()),
            poly_to_string(f.denominator())
        )
    } else {
        format!(
            "({})/({})",
            poly_to_string(f.numerator()),
            poly_to_string(f.denominator())
        )
    }
}

impl fmt::Display for Scalar {
    /// Renders `p(t) + q(t)*a`; the output parses back via [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.b.is_zero() {
            return write!(f, "{}", ratfun_to_string(&self.a));
        }
        let bpart = if self.b.is_one() {
            "a".to_string()
        } else {
            format!("{}*a", ratfun_atom(&self.b))
        };
        if self.a.is_zero() {
            write!(f, "{bpart}")
        } else {
            write!(f, "{} + {}", ratfun_to_string(&self.a), bpart)
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        parse::parse_scalar(s)
    }
}
