use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use crate::error::{Error, Result};

/// An element of `Q(q)`, stored canonically as `q^shift * num / den` where
///
/// * `num` and `den` are coprime and neither is divisible by `q`,
/// * `den` has constant term 1,
/// * zero is `num = 0, den = 1, shift = 0`.
///
/// Structural equality is therefore mathematical equality. Laurent
/// polynomials are exactly the values with `den = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalQ {
    shift: i64,
    num: Poly,
    den: Poly,
}

impl RationalQ {
    pub fn zero() -> Self {
        RationalQ { shift: 0, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RationalQ::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        RationalQ::from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        if c.is_zero() {
            return RationalQ::zero();
        }
        RationalQ { shift: 0, num: Poly::constant(c), den: Poly::one() }
    }

    /// `q^k` for any integer `k`.
    pub fn q_power(k: i64) -> Self {
        RationalQ { shift: k, num: Poly::one(), den: Poly::one() }
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        RationalQ::from_int(c).mul_q_power(k)
    }

    /// `q^shift * p`.
    pub fn from_laurent(p: Poly, shift: i64) -> Self {
        if p.is_zero() {
            return RationalQ::zero();
        }
        let low = p.low_order();
        RationalQ { shift: shift + low as i64, num: p.shift_down(low), den: Poly::one() }
    }

    /// Laurent polynomial from `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(RationalQ::zero(), |acc, &(e, c)| &acc + &RationalQ::monomial(c, e))
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalQ::from_laurent(p, 0)
    }

    /// Reduce `q^shift * num / den` to canonical form.
    pub fn from_fraction(num: Poly, den: Poly, shift: i64) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalQ::zero());
        }
        let (ln, ld) = (num.low_order(), den.low_order());
        let (num, den) = (num.shift_down(ln), den.shift_down(ld));
        let shift = shift + ln as i64 - ld as i64;
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let c0 = den.coeff(0).recip();
        Ok(RationalQ { shift, num: num.scale(&c0), den: den.scale(&c0) })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True iff the value lies in `Q[q, q^-1]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// True iff the value lies in `Q[q]`.
    pub fn is_polynomial_in_q(&self) -> bool {
        self.is_zero() || (self.den.is_one() && self.shift >= 0)
    }

    /// True iff the value has no pole at `q = 0`.
    pub fn is_regular_at_zero(&self) -> bool {
        self.is_zero() || self.shift >= 0
    }

    /// The specialization `q -> 0`.
    pub fn value_at_zero(&self) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        match self.shift.cmp(&0) {
            Ordering::Less => Err(Error::PoleAtZero(self.to_string())),
            Ordering::Greater => Ok(BigRational::zero()),
            // den(0) = 1 by normalization
            Ordering::Equal => Ok(self.num.coeff(0)),
        }
    }

    /// Evaluate at a nonzero rational point (or at zero through
    /// [`value_at_zero`](Self::value_at_zero)).
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() {
            return self.value_at_zero();
        }
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let xs = num_traits::pow::Pow::pow(x, self.shift as i32);
        Ok(self.num.eval(x) * xs / d)
    }

    /// Coefficient of `q^k`, for Laurent values only.
    pub fn laurent_coeff(&self, k: i64) -> Option<BigRational> {
        if !self.is_laurent() {
            return None;
        }
        let idx = k - self.shift;
        Some(if idx < 0 { BigRational::zero() } else { self.num.coeff(idx as usize) })
    }

    /// Lowest and highest exponents of a nonzero Laurent value.
    pub fn laurent_range(&self) -> Option<(i64, i64)> {
        if self.is_zero() || !self.is_laurent() {
            return None;
        }
        Some((self.shift, self.shift + self.num.degree().unwrap() as i64))
    }

    pub fn mul_q_power(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        RationalQ { shift: self.shift + k, num: self.num.clone(), den: self.den.clone() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        if c == 0 {
            return RationalQ::zero();
        }
        let c = BigRational::from_integer(BigInt::from(c));
        RationalQ { shift: self.shift, num: self.num.scale(&c), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalQ::from_fraction(self.den.clone(), self.num.clone(), -self.shift)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(RationalQ::one(), |acc, _| &acc * self)
    }

    fn add_impl(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let m = self.shift.min(other.shift);
        let a = self.num.shift_up((self.shift - m) as usize);
        let b = other.num.shift_up((other.shift - m) as usize);
        if self.den == other.den {
            if self.den.is_one() {
                return RationalQ::from_laurent(a.add(&b), m);
            }
            return RationalQ::from_fraction(a.add(&b), self.den.clone(), m).expect("nonzero den");
        }
        let num = a.mul(&other.den).add(&b.mul(&self.den));
        RationalQ::from_fraction(num, self.den.mul(&other.den), m).expect("nonzero den")
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalQ::zero();
        }
        let shift = self.shift + other.shift;
        if self.den.is_one() && other.den.is_one() {
            // product of q-free polynomials over a field stays q-free
            return RationalQ { shift, num: self.num.mul(&other.num), den: Poly::one() };
        }
        RationalQ::from_fraction(self.num.mul(&other.num), self.den.mul(&other.den), shift)
            .expect("nonzero den")
    }
}

/// The q-integer `[m] = (q^m - q^-m) / (q - q^-1)`, `m >= 0`.
pub fn q_int(m: i64) -> Result<RationalQ> {
    if m < 0 {
        return Err(Error::NegativeQInt(m));
    }
    Ok(q_int_signed(m))
}

/// `[m]` extended to negative `m` by `[-m] = -[m]`.
pub(crate) fn q_int_signed(m: i64) -> RationalQ {
    let terms: Vec<(i64, i64)> = (0..m.abs()).map(|j| (m.abs() - 1 - 2 * j, m.signum())).collect();
    RationalQ::from_terms(&terms)
}

/// `[m]! = [m][m-1]...[1]`.
pub fn q_factorial(m: i64) -> Result<RationalQ> {
    if m < 0 {
        return Err(Error::NegativeQInt(m));
    }
    (1..=m).try_fold(RationalQ::one(), |acc, j| Ok(&acc * &q_int(j)?))
}

pub fn q_power(k: i64) -> RationalQ {
    RationalQ::q_power(k)
}

pub fn value_at_zero(x: &RationalQ) -> Result<BigRational> {
    x.value_at_zero()
}

pub fn is_polynomial_in_q(x: &RationalQ) -> bool {
    x.is_polynomial_in_q()
}

pub fn is_laurent(x: &RationalQ) -> bool {
    x.is_laurent()
}

impl Default for RationalQ {
    fn default() -> Self {
        RationalQ::zero()
    }
}

impl<'a> Add<&'a RationalQ> for &'a RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &RationalQ) -> RationalQ {
        self.add_impl(rhs)
    }
}

impl<'a> Sub<&'a RationalQ> for &'a RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &RationalQ) -> RationalQ {
        self.add_impl(&-rhs)
    }
}

impl<'a> Mul<&'a RationalQ> for &'a RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        self.mul_impl(rhs)
    }
}

/// Panics on division by zero; use [`RationalQ::checked_div`] to recover.
impl<'a> Div<&'a RationalQ> for &'a RationalQ {
    type Output = RationalQ;
    fn div(self, rhs: &RationalQ) -> RationalQ {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RationalQ> for RationalQ {
            type Output = RationalQ;
            fn $m(self, rhs: RationalQ) -> RationalQ { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        -&self
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return self.num.fmt_terms(self.shift, f);
        }
        write!(f, "(")?;
        self.num.fmt_terms(self.shift, f)?;
        write!(f, ")/({})", self.den)
    }
}

impl fmt::Debug for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalQ({self})")
    }
}

impl FromStr for RationalQ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_rational_q(s)
    }
}

impl Serialize for RationalQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RationalQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn r(s: &str) -> RationalQ {
        s.parse().unwrap()
    }

    #[test]
    fn q_int_examples() {
        assert!(q_int(0).unwrap().is_zero());
        assert_eq!(q_int(1).unwrap(), RationalQ::one());
        assert_eq!(q_int(2).unwrap(), RationalQ::from_terms(&[(1, 1), (-1, 1)]));
        assert_eq!(q_int(3).unwrap(), RationalQ::from_terms(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(q_int(-1), Err(Error::NegativeQInt(-1)));
    }

    #[test]
    fn q_int_from_defining_fraction() {
        // (q^m - q^-m) / (q - q^-1), computed through the general division path
        let den = &q_power(1) - &q_power(-1);
        for m in 0..=12 {
            let num = &q_power(m) - &q_power(-m);
            assert_eq!(num.checked_div(&den).unwrap(), q_int(m).unwrap(), "m = {m}");
            assert_eq!(&q_int(m).unwrap() * &den, num);
        }
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0).unwrap(), RationalQ::one());
        assert_eq!(q_factorial(1).unwrap(), RationalQ::one());
        assert_eq!(q_factorial(2).unwrap(), q_int(2).unwrap());
        assert_eq!(&q_power(-1) * &q_power(1), RationalQ::one());
    }

    #[test]
    fn value_at_zero_examples() {
        let one = BigRational::one();
        assert_eq!(r("1 - q^2 + q^4").value_at_zero().unwrap(), one);
        assert!(r("q^3").value_at_zero().unwrap().is_zero());
        assert!(matches!(r("q^-1").value_at_zero(), Err(Error::PoleAtZero(_))));
        assert_eq!(r("(2 + q)/(1 - q)").value_at_zero().unwrap(), &one + &one);
    }

    #[test]
    fn recognition_predicates() {
        let a = r("q^3 - q");
        assert!(a.is_polynomial_in_q() && a.is_laurent());
        let b = r("q^-1");
        assert!(!b.is_polynomial_in_q() && b.is_laurent());
        let c = r("1/(1 + q^2)");
        assert!(!c.is_polynomial_in_q() && !c.is_laurent());
        assert!(c.is_regular_at_zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RationalQ::one().checked_div(&RationalQ::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_form_cancels_common_factors() {
        // (1 - q^4) / (1 + q^2) = 1 - q^2
        let x = r("(1 - q^4)/(1 + q^2)");
        assert!(x.is_laurent());
        assert_eq!(x, r("1 - q^2"));
        assert_eq!(r("(2*q)/(4*q^3 + 4*q)"), r("1/(2 + 2*q^2)"));
    }

    #[test]
    fn rendering() {
        assert_eq!(r("q^3 - q").to_string(), "-q + q^3");
        assert_eq!(r("1 - q^2 + q^4").to_string(), "1 - q^2 + q^4");
        assert_eq!(q_int(2).unwrap().to_string(), "q^-1 + q");
        assert_eq!(r("1/(1+q^2)").to_string(), "(1)/(1 + q^2)");
        assert_eq!(RationalQ::zero().to_string(), "0");
        assert_eq!(r("-3/2*q").to_string(), "-3/2*q");
    }
}
