//! Elements of `Q(zeta_m)(t)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclo::{self, Q};
use super::poly::{self, Poly};
use super::ArithError;

/// A reduced fraction `num/den` of polynomials in the formal parameter `t`
/// over `Q(zeta_m)`, with `den` monic and coprime to `num`.
#[derive(Clone, Debug)]
pub struct Scalar {
    order: u32,
    num: Poly,
    den: Poly,
}

impl Scalar {
    fn raw(order: u32, num: Poly, den: Poly) -> Self {
        Scalar { order, num, den }
    }

    fn normalized(order: u32, num: Poly, den: Poly) -> Self {
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return Scalar::raw(order, Vec::new(), poly::one());
        }
        if poly::is_constant(&den) {
            if poly::is_one(&den) {
                return Scalar::raw(order, num, den);
            }
            let c = cyclo::inv(&den[0], order).unwrap();
            return Scalar::raw(order, poly::scale(&num, &c, order), poly::one());
        }
        let g = poly::gcd(&num, &den, order);
        let (num, den) = if poly::is_one(&g) {
            (num, den)
        } else {
            (
                poly::divrem(&num, &g, order).0,
                poly::divrem(&den, &g, order).0,
            )
        };
        let lead = den.last().unwrap();
        if lead.len() == 1 && lead[0].is_one() {
            Scalar::raw(order, num, den)
        } else {
            let c = cyclo::inv(lead, order).unwrap();
            Scalar::raw(
                order,
                poly::scale(&num, &c, order),
                poly::scale(&den, &c, order),
            )
        }
    }

    pub fn zero() -> Self {
        Scalar::raw(1, Vec::new(), poly::one())
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(Q::from_integer(n.into()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_rational(Q::new(n.into(), d.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar::raw(1, poly::constant(if q.is_zero() { vec![] } else { vec![q] }), poly::one())
    }

    /// `zeta_m^k` for the primitive root `exp(2 pi i / m)`.
    pub fn zeta(m: u32, k: i64) -> Result<Self, ArithError> {
        check_order(m)?;
        Ok(Scalar::raw(m, poly::constant(cyclo::zeta_pow(k, m)), poly::one()))
    }

    /// The formal parameter `t`.
    pub fn t() -> Self {
        Scalar::raw(1, vec![Vec::new(), vec![Q::one()]], poly::one())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        poly::is_one(&self.num) && poly::is_one(&self.den)
    }

    /// True when independent of `t`.
    pub fn is_constant(&self) -> bool {
        poly::is_constant(&self.num) && poly::is_constant(&self.den)
    }

    /// True when in `Q` (no `t`, no `zeta`).
    pub fn is_rational(&self) -> bool {
        self.is_constant() && self.num.first().is_none_or(|c| cyclo::is_rational(c))
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if !self.is_rational() {
            return None;
        }
        Some(self.num.first().map_or_else(Q::zero, |c| c[0].clone()))
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_rational()
            .filter(|q| q.is_integer())
            .and_then(|q| q.numer().to_i64())
    }

    /// Drop to the smallest order containing the value among divisors of the
    /// current order, when possible. Only rational values are collapsed.
    pub fn lifted(&self, to: u32) -> Self {
        if self.order == to {
            return self.clone();
        }
        debug_assert_eq!(to % self.order, 0);
        Scalar::raw(
            to,
            poly::lift(&self.num, self.order, to),
            poly::lift(&self.den, self.order, to),
        )
    }

    fn common(&self, other: &Self) -> (u32, Self, Self) {
        if self.order == other.order {
            return (self.order, self.clone(), other.clone());
        }
        let m = cyclo::lcm(self.order, other.order);
        (m, self.lifted(m), other.lifted(m))
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Scalar::normalized(self.order, self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Substitute a constant for `t`. Fails if a denominator vanishes.
    pub fn eval_t(&self, v: &Scalar) -> Result<Scalar, ArithError> {
        let horner = |p: &Poly| {
            let mut acc = Scalar::zero();
            for c in p.iter().rev() {
                acc = &(&acc * v) + &Scalar::raw(self.order, poly::constant(c.clone()), poly::one());
            }
            acc
        };
        &horner(&self.num) / &horner(&self.den)
    }

    /// Field checked division.
    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        self / other
    }

    /// Degree of the numerator minus degree of the denominator; `None` for zero.
    pub fn t_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.num.len() as i64 - self.den.len() as i64)
        }
    }

    /// Number of digits in the largest coefficient, a rough size measure.
    pub fn height(&self) -> usize {
        self.num
            .iter()
            .chain(self.den.iter())
            .flatten()
            .map(|q| q.numer().bits().max(q.denom().bits()) as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn abs_rational(&self) -> Option<BigRational> {
        self.to_rational().map(|q| q.abs())
    }
}

pub(crate) fn check_order(m: u32) -> Result<(), ArithError> {
    if m == 0 || m > cyclo::MAX_ORDER {
        Err(ArithError::UnsupportedOrder(m))
    } else {
        Ok(())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.num == other.num && self.den == other.den;
        }
        let (_, a, b) = self.common(other);
        a.num == b.num && a.den == b.den
    }
}

impl Eq for Scalar {}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (m, a, b) = self.common(rhs);
        if poly::is_one(&a.den) && poly::is_one(&b.den) {
            return Scalar::raw(m, poly::add(&a.num, &b.num), poly::one());
        }
        if a.den == b.den {
            return Scalar::normalized(m, poly::add(&a.num, &b.num), a.den);
        }
        let num = poly::add(&poly::mul(&a.num, &b.den, m), &poly::mul(&b.num, &a.den, m));
        let den = poly::mul(&a.den, &b.den, m);
        // Both inputs are reduced with monic denominators; coprime
        // denominators leave nothing to cancel.
        if !num.is_empty() && poly::is_one(&poly::gcd(&a.den, &b.den, m)) {
            return Scalar::raw(m, num, den);
        }
        Scalar::normalized(m, num, den)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::raw(self.order, poly::neg(&self.num), self.den.clone())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let (m, a, b) = self.common(rhs);
        if poly::is_one(&a.den) && poly::is_one(&b.den) {
            return Scalar::raw(m, poly::mul(&a.num, &b.num, m), poly::one());
        }
        Scalar::normalized(
            m,
            poly::mul(&a.num, &b.num, m),
            poly::mul(&a.den, &b.den, m),
        )
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Result<Scalar, ArithError>;
    fn div(self, rhs: &Scalar) -> Result<Scalar, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        let (m, a, b) = self.common(rhs);
        Ok(Scalar::normalized(
            m,
            poly::mul(&a.num, &b.den, m),
            poly::mul(&a.den, &b.num, m),
        ))
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = poly::fmt(&self.num);
        if poly::is_one(&self.den) {
            return f.write_str(&num);
        }
        let den = poly::fmt(&self.den);
        let wrap = |s: String| {
            if s.contains(' ') || s.contains('/') {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(num), wrap(den))
    }
}
