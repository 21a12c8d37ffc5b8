//! Exact Gaussian-rational scalars.
//!
//! [`Rational`] keeps an inline `i64/i64` representation and promotes to
//! [`BigRational`] only when an intermediate leaves that range, so the bulk of
//! the arithmetic (small integers and small denominators) never allocates.
//! [`Scalar`] is `re + im·i` over two rationals.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseScalarError;

#[derive(Clone)]
enum Repr {
    /// Reduced, `den > 0`.
    Small { num: i64, den: i64 },
    /// Only used when the reduced value does not fit `Small`.
    Big(Box<BigRational>),
}

/// An exact rational number in lowest terms with a positive denominator.
#[derive(Clone)]
pub struct Rational(Repr);

impl Rational {
    pub const ZERO: Rational = Rational(Repr::Small { num: 0, den: 1 });
    pub const ONE: Rational = Rational(Repr::Small { num: 1, den: 1 });

    pub fn from_integer(n: i64) -> Self {
        Rational(Repr::Small { num: n, den: 1 })
    }

    /// `num / den`; panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let (mut num, mut den) = (num, den);
        if den != 1 {
            let g = num.gcd(&den);
            if g != 1 && g != 0 {
                num /= g;
                den /= g;
            }
            if den < 0 {
                num = -num;
                den = -den;
            }
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small { num: n, den: d }),
            _ => Rational(Repr::Big(Box::new(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            )))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small { num: n, den: d }),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small { num, .. } => num.signum() as i32,
            Repr::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn recip(&self) -> Option<Rational> {
        match &self.0 {
            Repr::Small { num: 0, .. } => None,
            Repr::Small { num, den } => Some(Self::from_i128(*den as i128, *num as i128)),
            Repr::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    /// Exact cube root when `self` is the cube of a rational.
    pub fn cube_root(&self) -> Option<Rational> {
        let n = self.numer();
        let d = self.denom();
        let rn = n.cbrt();
        let rd = d.cbrt();
        if &rn * &rn * &rn == n && &rd * &rd * &rd == d {
            Some(Self::from_big(BigRational::new(rn, rd)))
        } else {
            None
        }
    }

    fn add_ref(&self, other: &Rational) -> Rational {
        if let (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) = (&self.0, &other.0)
        {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == 1 && d == 1 {
                return Self::from_i128(a + c, 1);
            }
            if b == d {
                return Self::from_i128(a + c, b);
            }
            return Self::from_i128(a * d + c * b, b * d);
        }
        Self::from_big(self.to_big() + other.to_big())
    }

    fn mul_ref(&self, other: &Rational) -> Rational {
        if let (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) = (&self.0, &other.0)
        {
            if *a == 0 || *c == 0 {
                return Rational::ZERO;
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            return Self::from_i128(a * c, b * d);
        }
        if self.is_zero() || other.is_zero() {
            return Rational::ZERO;
        }
        Self::from_big(self.to_big() * other.to_big())
    }

    fn neg_ref(&self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => Self::from_i128(-(*num as i128), *den as i128),
            Repr::Big(b) => Self::from_big(-(**b).clone()),
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        // Both sides are canonical, so structural equality is value equality.
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small { num, den } => {
                num.hash(state);
                den.hash(state);
            }
            Repr::Big(b) => b.hash(state),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) = (&self.0, &other.0)
        {
            return (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128));
        }
        self.to_big().cmp(&other.to_big())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseScalarError;

    /// `[-]digits[/digits]`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseScalarError(s.to_string());
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = num.strip_prefix('-').unwrap_or(num);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n: BigInt = num.parse().map_err(|_| bad())?;
        let d: BigInt = match den {
            Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
                d.parse().map_err(|_| bad())?
            }
            Some(_) => return Err(bad()),
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Self::from_big(BigRational::new(n, d)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

/// An element of the Gaussian rationals ℚ(i): `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

impl Scalar {
    pub const ZERO: Scalar = Scalar { re: Rational::ZERO, im: Rational::ZERO };
    pub const ONE: Scalar = Scalar { re: Rational::ONE, im: Rational::ZERO };
    pub const I: Scalar = Scalar { re: Rational::ZERO, im: Rational::ONE };

    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: Rational::from_integer(n), im: Rational::ZERO }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar { re: Rational::new(num, den), im: Rational::ZERO }
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar { re: Rational::from_integer(re), im: Rational::from_integer(im) }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate (unrelated to composition-algebra conjugation).
    pub fn conj(&self) -> Scalar {
        Scalar { re: self.re.clone(), im: self.im.neg_ref() }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.im.is_zero() {
            return self.re.recip().map(|re| Scalar { re, im: Rational::ZERO });
        }
        let n = self.re.mul_ref(&self.re).add_ref(&self.im.mul_ref(&self.im));
        let ninv = n.recip()?;
        Some(Scalar { re: self.re.mul_ref(&ninv), im: self.im.neg_ref().mul_ref(&ninv) })
    }

    pub fn scale_int(&self, k: i64) -> Scalar {
        self * &Scalar::from_int(k)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact cube root for real rational cubes.
    pub fn real_cube_root(&self) -> Option<Scalar> {
        if !self.is_real() {
            return None;
        }
        if self.re.signum() < 0 {
            return self.re.neg_ref().cube_root().map(|r| Scalar { re: r.neg_ref(), im: Rational::ZERO });
        }
        self.re.cube_root().map(|re| Scalar { re, im: Rational::ZERO })
    }

    fn add_ref(&self, o: &Scalar) -> Scalar {
        Scalar { re: self.re.add_ref(&o.re), im: self.im.add_ref(&o.im) }
    }

    fn sub_ref(&self, o: &Scalar) -> Scalar {
        Scalar { re: self.re.add_ref(&o.re.neg_ref()), im: self.im.add_ref(&o.im.neg_ref()) }
    }

    fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.im.is_zero() && o.im.is_zero() {
            return Scalar { re: self.re.mul_ref(&o.re), im: Rational::ZERO };
        }
        let re = self.re.mul_ref(&o.re).add_ref(&self.im.mul_ref(&o.im).neg_ref());
        let im = self.re.mul_ref(&o.im).add_ref(&self.im.mul_ref(&o.re));
        Scalar { re, im }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::ZERO
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar { re: r, im: Rational::ZERO }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$imp(rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$imp(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$imp(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: self.re.neg_ref(), im: self.im.neg_ref() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.add_ref(&rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.sub_ref(rhs);
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = self.sub_ref(&rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ONE, |acc, x| acc * x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.signum() < 0 {
            write!(f, "{}-{}i", self.re, self.im.neg_ref())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// `<rat>`, `<rat>i`, or `<rat>(+|-)<rat>i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ParseScalarError(s.to_string());
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Scalar::from(t.parse::<Rational>()?));
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let parse_im = |txt: &str| -> Result<Rational, ParseScalarError> {
            match txt {
                "" | "+" => Ok(Rational::ONE),
                "-" => Ok(Rational::from_integer(-1)),
                _ => txt.strip_prefix('+').unwrap_or(txt).parse::<Rational>().map_err(|_| bad()),
            }
        };
        match split {
            Some(i) => {
                let re = body[..i].parse::<Rational>().map_err(|_| bad())?;
                let im = parse_im(&body[i..])?;
                Ok(Scalar { re, im })
            }
            None => Ok(Scalar { re: Rational::ZERO, im: parse_im(body)? }),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_forms() {
        for s in ["0", "-3", "2/3", "-7/4", "5i", "-1/2i", "1+2i", "1/2-3/4i", "-2+1/3i"] {
            assert_eq!(q(s).to_string(), s);
        }
        assert_eq!(q("0/1"), Scalar::ZERO);
        assert_eq!(q("4/6").to_string(), "2/3");
        assert_eq!(q("i"), Scalar::I);
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
        assert!("1.5".parse::<Scalar>().is_err());
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Scalar::I * &Scalar::I, Scalar::from_int(-1));
    }

    #[test]
    fn promotes_past_i64_and_demotes_back() {
        let big = Scalar::from_int(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.re().numer(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let back = &sq / &big;
        assert_eq!(back, big);
        let tiny = Scalar::from_ratio(1, i64::MAX);
        assert_eq!(&(&tiny * &tiny) * &sq, Scalar::ONE);
    }

    #[test]
    fn inverse_of_gaussian() {
        let z = q("3-4i");
        assert_eq!(&z * &z.inv().unwrap(), Scalar::ONE);
        assert!(Scalar::ZERO.inv().is_none());
    }

    #[test]
    fn cube_roots() {
        assert_eq!(q("-8/27").real_cube_root(), Some(q("-2/3")));
        assert_eq!(q("2").real_cube_root(), None);
    }

    #[test]
    fn ordering_mixes_representations() {
        let a = Rational::from_integer(i64::MAX);
        let b = a.mul_ref(&Rational::from_integer(2));
        assert!(a < b);
        assert!(Rational::new(-1, 3) < Rational::new(-1, 4));
    }
}
