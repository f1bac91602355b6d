//! Exact scalars: rationals, the field ℚ(√2), and its extension by `i`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `2^k` as a rational, for any integer `k`.
pub fn pow2(k: i64) -> Rational {
    let p = Rational::from_integer(BigInt::one() << k.unsigned_abs());
    if k >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Always `numerator/denominator`, so JSON consumers see a single shape.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// The minimal operations the Clifford and super-tensor algebras need from
/// their coefficient field.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_rational(r: Rational) -> Self;
    /// The scalar `1/√2`.
    fn inv_sqrt2() -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }
}

/// An element `a + b√2` of ℚ(√2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgebraicScalar {
    pub rat: Rational,
    pub sqrt2: Rational,
}

impl AlgebraicScalar {
    pub fn new(rat: Rational, sqrt2: Rational) -> Self {
        AlgebraicScalar { rat, sqrt2 }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new(r, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn sqrt2() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// `(√2)^k` for any integer `k`.
    pub fn sqrt2_pow(k: i64) -> Self {
        let half = k.div_euclid(2);
        if k.rem_euclid(2) == 0 {
            Self::from_rational(pow2(half))
        } else {
            Self::new(Rational::zero(), pow2(half))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.sqrt2.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.sqrt2.is_zero()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.rat * r, &self.sqrt2 * r)
    }

    /// Multiplicative inverse via the conjugate `a - b√2`; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let norm = &self.rat * &self.rat - int(2) * &self.sqrt2 * &self.sqrt2;
        if norm.is_zero() {
            return None;
        }
        Some(Self::new(&self.rat / &norm, -&self.sqrt2 / &norm))
    }
}

impl Add for &AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn add(self, o: &AlgebraicScalar) -> AlgebraicScalar {
        AlgebraicScalar::new(&self.rat + &o.rat, &self.sqrt2 + &o.sqrt2)
    }
}

impl Add for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn add(self, o: AlgebraicScalar) -> AlgebraicScalar {
        &self + &o
    }
}

impl AddAssign<&AlgebraicScalar> for AlgebraicScalar {
    fn add_assign(&mut self, o: &AlgebraicScalar) {
        self.rat += &o.rat;
        self.sqrt2 += &o.sqrt2;
    }
}

impl Sub for &AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn sub(self, o: &AlgebraicScalar) -> AlgebraicScalar {
        AlgebraicScalar::new(&self.rat - &o.rat, &self.sqrt2 - &o.sqrt2)
    }
}

impl Sub for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn sub(self, o: AlgebraicScalar) -> AlgebraicScalar {
        &self - &o
    }
}

impl Mul for &AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn mul(self, o: &AlgebraicScalar) -> AlgebraicScalar {
        AlgebraicScalar::new(
            &self.rat * &o.rat + int(2) * &self.sqrt2 * &o.sqrt2,
            &self.rat * &o.sqrt2 + &self.sqrt2 * &o.rat,
        )
    }
}

impl Mul for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn mul(self, o: AlgebraicScalar) -> AlgebraicScalar {
        &self * &o
    }
}

impl Neg for &AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn neg(self) -> AlgebraicScalar {
        AlgebraicScalar::new(-&self.rat, -&self.sqrt2)
    }
}

impl Neg for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn neg(self) -> AlgebraicScalar {
        -&self
    }
}

impl fmt::Display for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.sqrt2.is_zero()) {
            (_, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{}√2", self.sqrt2),
            (false, false) => {
                let sign = if self.sqrt2.is_negative() { "-" } else { "+" };
                write!(f, "{} {} {}√2", self.rat, sign, self.sqrt2.abs())
            }
        }
    }
}

impl fmt::Debug for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for AlgebraicScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AlgebraicScalar", 2)?;
        st.serialize_field("rat", &rational_string(&self.rat))?;
        st.serialize_field("sqrt2", &rational_string(&self.sqrt2))?;
        st.end()
    }
}

impl Field for AlgebraicScalar {
    fn zero() -> Self {
        AlgebraicScalar::zero()
    }
    fn one() -> Self {
        AlgebraicScalar::one()
    }
    fn is_zero(&self) -> bool {
        AlgebraicScalar::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_rational(r: Rational) -> Self {
        AlgebraicScalar::from_rational(r)
    }
    fn inv_sqrt2() -> Self {
        AlgebraicScalar::sqrt2_pow(-1)
    }
}

/// An element `x + y i` with `x, y ∈ ℚ(√2)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianScalar {
    pub re: AlgebraicScalar,
    pub im: AlgebraicScalar,
}

impl GaussianScalar {
    pub fn new(re: AlgebraicScalar, im: AlgebraicScalar) -> Self {
        GaussianScalar { re, im }
    }

    pub fn i() -> Self {
        Self::new(AlgebraicScalar::zero(), AlgebraicScalar::one())
    }

    pub fn real(re: AlgebraicScalar) -> Self {
        Self::new(re, AlgebraicScalar::zero())
    }
}

impl fmt::Display for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "({})i", self.im)
        } else {
            write!(f, "{} + ({})i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Field for GaussianScalar {
    fn zero() -> Self {
        Self::new(AlgebraicScalar::zero(), AlgebraicScalar::zero())
    }
    fn one() -> Self {
        Self::real(AlgebraicScalar::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn times(&self, o: &Self) -> Self {
        Self::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
    fn negate(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }
    fn from_rational(r: Rational) -> Self {
        Self::real(AlgebraicScalar::from_rational(r))
    }
    fn inv_sqrt2() -> Self {
        Self::real(AlgebraicScalar::sqrt2_pow(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let r = AlgebraicScalar::sqrt2();
        assert_eq!(&r * &r, AlgebraicScalar::from_int(2));
        assert_eq!(AlgebraicScalar::sqrt2_pow(3), AlgebraicScalar::new(int(0), int(2)));
        assert_eq!(AlgebraicScalar::sqrt2_pow(-1), AlgebraicScalar::new(int(0), rat(1, 2)));
        assert_eq!(AlgebraicScalar::sqrt2_pow(-2), AlgebraicScalar::from_rational(rat(1, 2)));
    }

    #[test]
    fn display_and_json() {
        assert_eq!(AlgebraicScalar::new(int(1), rat(-1, 2)).to_string(), "1 - 1/2√2");
        assert_eq!(AlgebraicScalar::sqrt2().to_string(), "1√2");
        let j = serde_json::to_string(&AlgebraicScalar::new(rat(-3, 4), int(2))).unwrap();
        assert_eq!(j, r#"{"rat":"-3/4","sqrt2":"2/1"}"#);
    }

    #[test]
    fn gaussian_i_squared() {
        let i = GaussianScalar::i();
        assert_eq!(i.times(&i), GaussianScalar::from_int(-1));
    }

    fn arb() -> impl Strategy<Value = AlgebraicScalar> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6)
            .prop_map(|(a, b, c, d)| AlgebraicScalar::new(rat(a, b), rat(c, d)))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            if let Some(inv) = x.inverse() {
                prop_assert_eq!(&x * &inv, AlgebraicScalar::one());
            } else {
                prop_assert!(x.is_zero());
            }
        }
    }
}
