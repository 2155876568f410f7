//! Scalar types for weights and transform values.
//!
//! Two modes exist: exact rationals backed by arbitrary-precision integers and
//! `f64`. Every kernel is generic over [`Scalar`], so a single computation never
//! mixes the two.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
///
/// A thin wrapper over `BigRational` whose additive operations skip
/// normalization when both operands are integers, the common case for
/// counting weights and integer test vectors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `numer / denom` in lowest terms. Panics if `denom` is zero.
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        Rational(BigRational::new(numer, denom))
    }

    pub fn from_integer(v: BigInt) -> Self {
        Rational(BigRational::from_integer(v))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    fn integer_op(&mut self, other: &Rational, op: impl FnOnce(&mut BigInt, &BigInt)) -> bool {
        if !(self.is_integer() && other.is_integer()) {
            return false;
        }
        let (mut numer, denom) = std::mem::take(&mut self.0).into_raw();
        op(&mut numer, other.0.numer());
        self.0 = BigRational::new_raw(numer, denom);
        true
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
}

impl Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(&self.0, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        <Rational as Scalar>::parse(text)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl<'a> AddAssign<&'a Rational> for Rational {
    fn add_assign(&mut self, other: &'a Rational) {
        if !self.integer_op(other, |a, b| *a += b) {
            self.0 += &other.0;
        }
    }
}

impl<'a> SubAssign<&'a Rational> for Rational {
    fn sub_assign(&mut self, other: &'a Rational) {
        if !self.integer_op(other, |a, b| *a -= b) {
            self.0 -= &other.0;
        }
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, other: Rational) {
        *self += &other;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, other: Rational) {
        *self -= &other;
    }
}

impl Add for Rational {
    type Output = Rational;

    fn add(mut self, other: Rational) -> Rational {
        self += &other;
        self
    }
}

impl Sub for Rational {
    type Output = Rational;

    fn sub(mut self, other: Rational) -> Rational {
        self -= &other;
        self
    }
}

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ScalarKind {
    #[default]
    Rational,
    Float,
}

impl ScalarKind {
    pub fn name(self) -> &'static str {
        match self {
            ScalarKind::Rational => "rational",
            ScalarKind::Float => "float",
        }
    }
}

impl Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScalarKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(ScalarKind::Rational),
            "float" => Ok(ScalarKind::Float),
            other => Err(Error::BadArguments(format!(
                "unknown scalar kind {other:?} (expected \"rational\" or \"float\")"
            ))),
        }
    }
}

pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    const KIND: ScalarKind;

    fn from_i64(v: i64) -> Self;

    /// Parses `"p/q"`, an integer, or (float mode only) a decimal literal.
    fn parse(text: &str) -> Result<Self>;

    /// Rejects NaN and infinities in float mode; always true for rationals.
    fn is_finite(&self) -> bool;

    fn abs_value(&self) -> Self;

    /// Lossy conversion used for tolerances and reporting.
    fn to_f64(&self) -> f64;

    fn one() -> Self {
        Self::from_i64(1)
    }
}

impl Scalar for Rational {
    const KIND: ScalarKind = ScalarKind::Rational;

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::InvalidWeights(format!("{text:?} is not a rational of the form p/q"));
        match text.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(Error::InvalidWeights(format!(
                        "{text:?} has a zero denominator"
                    )));
                }
                Ok(Rational::new(p, q))
            }
            None => text
                .parse::<BigInt>()
                .map(Rational::from_integer)
                .map_err(|_| bad()),
        }
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn abs_value(&self) -> Self {
        Rational(self.0.abs())
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.0).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const KIND: ScalarKind = ScalarKind::Float;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let value = match text.split_once('/') {
            Some(_) => Rational::parse(text)?.to_f64(),
            None => text
                .parse::<f64>()
                .map_err(|_| Error::InvalidWeights(format!("{text:?} is not a number")))?,
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::InvalidWeights(format!("{text:?} is not finite")))
        }
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    fn abs_value(&self) -> Self {
        self.abs()
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}
