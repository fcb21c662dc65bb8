//! Exact scalar fields.
//!
//! Every algorithm in the crate is generic over [`Field`]. Two fields ship:
//! arbitrary-precision rationals ([`Rational`]) and prime fields `F_p` with a
//! modulus chosen at run time ([`Fp`]).

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Which field a ring's coefficients live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rational,
    Prime(u32),
}

impl FieldDescriptor {
    /// `p` must be an odd prime below `2^31`.
    pub fn prime(p: u32) -> Result<Self> {
        if !(3..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "{p} is not an odd prime below 2^31"
            )));
        }
        Ok(FieldDescriptor::Prime(p))
    }

    /// Accepts `q`, `fp 7919`, and `fp:7919`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("q") {
            return Ok(FieldDescriptor::Rational);
        }
        let rest = text
            .strip_prefix("fp")
            .or_else(|| text.strip_prefix("Fp"))
            .ok_or_else(|| Error::InvalidField(format!("unrecognized field `{text}`")))?;
        let rest = rest.trim_start_matches(':').trim();
        let p: u32 = rest
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad prime `{rest}`")))?;
        FieldDescriptor::prime(p)
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldDescriptor::Rational => 0,
            FieldDescriptor::Prime(p) => *p,
        }
    }
}

impl Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "q"),
            FieldDescriptor::Prime(p) => write!(f, "fp {p}"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field. Elements are created through the ambient
/// [`FieldDescriptor`] so that run-time moduli are honoured.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Whether this scalar type can represent elements of `field`.
    fn supports(field: &FieldDescriptor) -> bool;

    fn from_integer(n: &BigInt, field: &FieldDescriptor) -> Self;

    /// `num / den`. Only the rationals accept non-integral literals.
    fn from_ratio(num: &BigInt, den: &BigInt, field: &FieldDescriptor) -> Result<Self>;

    fn inverse(&self) -> Option<Self>;

    /// Pivot preference during elimination. Over Q a larger numerator wins;
    /// over `F_p` the first nonzero entry is kept.
    fn is_better_pivot_than(&self, other: &Self) -> bool;

    /// Serialization form: `num/den` over Q, the residue over `F_p`.
    fn to_exact_string(&self) -> String;

    fn parse_exact(text: &str, field: &FieldDescriptor) -> Result<Self>;

    /// Binds field-agnostic constants (such as [`One::one`]) to `field`.
    fn in_field(self, _field: &FieldDescriptor) -> Self {
        self
    }

    fn from_i64(n: i64, field: &FieldDescriptor) -> Self {
        Self::from_integer(&BigInt::from(n), field)
    }

    /// The coefficients printed in polynomial text are either shown as-is or
    /// split into a sign and a magnitude; this returns the magnitude when the
    /// element is "negative" in its printed form.
    fn printed_negation(&self) -> Option<Self> {
        None
    }
}

impl Field for Rational {
    fn supports(field: &FieldDescriptor) -> bool {
        matches!(field, FieldDescriptor::Rational)
    }

    fn from_integer(n: &BigInt, _field: &FieldDescriptor) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn from_ratio(num: &BigInt, den: &BigInt, _field: &FieldDescriptor) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Parse {
                position: 0,
                message: "zero denominator".into(),
            });
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn is_better_pivot_than(&self, other: &Self) -> bool {
        self.numer().abs() > other.numer().abs()
    }

    fn to_exact_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_exact(text: &str, field: &FieldDescriptor) -> Result<Self> {
        let bad = || Error::Parse {
            position: 0,
            message: format!("bad rational `{text}`"),
        };
        let text = text.trim();
        match text.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Self::from_ratio(&n, &d, field)
            }
            None => {
                let n: BigInt = text.parse().map_err(|_| bad())?;
                Ok(<Self as Field>::from_integer(&n, field))
            }
        }
    }

    fn printed_negation(&self) -> Option<Self> {
        if self.is_negative() {
            Some(-self.clone())
        } else {
            None
        }
    }
}

/// An element of `F_p` carrying its modulus.
///
/// The constants produced by [`Zero::zero`] and [`One::one`] have no modulus
/// yet (`modulus == 0`); they adopt the modulus of the first bound operand
/// they meet. Mixing two different bound moduli is a logic error and panics.
#[derive(Clone, Copy)]
pub struct Fp {
    value: i64,
    modulus: u32,
}

impl Fp {
    pub fn new(value: i64, p: u32) -> Self {
        Fp {
            value: value.rem_euclid(p as i64),
            modulus: p,
        }
    }

    /// `None` for the unbound constants.
    pub fn modulus(&self) -> Option<u32> {
        (self.modulus != 0).then_some(self.modulus)
    }

    pub fn residue(&self) -> i64 {
        self.value
    }

    fn join(a: &Fp, b: &Fp) -> u32 {
        match (a.modulus, b.modulus) {
            (0, m) | (m, 0) => m,
            (m, n) if m == n => m,
            (m, n) => panic!("mixing F_{m} and F_{n} elements"),
        }
    }

    fn combine(a: Fp, b: Fp, op: impl Fn(i128, i128) -> i128) -> Fp {
        let m = Fp::join(&a, &b);
        let r = op(a.value as i128, b.value as i128);
        if m == 0 {
            Fp {
                value: i64::try_from(r).expect("unbound F_p constant overflow"),
                modulus: 0,
            }
        } else {
            Fp {
                value: r.rem_euclid(m as i128) as i64,
                modulus: m,
            }
        }
    }

    fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
        let mut acc = 1u64;
        base %= m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        match (self.modulus, other.modulus) {
            (0, 0) => self.value == other.value,
            (0, m) => self.value.rem_euclid(m as i64) == other.value,
            (m, 0) => self.value == other.value.rem_euclid(m as i64),
            (m, n) => m == n && self.value == other.value,
        }
    }
}

impl Eq for Fp {}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{} (mod {})", self.value, self.modulus)
        }
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        Fp::combine(self, rhs, |a, b| a + b)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        Fp::combine(self, rhs, |a, b| a - b)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp::combine(self, rhs, |a, b| a * b)
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp) -> Fp {
        let inv = rhs.inverse().expect("division by zero in F_p");
        self * inv
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.modulus == 0 {
            Fp {
                value: -self.value,
                modulus: 0,
            }
        } else {
            Fp::new(-self.value, self.modulus)
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp {
            value: 0,
            modulus: 0,
        }
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp {
            value: 1,
            modulus: 0,
        }
    }
}

impl Field for Fp {
    fn supports(field: &FieldDescriptor) -> bool {
        matches!(field, FieldDescriptor::Prime(_))
    }

    fn from_integer(n: &BigInt, field: &FieldDescriptor) -> Self {
        let p = match field {
            FieldDescriptor::Prime(p) => *p,
            FieldDescriptor::Rational => panic!("F_p element requested for the rationals"),
        };
        let r = n % BigInt::from(p);
        Fp::new(r.to_i64().expect("residue fits"), p)
    }

    fn from_ratio(num: &BigInt, den: &BigInt, field: &FieldDescriptor) -> Result<Self> {
        if den.is_one() {
            return Ok(Self::from_integer(num, field));
        }
        Err(Error::Parse {
            position: 0,
            message: "rational literals are only accepted over q".into(),
        })
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.modulus == 0 {
            return match self.value {
                1 | -1 => Some(*self),
                _ => panic!("cannot invert an unbound F_p constant"),
            };
        }
        let m = self.modulus as u64;
        Some(Fp {
            value: Fp::pow_mod(self.value as u64, m - 2, m) as i64,
            modulus: self.modulus,
        })
    }

    fn is_better_pivot_than(&self, _other: &Self) -> bool {
        false
    }

    fn in_field(self, field: &FieldDescriptor) -> Self {
        match (self.modulus, field) {
            (0, FieldDescriptor::Prime(p)) => Fp::new(self.value, *p),
            _ => self,
        }
    }

    fn to_exact_string(&self) -> String {
        self.value.to_string()
    }

    fn parse_exact(text: &str, field: &FieldDescriptor) -> Result<Self> {
        let n: BigInt = text.trim().parse().map_err(|_| Error::Parse {
            position: 0,
            message: format!("bad F_p element `{text}`"),
        })?;
        Ok(<Self as Field>::from_integer(&n, field))
    }
}
