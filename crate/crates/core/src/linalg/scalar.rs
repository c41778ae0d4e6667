//! Exact field elements over ℚ and F_p.
//!
//! Rationals are kept as `Ratio<i64>` while they fit and promoted to a boxed
//! `BigRational` on overflow, so structure-constant arithmetic stays allocation
//! free in the common case without ever losing exactness.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// F_p, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::MalformedInput(format!("{p} is not prime")));
        }
        // residues are multiplied in u128, but keep them inside u32 so the
        // JSON wire format never needs big integers
        if p > u32::MAX as u64 {
            return Err(Error::MalformedInput(format!("modulus {p} too large")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p.parse().map_err(|_| Error::MalformedInput(format!("bad field `{s}`")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::MalformedInput(format!("bad field `{s}`, expected Q or Fp:<p>")))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Arbitrary-precision rational in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(Ratio<i64>),
    Big(Box<BigRational>),
}

impl Rational {
    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(Ratio::new_raw(n, d)),
            _ => Rational::Big(Box::new(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rational::Big(b) => (**b).clone(),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_zero(),
            Rational::Big(b) => b.is_zero(),
        }
    }

    fn add(&self, o: &Self) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (self, o) {
            if let Some(c) = a.checked_add(b) {
                return Rational::Small(c);
            }
        }
        Rational::from_big(self.to_big() + o.to_big())
    }

    fn sub(&self, o: &Self) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (self, o) {
            if let Some(c) = a.checked_sub(b) {
                return Rational::Small(c);
            }
        }
        Rational::from_big(self.to_big() - o.to_big())
    }

    fn mul(&self, o: &Self) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (self, o) {
            if let Some(c) = a.checked_mul(b) {
                return Rational::Small(c);
            }
        }
        Rational::from_big(self.to_big() * o.to_big())
    }

    fn neg(&self) -> Self {
        match self {
            Rational::Small(a) if *a.numer() != i64::MIN => Rational::Small(-*a),
            _ => Rational::from_big(-self.to_big()),
        }
    }

    fn recip(&self) -> Self {
        match self {
            Rational::Small(a) if *a.numer() != i64::MIN => Rational::Small(a.recip()),
            _ => Rational::from_big(self.to_big().recip()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let big = self.to_big();
        if big.denom().is_one() {
            write!(f, "{}", big.numer())
        } else {
            write!(f, "{}/{}", big.numer(), big.denom())
        }
    }
}

/// An exact element of a [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, v: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(Rational::Small(Ratio::from_integer(v))),
            FieldSpec::PrimeField(p) => Scalar::Residue { value: v.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    /// `num/den` reduced into `field`.
    pub fn from_ratio(field: FieldSpec, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::MalformedInput("zero denominator".into()));
        }
        match field {
            FieldSpec::Rationals => {
                Ok(Scalar::Rational(Rational::from_big(BigRational::new(BigInt::from(num), BigInt::from(den)))))
            }
            FieldSpec::PrimeField(p) => {
                let d = Self::from_i64(field, den);
                if d.is_zero() {
                    return Err(Error::MalformedInput(format!("denominator divisible by {p}")));
                }
                Ok(&Self::from_i64(field, num) * &d.inv()?)
            }
        }
    }

    /// Parses the wire form: `"a"` or `"a/b"` for ℚ, a residue in `[0, p)` for F_p.
    pub fn parse(field: FieldSpec, s: &str) -> Result<Self> {
        let bad = || Error::MalformedInput(format!("bad scalar `{s}` for field {field}"));
        match field {
            FieldSpec::Rationals => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s.trim(), "1"),
                };
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(Rational::from_big(BigRational::new(n, d))))
            }
            FieldSpec::PrimeField(p) => {
                let v: u64 = s.trim().parse().map_err(|_| bad())?;
                if v >= p {
                    return Err(bad());
                }
                Ok(Scalar::Residue { value: v, modulus: p })
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.field())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Singular);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus }
            }
        })
    }

    /// Integer value when the scalar is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(Rational::Small(r)) if r.is_integer() => Some(*r.numer()),
            Scalar::Rational(_) => None,
            Scalar::Residue { value, .. } => Some(*value as i64),
        }
    }

    /// Sign of a rational (residues report `0` or `1`).
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Rational(r) => {
                let b = r.to_big();
                if b.is_zero() {
                    0
                } else if b.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Residue { value, .. } => (*value != 0) as i32,
        }
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = (b % m) as u128;
    let m128 = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

// Scalar operators panic on mixed fields; matrices check field agreement at
// construction, so mixing can only happen through a bug in the caller.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.add(b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: ((*a as u128 + *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, o),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.sub(b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: ((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, o),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.mul(b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: ((*a as u128 * *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, o),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.neg()),
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}
