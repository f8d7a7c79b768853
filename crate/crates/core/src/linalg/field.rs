//! Exact scalars over the rationals or a prime field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::LinalgError;

/// The ground field shared by every scalar of one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    /// `F_p` with `p` prime and below `2^31`.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field, LinalgError> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Residue(Residue::new(v.rem_euclid(p as i64) as u32, p)),
        }
    }

    /// A random scalar: small integers over the rationals, uniform over `F_p`.
    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match *self {
            Field::Rationals => self.from_i64(rng.gen_range(-3..=3)),
            Field::Prime(p) => self.from_i64(rng.gen_range(0..p as i64)),
        }
    }

    /// Number of elements, or `None` for the rationals.
    pub fn size(&self) -> Option<u64> {
        match *self {
            Field::Rationals => None,
            Field::Prime(p) => Some(p as u64),
        }
    }

    /// `num / den` in this field; fails when `den` vanishes in it.
    pub fn fraction(&self, num: i64, den: i64) -> Result<Scalar, LinalgError> {
        let d = self.from_i64(den);
        let inv = d.inv().ok_or(LinalgError::DivisionByZero)?;
        Ok(&self.from_i64(num) * &inv)
    }

    /// Parses `"3"`, `"-3/7"`; over `F_p` a fraction is reduced mod `p`.
    pub fn parse(&self, text: &str) -> Result<Scalar, LinalgError> {
        let text = text.trim();
        let bad = || LinalgError::BadScalar(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<BigInt>().map_err(|_| bad())?,
                d.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (text.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        match *self {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let reduce = |x: &BigInt| {
                    let m = BigInt::from(p);
                    let r = ((x % &m) + &m) % &m;
                    Residue::new(r.to_u32().unwrap(), p)
                };
                let n = Scalar::Residue(reduce(&num));
                let d = Scalar::Residue(reduce(&den));
                let dinv = d.inv().ok_or(LinalgError::DivisionByZero)?;
                Ok(&n * &dinv)
            }
        }
    }

    /// Whether `s` belongs to this field.
    pub fn owns(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rationals, Scalar::Rational(_)) => true,
            (Field::Prime(p), Scalar::Residue(r)) => r.modulus == *p,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue class modulo a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u32,
    modulus: u32,
}

impl Residue {
    fn new(value: u32, modulus: u32) -> Residue {
        debug_assert!(value < modulus);
        Residue { value, modulus }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    fn pow(self, mut e: u64) -> Residue {
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Residue::new(acc as u32, self.modulus)
    }
}

/// An exact field element. Both operands of an arithmetic operation must come from
/// the same [`Field`]; mixing is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(Residue),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue(r) => r.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue(r) => r.value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue(r) => Field::Prime(r.modulus),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue(r) => Scalar::Residue(r.pow(r.modulus as u64 - 2)),
        })
    }

    /// Canonical text form: `"n"` or `"n/d"` over Q, the residue in `[0, p)` over `F_p`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// The residue as an integer, or the rational when it is integral and fits.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Residue(r) => Some(r.value as i64),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue(r) => write!(f, "{}", r.value),
        }
    }
}

fn mismatch() -> ! {
    panic!("arithmetic between scalars of different fields")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue(a), Scalar::Residue(b)) if a.modulus == b.modulus => {
                let s = (a.value as u64 + b.value as u64) % a.modulus as u64;
                Scalar::Residue(Residue::new(s as u32, a.modulus))
            }
            _ => mismatch(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue(a), Scalar::Residue(b)) if a.modulus == b.modulus => {
                let p = a.modulus as u64;
                let s = (a.value as u64 + p - b.value as u64) % p;
                Scalar::Residue(Residue::new(s as u32, a.modulus))
            }
            _ => mismatch(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue(a), Scalar::Residue(b)) if a.modulus == b.modulus => {
                let s = (a.value as u64 * b.value as u64) % a.modulus as u64;
                Scalar::Residue(Residue::new(s as u32, a.modulus))
            }
            _ => mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue(a) => {
                let p = a.modulus;
                Scalar::Residue(Residue::new((p - a.value) % p, p))
            }
        }
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
