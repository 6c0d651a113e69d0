//! Exact scalar arithmetic over the rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The coefficient field of an algebra: ℚ or 𝔽_p with p prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec, Error> {
        if is_prime_u64(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Prime { modulus: *p, value: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Prime { modulus: *p, value: 1 % *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let m = *p as i128;
                let v = ((n as i128 % m) + m) % m;
                Scalar::Prime { modulus: *p, value: v as u64 }
            }
        }
    }

    /// Builds num/den as a field element; the denominator must be invertible.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar, Error> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldSpec::Rational => Ok(Scalar::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldSpec::Prime(_) => {
                let d = self.from_i64(den);
                let inv = d.inv().ok_or(Error::DivisionByZero)?;
                Ok(self.from_i64(num).mul(&inv))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// A field element. Rationals are kept in lowest terms, prime-field
/// values reduced into [0, p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { modulus: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { modulus: p, value: a }, Scalar::Prime { modulus: q, value: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Prime { modulus: *p, value: ((*a as u128 + *b as u128) % *p as u128) as u64 }
            }
            _ => panic!("mixed scalar fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { modulus: p, value: a } => {
                Scalar::Prime { modulus: *p, value: if *a == 0 { 0 } else { p - a } }
            }
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { modulus: p, value: a }, Scalar::Prime { modulus: q, value: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Prime { modulus: *p, value: ((*a as u128 * *b as u128) % *p as u128) as u64 }
            }
            _ => panic!("mixed scalar fields"),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(a.recip()))
                }
            }
            Scalar::Prime { modulus: p, value: a } => {
                if *a == 0 {
                    None
                } else {
                    Some(Scalar::Prime { modulus: *p, value: mod_pow(*a, p - 2, *p) })
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv().expect("division by zero scalar"))
    }

    /// (numerator, denominator) pair; prime-field values get denominator 1.
    pub fn to_ratio(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rational(r) => (r.numer().clone(), r.denom().clone()),
            Scalar::Prime { value, .. } => (BigInt::from(*value), BigInt::one()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

pub(crate) fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Parses a rational from a BigInt pair, reducing to lowest terms with a
/// positive denominator.
pub fn scalar_from_bigint_ratio(field: &FieldSpec, num: &BigInt, den: &BigInt) -> Result<Scalar, Error> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    match field {
        FieldSpec::Rational => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
        FieldSpec::Prime(p) => {
            let pb = BigInt::from(*p);
            let red = |x: &BigInt| -> u64 {
                let mut r = x % &pb;
                if r.is_negative() {
                    r += &pb;
                }
                u64::try_from(r).expect("reduced residue fits u64")
            };
            let d = Scalar::Prime { modulus: *p, value: red(den) };
            let d_inv = d.inv().ok_or(Error::DivisionByZero)?;
            Ok(Scalar::Prime { modulus: *p, value: red(num) }.mul(&d_inv))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = FieldSpec::Rational;
        let a = q.from_ratio(1, 3).unwrap();
        let b = q.from_ratio(1, 6).unwrap();
        assert_eq!(a.add(&b), q.from_ratio(1, 2).unwrap());
        assert_eq!(a.mul(&b), q.from_ratio(1, 18).unwrap());
        assert_eq!(a.inv().unwrap(), q.from_i64(3));
    }

    #[test]
    fn prime_field_reduces() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = f5.from_i64(7);
        assert_eq!(a, f5.from_i64(2));
        assert_eq!(a.mul(&f5.from_i64(3)), f5.from_i64(1));
        assert_eq!(f5.from_i64(2).inv().unwrap(), f5.from_i64(3));
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(97));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(91));
        assert!(is_prime_u64(1_000_000_007));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FieldSpec::prime(6).is_err());
    }
}
