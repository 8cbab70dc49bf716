//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! Scalars are a small enum so that one polynomial type can carry either
//! kind of coefficient. A [`FieldSpec`] performs the arithmetic; mixing
//! scalars of different fields is prevented one level up by the ring checks
//! on [`Polynomial`](crate::poly::Polynomial).

use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest characteristic accepted; keeps products of residues inside `u128`
/// with room to spare.
pub const MAX_CHARACTERISTIC: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// The prime field with `p` elements. Fails unless `p` is a prime no
    /// larger than [`MAX_CHARACTERISTIC`].
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_CHARACTERISTIC || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(_) => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::Prime(_) => Scalar::Residue(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Residue(n.rem_euclid(*p as i64) as u64),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Scalar::Residue(r.to_u64().expect("residue fits in u64"))
            }
        }
    }

    pub fn from_biguint(&self, n: &BigUint) -> Scalar {
        self.from_bigint(&BigInt::from(n.clone()))
    }

    /// `num / den`; `None` when the denominator vanishes in this field.
    pub fn fraction(&self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        let d = self.from_bigint(den);
        let inv = self.inv(&d)?;
        Some(self.mul(&self.from_bigint(num), &inv))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Residue(x), Scalar::Residue(y)) => {
                let p = self.characteristic();
                Scalar::Residue((x + y) % p)
            }
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Residue(x) => {
                let p = self.characteristic();
                Scalar::Residue((p - x) % p)
            }
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Residue(x), Scalar::Residue(y)) => {
                let p = self.characteristic() as u128;
                Scalar::Residue(((*x as u128 * *y as u128) % p) as u64)
            }
            _ => panic!("scalars from different fields"),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match a {
            Scalar::Rational(x) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(x.recip()))
                }
            }
            Scalar::Residue(x) => {
                if *x == 0 {
                    return None;
                }
                let p = self.characteristic();
                Some(Scalar::Residue(pow_mod(*x, p - 2, p)))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        Some(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, mut e: u32) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Whether `a` belongs to this field's representation.
    pub fn owns(&self, a: &Scalar) -> bool {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::Prime(p), Scalar::Residue(x)) => x < p,
            _ => false,
        }
    }
}

fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut acc: u128 = 1;
    let mut base = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Residue(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_one(),
            Scalar::Residue(x) => *x == 1,
        }
    }

    /// True for rationals below zero. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_negative(),
            Scalar::Residue(_) => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(x) => Scalar::Rational(x.abs()),
            Scalar::Residue(x) => Scalar::Residue(*x),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => {
                if x.is_integer() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Residue(x) => write!(f, "{x}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F {p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn primality_is_checked() {
        assert!(FieldSpec::prime(5).is_ok());
        assert_eq!(FieldSpec::prime(4), Err(Error::NotPrime(4)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
        assert!(FieldSpec::prime(MAX_CHARACTERISTIC).is_ok());
    }

    #[test]
    fn residues_are_canonical() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(f.from_i64(-1), Scalar::Residue(6));
        assert_eq!(f.inv(&Scalar::Residue(3)), Some(Scalar::Residue(5)));
        assert_eq!(f.inv(&Scalar::Residue(0)), None);
        assert_eq!(f.fraction(&BigInt::from(1), &BigInt::from(7)), None);
    }

    #[test]
    fn rationals_stay_reduced() {
        let q = FieldSpec::Rationals;
        let half = q.fraction(&BigInt::from(2), &BigInt::from(-4)).unwrap();
        assert_eq!(half.to_string(), "-1/2");
        assert!(q.add(&half, &q.from_i64(1)).to_string() == "1/2");
    }
}
