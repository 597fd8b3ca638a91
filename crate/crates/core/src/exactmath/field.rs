use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The two kinds of coefficient field supported: a prime field `F_p`, or the
/// rationals standing in for "some infinite field".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime(u64),
    Infinite,
}

/// A validated coefficient field.
///
/// Construct with [`FieldSpec::prime`] (checks primality) or
/// [`FieldSpec::rationals`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec(FieldKind);

/// A field element. `Mod` values are always reduced into `0..p`; `Rat`
/// values are kept in lowest terms by `BigRational`.
///
/// Scalars carry no field tag; all arithmetic goes through a [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Mod(u64),
    Rat(BigRational),
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec(FieldKind::Prime(p)))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn rationals() -> Self {
        FieldSpec(FieldKind::Infinite)
    }

    pub fn kind(&self) -> FieldKind {
        self.0
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0, FieldKind::Prime(_))
    }

    /// `p` for `F_p`, `1` for the infinite field.
    pub fn q_for_formulas(&self) -> u64 {
        match self.0 {
            FieldKind::Prime(p) => p,
            FieldKind::Infinite => 1,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.0 {
            FieldKind::Prime(_) => Scalar::Mod(0),
            FieldKind::Infinite => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.0 {
            FieldKind::Prime(_) => Scalar::Mod(1),
            FieldKind::Infinite => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.0 {
            FieldKind::Prime(p) => Scalar::Mod(v.rem_euclid(p as i64) as u64),
            FieldKind::Infinite => Scalar::Rat(BigRational::from_integer(v.into())),
        }
    }

    /// The image of `num/den` in this field. Fails when `den` vanishes.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match self.0 {
            FieldKind::Prime(p) => {
                let pb = BigInt::from(p);
                let reduce = |x: &BigInt| {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_u64().expect("residue fits in u64")
                };
                let d = reduce(den);
                if d == 0 {
                    return Err(Error::Domain(format!("denominator {den} vanishes mod {p}")));
                }
                let n = Scalar::Mod(reduce(num));
                Ok(self.mul(&n, &self.inv(&Scalar::Mod(d)).expect("nonzero")))
            }
            FieldKind::Infinite => {
                if den.is_zero() {
                    return Err(Error::Domain("zero denominator".into()));
                }
                Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone())))
            }
        }
    }

    /// Parses `n` or `n/d` (optional leading `-`) into this field.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::Domain(format!("malformed scalar `{text}`"));
        let (n, d) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        self.from_ratio(&n, &d)
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.0, a, b) {
            (FieldKind::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                let s = x + y;
                Scalar::Mod(if s >= p { s - p } else { s })
            }
            (FieldKind::Infinite, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self.0, a) {
            (FieldKind::Prime(p), Scalar::Mod(x)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            (FieldKind::Infinite, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.0, a, b) {
            (FieldKind::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % p as u128) as u64)
            }
            (FieldKind::Infinite, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match (self.0, a) {
            (FieldKind::Prime(p), Scalar::Mod(x)) => {
                // Fermat: x^(p-2)
                let (mut base, mut exp, mut acc) = (*x as u128, p - 2, 1u128);
                let m = p as u128;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Some(Scalar::Mod(acc as u64))
            }
            (FieldKind::Infinite, Scalar::Rat(x)) => Some(Scalar::Rat(x.recip())),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    /// Whether `s` is a valid element of this field.
    pub fn owns(&self, s: &Scalar) -> bool {
        match (self.0, s) {
            (FieldKind::Prime(p), Scalar::Mod(x)) => *x < p,
            (FieldKind::Infinite, Scalar::Rat(_)) => true,
            _ => false,
        }
    }

    /// All elements of a prime field in increasing order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self.0 {
            FieldKind::Prime(p) => Some((0..p).map(Scalar::Mod).collect()),
            FieldKind::Infinite => None,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            FieldKind::Prime(p) => write!(f, "{p}"),
            FieldKind::Infinite => write!(f, "infinite"),
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod(x) => *x == 0,
            Scalar::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod(x) => *x == 1,
            Scalar::Rat(x) => x.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rat(x) if x.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod(x) => write!(f, "{x}"),
            Scalar::Rat(x) if x.is_integer() => write!(f, "{}", x.numer()),
            Scalar::Rat(x) => write!(f, "{}/{}", x.numer(), x.denom()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_is_checked() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(97).is_ok());
        assert_eq!(FieldSpec::prime(4), Err(Error::NotPrime(4)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldSpec::prime(0), Err(Error::NotPrime(0)));
    }

    #[test]
    fn q_for_formulas() {
        assert_eq!(FieldSpec::prime(5).unwrap().q_for_formulas(), 5);
        assert_eq!(FieldSpec::rationals().q_for_formulas(), 1);
    }

    #[test]
    fn mod_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let three = f.from_i64(3);
        let inv = f.inv(&three).unwrap();
        assert_eq!(f.mul(&three, &inv), f.one());
        assert_eq!(f.from_i64(-1), Scalar::Mod(6));
        assert_eq!(f.sub(&f.from_i64(2), &f.from_i64(5)), Scalar::Mod(4));
        assert!(f.inv(&f.zero()).is_none());
    }

    #[test]
    fn parse_reduces_on_read() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.parse_scalar("7").unwrap(), Scalar::Mod(2));
        assert_eq!(f.parse_scalar("-1").unwrap(), Scalar::Mod(4));
        // 1/2 = 3 mod 5
        assert_eq!(f.parse_scalar("1/2").unwrap(), Scalar::Mod(3));
        assert!(f.parse_scalar("1/5").is_err());
        let q = FieldSpec::rationals();
        assert_eq!(q.parse_scalar("2/4").unwrap().to_string(), "1/2");
        assert_eq!(q.parse_scalar("-6/3").unwrap().to_string(), "-2");
        assert!(q.parse_scalar("x").is_err());
    }
}
