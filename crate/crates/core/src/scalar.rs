//! Exact scalars over the rationals or a prime field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The base field every algebra in a computation is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// A prime field; `p` must be prime and small enough for `u128` products.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::Usage(format!("{p} is not a supported prime modulus")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses the command-line spelling `q` or `f:<p>`.
    pub fn parse(s: &str) -> Result<Field> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "q" {
            return Ok(Field::Rational);
        }
        match lower.strip_prefix("f:") {
            Some(p) => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Usage(format!("bad prime in field '{s}'")))?;
                Field::prime(p)
            }
            None => Err(Error::Usage(format!("unknown field '{s}', expected q or f:<p>"))),
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Embeds `num / den`; fails when `den` vanishes in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.int(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::Usage(format!("denominator {den} is zero in {self}")))?;
        Ok(&self.int(num) * &inv)
    }

    /// Reads `n`, `-n`, or `n/d`.
    pub fn parse_scalar(self, s: &str) -> Option<Scalar> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().ok()?;
        let den: BigInt = den.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        match self {
            Field::Rational => Some(Scalar::Rat(BigRational::new(num, den))),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let n = ((num % &pb) + &pb) % &pb;
                let d = ((den % &pb) + &pb) % &pb;
                let n = Scalar::Mod { value: n.to_u64()?, modulus: p };
                let d = Scalar::Mod { value: d.to_u64()?, modulus: p };
                Some(&n * &d.inv()?)
            }
        }
    }

    /// Every element `x` with `x^n = 1`, in increasing order of representation.
    pub fn roots_of_unity(self, n: u64) -> Vec<Scalar> {
        match self {
            Field::Rational => {
                if n % 2 == 0 {
                    vec![self.int(-1), self.one()]
                } else {
                    vec![self.one()]
                }
            }
            Field::Prime(p) => (1..p)
                .map(|v| Scalar::Mod { value: v, modulus: p })
                .filter(|x| x.pow(n).is_one())
                .collect(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms by
/// `BigRational`; residues are kept in `0..modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rat(r) => Some(Scalar::Rat(r.recip())),
            Scalar::Mod { value, modulus } => Some(Scalar::Mod {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        }
    }

    /// True for a negative rational; residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }

    pub fn pow(&self, e: u64) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = b as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m as u128;
        }
        base = base * base % m as u128;
        e >>= 1;
    }
    acc as u64
}

fn field_mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod { value: ((*a as u128 + *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod { value: ((*a as u128 * *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let q = Field::Rational;
        let half = q.ratio(2, 4).unwrap();
        assert_eq!(half, q.ratio(1, 2).unwrap());
        assert_eq!(format!("{}", half), "1/2");
        assert!((&half - &half).is_zero());
        assert_eq!(&half * &q.int(2), q.one());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        for n in 1..7 {
            let x = f.int(n);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
        assert_eq!(f.int(-1), f.int(6));
    }

    #[test]
    fn parse_field_specs() {
        assert_eq!(Field::parse("q").unwrap(), Field::Rational);
        assert_eq!(Field::parse("f:5").unwrap(), Field::Prime(5));
        assert!(Field::parse("f:6").is_err());
        assert!(Field::parse("z").is_err());
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(Field::Rational.roots_of_unity(3).len(), 1);
        assert_eq!(Field::Rational.roots_of_unity(2).len(), 2);
        assert_eq!(Field::Prime(7).roots_of_unity(3).len(), 3);
    }

    #[test]
    fn parse_scalars() {
        let q = Field::Rational;
        assert_eq!(q.parse_scalar("-3/6").unwrap(), q.ratio(-1, 2).unwrap());
        let f = Field::Prime(5);
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.int(3));
        assert!(q.parse_scalar("x").is_none());
    }
}
