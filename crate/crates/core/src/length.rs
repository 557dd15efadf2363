//! Edge lengths that stay exact when they can.
//!
//! Integers, decimal fractions and `p/q` literals are held as arbitrary
//! precision rationals so that cover overlaps, weighted degrees and volumes
//! can be compared bit-exactly. Anything else (irrational parameters coming
//! from the library API) falls back to `f64`, and arithmetic involving such a
//! value stays real-valued.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq)]
pub enum Length {
    Exact(BigRational),
    Real(f64),
}

impl Length {
    pub fn zero() -> Self {
        Length::Exact(BigRational::zero())
    }

    pub fn integer(n: i64) -> Self {
        Length::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Length::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Real-valued length. Finite values that are exactly representable as a
    /// short decimal are *not* converted; use [`Length::from_f64_decimal`] for that.
    pub fn real(x: f64) -> Self {
        Length::Real(x)
    }

    /// Interprets the shortest round-trip decimal rendering of `x` exactly,
    /// so `0.1` becomes `1/10`.
    pub fn from_f64_decimal(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        parse_decimal(&format!("{x}")).map(Length::Exact)
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Length::Exact(r) => rational_to_f64(r),
            Length::Real(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Length::Exact(r) => Some(r),
            Length::Real(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Length::Exact(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Length::Exact(r) => r.is_zero(),
            Length::Real(x) => *x == 0.0,
        }
    }

    pub fn is_positive_finite(&self) -> bool {
        match self {
            Length::Exact(r) => r.is_positive(),
            Length::Real(x) => x.is_finite() && *x > 0.0,
        }
    }

    pub fn half(&self) -> Self {
        match self {
            Length::Exact(r) => Length::Exact(r / BigInt::from(2)),
            Length::Real(x) => Length::Real(x / 2.0),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        match self {
            Length::Exact(r) => Length::Exact(r * BigInt::from(k)),
            Length::Real(x) => Length::Real(x * k as f64),
        }
    }

    /// `self / mesh` when it is a whole number.
    pub fn multiple_of(&self, mesh: &Length) -> Option<u64> {
        let (Length::Exact(a), Length::Exact(h)) = (self, mesh) else {
            return None;
        };
        if h.is_zero() {
            return None;
        }
        let q = a / h;
        if q.is_integer() && !q.is_negative() {
            q.to_integer().to_u64()
        } else {
            None
        }
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    if let Some(x) = r.to_f64() {
        return x;
    }
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Greatest common divisor of positive rationals: the largest `h` such that
/// every input is an integer multiple of `h`.
pub fn rational_gcd<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> Option<BigRational> {
    let mut acc: Option<BigRational> = None;
    for v in values {
        acc = Some(match acc {
            None => v.abs(),
            Some(a) => {
                let num = (a.numer() * v.denom()).gcd(&(v.numer() * a.denom()));
                BigRational::new(num, a.denom() * v.denom())
            }
        });
    }
    acc
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().ok()? };
    if neg {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let r = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Some(r)
}

impl FromStr for Length {
    type Err = String;

    /// Accepts integers, decimals (with optional exponent) and `p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
            let q: BigInt = q.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
            if q.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            return Ok(Length::Exact(BigRational::new(p, q)));
        }
        parse_decimal(t).map(Length::Exact).ok_or_else(|| format!("not a number: `{s}`"))
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Exact(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Length::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Length::Real(x) => write!(f, "{x}"),
        }
    }
}

impl PartialOrd for Length {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Length::Exact(a), Length::Exact(b)) => Some(a.cmp(b)),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

impl Add for &Length {
    type Output = Length;

    fn add(self, rhs: &Length) -> Length {
        match (self, rhs) {
            (Length::Exact(a), Length::Exact(b)) => Length::Exact(a + b),
            _ => Length::Real(self.to_f64() + rhs.to_f64()),
        }
    }
}

impl Add for Length {
    type Output = Length;

    fn add(self, rhs: Length) -> Length {
        &self + &rhs
    }
}

impl Mul for &Length {
    type Output = Length;

    fn mul(self, rhs: &Length) -> Length {
        match (self, rhs) {
            (Length::Exact(a), Length::Exact(b)) => Length::Exact(a * b),
            _ => Length::Real(self.to_f64() * rhs.to_f64()),
        }
    }
}

impl Sum for Length {
    fn sum<I: Iterator<Item = Length>>(iter: I) -> Length {
        iter.fold(Length::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Length> for Length {
    fn sum<I: Iterator<Item = &'a Length>>(iter: I) -> Length {
        iter.fold(Length::zero(), |a, b| &a + b)
    }
}

impl Default for Length {
    fn default() -> Self {
        Length::zero()
    }
}

impl From<BigRational> for Length {
    fn from(r: BigRational) -> Self {
        Length::Exact(r)
    }
}

// Wire form: integers as JSON numbers, other rationals as "p/q" strings,
// real-valued lengths as {"real": x} so they survive a round trip unchanged.
impl Serialize for Length {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Length::Exact(r) if r.is_integer() => match r.numer().to_i64() {
                Some(n) => serializer.serialize_i64(n),
                None => serializer.serialize_str(&self.to_string()),
            },
            Length::Exact(_) => serializer.serialize_str(&self.to_string()),
            Length::Real(x) => {
                use serde::ser::SerializeMap;
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("real", x)?;
                map.end()
            }
        }
    }
}

struct LengthVisitor;

impl<'de> Visitor<'de> for LengthVisitor {
    type Value = Length;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a number, a \"p/q\" string or {\"real\": x}")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Length, E> {
        Ok(Length::integer(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Length, E> {
        Ok(Length::Exact(BigRational::from_integer(BigInt::from(v))))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Length, E> {
        Length::from_f64_decimal(v).ok_or_else(|| E::custom(format!("non-finite length {v}")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Length, E> {
        v.parse().map_err(E::custom)
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Length, A::Error> {
        let mut value = None;
        while let Some(key) = map.next_key::<String>()? {
            if key == "real" {
                value = Some(map.next_value::<f64>()?);
            } else {
                return Err(de::Error::unknown_field(&key, &["real"]));
            }
        }
        value.map(Length::Real).ok_or_else(|| de::Error::missing_field("real"))
    }
}

impl<'de> Deserialize<'de> for Length {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(LengthVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_literals_are_exact() {
        assert_eq!("0.25".parse::<Length>().unwrap(), Length::ratio(1, 4));
        assert_eq!("3".parse::<Length>().unwrap(), Length::integer(3));
        assert_eq!("1.5e1".parse::<Length>().unwrap(), Length::integer(15));
        assert_eq!("2e-2".parse::<Length>().unwrap(), Length::ratio(1, 50));
        assert_eq!("6/4".parse::<Length>().unwrap(), Length::ratio(3, 2));
        assert!("abc".parse::<Length>().is_err());
        assert!("1/0".parse::<Length>().is_err());
    }

    #[test]
    fn f64_uses_shortest_decimal() {
        assert_eq!(Length::from_f64_decimal(0.1).unwrap(), Length::ratio(1, 10));
        assert!(Length::from_f64_decimal(f64::NAN).is_none());
    }

    #[test]
    fn mixed_arithmetic_goes_real() {
        let s = &Length::ratio(1, 3) + &Length::real(1.0);
        assert!(!s.is_exact());
        assert!((s.to_f64() - 4.0 / 3.0).abs() < 1e-15);
        let e = &Length::ratio(1, 3) + &Length::ratio(2, 3);
        assert_eq!(e, Length::integer(1));
    }

    #[test]
    fn gcd_of_rationals() {
        let v = [BigRational::new(1.into(), 2.into()), BigRational::new(2.into(), 3.into())];
        assert_eq!(rational_gcd(v.iter()).unwrap(), BigRational::new(1.into(), 6.into()));
        assert_eq!(Length::ratio(2, 3).multiple_of(&Length::ratio(1, 6)), Some(4));
        assert_eq!(Length::ratio(2, 3).multiple_of(&Length::ratio(1, 4)), None);
    }

    #[test]
    fn json_forms() {
        let v: Vec<Length> = serde_json::from_str(r#"[2, 0.5, "7/3", {"real": 1.25}]"#).unwrap();
        assert_eq!(v[0], Length::integer(2));
        assert_eq!(v[1], Length::ratio(1, 2));
        assert_eq!(v[2], Length::ratio(7, 3));
        assert_eq!(v[3], Length::Real(1.25));
        let back = serde_json::to_string(&v).unwrap();
        assert_eq!(back, r#"[2,"1/2","7/3",{"real":1.25}]"#);
    }
}
