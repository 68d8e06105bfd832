//! Exact scalars: the Gaussian rational field ℚ(i).
//!
//! Every coefficient in the engine is a [`Scalar`], a pair of
//! arbitrary-precision rationals representing `re + im·i`.  The imaginary
//! unit is needed only for the complex change of variables in the
//! `osp(2|2)` construction; all other computations stay inside ℚ ⊂ ℚ(i).
//!
//! Both components are kept in lowest terms with a positive denominator
//! (the canonical form maintained by [`num::BigRational`]), so equality is
//! structural and serialization is deterministic.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Arbitrary-precision rational, re-exported for constructor convenience.
pub type Rat = BigRational;

/// An element `re + im·i` of ℚ(i), exact.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Scalar {
    re: Rat,
    im: Rat,
}

/// Multiply two rationals, skipping the gcd pass when both are integers
/// (the dominant case in determinant work, where everything is integral).
fn rat_mul(a: &Rat, b: &Rat) -> Rat {
    if a.is_integer() && b.is_integer() {
        Rat::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

fn rat_add(a: &Rat, b: &Rat) -> Rat {
    if a.is_integer() && b.is_integer() {
        Rat::from_integer(a.numer() + b.numer())
    } else {
        a + b
    }
}

impl Scalar {
    /// Build from explicit real and imaginary rational parts.
    pub fn new(re: Rat, im: Rat) -> Self {
        Scalar { re, im }
    }

    /// The rational `re + 0i`.
    pub fn from_rat(re: Rat) -> Self {
        Scalar {
            re,
            im: Rat::zero(),
        }
    }

    /// The integer `k`.
    pub fn int(k: i64) -> Self {
        Scalar::from_rat(Rat::from_integer(BigInt::from(k)))
    }

    /// The rational `p/q` (`q ≠ 0`).
    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::from_rat(Rat::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        Scalar {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True iff the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn re(&self) -> &Rat {
        &self.re
    }

    pub fn im(&self) -> &Rat {
        &self.im
    }

    /// Complex conjugate `re − im·i`.
    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// Panics on zero, like integer division in the standard library.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        let norm = &self.re * &self.re + &self.im * &self.im;
        Scalar {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        }
    }

    /// Format a real rational for embedding in reports: `p` or `p/q`.
    fn fmt_rat(r: &Rat) -> String {
        r.to_string()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut wrote_re = false;
        if !self.re.is_zero() {
            write!(f, "{}", Self::fmt_rat(&self.re))?;
            wrote_re = true;
        }
        if !self.im.is_zero() {
            let abs = self.im.abs();
            let sign = if self.im.is_negative() {
                "-"
            } else if wrote_re {
                "+"
            } else {
                ""
            };
            if abs.is_one() {
                write!(f, "{sign}i")?;
            } else {
                write!(f, "{sign}{}i", Self::fmt_rat(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: rat_add(&self.re, &rhs.re),
            im: rat_add(&self.im, &rhs.im),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re = rat_add(&self.re, &rhs.re);
        self.im = rat_add(&self.im, &rhs.im);
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re = &self.re - &rhs.re;
        self.im = &self.im - &rhs.im;
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // Fast path: both real (the overwhelmingly common case).
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar {
                re: rat_mul(&self.re, &rhs.re),
                im: Rat::zero(),
            };
        }
        Scalar {
            re: rat_mul(&self.re, &rhs.re) - rat_mul(&self.im, &rhs.im),
            im: rat_add(&rat_mul(&self.re, &rhs.im), &rat_mul(&self.im, &rhs.re)),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl From<i64> for Scalar {
    fn from(k: i64) -> Self {
        Scalar::int(k)
    }
}

/// Wire form: `{"re": "p/q", "im": "p/q"}`, both components in lowest
/// terms with positive denominator.
#[derive(Serialize, Deserialize)]
struct ScalarRecord {
    re: String,
    im: String,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ScalarRecord {
            re: self.re.to_string(),
            im: self.im.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rec = ScalarRecord::deserialize(deserializer)?;
        let parse = |s: &str| {
            Rat::from_str(s)
                .map_err(|e| serde::de::Error::custom(format!("bad rational {s:?}: {e}")))
        };
        Ok(Scalar {
            re: parse(&rec.re)?,
            im: parse(&rec.im)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(p: i64, q: i64) -> Scalar {
        Scalar::ratio(p, q)
    }

    #[test]
    fn canonical_form_lowest_terms() {
        let half = s(2, 4);
        assert_eq!(half, s(1, 2));
        assert_eq!(half.re().numer(), &BigInt::from(1));
        assert_eq!(half.re().denom(), &BigInt::from(2));
        // negative denominators are normalized away
        let neg = s(1, -3);
        assert_eq!(neg, s(-1, 3));
        assert!(neg.re().denom().is_positive());
    }

    #[test]
    fn complex_product_and_inverse() {
        let z = &Scalar::int(1) + &Scalar::i(); // 1 + i
        let w = &z * &z; // 2i
        assert_eq!(w, &Scalar::int(2) * &Scalar::i());
        assert!((&z * &z.inv()).is_one());
        assert_eq!(&z * &z.conj(), Scalar::int(2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::int(-3).to_string(), "-3");
        assert_eq!(s(3, 2).to_string(), "3/2");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!((&Scalar::int(1) - &Scalar::i()).to_string(), "1-i");
        let z = &s(3, 2) + &(&s(-1, 2) * &Scalar::i());
        assert_eq!(z.to_string(), "3/2-1/2i");
    }

    #[test]
    fn serde_round_trip() {
        let z = &s(-7, 3) + &(&s(5, 2) * &Scalar::i());
        let json = serde_json::to_string(&z).unwrap();
        assert_eq!(json, r#"{"re":"-7/3","im":"5/2"}"#);
        let back: Scalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, z);
    }

    proptest! {
        /// Exactness: (a+b)−b = a and (a·b)/b = a for all a, nonzero b.
        #[test]
        fn exact_field_arithmetic(
            ar in -50i64..50, aq in 1i64..20, ai in -50i64..50,
            br in -50i64..50, bq in 1i64..20, bi in -50i64..50,
        ) {
            let a = &s(ar, aq) + &(&s(ai, aq) * &Scalar::i());
            let b = &s(br, bq) + &(&s(bi, bq) * &Scalar::i());
            prop_assert_eq!(&(&(&a + &b) - &b), &a);
            if !b.is_zero() {
                prop_assert_eq!(&(&(&a * &b) / &b), &a);
            }
        }
    }
}
