//! The localization of `S(N)` at the even determinant Δ: fractions
//! `num / Δ^exp` with lazy normalization.

use super::division::exact_div;
use super::poly::SuperPolynomial;
use super::signature::AlgebraSignature;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use itertools::Itertools;

/// Δ = det of the leading `m×m` even block: rows are the copies
/// `t = 1, …, m`, columns the even generators `x^1, …, x^m`.  Requires
/// at least `m` copies.
pub fn delta_det(sig: AlgebraSignature) -> Result<SuperPolynomial> {
    let m = sig.m();
    if sig.copies() < m {
        return Err(Error::WrongCopyCount {
            required: format!("at least m = {m} copies"),
            found: sig.copies(),
        });
    }
    let mut det = SuperPolynomial::zero(sig);
    // sum over permutations with the inversion-count sign
    for perm in (1..=m).permutations(m) {
        let mut inversions = 0usize;
        for a in 0..m {
            for b in (a + 1)..m {
                if perm[a] > perm[b] {
                    inversions += 1;
                }
            }
        }
        let mut term = if inversions % 2 == 0 {
            SuperPolynomial::one(sig)
        } else {
            SuperPolynomial::constant(sig, -&Scalar::one())
        };
        for (t, &i) in perm.iter().enumerate() {
            term = &term * &SuperPolynomial::x(sig, i, t + 1)?;
        }
        det += &term;
    }
    Ok(det)
}

/// An element `num / Δ^exp` of the localized ring.  Equality is decided
/// by cross multiplication, so the representation need not be reduced;
/// [`LocalizedElement::normalize`] divides out Δ as often as exactness
/// permits.
#[derive(Debug, Clone)]
pub struct LocalizedElement {
    num: SuperPolynomial,
    exp: u32,
}

impl LocalizedElement {
    pub fn new(num: SuperPolynomial, exp: u32) -> Self {
        LocalizedElement { num, exp }
    }

    pub fn from_poly(num: SuperPolynomial) -> Self {
        Self::new(num, 0)
    }

    pub fn zero(sig: AlgebraSignature) -> Self {
        Self::from_poly(SuperPolynomial::zero(sig))
    }

    pub fn num(&self) -> &SuperPolynomial {
        &self.num
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn signature(&self) -> AlgebraSignature {
        self.num.signature()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Reduce the representation: cancel Δ from numerator and
    /// denominator while the division stays exact.
    pub fn normalize(&self) -> Self {
        if self.num.is_zero() {
            return Self::from_poly(SuperPolynomial::zero(self.signature()));
        }
        let delta = delta_det(self.signature()).expect("localized ring requires N ≥ m");
        let mut num = self.num.clone();
        let mut exp = self.exp;
        while exp > 0 {
            match exact_div(&num, &delta) {
                Some(q) => {
                    num = q;
                    exp -= 1;
                }
                None => break,
            }
        }
        LocalizedElement { num, exp }
    }

    /// `Some(p)` iff the element is (after normalization) a polynomial.
    pub fn as_polynomial(&self) -> Option<SuperPolynomial> {
        let r = self.normalize();
        (r.exp == 0).then_some(r.num)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let delta = delta_det(self.signature()).expect("localized ring requires N ≥ m");
        let e = self.exp.max(rhs.exp);
        let lift = |x: &Self| {
            let mut p = x.num.clone();
            for _ in 0..(e - x.exp) {
                p = &p * &delta;
            }
            p
        };
        LocalizedElement {
            num: &lift(self) + &lift(rhs),
            exp: e,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        LocalizedElement {
            num: -&self.num,
            exp: self.exp,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        LocalizedElement {
            num: &self.num * &rhs.num,
            exp: self.exp + rhs.exp,
        }
    }

    pub fn mul_poly(&self, rhs: &SuperPolynomial) -> Self {
        LocalizedElement {
            num: &self.num * rhs,
            exp: self.exp,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        LocalizedElement {
            num: self.num.scale(c),
            exp: self.exp,
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        LocalizedElement {
            num: self.num.pow(e),
            exp: self.exp * e as u32,
        }
    }
}

impl PartialEq for LocalizedElement {
    /// `n1/Δ^{e1} = n2/Δ^{e2}` iff `n1·Δ^{e2} = n2·Δ^{e1}` (Δ is a
    /// non-zero-divisor, with even part nonzero, so cross multiplication
    /// is faithful).
    fn eq(&self, rhs: &Self) -> bool {
        if self.signature() != rhs.signature() {
            return false;
        }
        let delta = delta_det(self.signature()).expect("localized ring requires N ≥ m");
        let mut left = self.num.clone();
        for _ in 0..rhs.exp {
            left = &left * &delta;
        }
        let mut right = rhs.num.clone();
        for _ in 0..self.exp {
            right = &right * &delta;
        }
        left == right
    }
}

impl Eq for LocalizedElement {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_at_m_equal_one_is_x() {
        let sig = AlgebraSignature::new(1, 1, 1);
        assert_eq!(
            delta_det(sig).unwrap(),
            SuperPolynomial::x(sig, 1, 1).unwrap()
        );
    }

    #[test]
    fn determinant_at_m_equal_two_expands() {
        let sig = AlgebraSignature::new(2, 0, 2);
        let x = |i, t| SuperPolynomial::x(sig, i, t).unwrap();
        let expect = &(&x(1, 1) * &x(2, 2)) - &(&x(2, 1) * &x(1, 2));
        assert_eq!(delta_det(sig).unwrap(), expect);
    }

    #[test]
    fn normalization_cancels_shared_factors() {
        let sig = AlgebraSignature::new(1, 1, 1);
        let x = SuperPolynomial::x(sig, 1, 1).unwrap();
        let th1 = SuperPolynomial::theta(sig, 1, 1).unwrap();
        // (x²·θ¹) / x² → θ¹ / 1
        let e = LocalizedElement::new(&x.pow(2) * &th1, 2).normalize();
        assert_eq!(e.exp(), 0);
        assert_eq!(e.num(), &th1);
        // θ¹ / x is already reduced
        let f = LocalizedElement::new(th1.clone(), 1).normalize();
        assert_eq!(f.exp(), 1);
        assert!(f.as_polynomial().is_none());
    }

    #[test]
    fn equality_ignores_representation() {
        let sig = AlgebraSignature::new(1, 0, 1);
        let x = SuperPolynomial::x(sig, 1, 1).unwrap();
        let a = LocalizedElement::new(x.pow(3), 1);
        let b = LocalizedElement::new(x.pow(2), 0);
        assert_eq!(a, b);
        let c = LocalizedElement::new(x.pow(2), 1);
        assert_ne!(a, c);
    }

    #[test]
    fn arithmetic_matches_cross_multiplied_forms() {
        let sig = AlgebraSignature::new(1, 0, 1);
        let x = SuperPolynomial::x(sig, 1, 1).unwrap();
        let one = SuperPolynomial::one(sig);
        // 1/x + 1/x² = (x + 1)/x²
        let a = LocalizedElement::new(one.clone(), 1);
        let b = LocalizedElement::new(one.clone(), 2);
        let sum = a.add(&b);
        assert_eq!(sum, LocalizedElement::new(&x + &one, 2));
        // (1/x)·(x²/1) = x
        let prod = a.mul(&LocalizedElement::from_poly(x.pow(2)));
        assert_eq!(prod.as_polynomial().unwrap(), x);
    }
}
