//! Sparse elements of `S(N)` and the supercommutative ring operations.

use super::monomial::Monomial;
use super::signature::AlgebraSignature;
use crate::error::Result;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A polynomial of `S(N)`: a signature plus a canonical-ordered term map
/// with no zero coefficients.
///
/// Binary operations panic when the operands' signatures differ; that is
/// a programming error, like adding vectors of different lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPolynomial {
    sig: AlgebraSignature,
    terms: BTreeMap<Monomial, Scalar>,
}

impl SuperPolynomial {
    /// The zero polynomial.
    pub fn zero(sig: AlgebraSignature) -> Self {
        SuperPolynomial {
            sig,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1`.
    pub fn one(sig: AlgebraSignature) -> Self {
        Self::constant(sig, Scalar::one())
    }

    /// A constant polynomial.
    pub fn constant(sig: AlgebraSignature, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        SuperPolynomial { sig, terms }
    }

    /// The even generator `x^i_t`.
    pub fn x(sig: AlgebraSignature, i: usize, t: usize) -> Result<Self> {
        sig.check_copy(t)?;
        sig.check_row(i)?;
        if i > sig.m() {
            return Err(crate::Error::IndexOutOfRange {
                what: "even row i",
                value: i,
                max: sig.m(),
            });
        }
        Ok(Self::from_term(
            sig,
            Monomial::even_gen(sig.even_ordinal(i, t)),
            Scalar::one(),
        ))
    }

    /// The odd generator `θ^μ_t`, `1 ≤ μ ≤ 2n`.
    pub fn theta(sig: AlgebraSignature, mu: usize, t: usize) -> Result<Self> {
        sig.check_copy(t)?;
        if mu < 1 || mu > 2 * sig.n() {
            return Err(crate::Error::IndexOutOfRange {
                what: "odd index μ",
                value: mu,
                max: 2 * sig.n(),
            });
        }
        Ok(Self::from_term(
            sig,
            Monomial::odd_gen(sig.odd_ordinal(mu, t)),
            Scalar::one(),
        ))
    }

    /// The generator `X^a_t` addressed by its row `a ∈ {1, …, m+2n}`.
    pub fn generator(sig: AlgebraSignature, a: usize, t: usize) -> Result<Self> {
        sig.check_row(a)?;
        if a <= sig.m() {
            Self::x(sig, a, t)
        } else {
            Self::theta(sig, a - sig.m(), t)
        }
    }

    /// Single-term polynomial.
    pub fn from_term(sig: AlgebraSignature, mono: Monomial, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        SuperPolynomial { sig, terms }
    }

    /// Collect terms, summing duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(
        sig: AlgebraSignature,
        iter: I,
    ) -> Self {
        let mut p = Self::zero(sig);
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn signature(&self) -> AlgebraSignature {
        self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Canonical-order iteration (ascending; reversible for leading-first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coefficient(&self, mono: &Monomial) -> Scalar {
        self.terms.get(mono).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Add `coeff·mono` in place.
    pub fn add_term(&mut self, mono: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(c) => {
                *c += &coeff;
                if c.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, coeff);
            }
        }
    }

    fn assert_same_sig(&self, rhs: &Self) {
        assert_eq!(
            self.sig, rhs.sig,
            "signature mismatch: {} vs {}",
            self.sig, rhs.sig
        );
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.sig);
        }
        SuperPolynomial {
            sig: self.sig,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// `self^e` by repeated multiplication (`e = 0` gives `1`).
    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one(self.sig);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Parity of a homogeneous polynomial; `None` for zero or mixed.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys();
        let first = it.next()?.parity();
        it.all(|m| m.parity() == first).then_some(first)
    }

    /// Common total degree of all terms; `None` for zero or inhomogeneous.
    pub fn total_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let first = it.next()?.total_degree();
        it.all(|m| m.total_degree() == first).then_some(first)
    }

    /// Largest total degree among the terms (0 for the zero polynomial).
    pub fn max_degree(&self) -> usize {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Per-copy degree vector of one monomial under this signature.
    pub fn mono_multidegree(&self, mono: &Monomial) -> Vec<usize> {
        let mut deg = vec![0usize; self.sig.copies()];
        if self.sig.m() > 0 {
            for &(o, e) in mono.even_part() {
                deg[o as usize / self.sig.m()] += e as usize;
            }
        }
        if self.sig.n() > 0 {
            for b in mono.odd_bits() {
                deg[b / (2 * self.sig.n())] += 1;
            }
        }
        deg
    }

    /// The common multidegree (per-copy degree vector) of all terms, i.e.
    /// the joint eigenvalue vector of the Euler operators `E_tt`;
    /// `None` for zero or non-multihomogeneous polynomials.
    pub fn multidegree(&self) -> Option<Vec<usize>> {
        let mut it = self.terms.keys();
        let first = self.mono_multidegree(it.next()?);
        it.all(|m| self.mono_multidegree(m) == first)
            .then_some(first)
    }

    /// The image under the homomorphism sending every odd generator to
    /// zero — the "leading term" map that exposes the classical
    /// (purely even) part of an invariant.
    pub fn leading_term(&self) -> Self {
        SuperPolynomial {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.odd_mask() == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Greatest term in the canonical order, if any.
    pub fn max_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Reinterpret in a ring with more copies of `V` (same `m`, `n`).
    /// Generator indices are stable under this extension, so the terms
    /// carry over unchanged.
    pub fn embed(&self, target: AlgebraSignature) -> Self {
        assert_eq!(self.sig.m(), target.m(), "embed must preserve m");
        assert_eq!(self.sig.n(), target.n(), "embed must preserve n");
        assert!(
            target.copies() >= self.sig.copies(),
            "embed cannot drop copies"
        );
        SuperPolynomial {
            sig: target,
            terms: self.terms.clone(),
        }
    }
}

impl AddAssign<&SuperPolynomial> for SuperPolynomial {
    fn add_assign(&mut self, rhs: &SuperPolynomial) {
        self.assert_same_sig(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&SuperPolynomial> for SuperPolynomial {
    fn sub_assign(&mut self, rhs: &SuperPolynomial) {
        self.assert_same_sig(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        SuperPolynomial {
            sig: self.sig,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.assert_same_sig(rhs);
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                // products sharing an odd generator vanish; skip early
                if ma.odd_mask() & mb.odd_mask() != 0 {
                    continue;
                }
                let (sign, m) = ma.mul(mb).expect("disjoint odd parts");
                let mut c = ca * cb;
                if sign < 0 {
                    c = -c;
                }
                match terms.get_mut(&m) {
                    Some(acc) => *acc += &c,
                    None => {
                        terms.insert(m, c);
                    }
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SuperPolynomial {
            sig: self.sig,
            terms,
        }
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sig = self.sig;
        for (idx, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            for &(o, e) in mono.even_part() {
                let (i, t) = sig.decode_even(o as usize);
                let name = sig.even_name(i, t);
                factors.push(if e > 1 { format!("{name}^{e}") } else { name });
            }
            for b in mono.odd_bits() {
                let (mu, t) = sig.decode_odd(b);
                factors.push(sig.odd_name(mu, t));
            }
            let body = factors.join("·");
            if coeff.is_real() {
                let negative = coeff.re() < &num::BigRational::from_integer(0.into());
                let mag = if negative { -coeff } else { coeff.clone() };
                match (idx, negative) {
                    (0, false) => {}
                    (0, true) => write!(f, "-")?,
                    (_, false) => write!(f, " + ")?,
                    (_, true) => write!(f, " - ")?,
                }
                if body.is_empty() {
                    write!(f, "{mag}")?;
                } else if mag.is_one() {
                    write!(f, "{body}")?;
                } else {
                    write!(f, "{mag}·{body}")?;
                }
            } else {
                if idx > 0 {
                    write!(f, " + ")?;
                }
                if body.is_empty() {
                    write!(f, "({coeff})")?;
                } else {
                    write!(f, "({coeff})·{body}")?;
                }
            }
        }
        Ok(())
    }
}
