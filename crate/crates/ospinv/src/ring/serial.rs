//! Stable JSON-friendly term records for polynomials.
//!
//! A polynomial serializes as a list of term records, leading term
//! first.  Within a record the even factors are sorted by their
//! canonical position `(t, i)` and the odd factors by `(t, μ)`; the odd
//! list order is the order of the factors in the monomial, so no signs
//! are implied by the encoding.

use super::monomial::Monomial;
use super::poly::SuperPolynomial;
use super::signature::AlgebraSignature;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

/// One term: `coeff · Π x^i_t{}^e · Π θ^μ_t`, with the odd factor
/// `θ^μ_t` written as `(a, t)` for the full row index `a = m + μ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: Scalar,
    /// Even factors `(i, t, e)`, ascending canonical position, `e ≥ 1`.
    pub even: Vec<(usize, usize, usize)>,
    /// Odd factors `(a, t)`, ascending canonical position.
    pub odd: Vec<(usize, usize)>,
}

/// Encode, leading (greatest) term first.
pub fn poly_to_records(f: &SuperPolynomial) -> Vec<TermRecord> {
    let sig = f.signature();
    f.terms()
        .rev()
        .map(|(mono, coeff)| TermRecord {
            coeff: coeff.clone(),
            even: mono
                .even_part()
                .iter()
                .map(|&(o, e)| {
                    let (i, t) = sig.decode_even(o as usize);
                    (i, t, e as usize)
                })
                .collect(),
            odd: mono
                .odd_bits()
                .map(|b| {
                    let (mu, t) = sig.decode_odd(b);
                    (sig.m() + mu, t)
                })
                .collect(),
        })
        .collect()
}

/// Decode against a signature, validating indices, exponents, and the
/// required ascending factor order.
pub fn records_to_poly(sig: AlgebraSignature, records: &[TermRecord]) -> Result<SuperPolynomial> {
    let mut out = SuperPolynomial::zero(sig);
    for rec in records {
        let mut even: Vec<(u16, u16)> = Vec::with_capacity(rec.even.len());
        for &(i, t, e) in &rec.even {
            sig.check_copy(t)?;
            if i < 1 || i > sig.m() {
                return Err(Error::IndexOutOfRange {
                    what: "even row i",
                    value: i,
                    max: sig.m(),
                });
            }
            if e == 0 {
                return Err(Error::BadTermRecord(format!(
                    "even factor (i={i}, t={t}) has exponent 0"
                )));
            }
            let o = sig.even_ordinal(i, t);
            if let Some(&(prev, _)) = even.last() {
                if o as u16 <= prev {
                    return Err(Error::BadTermRecord(
                        "even factors out of ascending order".into(),
                    ));
                }
            }
            let e16 = u16::try_from(e).map_err(|_| {
                Error::BadTermRecord(format!("exponent {e} too large for (i={i}, t={t})"))
            })?;
            even.push((o as u16, e16));
        }
        let mut odd = 0u64;
        let mut prev_bit: Option<usize> = None;
        for &(a, t) in &rec.odd {
            sig.check_copy(t)?;
            sig.check_row(a)?;
            if a <= sig.m() {
                return Err(Error::BadTermRecord(format!(
                    "odd factor list contains even row a={a}"
                )));
            }
            let b = sig.odd_ordinal(a - sig.m(), t);
            if prev_bit.is_some_and(|p| b <= p) {
                return Err(Error::BadTermRecord(
                    "odd factors out of ascending order".into(),
                ));
            }
            prev_bit = Some(b);
            odd |= 1u64 << b;
        }
        out.add_term(Monomial::from_parts(even, odd), rec.coeff.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_preserves_the_polynomial() {
        let sig = AlgebraSignature::new(2, 1, 2);
        let x = |i, t| SuperPolynomial::x(sig, i, t).unwrap();
        let th = |mu, t| SuperPolynomial::theta(sig, mu, t).unwrap();
        let f = &(&(&x(1, 1).pow(3) * &x(2, 2)) * &th(1, 2)).scale(&Scalar::ratio(-7, 3))
            + &(&th(1, 1) * &th(2, 2)).scale(&Scalar::i());
        let records = poly_to_records(&f);
        assert_eq!(records_to_poly(sig, &records).unwrap(), f);
    }

    #[test]
    fn leading_term_comes_first() {
        let sig = AlgebraSignature::new(1, 1, 1);
        let x = SuperPolynomial::x(sig, 1, 1).unwrap();
        let th1 = SuperPolynomial::theta(sig, 1, 1).unwrap();
        let th2 = SuperPolynomial::theta(sig, 2, 1).unwrap();
        let f = &x.pow(3) - &(&(&x * &th1) * &th2).scale(&Scalar::int(3));
        let records = poly_to_records(&f);
        assert_eq!(records[0].even, vec![(1, 1, 3)]);
        assert!(records[0].odd.is_empty());
        assert_eq!(records[1].even, vec![(1, 1, 1)]);
        assert_eq!(records[1].odd, vec![(2, 1), (3, 1)]);
    }

    #[test]
    fn json_shape_is_stable() {
        let sig = AlgebraSignature::new(1, 1, 1);
        let x = SuperPolynomial::x(sig, 1, 1).unwrap();
        let json = serde_json::to_string(&poly_to_records(&x.pow(2))).unwrap();
        assert_eq!(
            json,
            r#"[{"coeff":{"re":"1","im":"0"},"even":[[1,1,2]],"odd":[]}]"#
        );
    }

    #[test]
    fn validation_rejects_malformed_records() {
        let sig = AlgebraSignature::new(1, 1, 1);
        let bad_row = TermRecord {
            coeff: Scalar::one(),
            even: vec![(2, 1, 1)],
            odd: vec![],
        };
        assert!(records_to_poly(sig, &[bad_row]).is_err());
        let bad_order = TermRecord {
            coeff: Scalar::one(),
            even: vec![],
            odd: vec![(3, 1), (2, 1)],
        };
        assert!(records_to_poly(sig, &[bad_order]).is_err());
        let even_in_odd = TermRecord {
            coeff: Scalar::one(),
            even: vec![],
            odd: vec![(1, 1)],
        };
        assert!(records_to_poly(sig, &[even_in_odd]).is_err());
    }
}
