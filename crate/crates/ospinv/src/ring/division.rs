//! Exact division of polynomials in `S(N)`.

use super::poly::SuperPolynomial;

/// Divide `f` by `d` exactly: returns `q` with `q·d = f`, or `None` when
/// no such quotient is found.
///
/// The algorithm repeatedly cancels the greatest remaining term of the
/// dividend against the greatest term of `d`.  When every term of `d` is
/// even this is a complete decision procedure: the canonical term order
/// is translation-invariant under multiplication by even monomials, so
/// the greatest term of any product `q·d` is the product of the greatest
/// terms, and a failed cancellation proves indivisibility.  For divisors
/// with odd terms the same loop is a sound best effort (any quotient it
/// returns is certified by construction), but a `None` is not a proof.
///
/// # Panics
///
/// Panics when `d` is zero.
pub fn exact_div(f: &SuperPolynomial, d: &SuperPolynomial) -> Option<SuperPolynomial> {
    assert!(!d.is_zero(), "division by the zero polynomial");
    let sig = f.signature();
    let divisor_is_even = d.terms().all(|(m, _)| m.parity() == 0 && m.odd_mask() == 0);
    let (md, cd) = {
        let (m, c) = d.max_term().expect("nonzero divisor");
        (m.clone(), c.clone())
    };
    let mut q = SuperPolynomial::zero(sig);
    let mut r = f.clone();
    // generous safety cap for the non-even case, where the strict
    // decrease of the remainder's greatest term is not guaranteed
    let mut budget = 64 + 4 * (f.num_terms() + 1) * (d.num_terms() + 1);
    while !r.is_zero() {
        if !divisor_is_even {
            if budget == 0 {
                return None;
            }
            budget -= 1;
        }
        let (mr, cr) = {
            let (m, c) = r.max_term().expect("nonzero remainder");
            (m.clone(), c.clone())
        };
        let (sign, mq) = mr.try_div(&md)?;
        let mut qc = &cr / &cd;
        if sign < 0 {
            qc = -qc;
        }
        let qterm = SuperPolynomial::from_term(sig, mq, qc);
        r -= &(&qterm * d);
        q += &qterm;
    }
    debug_assert_eq!(&q * d, *f, "exact division certificate");
    Some(q)
}
