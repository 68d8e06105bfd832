//! The pseudo-invariant built from the localized square root.
//!
//! Over `N = m` copies, the even determinant `Δ` of the matrix of even
//! generators becomes invertible after localization, and
//! `ζ = det Q − Δ²` is nilpotent. The square root
//! `F = √(1 + ζ/Δ²)` is defined by its (finite) binomial series, and
//! the elements `Δ F (det Q)^k` interpolate between genuinely singular
//! localized elements (`k` small) and honest polynomials (`k` large).
//! The first polynomial in the family, at `k = n`, is the pseudo-
//! invariant `Ω` returned by [`omega`].

use crate::error::{Error, Result};
use crate::pfaffian::quadratics::d_poly;
use crate::ring::localized::{delta_det, LocalizedElement};
use crate::ring::poly::SuperPolynomial;
use crate::ring::signature::AlgebraSignature;
use crate::ring::subst::specialize_xi;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Generalized binomial coefficient `α(α−1)⋯(α−k+1)/k!` over exact
/// rationals.
pub fn binomial_scalar(alpha: &Scalar, k: usize) -> Scalar {
    let mut num = Scalar::one();
    for j in 0..k as i64 {
        num = &num * &(alpha - &Scalar::int(j));
        num = &num * &Scalar::ratio(1, j + 1);
    }
    num
}

fn require_square(sig: AlgebraSignature) -> Result<()> {
    if sig.copies() != sig.m() {
        return Err(Error::WrongCopyCount {
            required: format!("exactly m = {} copies", sig.m()),
            found: sig.copies(),
        });
    }
    Ok(())
}

/// `ζ = det Q − Δ²` over `N = m` copies. Its body vanishes, so it is
/// nilpotent; every term carries at least two odd generators.
pub fn zeta(sig: AlgebraSignature) -> Result<SuperPolynomial> {
    require_square(sig)?;
    let d = d_poly(sig, sig.m())?;
    let delta = delta_det(sig)?;
    Ok(&d - &delta.pow(2))
}

/// The nilpotency index of `ζ`: the largest `K` with `ζ^K ≠ 0`,
/// together with the powers `ζ^0, …, ζ^K`. Since each term of `ζ`
/// holds at least two of the `2 n m` odd generators, `K ≤ n m`; the
/// computation panics if that certificate is ever violated.
pub fn zeta_powers(sig: AlgebraSignature) -> Result<(usize, Vec<SuperPolynomial>)> {
    let z = zeta(sig)?;
    let cap = sig.m() * sig.n();
    let mut powers = vec![SuperPolynomial::one(sig)];
    loop {
        let next = &powers[powers.len() - 1] * &z;
        if next.is_zero() {
            break;
        }
        powers.push(next);
        assert!(
            powers.len() <= cap + 1,
            "nilpotency certificate violated: ζ^{} ≠ 0 with only {} odd generators",
            powers.len() - 1,
            2 * cap
        );
    }
    Ok((powers.len() - 1, powers))
}

/// `Δ F (det Q)^j` as a localized element, from the finite binomial
/// series `Δ^{2j+1} Σ_k C(j+½, k) (ζ/Δ²)^k`. Requires `N = m`.
pub fn delta_f_detq_pow(sig: AlgebraSignature, j: usize) -> Result<LocalizedElement> {
    require_square(sig)?;
    let (kmax, zpow) = zeta_powers(sig)?;
    let delta = delta_det(sig)?;
    let alpha = &Scalar::int(j as i64) + &Scalar::ratio(1, 2);
    let mut num = SuperPolynomial::zero(sig);
    for (k, zk) in zpow.iter().enumerate() {
        let coeff = binomial_scalar(&alpha, k);
        // Δ-exponent 2(j + K − k) + 1 against the denominator Δ^{2K}
        let dpow = delta.pow(2 * (j + kmax - k) + 1);
        num += &(zk * &dpow).scale(&coeff);
    }
    Ok(LocalizedElement::new(num, 2 * kmax as u32).normalize())
}

/// `Δ F` itself (the `j = 0` member of the family).
pub fn delta_f(sig: AlgebraSignature) -> Result<LocalizedElement> {
    delta_f_detq_pow(sig, 0)
}

/// Does `Δ F (det Q)^j` clear its denominator? True exactly when the
/// localized element is an honest polynomial.
pub fn membership(sig: AlgebraSignature, j: usize) -> Result<bool> {
    Ok(delta_f_detq_pow(sig, j)?.as_polynomial().is_some())
}

/// The pseudo-invariant `Ω = Δ F (det Q)^n`, an honest polynomial of
/// degree `m(2n+1)`, computed over `m` copies and embedded into `sig`.
/// Panics if `sig` has fewer than `m` copies; see [`try_omega`] for the
/// fallible variant. For `n = 0` this is just `Δ`, and for `m = 0` the
/// construction degenerates to the constant `1`.
pub fn omega(sig: AlgebraSignature) -> SuperPolynomial {
    try_omega(sig).expect("omega needs at least m copies")
}

/// Fallible variant of [`omega`]: errors when `sig` has fewer than `m`
/// copies instead of panicking.
pub fn try_omega(sig: AlgebraSignature) -> Result<SuperPolynomial> {
    let m = sig.m();
    if m == 0 {
        return Ok(SuperPolynomial::one(sig));
    }
    if sig.copies() < m {
        return Err(Error::WrongCopyCount {
            required: format!("at least m = {m} copies"),
            found: sig.copies(),
        });
    }
    let base = AlgebraSignature::try_new(m, sig.n(), m)?;
    let poly = if sig.n() == 0 {
        delta_det(base)?
    } else {
        let loc = delta_f_detq_pow(base, sig.n())?;
        loc.as_polynomial().unwrap_or_else(|| {
            panic!(
                "the pseudo-invariant failed to clear its denominator at (m, n) = ({}, {})",
                m,
                sig.n()
            )
        })
    };
    Ok(poly.embed(sig))
}

/// Push a localized element through the evaluation onto the distinguished
/// ray: the numerator maps by [`specialize_xi`] and the denominator
/// `Δ^e` divides through as `t^e`, so keys may go negative. A localized
/// element is regular on the ray exactly when all keys are ≥ 0.
pub fn xi_of_localized(loc: &LocalizedElement) -> Result<BTreeMap<i64, SuperPolynomial>> {
    let raw = specialize_xi(loc.num())?;
    let shift = loc.exp() as i64;
    Ok(raw.into_iter().map(|(e, f)| (e - shift, f)).collect())
}
