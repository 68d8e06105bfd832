//! The copy-mixing closure of the determinant-twisted generator.
//!
//! Starting from the top invariant `Ω` and repeatedly applying the
//! copy-lowering operators `E_{ts}` (`t > s`) produces a finite-dimensional
//! space `Γ` whose dimension is given by a closed product formula
//! ([`dim_gamma`]).  Its multidegree-`(1,…,1)` slice `Γ⁰` is spanned by
//! harmonic vectors: every copy-mixing Laplacian annihilates it.
//!
//! The same space controls generation in each degree: the sign-twisted
//! invariants of degree `d` are exactly the products of `Γ` with the plain
//! invariants of degree `d - deg Ω`.

use crate::decomp::basis::monomials_of_degree;
use crate::decomp::invariants::graded_split;
use crate::decomp::linalg::{SpanTracker, Vectorizer};
use crate::decomp::partitions::{as_usize, dim_gamma};
use crate::diffops::{op_e, op_laplacian};
use crate::error::{Error, Result};
use crate::pfaffian::{d_lambda, d_poly, q_elem, try_omega};
use crate::ring::division::exact_div;
use crate::ring::poly::SuperPolynomial;
use crate::ring::signature::AlgebraSignature;
use crate::scalar::Scalar;

/// A basis of the space spanned by `Ω` and all its images under repeated
/// copy-lowering `E_{ts}` (`t > s`).  Panics if the closure ever exceeds
/// the closed dimension formula; returns once it stabilizes.
pub fn gamma_basis(sig: AlgebraSignature) -> Result<Vec<SuperPolynomial>> {
    let omega = try_omega(sig)?;
    let target = as_usize(&dim_gamma(sig));
    let degree = sig.m() * (2 * sig.n() + 1);
    let vz = Vectorizer::new(sig, monomials_of_degree(sig, degree)?);
    let mut tracker = SpanTracker::new(vz.len());
    assert!(tracker.insert(vz.vectorize(&omega)));
    let mut basis = vec![omega.clone()];
    let mut frontier = vec![omega];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for t in 2..=sig.copies() {
                for s in 1..t {
                    let g = op_e(sig, t, s).apply(f);
                    if g.is_zero() {
                        continue;
                    }
                    if tracker.insert(vz.vectorize(&g)) {
                        assert!(
                            tracker.rank() <= target,
                            "lowering closure exceeded the dimension formula"
                        );
                        basis.push(g.clone());
                        next.push(g);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(basis)
}

/// The multidegree-`(1,…,1)` slice of [`gamma_basis`].  Only meaningful when
/// the copy count equals `deg Ω = m(2n+1)`, where the slice is nonzero.
pub fn gamma0_basis(sig: AlgebraSignature) -> Result<Vec<SuperPolynomial>> {
    let ones = vec![1usize; sig.copies()];
    Ok(gamma_basis(sig)?
        .into_iter()
        .filter(|f| f.multidegree().as_deref() == Some(&ones))
        .collect())
}

/// Does every copy-mixing Laplacian `Δ_{st}` (`s ≠ t`) annihilate `f`?
pub fn is_harmonic(sig: AlgebraSignature, f: &SuperPolynomial) -> bool {
    for s in 1..=sig.copies() {
        for t in 1..=sig.copies() {
            if s != t && !op_laplacian(sig, s, t).apply(f).is_zero() {
                return false;
            }
        }
    }
    true
}

/// The sign-twisted highest-weight vector attached to an admissible even
/// partition `mu` with `mu_m ≥ 2n ≥ mu_{m+1}`: the exact quotient
/// `Ω·D_mu / D(m)^n`.  Returns `None` if the division fails (which would
/// falsify the structure theory).
pub fn pseudo_hwv(sig: AlgebraSignature, mu: &[usize]) -> Result<Option<SuperPolynomial>> {
    let omega = try_omega(sig)?;
    let num = &omega * &d_lambda(sig, mu)?;
    if sig.n() == 0 {
        return Ok(Some(num));
    }
    let den = d_poly(sig, sig.m())?.pow(sig.n());
    Ok(exact_div(&num, &den))
}

/// The lowest sign-twisted highest-weight vector beyond `Ω` itself, built
/// operator-style: `q_{m+1,m+1}·Ω − (2n+1)⁻¹ Σ_{r≤m} q_{r,m+1}·E_{m+1,r}(Ω)`.
/// Requires at least `m+1` copies.
pub fn first_pseudo_hwv(sig: AlgebraSignature) -> Result<SuperPolynomial> {
    let m = sig.m();
    if sig.copies() < m + 1 {
        return Err(Error::IndexOutOfRange {
            what: "copy",
            value: m + 1,
            max: sig.copies(),
        });
    }
    let omega = try_omega(sig)?;
    let mut out = &q_elem(sig, m + 1, m + 1)? * &omega;
    let c = Scalar::ratio(-1, 2 * sig.n() as i64 + 1);
    for r in 1..=m {
        let term = &q_elem(sig, r, m + 1)? * &op_e(sig, m + 1, r).apply(&omega);
        out = &out + &term.scale(&c);
    }
    Ok(out)
}

/// Check that in degree `d` the sign-twisted invariants are exactly
/// `Γ · (invariants of degree d − deg Ω)`: products land inside the
/// sign-twisted part and span all of it.
pub fn generation_check(sig: AlgebraSignature, d: usize) -> Result<bool> {
    let r = sig.m() * (2 * sig.n() + 1);
    let pseudo = graded_split(sig, d)?.pseudo;
    if d < r {
        return Ok(pseudo.is_empty());
    }
    let gamma = gamma_basis(sig)?;
    let invariants = graded_split(sig, d - r)?.invariant;
    let vz = Vectorizer::new(sig, monomials_of_degree(sig, d)?);
    let mut span = SpanTracker::new(vz.len());
    for p in &pseudo {
        span.insert(vz.vectorize(p));
    }
    let dim = span.rank();
    let mut products = SpanTracker::new(vz.len());
    for g in &gamma {
        for s in &invariants {
            let gs = g * s;
            if !span.contains(&vz.vectorize(&gs)) {
                return Ok(false);
            }
            products.insert(vz.vectorize(&gs));
        }
    }
    Ok(products.rank() == dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::partitions::f_standard;
    use crate::diffops::is_highest_weight;
    use crate::pfaffian::omega;
    use crate::ring::subst::{group_action, GroupElement};

    fn sig112() -> AlgebraSignature {
        AlgebraSignature::new(1, 1, 2)
    }

    #[test]
    fn lowering_closure_realizes_the_product_formula() {
        let b = gamma_basis(sig112()).unwrap();
        assert_eq!(b.len(), 4);
        let sig = AlgebraSignature::new(1, 1, 3);
        assert_eq!(gamma_basis(sig).unwrap().len(), 10);
    }

    #[test]
    fn closure_vectors_are_sign_twisted() {
        let sig = sig112();
        let refl = GroupElement::reflection(1, 1);
        for f in gamma_basis(sig).unwrap() {
            let g = group_action(&refl, &f).unwrap();
            assert!((&g + &f).is_zero());
        }
    }

    #[test]
    fn ones_slice_is_harmonic_and_has_tableau_dimension() {
        let sig = AlgebraSignature::new(1, 1, 3);
        let g0 = gamma0_basis(sig).unwrap();
        assert_eq!(g0.len(), as_usize(&f_standard(&[3])));
        for f in &g0 {
            assert!(is_harmonic(sig, f));
        }
    }

    #[test]
    fn classical_ones_slice_matches_column_tableaux() {
        // No odd variables: Ω is the plain 2×2 determinant and Γ⁰ is the
        // sign representation of the symmetric group on two copies.
        let sig = AlgebraSignature::new(2, 0, 2);
        let g0 = gamma0_basis(sig).unwrap();
        assert_eq!(g0.len(), as_usize(&f_standard(&[1, 1])));
        for f in &g0 {
            assert!(is_harmonic(sig, f));
        }
    }

    #[test]
    fn quotient_and_operator_forms_of_the_next_highest_weight_agree() {
        let sig = sig112();
        let a = pseudo_hwv(sig, &[2, 2]).unwrap().expect("division clears");
        let b = first_pseudo_hwv(sig).unwrap();
        assert_eq!(a.to_string(), b.to_string());
        assert!(is_highest_weight(&a));
        assert_eq!(a.multidegree(), Some(vec![3, 2]));
        let refl = GroupElement::reflection(1, 1);
        assert!((&group_action(&refl, &a).unwrap() + &a).is_zero());
    }

    #[test]
    fn omega_itself_is_the_bottom_highest_weight() {
        // The admissible partition (2n, …, 2n) with m parts recovers Ω.
        let sig = sig112();
        let om = omega(sig);
        assert!(is_highest_weight(&om));
        assert_eq!(
            pseudo_hwv(sig, &[2]).unwrap().unwrap().to_string(),
            om.to_string()
        );
    }

    #[test]
    fn twisted_invariants_are_generated_in_each_degree() {
        let sig = sig112();
        for d in 0..=6 {
            assert!(generation_check(sig, d).unwrap(), "degree {d}");
        }
    }
}
