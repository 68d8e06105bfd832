//! Tensor-power invariants through the multilinear slice.
//!
//! Monomials of multidegree `(1,…,1)` in `N` copies are in sign-free
//! bijection with words of length `N` in the `m+2n` generators, so the
//! multilinear slice of the kernel computed by brute force is the space of
//! invariants (resp. sign-twisted invariants) of the `N`-th tensor power.
//! This module spans the invariant side by permuted products of the pairing
//! element `q_{ab}` and the sign-twisted side by permuted products of a
//! harmonic slice basis with pairings, and exposes the contraction
//! (copy-mixing Laplacian) that collapses one pairing to the scalar `m−2n`.

use itertools::Itertools;

use crate::decomp::basis::monomials_of_multidegree;
use crate::decomp::gamma::gamma0_basis;
use crate::decomp::linalg::{SpanTracker, Vectorizer};
use crate::diffops::op_laplacian;
use crate::error::{Error, Result};
use crate::pfaffian::q_elem;
use crate::ring::poly::SuperPolynomial;
use crate::ring::signature::AlgebraSignature;
use crate::ring::subst::Substitution;
use crate::scalar::Scalar;

/// Number of multilinear monomials, `(m+2n)^copies` — the cost driver for
/// every tensor-power computation.
pub fn slice_size(sig: AlgebraSignature) -> usize {
    sig.dim().pow(sig.copies() as u32)
}

/// Relabel the copies of `f` by a permutation given in one-line notation:
/// copy `t` is sent to copy `perm[t-1]`.  Signs follow from reordering the
/// odd generators.
pub fn permute_copies(f: &SuperPolynomial, perm: &[usize]) -> Result<SuperPolynomial> {
    let sig = f.signature();
    let n = sig.copies();
    if perm.len() != n {
        return Err(Error::IndexOutOfRange {
            what: "permutation length",
            value: perm.len(),
            max: n,
        });
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || seen[p - 1] {
            return Err(Error::IndexOutOfRange {
                what: "permutation image",
                value: p,
                max: n,
            });
        }
        seen[p - 1] = true;
    }
    let mut subst = Substitution::new(sig, sig);
    for t in 1..=n {
        for a in 1..=sig.dim() {
            subst.set(a, t, SuperPolynomial::generator(sig, a, perm[t - 1])?)?;
        }
    }
    subst.apply(f)
}

/// The product `q_{12}·q_{34}⋯q_{N-1,N}` pairing consecutive copies.
/// Requires an even number of copies.
pub fn matched_product(sig: AlgebraSignature) -> Result<SuperPolynomial> {
    if sig.copies() % 2 != 0 {
        return Err(Error::IndexOutOfRange {
            what: "copy count (must be even to pair)",
            value: sig.copies(),
            max: sig.copies(),
        });
    }
    let mut out = SuperPolynomial::one(sig);
    for j in 0..sig.copies() / 2 {
        out = &out * &q_elem(sig, 2 * j + 1, 2 * j + 2)?;
    }
    Ok(out)
}

/// All copy-permutations of the matched pairing product — the diagrammatic
/// spanning set for tensor-power invariants.  Empty when the copy count is
/// odd (there are no invariants then).
pub fn pairing_span(sig: AlgebraSignature) -> Result<Vec<SuperPolynomial>> {
    if sig.copies() % 2 != 0 {
        return Ok(Vec::new());
    }
    let base = matched_product(sig)?;
    (1..=sig.copies())
        .permutations(sig.copies())
        .map(|p| permute_copies(&base, &p))
        .collect()
}

/// All copy-permutations of `(harmonic slice vector) · (pairing product on
/// the remaining copies)` — the spanning set for the sign-twisted part of
/// the tensor power.  Empty unless `copies ≥ m(2n+1)` with an even excess.
pub fn twisted_span(sig: AlgebraSignature) -> Result<Vec<SuperPolynomial>> {
    let r = sig.m() * (2 * sig.n() + 1);
    let big_n = sig.copies();
    if big_n < r || (big_n - r) % 2 != 0 {
        return Ok(Vec::new());
    }
    let core = AlgebraSignature::new(sig.m(), sig.n(), r);
    let mut seeds = Vec::new();
    for g in gamma0_basis(core)? {
        let mut f = g.embed(sig);
        for j in 0..(big_n - r) / 2 {
            f = &f * &q_elem(sig, r + 2 * j + 1, r + 2 * j + 2)?;
        }
        seeds.push(f);
    }
    let mut out = Vec::new();
    for p in (1..=big_n).permutations(big_n) {
        for s in &seeds {
            out.push(permute_copies(s, &p)?);
        }
    }
    Ok(out)
}

/// Rank of a family of multilinear polynomials inside the tensor slice.
pub fn slice_rank(sig: AlgebraSignature, family: &[SuperPolynomial]) -> Result<usize> {
    let ones = vec![1usize; sig.copies()];
    let vz = Vectorizer::new(sig, monomials_of_multidegree(sig, &ones)?);
    let mut span = SpanTracker::new(vz.len());
    for f in family {
        span.insert(vz.vectorize(f));
    }
    Ok(span.rank())
}

/// The contraction of the pairing element: applying the copy-mixing
/// Laplacian `Δ_{12}` to `q_{12}` yields the constant `m − 2n`.
pub fn contraction_constant(sig: AlgebraSignature) -> Result<Scalar> {
    let q = q_elem(sig, 1, 2)?;
    let c = op_laplacian(sig, 1, 2).apply(&q);
    match c.total_degree() {
        None => Ok(Scalar::zero()),
        Some(0) => Ok(c
            .terms()
            .next()
            .map(|(_, s)| s.clone())
            .unwrap_or_else(Scalar::zero)),
        Some(_) => panic!("contraction of a pairing must be a constant"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::invariants::tensor_split;
    use crate::decomp::partitions::{
        as_usize, tensor_invariant_dimension, tensor_pseudo_dimension,
    };
    use crate::ring::localized::delta_det;

    #[test]
    fn permuting_copies_carries_the_right_signs() {
        // Swapping the two columns of the 2×2 determinant negates it.
        let sig = AlgebraSignature::new(2, 0, 2);
        let d = delta_det(sig).unwrap();
        let swapped = permute_copies(&d, &[2, 1]).unwrap();
        assert!((&swapped + &d).is_zero());
        // Swapping two copies of a single odd generator also negates.
        let sig = AlgebraSignature::new(0, 1, 2);
        let f = &SuperPolynomial::generator(sig, 1, 1).unwrap()
            * &SuperPolynomial::generator(sig, 1, 2).unwrap();
        let g = permute_copies(&f, &[2, 1]).unwrap();
        assert!((&g + &f).is_zero());
        // The pairing element is supersymmetric in its two copies.
        let sig = AlgebraSignature::new(1, 1, 2);
        let q = q_elem(sig, 1, 2).unwrap();
        assert_eq!(
            permute_copies(&q, &[2, 1]).unwrap().to_string(),
            q.to_string()
        );
    }

    #[test]
    fn permutation_validation_rejects_bad_input() {
        let sig = AlgebraSignature::new(1, 1, 2);
        let q = q_elem(sig, 1, 2).unwrap();
        assert!(permute_copies(&q, &[1]).is_err());
        assert!(permute_copies(&q, &[1, 1]).is_err());
        assert!(permute_copies(&q, &[1, 3]).is_err());
    }

    #[test]
    fn pairing_span_has_the_predicted_rank() {
        let sig = AlgebraSignature::new(1, 1, 4);
        let family = pairing_span(sig).unwrap();
        let rank = slice_rank(sig, &family).unwrap();
        assert_eq!(rank, 3);
        assert_eq!(rank, as_usize(&tensor_invariant_dimension(sig)));
        // ... and coincides with the brute-force kernel.
        assert_eq!(rank, tensor_split(sig).unwrap().invariant.len());
    }

    #[test]
    fn classical_pairing_span() {
        let sig = AlgebraSignature::new(2, 0, 2);
        let family = pairing_span(sig).unwrap();
        assert_eq!(slice_rank(sig, &family).unwrap(), 1);
        assert_eq!(as_usize(&tensor_invariant_dimension(sig)), 1);
    }

    #[test]
    fn odd_copy_count_has_no_invariants() {
        let sig = AlgebraSignature::new(1, 1, 3);
        assert!(pairing_span(sig).unwrap().is_empty());
        assert_eq!(as_usize(&tensor_invariant_dimension(sig)), 0);
    }

    #[test]
    fn twisted_span_matches_the_tableau_count() {
        let sig = AlgebraSignature::new(1, 1, 3);
        let family = twisted_span(sig).unwrap();
        assert_eq!(slice_rank(sig, &family).unwrap(), 1);
        assert_eq!(as_usize(&tensor_pseudo_dimension(sig)), 1);

        let sig = AlgebraSignature::new(1, 1, 5);
        let family = twisted_span(sig).unwrap();
        assert_eq!(slice_rank(sig, &family).unwrap(), 6);
        assert_eq!(as_usize(&tensor_pseudo_dimension(sig)), 6);
    }

    #[test]
    fn twisted_span_is_empty_below_or_off_parity() {
        let sig = AlgebraSignature::new(1, 1, 2);
        assert!(twisted_span(sig).unwrap().is_empty());
        let sig = AlgebraSignature::new(1, 1, 4);
        assert!(twisted_span(sig).unwrap().is_empty());
        assert_eq!(as_usize(&tensor_pseudo_dimension(sig)), 0);
    }

    #[test]
    fn contraction_collapses_a_pairing_to_the_dimension_constant() {
        for (m, n, expect) in [(1usize, 1usize, -1i64), (2, 1, 0), (1, 2, -3), (2, 0, 2)] {
            let sig = AlgebraSignature::new(m, n, 2);
            assert_eq!(contraction_constant(sig).unwrap(), Scalar::int(expect));
        }
    }

    #[test]
    fn slice_size_is_the_word_count() {
        assert_eq!(slice_size(AlgebraSignature::new(1, 1, 4)), 81);
        assert_eq!(slice_size(AlgebraSignature::new(2, 1, 3)), 64);
    }
}
