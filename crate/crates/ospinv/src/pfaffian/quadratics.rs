//! The invariant quadratics `q_{t s} = 𝕏_t · κ⁻¹ · 𝕏_sᵀ`, the leading
//! principal matrices built from them, their determinants, and products
//! of those determinants indexed by even partitions.

use crate::error::{Error, Result};
use crate::pfaffian::matrix::PolyMatrix;
use crate::ring::metric::kappa_inv_row;
use crate::ring::poly::SuperPolynomial;
use crate::ring::signature::AlgebraSignature;
use crate::scalar::Scalar;

/// Contribution of the even generators: `Σ_i x^i_t x^i_s`.
pub fn p_elem(sig: AlgebraSignature, t: usize, s: usize) -> Result<SuperPolynomial> {
    sig.check_copy(t)?;
    sig.check_copy(s)?;
    let mut out = SuperPolynomial::zero(sig);
    for i in 1..=sig.m() {
        let a = SuperPolynomial::x(sig, i, t)?;
        let b = SuperPolynomial::x(sig, i, s)?;
        out += &(&a * &b);
    }
    Ok(out)
}

/// Contribution of the odd generators: `Σ_{μ ν} θ^μ_t (η⁻¹)_{μ ν} θ^ν_s`.
pub fn phi_elem(sig: AlgebraSignature, t: usize, s: usize) -> Result<SuperPolynomial> {
    sig.check_copy(t)?;
    sig.check_copy(s)?;
    let mut out = SuperPolynomial::zero(sig);
    for a in (sig.m() + 1)..=sig.dim() {
        let ga = SuperPolynomial::generator(sig, a, t)?;
        for &(c, ref v) in &kappa_inv_row(sig, a) {
            let gc = SuperPolynomial::generator(sig, c, s)?;
            out += &(&ga * &gc).scale(v);
        }
    }
    Ok(out)
}

/// The full pairing `q_{t s} = Σ_{a c} X^a_t (κ⁻¹)_{a c} X^c_s`,
/// symmetric in `t, s` and invariant under the isometry group.
pub fn q_elem(sig: AlgebraSignature, t: usize, s: usize) -> Result<SuperPolynomial> {
    Ok(&p_elem(sig, t, s)? + &phi_elem(sig, t, s)?)
}

/// The `k × k` matrix `(q_{t s})_{1 ≤ t, s ≤ k}`.
pub fn q_matrix(sig: AlgebraSignature, k: usize) -> Result<PolyMatrix> {
    if k > sig.copies() {
        return Err(Error::IndexOutOfRange {
            what: "matrix size",
            value: k,
            max: sig.copies(),
        });
    }
    PolyMatrix::from_fn(sig, k, |r, c| q_elem(sig, r + 1, c + 1))
}

/// `D(k) = det (q_{t s})_{t, s ≤ k}`; `D(0) = 1`.
pub fn d_poly(sig: AlgebraSignature, k: usize) -> Result<SuperPolynomial> {
    Ok(q_matrix(sig, k)?.det())
}

/// Turn a weakly decreasing even partition `λ` into the exponent list
/// `ℓ_i = (λ_i − λ_{i+1}) / 2`, one entry per part position `1..=len`.
pub fn ell_from_even_partition(lambda: &[usize]) -> Result<Vec<usize>> {
    for (idx, &part) in lambda.iter().enumerate() {
        if part % 2 != 0 {
            return Err(Error::BadPartition(format!(
                "part {} is odd: {part}",
                idx + 1
            )));
        }
        if idx + 1 < lambda.len() && lambda[idx + 1] > part {
            return Err(Error::BadPartition(format!(
                "parts increase at position {}: {} < {}",
                idx + 1,
                part,
                lambda[idx + 1]
            )));
        }
    }
    Ok((0..lambda.len())
        .map(|i| {
            let next = if i + 1 < lambda.len() {
                lambda[i + 1]
            } else {
                0
            };
            (lambda[i] - next) / 2
        })
        .collect())
}

/// `D_λ = Π_i D(i)^{ℓ_i}` for an even partition `λ` with at most
/// `sig.copies()` parts.
pub fn d_lambda(sig: AlgebraSignature, lambda: &[usize]) -> Result<SuperPolynomial> {
    if lambda.len() > sig.copies() {
        return Err(Error::BadPartition(format!(
            "{} parts but only {} copies",
            lambda.len(),
            sig.copies()
        )));
    }
    let ell = ell_from_even_partition(lambda)?;
    let mut out = SuperPolynomial::one(sig);
    for (i, &e) in ell.iter().enumerate() {
        if e > 0 {
            out = &out * &d_poly(sig, i + 1)?.pow(e);
        }
    }
    Ok(out)
}

/// The eigenvalue product `C(k, ℓ) = Π_{j=1}^{ℓ} 2j (m − 2n − k + 2j − 1)`
/// (`C(k, 0) = 1`), an ordinary rational number.
pub fn coeff_c(sig: AlgebraSignature, k: usize, ell: usize) -> Scalar {
    let m = sig.m() as i64;
    let n2 = 2 * sig.n() as i64;
    let kk = k as i64;
    let mut c = Scalar::one();
    for j in 1..=(ell as i64) {
        c = &c * &Scalar::int(2 * j * (m - n2 - kk + 2 * j - 1));
    }
    c
}

/// `C(λ) = Π_{k > m} C(k, λ_k / 2)` over the parts of an even partition.
pub fn coeff_c_lambda(sig: AlgebraSignature, lambda: &[usize]) -> Result<Scalar> {
    let mut c = Scalar::one();
    for (idx, &part) in lambda.iter().enumerate() {
        let k = idx + 1;
        if k <= sig.m() {
            continue;
        }
        if part % 2 != 0 {
            return Err(Error::BadPartition(format!("part {k} is odd: {part}")));
        }
        c = &c * &coeff_c(sig, k, part / 2);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffops::is_invariant;
    use crate::ring::subst::{group_action, osp0_generators};

    #[test]
    fn q11_at_one_one_is_the_classic_quadratic() {
        // q₁₁ = x² − 2θ¹θ², oracle-expanded by hand from the pairing
        let sig = AlgebraSignature::new(1, 1, 1);
        let x = SuperPolynomial::x(sig, 1, 1).unwrap();
        let t1 = SuperPolynomial::theta(sig, 1, 1).unwrap();
        let t2 = SuperPolynomial::theta(sig, 2, 1).unwrap();
        let expect = &x.pow(2) - &(&t1 * &t2).scale(&Scalar::int(2));
        assert_eq!(q_elem(sig, 1, 1).unwrap(), expect);
    }

    #[test]
    fn pairing_is_symmetric_and_splits() {
        let sig = AlgebraSignature::new(2, 1, 3);
        for t in 1..=3 {
            for s in 1..=3 {
                let q = q_elem(sig, t, s).unwrap();
                assert_eq!(q, q_elem(sig, s, t).unwrap(), "q symmetric at ({t},{s})");
                let split = &p_elem(sig, t, s).unwrap() + &phi_elem(sig, t, s).unwrap();
                assert_eq!(q, split);
            }
        }
    }

    #[test]
    fn pairing_is_fixed_by_the_isometry_group() {
        let sig = AlgebraSignature::new(2, 1, 2);
        let q12 = q_elem(sig, 1, 2).unwrap();
        for g in osp0_generators(2, 1) {
            assert_eq!(group_action(&g, &q12).unwrap(), q12);
        }
        assert!(is_invariant(&q_elem(sig, 2, 2).unwrap()));
    }

    #[test]
    fn d_zero_is_one_and_d_one_is_q11() {
        let sig = AlgebraSignature::new(1, 1, 2);
        assert_eq!(d_poly(sig, 0).unwrap(), SuperPolynomial::one(sig));
        assert_eq!(d_poly(sig, 1).unwrap(), q_elem(sig, 1, 1).unwrap());
    }

    #[test]
    fn d_two_expands_as_a_two_by_two_determinant() {
        let sig = AlgebraSignature::new(1, 1, 2);
        let q11 = q_elem(sig, 1, 1).unwrap();
        let q12 = q_elem(sig, 1, 2).unwrap();
        let q22 = q_elem(sig, 2, 2).unwrap();
        let expect = &(&q11 * &q22) - &q12.pow(2);
        assert_eq!(d_poly(sig, 2).unwrap(), expect);
    }

    #[test]
    fn partition_exponents_round_trip() {
        // λ = (6, 4, 4, 2) → ℓ = (1, 0, 1, 1)
        let ell = ell_from_even_partition(&[6, 4, 4, 2]).unwrap();
        assert_eq!(ell, vec![1, 0, 1, 1]);
        assert!(ell_from_even_partition(&[3, 2]).is_err());
        assert!(ell_from_even_partition(&[2, 4]).is_err());
    }

    #[test]
    fn d_lambda_multiplies_determinant_powers() {
        let sig = AlgebraSignature::new(1, 1, 2);
        let d1 = d_poly(sig, 1).unwrap();
        let d2 = d_poly(sig, 2).unwrap();
        // λ = (4, 2): ℓ = (1, 1) → D(1)·D(2)
        let expect = &d1 * &d2;
        assert_eq!(d_lambda(sig, &[4, 2]).unwrap(), expect);
        assert_eq!(d_lambda(sig, &[]).unwrap(), SuperPolynomial::one(sig));
    }

    #[test]
    fn coefficient_oracles() {
        // At (m, n) = (1, 1): C(2, 1) = 2·1·(1 − 2 − 2 + 2·1 − 1) = 2·(−2) = −4
        let sig = AlgebraSignature::new(1, 1, 2);
        assert_eq!(coeff_c(sig, 2, 1), Scalar::int(-4));
        assert_eq!(coeff_c(sig, 2, 0), Scalar::one());
        // At (2, 1): C(3, 1) = 2·(2 − 2 − 3 + 1) = −4; C(3, 2) = C(3,1)·4·(2−2−3+3) = −4·0 = 0
        let sig21 = AlgebraSignature::new(2, 1, 3);
        assert_eq!(coeff_c(sig21, 3, 1), Scalar::int(-4));
        assert_eq!(coeff_c(sig21, 3, 2), Scalar::zero());
        // C(λ) multiplies over parts above m
        assert_eq!(coeff_c_lambda(sig, &[4, 2]).unwrap(), coeff_c(sig, 2, 1));
    }

    #[test]
    fn d_nonzero_iff_part_bound_holds() {
        // At (1, 1): D(k) ≠ 0 needs λ_{m+1} ≤ 2n, i.e. column heights ≤ 1+2·1
        let sig = AlgebraSignature::new(1, 1, 3);
        assert!(!d_poly(sig, 1).unwrap().is_zero());
        assert!(!d_poly(sig, 2).unwrap().is_zero());
        assert!(!d_poly(sig, 3).unwrap().is_zero());
        // At (1, 0): D(2) = 0 — the rank-one quadratic form has vanishing 2×2 minors
        let sig10 = AlgebraSignature::new(1, 0, 2);
        assert!(d_poly(sig10, 2).unwrap().is_zero());
    }
}
