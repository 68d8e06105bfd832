//! The differential-identity family satisfied by the determinants
//! `D(k)`: gradient and Laplacian formulas, `gl_N`-action formulas, the
//! recursion in `k`, Laplacian truncation on powers, and the evaluation
//! that collapses everything to explicit constants.
//!
//! Each check returns `Ok(true)` when the corresponding polynomial
//! identity holds exactly. A shared [`IdentityContext`] memoizes the
//! determinants, their powers, and the adjugate matrices so suites can
//! sweep parameter ranges without recomputing them.

use crate::diffops::{apply_nabla, op_e, op_laplacian, partial};
use crate::error::{Error, Result};
use crate::pfaffian::matrix::PolyMatrix;
use crate::pfaffian::quadratics::{
    coeff_c, coeff_c_lambda, d_lambda, d_poly, ell_from_even_partition, q_elem, q_matrix,
};
use crate::ring::metric::kappa_inv_row;
use crate::ring::poly::SuperPolynomial;
use crate::ring::signature::AlgebraSignature;
use crate::ring::subst::specialize_r;
use crate::scalar::Scalar;
use std::cell::RefCell;
use std::collections::HashMap;

/// Memoizing workspace for identity sweeps at a fixed signature.
pub struct IdentityContext {
    sig: AlgebraSignature,
    d: RefCell<HashMap<usize, SuperPolynomial>>,
    d_pow: RefCell<HashMap<(usize, usize), SuperPolynomial>>,
    adj: RefCell<HashMap<usize, PolyMatrix>>,
    q: RefCell<HashMap<(usize, usize), SuperPolynomial>>,
}

impl IdentityContext {
    pub fn new(sig: AlgebraSignature) -> Self {
        IdentityContext {
            sig,
            d: RefCell::new(HashMap::new()),
            d_pow: RefCell::new(HashMap::new()),
            adj: RefCell::new(HashMap::new()),
            q: RefCell::new(HashMap::new()),
        }
    }

    pub fn signature(&self) -> AlgebraSignature {
        self.sig
    }

    pub fn d(&self, k: usize) -> Result<SuperPolynomial> {
        if let Some(d) = self.d.borrow().get(&k) {
            return Ok(d.clone());
        }
        let d = d_poly(self.sig, k)?;
        self.d.borrow_mut().insert(k, d.clone());
        Ok(d)
    }

    /// `D(k)^ℓ`, built up one factor at a time and cached per exponent.
    pub fn d_pow(&self, k: usize, ell: usize) -> Result<SuperPolynomial> {
        if ell == 0 {
            return Ok(SuperPolynomial::one(self.sig));
        }
        if let Some(p) = self.d_pow.borrow().get(&(k, ell)) {
            return Ok(p.clone());
        }
        let p = &self.d_pow(k, ell - 1)? * &self.d(k)?;
        self.d_pow.borrow_mut().insert((k, ell), p.clone());
        Ok(p)
    }

    pub fn adjugate(&self, k: usize) -> Result<PolyMatrix> {
        if let Some(a) = self.adj.borrow().get(&k) {
            return Ok(a.clone());
        }
        let a = q_matrix(self.sig, k)?.adjugate();
        self.adj.borrow_mut().insert(k, a.clone());
        Ok(a)
    }

    pub fn adj_entry(&self, k: usize, r: usize, c: usize) -> Result<SuperPolynomial> {
        Ok(self.adjugate(k)?.entry(r, c).clone())
    }

    pub fn q(&self, t: usize, s: usize) -> Result<SuperPolynomial> {
        if let Some(q) = self.q.borrow().get(&(t, s)) {
            return Ok(q.clone());
        }
        let q = q_elem(self.sig, t, s)?;
        self.q.borrow_mut().insert((t, s), q.clone());
        Ok(q)
    }

    /// The lowered generator `X_{a,t} = Σ_c (κ⁻¹)_{a c} X^c_t`.
    pub fn lowered(&self, a: usize, t: usize) -> Result<SuperPolynomial> {
        let mut out = SuperPolynomial::zero(self.sig);
        for &(c, ref v) in &kappa_inv_row(self.sig, a) {
            out += &SuperPolynomial::generator(self.sig, c, t)?.scale(v);
        }
        Ok(out)
    }
}

fn check_range(what: &'static str, value: usize, max: usize) -> Result<()> {
    if value == 0 || value > max {
        return Err(Error::IndexOutOfRange { what, value, max });
    }
    Ok(())
}

/// `∂_{a,j} D(k) = 2 Σ_{r ≤ k} X_{a,r} · adj(Q(k))_{r,j}` for any row
/// `a` and column `j ≤ k`.
pub fn check_grad_det(ctx: &IdentityContext, k: usize, a: usize, j: usize) -> Result<bool> {
    let sig = ctx.signature();
    check_range("column", j, k)?;
    sig.check_row(a)?;
    let lhs = partial(&ctx.d(k)?, a, j);
    let mut rhs = SuperPolynomial::zero(sig);
    for r in 1..=k {
        rhs += &(&ctx.lowered(a, r)? * &ctx.adj_entry(k, r, j)?);
    }
    Ok(lhs == rhs.scale(&Scalar::int(2)))
}

/// `∂²_{j,j} D(k) = 2 (m − 2n − k + 1) · adj(Q(k))_{j,j}` for `j ≤ k`.
pub fn check_laplace_det(ctx: &IdentityContext, k: usize, j: usize) -> Result<bool> {
    let sig = ctx.signature();
    check_range("column", j, k)?;
    let lhs = op_laplacian(sig, j, j).apply(&ctx.d(k)?);
    let c = 2 * (sig.m() as i64 - 2 * sig.n() as i64 - k as i64 + 1);
    let rhs = ctx.adj_entry(k, j, j)?.scale(&Scalar::int(c));
    Ok(lhs == rhs)
}

/// `∂²_{k,k} (D(k)^ℓ) = 2ℓ (m − 2n − k + 2ℓ − 1) · D(k)^{ℓ−1} D(k−1)`.
pub fn check_laplace_power(ctx: &IdentityContext, k: usize, ell: usize) -> Result<bool> {
    let sig = ctx.signature();
    check_range("exponent", ell, usize::MAX - 1)?;
    let lhs = op_laplacian(sig, k, k).apply(&ctx.d_pow(k, ell)?);
    let c = 2 * ell as i64 * (sig.m() as i64 - 2 * sig.n() as i64 - k as i64 + 2 * ell as i64 - 1);
    let rhs = (&ctx.d_pow(k, ell - 1)? * &ctx.d(k - 1)?).scale(&Scalar::int(c));
    Ok(lhs == rhs)
}

/// `(∂²_{k,k})^ℓ (D(k)^ℓ) = C(k, ℓ) · D(k−1)^ℓ` with
/// `C(k, ℓ) = Π_{j=1}^{ℓ} 2j (m − 2n − k + 2j − 1)`.
pub fn check_laplace_truncation(ctx: &IdentityContext, k: usize, ell: usize) -> Result<bool> {
    let sig = ctx.signature();
    let lap = op_laplacian(sig, k, k);
    let mut lhs = ctx.d_pow(k, ell)?;
    for _ in 0..ell {
        lhs = lap.apply(&lhs);
    }
    let rhs = ctx.d_pow(k - 1, ell)?.scale(&coeff_c(sig, k, ell));
    Ok(lhs == rhs)
}

/// `E_{i,j} D(k) = 2 Σ_{r ≤ k} q_{i,r} · adj(Q(k))_{r,j}` for any copy
/// `i` and column `j ≤ k`.
pub fn check_e_action_det(ctx: &IdentityContext, k: usize, i: usize, j: usize) -> Result<bool> {
    let sig = ctx.signature();
    check_range("column", j, k)?;
    sig.check_copy(i)?;
    let lhs = op_e(sig, i, j).apply(&ctx.d(k)?);
    let mut rhs = SuperPolynomial::zero(sig);
    for r in 1..=k {
        rhs += &(&ctx.q(i, r)? * &ctx.adj_entry(k, r, j)?);
    }
    Ok(lhs == rhs.scale(&Scalar::int(2)))
}

/// `D(k+1) = q_{k+1,k+1} D(k) − ½ Σ_{r ≤ k} q_{r,k+1} · E_{k+1,r}(D(k))`.
pub fn check_det_recursion(ctx: &IdentityContext, k: usize) -> Result<bool> {
    let sig = ctx.signature();
    check_range("matrix size", k + 1, sig.copies())?;
    let dk = ctx.d(k)?;
    let mut rhs = &ctx.q(k + 1, k + 1)? * &dk;
    for r in 1..=k {
        let moved = op_e(sig, k + 1, r).apply(&dk);
        rhs -= &(&ctx.q(r, k + 1)? * &moved).scale(&Scalar::ratio(1, 2));
    }
    Ok(ctx.d(k + 1)? == rhs)
}

/// Adjugate entries under the `gl_N`-action: `E_{j,j}(adj_{j,j}) = 0`
/// and `E_{r,j}(adj_{r,j}) = −adj_{j,j}` for `r ≠ j`, both inside `Q(k)`.
pub fn check_adjugate_euler(ctx: &IdentityContext, k: usize, j: usize) -> Result<bool> {
    let sig = ctx.signature();
    check_range("column", j, k)?;
    let ajj = ctx.adj_entry(k, j, j)?;
    if !op_e(sig, j, j).apply(&ajj).is_zero() {
        return Ok(false);
    }
    for r in 1..=k {
        if r == j {
            continue;
        }
        let arj = ctx.adj_entry(k, r, j)?;
        if op_e(sig, r, j).apply(&arj) != -&ajj {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D(k)` is a `gl_N` highest-weight vector of weight `2ω_k`:
/// raised to zero by every `E_{s,t}` with `s < t`, scaled by `2` on the
/// first `k` diagonal directions and by `0` on the rest.
pub fn check_det_highest_weight(ctx: &IdentityContext, k: usize) -> Result<bool> {
    let sig = ctx.signature();
    let dk = ctx.d(k)?;
    for s in 1..=sig.copies() {
        for t in s..=sig.copies() {
            let image = op_e(sig, s, t).apply(&dk);
            let expect = if s == t && s <= k {
                dk.scale(&Scalar::int(2))
            } else {
                SuperPolynomial::zero(sig)
            };
            if image != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The cascade of diagonal Laplacians applied to `D_λ` collapses the
/// factors above row `m`:
/// `∇^{(λ)}(D_λ) = C(λ) · D(m)^{λ_m/2} · Π_{i<m} D(i)^{ℓ_i}`.
pub fn check_nabla_d_lambda(ctx: &IdentityContext, lambda: &[usize]) -> Result<bool> {
    let sig = ctx.signature();
    let dl = d_lambda(sig, lambda)?;
    let lhs = apply_nabla(&dl, lambda);
    let ell = ell_from_even_partition(lambda)?;
    let m = sig.m();
    let part = |i: usize| if i <= lambda.len() { lambda[i - 1] } else { 0 };
    let mut rhs = if m >= 1 {
        ctx.d_pow(m, part(m) / 2)?
    } else {
        SuperPolynomial::one(sig)
    };
    for i in 1..m {
        let e = if i <= ell.len() { ell[i - 1] } else { 0 };
        if e > 0 {
            rhs = &rhs * &ctx.d_pow(i, e)?;
        }
    }
    let rhs = rhs.scale(&coeff_c_lambda(sig, lambda)?);
    Ok(lhs == rhs)
}

/// Evaluate on the distinguished frame: `D(k) ↦ 1` for `k ≤ m`, and
/// `D(s)` for `s > m` maps onto the Grassmann determinant of the odd
/// pairings among the remaining copies.
pub fn check_r_specialization(ctx: &IdentityContext, k: usize) -> Result<bool> {
    let sig = ctx.signature();
    check_range("matrix size", k, sig.copies())?;
    let image = specialize_r(&ctx.d(k)?)?;
    if k <= sig.m() {
        return Ok(image == SuperPolynomial::one(image.signature()));
    }
    let target = image.signature();
    let expect = d_poly(target, k - sig.m())?;
    Ok(image == expect)
}

/// The full collapse to a constant:
/// `R(∇^{(λ)}(D_λ)) = C(λ)`, nonzero exactly when every column of `λ`
/// fits in the `(m, 2n)`-hook.
pub fn check_r_nabla_constant(ctx: &IdentityContext, lambda: &[usize]) -> Result<bool> {
    let sig = ctx.signature();
    let dl = d_lambda(sig, lambda)?;
    let collapsed = apply_nabla(&dl, lambda);
    let image = specialize_r(&collapsed)?;
    let c = coeff_c_lambda(sig, lambda)?;
    let expect = SuperPolynomial::constant(image.signature(), c);
    Ok(image == expect)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gradient_identity_small() {
        let sig = AlgebraSignature::new(1, 1, 2);
        let ctx = IdentityContext::new(sig);
        for k in 1..=2 {
            for a in 1..=sig.dim() {
                for j in 1..=k {
                    assert!(
                        check_grad_det(&ctx, k, a, j).unwrap(),
                        "gradient identity failed at k={k}, a={a}, j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn laplacian_identity_small() {
        let sig = AlgebraSignature::new(1, 1, 2);
        let ctx = IdentityContext::new(sig);
        for k in 1..=2 {
            for j in 1..=k {
                assert!(check_laplace_det(&ctx, k, j).unwrap());
            }
        }
        // Oracle spot value: ∂²₁₁ D(1) = 2(m−2n−k+1)·adj₁₁ = 2(1−2−1+1)·1 = −2
        let lhs = op_laplacian(sig, 1, 1).apply(&ctx.d(1).unwrap());
        assert_eq!(lhs, SuperPolynomial::constant(sig, Scalar::int(-2)));
    }

    #[test]
    fn laplacian_power_and_truncation() {
        let sig = AlgebraSignature::new(1, 1, 2);
        let ctx = IdentityContext::new(sig);
        for ell in 1..=2 {
            assert!(check_laplace_power(&ctx, 2, ell).unwrap());
            assert!(check_laplace_truncation(&ctx, 2, ell).unwrap());
        }
        // C(2, 2) = 0 at (1,1): the square of the Laplacian kills D(2)²
        assert!(coeff_c(sig, 2, 2).is_zero());
    }

    #[test]
    fn euler_action_and_recursion() {
        let sig = AlgebraSignature::new(1, 1, 2);
        let ctx = IdentityContext::new(sig);
        for k in 1..=2 {
            for i in 1..=2 {
                for j in 1..=k {
                    assert!(check_e_action_det(&ctx, k, i, j).unwrap());
                }
            }
        }
        assert!(check_det_recursion(&ctx, 1).unwrap());
        for k in 1..=2 {
            assert!(check_adjugate_euler(&ctx, k, 1).unwrap());
            assert!(check_det_highest_weight(&ctx, k).unwrap());
        }
    }

    #[test]
    fn nabla_collapse_and_frame_evaluation() {
        let sig = AlgebraSignature::new(1, 1, 2);
        let ctx = IdentityContext::new(sig);
        assert!(check_nabla_d_lambda(&ctx, &[2, 2]).unwrap());
        assert!(check_nabla_d_lambda(&ctx, &[4, 2]).unwrap());
        assert!(check_nabla_d_lambda(&ctx, &[2]).unwrap());
        for k in 1..=2 {
            assert!(check_r_specialization(&ctx, k).unwrap());
        }
        assert!(check_r_nabla_constant(&ctx, &[2, 2]).unwrap());
        assert!(check_r_nabla_constant(&ctx, &[4, 2]).unwrap());
    }
}
