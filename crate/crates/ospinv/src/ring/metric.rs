//! The even supersymmetric bilinear form on the defining space `V`:
//! block diagonal, the identity on the `m` even directions and the
//! standard symplectic form on the `2n` odd directions.
//!
//! With `η = [[0, I_n], [−I_n, 0]]` the Gram matrix is
//! `κ = diag(I_m, η)`, and `κ⁻¹ = diag(I_m, −η)` because `η² = −I`.
//! Only the sparse rows are ever needed.

use super::signature::AlgebraSignature;
use crate::scalar::Scalar;

/// The nonzero entries `(column, value)` of row `a` of `κ`.
pub fn kappa_row(sig: AlgebraSignature, a: usize) -> Vec<(usize, Scalar)> {
    let (m, n) = (sig.m(), sig.n());
    debug_assert!((1..=m + 2 * n).contains(&a));
    if a <= m {
        vec![(a, Scalar::one())]
    } else if a <= m + n {
        // κ_{m+μ, m+n+μ} = +1
        vec![(a + n, Scalar::one())]
    } else {
        // κ_{m+n+μ, m+μ} = −1
        vec![(a - n, -&Scalar::one())]
    }
}

/// The nonzero entries `(column, value)` of row `a` of `κ⁻¹`.
pub fn kappa_inv_row(sig: AlgebraSignature, a: usize) -> Vec<(usize, Scalar)> {
    let (m, n) = (sig.m(), sig.n());
    debug_assert!((1..=m + 2 * n).contains(&a));
    if a <= m {
        vec![(a, Scalar::one())]
    } else if a <= m + n {
        // (κ⁻¹)_{m+μ, m+n+μ} = −1
        vec![(a + n, -&Scalar::one())]
    } else {
        // (κ⁻¹)_{m+n+μ, m+μ} = +1
        vec![(a - n, Scalar::one())]
    }
}

/// Full entry lookup `κ_{ab}` (zero for all but one column per row).
pub fn kappa_entry(sig: AlgebraSignature, a: usize, b: usize) -> Scalar {
    kappa_row(sig, a)
        .into_iter()
        .find(|&(c, _)| c == b)
        .map(|(_, v)| v)
        .unwrap_or_else(Scalar::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(
        sig: AlgebraSignature,
        row: fn(AlgebraSignature, usize) -> Vec<(usize, Scalar)>,
    ) -> Vec<Vec<Scalar>> {
        let d = sig.dim();
        (1..=d)
            .map(|a| {
                let mut r = vec![Scalar::zero(); d];
                for (c, v) in row(sig, a) {
                    r[c - 1] = v;
                }
                r
            })
            .collect()
    }

    #[test]
    fn kappa_times_inverse_is_the_identity() {
        for (m, n) in [(1, 1), (2, 2), (3, 0), (0, 2)] {
            let sig = AlgebraSignature::new(m, n, 1);
            let k = dense(sig, kappa_row);
            let ki = dense(sig, kappa_inv_row);
            let d = sig.dim();
            for r in 0..d {
                for c in 0..d {
                    let mut s = Scalar::zero();
                    for j in 0..d {
                        s += &(&k[r][j] * &ki[j][c]);
                    }
                    let expect = if r == c {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    };
                    assert_eq!(s, expect, "(m,n)=({m},{n}) entry ({r},{c})");
                }
            }
        }
    }

    #[test]
    fn symmetry_is_super() {
        // κ_ab = κ_ba on the even block, κ_ab = −κ_ba on the odd block
        let sig = AlgebraSignature::new(2, 2, 1);
        let (m, d) = (sig.m(), sig.dim());
        for a in 1..=d {
            for b in 1..=d {
                let ab = kappa_entry(sig, a, b);
                let ba = kappa_entry(sig, b, a);
                if a <= m && b <= m {
                    assert_eq!(ab, ba);
                } else if a > m && b > m {
                    assert_eq!(ab, -&ba);
                } else {
                    assert!(ab.is_zero() && ba.is_zero());
                }
            }
        }
    }
}
