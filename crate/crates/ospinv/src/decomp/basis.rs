//! Enumeration of monomial bases for graded components of `S(N)`.

use crate::error::{Error, Result};
use crate::ring::monomial::Monomial;
use crate::ring::signature::AlgebraSignature;

/// Hard cap on the size of any enumerated basis; callers get a clean
/// error instead of an unbounded computation.
pub const BASIS_CAP: usize = 20_000;

fn cap_check(len: usize, what: &'static str) -> Result<()> {
    if len > BASIS_CAP {
        return Err(Error::SizeCap {
            what,
            size: len,
            cap: BASIS_CAP,
        });
    }
    Ok(())
}

/// All exponent vectors over `slots` variables with entry sum exactly `d`.
pub(crate) fn weak_compositions(slots: usize, d: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut current = vec![0u16; slots];
    fn rec(slot: usize, remaining: usize, current: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if slot + 1 == current.len() {
            current[slot] = remaining as u16;
            out.push(current.clone());
            return;
        }
        for e in 0..=remaining {
            current[slot] = e as u16;
            rec(slot + 1, remaining - e, current, out);
        }
    }
    if slots == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, d, &mut current, &mut out);
    out
}

/// All subsets of the odd positions `lo..lo+width` with exactly `k`
/// elements, as bitmasks.
fn odd_masks(lo: usize, width: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn rec(lo: usize, width: usize, k: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        if width < k {
            return;
        }
        // either include bit `lo` or not
        rec(lo + 1, width - 1, k - 1, acc | (1u64 << lo), out);
        rec(lo + 1, width - 1, k, acc, out);
    }
    rec(lo, width, k, 0, &mut out);
    out
}

fn assemble(even: &[u16], even_lo: usize, odd: u64) -> Monomial {
    let even_part: Vec<(u16, u16)> = even
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(i, &e)| ((even_lo + i) as u16, e))
        .collect();
    Monomial::from_parts(even_part, odd)
}

/// Monomial basis of the component of total degree `d`.
pub fn monomials_of_degree(sig: AlgebraSignature, d: usize) -> Result<Vec<Monomial>> {
    let evens = sig.even_vars();
    let odds = sig.odd_vars();
    let mut out = Vec::new();
    for even_deg in (0..=d).rev() {
        let odd_deg = d - even_deg;
        if odd_deg > odds {
            continue;
        }
        for even in weak_compositions(evens, even_deg) {
            for mask in odd_masks(0, odds, odd_deg) {
                out.push(assemble(&even, 0, mask));
                cap_check(out.len(), "graded monomial basis")?;
            }
        }
    }
    Ok(out)
}

/// Monomial basis of all components of total degree at most `d`.
pub fn monomials_up_to(sig: AlgebraSignature, d: usize) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    for k in 0..=d {
        out.extend(monomials_of_degree(sig, k)?);
        cap_check(out.len(), "bounded-degree monomial basis")?;
    }
    Ok(out)
}

/// Monomial basis of the component with the given per-copy degrees.
pub fn monomials_of_multidegree(sig: AlgebraSignature, deg: &[usize]) -> Result<Vec<Monomial>> {
    assert_eq!(deg.len(), sig.copies(), "one degree per copy");
    let m = sig.m();
    let two_n = 2 * sig.n();
    // per copy: local choices (even exponents over m slots, odd subset)
    let mut per_copy: Vec<Vec<(Vec<u16>, u64)>> = Vec::with_capacity(deg.len());
    for (t0, &dt) in deg.iter().enumerate() {
        let mut local = Vec::new();
        for even_deg in (0..=dt).rev() {
            let odd_deg = dt - even_deg;
            if odd_deg > two_n {
                continue;
            }
            for even in weak_compositions(m, even_deg) {
                for mask in odd_masks(t0 * two_n, two_n, odd_deg) {
                    local.push((even.clone(), mask));
                }
            }
        }
        cap_check(local.len(), "per-copy monomial choices")?;
        per_copy.push(local);
    }
    // cartesian product across copies
    let mut out: Vec<(Vec<u16>, u64)> = vec![(Vec::new(), 0u64)];
    for local in &per_copy {
        let mut next = Vec::with_capacity(out.len() * local.len());
        for (even_acc, mask_acc) in &out {
            for (even_local, mask_local) in local {
                let mut even = even_acc.clone();
                even.extend_from_slice(even_local);
                next.push((even, mask_acc | mask_local));
            }
        }
        cap_check(next.len(), "multidegree monomial basis")?;
        out = next;
    }
    Ok(out
        .into_iter()
        .map(|(even, mask)| assemble(&even, 0, mask))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_binomial_model() {
        // dim of degree-d part of ℚ[x]⊗Λ(θ¹,θ²) at (1,1,1):
        // d=0 → 1; d=1 → x, θ¹, θ² = 3; d=2 → x², xθ¹, xθ², θ¹θ² = 4
        let sig = AlgebraSignature::new(1, 1, 1);
        assert_eq!(monomials_of_degree(sig, 0).unwrap().len(), 1);
        assert_eq!(monomials_of_degree(sig, 1).unwrap().len(), 3);
        assert_eq!(monomials_of_degree(sig, 2).unwrap().len(), 4);
        assert_eq!(monomials_up_to(sig, 2).unwrap().len(), 8);
        // pure Grassmann: binomial(4, d)
        let gr = AlgebraSignature::new(0, 2, 1);
        for d in 0..=4 {
            let expect = [1usize, 4, 6, 4, 1][d];
            assert_eq!(monomials_of_degree(gr, d).unwrap().len(), expect);
        }
        assert_eq!(monomials_of_degree(gr, 5).unwrap().len(), 0);
    }

    #[test]
    fn multidegree_slices_partition_the_graded_component() {
        let sig = AlgebraSignature::new(1, 1, 2);
        // degree-2 component splits into multidegrees (2,0), (1,1), (0,2)
        let total = monomials_of_degree(sig, 2).unwrap().len();
        let split: usize = [[2, 0], [1, 1], [0, 2]]
            .iter()
            .map(|d| monomials_of_multidegree(sig, d).unwrap().len())
            .sum();
        assert_eq!(total, split);
        // every monomial in the (1,1) slice really has that multidegree
        let poly_probe = crate::ring::SuperPolynomial::zero(sig);
        for mono in monomials_of_multidegree(sig, &[1, 1]).unwrap() {
            assert_eq!(poly_probe.mono_multidegree(&mono), vec![1, 1]);
        }
    }

    #[test]
    fn oversized_requests_fail_cleanly() {
        let sig = AlgebraSignature::new(4, 0, 4);
        let mut d = 1;
        let err = loop {
            match monomials_of_degree(sig, d) {
                Ok(_) => d += 1,
                Err(e) => break e,
            }
        };
        assert!(matches!(err, Error::SizeCap { .. }));
    }
}
