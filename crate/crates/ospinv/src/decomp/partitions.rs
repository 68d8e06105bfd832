//! Partitions, their enumeration, the admissibility predicates that
//! govern which highest weights survive on `ℂ^{m|2n}`, and the exact
//! dimension formulas the brute-force computations are checked against.

use crate::ring::signature::AlgebraSignature;
use crate::scalar::Scalar;
use num::BigRational;

/// Weakly decreasing positive parts?
pub fn is_partition(parts: &[usize]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0)
}

/// All partitions of `d` with at most `max_len` parts, in reverse
/// lexicographic order starting from `(d)`.
pub fn partitions_of(d: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(
        remaining: usize,
        max_part: usize,
        slots: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(stack.clone());
            return;
        }
        if slots == 0 || max_part == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            stack.push(p);
            rec(remaining - p, p, slots - 1, stack, out);
            stack.pop();
        }
    }
    rec(d, d, max_len, &mut stack, &mut out);
    out
}

/// Transpose (conjugate) partition.
pub fn transpose(parts: &[usize]) -> Vec<usize> {
    let cols = parts.first().copied().unwrap_or(0);
    (1..=cols)
        .map(|c| parts.iter().filter(|&&p| p >= c).count())
        .collect()
}

/// All parts even?
pub fn all_parts_even(parts: &[usize]) -> bool {
    parts.iter().all(|&p| p % 2 == 0)
}

/// Does `λ` fit in the `(m, 2n)`-hook, i.e. `λ_{m+1} ≤ 2n`?
pub fn fits_hook(parts: &[usize], m: usize, n: usize) -> bool {
    parts.get(m).is_none_or(|&p| p <= 2 * n)
}

/// Admissible highest weight of an invariant module: an even partition
/// inside the hook.
pub fn is_invariant_weight(parts: &[usize], m: usize, n: usize) -> bool {
    is_partition(parts) && all_parts_even(parts) && fits_hook(parts, m, n)
}

/// Admissible highest weight of a pseudo-invariant module:
/// `λ = (1^m) + even`, with `λ_m ≥ 2n + 1` and `λ_{m+1} ≤ 2n`.
/// Equivalently: the first `m` parts are odd and ≥ `2n+1`, the rest are
/// even and ≤ `2n`.
pub fn is_pseudo_weight(parts: &[usize], m: usize, n: usize) -> bool {
    if !is_partition(parts) || parts.len() < m {
        return false;
    }
    let first_ok = parts[..m].iter().all(|&p| p % 2 == 1 && p >= 2 * n + 1);
    let rest_ok = parts[m..].iter().all(|&p| p % 2 == 0 && p <= 2 * n);
    first_ok && rest_ok
}

/// Weyl dimension of the irreducible `gl_N` module with highest weight
/// `λ` (padded with zeros to length `N`):
/// `Π_{i<j} (λ_i − λ_j + j − i) / (j − i)`.
pub fn dim_gl(parts: &[usize], big_n: usize) -> BigRational {
    assert!(parts.len() <= big_n, "more parts than tensor factors");
    let lam = |i: usize| *parts.get(i).unwrap_or(&0) as i64;
    let mut num = BigRational::from_integer(1.into());
    for i in 0..big_n {
        for j in (i + 1)..big_n {
            let d = (j - i) as i64;
            num *= BigRational::new((lam(i) - lam(j) + d).into(), d.into());
        }
    }
    num
}

/// Number of standard Young tableaux of shape `λ`, by the hook length
/// formula, as an exact rational (always integral).
pub fn f_standard(parts: &[usize]) -> BigRational {
    let size: usize = parts.iter().sum();
    let tr = transpose(parts);
    let mut v = BigRational::from_integer(1.into());
    for f in 1..=size as i64 {
        v *= BigRational::from_integer(f.into());
    }
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let hook = (row - j) + (tr[j] - i) - 1;
            v /= BigRational::from_integer((hook as i64).into());
        }
    }
    v
}

/// Dimension of the cyclic module generated by the super Pfaffian under
/// `gl_N`: the closed product formula
/// `Π_{j=m+1}^{N} Π_{i=1}^{m} (2n + 1 + j − i) / (j − i)`.
pub fn dim_gamma(sig: AlgebraSignature) -> BigRational {
    let m = sig.m();
    let h = (2 * sig.n() + 1) as i64;
    let mut v = BigRational::from_integer(1.into());
    for j in (m + 1)..=sig.copies() {
        for i in 1..=m {
            let d = (j - i) as i64;
            v *= BigRational::new((h + d).into(), d.into());
        }
    }
    v
}

/// Sum of `dim_gl` over all admissible invariant weights of size `d`.
pub fn invariant_dimension_sum(sig: AlgebraSignature, d: usize) -> BigRational {
    let mut acc = BigRational::from_integer(0.into());
    for lam in partitions_of(d, sig.copies()) {
        if is_invariant_weight(&lam, sig.m(), sig.n()) {
            acc += dim_gl(&lam, sig.copies());
        }
    }
    acc
}

/// Sum of `dim_gl` over all admissible pseudo weights of size `d`.
pub fn pseudo_dimension_sum(sig: AlgebraSignature, d: usize) -> BigRational {
    let mut acc = BigRational::from_integer(0.into());
    for lam in partitions_of(d, sig.copies()) {
        if is_pseudo_weight(&lam, sig.m(), sig.n()) {
            acc += dim_gl(&lam, sig.copies());
        }
    }
    acc
}

/// Sum of standard-tableaux counts over admissible invariant weights of
/// size `N` — the predicted dimension of the tensor-power invariants.
pub fn tensor_invariant_dimension(sig: AlgebraSignature) -> BigRational {
    let n_copies = sig.copies();
    let mut acc = BigRational::from_integer(0.into());
    for lam in partitions_of(n_copies, n_copies) {
        if is_invariant_weight(&lam, sig.m(), sig.n()) {
            acc += f_standard(&lam);
        }
    }
    acc
}

/// Sum of standard-tableaux counts over admissible pseudo weights of
/// size `N` — the predicted dimension of the tensor-power
/// pseudo-invariants.
pub fn tensor_pseudo_dimension(sig: AlgebraSignature) -> BigRational {
    let n_copies = sig.copies();
    let mut acc = BigRational::from_integer(0.into());
    for lam in partitions_of(n_copies, n_copies) {
        if is_pseudo_weight(&lam, sig.m(), sig.n()) {
            acc += f_standard(&lam);
        }
    }
    acc
}

/// Convert an exact rational dimension to `usize`, panicking if it is
/// not a nonnegative integer (the formulas only produce those).
pub fn as_usize(v: &BigRational) -> usize {
    assert!(v.is_integer(), "dimension formula produced a non-integer");
    let i = v.to_integer();
    assert!(i >= 0.into(), "dimension formula produced a negative value");
    let digits = i.to_string();
    digits.parse().expect("dimension too large for usize")
}

/// Scalar wrapper for report output.
pub fn as_scalar(v: &BigRational) -> Scalar {
    Scalar::from_rat(v.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_and_transpose() {
        let p4 = partitions_of(4, 4);
        assert_eq!(
            p4,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(partitions_of(4, 2).len(), 3);
        assert_eq!(transpose(&[3, 2]), vec![2, 2, 1]);
        assert_eq!(transpose(&[2, 2, 1]), vec![3, 2]);
        assert!(is_partition(&[3, 1]));
        assert!(!is_partition(&[1, 3]));
    }

    #[test]
    fn weight_predicates() {
        // (m, n) = (1, 1): invariant weights are even with λ₂ ≤ 2
        assert!(is_invariant_weight(&[4, 2], 1, 1));
        assert!(!is_invariant_weight(&[4, 3], 1, 1));
        assert!(!is_invariant_weight(&[4, 4], 1, 1));
        // the hook allows arbitrarily many short rows — length is capped
        // separately by the copy count
        assert!(is_invariant_weight(&[2, 2, 2], 1, 1));
        // pseudo: λ₁ odd ≥ 3, the rest even ≤ 2
        assert!(is_pseudo_weight(&[3], 1, 1));
        assert!(is_pseudo_weight(&[5, 2, 2], 1, 1));
        assert!(!is_pseudo_weight(&[1], 1, 1));
        assert!(!is_pseudo_weight(&[4, 2], 1, 1));
        assert!(!is_pseudo_weight(&[3, 1], 1, 1));
        // (m, n) = (2, 1): both first parts odd ≥ 3
        assert!(is_pseudo_weight(&[3, 3], 2, 1));
        assert!(!is_pseudo_weight(&[3, 2], 2, 1));
    }

    #[test]
    fn weyl_dimension_oracles() {
        // gl_2: dim L_(k) = k+1
        assert_eq!(dim_gl(&[3], 2), BigRational::from_integer(4.into()));
        // gl_3: dim L_(2,1) = 8 (the adjoint of sl_3)
        assert_eq!(dim_gl(&[2, 1], 3), BigRational::from_integer(8.into()));
        // gl_4: dim L_(1,1) = 6 (Λ² of C⁴)
        assert_eq!(dim_gl(&[1, 1], 4), BigRational::from_integer(6.into()));
    }

    #[test]
    fn standard_tableaux_oracles() {
        assert_eq!(f_standard(&[2, 2]), BigRational::from_integer(2.into()));
        assert_eq!(f_standard(&[3, 2]), BigRational::from_integer(5.into()));
        assert_eq!(f_standard(&[2, 1]), BigRational::from_integer(2.into()));
        assert_eq!(f_standard(&[5]), BigRational::from_integer(1.into()));
        // Σ f_λ² = N! at N = 4: 1+9+4+9+1 = 24
        let total: BigRational = partitions_of(4, 4)
            .iter()
            .map(|l| {
                let f = f_standard(l);
                &f * &f
            })
            .sum();
        assert_eq!(total, BigRational::from_integer(24.into()));
    }

    #[test]
    fn gamma_dimension_product_and_weyl_agree() {
        // Γ's highest weight is the m×(2n+1) rectangle
        for (m, n, nn) in [
            (1usize, 1usize, 2usize),
            (1, 1, 3),
            (2, 1, 3),
            (1, 2, 3),
            (2, 0, 3),
        ] {
            let sig = AlgebraSignature::new(m, n, nn);
            let rect: Vec<usize> = vec![2 * n + 1; m];
            assert_eq!(
                dim_gamma(sig),
                dim_gl(&rect, nn),
                "mismatch at ({m},{n},{nn})"
            );
        }
        // Frozen value: dim Γ = 4 at (1, 1, 2) — the cubic's gl_2 orbit
        assert_eq!(
            dim_gamma(AlgebraSignature::new(1, 1, 2)),
            BigRational::from_integer(4.into())
        );
    }

    #[test]
    fn dimension_sums_small_oracles() {
        let sig = AlgebraSignature::new(1, 1, 2);
        // degree 2: even weights of size 2 in the hook: (2) → dim 3; (1,1) odd ✗
        assert_eq!(
            invariant_dimension_sum(sig, 2),
            BigRational::from_integer(3.into())
        );
        // degree 4: (4) → 5; (2,2) → 1 (det²): total 6
        assert_eq!(
            invariant_dimension_sum(sig, 4),
            BigRational::from_integer(6.into())
        );
        // pseudo degree 3: (3) → 4
        assert_eq!(
            pseudo_dimension_sum(sig, 3),
            BigRational::from_integer(4.into())
        );
        // pseudo degree 5: (5) → 6, (3,2) → 2·... dim_gl((3,2),2) = 2: total 8
        assert_eq!(
            pseudo_dimension_sum(sig, 5),
            BigRational::from_integer(8.into())
        );
        // tensor predictions at (1,1): N=4 invariants: (4)+(2,2) → 1+2 = 3
        let sig4 = AlgebraSignature::new(1, 1, 4);
        assert_eq!(
            tensor_invariant_dimension(sig4),
            BigRational::from_integer(3.into())
        );
        // N=5 pseudo: (5)+(3,2) → 1+5 = 6
        let sig5 = AlgebraSignature::new(1, 1, 5);
        assert_eq!(
            tensor_pseudo_dimension(sig5),
            BigRational::from_integer(6.into())
        );
    }

    #[test]
    fn usize_conversion_guards() {
        assert_eq!(as_usize(&BigRational::from_integer(17.into())), 17);
    }
}
