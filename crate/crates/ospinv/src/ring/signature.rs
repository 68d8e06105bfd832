//! The shape of a coordinate ring: `(m, n, N)`.

use crate::error::{Error, Result};
use std::fmt;

/// Shape descriptor for `S(N)`: `m` even rows, `2n` odd rows, `N` copies.
///
/// Rows of `V` are indexed `a ∈ {1, …, m+2n}`; row `a` is even iff
/// `a ≤ m`.  Odd rows are also addressed by `μ = a − m ∈ {1, …, 2n}`.
///
/// Internally even generators are numbered by the *even ordinal*
/// `(t−1)·m + (i−1)` and odd generators by the *odd ordinal*
/// `(t−1)·2n + (μ−1)`; both orderings agree with the global index
/// `g(a,t) = (t−1)(m+2n) + a` that fixes the canonical sign conventions.
/// Odd ordinals index bits of a 64-bit mask, which caps `2n·N` at 64 —
/// far beyond every graded component that fits the monomial size caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraSignature {
    m: usize,
    n: usize,
    copies: usize,
}

/// Hard cap on the number of odd generators (bitmask width).
pub const MAX_ODD_VARS: usize = 64;

impl AlgebraSignature {
    /// Create a signature.
    ///
    /// # Panics
    /// Panics when `N = 0` or when the odd generator count `2n·N`
    /// exceeds [`MAX_ODD_VARS`]; use [`AlgebraSignature::try_new`] to get
    /// an error instead.
    pub fn new(m: usize, n: usize, copies: usize) -> Self {
        Self::try_new(m, n, copies).expect("invalid algebra signature")
    }

    /// Fallible constructor for externally supplied parameters.
    pub fn try_new(m: usize, n: usize, copies: usize) -> Result<Self> {
        if copies == 0 {
            return Err(Error::IndexOutOfRange {
                what: "copy count N",
                value: 0,
                max: usize::MAX,
            });
        }
        if 2 * n * copies > MAX_ODD_VARS {
            return Err(Error::SizeCap {
                what: "odd generator count 2nN",
                size: 2 * n * copies,
                cap: MAX_ODD_VARS,
            });
        }
        Ok(AlgebraSignature { m, n, copies })
    }

    /// Even dimension of `V`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Half the odd dimension of `V`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of copies `N`.
    pub fn copies(&self) -> usize {
        self.copies
    }

    /// Total dimension `m + 2n` of `V` (rows per copy).
    pub fn dim(&self) -> usize {
        self.m + 2 * self.n
    }

    /// Parity of row `a ∈ {1, …, m+2n}`: `0` iff `a ≤ m`.
    pub fn parity(&self, a: usize) -> u8 {
        u8::from(a > self.m)
    }

    /// Number of even generators `m·N`.
    pub fn even_vars(&self) -> usize {
        self.m * self.copies
    }

    /// Number of odd generators `2n·N`.
    pub fn odd_vars(&self) -> usize {
        2 * self.n * self.copies
    }

    /// Validate a row index `a`.
    pub fn check_row(&self, a: usize) -> Result<()> {
        if a >= 1 && a <= self.dim() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                what: "generator row a",
                value: a,
                max: self.dim(),
            })
        }
    }

    /// Validate a copy index `t`.
    pub fn check_copy(&self, t: usize) -> Result<()> {
        if t >= 1 && t <= self.copies {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                what: "copy index t",
                value: t,
                max: self.copies,
            })
        }
    }

    /// Even ordinal of `x^i_t`: `(t−1)m + (i−1)`.
    pub fn even_ordinal(&self, i: usize, t: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.m && t >= 1 && t <= self.copies);
        (t - 1) * self.m + (i - 1)
    }

    /// Inverse of [`even_ordinal`](Self::even_ordinal): returns `(i, t)`.
    pub fn decode_even(&self, ordinal: usize) -> (usize, usize) {
        debug_assert!(self.m > 0);
        (ordinal % self.m + 1, ordinal / self.m + 1)
    }

    /// Odd ordinal (bit position) of `θ^μ_t`: `(t−1)·2n + (μ−1)`.
    pub fn odd_ordinal(&self, mu: usize, t: usize) -> usize {
        debug_assert!(mu >= 1 && mu <= 2 * self.n && t >= 1 && t <= self.copies);
        (t - 1) * 2 * self.n + (mu - 1)
    }

    /// Inverse of [`odd_ordinal`](Self::odd_ordinal): returns `(μ, t)`.
    pub fn decode_odd(&self, bit: usize) -> (usize, usize) {
        debug_assert!(self.n > 0);
        (bit % (2 * self.n) + 1, bit / (2 * self.n) + 1)
    }

    /// Global generator index `g(a, t) = (t−1)(m+2n) + a`, the order in
    /// which all generators (even and odd) are canonically sorted.
    pub fn global_index(&self, a: usize, t: usize) -> usize {
        (t - 1) * self.dim() + a
    }

    /// Signature with the same `(m, n)` and `copies` raised to `n_copies`.
    pub fn with_copies(&self, n_copies: usize) -> Self {
        AlgebraSignature::new(self.m, self.n, n_copies)
    }

    /// Display name of the even generator `x^i_t`, e.g. `x2_1`.
    ///
    /// The row index is dropped when `m = 1` and the copy suffix when
    /// `N = 1`, so small rings print compactly (`x`, `θ1`).
    pub fn even_name(&self, i: usize, t: usize) -> String {
        let mut s = String::from("x");
        if self.m > 1 {
            s.push_str(&i.to_string());
        }
        if self.copies > 1 {
            s.push('_');
            s.push_str(&t.to_string());
        }
        s
    }

    /// Display name of the odd generator `θ^μ_t`, e.g. `θ1_2`.
    pub fn odd_name(&self, mu: usize, t: usize) -> String {
        let mut s = format!("θ{mu}");
        if self.copies > 1 {
            s.push('_');
            s.push_str(&t.to_string());
        }
        s
    }
}

impl fmt::Display for AlgebraSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={}, N={})", self.m, self.n, self.copies)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_splits_at_m() {
        let sig = AlgebraSignature::new(2, 1, 3);
        assert_eq!(sig.dim(), 4);
        assert_eq!(sig.parity(1), 0);
        assert_eq!(sig.parity(2), 0);
        assert_eq!(sig.parity(3), 1);
        assert_eq!(sig.parity(4), 1);
    }

    #[test]
    fn ordinals_round_trip_and_follow_global_order() {
        let sig = AlgebraSignature::new(2, 1, 3);
        let mut last = None;
        for t in 1..=3 {
            for i in 1..=2 {
                let o = sig.even_ordinal(i, t);
                assert_eq!(sig.decode_even(o), (i, t));
                // even ordinals ascend together with the global index
                let g = sig.global_index(i, t);
                if let Some((po, pg)) = last {
                    assert!(o > po && g > pg);
                }
                last = Some((o, g));
            }
        }
        for t in 1..=3 {
            for mu in 1..=2 {
                let b = sig.odd_ordinal(mu, t);
                assert_eq!(sig.decode_odd(b), (mu, t));
            }
        }
    }

    #[test]
    fn odd_bitmask_cap_is_enforced() {
        assert!(AlgebraSignature::try_new(1, 1, 32).is_ok());
        assert!(matches!(
            AlgebraSignature::try_new(1, 1, 33),
            Err(Error::SizeCap { .. })
        ));
        // no odd variables: any N is fine
        assert!(AlgebraSignature::try_new(3, 0, 1000).is_ok());
    }
}
