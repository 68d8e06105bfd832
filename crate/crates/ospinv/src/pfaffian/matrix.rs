//! Determinants and adjugates of square matrices with even polynomial
//! entries.
//!
//! Entries of even parity commute, so the classical determinant theory
//! applies verbatim; matrices with odd entries are rejected.

use crate::error::{Error, Result};
use crate::ring::poly::SuperPolynomial;
use crate::ring::signature::AlgebraSignature;
use crate::scalar::Scalar;
use itertools::Itertools;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    sig: AlgebraSignature,
    rows: Vec<Vec<SuperPolynomial>>,
}

impl PolyMatrix {
    /// Build from rows; all entries must share a signature and have even
    /// parity (zero entries are fine).
    pub fn new(sig: AlgebraSignature, rows: Vec<Vec<SuperPolynomial>>) -> Result<Self> {
        let k = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::NotSquare {
                    rows: k,
                    cols: row.len(),
                });
            }
            for (c, entry) in row.iter().enumerate() {
                if entry.signature() != sig {
                    return Err(Error::SignatureMismatch {
                        left: sig,
                        right: entry.signature(),
                    });
                }
                if !entry.is_zero() && entry.parity() != Some(0) {
                    return Err(Error::OddEntry { row: r, col: c });
                }
            }
        }
        Ok(PolyMatrix { sig, rows })
    }

    pub fn from_fn(
        sig: AlgebraSignature,
        k: usize,
        mut f: impl FnMut(usize, usize) -> Result<SuperPolynomial>,
    ) -> Result<Self> {
        let mut rows = Vec::with_capacity(k);
        for r in 0..k {
            let mut row = Vec::with_capacity(k);
            for c in 0..k {
                row.push(f(r, c)?);
            }
            rows.push(row);
        }
        Self::new(sig, rows)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn signature(&self) -> AlgebraSignature {
        self.sig
    }

    /// Entry by 1-based indices.
    pub fn entry(&self, r: usize, c: usize) -> &SuperPolynomial {
        &self.rows[r - 1][c - 1]
    }

    /// The matrix with 1-based row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> PolyMatrix {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != r - 1)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c - 1)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        PolyMatrix {
            sig: self.sig,
            rows,
        }
    }

    /// Determinant by column-subset recursion with memoization: the
    /// subdeterminant over a set of rows and the first `|rows|` columns
    /// is computed once per set.
    pub fn det(&self) -> SuperPolynomial {
        let k = self.size();
        if k == 0 {
            return SuperPolynomial::one(self.sig);
        }
        let full: u32 = (1u32 << k) - 1;
        let mut memo: HashMap<u32, SuperPolynomial> = HashMap::new();
        memo.insert(0, SuperPolynomial::one(self.sig));
        self.det_memo(full, &mut memo)
    }

    fn det_memo(
        &self,
        rows_left: u32,
        memo: &mut HashMap<u32, SuperPolynomial>,
    ) -> SuperPolynomial {
        if let Some(d) = memo.get(&rows_left) {
            return d.clone();
        }
        let col = self.size() - rows_left.count_ones() as usize; // next column (0-based)
        let mut det = SuperPolynomial::zero(self.sig);
        let mut pos = 0usize; // position of the row within the remaining set
        for r in 0..self.size() {
            if rows_left & (1 << r) == 0 {
                continue;
            }
            let entry = &self.rows[r][col];
            if !entry.is_zero() {
                let sub = self.det_memo(rows_left & !(1 << r), memo);
                let term = entry * &sub;
                if pos % 2 == 0 {
                    det += &term;
                } else {
                    det -= &term;
                }
            }
            pos += 1;
        }
        memo.insert(rows_left, det.clone());
        det
    }

    /// Determinant as the signed sum over permutations — an independent
    /// second algorithm, exposed for cross-checking the first.
    pub fn det_by_permutations(&self) -> SuperPolynomial {
        let k = self.size();
        let mut det = SuperPolynomial::zero(self.sig);
        for perm in (0..k).permutations(k) {
            let mut inversions = 0usize;
            for a in 0..k {
                for b in (a + 1)..k {
                    if perm[a] > perm[b] {
                        inversions += 1;
                    }
                }
            }
            let mut term = if inversions % 2 == 0 {
                SuperPolynomial::one(self.sig)
            } else {
                SuperPolynomial::constant(self.sig, -&Scalar::one())
            };
            for (r, &c) in perm.iter().enumerate() {
                term = &term * &self.rows[r][c];
                if term.is_zero() {
                    break;
                }
            }
            det += &term;
        }
        det
    }

    /// The adjugate: `adj(A)_{r c} = (−1)^{r+c} · det(A without row c,
    /// column r)`, so that `A · adj(A) = adj(A) · A = det(A) · I`.
    pub fn adjugate(&self) -> PolyMatrix {
        let k = self.size();
        let rows = (1..=k)
            .map(|r| {
                (1..=k)
                    .map(|c| {
                        let cof = self.minor(c, r).det();
                        if (r + c) % 2 == 0 {
                            cof
                        } else {
                            -&cof
                        }
                    })
                    .collect()
            })
            .collect();
        PolyMatrix {
            sig: self.sig,
            rows,
        }
    }

    /// Matrix product (entries commute, both orders well defined).
    pub fn mat_mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        let k = self.size();
        let rows = (0..k)
            .map(|r| {
                (0..k)
                    .map(|c| {
                        let mut s = SuperPolynomial::zero(self.sig);
                        for j in 0..k {
                            s += &(&self.rows[r][j] * &rhs.rows[j][c]);
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        PolyMatrix {
            sig: self.sig,
            rows,
        }
    }

    /// `det(A) · I`, for adjugate verification.
    pub fn det_times_identity(&self) -> PolyMatrix {
        let d = self.det();
        let k = self.size();
        let rows = (0..k)
            .map(|r| {
                (0..k)
                    .map(|c| {
                        if r == c {
                            d.clone()
                        } else {
                            SuperPolynomial::zero(self.sig)
                        }
                    })
                    .collect()
            })
            .collect();
        PolyMatrix {
            sig: self.sig,
            rows,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(sig: AlgebraSignature) -> PolyMatrix {
        // [[x₁², q], [q, x₂²]] with q = x₁x₂ − 2θ¹₁θ²₂ — all even entries
        let x1 = SuperPolynomial::x(sig, 1, 1).unwrap();
        let x2 = SuperPolynomial::x(sig, 1, 2).unwrap();
        let t11 = SuperPolynomial::theta(sig, 1, 1).unwrap();
        let t22 = SuperPolynomial::theta(sig, 2, 2).unwrap();
        let q = &(&x1 * &x2) - &(&t11 * &t22).scale(&Scalar::int(2));
        PolyMatrix::new(sig, vec![vec![x1.pow(2), q.clone()], vec![q, x2.pow(2)]]).unwrap()
    }

    #[test]
    fn both_determinant_algorithms_agree() {
        let sig = AlgebraSignature::new(1, 1, 2);
        let m = sample(sig);
        assert_eq!(m.det(), m.det_by_permutations());
        // 3×3 with repeated structure
        let x = |t| SuperPolynomial::x(sig, 1, t).unwrap();
        let m3 = PolyMatrix::from_fn(sig, 3, |r, c| Ok(&x(1 + (r + c) % 2) * &x(1 + (r * c) % 2)))
            .unwrap();
        assert_eq!(m3.det(), m3.det_by_permutations());
    }

    #[test]
    fn determinant_of_known_matrix() {
        let sig = AlgebraSignature::new(1, 1, 2);
        let m = sample(sig);
        // det = x₁²x₂² − q² and q² = x₁²x₂² − 4x₁x₂θ¹₁θ²₂
        let x1 = SuperPolynomial::x(sig, 1, 1).unwrap();
        let x2 = SuperPolynomial::x(sig, 1, 2).unwrap();
        let t11 = SuperPolynomial::theta(sig, 1, 1).unwrap();
        let t22 = SuperPolynomial::theta(sig, 2, 2).unwrap();
        let expect = (&(&x1 * &x2) * &(&t11 * &t22)).scale(&Scalar::int(4));
        assert_eq!(m.det(), expect);
    }

    #[test]
    fn adjugate_satisfies_the_defining_identity() {
        let sig = AlgebraSignature::new(1, 1, 2);
        let m = sample(sig);
        let adj = m.adjugate();
        let di = m.det_times_identity();
        assert_eq!(m.mat_mul(&adj), di);
        assert_eq!(adj.mat_mul(&m), di);
    }

    #[test]
    fn odd_entries_are_rejected() {
        let sig = AlgebraSignature::new(1, 1, 1);
        let th = SuperPolynomial::theta(sig, 1, 1).unwrap();
        let one = SuperPolynomial::one(sig);
        let err = PolyMatrix::new(sig, vec![vec![one.clone(), th], vec![one.clone(), one]]);
        assert!(matches!(err, Err(Error::OddEntry { row: 0, col: 1 })));
    }

    #[test]
    fn empty_matrix_has_determinant_one() {
        let sig = AlgebraSignature::new(1, 0, 1);
        let m = PolyMatrix::new(sig, Vec::new()).unwrap();
        assert_eq!(m.det(), SuperPolynomial::one(sig));
    }
}
