//! Exact linear algebra over the Gaussian rationals: row reduction,
//! rank, kernels, and span comparisons, plus the bridge between
//! polynomials and coordinate vectors over a monomial basis.

use crate::ring::monomial::Monomial;
use crate::ring::poly::SuperPolynomial;
use crate::ring::signature::AlgebraSignature;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// A dense matrix of exact scalars.
#[derive(Debug, Clone)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Scalar>>,
}

impl ExactMatrix {
    pub fn from_rows(cols: usize, data: Vec<Vec<Scalar>>) -> Self {
        for row in &data {
            assert_eq!(row.len(), cols, "ragged matrix row");
        }
        ExactMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r]
    }

    /// Append the rows of `other` (same column count).
    pub fn stacked(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.cols, "stacking width mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        ExactMatrix::from_rows(self.cols, data)
    }

    /// Reduced row echelon form; returns the pivot column of each
    /// nonzero row.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut data = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !data[i][c].is_zero()) else {
                continue;
            };
            data.swap(r, p);
            let inv = data[r][c].inv();
            for x in data[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..self.rows {
                if i != r && !data[i][c].is_zero() {
                    let f = data[i][c].clone();
                    for j in 0..self.cols {
                        let sub = &data[r][j] * &f;
                        data[i][j] = &data[i][j] - &sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        (
            ExactMatrix {
                rows: self.rows,
                cols: self.cols,
                data,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{v : M v = 0}`, one vector per free column, each
    /// certified against the original matrix.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (red, pivots) = self.rref();
        let pivot_of_col: BTreeMap<usize, usize> =
            pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        let mut out = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col.contains_key(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (&c, &r) in &pivot_of_col {
                v[c] = -&red.data[r][free];
            }
            for row in &self.data {
                let mut s = Scalar::zero();
                for (a, b) in row.iter().zip(v.iter()) {
                    if !a.is_zero() && !b.is_zero() {
                        s += &(a * b);
                    }
                }
                assert!(s.is_zero(), "kernel certificate violated");
            }
            out.push(v);
        }
        out
    }

    /// Is `v` in the row span?
    pub fn contains_in_row_span(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.cols);
        let with = self.stacked(&ExactMatrix::from_rows(self.cols, vec![v.to_vec()]));
        with.rank() == self.rank()
    }

    /// Do the rows of `self` and `other` span the same space?
    pub fn same_row_span(&self, other: &ExactMatrix) -> bool {
        let ra = self.rank();
        let rb = other.rank();
        ra == rb && self.stacked(other).rank() == ra
    }
}

/// Incrementally maintained row space in reduced echelon form:
/// constant-time rank queries, one reduction pass per insert.
#[derive(Debug, Clone)]
pub struct SpanTracker {
    cols: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl SpanTracker {
    pub fn new(cols: usize) -> Self {
        SpanTracker {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    if !r.is_zero() {
                        let sub = r * &f;
                        *x = &*x - &sub;
                    }
                }
            }
        }
    }

    /// Add a vector; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        // keep the stored rows mutually reduced
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, r) in row.iter_mut().zip(v.iter()) {
                    if !r.is_zero() {
                        let sub = r * &f;
                        *x = &*x - &sub;
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    /// Is `v` already in the span?
    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }
}

/// A fixed monomial basis of some graded piece, with the maps between
/// polynomials and coordinate vectors.
pub struct Vectorizer {
    sig: AlgebraSignature,
    monos: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl Vectorizer {
    pub fn new(sig: AlgebraSignature, monos: Vec<Monomial>) -> Self {
        let index = monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Vectorizer { sig, monos, index }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn signature(&self) -> AlgebraSignature {
        self.sig
    }

    /// Coordinates of `f`; panics if `f` leaves the spanned piece.
    pub fn vectorize(&self, f: &SuperPolynomial) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.monos.len()];
        for (mono, c) in f.terms() {
            let i = *self
                .index
                .get(mono)
                .expect("polynomial leaves the monomial basis");
            v[i] = c.clone();
        }
        v
    }

    pub fn devectorize(&self, v: &[Scalar]) -> SuperPolynomial {
        SuperPolynomial::from_terms(
            self.sig,
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.monos[i].clone(), c.clone())),
        )
    }

    /// Stack coordinate rows for a family of polynomials.
    pub fn matrix_of(&self, polys: &[SuperPolynomial]) -> ExactMatrix {
        ExactMatrix::from_rows(
            self.len(),
            polys.iter().map(|f| self.vectorize(f)).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::int(x)
    }

    #[test]
    fn rank_and_kernel_of_a_rational_matrix() {
        // rows: (1 2 3), (2 4 6), (0 1 1) → rank 2, kernel dim 1
        let m = ExactMatrix::from_rows(
            3,
            vec![
                vec![s(1), s(2), s(3)],
                vec![s(2), s(4), s(6)],
                vec![s(0), s(1), s(1)],
            ],
        );
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        // kernel vector ∝ (-1, -1, 1)
        let v = &ker[0];
        assert!(!v[0].is_zero());
        assert_eq!(v[1], v[0]);
        assert_eq!(v[2], -&v[0]);
    }

    #[test]
    fn complex_entries_are_handled_exactly() {
        let i = Scalar::i();
        // (1, i) and (i, -1) are dependent over Q(i)
        let m = ExactMatrix::from_rows(2, vec![vec![s(1), i.clone()], vec![i.clone(), s(-1)]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel_basis().len(), 1);
    }

    #[test]
    fn span_comparisons() {
        let a = ExactMatrix::from_rows(2, vec![vec![s(1), s(0)], vec![s(0), s(1)]]);
        let b = ExactMatrix::from_rows(2, vec![vec![s(1), s(1)], vec![s(1), s(-1)]]);
        assert!(a.same_row_span(&b));
        let c = ExactMatrix::from_rows(2, vec![vec![s(1), s(1)]]);
        assert!(!a.same_row_span(&c));
        assert!(a.contains_in_row_span(&[s(3), s(7)]));
        assert!(!c.contains_in_row_span(&[s(1), s(0)]));
    }

    #[test]
    fn vectorizer_round_trips() {
        let sig = AlgebraSignature::new(1, 1, 1);
        let basis = crate::decomp::basis::monomials_of_degree(sig, 2).unwrap();
        let vz = Vectorizer::new(sig, basis);
        let x = SuperPolynomial::x(sig, 1, 1).unwrap();
        let t1 = SuperPolynomial::theta(sig, 1, 1).unwrap();
        let t2 = SuperPolynomial::theta(sig, 2, 1).unwrap();
        let f = &x.pow(2) - &(&t1 * &t2).scale(&s(2));
        let v = vz.vectorize(&f);
        assert_eq!(vz.devectorize(&v), f);
        assert_eq!(v.iter().filter(|c| !c.is_zero()).count(), 2);
    }
}
