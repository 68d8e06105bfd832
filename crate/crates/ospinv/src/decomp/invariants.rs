//! Brute-force invariant and pseudo-invariant spaces: exact kernels of
//! the superalgebra action on graded pieces, split into the two
//! eigenspaces of the orientation-reversing reflection.

use crate::decomp::basis::{monomials_of_multidegree, weak_compositions};
use crate::decomp::linalg::{ExactMatrix, Vectorizer};
use crate::diffops::{op_j, Operator};
use crate::error::Result;
use crate::ring::poly::SuperPolynomial;
use crate::ring::signature::AlgebraSignature;
use crate::ring::subst::{group_action, GroupElement};
use crate::scalar::Scalar;

/// The standard generating family of the superalgebra action: all
/// `J_{a b}` with `a ≤ b`, omitting the identically-zero diagonal
/// operators on even rows.
pub fn j_generators(sig: AlgebraSignature) -> Vec<Operator> {
    let mut out = Vec::new();
    for a in 1..=sig.dim() {
        for b in a..=sig.dim() {
            if a == b && sig.parity(a) == 0 {
                continue;
            }
            out.push(op_j(sig, a, b));
        }
    }
    out
}

/// Basis of the joint kernel of `ops` on the span of `vz`, by iterated
/// refinement: start from the full space and intersect with one
/// operator's kernel at a time.
pub fn iterated_kernel(vz: &Vectorizer, ops: &[Operator]) -> Vec<SuperPolynomial> {
    let len = vz.len();
    let mut basis: Vec<SuperPolynomial> = Vec::new();
    let mut first = true;
    for op in ops {
        let current: Vec<SuperPolynomial> = if first {
            (0..len).map(|j| vz.devectorize(&unit(len, j))).collect()
        } else {
            basis.clone()
        };
        if current.is_empty() {
            return Vec::new();
        }
        // columns = images of the current basis vectors
        let images: Vec<Vec<Scalar>> = current.iter().map(|f| vz.vectorize(&op.apply(f))).collect();
        let mut data = vec![vec![Scalar::zero(); current.len()]; len];
        for (j, img) in images.iter().enumerate() {
            for (i, c) in img.iter().enumerate() {
                if !c.is_zero() {
                    data[i][j] = c.clone();
                }
            }
        }
        let m = ExactMatrix::from_rows(current.len(), data);
        let combos = m.kernel_basis();
        basis = combos
            .iter()
            .map(|c| {
                let mut f = SuperPolynomial::zero(vz.signature());
                for (j, coeff) in c.iter().enumerate() {
                    if !coeff.is_zero() {
                        f += &current[j].scale(coeff);
                    }
                }
                f
            })
            .collect();
        first = false;
        if basis.is_empty() {
            return basis;
        }
    }
    if first {
        // no operators: the whole space
        return (0..len).map(|j| vz.devectorize(&unit(len, j))).collect();
    }
    basis
}

fn unit(len: usize, j: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); len];
    v[j] = Scalar::one();
    v
}

/// The annihilator of the superalgebra split into reflection
/// eigenspaces: `invariant` is the `+1` part (fixed by the full
/// isometry group) and `pseudo` the `−1` part (scaled by the
/// orientation character). Both bases are linearly independent.
pub struct InvariantSplit {
    pub invariant: Vec<SuperPolynomial>,
    pub pseudo: Vec<SuperPolynomial>,
}

impl InvariantSplit {
    pub fn invariant_dim(&self) -> usize {
        self.invariant.len()
    }

    pub fn pseudo_dim(&self) -> usize {
        self.pseudo.len()
    }
}

/// Select a maximal independent subfamily, in order.
fn independent_subset(vz: &Vectorizer, polys: Vec<SuperPolynomial>) -> Vec<SuperPolynomial> {
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut out = Vec::new();
    let mut rank = 0usize;
    for f in polys {
        if f.is_zero() {
            continue;
        }
        rows.push(vz.vectorize(&f));
        let m = ExactMatrix::from_rows(vz.len(), rows.clone());
        if m.rank() > rank {
            rank += 1;
            out.push(f);
        } else {
            rows.pop();
        }
    }
    out
}

/// Split a kernel basis into reflection eigenspaces. For `m = 0` the
/// isometry group is connected and everything is invariant.
pub fn reflection_split(vz: &Vectorizer, kernel: Vec<SuperPolynomial>) -> Result<InvariantSplit> {
    let sig = vz.signature();
    if sig.m() == 0 {
        return Ok(InvariantSplit {
            invariant: kernel,
            pseudo: Vec::new(),
        });
    }
    let refl = GroupElement::reflection(sig.m(), sig.n());
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for f in &kernel {
        let r = group_action(&refl, f)?;
        plus.push(&*f + &r);
        minus.push(&*f - &r);
    }
    let invariant = independent_subset(vz, plus);
    let pseudo = independent_subset(vz, minus);
    assert_eq!(
        invariant.len() + pseudo.len(),
        kernel.len(),
        "reflection eigenspaces must exhaust the kernel"
    );
    Ok(InvariantSplit { invariant, pseudo })
}

/// Kernel and split on one multidegree slice.
pub fn slice_split(sig: AlgebraSignature, multidegree: &[usize]) -> Result<InvariantSplit> {
    let monos = monomials_of_multidegree(sig, multidegree)?;
    let vz = Vectorizer::new(sig, monos);
    if vz.is_empty() {
        return Ok(InvariantSplit {
            invariant: Vec::new(),
            pseudo: Vec::new(),
        });
    }
    let ops = j_generators(sig);
    let kernel = iterated_kernel(&vz, &ops);
    reflection_split(&vz, kernel)
}

/// Kernel and split on the full graded component of total degree `d`,
/// assembled one multidegree slice at a time (the superalgebra action
/// preserves each slice).
pub fn graded_split(sig: AlgebraSignature, d: usize) -> Result<InvariantSplit> {
    let mut invariant = Vec::new();
    let mut pseudo = Vec::new();
    for comp in weak_compositions(sig.copies(), d) {
        let md: Vec<usize> = comp.iter().map(|&x| x as usize).collect();
        let split = slice_split(sig, &md)?;
        invariant.extend(split.invariant);
        pseudo.extend(split.pseudo);
    }
    Ok(InvariantSplit { invariant, pseudo })
}

/// The tensor-power slice: every copy in multidegree one.
pub fn tensor_split(sig: AlgebraSignature) -> Result<InvariantSplit> {
    slice_split(sig, &vec![1; sig.copies()])
}
