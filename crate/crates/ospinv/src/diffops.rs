//! Left superderivations and the polynomial differential operators that
//! organize the invariant theory: the infinitesimal isometry operators,
//! the copy-mixing Euler operators, and the metric Laplacians.

use crate::decomp::basis::monomials_up_to;
use crate::ring::metric::{kappa_inv_row, kappa_row};
use crate::ring::monomial::Monomial;
use crate::ring::poly::SuperPolynomial;
use crate::ring::signature::AlgebraSignature;
use crate::scalar::Scalar;

/// Left partial derivative by the generator `X^a_t`.
///
/// For odd generators this is the left superderivation: on a monomial
/// `θ_{b₁}⋯θ_{b_k}` (factors in canonical ascending order) the
/// derivative by `θ_{b_j}` removes that factor with sign `(−1)^{j−1}`,
/// the parity of the number of odd factors jumped over.
pub fn partial(f: &SuperPolynomial, a: usize, t: usize) -> SuperPolynomial {
    let sig = f.signature();
    let mut out = SuperPolynomial::zero(sig);
    if a <= sig.m() {
        let o = sig.even_ordinal(a, t) as u16;
        for (mono, c) in f.terms() {
            let e = mono.even_exp(o as usize);
            if e == 0 {
                continue;
            }
            let even: Vec<(u16, u16)> = mono
                .even_part()
                .iter()
                .filter_map(|&(oo, ee)| {
                    if oo == o {
                        (ee > 1).then_some((oo, ee - 1))
                    } else {
                        Some((oo, ee))
                    }
                })
                .collect();
            out.add_term(
                Monomial::from_parts(even, mono.odd_mask()),
                c * &Scalar::int(e as i64),
            );
        }
    } else {
        let b = sig.odd_ordinal(a - sig.m(), t);
        let bit = 1u64 << b;
        for (mono, c) in f.terms() {
            let mask = mono.odd_mask();
            if mask & bit == 0 {
                continue;
            }
            let jumped = (mask & (bit - 1)).count_ones();
            let coeff = if jumped % 2 == 0 { c.clone() } else { -c };
            out.add_term(
                Monomial::from_parts(mono.even_part().to_vec(), mask & !bit),
                coeff,
            );
        }
    }
    out
}

/// One factor of an operator pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// Left multiplication by the generator `X^a_t`.
    Mul(usize, usize),
    /// Left derivative by `X^a_t`.
    Del(usize, usize),
}

impl Step {
    fn parity(self, sig: AlgebraSignature) -> u8 {
        match self {
            Step::Mul(a, _) | Step::Del(a, _) => sig.parity(a),
        }
    }

    fn apply(self, f: &SuperPolynomial) -> SuperPolynomial {
        match self {
            Step::Mul(a, t) => {
                let g = SuperPolynomial::generator(f.signature(), a, t)
                    .expect("pipeline step indices are pre-validated");
                &g * f
            }
            Step::Del(a, t) => partial(f, a, t),
        }
    }
}

/// A polynomial differential operator: a linear combination of pipelines
/// of multiplication and derivative steps.  A pipeline acts rightmost
/// step first, matching the usual composition order of operators.
#[derive(Debug, Clone)]
pub struct Operator {
    sig: AlgebraSignature,
    terms: Vec<(Scalar, Vec<Step>)>,
}

impl Operator {
    pub fn zero(sig: AlgebraSignature) -> Self {
        Operator {
            sig,
            terms: Vec::new(),
        }
    }

    pub fn identity(sig: AlgebraSignature) -> Self {
        Operator {
            sig,
            terms: vec![(Scalar::one(), Vec::new())],
        }
    }

    pub fn from_terms(sig: AlgebraSignature, terms: Vec<(Scalar, Vec<Step>)>) -> Self {
        Operator { sig, terms }
    }

    pub fn signature(&self) -> AlgebraSignature {
        self.sig
    }

    /// Multiplication by `X^a_t`.
    pub fn gen_mul(sig: AlgebraSignature, a: usize, t: usize) -> Self {
        Operator {
            sig,
            terms: vec![(Scalar::one(), vec![Step::Mul(a, t)])],
        }
    }

    /// The derivative `∂_{a,t}`.
    pub fn del(sig: AlgebraSignature, a: usize, t: usize) -> Self {
        Operator {
            sig,
            terms: vec![(Scalar::one(), vec![Step::Del(a, t)])],
        }
    }

    pub fn apply(&self, f: &SuperPolynomial) -> SuperPolynomial {
        assert_eq!(self.sig, f.signature(), "operator/operand signature");
        let mut out = SuperPolynomial::zero(self.sig);
        for (c, pipeline) in &self.terms {
            let mut g = f.clone();
            for step in pipeline.iter().rev() {
                g = step.apply(&g);
                if g.is_zero() {
                    break;
                }
            }
            out += &g.scale(c);
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.sig, rhs.sig);
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        Operator {
            sig: self.sig,
            terms,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Operator {
            sig: self.sig,
            terms: self.terms.iter().map(|(v, p)| (v * c, p.clone())).collect(),
        }
    }

    /// Operator composition: `(self ∘ rhs)(f) = self(rhs(f))`.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.sig, rhs.sig);
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (c1, p1) in &self.terms {
            for (c2, p2) in &rhs.terms {
                let mut p = p1.clone();
                p.extend_from_slice(p2);
                terms.push((c1 * c2, p));
            }
        }
        Operator {
            sig: self.sig,
            terms,
        }
    }

    /// Iterated composition with itself.
    pub fn pow(&self, e: usize) -> Self {
        let mut out = Operator::identity(self.sig);
        for _ in 0..e {
            out = out.compose(self);
        }
        out
    }

    /// Parity, when every pipeline is homogeneous of the same parity;
    /// the zero operator reports even.
    pub fn parity(&self) -> Option<u8> {
        let mut result: Option<u8> = Some(0);
        for (i, (_, p)) in self.terms.iter().enumerate() {
            let par = p.iter().map(|s| s.parity(self.sig) as usize).sum::<usize>() % 2;
            if i == 0 {
                result = Some(par as u8);
            } else if result != Some(par as u8) {
                return None;
            }
        }
        result
    }

    /// Do `self` and `rhs` agree on every monomial of total degree at
    /// most `dmax`?  Operators of these pipeline shapes shift degree by
    /// a fixed bound, so agreement on a sufficiently deep truncation is
    /// agreement of the restriction to that truncation; the callers use
    /// this as an exact check of operator identities degree by degree.
    pub fn equal_on_degree(&self, rhs: &Self, dmax: usize) -> bool {
        assert_eq!(self.sig, rhs.sig);
        let basis = monomials_up_to(self.sig, dmax).expect("basis within cap");
        basis.iter().all(|mono| {
            let f = SuperPolynomial::from_term(self.sig, mono.clone(), Scalar::one());
            self.apply(&f) == rhs.apply(&f)
        })
    }
}

/// The super-commutator `[A, B] = A∘B − (−1)^{[A][B]} B∘A`.
///
/// # Panics
///
/// Panics when either operator lacks a well-defined parity.
pub fn super_bracket(a: &Operator, b: &Operator) -> Operator {
    let pa = a.parity().expect("bracket needs homogeneous operators");
    let pb = b.parity().expect("bracket needs homogeneous operators");
    let ab = a.compose(b);
    let ba = b.compose(a);
    if pa * pb == 1 {
        ab.add(&ba)
    } else {
        ab.sub(&ba)
    }
}

/// The metric-lowered multiplication operator
/// `X_{a,t} = Σ_c (κ⁻¹)_{ac} X^c_t`.
pub fn op_x_lower(sig: AlgebraSignature, a: usize, t: usize) -> Operator {
    Operator::from_terms(
        sig,
        kappa_inv_row(sig, a)
            .into_iter()
            .map(|(c, v)| (v, vec![Step::Mul(c, t)]))
            .collect(),
    )
}

/// The infinitesimal isometry operator
/// `J_{ab} = Σ_t (X_{a,t} ∂_{b,t} − (−1)^{[a][b]} X_{b,t} ∂_{a,t})`.
///
/// These operators span the Lie superalgebra of the isometry supergroup
/// in its action on `S(N)`; a polynomial is invariant iff all of them
/// annihilate it.
pub fn op_j(sig: AlgebraSignature, a: usize, b: usize) -> Operator {
    let mut terms = Vec::new();
    let sign_flip = sig.parity(a) * sig.parity(b) == 1;
    for t in 1..=sig.copies() {
        for (c, v) in kappa_inv_row(sig, a) {
            terms.push((v, vec![Step::Mul(c, t), Step::Del(b, t)]));
        }
        for (c, v) in kappa_inv_row(sig, b) {
            // −(−1)^{[a][b]} X_{b,t} ∂_{a,t}
            let coeff = if sign_flip { v } else { -&v };
            terms.push((coeff, vec![Step::Mul(c, t), Step::Del(a, t)]));
        }
    }
    Operator::from_terms(sig, terms)
}

/// The copy-mixing polarization operator `E_{st} = Σ_a X^a_s ∂_{a,t}`.
/// For `s = t` this is the Euler (degree) operator of copy `t`; for
/// `s ≠ t` it moves degree from copy `t` to copy `s`.
pub fn op_e(sig: AlgebraSignature, s: usize, t: usize) -> Operator {
    Operator::from_terms(
        sig,
        (1..=sig.dim())
            .map(|a| (Scalar::one(), vec![Step::Mul(a, s), Step::Del(a, t)]))
            .collect(),
    )
}

fn laplacian_terms(
    sig: AlgebraSignature,
    s: usize,
    t: usize,
    rows: impl Iterator<Item = usize>,
) -> Vec<(Scalar, Vec<Step>)> {
    // Σ_{ab} κ_{ab} ∂_{b,s} ∂_{a,t} over the selected rows a
    let mut terms = Vec::new();
    for a in rows {
        for (b, v) in kappa_row(sig, a) {
            terms.push((v, vec![Step::Del(b, s), Step::Del(a, t)]));
        }
    }
    terms
}

/// The metric Laplacian `∂²_{st} = Σ_{ab} κ_{ab} ∂_{b,s} ∂_{a,t}`.
pub fn op_laplacian(sig: AlgebraSignature, s: usize, t: usize) -> Operator {
    Operator::from_terms(sig, laplacian_terms(sig, s, t, 1..=sig.dim()))
}

/// The even rows' part of `∂²_{st}` (second derivatives in the `x`).
pub fn op_laplacian_even(sig: AlgebraSignature, s: usize, t: usize) -> Operator {
    Operator::from_terms(sig, laplacian_terms(sig, s, t, 1..=sig.m()))
}

/// The odd rows' part of `∂²_{st}` (the symplectic pairing of `θ`
/// derivatives).
pub fn op_laplacian_odd(sig: AlgebraSignature, s: usize, t: usize) -> Operator {
    Operator::from_terms(sig, laplacian_terms(sig, s, t, sig.m() + 1..=sig.dim()))
}

/// Apply the product of diagonal Laplacians
/// `Π_{k=m+1}^{N} (∂²_{kk})^{λ_k / 2}` to `f`, highest copy first.
/// Entries `λ_k` for `k ≤ m` are ignored; the applied entries must be
/// even.
pub fn apply_nabla(f: &SuperPolynomial, lambda: &[usize]) -> SuperPolynomial {
    let sig = f.signature();
    assert!(
        lambda.len() <= sig.copies(),
        "λ has at most one part per copy"
    );
    let mut g = f.clone();
    for k in ((sig.m() + 1)..=lambda.len()).rev() {
        let lk = lambda[k - 1];
        assert!(lk % 2 == 0, "λ_{k} must be even beyond the first m parts");
        let op = op_laplacian(sig, k, k);
        for _ in 0..lk / 2 {
            g = op.apply(&g);
            if g.is_zero() {
                return g;
            }
        }
    }
    g
}

/// Is `f` annihilated by every infinitesimal isometry operator `J_{ab}`?
/// By the graded antisymmetry `J_{ba} = −(−1)^{[a][b]} J_{ab}`, the
/// pairs `a ≤ b` suffice.
pub fn is_invariant(f: &SuperPolynomial) -> bool {
    let sig = f.signature();
    for a in 1..=sig.dim() {
        for b in a..=sig.dim() {
            if a == b && sig.parity(a) == 0 {
                continue; // J_{aa} vanishes identically on even rows
            }
            if !op_j(sig, a, b).apply(f).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Is `f` multihomogeneous and annihilated by all raising operators
/// `E_{st}` with `s < t`?
pub fn is_highest_weight(f: &SuperPolynomial) -> bool {
    let sig = f.signature();
    if f.multidegree().is_none() {
        return false;
    }
    for s in 1..=sig.copies() {
        for t in (s + 1)..=sig.copies() {
            if !op_e(sig, s, t).apply(f).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig11() -> AlgebraSignature {
        AlgebraSignature::new(1, 1, 1)
    }

    /// `q₁₁ = x² − 2θ¹θ²` at `(m, n, N) = (1, 1, 1)`.
    fn q11() -> SuperPolynomial {
        let sig = sig11();
        let x = SuperPolynomial::x(sig, 1, 1).unwrap();
        let th1 = SuperPolynomial::theta(sig, 1, 1).unwrap();
        let th2 = SuperPolynomial::theta(sig, 2, 1).unwrap();
        &x.pow(2) - &(&th1 * &th2).scale(&Scalar::int(2))
    }

    #[test]
    fn left_derivative_signs() {
        let sig = AlgebraSignature::new(0, 1, 1);
        let th1 = SuperPolynomial::theta(sig, 1, 1).unwrap();
        let th2 = SuperPolynomial::theta(sig, 2, 1).unwrap();
        let prod = &th1 * &th2;
        // ∂_{θ¹}(θ¹θ²) = θ², first position: sign +
        assert_eq!(partial(&prod, 1, 1), th2);
        // ∂_{θ²}(θ¹θ²) = −θ¹, second position: sign −
        assert_eq!(partial(&prod, 2, 1), -&th1);
        // even: ∂_x(x³) = 3x²
        let s2 = AlgebraSignature::new(1, 0, 1);
        let x = SuperPolynomial::x(s2, 1, 1).unwrap();
        assert_eq!(partial(&x.pow(3), 1, 1), x.pow(2).scale(&Scalar::int(3)));
    }

    #[test]
    fn derivative_is_a_superderivation() {
        // ∂(fg) = (∂f)g + (−1)^{[∂][f]} f(∂g) for homogeneous f
        let sig = AlgebraSignature::new(1, 1, 1);
        let x = SuperPolynomial::x(sig, 1, 1).unwrap();
        let th1 = SuperPolynomial::theta(sig, 1, 1).unwrap();
        let th2 = SuperPolynomial::theta(sig, 2, 1).unwrap();
        let samples = [x.clone(), th1.clone(), th2.clone(), &x * &th1, &th1 * &th2];
        for f in &samples {
            for g in &samples {
                for a in 1..=3 {
                    let da = sig.parity(a);
                    let lhs = partial(&(f * g), a, 1);
                    let sign_neg = da == 1 && f.parity().unwrap() == 1;
                    let mut rhs = &partial(f, a, 1) * g;
                    let fg = f * &partial(g, a, 1);
                    if sign_neg {
                        rhs -= &fg;
                    } else {
                        rhs += &fg;
                    }
                    assert_eq!(lhs, rhs, "a={a} f={f} g={g}");
                }
            }
        }
    }

    #[test]
    fn fundamental_quadratic_is_annihilated_by_every_j() {
        assert!(is_invariant(&q11()));
        // and a non-invariant is caught
        let x = SuperPolynomial::x(sig11(), 1, 1).unwrap();
        assert!(!is_invariant(&x));
    }

    #[test]
    fn diagonal_laplacian_on_the_quadratic() {
        // ∂²₁₁(x² − 2θ¹θ²) = −2 at (m, n) = (1, 1):
        // the even part gives +2, the odd part −4
        let lap = op_laplacian(sig11(), 1, 1);
        assert_eq!(
            lap.apply(&q11()),
            SuperPolynomial::constant(sig11(), Scalar::int(-2))
        );
        let even = op_laplacian_even(sig11(), 1, 1);
        assert_eq!(
            even.apply(&q11()),
            SuperPolynomial::constant(sig11(), Scalar::int(2))
        );
        let odd = op_laplacian_odd(sig11(), 1, 1);
        assert_eq!(
            odd.apply(&q11()),
            SuperPolynomial::constant(sig11(), Scalar::int(-4))
        );
    }

    #[test]
    fn euler_operator_reads_the_multidegree() {
        let e11 = op_e(sig11(), 1, 1);
        let q = q11();
        assert_eq!(e11.apply(&q), q.scale(&Scalar::int(2)));
        let sig = AlgebraSignature::new(1, 1, 2);
        let x1 = SuperPolynomial::x(sig, 1, 1).unwrap();
        let th2 = SuperPolynomial::theta(sig, 1, 2).unwrap();
        let f = &x1.pow(3) * &th2;
        assert_eq!(op_e(sig, 1, 1).apply(&f), f.scale(&Scalar::int(3)));
        assert_eq!(op_e(sig, 2, 2).apply(&f), f.scale(&Scalar::int(1)));
    }

    #[test]
    fn bracket_of_odd_derivative_and_multiplication_is_the_identity() {
        // {∂_{θ¹}, θ¹·} = 1 (both odd: anticommutator)
        let sig = sig11();
        let d = Operator::del(sig, 2, 1);
        let x = Operator::gen_mul(sig, 2, 1);
        let br = super_bracket(&d, &x);
        assert!(br.equal_on_degree(&Operator::identity(sig), 3));
    }

    #[test]
    fn operator_parities() {
        let sig = sig11();
        assert_eq!(op_j(sig, 1, 2).parity(), Some(1));
        assert_eq!(op_j(sig, 2, 3).parity(), Some(0));
        assert_eq!(op_e(sig, 1, 1).parity(), Some(0));
        assert_eq!(op_laplacian(sig, 1, 1).parity(), Some(0));
        assert_eq!(Operator::zero(sig).parity(), Some(0));
    }

    #[test]
    fn isometry_operators_close_under_the_bracket() {
        // [J_{12}, J_{13}] lies in the span of the J's: verify the
        // bracket annihilates the invariant quadratic, as any isometry
        // combination must
        let sig = sig11();
        let br = super_bracket(&op_j(sig, 1, 2), &op_j(sig, 1, 3));
        assert!(br.apply(&q11()).is_zero());
    }

    #[test]
    fn nabla_applies_diagonal_laplacians_beyond_the_first_m_copies() {
        // at (1,1,2) with λ = (0, 2): ∇ = ∂²₂₂, and on the copy-2
        // quadratic q₂₂ = x₂² − 2θ¹₂θ²₂ it gives −2
        let sig = AlgebraSignature::new(1, 1, 2);
        let x2 = SuperPolynomial::x(sig, 1, 2).unwrap();
        let th12 = SuperPolynomial::theta(sig, 1, 2).unwrap();
        let th22 = SuperPolynomial::theta(sig, 2, 2).unwrap();
        let q22 = &x2.pow(2) - &(&th12 * &th22).scale(&Scalar::int(2));
        let g = apply_nabla(&q22, &[0, 2]);
        assert_eq!(g, SuperPolynomial::constant(sig, Scalar::int(-2)));
        // λ entries for copies ≤ m are ignored entirely
        let f = SuperPolynomial::x(sig, 1, 1).unwrap();
        assert_eq!(apply_nabla(&f, &[3]), f);
    }

    #[test]
    fn highest_weight_detection() {
        let sig = AlgebraSignature::new(1, 0, 2);
        let x1 = SuperPolynomial::x(sig, 1, 1).unwrap();
        let x2 = SuperPolynomial::x(sig, 1, 2).unwrap();
        assert!(is_highest_weight(&x1));
        // x₂ is lowered from x₁: E_{12} x₂ = x₁ ≠ 0
        assert!(!is_highest_weight(&x2));
        assert!(!is_highest_weight(&(&x1 + &x1.pow(2))));
    }
}
