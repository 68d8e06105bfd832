//! Algebra homomorphisms of `S(N)`: generator substitution, the linear
//! group action on the supermatrix rows, and the two specialization maps
//! used by the localization and Laurent-expansion arguments.

use super::poly::SuperPolynomial;
use super::signature::AlgebraSignature;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::collections::{BTreeMap, HashMap};

/// A parity-preserving algebra homomorphism determined by generator
/// images.  Generators without an explicit image map to the generator of
/// the same name in the target ring.
pub struct Substitution {
    source: AlgebraSignature,
    target: AlgebraSignature,
    images: HashMap<(usize, usize), SuperPolynomial>,
}

impl Substitution {
    pub fn new(source: AlgebraSignature, target: AlgebraSignature) -> Self {
        Substitution {
            source,
            target,
            images: HashMap::new(),
        }
    }

    pub fn source(&self) -> AlgebraSignature {
        self.source
    }

    pub fn target(&self) -> AlgebraSignature {
        self.target
    }

    /// Set the image of `X^a_t`.  The image must live in the target ring
    /// and must be homogeneous of the generator's parity (or zero).
    pub fn set(&mut self, a: usize, t: usize, image: SuperPolynomial) -> Result<()> {
        self.source.check_row(a)?;
        self.source.check_copy(t)?;
        if image.signature() != self.target {
            return Err(Error::SignatureMismatch {
                left: self.target,
                right: image.signature(),
            });
        }
        let expected = self.source.parity(a);
        match image.parity() {
            None if image.is_zero() => {}
            Some(p) if p == expected => {}
            other => {
                return Err(Error::ParityMismatch {
                    a,
                    t,
                    expected,
                    found: other.unwrap_or(2),
                });
            }
        }
        self.images.insert((a, t), image);
        Ok(())
    }

    fn image(&self, a: usize, t: usize) -> Result<SuperPolynomial> {
        if let Some(img) = self.images.get(&(a, t)) {
            return Ok(img.clone());
        }
        // default: the same-named generator of the target ring
        SuperPolynomial::generator(self.target, a, t)
    }

    /// Apply the homomorphism.  Each monomial is expanded as the ordered
    /// product of its factors (even factors first, odd factors by
    /// ascending canonical position); supercommutativity of the target
    /// ring supplies all signs.
    pub fn apply(&self, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        if f.signature() != self.source {
            return Err(Error::SignatureMismatch {
                left: self.source,
                right: f.signature(),
            });
        }
        let m = self.source.m();
        // cache images and their powers per even ordinal
        let mut even_pows: HashMap<(usize, u16), SuperPolynomial> = HashMap::new();
        let mut out = SuperPolynomial::zero(self.target);
        for (mono, coeff) in f.terms() {
            let mut acc = SuperPolynomial::constant(self.target, coeff.clone());
            for &(o, e) in mono.even_part() {
                let pow = match even_pows.get(&(o as usize, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let (i, t) = self.source.decode_even(o as usize);
                        let p = self.image(i, t)?.pow(e as usize);
                        even_pows.insert((o as usize, e), p.clone());
                        p
                    }
                };
                acc = &acc * &pow;
                if acc.is_zero() {
                    break;
                }
            }
            for b in mono.odd_bits() {
                if acc.is_zero() {
                    break;
                }
                let (mu, t) = self.source.decode_odd(b);
                acc = &acc * &self.image(m + mu, t)?;
            }
            out += &acc;
        }
        Ok(out)
    }
}

// ---- small dense matrices over the scalar field ------------------------

pub(crate) type Mat = Vec<Vec<Scalar>>;

pub(crate) fn mat_identity(k: usize) -> Mat {
    (0..k)
        .map(|r| {
            (0..k)
                .map(|c| {
                    if r == c {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub(crate) fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let k = a.len();
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    (0..k)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    let mut s = Scalar::zero();
                    for (j, row_b) in b.iter().enumerate() {
                        s += &(&a[r][j] * &row_b[c]);
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub(crate) fn mat_transpose(a: &Mat) -> Mat {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    (0..cols)
        .map(|c| (0..rows).map(|r| a[r][c].clone()).collect())
        .collect()
}

/// Determinant by Laplace expansion along the first row (inputs are tiny).
pub(crate) fn mat_det(a: &Mat) -> Scalar {
    let k = a.len();
    if k == 0 {
        return Scalar::one();
    }
    if k == 1 {
        return a[0][0].clone();
    }
    let mut det = Scalar::zero();
    for c in 0..k {
        if a[0][c].is_zero() {
            continue;
        }
        let minor: Mat = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &a[0][c] * &mat_det(&minor);
        if c % 2 == 0 {
            det += &term;
        } else {
            det -= &term;
        }
    }
    det
}

/// The symplectic Gram matrix `η` of size `2n`: `η = [[0, I], [−I, 0]]`.
pub(crate) fn eta_matrix(n: usize) -> Mat {
    let mut h = vec![vec![Scalar::zero(); 2 * n]; 2 * n];
    for mu in 0..n {
        h[mu][n + mu] = Scalar::one();
        h[n + mu][mu] = -&Scalar::one();
    }
    h
}

// ---- the even group and its action ------------------------------------

/// A block-diagonal linear map `ρ = diag(g0, g1)` acting on the rows of
/// the supermatrix: `g0` is `m×m` on the even columns, `g1` is `2n×2n`
/// on the odd columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    m: usize,
    n: usize,
    g0: Mat,
    g1: Mat,
}

impl GroupElement {
    /// Element of the even isometry group: requires `g0ᵀ g0 = I` and
    /// `g1ᵀ η g1 = η`.
    pub fn orthosymplectic(g0: Mat, g1: Mat) -> Result<Self> {
        let g = Self::linear(g0, g1)?;
        if !g.is_isometry() {
            return Err(Error::NotInvertible);
        }
        Ok(g)
    }

    /// Any block-diagonal linear substitution (no isometry condition);
    /// useful as a negative control.
    pub fn linear(g0: Mat, g1: Mat) -> Result<Self> {
        let m = g0.len();
        if g0.iter().any(|row| row.len() != m) {
            return Err(Error::NotSquare {
                rows: m,
                cols: g0.iter().map(Vec::len).max().unwrap_or(0),
            });
        }
        let two_n = g1.len();
        if two_n % 2 != 0 || g1.iter().any(|row| row.len() != two_n) {
            return Err(Error::NotSquare {
                rows: two_n,
                cols: g1.iter().map(Vec::len).max().unwrap_or(two_n + 1),
            });
        }
        Ok(GroupElement {
            m,
            n: two_n / 2,
            g0,
            g1,
        })
    }

    pub fn identity(m: usize, n: usize) -> Self {
        GroupElement {
            m,
            n,
            g0: mat_identity(m),
            g1: mat_identity(2 * n),
        }
    }

    /// `diag(−1, 1, …, 1) ⊕ I`: the orientation-reversing generator.
    pub fn reflection(m: usize, n: usize) -> Self {
        let mut g = Self::identity(m, n);
        if m > 0 {
            g.g0[0][0] = -&Scalar::one();
        }
        g
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g0(&self) -> &Mat {
        &self.g0
    }

    pub fn g1(&self) -> &Mat {
        &self.g1
    }

    /// Does this element preserve the metric (`g0ᵀ g0 = I`,
    /// `g1ᵀ η g1 = η`)?
    pub fn is_isometry(&self) -> bool {
        let ortho = mat_mul(&mat_transpose(&self.g0), &self.g0) == mat_identity(self.m);
        let eta = eta_matrix(self.n);
        let symp = mat_mul(&mat_mul(&mat_transpose(&self.g1), &eta), &self.g1) == eta;
        ortho && symp
    }

    /// Determinant of the even-even block `g0` (the character that
    /// separates invariants from pseudo-invariants).
    pub fn det0(&self) -> Scalar {
        mat_det(&self.g0)
    }

    /// Group multiplication: `(g ∘ h)` acts as `g` after `h`.
    pub fn compose(&self, h: &GroupElement) -> Self {
        assert_eq!((self.m, self.n), (h.m, h.n), "block sizes must agree");
        GroupElement {
            m: self.m,
            n: self.n,
            g0: mat_mul(&self.g0, &h.g0),
            g1: mat_mul(&self.g1, &h.g1),
        }
    }

    /// The substitution `X^a_t ↦ Σ_b ρ_{ba} X^b_t` on every copy `t`.
    pub fn substitution(&self, sig: AlgebraSignature) -> Result<Substitution> {
        if sig.m() != self.m || sig.n() != self.n {
            return Err(Error::SignatureMismatch {
                left: sig,
                right: AlgebraSignature::new(self.m, self.n, 1),
            });
        }
        let mut s = Substitution::new(sig, sig);
        for t in 1..=sig.copies() {
            for a in 1..=self.m {
                let mut img = SuperPolynomial::zero(sig);
                for b in 1..=self.m {
                    let coef = self.g0[b - 1][a - 1].clone();
                    if !coef.is_zero() {
                        img += &SuperPolynomial::x(sig, b, t)?.scale(&coef);
                    }
                }
                s.set(a, t, img)?;
            }
            for a in 1..=2 * self.n {
                let mut img = SuperPolynomial::zero(sig);
                for b in 1..=2 * self.n {
                    let coef = self.g1[b - 1][a - 1].clone();
                    if !coef.is_zero() {
                        img += &SuperPolynomial::theta(sig, b, t)?.scale(&coef);
                    }
                }
                s.set(self.m + a, t, img)?;
            }
        }
        Ok(s)
    }
}

/// Apply the linear action of `g` to `f` (every copy transforms the same
/// way).
pub fn group_action(g: &GroupElement, f: &SuperPolynomial) -> Result<SuperPolynomial> {
    g.substitution(f.signature())?.apply(f)
}

/// A finite set of isometries that exercises every block: a reflection,
/// a rational rotation in each even coordinate plane, adjacent even
/// swaps, and symplectic transvections `I − v·vᵀ·η` for `v = e_i` and
/// `v = e_i + e_j`.
pub fn osp0_generators(m: usize, n: usize) -> Vec<GroupElement> {
    let mut gens = Vec::new();
    if m > 0 {
        gens.push(GroupElement::reflection(m, n));
    }
    for i in 0..m {
        for j in (i + 1)..m {
            // rational rotation by the (3,4,5) angle in the (i,j) plane
            let mut g0 = mat_identity(m);
            g0[i][i] = Scalar::ratio(3, 5);
            g0[i][j] = Scalar::ratio(4, 5);
            g0[j][i] = Scalar::ratio(-4, 5);
            g0[j][j] = Scalar::ratio(3, 5);
            gens.push(GroupElement::linear(g0, mat_identity(2 * n)).unwrap());
            // swap of coordinates i and j
            let mut s0 = mat_identity(m);
            s0[i][i] = Scalar::zero();
            s0[j][j] = Scalar::zero();
            s0[i][j] = Scalar::one();
            s0[j][i] = Scalar::one();
            gens.push(GroupElement::linear(s0, mat_identity(2 * n)).unwrap());
        }
    }
    // symplectic transvections
    let eta = eta_matrix(n);
    let mut add_transvection = |v: Vec<Scalar>| {
        let mut g1 = mat_identity(2 * n);
        for (r, g1_row) in g1.iter_mut().enumerate() {
            for (c, entry) in g1_row.iter_mut().enumerate() {
                // (v·vᵀ·η)_{rc} = v_r Σ_k v_k η_{kc}
                let mut s = Scalar::zero();
                for (k, vk) in v.iter().enumerate() {
                    s += &(vk * &eta[k][c]);
                }
                *entry -= &(&v[r] * &s);
            }
        }
        gens.push(GroupElement::orthosymplectic(mat_identity(m), g1).expect("transvection"));
    };
    for i in 0..2 * n {
        let mut v = vec![Scalar::zero(); 2 * n];
        v[i] = Scalar::one();
        add_transvection(v);
    }
    for i in 0..2 * n {
        for j in (i + 1)..2 * n {
            let mut v = vec![Scalar::zero(); 2 * n];
            v[i] = Scalar::one();
            v[j] = Scalar::one();
            add_transvection(v);
        }
    }
    gens
}

// ---- specialization maps ----------------------------------------------

/// Restriction to the last `N − m` copies: the first `m` copies are
/// frozen to the unit rows `e_1, …, e_m` (their odd generators to zero),
/// the remaining copies keep only their odd generators.  Lands in the
/// purely odd ring with signature `(0, n, N − m)`.
pub fn specialize_r(f: &SuperPolynomial) -> Result<SuperPolynomial> {
    let sig = f.signature();
    let (m, n, big_n) = (sig.m(), sig.n(), sig.copies());
    if big_n <= m {
        return Err(Error::WrongCopyCount {
            required: format!("more than m = {m} copies"),
            found: big_n,
        });
    }
    let target = AlgebraSignature::try_new(0, n, big_n - m)?;
    let shift = m * 2 * n;
    let mut out = SuperPolynomial::zero(target);
    'term: for (mono, coeff) in f.terms() {
        for &(o, e) in mono.even_part() {
            let (i, t) = sig.decode_even(o as usize);
            if t > m || i != t {
                continue 'term; // x^i_t ↦ 0
            }
            let _ = e; // x^t_t ↦ 1
        }
        let mask = mono.odd_mask();
        if mask & ((1u64 << shift) - 1) != 0 {
            continue; // an odd generator of a frozen copy ↦ 0
        }
        // shifting all bits down by the same amount preserves their
        // relative order, so no sign is introduced
        out.add_term(
            super::monomial::Monomial::from_parts(Vec::new(), mask >> shift),
            coeff.clone(),
        );
    }
    Ok(out)
}

/// Evaluation on the curve used for the Laurent-coefficient argument:
/// requires `N = m`; copies `1, …, m−1` are frozen to the unit rows
/// `e_1, …, e_{m−1}`, and copy `m` becomes `(0, …, 0, t, θ¹, …, θ^{2n})`
/// with `t` an invertible scalar parameter.  The result is the map
/// `exponent of t ↦ coefficient`, with coefficients in the one-copy
/// purely odd ring `(0, n, 1)`.
pub fn specialize_xi(f: &SuperPolynomial) -> Result<BTreeMap<i64, SuperPolynomial>> {
    let sig = f.signature();
    let (m, n, big_n) = (sig.m(), sig.n(), sig.copies());
    if big_n != m {
        return Err(Error::WrongCopyCount {
            required: format!("exactly m = {m} copies"),
            found: big_n,
        });
    }
    let target = AlgebraSignature::try_new(0, n, 1)?;
    let shift = (m - 1) * 2 * n;
    let mut out: BTreeMap<i64, SuperPolynomial> = BTreeMap::new();
    'term: for (mono, coeff) in f.terms() {
        let mut t_exp: i64 = 0;
        for &(o, e) in mono.even_part() {
            let (i, t) = sig.decode_even(o as usize);
            if t < m {
                if i != t {
                    continue 'term; // frozen row: x^i_t ↦ δ_{it}
                }
            } else if i < m {
                continue 'term; // x^i_m ↦ 0 for i < m
            } else {
                t_exp += e as i64; // x^m_m ↦ t
            }
        }
        // shift = (m−1)·2n ≤ 62 because the signature caps 2n·m at 64
        let mask = mono.odd_mask();
        if mask & ((1u64 << shift) - 1) != 0 {
            continue; // odd generator of a frozen copy ↦ 0
        }
        let entry = out
            .entry(t_exp)
            .or_insert_with(|| SuperPolynomial::zero(target));
        entry.add_term(
            super::monomial::Monomial::from_parts(Vec::new(), mask >> shift),
            coeff.clone(),
        );
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}
