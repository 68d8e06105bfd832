//! An independent construction of the pseudo-invariant for
//! `osp(2|2)` acting on two copies of `ℂ^{2|2}`.
//!
//! Over complex coordinates `z_t = x¹_t + i x²_t` the four odd
//! superalgebra elements act by first-order operators mixing `z`-
//! multiplication with odd derivatives. Their ordered product is a
//! quartic operator `γ`; applied to the distinguished element
//! `δ₀ = Δ_z · θ¹₁θ²₁θ¹₂θ²₂` it reproduces the degree-6 pseudo-
//! invariant — the same polynomial the localization construction
//! produces, up to the explicit constant that relates the complex and
//! real coordinate frames.

use crate::diffops::{Operator, Step};
use crate::pfaffian::localization::omega;
use crate::ring::poly::SuperPolynomial;
use crate::ring::signature::AlgebraSignature;
use crate::scalar::Scalar;

/// Two copies of `ℂ^{2|2}`: rows 1, 2 even; rows 3, 4 the odd pair.
pub fn signature22() -> AlgebraSignature {
    AlgebraSignature::new(2, 1, 2)
}

/// `z_t = x¹_t + i x²_t`, or its conjugate.
pub fn z_coord(t: usize, conj: bool) -> SuperPolynomial {
    let sig = signature22();
    let x1 = SuperPolynomial::x(sig, 1, t).unwrap();
    let x2 = SuperPolynomial::x(sig, 2, t).unwrap();
    let i = if conj { -&Scalar::i() } else { Scalar::i() };
    &x1 + &x2.scale(&i)
}

/// The four first-order odd operators in `z`-coordinates, as raw
/// multiply/differentiate pipelines:
///
/// * `J³  = Σ_t ( z_t ∂_{θ²_t} − 2 θ¹_t ∂_{z̄_t})`
/// * `J⁴  = Σ_t (−z_t ∂_{θ¹_t} − 2 θ²_t ∂_{z̄_t})`
/// * `J̄³ = Σ_t ( z̄_t ∂_{θ²_t} − 2 θ¹_t ∂_{z_t})`
/// * `J̄⁴ = Σ_t (−z̄_t ∂_{θ¹_t} − 2 θ²_t ∂_{z_t})`
///
/// with `2 ∂_{z̄} = ∂_{x¹} + i ∂_{x²}` and `2 ∂_z = ∂_{x¹} − i ∂_{x²}`.
pub fn complex_ops_zform() -> [Operator; 4] {
    let sig = signature22();
    let one = Scalar::one;
    let i = Scalar::i;
    let build = |theta_del: usize, z_sign: i64, conj: bool, theta_mul: usize| {
        let mut terms = Vec::new();
        for t in 1..=2 {
            let zs = Scalar::int(z_sign);
            let zi = if conj { &zs * &-&i() } else { &zs * &i() };
            // (±z or ±z̄) · ∂_θ
            terms.push((&zs * &one(), vec![Step::Mul(1, t), Step::Del(theta_del, t)]));
            terms.push((zi, vec![Step::Mul(2, t), Step::Del(theta_del, t)]));
            // −2 θ ∂_{z̄} = −θ(∂_{x¹} + i∂_{x²}); −2 θ ∂_z conjugates the i
            let di = if conj { i() } else { -&i() };
            terms.push((-&one(), vec![Step::Mul(theta_mul, t), Step::Del(1, t)]));
            terms.push((di, vec![Step::Mul(theta_mul, t), Step::Del(2, t)]));
        }
        Operator::from_terms(sig, terms)
    };
    [
        build(4, 1, false, 3),  // J³
        build(3, -1, false, 4), // J⁴
        build(4, 1, true, 3),   // J̄³
        build(3, -1, true, 4),  // J̄⁴
    ]
}

/// The same four operators assembled from the real superalgebra basis:
/// `J³ = J_{14} + i J_{24}`, `J⁴ = −J_{13} − i J_{23}`, and their
/// conjugates with `i ↦ −i`.
pub fn complex_ops_from_pairs() -> [Operator; 4] {
    let sig = signature22();
    let j = |a, b| crate::diffops::op_j(sig, a, b);
    let plus_i = Scalar::i();
    let minus_i = -&Scalar::i();
    [
        j(1, 4).add(&j(2, 4).scale(&plus_i)),
        j(1, 3)
            .scale(&Scalar::int(-1))
            .add(&j(2, 3).scale(&-&plus_i)),
        j(1, 4).add(&j(2, 4).scale(&minus_i)),
        j(1, 3)
            .scale(&Scalar::int(-1))
            .add(&j(2, 3).scale(&-&minus_i)),
    ]
}

/// Do the two assemblies of the complex operators agree on every
/// polynomial of degree ≤ `max_degree`?
pub fn dictionary_agrees(max_degree: usize) -> bool {
    let a = complex_ops_zform();
    let b = complex_ops_from_pairs();
    a.iter()
        .zip(b.iter())
        .all(|(x, y)| x.equal_on_degree(y, max_degree))
}

/// `Δ_z = z₁ z̄₂ − z̄₁ z₂ = −2i (x¹₁ x²₂ − x²₁ x¹₂)`.
pub fn delta_z() -> SuperPolynomial {
    let z1 = z_coord(1, false);
    let z2 = z_coord(2, false);
    let z1b = z_coord(1, true);
    let z2b = z_coord(2, true);
    &(&z1 * &z2b) - &(&z1b * &z2)
}

/// The top Grassmann monomial `θ¹₁ θ²₁ θ¹₂ θ²₂`.
pub fn theta_top() -> SuperPolynomial {
    let sig = signature22();
    let th = |mu, t| SuperPolynomial::theta(sig, mu, t).unwrap();
    &(&(&th(1, 1) * &th(2, 1)) * &th(1, 2)) * &th(2, 2)
}

/// The distinguished element `δ₀ = Δ_z · θ¹₁θ²₁θ¹₂θ²₂`.
pub fn delta0() -> SuperPolynomial {
    &delta_z() * &theta_top()
}

/// Apply the quartic operator `γ = J³ J⁴ J̄⁴ J̄³` to `δ₀` and negate:
/// the integral-style construction of the pseudo-invariant.
pub fn quartic_image() -> SuperPolynomial {
    let [j3, j4, j3bar, j4bar] = complex_ops_zform();
    let f = j3bar.apply(&delta0());
    let f = j4bar.apply(&f);
    let f = j4.apply(&f);
    let f = j3.apply(&f);
    -&f
}

/// The expected image, written out explicitly:
/// `Δ_z³ + 12 Δ_z (z₁z̄₁ θ¹₂θ²₂ + z₂z̄₂ θ¹₁θ²₁)
///  − 6 Δ_z (z₁z̄₂ + z₂z̄₁)(θ¹₁θ²₂ + θ¹₂θ²₁) − 48 δ₀`.
pub fn expected_image() -> SuperPolynomial {
    let sig = signature22();
    let th = |mu, t| SuperPolynomial::theta(sig, mu, t).unwrap();
    let dz = delta_z();
    let z = |t| z_coord(t, false);
    let zb = |t| z_coord(t, true);

    let pair = |t: usize| &th(1, t) * &th(2, t); // θ¹_t θ²_t
    let cross = &(&th(1, 1) * &th(2, 2)) + &(&th(1, 2) * &th(2, 1));
    let radii = &(&(&z(1) * &zb(1)) * &pair(2)) + &(&(&z(2) * &zb(2)) * &pair(1));
    let mixed = &(&z(1) * &zb(2)) + &(&z(2) * &zb(1));

    let mut out = dz.pow(3);
    out += &(&dz * &radii).scale(&Scalar::int(12));
    out -= &(&(&dz * &mixed) * &cross).scale(&Scalar::int(6));
    out -= &delta0().scale(&Scalar::int(48));
    out
}

/// Terms of fixed Grassmann degree `d`.
pub fn grassmann_component(f: &SuperPolynomial, d: usize) -> SuperPolynomial {
    SuperPolynomial::from_terms(
        f.signature(),
        f.terms()
            .filter(|(mono, _)| mono.odd_count() == d)
            .map(|(mono, c)| (mono.clone(), c.clone())),
    )
}

/// The constant `c` with `quartic_image() = c · Ω`, if the two
/// constructions are exactly proportional. The complex frame differs
/// from the real one by `Δ_z = −2i Δ`, so `c = (−2i)³ = 8i`.
pub fn omega_ratio() -> Option<Scalar> {
    let image = quartic_image();
    let om = omega(signature22());
    let (mono, top) = image.max_term()?;
    let denom = om.coefficient(mono);
    if denom.is_zero() {
        return None;
    }
    let c = top / &denom;
    if image == om.scale(&c) {
        Some(c)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffops::is_invariant;
    use crate::ring::subst::{group_action, GroupElement};

    #[test]
    fn the_two_operator_assemblies_agree() {
        assert!(dictionary_agrees(2));
    }

    #[test]
    fn complex_operators_square_to_zero() {
        // Each J is odd with [J, J] ∝ J² pairing to a null direction:
        // J³ J³ = 0 and J̄⁴ J̄⁴ = 0 on low degrees
        let [j3, _, _, j4bar] = complex_ops_zform();
        let zero = Operator::zero(signature22());
        assert!(j3.compose(&j3).equal_on_degree(&zero, 2));
        assert!(j4bar.compose(&j4bar).equal_on_degree(&zero, 2));
    }

    #[test]
    fn delta_z_is_the_rotated_determinant() {
        let sig = signature22();
        let x = |i, t| SuperPolynomial::x(sig, i, t).unwrap();
        let det = &(&x(1, 1) * &x(2, 2)) - &(&x(2, 1) * &x(1, 2));
        assert_eq!(delta_z(), det.scale(&(&Scalar::int(-2) * &Scalar::i())));
    }

    #[test]
    fn quartic_image_matches_the_explicit_formula() {
        assert_eq!(quartic_image(), expected_image());
    }

    #[test]
    fn grassmann_components_of_the_image() {
        let image = quartic_image();
        assert_eq!(grassmann_component(&image, 0), delta_z().pow(3));
        assert_eq!(
            grassmann_component(&image, 4),
            delta0().scale(&Scalar::int(-48))
        );
        // degrees 0 + 2 + 4 exhaust the image
        let total = &(&grassmann_component(&image, 0) + &grassmann_component(&image, 2))
            + &grassmann_component(&image, 4);
        assert_eq!(image, total);
    }

    #[test]
    fn quartic_image_is_proportional_to_omega() {
        let c = omega_ratio().expect("the two constructions must be proportional");
        let eight_i = &Scalar::int(8) * &Scalar::i();
        assert_eq!(c, eight_i);
    }

    #[test]
    fn quartic_image_is_a_pseudo_invariant() {
        let image = quartic_image();
        assert!(is_invariant(&image));
        let refl = GroupElement::reflection(2, 1);
        assert_eq!(group_action(&refl, &image).unwrap(), -&image);
    }
}
