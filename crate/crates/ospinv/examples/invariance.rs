//! Invariance of the super Pfaffian under the orthosymplectic action.
//!
//! The infinitesimal isometries of the even-symmetric/odd-skew metric act
//! as differential operators J_ab; they all annihilate Ω.  The even
//! isometry *group* acts by substitution, and Ω transforms by the
//! determinant character: g(Ω) = det(g)·Ω — in particular a reflection
//! negates it and every symplectic transvection fixes it.
//!
//! Run with `cargo run --release --example invariance`.

use ospinv::diffops::{is_invariant, op_j};
use ospinv::pfaffian::omega;
use ospinv::ring::subst::{group_action, osp0_generators, GroupElement};
use ospinv::ring::AlgebraSignature;

fn main() {
    for (m, n) in [(1usize, 1usize), (2, 1), (1, 2)] {
        let sig = AlgebraSignature::new(m, n, m);
        let om = omega(sig);
        println!("(m, n) = ({m}, {n}): Ω has {} terms", om.terms().count());

        // Infinitesimal invariance: every J_ab kills Ω.
        assert!(is_invariant(&om));
        let mut ops = 0;
        for a in 1..=sig.dim() {
            for b in a..=sig.dim() {
                if op_j(sig, a, b).apply(&om).is_zero() {
                    ops += 1;
                }
            }
        }
        println!("  all {ops} isometry operators J_ab annihilate Ω");

        // Group action: det-twisted equivariance generator by generator.
        let refl = GroupElement::reflection(m, n);
        let reflected = group_action(&refl, &om).unwrap();
        assert!((&reflected + &om).is_zero());
        println!("  reflection (det = −1) sends Ω to −Ω");

        let gens = osp0_generators(m, n);
        for g in &gens {
            let image = group_action(g, &om).unwrap();
            assert_eq!(image, om.scale(&g.det0()));
        }
        println!("  g(Ω) = det(g)·Ω for {} even-group generators", gens.len());
        println!();
    }
}
