//! Invariants in tensor powers: pairing products span everything.
//!
//! The multilinear slice of N copies of V = C^{m|2n} is V^{⊗N} (up to
//! sign conventions).  Its isometry-invariant subspace is spanned by the
//! permuted products of the quadratic pairings q_{st} — the diagrammatic
//! ("Brauer") picture — and is zero for odd N.  The det-twisted subspace
//! needs a harmonic factor: it is spanned by permutations of
//! (harmonic slice of Ω's lowering closure) × (pairing chains).
//!
//! Run with `cargo run --release --example tensor_invariants`.

use ospinv::decomp::{
    as_usize, contraction_constant, f_standard, gamma0_basis, is_harmonic, pairing_span,
    slice_rank, tensor_invariant_dimension, tensor_pseudo_dimension, tensor_split, twisted_span,
};
use ospinv::diffops::is_invariant;
use ospinv::ring::AlgebraSignature;
use ospinv::scalar::Scalar;

fn main() {
    let (m, n) = (1usize, 1usize);
    println!("multilinear invariants of N copies of C^{{{m}|{}}}:", 2 * n);
    println!("  N | invariant dim | twisted dim");
    for copies in 1..=5 {
        let sig = AlgebraSignature::new(m, n, copies);
        let split = tensor_split(sig).unwrap();
        let inv = as_usize(&tensor_invariant_dimension(sig));
        let tw = as_usize(&tensor_pseudo_dimension(sig));
        assert_eq!(split.invariant.len(), inv);
        assert_eq!(split.pseudo.len(), tw);
        println!("  {copies} |       {inv}       |     {tw}");
    }
    println!();

    // Even N: the pairing products q_{σ(1)σ(2)} ⋯ q_{σ(N−1)σ(N)} span.
    let sig = AlgebraSignature::new(m, n, 4);
    let family = pairing_span(sig).unwrap();
    let rank = slice_rank(sig, &family).unwrap();
    assert_eq!(rank, as_usize(&tensor_invariant_dimension(sig)));
    assert!(family.iter().all(is_invariant));
    println!(
        "N = 4: {} permuted pairing products span the rank-{rank} invariant space",
        family.len()
    );

    // One contraction of a pairing returns the superdimension m − 2n.
    let c = contraction_constant(sig).unwrap();
    assert_eq!(c, Scalar::int(m as i64 - 2 * n as i64));
    println!("contraction of one pairing = superdimension m − 2n = {c}");
    println!();

    // N = m(2n+1): the twisted space is the harmonic multilinear slice of
    // the lowering closure of Ω — here one dimension, killed by every
    // copy-mixing Laplacian.
    let sig = AlgebraSignature::new(m, n, m * (2 * n + 1));
    let g0 = gamma0_basis(sig).unwrap();
    assert_eq!(g0.len(), as_usize(&f_standard(&vec![2 * n + 1; m])));
    assert!(g0.iter().all(|f| is_harmonic(sig, f)));
    println!(
        "N = {}: harmonic slice of the closure has dimension {}",
        sig.copies(),
        g0.len()
    );

    // N = 5: twisted span = permutations of (embedded slice) × pairings.
    let sig = AlgebraSignature::new(m, n, 5);
    let family = twisted_span(sig).unwrap();
    let rank = slice_rank(sig, &family).unwrap();
    assert_eq!(rank, as_usize(&tensor_pseudo_dimension(sig)));
    println!("N = 5: twisted span has rank {rank} = predicted dimension");
}
