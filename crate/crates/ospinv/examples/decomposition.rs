//! Graded decomposition of the invariant and det-twisted subspaces.
//!
//! Degree by degree, the isometry-annihilated subspace of the coordinate
//! ring is computed twice: brute force (the exact kernel of all J_ab on a
//! monomial basis) and by a closed dimension formula (a sum of
//! general-linear dimensions over hook-admissible even partitions).  The
//! det-twisted ("pseudo") subspace gets the same treatment with shifted
//! weights, and each predicted block is certified by an explicit
//! highest-weight vector.
//!
//! Run with `cargo run --release --example decomposition`.

use ospinv::decomp::{
    as_usize, graded_split, invariant_dimension_sum, is_invariant_weight, is_pseudo_weight,
    partitions_of, pseudo_dimension_sum, pseudo_hwv,
};
use ospinv::diffops::{is_highest_weight, is_invariant};
use ospinv::pfaffian::quadratics::d_lambda;
use ospinv::ring::AlgebraSignature;

fn main() {
    let (m, n, copies) = (1usize, 1usize, 2usize);
    let sig = AlgebraSignature::new(m, n, copies);
    println!(
        "graded pieces of the coordinate ring of {copies} copies of C^{{{m}|{}}}",
        2 * n
    );
    println!("degree | invariants (brute = formula) | twisted (brute = formula)");

    for d in 0..=6 {
        let split = graded_split(sig, d).unwrap();
        let inv_formula = as_usize(&invariant_dimension_sum(sig, d));
        let pseudo_formula = as_usize(&pseudo_dimension_sum(sig, d));
        assert_eq!(split.invariant.len(), inv_formula);
        assert_eq!(split.pseudo.len(), pseudo_formula);
        println!(
            "  {d}    |          {:>2} = {:<2}          |        {} = {}",
            split.invariant.len(),
            inv_formula,
            split.pseudo.len(),
            pseudo_formula
        );
    }
    println!();

    // Each admissible even partition λ contributes a highest-weight vector:
    // the product of leading Gram determinants D_λ.
    for lambda in partitions_of(4, copies) {
        if !is_invariant_weight(&lambda, m, n) {
            continue;
        }
        let dl = d_lambda(sig, &lambda).unwrap();
        assert!(is_highest_weight(&dl) && is_invariant(&dl));
        println!(
            "invariant highest-weight vector for λ = {lambda:?}: {} terms",
            dl.terms().count()
        );
    }

    // Twisted blocks: λ with odd parts ≥ 2n+1 on the first m rows; the
    // vector is Ω·D_μ/(D(m)^n) computed by exact division.
    for lambda in partitions_of(5, copies) {
        if !is_pseudo_weight(&lambda, m, n) {
            continue;
        }
        let mu: Vec<usize> = lambda
            .iter()
            .enumerate()
            .map(|(i, &x)| if i < m { x - 1 } else { x })
            .collect();
        let hwv = pseudo_hwv(sig, &mu).unwrap().unwrap();
        assert!(is_highest_weight(&hwv) && is_invariant(&hwv));
        let mut padded = lambda.clone();
        padded.resize(copies, 0);
        assert_eq!(hwv.multidegree(), Some(padded));
        println!(
            "twisted highest-weight vector for λ = {lambda:?}: {} terms",
            hwv.terms().count()
        );
    }
}
