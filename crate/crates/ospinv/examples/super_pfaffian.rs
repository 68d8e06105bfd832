//! Construct the super Pfaffian Ω on one copy of ℂ^{m|2n} and inspect it.
//!
//! Ω is the odd-dimensional analogue of a determinant: it has degree
//! m(2n+1), its purely-even part is det(X)^{2n+1}, and its square is the
//! Gram determinant D(m) raised to the odd power 2n+1.
//!
//! Run with `cargo run --release --example super_pfaffian`.

use ospinv::pfaffian::{omega, quadratics::d_poly};
use ospinv::ring::AlgebraSignature;

fn main() {
    for (m, n) in [(1usize, 0usize), (1, 1), (1, 2), (2, 1)] {
        // Ω lives on m copies of V = C^{m|2n} (a square even matrix X).
        let sig = AlgebraSignature::new(m, n, m);
        let om = omega(sig);

        println!("super Pfaffian for V = C^{{{m}|{}}}", 2 * n);
        if m == 1 {
            println!("  Ω = {om}");
        } else {
            println!(
                "  Ω has {} terms; leading term {}",
                om.terms().count(),
                leading(&om)
            );
        }
        println!("  degree {} = m(2n+1)", om.total_degree().unwrap());
        assert_eq!(om.total_degree(), Some(m * (2 * n + 1)));
        assert_eq!(om.multidegree(), Some(vec![2 * n + 1; m]));

        // The defining property: Ω² = D(m)^{2n+1} exactly.
        let gram_power = d_poly(sig, m).unwrap().pow(2 * n + 1);
        assert_eq!(&om * &om, gram_power);
        println!("  Ω² = D({m})^{} checked exactly", 2 * n + 1);
        println!();
    }

    // At (m, n) = (1, 1) the closed form is tiny enough to state.
    let sig = AlgebraSignature::new(1, 1, 1);
    let om = omega(sig);
    assert_eq!(om.to_string(), "x^3 - 3·x·θ1·θ2");
    println!("closed form at (m, n) = (1, 1): {om}");
}

fn leading(f: &ospinv::ring::poly::SuperPolynomial) -> String {
    let (mono, coeff) = f.max_term().unwrap();
    ospinv::ring::poly::SuperPolynomial::from_term(f.signature(), mono.clone(), coeff.clone())
        .to_string()
}
