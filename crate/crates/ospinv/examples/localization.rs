//! The localization construction of the super Pfaffian, step by step.
//!
//! On the chart where the plain determinant Δ = det(X) is inverted,
//! det Q = Δ²(1 + ζ) for a nilpotent correction ζ, so (det Q)^{1/2} is the
//! finite Taylor series Δ·Σ_k C(1/2, k) ζ^k.  Multiplying by (det Q)^n
//! clears the denominator exactly — the result Ω = ΔF(det Q)^n is a
//! polynomial, even though every intermediate lives in the localization.
//!
//! Run with `cargo run --release --example localization`.

use ospinv::pfaffian::localization::{
    delta_f_detq_pow, membership, try_omega, xi_of_localized, zeta, zeta_powers,
};
use ospinv::ring::AlgebraSignature;

fn main() {
    let (m, n) = (1usize, 2usize);
    let sig = AlgebraSignature::new(m, n, m);
    println!("localization chart for V = C^{{{m}|{}}}", 2 * n);

    // ζ is nilpotent: it is soul-valued (every term carries odd factors).
    let z = zeta(sig).unwrap();
    println!("ζ = {z}");
    let (index, powers) = zeta_powers(sig).unwrap();
    println!(
        "nilpotency: ζ^{index} ≠ 0 but ζ^{} = 0 (bound: index ≤ nm = {})",
        index + 1,
        n * m
    );
    assert!(index <= n * m);
    for (k, p) in powers.iter().enumerate() {
        println!("  ζ^{k} has {} terms", p.terms().count());
    }
    println!();

    // ΔF(det Q)^j is a genuine polynomial exactly when j ≥ n.
    for j in 0..=n + 1 {
        let member = membership(sig, j).unwrap();
        assert_eq!(member, j >= n);
        // Restricting to the ray x = ξ turns the element into a Laurent
        // series in ξ; a pole survives exactly below the threshold.
        let rays = xi_of_localized(&delta_f_detq_pow(sig, j).unwrap()).unwrap();
        let lowest = rays.keys().next().copied().unwrap_or(0);
        println!(
            "  ΔF(det Q)^{j}: {} (lowest ray exponent {lowest})",
            if member {
                "polynomial    "
            } else {
                "pole survives "
            },
        );
    }
    println!();

    let om = try_omega(sig).unwrap();
    println!("Ω = ΔF(det Q)^{n} = {om}");
    assert_eq!(om.total_degree(), Some(m * (2 * n + 1)));
}
