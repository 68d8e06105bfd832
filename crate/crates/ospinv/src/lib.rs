//! Exact invariant theory of the orthosymplectic supergroup `OSp(V)` on
//! `V = ℂ^{m|2n}`, computed over the Gaussian rationals `ℚ(i)`.
//!
//! The engine works in the supercommutative coordinate ring `S(N)` of `N`
//! copies of `V`: a polynomial algebra in even variables `x^i_t` tensored
//! with a Grassmann algebra in odd variables `θ^μ_t`.  On top of that ring
//! it builds
//!
//! * the elementary quadratic invariants `q_st` and the matrices `Q(k)`
//!   with their determinants `D(k)` and adjugates,
//! * the superalgebra `osp(V)` as differential operators `J_ab`, the
//!   `gl_N`-action `E_st`, Laplacians `∂²_st`, and their brackets,
//! * the super Pfaffian `Ω = ΔF(det Q)^n` — an odd-dimensional analogue of
//!   the determinant — by its localization construction and, for
//!   `osp(2|2)`, by an independent quartic differential operator,
//! * brute-force invariant spaces of graded and tensor components with
//!   exact kernels, against which every closed dimension formula and
//!   decomposition statement is checked.
//!
//! Everything is exact: scalars are arbitrary-precision Gaussian
//! rationals, and every verification is an identity of polynomials, never
//! a numerical approximation.
//!
//! # Entry points
//!
//! The primary interface is the `examples/` directory; each example is a
//! runnable walkthrough of one capability:
//!
//! ```text
//! examples/
//!   super_pfaffian.rs    construct Ω, its square, leading term, degree
//!   identities.rs        the determinant/Laplacian identity family for D(k)
//!   invariance.rs        J_ab(Ω) = 0 and the det-twisted group action
//!   localization.rs      ζ, the Taylor square root F, membership thresholds
//!   osp22_integral.rs    the explicit osp(2|2) operator construction of Ω
//!   decomposition.rs     graded invariants vs. hook-partition dimension sums
//!   tensor_invariants.rs tensor-power invariants, Brauer span, harmonicity
//!   generation.rs        pseudo invariants = Γ(N) · (elementary invariants)
//! ```
//!
//! Run one with `cargo run --release --example super_pfaffian`.
//!
//! A thin CLI (`cargo run --release --bin ospinv -- --help`) exposes the
//! same functionality for CI use: `omega` prints serialized super
//! Pfaffians, `verify` runs named check suites with deterministic JSON
//! reports and CI-friendly exit codes, `decompose` and `tensor` drive the
//! decomposition comparisons.
//!
//! # Quick start
//!
//! ```
//! use ospinv::pfaffian;
//! use ospinv::ring::AlgebraSignature;
//!
//! // One copy of C^{1|2}: S = Q(i)[x] ⊗ Λ(θ¹, θ²).
//! let sig = AlgebraSignature::new(1, 1, 1);
//! let omega = pfaffian::omega(sig);
//! assert_eq!(omega.to_string(), "x^3 - 3·x·θ1·θ2");
//! assert_eq!(omega.total_degree(), Some(3));
//! ```

pub mod decomp;
pub mod diffops;
pub mod error;
pub mod pfaffian;
pub mod report;
pub mod ring;
pub mod scalar;
pub mod suites;

pub use error::Error;
pub use scalar::Scalar;
