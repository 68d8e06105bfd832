//! The supercommutative coordinate ring `S(N)` and its service maps.
//!
//! `S(N)` is the polynomial algebra over ℚ(i) on even generators `x^i_t`
//! (`1 ≤ i ≤ m`, `1 ≤ t ≤ N`) tensored with the Grassmann algebra on odd
//! generators `θ^μ_t` (`1 ≤ μ ≤ 2n`).  Generators are indexed by a row
//! `a ∈ {1, …, m+2n}` of the supervector space `V = ℂ^{m|2n}` (row `a` is
//! even iff `a ≤ m`) and a copy index `t`.
//!
//! Submodules:
//! * [`signature`] — the `(m, n, N)` shape descriptor and index helpers;
//! * [`monomial`] — canonical monomials and the signed product;
//! * [`poly`] — sparse polynomials and ring arithmetic;
//! * [`subst`] — superalgebra homomorphisms: substitution, the even group
//!   action, the specializations that kill or rearrange generators;
//! * [`metric`] — the sparse rows of the bilinear form on `V`;
//! * [`division`] — exact division, used to decide membership in `S`;
//! * [`localized`] — the localization `S[Δ⁻¹]` at the even determinant;
//! * [`serial`] — the canonical term-record serialization.

pub mod division;
pub mod localized;
pub mod metric;
pub mod monomial;
pub mod poly;
pub mod serial;
pub mod signature;
pub mod subst;

pub use localized::LocalizedElement;
pub use monomial::Monomial;
pub use poly::SuperPolynomial;
pub use signature::AlgebraSignature;
pub use subst::{GroupElement, Substitution};
