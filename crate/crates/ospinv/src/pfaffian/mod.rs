//! The super Pfaffian `Ω` and the determinant calculus around it.
//!
//! * [`matrix`] — determinants and adjugates of matrices with even
//!   polynomial entries, by two independent algorithms;
//! * [`quadratics`] — the invariant pairings `q_{t s}`, the matrices
//!   `Q(k)`, their determinants `D(k)`, and partition-indexed products;
//! * [`identities`] — the differential-identity family those
//!   determinants satisfy, with a memoizing sweep context;
//! * [`localization`] — the square-root construction of `Ω` and the
//!   membership threshold for clearing the localized denominator;
//! * [`osp22`] — the independent quartic-operator construction for
//!   `osp(2|2)` on two copies.

pub mod identities;
pub mod localization;
pub mod matrix;
pub mod osp22;
pub mod quadratics;

pub use identities::IdentityContext;
pub use localization::{
    binomial_scalar, delta_f, delta_f_detq_pow, membership, omega, try_omega, xi_of_localized,
    zeta, zeta_powers,
};
pub use matrix::PolyMatrix;
pub use quadratics::{
    coeff_c, coeff_c_lambda, d_lambda, d_poly, ell_from_even_partition, p_elem, phi_elem, q_elem,
    q_matrix,
};
