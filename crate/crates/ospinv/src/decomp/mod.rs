//! Finite-dimensional linear algebra over the polynomial superalgebra:
//! graded monomial bases, exact matrices and kernels, dimension
//! formulas, tensor-space invariants, and the module generated by the
//! fundamental invariant.

pub mod basis;
pub mod gamma;
pub mod invariants;
pub mod linalg;
pub mod partitions;
pub mod tensor;

pub use basis::{monomials_of_degree, monomials_of_multidegree, monomials_up_to, BASIS_CAP};
pub use gamma::{
    first_pseudo_hwv, gamma0_basis, gamma_basis, generation_check, is_harmonic, pseudo_hwv,
};
pub use invariants::{graded_split, j_generators, slice_split, tensor_split, InvariantSplit};
pub use linalg::{ExactMatrix, SpanTracker, Vectorizer};
pub use partitions::{
    all_parts_even, as_usize, dim_gamma, dim_gl, f_standard, fits_hook, invariant_dimension_sum,
    is_invariant_weight, is_partition, is_pseudo_weight, partitions_of, pseudo_dimension_sum,
    tensor_invariant_dimension, tensor_pseudo_dimension, transpose,
};
pub use tensor::{
    contraction_constant, matched_product, pairing_span, permute_copies, slice_rank, slice_size,
    twisted_span,
};
