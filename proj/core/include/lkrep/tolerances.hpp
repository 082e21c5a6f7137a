#pragma once

// Numerical cutoffs shared across modules. Every threshold that decides a
// yes/no answer lives here.

namespace lkrep::tol {

// |q| = |t| = 1 check on input parameters.
inline constexpr double unit_modulus = 1e-12;

// Singular values below this fraction of the largest count as zero
// (invariant-form nullspace, commutant dimension).
inline constexpr double nullspace_relative = 1e-8;

// Best invariant-form candidate is rejected above this residual.
inline constexpr double form_residual_max = 1e-6;

// Minimum eigenvalue of a normalized form that counts as positive.
inline constexpr double definite_min_eig = 1e-10;

// Hermitian symmetry of a stored Gram matrix.
inline constexpr double hermitian = 1e-12;

// Default multiset equality tolerance.
inline constexpr double multiset = 1e-9;

// Distinctness of stabilized traces.
inline constexpr double trace_distinct = 1e-9;

// Scalar-matrix test for Burau images.
inline constexpr double scalar_matrix = 1e-9;

// Unitarity of unitarized matrices.
inline constexpr double unitary = 1e-8;

// Determinant of an SU-normalized matrix.
inline constexpr double su_det = 1e-10;

// An integer combination of joint eigenvalue angles (in turns) this close to
// an integer counts as a relation.
inline constexpr double integer_relation = 1e-7;
// Exhaustive multiset searches are refused above this ambient size.
inline constexpr int max_search_dimension = 21;

}  // namespace lkrep::tol
