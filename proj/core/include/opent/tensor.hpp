#pragma once

#include <set>
#include <vector>

#include "opent/types.hpp"

namespace opent {

/// Kronecker product, left factor slow: (a x b)[(i,k),(j,l)] = a[i,j]*b[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

/// Hilbert-Schmidt inner product tr(a^dag b). Conjugate-linear in the first slot.
Complex hs_inner(const Matrix& a, const Matrix& b);

double hs_norm(const Matrix& a);

/// Conjugate transpose.
Matrix dagger(const Matrix& a);

/// Trace out every factor of `layout` not listed in `keep`.
/// Kept factors retain their relative order.
Matrix partial_trace(const Matrix& rho, const SubsystemLayout& layout,
                     const std::set<int>& keep);

/// Unitary 0/1 matrix moving the content of factor k to slot perm[k].
/// P (A_0 x A_1 x ...) P^dag places A_k at slot perm[k]; composition satisfies
/// permutation_operator(p o q) = permutation_operator(p) * permutation_operator(q).
Matrix permutation_operator(const SubsystemLayout& layout, const std::vector<int>& perm);

/// Apply the factor permutation directly to a state vector (no matrix built).
Vector permute_vector_factors(const Vector& v, const SubsystemLayout& layout,
                              const std::vector<int>& perm);

/// true iff ||a^dag a - I||_HS <= tol.
bool is_unitary(const Matrix& a, double tol = 1e-10);

/// Swap of factors i and j (0-based) embedded in `layout`.
Matrix swap_factors(const SubsystemLayout& layout, int i, int j);

}  // namespace opent
