#pragma once

#include "opent/tensor.hpp"
#include "opent/types.hpp"

namespace opent {

/// Projectors P+- = (1 +- T_13)/2 (x) 1_24 onto the symmetric/antisymmetric
/// sectors of the 1-3 swap on the four-factor space [d,d,d,d].
struct SymmetrizerPair {
    Matrix pPlus;
    Matrix pMinus;
    int localDim = 0;
};

SymmetrizerPair symmetrizers(int d);

/// Protocol scale factor N_d = (d+1)/d.
double protocol_factor(int d);

/// Swap-trace formula: E(x) = 1 - <x^(x2), T_13 x^(x2) T_13> / ||x||^4.
/// For unitaries ||x||^4 = d^4.
double entanglement_via_swap(const BipartiteOperator& x);

/// Success probability of the three-step protocol: prepare the uniform state on
/// the symmetric 1-3 sector, evolve by U^(x2), project on the antisymmetric
/// sector. E(U) = 2 N_d * probability. Requires unitary input.
double protocol_probability(const BipartiteOperator& u);

/// true iff ||[T_13, x^(x2)]||_HS <= tol * ||x||_HS^2; equivalent to x being
/// a product operator.
bool commutator_product_test(const BipartiteOperator& x, double tol = 1e-10);

/// Multipartite product test on a normalized state over `layout` with N
/// factors: |Phi> is a product state iff (1 - T_{i,i+N})|Phi>^(x2) = 0 for
/// all i = 1..N-1.
bool product_state_test(const Vector& phi, const SubsystemLayout& layout,
                        double tol = 1e-8);

}  // namespace opent
