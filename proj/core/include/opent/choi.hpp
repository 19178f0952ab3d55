#pragma once

#include <vector>

#include "opent/tensor.hpp"
#include "opent/types.hpp"

namespace opent {

/// T(rho) = sum_i A_i rho A_i^dag with A_i square on dimA*dimB.
struct KrausMap {
    std::vector<Matrix> kraus;
    int dimA = 0;
    int dimB = 0;
    bool tracePreserving = false;

    KrausMap() = default;
    KrausMap(std::vector<Matrix> ops, int dA, int dB, bool tp);
};

struct ChoiOperator {
    Matrix matrix;  // d^4 x d^4
    int localDim = 0;
};

/// Unnormalized maximally entangled vector sum_a |a>|a>, norm sqrt(d).
Vector phi_plus(int d);

/// X |-> (X (x) 1)|Phi+>; an isometry from HS space to the doubled space.
Vector vectorize(const Matrix& x, int d);

/// Bipartite extension: (X_13 (x) 1_24)|Phi+>^(x2) on the four-factor space
/// with layout (sysA, ancA, sysB, ancB); X acts on factors 1 and 3.
/// Requires dimA == dimB.
Vector bipartite_vectorize(const BipartiteOperator& x);

/// (X_13 (x) 1_24) v on the four-factor layout [d,d,d,d].
Vector apply_op_13(const BipartiteOperator& x, const Vector& v);

/// Choi operator sum_i |Psi(A_i)><Psi(A_i)| of a Kraus map.
ChoiOperator choi_of_map(const KrausMap& t);

/// tr(M^2)/tr(M)^2; equals 1 iff the Choi operator has rank 1.
double choi_purity(const ChoiOperator& c);

/// Numerical rank of the Choi matrix (eigenvalues > tol * largest).
int choi_rank(const ChoiOperator& c, double tol = 1e-10);

/// E(x) evaluated through the Choi state: normalize the vectorized operator,
/// reduce over the (sysB, ancB) factors, return 1 - tr rho^2.
double entanglement_via_choi(const BipartiteOperator& x);

}  // namespace opent
