#pragma once

#include <vector>

#include "opent/tensor.hpp"
#include "opent/types.hpp"

namespace opent {

/// U = sum_k coefficients[k] * leftOps[k] (tensor) rightOps[k],
/// with both operator families HS-orthonormal and coefficients descending.
struct OperatorSchmidtDecomposition {
    std::vector<double> coefficients;
    std::vector<Matrix> leftOps;
    std::vector<Matrix> rightOps;
    double sourceNorm = 0.0;
};

struct EntanglementReport {
    double linearEntropy = 0.0;
    double vonNeumannEntropy = 0.0;
    int schmidtRank = 0;
    std::vector<double> schmidtProbabilities;
};

/// Realignment: R[(a,c),(b,d)] = x[(a,b),(c,d)], a,c over dimA and b,d over dimB.
/// R is dimA^2 x dimB^2 and has the same HS norm as x; its singular values are
/// the operator Schmidt coefficients.
Matrix reshuffle(const BipartiteOperator& x);

/// SVD of the realignment; singular values below `tol` are dropped.
OperatorSchmidtDecomposition operator_schmidt(const BipartiteOperator& x,
                                              double tol = 1e-12);

/// E(x) = 1 - sum_k p_k^2 with p_k = lambda_k^2 / ||x||^2.
/// Accepts non-unitary operators; normalization is internal.
double linear_entanglement(const BipartiteOperator& x);

/// -sum_k p_k ln p_k over the Schmidt probabilities (nats).
double von_neumann_entanglement(const BipartiteOperator& x);

EntanglementReport entanglement_report(const BipartiteOperator& x);

/// Count of singular values > tol * (largest singular value).
int schmidt_rank(const BipartiteOperator& x, double tol = 1e-10);

bool is_product_operator(const BipartiteOperator& x, double tol = 1e-10);

/// Controlled unitary sum_a P_a (tensor) U_a. Projectors must be orthogonal,
/// idempotent and sum to the identity; unitaries pairwise HS-orthogonal.
BipartiteOperator controlled_unitary(const std::vector<Matrix>& projectors,
                                     const std::vector<Matrix>& unitaries);

/// Closed form for the entanglement of a controlled unitary on a d x d system:
/// 1 - (1/d^2) sum_a |tr P_a|^2.
double controlled_unitary_closed_form(const std::vector<Matrix>& projectors, int d);

/// exp(i theta sigma_z (tensor) sigma_z) = cos(theta) I + i sin(theta) sz (x) sz.
BipartiteOperator exp_zz(double theta);

/// sin(2 theta)^2 / 2, the entanglement of exp_zz(theta).
double exp_zz_closed_form(double theta);

}  // namespace opent
