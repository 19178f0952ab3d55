#include "opent/schmidt.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace opent {

Matrix reshuffle(const BipartiteOperator& x) {
    const int dA = x.dimA, dB = x.dimB;
    Matrix r(static_cast<long>(dA) * dA, static_cast<long>(dB) * dB);
    for (int a = 0; a < dA; ++a)
        for (int c = 0; c < dA; ++c)
            for (int b = 0; b < dB; ++b)
                for (int d = 0; d < dB; ++d)
                    r(a * dA + c, b * dB + d) = x.matrix(a * dB + b, c * dB + d);
    return r;
}

OperatorSchmidtDecomposition operator_schmidt(const BipartiteOperator& x, double tol) {
    const Matrix r = reshuffle(x);
    Eigen::BDCSVD<Matrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success)
        throw std::runtime_error("operator_schmidt: SVD did not converge");

    OperatorSchmidtDecomposition out;
    out.sourceNorm = x.matrix.norm();
    const auto& sv = svd.singularValues();
    const int dA = x.dimA, dB = x.dimB;
    for (long k = 0; k < sv.size(); ++k) {
        if (sv(k) < tol) break;  // sv is descending
        out.coefficients.push_back(sv(k));
        Matrix e(dA, dA), f(dB, dB);
        for (int a = 0; a < dA; ++a)
            for (int c = 0; c < dA; ++c) e(a, c) = svd.matrixU()(a * dA + c, k);
        // R = U S V^dag, so the right family is the conjugate of V's columns
        for (int b = 0; b < dB; ++b)
            for (int d = 0; d < dB; ++d) f(b, d) = std::conj(svd.matrixV()(b * dB + d, k));
        out.leftOps.push_back(std::move(e));
        out.rightOps.push_back(std::move(f));
    }
    return out;
}

namespace {

// Schmidt probabilities p_k = lambda_k^2/||x||^2 via the eigenvalues of R R^dag;
// avoids a full SVD on the hot path.
std::vector<double> schmidt_probabilities(const BipartiteOperator& x) {
    const Matrix r = reshuffle(x);
    const double n2 = r.squaredNorm();
    if (n2 <= 0.0)
        throw std::invalid_argument("entanglement: zero operator");
    const Matrix g = (r.rows() <= r.cols()) ? Matrix(r * r.adjoint())
                                            : Matrix(r.adjoint() * r);
    Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
    std::vector<double> p;
    p.reserve(es.eigenvalues().size());
    for (long k = es.eigenvalues().size() - 1; k >= 0; --k) {
        const double v = es.eigenvalues()(k) / n2;
        p.push_back(v > 0.0 ? v : 0.0);
    }
    return p;  // descending
}

}  // namespace

double linear_entanglement(const BipartiteOperator& x) {
    const Matrix r = reshuffle(x);
    const double n2 = r.squaredNorm();
    if (n2 <= 0.0)
        throw std::invalid_argument("linear_entanglement: zero operator");
    const Matrix g = (r.rows() <= r.cols()) ? Matrix(r * r.adjoint())
                                            : Matrix(r.adjoint() * r);
    // sum p_k^2 = tr(G^2)/tr(G)^2 = ||G||_HS^2 / ||R||^4
    return 1.0 - g.squaredNorm() / (n2 * n2);
}

double von_neumann_entanglement(const BipartiteOperator& x) {
    double s = 0.0;
    for (double p : schmidt_probabilities(x))
        if (p > 0.0) s -= p * std::log(p);
    return s;
}

EntanglementReport entanglement_report(const BipartiteOperator& x) {
    EntanglementReport rep;
    auto p = schmidt_probabilities(x);
    const double pmax = p.empty() ? 0.0 : p.front();
    double sum2 = 0.0;
    for (double v : p) {
        sum2 += v * v;
        if (v > 0.0) rep.vonNeumannEntropy -= v * std::log(v);
        if (pmax > 0.0 && std::sqrt(v) > 1e-10 * std::sqrt(pmax)) ++rep.schmidtRank;
    }
    rep.linearEntropy = 1.0 - sum2;
    rep.schmidtProbabilities = std::move(p);
    return rep;
}

int schmidt_rank(const BipartiteOperator& x, double tol) {
    const Matrix r = reshuffle(x);
    Eigen::BDCSVD<Matrix> svd(r);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = tol * sv(0);
    int rank = 0;
    for (long k = 0; k < sv.size(); ++k)
        if (sv(k) > cutoff) ++rank;
    return rank;
}

bool is_product_operator(const BipartiteOperator& x, double tol) {
    if (x.matrix.norm() <= 0.0)
        throw std::invalid_argument("is_product_operator: zero operator");
    return schmidt_rank(x, tol) == 1;
}

BipartiteOperator controlled_unitary(const std::vector<Matrix>& projectors,
                                     const std::vector<Matrix>& unitaries) {
    if (projectors.empty() || projectors.size() != unitaries.size())
        throw std::invalid_argument("controlled_unitary: projector/unitary count mismatch");
    const long dA = projectors[0].rows();
    const long dB = unitaries[0].rows();
    constexpr double tol = 1e-8;

    Matrix sum = Matrix::Zero(dA, dA);
    for (size_t a = 0; a < projectors.size(); ++a) {
        const Matrix& p = projectors[a];
        if (p.rows() != dA || p.cols() != dA)
            throw std::invalid_argument("controlled_unitary: projector shape mismatch");
        if ((p * p - p).norm() > tol)
            throw std::invalid_argument("controlled_unitary: projector not idempotent");
        if ((p - p.adjoint()).norm() > tol)
            throw std::invalid_argument("controlled_unitary: projector not Hermitian");
        for (size_t b = 0; b < a; ++b)
            if ((projectors[a] * projectors[b]).norm() > tol)
                throw std::invalid_argument("controlled_unitary: projectors not orthogonal");
        sum += p;
    }
    if ((sum - Matrix::Identity(dA, dA)).norm() > tol)
        throw std::invalid_argument("controlled_unitary: projectors do not sum to identity");

    for (size_t a = 0; a < unitaries.size(); ++a) {
        if (unitaries[a].rows() != dB || unitaries[a].cols() != dB)
            throw std::invalid_argument("controlled_unitary: unitary shape mismatch");
        if (!is_unitary(unitaries[a], tol))
            throw std::invalid_argument("controlled_unitary: target operator not unitary");
        for (size_t b = 0; b < a; ++b)
            if (std::abs(hs_inner(unitaries[a], unitaries[b])) > tol * dB)
                throw std::invalid_argument("controlled_unitary: unitaries not HS-orthogonal");
    }

    Matrix u = Matrix::Zero(dA * dB, dA * dB);
    for (size_t a = 0; a < projectors.size(); ++a)
        u += kron(projectors[a], unitaries[a]);
    return BipartiteOperator(std::move(u), static_cast<int>(dA), static_cast<int>(dB));
}

double controlled_unitary_closed_form(const std::vector<Matrix>& projectors, int d) {
    double acc = 0.0;
    for (const Matrix& p : projectors) acc += std::norm(p.trace());
    return 1.0 - acc / (static_cast<double>(d) * d);
}

BipartiteOperator exp_zz(double theta) {
    const Complex i(0.0, 1.0);
    Matrix u = Matrix::Zero(4, 4);
    // sz (x) sz = diag(1,-1,-1,1)
    u(0, 0) = std::exp(i * theta);
    u(1, 1) = std::exp(-i * theta);
    u(2, 2) = std::exp(-i * theta);
    u(3, 3) = std::exp(i * theta);
    return BipartiteOperator(std::move(u), 2, 2);
}

double exp_zz_closed_form(double theta) {
    const double s = std::sin(2.0 * theta);
    return 0.5 * s * s;
}

}  // namespace opent
