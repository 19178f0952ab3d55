#include "opent/choi.hpp"

#include <Eigen/Eigenvalues>

namespace opent {

KrausMap::KrausMap(std::vector<Matrix> ops, int dA, int dB, bool tp)
    : kraus(std::move(ops)), dimA(dA), dimB(dB), tracePreserving(tp) {
    if (kraus.empty()) throw std::invalid_argument("KrausMap: no Kraus operators");
    const long n = static_cast<long>(dA) * dB;
    for (const Matrix& a : kraus)
        if (a.rows() != n || a.cols() != n)
            throw std::invalid_argument("KrausMap: Kraus operator dimension mismatch");
    if (tracePreserving) {
        Matrix acc = Matrix::Zero(n, n);
        for (const Matrix& a : kraus) acc += a.adjoint() * a;
        acc.diagonal().array() -= 1.0;
        if (acc.norm() > 1e-9)
            throw std::invalid_argument("KrausMap: completeness relation violated");
    }
}

Vector phi_plus(int d) {
    if (d < 1) throw std::invalid_argument("phi_plus: d must be >= 1");
    Vector v = Vector::Zero(static_cast<long>(d) * d);
    for (int a = 0; a < d; ++a) v(a * d + a) = 1.0;
    return v;
}

Vector vectorize(const Matrix& x, int d) {
    if (x.rows() != d || x.cols() != d)
        throw std::invalid_argument("vectorize: matrix is not d x d");
    // (X (x) 1) sum_a |a>|a> = sum_ia X(i,a)|i>|a>: row-major flattening
    Vector v(static_cast<long>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int a = 0; a < d; ++a) v(i * d + a) = x(i, a);
    return v;
}

Vector bipartite_vectorize(const BipartiteOperator& x) {
    if (x.dimA != x.dimB)
        throw std::invalid_argument("bipartite_vectorize: requires dimA == dimB");
    const int d = x.dimA;
    // v[(i1,i2,i3,i4)] = sum_{j1 j3} X[(i1,i3),(j1,j3)] delta_{j1 i2} delta_{j3 i4}
    //                  = X[(i1,i3),(i2,i4)]
    const long d2 = static_cast<long>(d) * d;
    Vector v(d2 * d2);
    for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = 0; i2 < d; ++i2)
            for (int i3 = 0; i3 < d; ++i3)
                for (int i4 = 0; i4 < d; ++i4)
                    v(((static_cast<long>(i1) * d + i2) * d + i3) * d + i4) =
                        x.matrix(i1 * d + i3, i2 * d + i4);
    return v;
}

Vector apply_op_13(const BipartiteOperator& x, const Vector& v) {
    if (x.dimA != x.dimB)
        throw std::invalid_argument("apply_op_13: requires dimA == dimB");
    const int d = x.dimA;
    const long n = static_cast<long>(d) * d * d * d;
    if (v.size() != n)
        throw std::invalid_argument("apply_op_13: vector dimension mismatch");
    auto at = [d](int a, int b, int c, int e) {
        return ((static_cast<long>(a) * d + b) * d + c) * d + e;
    };
    Vector out = Vector::Zero(n);
    for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = 0; i2 < d; ++i2)
            for (int i3 = 0; i3 < d; ++i3)
                for (int i4 = 0; i4 < d; ++i4) {
                    Complex acc = 0.0;
                    for (int j1 = 0; j1 < d; ++j1)
                        for (int j3 = 0; j3 < d; ++j3)
                            acc += x.matrix(i1 * d + i3, j1 * d + j3) *
                                   v(at(j1, i2, j3, i4));
                    out(at(i1, i2, i3, i4)) = acc;
                }
    return out;
}

ChoiOperator choi_of_map(const KrausMap& t) {
    if (t.dimA != t.dimB)
        throw std::invalid_argument("choi_of_map: requires dimA == dimB");
    const int d = t.dimA;
    const long n = static_cast<long>(d) * d * d * d;
    Matrix m = Matrix::Zero(n, n);
    for (const Matrix& a : t.kraus) {
        const Vector v = bipartite_vectorize(BipartiteOperator(a, d, d));
        m.noalias() += v * v.adjoint();
    }

    ChoiOperator c{std::move(m), d};
    if ((c.matrix - c.matrix.adjoint()).norm() > 1e-10)
        throw std::runtime_error("choi_of_map: result not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(c.matrix, Eigen::EigenvaluesOnly);
    const double minEig = es.eigenvalues().minCoeff();
    if (minEig < -1e-9)
        throw std::runtime_error(
            "choi_of_map: result not positive semidefinite (min eigenvalue " +
            std::to_string(minEig) + ")");
    if (t.tracePreserving &&
        std::abs(c.matrix.trace().real() - static_cast<double>(d) * d) > 1e-8)
        throw std::runtime_error("choi_of_map: trace != d^2 for trace-preserving map");
    return c;
}

double choi_purity(const ChoiOperator& c) {
    const double tr = c.matrix.trace().real();
    if (tr <= 0.0) throw std::invalid_argument("choi_purity: zero trace");
    // tr(M^2) = ||M||_HS^2 for Hermitian M
    return c.matrix.squaredNorm() / (tr * tr);
}

int choi_rank(const ChoiOperator& c, double tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(c.matrix, Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().maxCoeff();
    if (top <= 0.0) return 0;
    int rank = 0;
    for (long k = 0; k < es.eigenvalues().size(); ++k)
        if (es.eigenvalues()(k) > tol * top) ++rank;
    return rank;
}

double entanglement_via_choi(const BipartiteOperator& x) {
    Vector v = bipartite_vectorize(x);
    const double n = v.norm();
    if (n <= 0.0) throw std::invalid_argument("entanglement_via_choi: zero operator");
    v /= n;
    const int d = x.dimA;
    const Matrix rho = partial_trace(Matrix(v * v.adjoint()),
                                     SubsystemLayout{d, d, d, d}, {0, 1});
    return 1.0 - rho.squaredNorm();
}

}  // namespace opent
