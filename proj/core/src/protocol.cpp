#include "opent/protocol.hpp"

#include <cmath>

namespace opent {

SymmetrizerPair symmetrizers(int d) {
    if (d < 2) throw std::invalid_argument("symmetrizers: d must be >= 2");
    const SubsystemLayout layout{d, d, d, d};
    const Matrix t13 = swap_factors(layout, 0, 2);
    const long n = layout.totalDim();
    const Matrix id = Matrix::Identity(n, n);
    return SymmetrizerPair{0.5 * (id + t13), 0.5 * (id - t13), d};
}

double protocol_factor(int d) { return (d + 1.0) / d; }

double entanglement_via_swap(const BipartiteOperator& x) {
    if (x.dimA != x.dimB)
        throw std::invalid_argument("entanglement_via_swap: requires dimA == dimB");
    const int d = x.dimA;
    const double n2 = x.matrix.squaredNorm();
    if (n2 <= 0.0) throw std::invalid_argument("entanglement_via_swap: zero operator");
    const Matrix t13 = swap_factors(SubsystemLayout{d, d, d, d}, 0, 2);
    const Matrix m = kron(x.matrix, x.matrix);
    const Complex overlap = hs_inner(m, Matrix(t13 * m * t13));
    return 1.0 - overlap.real() / (n2 * n2);
}

double protocol_probability(const BipartiteOperator& u) {
    if (u.dimA != u.dimB)
        throw std::invalid_argument("protocol_probability: requires dimA == dimB");
    if (!is_unitary(u.matrix, 1e-8))
        throw std::invalid_argument("protocol_probability: input is not unitary");
    const int d = u.dimA;
    const auto pair = symmetrizers(d);

    // rho+ = 2 P+ / [d^3 (d+1)], the uniform state on the symmetric sector
    const double norm = 2.0 / (std::pow(static_cast<double>(d), 3) * (d + 1.0));
    const Matrix rhoPlus = norm * pair.pPlus;
    if (std::abs(rhoPlus.trace().real() - 1.0) > 1e-10)
        throw std::runtime_error("protocol_probability: rho+ normalization failed");

    const Matrix m = kron(u.matrix, u.matrix);
    const Matrix evolved = m * rhoPlus * m.adjoint();
    return hs_inner(evolved, pair.pMinus).real();
}

bool commutator_product_test(const BipartiteOperator& x, double tol) {
    const double n2 = x.matrix.squaredNorm();
    if (n2 <= 0.0) throw std::invalid_argument("commutator_product_test: zero operator");
    const int d = x.dimA;
    if (x.dimA != x.dimB)
        throw std::invalid_argument("commutator_product_test: requires dimA == dimB");
    const Matrix t13 = swap_factors(SubsystemLayout{d, d, d, d}, 0, 2);
    const Matrix m = kron(x.matrix, x.matrix);
    return (t13 * m - m * t13).norm() <= tol * n2;
}

bool product_state_test(const Vector& phi, const SubsystemLayout& layout,
                        double tol) {
    const long n = layout.totalDim();
    if (phi.size() != n)
        throw std::invalid_argument("product_state_test: dimension mismatch");
    if (std::abs(phi.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("product_state_test: state not normalized");

    const int nf = layout.factors();
    std::vector<int> dims2(2 * nf);
    for (int k = 0; k < nf; ++k) dims2[k] = dims2[k + nf] = layout.dims[k];
    const SubsystemLayout doubled(dims2);

    // |Phi>^(x2) without forming any 2N-factor operator
    Vector phi2(n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) phi2(i * n + j) = phi(i) * phi(j);

    for (int i = 0; i + 1 < nf; ++i) {
        std::vector<int> perm(2 * nf);
        for (int k = 0; k < 2 * nf; ++k) perm[k] = k;
        std::swap(perm[i], perm[i + nf]);
        const Vector swapped = permute_vector_factors(phi2, doubled, perm);
        if ((phi2 - swapped).norm() > tol) return false;
    }
    return true;
}

}  // namespace opent
