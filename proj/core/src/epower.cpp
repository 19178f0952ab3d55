#include "opent/epower.hpp"

#include <cmath>

#include "opent/schmidt.hpp"
#include "opent/tensor.hpp"

namespace opent {

namespace {

Matrix swap_matrix(int d) {
    return swap_factors(SubsystemLayout{d, d}, 0, 1);
}

}  // namespace

EntanglingPowerReport entangling_power(const BipartiteOperator& u) {
    if (u.dimA != u.dimB)
        throw std::invalid_argument("entangling_power: requires dimA == dimB");
    if (!is_unitary(u.matrix, 1e-8))
        throw std::invalid_argument("entangling_power: input is not unitary");
    const int d = u.dimA;

    EntanglingPowerReport rep;
    rep.localDim = d;
    rep.eU = linear_entanglement(u);
    rep.eUS = linear_entanglement(
        BipartiteOperator(u.matrix * swap_matrix(d), d, d));
    rep.eS = 1.0 - 1.0 / (static_cast<double>(d) * d);
    const double nd = (d + 1.0) / d;
    rep.ep = (rep.eU + rep.eUS - rep.eS) / (nd * nd);
    rep.bound = (d - 1.0) / (d + 1.0);
    rep.optimal = std::abs(rep.eU - rep.eS) <= 1e-8 &&
                  std::abs(rep.eUS - rep.eS) <= 1e-8;
    return rep;
}

bool is_optimal(const BipartiteOperator& u, double tol) {
    if (!is_unitary(u.matrix, 1e-8))
        throw std::invalid_argument("is_optimal: input is not unitary");
    const int d = u.dimA;
    const double eS = 1.0 - 1.0 / (static_cast<double>(d) * d);
    const double eU = linear_entanglement(u);
    const double eUS = linear_entanglement(
        BipartiteOperator(u.matrix * swap_matrix(d), d, d));
    return std::abs(eU - eS) <= tol && std::abs(eUS - eS) <= tol;
}

double state_linear_entropy(const Vector& psi, int d) {
    if (psi.size() != static_cast<long>(d) * d)
        throw std::invalid_argument("state_linear_entropy: dimension != d^2");
    if (std::abs(psi.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("state_linear_entropy: state not normalized");
    // rho_1(i,j) = sum_k psi[(i,k)] conj(psi[(j,k)])
    Eigen::Map<const Matrix> m(psi.data(), d, d);  // column-major: m(k,i) = psi[i*d+k]
    const Matrix rho = m.transpose() * m.conjugate();
    return 1.0 - rho.squaredNorm();
}

MonteCarloEstimate mc_entangling_power(const BipartiteOperator& u, long samples,
                                       std::uint64_t seed) {
    if (u.dimA != u.dimB)
        throw std::invalid_argument("mc_entangling_power: requires dimA == dimB");
    if (!is_unitary(u.matrix, 1e-8))
        throw std::invalid_argument("mc_entangling_power: input is not unitary");
    if (samples < 2)
        throw std::invalid_argument("mc_entangling_power: samples < 2");
    const int d = u.dimA;
    const RandomSource root(seed);

    RunningStats stats;
    for (long i = 0; i < samples; ++i) {
        RandomSource sub = root.substream(i);
        const Vector a = haar_state(d, sub);
        const Vector b = haar_state(d, sub);
        Vector prod(static_cast<long>(d) * d);
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) prod(p * d + q) = a(p) * b(q);
        const Vector out = u.matrix * prod;
        stats.add(state_linear_entropy(out, d));
    }
    return MonteCarloEstimate{stats.mean(), stats.stderror(), samples, seed};
}

}  // namespace opent
