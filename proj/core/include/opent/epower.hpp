#pragma once

#include "opent/random.hpp"
#include "opent/types.hpp"

namespace opent {

/// e_p = N_d^-2 [E(U) + E(US) - E(S)] with N_d = (d+1)/d and the analytic
/// anchor E(S) = 1 - 1/d^2; bound = (d-1)/(d+1).
struct EntanglingPowerReport {
    double ep = 0.0;
    double eU = 0.0;
    double eUS = 0.0;
    double eS = 0.0;
    double bound = 0.0;
    bool optimal = false;
    int localDim = 0;
};

EntanglingPowerReport entangling_power(const BipartiteOperator& u);

/// true iff |E(u) - E(S)| <= tol and |E(uS) - E(S)| <= tol.
bool is_optimal(const BipartiteOperator& u, double tol = 1e-8);

/// Linear entropy 1 - tr rho_1^2 of a normalized pure state on d x d.
double state_linear_entropy(const Vector& psi, int d);

/// Monte-Carlo definition of e_p: mean output entanglement of u applied to
/// Haar (x) Haar product states. Seed-deterministic via per-sample substreams.
MonteCarloEstimate mc_entangling_power(const BipartiteOperator& u, long samples,
                                       std::uint64_t seed);

}  // namespace opent
