#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "opent/types.hpp"

namespace opent {

struct MonteCarloEstimate {
    double mean = 0.0;
    double stderror = 0.0;  // sample stddev / sqrt(samples)
    long samples = 0;
    std::uint64_t seed = 0;
};

/// Seeded generator. Substreams are derived from (seed, index) so that
/// per-sample draws are independent of evaluation order; the Gaussian uses an
/// explicit Box-Muller so the stream is identical across standard libraries.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    static std::string algorithm() { return "splitmix64/mt19937_64/box-muller"; }

    RandomSource substream(std::uint64_t index) const;

    double uniform();   // [0, 1)
    double gaussian();  // standard normal
    Complex complex_gaussian();  // (g + i g)/sqrt(2), unit variance

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Haar-random unitary via QR of a complex Ginibre matrix with the
/// R-diagonal phase correction.
Matrix haar_unitary(int dim, RandomSource& rng);

/// Haar-random unit vector.
Vector haar_state(int dim, RandomSource& rng);

/// Uniform direction on the HS unit sphere of dimA*dimB operators.
BipartiteOperator random_hs_direction(int dimA, int dimB, RandomSource& rng);

/// Mean operator entanglement over Haar unitaries on the d x d bipartite space.
MonteCarloEstimate mc_average_operator_entanglement(int d, long samples,
                                                    const RandomSource& rng);

/// Mean operator entanglement over uniform HS-sphere operators.
MonteCarloEstimate mc_average_generic_entanglement(int d, long samples,
                                                   const RandomSource& rng);

/// Running mean/stderr accumulator (Welford).
class RunningStats {
  public:
    void add(double x);
    long count() const { return n_; }
    double mean() const { return mean_; }
    double stderror() const;

  private:
    long n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

}  // namespace opent
