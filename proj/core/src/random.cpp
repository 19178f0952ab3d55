#include "opent/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "opent/schmidt.hpp"

namespace opent {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed)
    : seed_(seed), engine_(splitmix64(seed)) {}

RandomSource RandomSource::substream(std::uint64_t index) const {
    return RandomSource(splitmix64(seed_ ^ splitmix64(index + 1)));
}

double RandomSource::uniform() {
    return (engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::gaussian() {
    // Box-Muller; one variate per pair of uniforms for a fully specified stream
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

Complex RandomSource::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) / std::sqrt(2.0);
}

Matrix haar_unitary(int dim, RandomSource& rng) {
    if (dim < 1) throw std::invalid_argument("haar_unitary: dim must be >= 1");
    Matrix z(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) z(i, j) = rng.complex_gaussian();
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // divide out the R-diagonal phases; without this Q is not Haar
    for (int j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= (a > 0.0) ? d / a : Complex(1.0);
    }
    return q;
}

Vector haar_state(int dim, RandomSource& rng) {
    if (dim < 1) throw std::invalid_argument("haar_state: dim must be >= 1");
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.complex_gaussian();
    const double n = v.norm();
    if (n <= 0.0) return haar_state(dim, rng);
    return v / n;
}

BipartiteOperator random_hs_direction(int dimA, int dimB, RandomSource& rng) {
    const long n = static_cast<long>(dimA) * dimB;
    Matrix x(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) x(i, j) = rng.complex_gaussian();
    x /= x.norm();
    return BipartiteOperator(std::move(x), dimA, dimB);
}

void RunningStats::add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / n_;
    m2_ += delta * (x - mean_);
}

double RunningStats::stderror() const {
    if (n_ < 2) return 0.0;
    return std::sqrt(m2_ / (n_ - 1)) / std::sqrt(static_cast<double>(n_));
}

MonteCarloEstimate mc_average_operator_entanglement(int d, long samples,
                                                    const RandomSource& rng) {
    if (samples < 2)
        throw std::invalid_argument("mc_average_operator_entanglement: samples < 2");
    RunningStats stats;
    for (long i = 0; i < samples; ++i) {
        RandomSource sub = rng.substream(i);
        const Matrix u = haar_unitary(d * d, sub);
        stats.add(linear_entanglement(BipartiteOperator(u, d, d)));
    }
    return MonteCarloEstimate{stats.mean(), stats.stderror(), samples, rng.seed()};
}

MonteCarloEstimate mc_average_generic_entanglement(int d, long samples,
                                                   const RandomSource& rng) {
    if (samples < 2)
        throw std::invalid_argument("mc_average_generic_entanglement: samples < 2");
    RunningStats stats;
    for (long i = 0; i < samples; ++i) {
        RandomSource sub = rng.substream(i);
        stats.add(linear_entanglement(random_hs_direction(d, d, sub)));
    }
    return MonteCarloEstimate{stats.mean(), stats.stderror(), samples, rng.seed()};
}

}  // namespace opent
