#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <opent/random.hpp>
#include <opent/schmidt.hpp>
#include <opent/tensor.hpp>

using namespace opent;

TEST_CASE("seed determinism and substreams") {
    RandomSource a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.uniform() == b.uniform());
    }
    bool differs = false;
    RandomSource a2(42);
    for (int i = 0; i < 100; ++i)
        if (a2.uniform() != c.uniform()) differs = true;
    CHECK(differs);

    RandomSource root(7);
    RandomSource s1 = root.substream(0);
    RandomSource s2 = root.substream(0);
    RandomSource s3 = root.substream(1);
    CHECK(s1.uniform() == s2.uniform());
    CHECK(s1.seed() != s3.seed());
}

TEST_CASE("haar unitary: unitarity and trace moments") {
    RandomSource rng(3);
    CHECK(std::abs(std::abs(haar_unitary(1, rng)(0, 0)) - 1.0) < 1e-12);

    for (int d : {2, 3, 4})
        for (int i = 0; i < 100; ++i)
            CHECK(is_unitary(haar_unitary(d, rng), 1e-10));

    // E[tr U] ~ 0 and E[|tr U|^2] ~ 1 for the Haar measure
    for (int d : {2, 3, 4}) {
        RunningStats re, im, m2;
        RandomSource local(1000 + d);
        for (int i = 0; i < 10000; ++i) {
            const Complex t = haar_unitary(d, local).trace();
            re.add(t.real());
            im.add(t.imag());
            m2.add(std::norm(t));
        }
        CHECK(std::abs(re.mean()) < 3.0 * re.stderror());
        CHECK(std::abs(im.mean()) < 3.0 * im.stderror());
        CHECK(std::abs(m2.mean() - 1.0) < 3.0 * m2.stderror());
    }
}

TEST_CASE("haar state: norm and uniform marginal") {
    RandomSource rng(5);
    RunningStats p0;
    for (int i = 0; i < 10000; ++i) {
        const Vector psi = haar_state(4, rng);
        CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
        p0.add(std::norm(psi(0)));
    }
    CHECK(std::abs(p0.mean() - 0.25) < 3.0 * p0.stderror());
}

TEST_CASE("random HS direction") {
    RandomSource rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto x = random_hs_direction(2, 2, rng);
        CHECK(std::abs(x.matrix.norm() - 1.0) < 1e-12);
        const double e = linear_entanglement(x);
        CHECK(e >= 0.0);
        CHECK(e <= 0.75 + 1e-12);
    }
}

TEST_CASE("Haar average of E reproduces the analytic value") {
    for (int d : {2, 3}) {
        const auto est = mc_average_operator_entanglement(d, 5000, RandomSource(11));
        const double analytic = (d * d - 1.0) / (d * d + 1.0);
        CHECK(std::abs(est.mean - analytic) < 3.0 * est.stderror);
    }
    CHECK_THROWS_AS(mc_average_operator_entanglement(2, 1, RandomSource(1)),
                    std::invalid_argument);
}

TEST_CASE("generic operators are less entangled on average") {
    const auto unitary = mc_average_operator_entanglement(2, 5000, RandomSource(13));
    const auto generic = mc_average_generic_entanglement(2, 5000, RandomSource(14));
    const double band = 3.0 * std::hypot(unitary.stderror, generic.stderror);
    CHECK(unitary.mean - generic.mean > band);
}

TEST_CASE("estimates are reproducible and seed-consistent") {
    const auto a = mc_average_operator_entanglement(2, 2, RandomSource(21));
    const auto b = mc_average_operator_entanglement(2, 2, RandomSource(21));
    CHECK(a.mean == b.mean);
    CHECK(a.stderror == b.stderror);
    CHECK(a.seed == 21);

    // two distinct seeds agree within 6 stderr
    const auto c = mc_average_operator_entanglement(2, 5000, RandomSource(100));
    const auto d = mc_average_operator_entanglement(2, 5000, RandomSource(200));
    CHECK(std::abs(c.mean - d.mean) < 6.0 * std::hypot(c.stderror, d.stderror));
}
