#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include <opent/gates.hpp>
#include <opent/protocol.hpp>
#include <opent/random.hpp>
#include <opent/schmidt.hpp>
#include <opent/tensor.hpp>

using namespace opent;

namespace {

Matrix random_matrix(int n, RandomSource& rng) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.complex_gaussian();
    return m;
}

}  // namespace

TEST_CASE("symmetrizer pair invariants") {
    for (int d : {2, 3}) {
        const auto pair = symmetrizers(d);
        const long n = static_cast<long>(d) * d * d * d;
        CHECK((pair.pPlus + pair.pMinus - Matrix::Identity(n, n)).norm() < 1e-12);
        CHECK((pair.pPlus * pair.pPlus - pair.pPlus).norm() < 1e-10);
        CHECK((pair.pMinus * pair.pMinus - pair.pMinus).norm() < 1e-10);
        CHECK((pair.pPlus - pair.pPlus.adjoint()).norm() < 1e-10);
        CHECK((pair.pPlus * pair.pMinus).norm() < 1e-10);
        // tr P+- = (d^4 +- d^3)/2
        const double d3 = std::pow(double(d), 3), d4 = std::pow(double(d), 4);
        CHECK(pair.pPlus.trace().real() == doctest::Approx((d4 + d3) / 2));
        CHECK(pair.pMinus.trace().real() == doctest::Approx((d4 - d3) / 2));
    }
    CHECK(symmetrizers(2).pPlus.trace().real() == doctest::Approx(12.0));
    CHECK(symmetrizers(2).pMinus.trace().real() == doctest::Approx(4.0));
    CHECK(symmetrizers(3).pPlus.trace().real() +
              symmetrizers(3).pMinus.trace().real() ==
          doctest::Approx(81.0));
}

TEST_CASE("pPlus annihilates the 1-3 antisymmetric sector") {
    const auto pair = symmetrizers(2);
    // (|01> - |10>)_13 (x) |00>_24: indices (i1,i2,i3,i4) row-major
    Vector v = Vector::Zero(16);
    v(0 * 8 + 0 * 4 + 1 * 2 + 0) = 1.0;   // |0 0 1 0>
    v(1 * 8 + 0 * 4 + 0 * 2 + 0) = -1.0;  // |1 0 0 0>
    CHECK((pair.pPlus * v).norm() < 1e-12);
    CHECK((pair.pMinus * v - v).norm() < 1e-12);
}

TEST_CASE("swap formula on closed-form gates") {
    for (int d : {2, 3, 4})
        CHECK(entanglement_via_swap(swap_gate(d)) ==
              doctest::Approx(1.0 - 1.0 / (d * d)));
    CHECK(entanglement_via_swap(identity_gate(2)) == doctest::Approx(0.0).epsilon(1e-12));

    RandomSource rng(3);
    for (int d : {2, 3})
        for (int trial = 0; trial < 10; ++trial) {
            const BipartiteOperator u(haar_unitary(d * d, rng), d, d);
            CHECK(std::abs(entanglement_via_swap(u) - linear_entanglement(u)) < 1e-9);
        }

    // non-unitary X uses the ||X||^4 normalizer
    const BipartiteOperator x(random_matrix(4, rng), 2, 2);
    CHECK(std::abs(entanglement_via_swap(x) - linear_entanglement(x)) < 1e-9);
}

TEST_CASE("protocol probability") {
    CHECK(protocol_probability(identity_gate(2)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(protocol_probability(swap_gate(2)) == doctest::Approx(0.25));
    CHECK(protocol_probability(exp_zz(std::numbers::pi / 4)) ==
          doctest::Approx(0.5 / 3.0));

    RandomSource rng(5);
    for (int d : {2, 3}) {
        const double nd = protocol_factor(d);
        const double cap = (1.0 - 1.0 / (d * d)) / (2.0 * nd);
        for (int trial = 0; trial < 5; ++trial) {
            const BipartiteOperator u(haar_unitary(d * d, rng), d, d);
            const double p = protocol_probability(u);
            CHECK(p >= -1e-12);
            CHECK(p <= cap + 1e-12);
            CHECK(std::abs(2.0 * nd * p - linear_entanglement(u)) < 1e-9);
        }
        CHECK(protocol_probability(swap_gate(d)) == doctest::Approx(cap));
    }

    CHECK_THROWS_AS(protocol_probability(BipartiteOperator(random_matrix(4, rng), 2, 2)),
                    std::invalid_argument);
}

TEST_CASE("commutator product test") {
    RandomSource rng(7);
    const Matrix a = random_matrix(2, rng);
    const Matrix b = random_matrix(2, rng);
    CHECK(commutator_product_test(BipartiteOperator(kron(a, b), 2, 2)));
    CHECK_FALSE(commutator_product_test(cnot_gate()));
    CHECK(commutator_product_test(exp_zz(std::numbers::pi / 2), 1e-8));
    CHECK_FALSE(commutator_product_test(exp_zz(0.3)));

    // must agree with the Schmidt-rank test, including near-products
    for (int trial = 0; trial < 50; ++trial) {
        const int d = (trial % 2 == 0) ? 2 : 3;
        Matrix m = kron(random_matrix(d, rng), random_matrix(d, rng));
        if (trial % 3 == 0) m += 1e-6 * random_matrix(d * d, rng);
        const BipartiteOperator x(m, d, d);
        CHECK(commutator_product_test(x, 1e-10) == (schmidt_rank(x, 1e-10) == 1));
    }
}

TEST_CASE("multipartite product state test") {
    // |0> (x) |1> (x) |0>
    Vector basis = Vector::Zero(8);
    basis(0 * 4 + 1 * 2 + 0) = 1.0;
    CHECK(product_state_test(basis, SubsystemLayout{2, 2, 2}));

    // GHZ
    Vector ghz = Vector::Zero(8);
    ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
    CHECK_FALSE(product_state_test(ghz, SubsystemLayout{2, 2, 2}));

    RandomSource rng(11);
    const Vector a = haar_state(3, rng);
    const Vector b = haar_state(3, rng);
    Vector prod(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) prod(i * 3 + j) = a(i) * b(j);
    CHECK(product_state_test(prod, SubsystemLayout{3, 3}, 1e-8));

    // entangled two-party state
    Vector bell = Vector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    CHECK_FALSE(product_state_test(bell, SubsystemLayout{2, 2}));

    CHECK_THROWS_AS(product_state_test(bell, SubsystemLayout{2, 2, 2}, 1e-8),
                    std::invalid_argument);
    CHECK_THROWS_AS(product_state_test(Vector(2.0 * bell), SubsystemLayout{2, 2}, 1e-8),
                    std::invalid_argument);
}

TEST_CASE("product test matches single-factor purity oracle") {
    RandomSource rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int nf = 2 + trial % 3;
        const int d = (trial % 2 == 0) ? 2 : 3;
        SubsystemLayout layout(std::vector<int>(nf, d));
        const long n = layout.totalDim();
        Vector phi;
        if (trial % 4 < 2) {
            phi = Vector::Ones(1);
            for (int k = 0; k < nf; ++k) {
                const Vector local = haar_state(d, rng);
                Vector next(phi.size() * d);
                for (long p = 0; p < phi.size(); ++p)
                    for (int q = 0; q < d; ++q) next(p * d + q) = phi(p) * local(q);
                phi = next;
            }
        } else {
            phi = haar_state(static_cast<int>(n), rng);
        }
        bool pureMarginals = true;
        const Matrix rhoFull = phi * phi.adjoint();
        for (int k = 0; k < nf; ++k)
            if (std::abs(partial_trace(rhoFull, layout, {k}).squaredNorm() - 1.0) > 1e-8)
                pureMarginals = false;
        CHECK(product_state_test(phi, layout, 1e-8) == pureMarginals);
    }
}
