#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <opent/epower.hpp>
#include <opent/gates.hpp>
#include <opent/random.hpp>
#include <opent/schmidt.hpp>
#include <opent/tensor.hpp>

using namespace opent;

TEST_CASE("report invariants and exact zeros") {
    const auto swapRep = entangling_power(swap_gate(2));
    CHECK(swapRep.ep == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(swapRep.eS == doctest::Approx(0.75));
    CHECK(swapRep.bound == doctest::Approx(1.0 / 3.0));
    CHECK_FALSE(swapRep.optimal);

    const auto idRep = entangling_power(identity_gate(2));
    CHECK(idRep.ep == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(idRep.optimal);

    const auto cnotRep = entangling_power(cnot_gate());
    CHECK(cnotRep.ep == doctest::Approx(2.0 / 9.0).epsilon(1e-10));
    CHECK(cnotRep.eU == doctest::Approx(0.5));
    CHECK(cnotRep.eUS == doctest::Approx(0.75));
    CHECK_FALSE(cnotRep.optimal);

    RandomSource rng(3);
    Matrix notUnitary = Matrix::Identity(4, 4) * 2.0;
    CHECK_THROWS_AS(entangling_power(BipartiteOperator(notUnitary, 2, 2)),
                    std::invalid_argument);

    // ep = N_d^-2 (eU + eUS - eS) holds on random draws, and stays in bounds
    for (int d : {2, 3})
        for (int trial = 0; trial < 50; ++trial) {
            const BipartiteOperator u(haar_unitary(d * d, rng), d, d);
            const auto rep = entangling_power(u);
            const double nd = (d + 1.0) / d;
            CHECK(std::abs(rep.ep - (rep.eU + rep.eUS - rep.eS) / (nd * nd)) < 1e-10);
            CHECK(rep.ep >= -1e-9);
            CHECK(rep.ep <= rep.bound + 1e-9);
        }
}

TEST_CASE("is_optimal") {
    CHECK_FALSE(is_optimal(swap_gate(2)));
    CHECK_FALSE(is_optimal(identity_gate(2)));
    CHECK_FALSE(is_optimal(cnot_gate()));
}

TEST_CASE("state linear entropy") {
    // product state
    Vector prod = Vector::Zero(4);
    prod(2) = 1.0;  // |1> (x) |0>
    CHECK(state_linear_entropy(prod, 2) == doctest::Approx(0.0).epsilon(1e-14));

    // maximally entangled
    for (int d : {2, 3}) {
        Vector phi = Vector::Zero(d * d);
        for (int a = 0; a < d; ++a) phi(a * d + a) = 1.0 / std::sqrt(double(d));
        CHECK(state_linear_entropy(phi, d) == doctest::Approx(1.0 - 1.0 / d));
    }

    // (|00> + |01> + |10>)/sqrt(3): rho_1 = [[2/3,1/3],[1/3,1/3]], purity 7/9
    Vector w = Vector::Zero(4);
    w(0) = w(1) = w(2) = 1.0 / std::sqrt(3.0);
    CHECK(state_linear_entropy(w, 2) == doctest::Approx(2.0 / 9.0));

    // oracle via explicit partial trace on random states
    RandomSource rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = (trial % 2 == 0) ? 2 : 3;
        const Vector psi = haar_state(d * d, rng);
        const Matrix rho =
            partial_trace(Matrix(psi * psi.adjoint()), SubsystemLayout{d, d}, {0});
        CHECK(state_linear_entropy(psi, d) ==
              doctest::Approx(1.0 - rho.squaredNorm()).epsilon(1e-12));
    }

    CHECK_THROWS_AS(state_linear_entropy(Vector(2.0 * prod), 2), std::invalid_argument);
}

TEST_CASE("Monte-Carlo entangling power") {
    // swap never entangles product states
    const auto swapMc = mc_entangling_power(swap_gate(2), 200, 99);
    CHECK(std::abs(swapMc.mean) < 1e-12);

    const auto cnotMc = mc_entangling_power(cnot_gate(), 20000, 1234);
    CHECK(std::abs(cnotMc.mean - 2.0 / 9.0) < 3.0 * cnotMc.stderror);

    // determinism and seed sensitivity
    const auto again = mc_entangling_power(cnot_gate(), 20000, 1234);
    CHECK(again.mean == cnotMc.mean);
    CHECK(again.stderror == cnotMc.stderror);
    const auto other = mc_entangling_power(cnot_gate(), 20000, 4321);
    CHECK(other.mean != cnotMc.mean);

    CHECK_THROWS_AS(mc_entangling_power(cnot_gate(), 1, 7), std::invalid_argument);
}

TEST_CASE("closed form matches MC on random unitaries") {
    RandomSource rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const BipartiteOperator u(haar_unitary(4, rng), 2, 2);
        const auto rep = entangling_power(u);
        const auto mc = mc_entangling_power(u, 20000, 100 + trial);
        CHECK(std::abs(rep.ep - mc.mean) < 3.0 * mc.stderror);
    }
}

TEST_CASE("entangling power is invariant under both-side local unitaries") {
    RandomSource rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = (trial % 2 == 0) ? 2 : 3;
        const BipartiteOperator u(haar_unitary(d * d, rng), d, d);
        const Matrix l = kron(haar_unitary(d, rng), haar_unitary(d, rng));
        const Matrix r = kron(haar_unitary(d, rng), haar_unitary(d, rng));
        const BipartiteOperator v(l * u.matrix * r, d, d);
        CHECK(std::abs(entangling_power(u).ep - entangling_power(v).ep) < 1e-9);
    }
}
