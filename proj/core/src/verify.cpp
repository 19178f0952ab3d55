#include "opent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "opent/choi.hpp"
#include "opent/epower.hpp"
#include "opent/gates.hpp"
#include "opent/protocol.hpp"
#include "opent/random.hpp"
#include "opent/schmidt.hpp"
#include "opent/tensor.hpp"

namespace opent {

namespace {

struct Check {
    bool pass = true;
    double worst = 0.0;

    void bound(double value, double tol) {
        worst = std::max(worst, value);
        if (value > tol) pass = false;
    }
    void require(bool ok) {
        if (!ok) pass = false;
    }
};

Matrix random_matrix(int n, RandomSource& rng) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.complex_gaussian();
    return m;
}

// Random resolution of the identity on C^d together with HS-orthogonal
// unitaries, the ingredients of a controlled unitary.
void random_controlled_parts(int d, RandomSource& rng,
                             std::vector<Matrix>& projectors,
                             std::vector<Matrix>& unitaries) {
    const int r = 1 + static_cast<int>(rng.uniform() * d);
    // composition of d into r positive parts
    std::vector<int> parts(r, 1);
    for (int extra = 0; extra < d - r; ++extra)
        parts[static_cast<int>(rng.uniform() * r)] += 1;

    const Matrix v = haar_unitary(d, rng);
    const Matrix w = haar_unitary(d, rng);
    const Complex omega = std::exp(Complex(0.0, 2.0 * std::numbers::pi / d));

    projectors.clear();
    unitaries.clear();
    int offset = 0;
    for (int a = 0; a < r; ++a) {
        Matrix diag = Matrix::Zero(d, d);
        for (int k = 0; k < parts[a]; ++k) diag(offset + k, offset + k) = 1.0;
        offset += parts[a];
        projectors.push_back(v * diag * v.adjoint());

        Matrix phase = Matrix::Zero(d, d);
        for (int k = 0; k < d; ++k) phase(k, k) = std::pow(omega, a * k);
        unitaries.push_back(w * phase);
    }
}

CriterionResult analytic_values(const RandomSource& rng) {
    Check c;
    // E(SWAP_d) = 1 - 1/d^2
    for (int d = 2; d <= 6; ++d)
        c.bound(std::abs(linear_entanglement(swap_gate(d)) -
                         (1.0 - 1.0 / (static_cast<double>(d) * d))),
                1e-10);
    // E(U1 x U2) = 0
    for (int i = 0; i < 100; ++i) {
        RandomSource sub = rng.substream(1000 + i);
        const int d = (i % 2 == 0) ? 2 : 3;
        const Matrix u1 = haar_unitary(d, sub);
        const Matrix u2 = haar_unitary(d, sub);
        c.bound(linear_entanglement(BipartiteOperator(kron(u1, u2), d, d)), 1e-10);
    }
    // E(U_theta) = sin(2 theta)^2 / 2 on a 100-point grid
    for (int i = 0; i < 100; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / 100.0;
        c.bound(std::abs(linear_entanglement(exp_zz(theta)) - exp_zz_closed_form(theta)),
                1e-10);
    }
    // controlled-unitary closed form vs the SVD path
    for (int d : {2, 3, 4})
        for (int i = 0; i < 50; ++i) {
            RandomSource sub = rng.substream(2000 + 100 * d + i);
            std::vector<Matrix> projectors, unitaries;
            random_controlled_parts(d, sub, projectors, unitaries);
            const BipartiteOperator u = controlled_unitary(projectors, unitaries);
            c.bound(std::abs(linear_entanglement(u) -
                             controlled_unitary_closed_form(projectors, d)),
                    1e-10);
        }
    return {"analytic-closed-forms", c.pass, c.worst, "tol 1e-10"};
}

CriterionResult triple_path(const RandomSource& rng) {
    Check c;
    auto run = [&](int d, int count, int base) {
        const double nd = protocol_factor(d);
        for (int i = 0; i < count; ++i) {
            RandomSource sub = rng.substream(base + i);
            const BipartiteOperator u(haar_unitary(d * d, sub), d, d);
            const double e1 = linear_entanglement(u);
            const double e2 = entanglement_via_swap(u);
            const double e3 = 2.0 * nd * protocol_probability(u);
            c.bound(std::abs(e1 - e2), 1e-9);
            c.bound(std::abs(e1 - e3), 1e-9);
        }
    };
    run(2, 50, 3000);
    run(3, 20, 3100);
    return {"triple-path-agreement", c.pass, c.worst, "schmidt = swap = protocol, tol 1e-9"};
}

CriterionResult haar_average(const RandomSource& rng) {
    Check c;
    for (int d : {2, 3}) {
        const auto est = mc_average_operator_entanglement(
            d, 20000, rng.substream(4000 + d));
        const double analytic =
            (static_cast<double>(d) * d - 1.0) / (static_cast<double>(d) * d + 1.0);
        c.bound(std::abs(est.mean - analytic), 3.0 * est.stderror);
    }
    return {"haar-average", c.pass, c.worst, "(d^2-1)/(d^2+1) within 3 stderr, d=2,3"};
}

CriterionResult epower_suite(const RandomSource& rng) {
    Check c;
    // closed form vs MC on 20 random U at d=2
    for (int i = 0; i < 20; ++i) {
        RandomSource sub = rng.substream(5000 + i);
        const BipartiteOperator u(haar_unitary(4, sub), 2, 2);
        const auto rep = entangling_power(u);
        const auto mc = mc_entangling_power(u, 10000, rng.substream(5100 + i).seed());
        c.bound(std::abs(rep.ep - mc.mean), 3.0 * mc.stderror);
    }
    // exact zeros
    c.bound(std::abs(entangling_power(swap_gate(2)).ep), 1e-12);
    c.bound(std::abs(entangling_power(identity_gate(2)).ep), 1e-12);
    // bound on Haar draws
    for (int d : {2, 3}) {
        const double bound = (d - 1.0) / (d + 1.0);
        for (int i = 0; i < 1000; ++i) {
            RandomSource sub = rng.substream(5200 + 2000 * d + i);
            const BipartiteOperator u(haar_unitary(d * d, sub), d, d);
            c.bound(entangling_power(u).ep - bound, 1e-9);
        }
    }
    // CNOT: 2/9 exactly from the closed form, MC within its own band
    const auto cnotRep = entangling_power(cnot_gate());
    c.bound(std::abs(cnotRep.ep - 2.0 / 9.0), 1e-10);
    const auto cnotMc = mc_entangling_power(cnot_gate(), 100000, rng.substream(5999).seed());
    c.bound(std::abs(cnotMc.mean - 2.0 / 9.0), 3.0 * cnotMc.stderror);
    return {"entangling-power", c.pass, c.worst, "closed form, MC, bound, CNOT = 2/9"};
}

CriterionResult invariance(const RandomSource& rng) {
    Check c;
    for (int i = 0; i < 200; ++i) {
        RandomSource sub = rng.substream(6000 + i);
        const int d = (i % 2 == 0) ? 2 : 3;
        const BipartiteOperator u(haar_unitary(d * d, sub), d, d);
        const double e = linear_entanglement(u);
        const Matrix l = kron(haar_unitary(d, sub), haar_unitary(d, sub));
        const Matrix r = kron(haar_unitary(d, sub), haar_unitary(d, sub));
        c.bound(std::abs(linear_entanglement(BipartiteOperator(l * u.matrix * r, d, d)) - e),
                1e-9);
        c.bound(std::abs(linear_entanglement(BipartiteOperator(u.matrix.adjoint(), d, d)) - e),
                1e-9);
    }
    return {"local-and-dagger-invariance", c.pass, c.worst, "200 instances, tol 1e-9"};
}

CriterionResult choi_layer(const RandomSource& rng) {
    Check c;
    // isometry, single and bipartite
    for (int d : {2, 3})
        for (int i = 0; i < 50; ++i) {
            RandomSource sub = rng.substream(7000 + 100 * d + i);
            const Matrix x = random_matrix(d, sub);
            const Matrix y = random_matrix(d, sub);
            c.bound(std::abs(vectorize(x, d).dot(vectorize(y, d)) - hs_inner(x, y)),
                    1e-12);
            const Matrix bx = random_matrix(d * d, sub);
            const Matrix by = random_matrix(d * d, sub);
            const Vector vx = bipartite_vectorize(BipartiteOperator(bx, d, d));
            const Vector vy = bipartite_vectorize(BipartiteOperator(by, d, d));
            c.bound(std::abs(vx.dot(vy) - hs_inner(bx, by)), 1e-12);
        }
    // composition identity on random 4x4 pairs
    for (int i = 0; i < 50; ++i) {
        RandomSource sub = rng.substream(7300 + i);
        const Matrix x = random_matrix(4, sub);
        const Matrix y = random_matrix(4, sub);
        const Vector lhs = bipartite_vectorize(BipartiteOperator(x * y, 2, 2));
        const Vector rhs = apply_op_13(BipartiteOperator(x, 2, 2),
                                       bipartite_vectorize(BipartiteOperator(y, 2, 2)));
        c.bound((lhs - rhs).norm(), 1e-11);
    }
    // Choi trace of trace-preserving maps
    for (int d : {2, 3}) {
        RandomSource sub = rng.substream(7400 + d);
        std::vector<Matrix> kraus;
        const double p[3] = {0.5, 0.3, 0.2};
        for (int k = 0; k < 3; ++k)
            kraus.push_back(std::sqrt(p[k]) * haar_unitary(d * d, sub));
        const auto choi = choi_of_map(KrausMap(kraus, d, d, true));
        c.bound(std::abs(choi.matrix.trace().real() - static_cast<double>(d) * d), 1e-8);
    }
    // Choi-path E vs Schmidt-path E
    for (int d : {2, 3})
        for (int i = 0; i < 25; ++i) {
            RandomSource sub = rng.substream(7500 + 100 * d + i);
            const BipartiteOperator x(random_matrix(d * d, sub), d, d);
            c.bound(std::abs(entanglement_via_choi(x) - linear_entanglement(x)), 1e-9);
        }
    return {"choi-layer", c.pass, c.worst, "isometry, composition, trace, E agreement"};
}

CriterionResult separability(const RandomSource& rng) {
    Check c;
    // commutator test vs Schmidt-rank-1 on mixed cases
    for (int i = 0; i < 200; ++i) {
        RandomSource sub = rng.substream(8000 + i);
        const int d = (i % 2 == 0) ? 2 : 3;
        BipartiteOperator x = [&]() {
            switch (i % 4) {
                case 0:  // exact product
                    return BipartiteOperator(
                        kron(random_matrix(d, sub), random_matrix(d, sub)), d, d);
                case 1: {  // perturbed product
                    Matrix m = kron(random_matrix(d, sub), random_matrix(d, sub));
                    m += 1e-6 * random_matrix(d * d, sub);
                    return BipartiteOperator(std::move(m), d, d);
                }
                case 2:  // entangled unitary
                    return BipartiteOperator(haar_unitary(d * d, sub), d, d);
                default:
                    return (d == 2) ? cnot_gate() : swap_gate(d);
            }
        }();
        const bool byCommutator = commutator_product_test(x, 1e-10);
        const bool byRank = schmidt_rank(x, 1e-10) == 1;
        c.require(byCommutator == byRank);
        if (i % 4 == 1) c.require(!byCommutator);  // perturbation must be detected
    }
    // multipartite test vs reduced-purity oracle
    for (int d : {2, 3})
        for (int nf : {2, 3, 4}) {
            SubsystemLayout layout(std::vector<int>(nf, d));
            const long n = layout.totalDim();

            RandomSource sub = rng.substream(8500 + 10 * d + nf);
            Vector prod = Vector::Ones(1);
            for (int k = 0; k < nf; ++k) {
                const Vector local = haar_state(d, sub);
                Vector next(prod.size() * d);
                for (long a = 0; a < prod.size(); ++a)
                    for (int b = 0; b < d; ++b) next(a * d + b) = prod(a) * local(b);
                prod = next;
            }
            Vector ghz = Vector::Zero(n);
            for (int a = 0; a < d; ++a) {
                long idx = 0;
                for (int k = 0; k < nf; ++k) idx = idx * d + a;
                ghz(idx) = 1.0 / std::sqrt(static_cast<double>(d));
            }

            for (const Vector& phi : {prod, ghz}) {
                const Matrix rhoFull = phi * phi.adjoint();
                bool pureMarginals = true;
                for (int k = 0; k < nf; ++k) {
                    const Matrix rho = partial_trace(rhoFull, layout, {k});
                    if (std::abs(rho.squaredNorm() - 1.0) > 1e-8) pureMarginals = false;
                }
                c.require(product_state_test(phi, layout, 1e-8) == pureMarginals);
            }
        }
    return {"separability-tests", c.pass, c.worst, "commutator vs rank, multipartite vs purity"};
}

CriterionResult generic_vs_unitary(const RandomSource& rng) {
    const auto unitary = mc_average_operator_entanglement(2, 20000, rng.substream(9000));
    const auto generic = mc_average_generic_entanglement(2, 20000, rng.substream(9001));
    const double gap = unitary.mean - generic.mean;
    const double band =
        3.0 * std::sqrt(unitary.stderror * unitary.stderror +
                        generic.stderror * generic.stderror);
    return {"generic-below-unitary", gap > band, gap,
            "mean-E gap must exceed 3 combined stderr"};
}

}  // namespace

std::vector<CriterionResult> run_verification(std::uint64_t seed) {
    const RandomSource rng(seed);
    return {
        analytic_values(rng), triple_path(rng),    haar_average(rng),
        epower_suite(rng),    invariance(rng),     choi_layer(rng),
        separability(rng),    generic_vs_unitary(rng),
    };
}

std::string render_verification(const std::vector<CriterionResult>& results) {
    std::string out;
    char line[256];
    for (const auto& r : results) {
        std::snprintf(line, sizeof(line), "%s  %-28s  worst=%.6e  %s\n",
                      r.pass ? "PASS" : "FAIL", r.name.c_str(), r.worst,
                      r.detail.c_str());
        out += line;
    }
    return out;
}

}  // namespace opent
