#include "opent/gates.hpp"

#include <cmath>

#include "opent/schmidt.hpp"
#include "opent/tensor.hpp"

namespace opent {

BipartiteOperator identity_gate(int d) {
    return BipartiteOperator(Matrix::Identity(static_cast<long>(d) * d,
                                              static_cast<long>(d) * d),
                             d, d);
}

BipartiteOperator swap_gate(int d) {
    return BipartiteOperator(swap_factors(SubsystemLayout{d, d}, 0, 1), d, d);
}

BipartiteOperator cnot_gate() {
    Matrix u = Matrix::Zero(4, 4);
    u(0, 0) = u(1, 1) = 1.0;
    u(2, 3) = u(3, 2) = 1.0;
    return BipartiteOperator(std::move(u), 2, 2);
}

BipartiteOperator cz_gate() {
    Matrix u = Matrix::Identity(4, 4);
    u(3, 3) = -1.0;
    return BipartiteOperator(std::move(u), 2, 2);
}

BipartiteOperator controlled_phase_gate(double theta, int d) {
    const long n = static_cast<long>(d) * d;
    Matrix u = Matrix::Identity(n, n);
    u(n - 1, n - 1) = std::exp(Complex(0.0, theta));
    return BipartiteOperator(std::move(u), d, d);
}

BipartiteOperator make_gate(const std::string& name, int d,
                            std::optional<double> theta) {
    auto need_theta = [&]() {
        if (!theta)
            throw std::invalid_argument("gate '" + name + "' requires --theta");
        return *theta;
    };
    auto need_dim2 = [&]() {
        if (d != 2)
            throw std::invalid_argument("gate '" + name + "' is only defined for d=2");
    };
    if (d < 2) throw std::invalid_argument("gate dimension must be >= 2");

    if (name == "identity") return identity_gate(d);
    if (name == "swap") return swap_gate(d);
    if (name == "cnot") { need_dim2(); return cnot_gate(); }
    if (name == "cz") { need_dim2(); return cz_gate(); }
    if (name == "expzz") { need_dim2(); return exp_zz(need_theta()); }
    if (name == "controlled-phase") return controlled_phase_gate(need_theta(), d);
    throw std::invalid_argument("unknown gate '" + name + "'");
}

}  // namespace opent
