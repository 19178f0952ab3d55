#pragma once

#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace opent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Local dimensions of the tensor factors, left factor = slow index.
struct SubsystemLayout {
    std::vector<int> dims;

    SubsystemLayout() = default;
    SubsystemLayout(std::initializer_list<int> d) : dims(d) { validate(); }
    explicit SubsystemLayout(std::vector<int> d) : dims(std::move(d)) { validate(); }

    int factors() const { return static_cast<int>(dims.size()); }

    long totalDim() const {
        long n = 1;
        for (int d : dims) n *= d;
        return n;
    }

  private:
    void validate() const {
        if (dims.empty()) throw std::invalid_argument("SubsystemLayout: no factors");
        for (int d : dims)
            if (d < 1) throw std::invalid_argument("SubsystemLayout: dims must be >= 1");
    }
};

/// Square operator on a dimA*dimB space with declared local dimensions.
///
/// Composite indexing is row-major with the FIRST factor as the slow index:
/// entry [(a,b),(c,d)] = <a b|U|c d> lives at row a*dimB+b, col c*dimB+d.
/// Worked 2x2 example: for U = X (tensor) Y on qubits,
/// U[(0,1),(1,0)] = U(1, 2) = X[0,1]*Y[1,0].
struct BipartiteOperator {
    Matrix matrix;
    int dimA = 0;
    int dimB = 0;

    BipartiteOperator() = default;
    BipartiteOperator(Matrix m, int dA, int dB)
        : matrix(std::move(m)), dimA(dA), dimB(dB) {
        if (dA < 1 || dB < 1)
            throw std::invalid_argument("BipartiteOperator: local dims must be positive");
        if (matrix.rows() != matrix.cols())
            throw std::invalid_argument("BipartiteOperator: matrix must be square");
        if (matrix.rows() != static_cast<long>(dA) * dB)
            throw std::invalid_argument("BipartiteOperator: matrix dim != dimA*dimB");
        if (!matrix.allFinite())
            throw std::invalid_argument("BipartiteOperator: non-finite entries");
    }

    long dim() const { return matrix.rows(); }
};

}  // namespace opent
