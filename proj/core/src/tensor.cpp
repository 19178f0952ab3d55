#include "opent/tensor.hpp"

#include <algorithm>
#include <cstdint>

namespace opent {

Matrix kron(const Matrix& a, const Matrix& b) {
    const long ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    if (ar * br > (1L << 24) || ac * bc > (1L << 24))
        throw std::length_error("kron: product dimension too large");
    Matrix out(ar * br, ac * bc);
    for (long i = 0; i < ar; ++i)
        for (long j = 0; j < ac; ++j)
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    return out;
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("hs_inner: shape mismatch");
    // tr(a^dag b) = sum_ij conj(a_ij) b_ij
    return (a.conjugate().cwiseProduct(b)).sum();
}

double hs_norm(const Matrix& a) { return a.norm(); }

Matrix dagger(const Matrix& a) { return a.adjoint(); }

namespace {

std::vector<long> strides_of(const SubsystemLayout& layout) {
    const int n = layout.factors();
    std::vector<long> s(n);
    long acc = 1;
    for (int k = n - 1; k >= 0; --k) {
        s[k] = acc;
        acc *= layout.dims[k];
    }
    return s;
}

}  // namespace

Matrix partial_trace(const Matrix& rho, const SubsystemLayout& layout,
                     const std::set<int>& keep) {
    const long n = layout.totalDim();
    if (rho.rows() != n || rho.cols() != n)
        throw std::invalid_argument("partial_trace: dimension != product of layout dims");
    for (int k : keep)
        if (k < 0 || k >= layout.factors())
            throw std::out_of_range("partial_trace: keep index out of range");

    std::vector<int> kept(keep.begin(), keep.end());
    std::vector<int> traced;
    for (int k = 0; k < layout.factors(); ++k)
        if (!keep.count(k)) traced.push_back(k);

    const auto stride = strides_of(layout);
    long dKeep = 1, dTrace = 1;
    for (int k : kept) dKeep *= layout.dims[k];
    for (int k : traced) dTrace *= layout.dims[k];

    // flat index of a (kept, traced) pair of multi-indices
    auto compose = [&](long ik, long it) {
        long idx = 0;
        for (int p = static_cast<int>(kept.size()) - 1; p >= 0; --p) {
            const int f = kept[p];
            idx += (ik % layout.dims[f]) * stride[f];
            ik /= layout.dims[f];
        }
        for (int p = static_cast<int>(traced.size()) - 1; p >= 0; --p) {
            const int f = traced[p];
            idx += (it % layout.dims[f]) * stride[f];
            it /= layout.dims[f];
        }
        return idx;
    };

    Matrix out = Matrix::Zero(dKeep, dKeep);
    for (long r = 0; r < dKeep; ++r)
        for (long c = 0; c < dKeep; ++c) {
            Complex acc = 0.0;
            for (long t = 0; t < dTrace; ++t)
                acc += rho(compose(r, t), compose(c, t));
            out(r, c) = acc;
        }
    return out;
}

namespace {

void check_perm(const SubsystemLayout& layout, const std::vector<int>& perm) {
    const int n = layout.factors();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation: wrong length");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw std::invalid_argument("permutation: not a bijection");
        seen[p] = true;
    }
    for (int k = 0; k < n; ++k)
        if (layout.dims[perm[k]] != layout.dims[k])
            throw std::invalid_argument("permutation: factor dimension mismatch");
}

long permuted_index(long src, const SubsystemLayout& layout,
                    const std::vector<int>& perm, const std::vector<long>& stride) {
    long dst = 0;
    for (int k = layout.factors() - 1; k >= 0; --k) {
        const long ik = (src / stride[k]) % layout.dims[k];
        dst += ik * stride[perm[k]];
    }
    return dst;
}

}  // namespace

Matrix permutation_operator(const SubsystemLayout& layout, const std::vector<int>& perm) {
    check_perm(layout, perm);
    const long n = layout.totalDim();
    const auto stride = strides_of(layout);
    Matrix out = Matrix::Zero(n, n);
    for (long col = 0; col < n; ++col)
        out(permuted_index(col, layout, perm, stride), col) = 1.0;
    return out;
}

Vector permute_vector_factors(const Vector& v, const SubsystemLayout& layout,
                              const std::vector<int>& perm) {
    check_perm(layout, perm);
    const long n = layout.totalDim();
    if (v.size() != n)
        throw std::invalid_argument("permute_vector_factors: dimension mismatch");
    const auto stride = strides_of(layout);
    Vector out(n);
    for (long i = 0; i < n; ++i)
        out(permuted_index(i, layout, perm, stride)) = v(i);
    return out;
}

bool is_unitary(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    Matrix g = a.adjoint() * a;
    g.diagonal().array() -= 1.0;
    return g.norm() <= tol;
}

Matrix swap_factors(const SubsystemLayout& layout, int i, int j) {
    std::vector<int> perm(layout.factors());
    for (int k = 0; k < layout.factors(); ++k) perm[k] = k;
    std::swap(perm[i], perm[j]);
    return permutation_operator(layout, perm);
}

}  // namespace opent
