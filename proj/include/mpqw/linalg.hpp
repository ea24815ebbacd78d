#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mpqw {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Small dense complex square matrix, row-major. Everything in this
/// project lives in dimension 2..5, so no attempt at being clever.
struct CMat {
    int n = 0;
    std::vector<Complex> a;

    CMat() = default;
    explicit CMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}

    Complex& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const Complex& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static CMat identity(int dim) {
        CMat m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline CMat mul(const CMat& lhs, const CMat& rhs) {
    if (lhs.n != rhs.n) throw std::invalid_argument("CMat dimension mismatch");
    CMat out(lhs.n);
    for (int i = 0; i < lhs.n; ++i)
        for (int k = 0; k < lhs.n; ++k) {
            const Complex p = lhs(i, k);
            if (p == Complex{}) continue;
            for (int j = 0; j < lhs.n; ++j) out(i, j) += p * rhs(k, j);
        }
    return out;
}

inline CVec mul(const CMat& m, const CVec& v) {
    if (static_cast<std::size_t>(m.n) != v.size())
        throw std::invalid_argument("CMat/vector dimension mismatch");
    CVec out(v.size());
    for (int i = 0; i < m.n; ++i) {
        Complex acc{};
        for (int j = 0; j < m.n; ++j) acc += m(i, j) * v[j];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

inline CMat adjoint(const CMat& m) {
    CMat out(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

inline CMat kron(const CMat& lhs, const CMat& rhs) {
    CMat out(lhs.n * rhs.n);
    for (int i = 0; i < lhs.n; ++i)
        for (int j = 0; j < lhs.n; ++j)
            for (int k = 0; k < rhs.n; ++k)
                for (int l = 0; l < rhs.n; ++l)
                    out(i * rhs.n + k, j * rhs.n + l) = lhs(i, j) * rhs(k, l);
    return out;
}

inline double max_abs_diff(const CMat& lhs, const CMat& rhs) {
    if (lhs.n != rhs.n) throw std::invalid_argument("CMat dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.a.size(); ++i)
        worst = std::max(worst, std::abs(lhs.a[i] - rhs.a[i]));
    return worst;
}

inline double max_abs_diff(const CVec& lhs, const CVec& rhs) {
    if (lhs.size() != rhs.size()) throw std::invalid_argument("vector dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
    return worst;
}

inline double norm(const CVec& v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return std::sqrt(s);
}

inline Complex inner(const CVec& lhs, const CVec& rhs) {
    if (lhs.size() != rhs.size()) throw std::invalid_argument("vector dimension mismatch");
    Complex acc{};
    for (std::size_t i = 0; i < lhs.size(); ++i) acc += std::conj(lhs[i]) * rhs[i];
    return acc;
}

/// max entrywise |U'U - I|; 0 for a perfectly unitary matrix.
inline double unitarity_defect(const CMat& m) {
    return max_abs_diff(mul(adjoint(m), m), CMat::identity(m.n));
}

}  // namespace mpqw
