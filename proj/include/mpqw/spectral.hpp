#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mpqw/graph.hpp"
#include "mpqw/linalg.hpp"

namespace mpqw {

/// Nearest even integer, half-integers rounding up.
inline long long nearest_even(double x) {
    return 2 * static_cast<long long>(std::floor(x / 2.0 + 0.5));
}

/// Nearest odd integer, half-integers rounding up.
inline long long nearest_odd(double x) {
    return 2 * static_cast<long long>(std::floor((x - 1.0) / 2.0 + 0.5)) + 1;
}

/// Case-1 phase gap omega = arccos((w-n)/(n+w)).
inline double omega_case1(long long n, long long w) {
    if (n < 0 || w < 0 || n + w <= 0) throw std::domain_error("omega_case1: need n+w > 0");
    return std::acos(static_cast<double>(w - n) / static_cast<double>(n + w));
}

struct StepPair {
    long long t_even = 0;
    long long t_odd = 0;
};

/// Optimal step counts: nearest even integer to pi/omega and nearest odd
/// integer to arccos((n-w)/(n+w))/omega.
inline StepPair optimal_steps_case1(const GraphConfig& g) {
    if (g.kind != GraphCase::EverySet)
        throw std::invalid_argument("optimal_steps_case1: case-1 config required");
    if (g.n < 1) throw std::domain_error("optimal_steps_case1: no marked vertices");
    if (g.w() < 1) throw std::domain_error("optimal_steps_case1: no unmarked vertices");
    const double omega = omega_case1(g.n, g.w());
    const double odd_target =
        std::acos(static_cast<double>(g.n - g.w()) / static_cast<double>(g.n + g.w()));
    return {nearest_even(kPi / omega), nearest_odd(odd_target / omega)};
}

/// <psi_t|bb> for the walk started at (0,0,0,1): exact by the eigen
/// decomposition, with distinct even/odd branches.
inline double overlap_bb_closed_form(const GraphConfig& g, long long t) {
    if (g.kind != GraphCase::EverySet)
        throw std::invalid_argument("overlap_bb_closed_form: case-1 config required");
    const double omega = omega_case1(g.n, g.w());
    const double osc = 0.5 * std::cos(omega * static_cast<double>(t));
    if (t % 2 == 0) return osc + 0.5;
    return osc + static_cast<double>(g.w() - g.n) / (2.0 * static_cast<double>(g.n + g.w()));
}

/// Case-2 phase gap omega' = arcsin(sqrt(2n/MN)).
inline double omega_case2(long long M, long long N, long long n) {
    if (M < 1 || N < 1 || n < 0) throw std::domain_error("omega_case2: invalid parameters");
    if (2 * n > M * N) throw std::domain_error("omega_case2: requires 2n <= MN");
    return std::asin(std::sqrt(2.0 * static_cast<double>(n) /
                               (static_cast<double>(M) * static_cast<double>(N))));
}

/// Nearest integer to pi/(2 omega').
inline long long optimal_steps_case2(long long M, long long N, long long n) {
    if (n < 1) throw std::domain_error("optimal_steps_case2: no marked vertices");
    const double omega = omega_case2(M, N, n);
    return static_cast<long long>(std::floor(kPi / (2.0 * omega) + 0.5));
}

/// Predicted success with the |cc> initial approximation: sin^2(omega' t).
inline double predicted_success_case2(long long M, long long N, long long n, long long t) {
    const double s = std::sin(omega_case2(M, N, n) * static_cast<double>(t));
    return s * s;
}

struct SpectralSummary {
    double omega = 0.0;            // omega (case 1) or omega' (case 2)
    long long t_even = 0;          // case 2 stores the single optimum here
    long long t_odd = 0;           // case 1 only
    double predicted_max_probability = 0.0;
};

inline SpectralSummary spectral_summary(const GraphConfig& g) {
    SpectralSummary s;
    if (g.kind == GraphCase::EverySet) {
        s.omega = omega_case1(g.n, g.w());
        const StepPair p = optimal_steps_case1(g);
        s.t_even = p.t_even;
        s.t_odd = p.t_odd;
        const double ovl_e = overlap_bb_closed_form(g, p.t_even);
        const double ovl_o = overlap_bb_closed_form(g, p.t_odd);
        s.predicted_max_probability = 1.0 - std::min(ovl_e * ovl_e, ovl_o * ovl_o);
    } else {
        s.omega = omega_case2(g.M, g.N, g.n);
        s.t_even = optimal_steps_case2(g.M, g.N, g.n);
        s.t_odd = 0;
        s.predicted_max_probability = predicted_success_case2(g.M, g.N, g.n, s.t_even);
    }
    return s;
}

struct Eigenpair {
    Complex value;
    CVec vec;
};

/// The four exact eigenpairs of the case-1 plain-walk operator:
/// -1, +1, e^{-iw}, e^{+iw} with the printed eigenvectors.
inline std::vector<Eigenpair> analytic_eigenpairs_case1(long long n, long long w) {
    if (n < 1 || w < 1) throw std::domain_error("analytic_eigenpairs_case1: need n, w >= 1");
    const double total = static_cast<double>(n + w);
    const double omega = omega_case1(n, w);
    const double f1 = std::sqrt(n / (2.0 * total));
    const double f2 = std::sqrt(w / (2.0 * total));
    const double rwn = std::sqrt(static_cast<double>(w) / static_cast<double>(n));
    const double rnw = std::sqrt(static_cast<double>(n) / static_cast<double>(w));
    const Complex i{0.0, 1.0};
    std::vector<Eigenpair> out;
    out.push_back({-1.0, {-f1, -f1 * rwn, -f1 * rwn, f1}});
    out.push_back({1.0, {-f2, f2 * rnw, f2 * rnw, f2}});
    out.push_back({std::exp(-i * omega), {0.5, i * 0.5, -i * 0.5, 0.5}});
    out.push_back({std::exp(i * omega), {0.5, -i * 0.5, i * 0.5, 0.5}});
    return out;
}

/// Large-M / large-N eigenpair with an alternative eigenvalue candidate;
/// the source lists (N-n)/(N(M-1)) +- i next to the eigenvalues and
/// (n-N)/(N(M-1)) +- i next to the eigenvectors, so both are kept and
/// residual checks pick whichever fits better.
struct Case2Eigenpair {
    Complex value;
    Complex value_alt;
    CVec vec;
};

inline std::vector<Case2Eigenpair> analytic_eigenpairs_case2(long long M, long long N,
                                                             long long n) {
    if (M < 3 || N < 1 || n < 0) throw std::domain_error("analytic_eigenpairs_case2: bad params");
    const double re = static_cast<double>(N - n) / (static_cast<double>(N) * (M - 1));
    const double om = std::sqrt(2.0 * n / (static_cast<double>(M) * N));
    const double s2 = 1.0 / std::sqrt(2.0);
    const Complex i{0.0, 1.0};
    std::vector<Case2Eigenpair> out;
    out.push_back({-1.0, -1.0, {s2, s2, 0.0, 0.0, 0.0}});
    out.push_back({Complex(re, 1.0), Complex(-re, 1.0), {0.0, 0.0, s2, -i * s2, 0.0}});
    out.push_back({Complex(re, -1.0), Complex(-re, -1.0), {0.0, 0.0, s2, i * s2, 0.0}});
    out.push_back({Complex(1.0, om), Complex(1.0, om), {i * 0.5, -i * 0.5, 0.0, 0.0, s2}});
    out.push_back({Complex(1.0, -om), Complex(1.0, -om), {-i * 0.5, i * 0.5, 0.0, 0.0, s2}});
    return out;
}

/// ||U v - lambda v||, the verification metric for the analytic pairs.
inline double eigen_residual(const CMat& u, Complex lambda, const CVec& v) {
    CVec uv = mul(u, v);
    for (std::size_t k = 0; k < uv.size(); ++k) uv[k] -= lambda * v[k];
    return norm(uv);
}

}  // namespace mpqw
