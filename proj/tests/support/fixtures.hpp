#pragma once

// Test-side oracles and entrywise matrix fixtures. The fixtures spell out the
// closed-form operator entries directly so the S*C*Q builders are checked
// against an independent route; the helpers here never call the code paths
// they are used to verify.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "mpqw/linalg.hpp"

namespace mpqw::testing {

/// Matrix power by binary exponentiation; independent of evolve()'s repeated
/// matrix-vector route.
inline CMat mat_power(CMat base, long long exponent) {
    CMat acc = CMat::identity(base.n);
    while (exponent > 0) {
        if (exponent & 1) acc = mul(acc, base);
        base = mul(base, base);
        exponent >>= 1;
    }
    return acc;
}

/// Plain-walk 4x4 search operator, entry by entry.
inline CMat fixture_case1_plain(long long n, long long w) {
    const double N = static_cast<double>(n + w);
    const double dn = 2.0 * n / N, dw = 2.0 * w / N;
    const double cr = 2.0 * std::sqrt(static_cast<double>(n) * w) / N;
    CMat u(4);
    u(0, 0) = 1.0 - dn;
    u(0, 1) = -cr;
    u(1, 2) = dn - 1.0;
    u(1, 3) = cr;
    u(2, 0) = -cr;
    u(2, 1) = 1.0 - dw;
    u(3, 2) = cr;
    u(3, 3) = dw - 1.0;
    return u;
}

/// Parameterized 4x4 coin: I (x) [(1-e^{-ia}) outer - I] written entrywise.
inline CMat fixture_case1_coin(long long n, long long w, double alpha) {
    const double N = static_cast<double>(n + w);
    const Complex f = 1.0 - std::exp(Complex(0.0, -alpha));
    const Complex c00 = f * (n / N) - 1.0;
    const Complex c01 = f * std::sqrt(static_cast<double>(n) * w) / N;
    const Complex c11 = f * (w / N) - 1.0;
    CMat m(4);
    m(0, 0) = c00;
    m(0, 1) = c01;
    m(1, 0) = c01;
    m(1, 1) = c11;
    m(2, 2) = c00;
    m(2, 3) = c01;
    m(3, 2) = c01;
    m(3, 3) = c11;
    return m;
}

inline CMat fixture_case1_query(double beta) {
    const Complex ph = std::exp(Complex(0.0, beta));
    CMat m = CMat::identity(4);
    m(0, 0) = ph;
    m(1, 1) = ph;
    return m;
}

inline CMat fixture_case1_shift() {
    CMat s(4);
    s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
    return s;
}

/// Plain-walk 5x5 search operator, entry by entry.
inline CMat fixture_case2_plain(long long M, long long N, long long n) {
    const double d = static_cast<double>(M - 1) * N;
    const double a = 2.0 * n / d - 1.0;
    const double b = 2.0 * std::sqrt(static_cast<double>(n) * (N - n)) / d;
    const double c = 2.0 * std::sqrt((M - 2) * static_cast<double>(n) / N) / (M - 1);
    const double e = 2.0 * (n - N) / (static_cast<double>(N) - M * N) - 1.0;
    const double g = 2.0 * std::sqrt((M - 2) * static_cast<double>(N - n) / N) / (M - 1);
    const double h = 2.0 * (M - 2) / static_cast<double>(M - 1) - 1.0;
    CMat u(5);
    u(0, 1) = -1.0;
    u(1, 0) = a;
    u(1, 3) = b;
    u(1, 4) = c;
    u(2, 0) = b;
    u(2, 3) = e;
    u(2, 4) = g;
    u(3, 2) = 1.0;
    u(4, 0) = c;
    u(4, 3) = g;
    u(4, 4) = h;
    return u;
}

/// Parameterized 5x5 search operator written entrywise, with the published
/// sign/factor slips corrected: every off-diagonal coupling carries
/// (1 - e^{-ia}) (its alpha = pi value must reduce to the plain matrix above),
/// and the (5,5) entry is -1 + (1-e^{-ia})(M-2)/(M-1).
inline CMat fixture_case2_param(long long M, long long N, long long n, double alpha,
                                double beta) {
    const Complex f = 1.0 - std::exp(Complex(0.0, -alpha));
    const Complex em = std::exp(Complex(0.0, -alpha));
    const double d = static_cast<double>(M - 1) * N;
    const double rb = std::sqrt(static_cast<double>(n) * (N - n)) / d;
    const double rc = std::sqrt((M - 2) * static_cast<double>(n) * N) / d;
    const double rg = std::sqrt((M - 2) * static_cast<double>(N - n) / N) / (M - 1);
    CMat u(5);
    u(0, 1) = -std::exp(Complex(0.0, -(alpha - beta)));
    u(1, 0) = f * (n / d) - 1.0;
    u(1, 3) = f * rb;
    u(1, 4) = f * rc;
    u(2, 0) = f * rb;
    u(2, 3) = f * ((N - n) / d) - 1.0;
    u(2, 4) = f * rg;
    u(3, 2) = -em;
    u(4, 0) = f * rc;
    u(4, 3) = f * rg;
    u(4, 4) = f * ((M - 2) / static_cast<double>(M - 1)) - 1.0;
    return u;
}

/// Chebyshev T for any argument, by the trig/hyperbolic split. Used as the
/// closed-form oracle for the 2x2 failure envelope.
inline double chebyshev_any(double order, double x) {
    if (x >= 1.0) return std::cosh(order * std::acosh(x));
    if (x <= -1.0) {
        // only integer orders reach here in tests
        const double v = std::cosh(order * std::acosh(-x));
        return std::fmod(order, 2.0) == 0.0 ? v : -v;
    }
    return std::cos(order * std::acos(x));
}

/// Crude XML well-formedness check: every <tag ...> has a matching </tag> or
/// is self-closing; enough to validate the generated SVG.
inline bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        const std::size_t close = text.find('>', i);
        if (close == std::string::npos) return false;
        std::string inner = text.substr(i + 1, close - i - 1);
        i = close + 1;
        if (inner.empty()) return false;
        if (inner[0] == '?' || inner[0] == '!') continue;
        bool closing = inner[0] == '/';
        bool self_closing = inner.back() == '/';
        if (closing) inner = inner.substr(1);
        const std::size_t sp = inner.find_first_of(" \t/");
        const std::string name = sp == std::string::npos ? inner : inner.substr(0, sp);
        if (closing) {
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else if (!self_closing) {
            stack.push_back(name);
        }
    }
    return stack.empty();
}

inline std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace mpqw::testing
