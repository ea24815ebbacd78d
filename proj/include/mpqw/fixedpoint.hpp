#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpqw/io.hpp"
#include "mpqw/linalg.hpp"

namespace mpqw {

/// Chebyshev T of (possibly fractional) order nu at x >= 1, evaluated as
/// cosh(nu * arccosh(x)). The schedule only ever needs x = 1/sqrt(eps) >= 1.
inline double chebyshev_T(double order, double x) {
    if (order < 0) throw std::domain_error("chebyshev_T: order must be >= 0");
    if (x < 1.0) throw std::domain_error("chebyshev_T: requires x >= 1");
    return std::cosh(order * std::acosh(x));
}

/// arccot with range (0, pi): continuous across tan's sign change, which is
/// what keeps the alpha_j sequence smooth over j.
inline double arccot(double y) { return kPi / 2.0 - std::atan(y); }

/// Phase schedule of the fixed-point walk: t alphas and t+1 betas with
/// alpha_j = -beta_{t-j+1} (stored 0-based) and a free trailing beta.
struct RobustSchedule {
    double epsilon = 1.0;
    int t = 1;
    int L = 3;  // always 2t+1
    double gamma = 1.0;
    std::vector<double> alphas;  // size t
    std::vector<double> betas;   // size t+1; betas[t] fixed to 0 here
};

inline RobustSchedule generate_schedule(double epsilon, int t) {
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::domain_error("generate_schedule: epsilon must lie in (0, 1]");
    if (t < 1) throw std::domain_error("generate_schedule: t must be >= 1");
    RobustSchedule s;
    s.epsilon = epsilon;
    s.t = t;
    s.L = 2 * t + 1;
    s.gamma = 1.0 / chebyshev_T(1.0 / s.L, 1.0 / std::sqrt(epsilon));
    const double spread = std::sqrt(std::max(0.0, 1.0 - s.gamma * s.gamma));
    s.alphas.resize(static_cast<std::size_t>(t));
    for (int j = 1; j <= t; ++j)
        s.alphas[static_cast<std::size_t>(j - 1)] =
            2.0 * arccot(std::tan(2.0 * kPi * j / s.L) * spread);
    s.betas.resize(static_cast<std::size_t>(t) + 1);
    for (int j = 1; j <= t; ++j)
        s.betas[static_cast<std::size_t>(j - 1)] = -s.alphas[static_cast<std::size_t>(t - j)];
    s.betas[static_cast<std::size_t>(t)] = 0.0;  // does not affect measurement probabilities
    return s;
}

/// Case-1 robustness step threshold: ceil(ln(2/sqrt(eps)) sqrt(N) + 1).
inline long long min_steps_case1(double epsilon, long long N) {
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::domain_error("min_steps_case1: epsilon must lie in (0, 1]");
    if (N < 1) throw std::domain_error("min_steps_case1: N must be >= 1");
    return static_cast<long long>(
        std::ceil(std::log(2.0 / std::sqrt(epsilon)) * std::sqrt(static_cast<double>(N)) + 1.0));
}

/// Case-2 threshold: ceil(ln(2/sqrt(eps)) sqrt(MN/2) + 1).
inline long long min_steps_case2(double epsilon, long long M, long long N) {
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::domain_error("min_steps_case2: epsilon must lie in (0, 1]");
    if (M < 3) throw std::domain_error("min_steps_case2: M must be >= 3");
    if (N < 1) throw std::domain_error("min_steps_case2: N must be >= 1");
    return static_cast<long long>(std::ceil(
        std::log(2.0 / std::sqrt(epsilon)) * std::sqrt(static_cast<double>(M) * N / 2.0) + 1.0));
}

/// 2x2 coin factor (1-e^{-ia})|x><x| - I with |x> = (sqrt(lam), sqrt(1-lam)).
inline CMat coin_sub(double lambda, double alpha) {
    if (lambda < 0.0 || lambda > 1.0)
        throw std::domain_error("coin_sub: lambda must lie in [0, 1]");
    const Complex f = 1.0 - std::exp(Complex(0.0, -alpha));
    const double cross = std::sqrt(lambda * (1.0 - lambda));
    CMat m(2);
    m(0, 0) = f * lambda - 1.0;
    m(0, 1) = f * cross;
    m(1, 0) = f * cross;
    m(1, 1) = f * (1.0 - lambda) - 1.0;
    return m;
}

/// 2x2 query factor diag(e^{ib}, 1); the marked component is index 0.
inline CMat query_sub(double beta) {
    CMat m(2);
    m(0, 0) = std::exp(Complex(0.0, beta));
    m(1, 1) = 1.0;
    return m;
}

/// Failure probability of the 2x2 reduced model: apply the scheduled product
/// prod_i C_sub(alpha_i) Q_sub(beta_i) to the reduced initial state
/// (sqrt(lam), sqrt(1-lam)) and return the squared overlap with the unmarked
/// axis (0,1). This is the quantity the Chebyshev envelope pins below epsilon
/// for every t past the threshold; starting from (0,1) instead reproduces it
/// only in the lam -> 0 limit.
inline double reduced_2x2_failure(double lambda, const RobustSchedule& schedule) {
    if (!(lambda > 0.0) || !(lambda < 1.0))
        throw std::domain_error("reduced_2x2_failure: lambda must lie in (0, 1)");
    CVec v{std::sqrt(lambda), std::sqrt(1.0 - lambda)};
    for (int i = 0; i < schedule.t; ++i) {
        v = mul(query_sub(schedule.betas[static_cast<std::size_t>(i)]), v);
        v = mul(coin_sub(lambda, schedule.alphas[static_cast<std::size_t>(i)]), v);
    }
    return std::norm(v[1]);
}

// --- flat key-value serialization (12 significant digits) ---

inline std::string schedule_to_text(const RobustSchedule& s) {
    std::string out = "# mpqw-schedule v1\n";
    out += "epsilon = " + format_double(s.epsilon) + "\n";
    out += "t = " + std::to_string(s.t) + "\n";
    out += "L = " + std::to_string(s.L) + "\n";
    out += "gamma = " + format_double(s.gamma) + "\n";
    for (int j = 0; j < s.t; ++j)
        out += "alpha[" + std::to_string(j) + "] = " +
               format_double(s.alphas[static_cast<std::size_t>(j)]) + "\n";
    for (int j = 0; j <= s.t; ++j)
        out += "beta[" + std::to_string(j) + "] = " +
               format_double(s.betas[static_cast<std::size_t>(j)]) + "\n";
    return out;
}

inline RobustSchedule schedule_from_text(const std::string& text) {
    RobustSchedule s;
    s.alphas.clear();
    s.betas.clear();
    bool have_t = false;
    for (const std::string& line : split_lines(text)) {
        if (line.empty() || line[0] == '#') continue;
        std::string key, value;
        if (!parse_key_value(line, key, value))
            throw std::invalid_argument("schedule_from_text: malformed line: " + line);
        if (key == "epsilon") {
            s.epsilon = parse_double(value);
        } else if (key == "t") {
            s.t = static_cast<int>(parse_int(value));
            have_t = true;
            s.alphas.assign(static_cast<std::size_t>(s.t), 0.0);
            s.betas.assign(static_cast<std::size_t>(s.t) + 1, 0.0);
        } else if (key == "L") {
            s.L = static_cast<int>(parse_int(value));
        } else if (key == "gamma") {
            s.gamma = parse_double(value);
        } else if (key.rfind("alpha[", 0) == 0 || key.rfind("beta[", 0) == 0) {
            if (!have_t) throw std::invalid_argument("schedule_from_text: t must precede arrays");
            const bool is_alpha = key[0] == 'a';
            const auto open = key.find('[');
            const auto close = key.find(']');
            const long long idx = parse_int(key.substr(open + 1, close - open - 1));
            auto& arr = is_alpha ? s.alphas : s.betas;
            if (idx < 0 || static_cast<std::size_t>(idx) >= arr.size())
                throw std::invalid_argument("schedule_from_text: index out of range: " + key);
            arr[static_cast<std::size_t>(idx)] = parse_double(value);
        } else {
            throw std::invalid_argument("schedule_from_text: unknown key: " + key);
        }
    }
    if (!have_t || s.L != 2 * s.t + 1)
        throw std::invalid_argument("schedule_from_text: inconsistent t/L");
    return s;
}

}  // namespace mpqw
