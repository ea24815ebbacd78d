#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mpqw/fixedpoint.hpp"
#include "mpqw/graph.hpp"
#include "mpqw/linalg.hpp"

namespace mpqw {

inline int subspace_dimension(GraphCase kind) { return kind == GraphCase::EverySet ? 4 : 5; }

/// Amplitudes in the invariant subspace. Basis order is fixed:
///   case 1: |aa>, |ab>, |ba>, |bb>   (position type, coin type)
///   case 2: |ca>, |ac>, |bc>, |cb>, |cc>
struct SubspaceState {
    GraphCase kind = GraphCase::EverySet;
    CVec amp;
};

struct SubspaceOperator {
    GraphCase kind = GraphCase::EverySet;
    CMat m;
};

enum class Case2Initial { Exact, CcApprox };

inline void require_case(const GraphConfig& g, GraphCase expected, const char* what) {
    if (g.kind != expected) throw std::invalid_argument(std::string(what) + ": wrong graph case");
}

/// Projection of the uniform edge state: (n, sqrt(nw), sqrt(nw), w)/N.
inline SubspaceState case1_initial(const GraphConfig& g) {
    require_case(g, GraphCase::EverySet, "case1_initial");
    const double N = static_cast<double>(g.N);
    const double cross = std::sqrt(static_cast<double>(g.n) * static_cast<double>(g.w()));
    return {GraphCase::EverySet,
            {g.n / N, cross / N, cross / N, g.w() / N}};
}

inline SubspaceState case2_initial(const GraphConfig& g,
                                   Case2Initial mode = Case2Initial::Exact) {
    require_case(g, GraphCase::OneSet, "case2_initial");
    if (mode == Case2Initial::CcApprox)
        return {GraphCase::OneSet, {0.0, 0.0, 0.0, 0.0, 1.0}};
    const double MN = static_cast<double>(g.M) * static_cast<double>(g.N);
    const double a = std::sqrt(g.n / MN);
    const double b = std::sqrt(g.w() / MN);
    const double c = std::sqrt((g.M - 2) / static_cast<double>(g.M));
    return {GraphCase::OneSet, {a, a, b, b, c}};
}

inline CMat case1_shift() {
    CMat s(4);
    s(0, 0) = 1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 3) = 1.0;
    return s;
}

/// I (x) C_sub(alpha): the coin acts on the coin letter of each basis pair.
inline CMat case1_coin(const GraphConfig& g, double alpha) {
    require_case(g, GraphCase::EverySet, "case1_coin");
    const CMat c2 = coin_sub(static_cast<double>(g.n) / static_cast<double>(g.N), alpha);
    CMat m(4);
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m(2 * b + i, 2 * b + j) = c2(i, j);
    return m;
}

inline CMat case1_query(double beta) {
    const Complex ph = std::exp(Complex(0.0, beta));
    CMat m(4);
    m(0, 0) = ph;
    m(1, 1) = ph;
    m(2, 2) = 1.0;
    m(3, 3) = 1.0;
    return m;
}

/// U(alpha, beta) = S C(alpha) Q(beta); depends on n and w only, never M.
inline SubspaceOperator case1_operator(const GraphConfig& g, double alpha, double beta) {
    if (g.N < 1 || g.n + g.w() <= 0) throw std::domain_error("case1_operator: empty sets");
    return {GraphCase::EverySet, mul(case1_shift(), mul(case1_coin(g, alpha), case1_query(beta)))};
}

inline CMat case2_shift() {
    CMat s(5);
    s(0, 1) = 1.0;
    s(1, 0) = 1.0;
    s(2, 3) = 1.0;
    s(3, 2) = 1.0;
    s(4, 4) = 1.0;
    return s;
}

/// At marked/unmarked set-0 vertices the symmetric coin direction is exactly
/// |s_u>, so |ac> and |bc> pick up the scalar -e^{-ia}; the c-position block
/// is the rank-1 form (1-e^{-ia})vv' - I over (|ca>,|cb>,|cc>).
inline CMat case2_coin(const GraphConfig& g, double alpha) {
    require_case(g, GraphCase::OneSet, "case2_coin");
    const Complex f = 1.0 - std::exp(Complex(0.0, -alpha));
    const double d = static_cast<double>(g.M - 1) * static_cast<double>(g.N);
    const double v[3] = {std::sqrt(g.n / d), std::sqrt(g.w() / d),
                         std::sqrt((g.M - 2) / static_cast<double>(g.M - 1))};
    CMat m(5);
    m(1, 1) = f - 1.0;
    m(2, 2) = f - 1.0;
    const int pos[3] = {0, 3, 4};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m(pos[i], pos[j]) = f * v[i] * v[j];
            if (i == j) m(pos[i], pos[j]) -= 1.0;
        }
    return m;
}

inline CMat case2_query(double beta) {
    CMat m = CMat::identity(5);
    m(1, 1) = std::exp(Complex(0.0, beta));
    return m;
}

inline SubspaceOperator case2_operator(const GraphConfig& g, double alpha, double beta) {
    require_case(g, GraphCase::OneSet, "case2_operator");
    return {GraphCase::OneSet, mul(case2_shift(), mul(case2_coin(g, alpha), case2_query(beta)))};
}

inline SubspaceOperator subspace_operator(const GraphConfig& g, double alpha, double beta) {
    return g.kind == GraphCase::EverySet ? case1_operator(g, alpha, beta)
                                         : case2_operator(g, alpha, beta);
}

inline SubspaceState initial_state(const GraphConfig& g,
                                   Case2Initial mode = Case2Initial::Exact) {
    return g.kind == GraphCase::EverySet ? case1_initial(g) : case2_initial(g, mode);
}

/// p = 1 - |<bb|psi>|^2.
inline double success_case1(const SubspaceState& s) {
    if (s.kind != GraphCase::EverySet || s.amp.size() != 4)
        throw std::invalid_argument("success_case1: not a case-1 state");
    return 1.0 - std::norm(s.amp[3]);
}

/// p = 1 - |<cc|psi>|^2 - |<bc|psi>|^2 - |<cb|psi>|^2.
inline double success_case2(const SubspaceState& s) {
    if (s.kind != GraphCase::OneSet || s.amp.size() != 5)
        throw std::invalid_argument("success_case2: not a case-2 state");
    return 1.0 - std::norm(s.amp[4]) - std::norm(s.amp[2]) - std::norm(s.amp[3]);
}

inline double success(const SubspaceState& s) {
    return s.kind == GraphCase::EverySet ? success_case1(s) : success_case2(s);
}

/// trajectory[k] = U^k |psi0>; trajectory[0] is the input state.
inline std::vector<SubspaceState> evolve(const SubspaceState& state, const SubspaceOperator& op,
                                         long long steps) {
    if (state.kind != op.kind || static_cast<int>(state.amp.size()) != op.m.n)
        throw std::invalid_argument("evolve: state/operator dimension mismatch");
    if (steps < 0) throw std::invalid_argument("evolve: steps must be >= 0");
    std::vector<SubspaceState> traj;
    traj.reserve(static_cast<std::size_t>(steps) + 1);
    traj.push_back(state);
    for (long long k = 0; k < steps; ++k)
        traj.push_back(SubspaceState{state.kind, mul(op.m, traj.back().amp)});
    return traj;
}

/// Robust walk: pair i applies U(alpha_i, beta_i) then U(alpha_i, beta_{i+1}),
/// 2t applications in total, recorded per step. Starts from the exact initial
/// state unless a case-2 mode is requested.
inline std::vector<SubspaceState> evolve_robust(const GraphConfig& g,
                                                const RobustSchedule& schedule,
                                                Case2Initial mode = Case2Initial::Exact) {
    if (static_cast<int>(schedule.alphas.size()) != schedule.t ||
        static_cast<int>(schedule.betas.size()) != schedule.t + 1)
        throw std::invalid_argument("evolve_robust: schedule arrays inconsistent with t");
    std::vector<SubspaceState> traj;
    traj.reserve(2 * static_cast<std::size_t>(schedule.t) + 1);
    traj.push_back(initial_state(g, mode));
    for (int i = 0; i < schedule.t; ++i) {
        const double a = schedule.alphas[static_cast<std::size_t>(i)];
        const SubspaceOperator first = subspace_operator(g, a, schedule.betas[static_cast<std::size_t>(i)]);
        traj.push_back(SubspaceState{traj.back().kind, mul(first.m, traj.back().amp)});
        const SubspaceOperator second =
            subspace_operator(g, a, schedule.betas[static_cast<std::size_t>(i) + 1]);
        traj.push_back(SubspaceState{traj.back().kind, mul(second.m, traj.back().amp)});
    }
    return traj;
}

}  // namespace mpqw
