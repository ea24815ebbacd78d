#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mpqw/spectral.hpp"
#include "mpqw/subspace.hpp"
#include "support/fixtures.hpp"

using namespace mpqw;

TEST_CASE("phase gap omega, case 1", "[spectral]") {
    CHECK(std::abs(omega_case1(5, 5) - kPi / 2.0) < 1e-15);
    CHECK(std::abs(omega_case1(10, 9990) - 0.0632560988751) < 1e-12);
    CHECK(std::abs(omega_case1(7, 0) - kPi) < 1e-15);
    CHECK_THROWS_AS(omega_case1(0, 0), std::domain_error);
}

TEST_CASE("optimal steps, case 1", "[spectral]") {
    const StepPair one = optimal_steps_case1(GraphConfig(2, 10000, 1, GraphCase::EverySet));
    CHECK(one.t_even == 158);
    CHECK(one.t_odd == 157);
    CHECK(optimal_steps_case1(GraphConfig(2, 10000, 10, GraphCase::EverySet)).t_even == 50);

    const StepPair balanced = optimal_steps_case1(GraphConfig(2, 8, 4, GraphCase::EverySet));
    CHECK(balanced.t_even == 2);
    CHECK(balanced.t_odd == 1);

    CHECK_THROWS_AS(optimal_steps_case1(GraphConfig(2, 8, 0, GraphCase::EverySet)),
                    std::domain_error);
    CHECK_THROWS_AS(optimal_steps_case1(GraphConfig(2, 8, 8, GraphCase::EverySet)),
                    std::domain_error);
}

TEST_CASE("closed-form |bb> overlap", "[spectral]") {
    const GraphConfig g(2, 12, 3, GraphCase::EverySet);
    CHECK(std::abs(overlap_bb_closed_form(g, 0) - 1.0) < 1e-15);

    const GraphConfig balanced(2, 8, 4, GraphCase::EverySet);
    CHECK(std::abs(overlap_bb_closed_form(balanced, 2)) < 1e-15);  // omega*t = pi
    CHECK(std::abs(overlap_bb_closed_form(balanced, 1)) < 1e-15);
}

TEST_CASE("closed form matches the truncated-start simulation", "[spectral]") {
    for (long long n : {1LL, 10LL, 100LL}) {
        const GraphConfig g(2, 10000, n, GraphCase::EverySet);
        const SubspaceOperator u = case1_operator(g, kPi, kPi);
        SubspaceState psi{GraphCase::EverySet, {0.0, 0.0, 0.0, 1.0}};
        for (long long t = 0; t <= 500; ++t) {
            CHECK(std::abs(psi.amp[3].real() - overlap_bb_closed_form(g, t)) < 5e-3);
            CHECK(std::abs(psi.amp[3].imag()) < 1e-10);
            psi.amp = mul(u.m, psi.amp);
        }
    }
}

TEST_CASE("phase gap omega', case 2", "[spectral]") {
    CHECK(omega_case2(1000, 10000, 0) == 0.0);
    CHECK(std::abs(omega_case2(1000, 10000, 10) - 0.00141421403378) < 1e-12);
    CHECK(std::abs(omega_case2(4, 2, 4) - kPi / 2.0) < 1e-15);
    CHECK_THROWS_AS(omega_case2(2, 3, 4), std::domain_error);
}

TEST_CASE("optimal steps, case 2", "[spectral]") {
    CHECK(optimal_steps_case2(1000, 10000, 10) == 1111);
    CHECK(optimal_steps_case2(4, 2, 4) == 1);
    CHECK(optimal_steps_case2(100, 100, 1) == 111);
    CHECK_THROWS_AS(optimal_steps_case2(100, 100, 0), std::domain_error);
}

TEST_CASE("predicted case-2 success", "[spectral]") {
    CHECK(predicted_success_case2(1000, 10000, 10, 0) == 0.0);
    const long long opt = optimal_steps_case2(1000, 10000, 10);
    CHECK(predicted_success_case2(1000, 10000, 10, opt) > 0.999);
    CHECK(predicted_success_case2(1000, 10000, 10, 2 * opt) < 1e-4);
}

TEST_CASE("case-1 analytic eigenpairs", "[spectral]") {
    const auto pairs = analytic_eigenpairs_case1(10, 9990);
    const CMat u = case1_operator(GraphConfig(2, 10000, 10, GraphCase::EverySet), kPi, kPi).m;
    for (const auto& p : pairs) {
        CHECK(std::abs(norm(p.vec) - 1.0) < 1e-12);
        CHECK(eigen_residual(u, p.value, p.vec) < 1e-12);
    }
    CHECK(std::abs(inner(pairs[2].vec, pairs[3].vec)) < 1e-15);

    const auto balanced = analytic_eigenpairs_case1(4, 4);
    const CVec v1_expected{-0.5, -0.5, -0.5, 0.5};
    CHECK(max_abs_diff(balanced[0].vec, v1_expected) < 1e-15);
}

TEST_CASE("case-2 analytic eigenpairs are asymptotic", "[spectral]") {
    struct Params {
        long long M, N, n;
    };
    for (const Params p : {Params{10000, 10000, 1}, Params{1000, 10000, 10}}) {
        const CMat u =
            case2_operator(GraphConfig(static_cast<int>(p.M), p.N, p.n, GraphCase::OneSet), kPi,
                           kPi)
                .m;
        const auto pairs = analytic_eigenpairs_case2(p.M, p.N, p.n);
        // the printed vectors leave bc/cc couplings of order sqrt(2/M) unresolved
        const double scale = std::sqrt(2.0 / static_cast<double>(p.M)) +
                             std::sqrt(2.0 * p.n / (static_cast<double>(p.M) * p.N));
        for (const auto& pr : pairs) {
            const double res = eigen_residual(u, pr.value, pr.vec);
            const double res_alt = eigen_residual(u, pr.value_alt, pr.vec);
            INFO("eigenvalue " << pr.value << " residual " << res << " alt " << res_alt);
            CHECK(std::min(res, res_alt) < 2.0 * scale);
        }
        const CVec cc{0.0, 0.0, 0.0, 0.0, 1.0};
        CHECK(std::abs(std::abs(inner(pairs[3].vec, cc)) - 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(std::abs(inner(pairs[4].vec, cc)) - 1.0 / std::sqrt(2.0)) < 1e-15);
    }

    // v1 obeys the tighter advertised tolerance, and the rotating pair's
    // moduli approach 1 as M, N grow
    const auto big = analytic_eigenpairs_case2(10000, 10000, 1);
    const CMat u = case2_operator(GraphConfig(10000, 10000, 1, GraphCase::OneSet), kPi, kPi).m;
    CHECK(eigen_residual(u, big[0].value, big[0].vec) < 1e-2);
    CHECK(std::abs(std::abs(big[3].value) - 1.0) < 1e-6);
    CHECK(std::abs(std::abs(big[4].value) - 1.0) < 1e-6);
}

TEST_CASE("|cc> start tracks sin^2(omega' t)", "[spectral]") {
    for (long long n : {1LL, 10LL}) {
        const GraphConfig g(1000, 10000, n, GraphCase::OneSet);
        const SubspaceOperator u = case2_operator(g, kPi, kPi);
        SubspaceState psi = case2_initial(g, Case2Initial::CcApprox);
        const long long opt = optimal_steps_case2(g.M, g.N, g.n);
        for (long long t = 0; t <= 2 * opt; ++t) {
            CHECK(std::abs(success_case2(psi) - predicted_success_case2(g.M, g.N, g.n, t)) <
                  0.02);
            psi.amp = mul(u.m, psi.amp);
        }
    }
}

TEST_CASE("quadratic scaling of the optimal step counts", "[spectral]") {
    const double r1 =
        static_cast<double>(optimal_steps_case1(GraphConfig(2, 40000, 1, GraphCase::EverySet))
                                .t_even) /
        static_cast<double>(
            optimal_steps_case1(GraphConfig(2, 10000, 1, GraphCase::EverySet)).t_even);
    CHECK(r1 > 1.96);
    CHECK(r1 < 2.04);

    const double r2 = static_cast<double>(optimal_steps_case2(200, 200, 1)) /
                      static_cast<double>(optimal_steps_case2(100, 100, 1));
    CHECK(r2 > 1.96);
    CHECK(r2 < 2.04);
}
