#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpqw/circuit.hpp"
#include "mpqw/fixedpoint.hpp"
#include "mpqw/fullsim.hpp"
#include "mpqw/graph.hpp"
#include "mpqw/io.hpp"
#include "mpqw/spectral.hpp"
#include "mpqw/subspace.hpp"

namespace mpqw {

/// Bad flag combinations (exit code 2); domain guards from the library map to
/// exit code 3 in the tool.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline GraphConfig config_for_case(int case_id, long long M, long long N, long long n) {
    if (case_id != 1 && case_id != 2) throw UsageError("--case must be 1 or 2");
    return GraphConfig(static_cast<int>(M), N, n,
                       case_id == 1 ? GraphCase::EverySet : GraphCase::OneSet);
}

inline void write_csv_header(std::ostream& out, const GraphConfig& g, const std::string& mode,
                             const std::string& engine, double alpha, double beta) {
    out << "# mpqw-csv v1\n";
    out << "# config case=" << (g.kind == GraphCase::EverySet ? 1 : 2) << " M=" << g.M
        << " N=" << g.N << " n=" << g.n << " mode=" << mode << " engine=" << engine
        << " alpha=" << format_double(alpha) << " beta=" << format_double(beta) << "\n";
    out << "step,p_success";
    for (int k = 1; k <= subspace_dimension(g.kind); ++k)
        out << ",re_a" << k << ",im_a" << k;
    out << "\n";
}

inline void write_csv_row(std::ostream& out, long long step, double p, const CVec& amp) {
    out << step << ',' << format_double(p);
    for (const Complex& a : amp)
        out << ',' << format_double(a.real()) << ',' << format_double(a.imag());
    out << "\n";
}

struct SimulateOptions {
    int case_id = 1;
    long long M = 2, N = 1, n = 0;
    std::optional<long long> steps;  // defaults to the optimal step count
    double alpha = kPi, beta = kPi;
    std::string engine = "subspace";
    std::string initial = "exact";
};

inline long long default_steps(const GraphConfig& g) {
    if (g.kind == GraphCase::EverySet) {
        if (g.n < 1) throw std::domain_error("no marked vertices: pass --steps explicitly");
        return optimal_steps_case1(g).t_even;
    }
    if (g.n < 1) throw std::domain_error("no marked vertices: pass --steps explicitly");
    return optimal_steps_case2(g.M, g.N, g.n);
}

inline void cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
    const GraphConfig g = config_for_case(opt.case_id, opt.M, opt.N, opt.n);
    if (opt.engine != "subspace" && opt.engine != "full")
        throw UsageError("--engine must be subspace or full");
    if (opt.initial != "exact" && opt.initial != "paper")
        throw UsageError("--initial must be exact or paper");
    const long long steps = opt.steps ? *opt.steps : default_steps(g);
    if (steps < 0) throw UsageError("--steps must be >= 0");

    if (opt.engine == "full") {
        if (opt.initial == "paper")
            throw UsageError("--initial paper is a subspace-engine approximation");
        if (g.edge_space_dimension() > kFullEngineDimensionLimit)
            throw std::domain_error("full engine refused: edge dimension " +
                                    std::to_string(g.edge_space_dimension()) + " exceeds " +
                                    std::to_string(kFullEngineDimensionLimit));
        write_csv_header(out, g, "plain", "full", opt.alpha, opt.beta);
        EdgeState s = uniform_initial(g);
        for (long long k = 0;; ++k) {
            const Projection p = project(s, g.kind);
            write_csv_row(out, k, success_probability(s), p.state.amp);
            if (k == steps) break;
            s = walk_step(s, opt.alpha, opt.beta);
        }
        return;
    }

    SubspaceState psi;
    if (g.kind == GraphCase::EverySet)
        psi = opt.initial == "paper" ? SubspaceState{g.kind, {0.0, 0.0, 0.0, 1.0}}
                                     : case1_initial(g);
    else
        psi = case2_initial(g, opt.initial == "paper" ? Case2Initial::CcApprox
                                                      : Case2Initial::Exact);
    const SubspaceOperator u = subspace_operator(g, opt.alpha, opt.beta);
    write_csv_header(out, g, "plain", "subspace", opt.alpha, opt.beta);
    for (long long k = 0;; ++k) {
        write_csv_row(out, k, success(psi), psi.amp);
        if (k == steps) break;
        psi.amp = mul(u.m, psi.amp);
    }
}

struct RobustOptions {
    int case_id = 1;
    long long M = 2, N = 1, n = 0;
    double epsilon = 0.1;
    std::optional<long long> t;  // defaults to the robustness threshold
    std::string initial = "exact";
};

inline long long robust_default_t(const GraphConfig& g, double epsilon) {
    return g.kind == GraphCase::EverySet ? min_steps_case1(epsilon, g.N)
                                         : min_steps_case2(epsilon, g.M, g.N);
}

inline void cmd_robust(const RobustOptions& opt, std::ostream& out) {
    const GraphConfig g = config_for_case(opt.case_id, opt.M, opt.N, opt.n);
    if (opt.initial != "exact" && opt.initial != "paper")
        throw UsageError("--initial must be exact or paper");
    if (opt.initial == "paper" && g.kind == GraphCase::EverySet)
        throw UsageError("--initial paper applies to case 2 robust runs only");
    const long long t = opt.t ? *opt.t : robust_default_t(g, opt.epsilon);
    if (t < 1) throw UsageError("--t must be >= 1");
    const RobustSchedule sched = generate_schedule(opt.epsilon, static_cast<int>(t));
    const auto traj = evolve_robust(g, sched,
                                    opt.initial == "paper" ? Case2Initial::CcApprox
                                                           : Case2Initial::Exact);
    write_csv_header(out, g, "robust", "subspace", 0.0, 0.0);
    out << "# schedule epsilon=" << format_double(sched.epsilon) << " t=" << sched.t
        << " L=" << sched.L << " gamma=" << format_double(sched.gamma) << "\n";
    for (std::size_t k = 0; k < traj.size(); k += 2)
        write_csv_row(out, static_cast<long long>(k), success(traj[k]), traj[k].amp);
    const double final_p = success(traj.back());
    out << "# summary final_p=" << format_double(final_p) << " t=" << sched.t
        << " epsilon=" << format_double(sched.epsilon) << "\n";
}

struct ScheduleOptions {
    double epsilon = 0.1;
    std::optional<long long> t;
    std::optional<int> bound_for_case;  // 1 or 2: derive t from the robustness threshold
    long long M = 0, N = 0;
};

inline void cmd_schedule(const ScheduleOptions& opt, std::ostream& out) {
    long long t;
    if (opt.t) {
        t = *opt.t;
    } else if (opt.bound_for_case) {
        if (*opt.bound_for_case == 1) {
            if (opt.N < 1) throw UsageError("--bound-for case1 requires --N");
            t = min_steps_case1(opt.epsilon, opt.N);
        } else if (*opt.bound_for_case == 2) {
            if (opt.M < 3 || opt.N < 1) throw UsageError("--bound-for case2 requires --M and --N");
            t = min_steps_case2(opt.epsilon, opt.M, opt.N);
        } else {
            throw UsageError("--bound-for must be case1 or case2");
        }
    } else {
        throw UsageError("pass --t or --bound-for");
    }
    if (t < 1 || t > 10'000'000) throw UsageError("schedule length out of range");
    out << schedule_to_text(generate_schedule(opt.epsilon, static_cast<int>(t)));
}

struct SpectrumOptions {
    int case_id = 1;
    long long M = 2, N = 1, n = 0;
};

inline void cmd_spectrum(const SpectrumOptions& opt, std::ostream& out) {
    const GraphConfig g = config_for_case(opt.case_id, opt.M, opt.N, opt.n);
    if (g.n < 1) throw std::domain_error("no marked vertices: spectrum undefined for n = 0");
    out << "# mpqw-spectrum v1\n";
    const SpectralSummary s = spectral_summary(g);
    if (g.kind == GraphCase::EverySet) {
        out << "case = 1\n";
        out << "omega = " << format_double(s.omega) << "\n";
        out << "t_even = " << s.t_even << "\n";
        out << "t_odd = " << s.t_odd << "\n";
        out << "predicted_max_probability = " << format_double(s.predicted_max_probability)
            << "\n";
        out << "classical_queries = " << format_double(static_cast<double>(g.N) / g.n) << "\n";
        out << "quantum_steps = " << s.t_even << "\n";
    } else {
        out << "case = 2\n";
        out << "omega_prime = " << format_double(s.omega) << "\n";
        out << "t_optimal = " << s.t_even << "\n";
        out << "predicted_max_probability = " << format_double(s.predicted_max_probability)
            << "\n";
        out << "classical_queries = "
            << format_double(static_cast<double>(g.M) * g.N / g.n) << "\n";
        out << "quantum_steps = " << s.t_even << "\n";
    }
}

struct CircuitOptions {
    int case_id = 1;
    long long M = 3, N = 2, n = 1;
    double alpha = kPi, beta = kPi;
    bool verify = false;
};

/// Emits the compiled step circuit to `out`; with verify, the equivalence
/// report and gate tally go to `report`.
inline void cmd_circuit(const CircuitOptions& opt, std::ostream& out, std::ostream& report) {
    const GraphConfig g = config_for_case(opt.case_id, opt.M, opt.N, opt.n);
    const QubitLayout lay = layout_for(g);
    const Circuit step = build_step(lay, opt.alpha, opt.beta);
    out << emit(step);
    if (opt.verify) {
        const double dev = max_step_deviation(lay, opt.alpha, opt.beta);
        const GateTally tally = gate_counts(step);
        const GateEstimate est = basic_gate_estimate(step);
        report << "verify max_deviation = " << format_double(dev) << "\n";
        for (int k = 0; k < kGateKindCount; ++k)
            if (tally.counts[static_cast<std::size_t>(k)] > 0)
                report << "tally " << gate_kind_name(static_cast<GateKind>(k)) << " = "
                       << tally.counts[static_cast<std::size_t>(k)] << "\n";
        report << "basic_gate_estimate = " << est.total() << "\n";
    }
}

struct SweepOptions {
    int case_id = 1;
    long long M = 2, N = 1, n = 0;
    double epsilon = 0.1;
    long long t_min = 1, t_max = 1;
    std::optional<long long> t_step;  // default: 2 for case 1, 1 for case 2
    std::string svg_path;
    std::string initial = "exact";
};

struct SweepRow {
    long long t = 0;
    bool below_threshold = false;
    double final_p = 0.0;
};

inline std::vector<SweepRow> run_sweep(const SweepOptions& opt) {
    const GraphConfig g = config_for_case(opt.case_id, opt.M, opt.N, opt.n);
    if (opt.t_min < 1 || opt.t_max < opt.t_min) throw UsageError("invalid sweep range");
    const long long step = opt.t_step ? *opt.t_step : (opt.case_id == 1 ? 2 : 1);
    if (step < 1) throw UsageError("--t-step must be >= 1");
    const long long bound = robust_default_t(g, opt.epsilon);
    std::vector<SweepRow> rows;
    for (long long t = opt.t_min; t <= opt.t_max; t += step) {
        const RobustSchedule sched = generate_schedule(opt.epsilon, static_cast<int>(t));
        const auto traj = evolve_robust(g, sched,
                                        opt.initial == "paper" ? Case2Initial::CcApprox
                                                               : Case2Initial::Exact);
        rows.push_back({t, t < bound, success(traj.back())});
    }
    return rows;
}

inline void cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& svg_out) {
    const std::vector<SweepRow> rows = run_sweep(opt);
    out << "# mpqw-csv v1\n";
    out << "# sweep case=" << opt.case_id << " M=" << opt.M << " N=" << opt.N << " n=" << opt.n
        << " epsilon=" << format_double(opt.epsilon) << "\n";
    out << "t,below_threshold,final_p\n";
    for (const SweepRow& r : rows)
        out << r.t << ',' << (r.below_threshold ? 1 : 0) << ',' << format_double(r.final_p)
            << "\n";
    if (!opt.svg_path.empty()) {
        SvgSeries series;
        for (const SweepRow& r : rows) {
            series.x.push_back(static_cast<double>(r.t));
            series.y.push_back(r.final_p);
        }
        const double band = opt.case_id == 1 ? 1.0 - opt.epsilon * opt.epsilon
                                             : 1.0 - opt.epsilon;
        write_svg_plot(svg_out, {series}, {band, 1.0}, "schedule length t",
                       "final success probability");
    }
}

}  // namespace mpqw
