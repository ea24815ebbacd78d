// Command-line front end: simulation, schedules, spectral reports, circuit
// compilation, and robust-walk sweeps for coined quantum-walk search on
// complete multipartite graphs.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mpqw/cli.hpp"

namespace {

int run_with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
        return 0;
    }
    std::ofstream file(path);
    if (!file) throw std::domain_error("cannot open output file: " + path);
    fn(file);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coined quantum-walk search on complete multipartite graphs"};
    app.require_subcommand(1);

    // simulate
    mpqw::SimulateOptions sim;
    std::string out_path;
    long long sim_steps = -1;
    auto* simulate = app.add_subcommand("simulate", "plain or parameterized walk, CSV per step");
    simulate->add_option("--case", sim.case_id, "1 = marked in every set, 2 = one set")
        ->required();
    simulate->add_option("--M", sim.M, "number of sets")->required();
    simulate->add_option("--N", sim.N, "vertices per set")->required();
    simulate->add_option("--n", sim.n, "marked vertices per marked set")->required();
    simulate->add_option("--steps", sim_steps, "steps to simulate (default: optimal)");
    simulate->add_option("--alpha", sim.alpha, "coin phase (default pi)");
    simulate->add_option("--beta", sim.beta, "query phase (default pi)");
    simulate->add_option("--engine", sim.engine, "subspace | full");
    simulate->add_option("--initial", sim.initial, "exact | paper (large-M |cc> truncation)");
    simulate->add_option("--out", out_path, "output file (default stdout)");

    // robust
    mpqw::RobustOptions rob;
    long long rob_t = -1;
    auto* robust = app.add_subcommand("robust", "fixed-point walk, CSV per pair step");
    robust->add_option("--case", rob.case_id)->required();
    robust->add_option("--M", rob.M)->required();
    robust->add_option("--N", rob.N)->required();
    robust->add_option("--n", rob.n)->required();
    robust->add_option("--epsilon", rob.epsilon, "failure parameter in (0,1]")->required();
    robust->add_option("--t", rob_t, "schedule length (default: robustness threshold)");
    robust->add_option("--initial", rob.initial, "exact | paper (case 2)");
    robust->add_option("--out", out_path);

    // schedule
    mpqw::ScheduleOptions sch;
    long long sch_t = -1;
    std::string bound_for;
    auto* schedule = app.add_subcommand("schedule", "print a fixed-point phase schedule");
    schedule->add_option("--epsilon", sch.epsilon)->required();
    schedule->add_option("--t", sch_t, "schedule length");
    schedule->add_option("--bound-for", bound_for, "case1 | case2: derive t from the robustness threshold");
    schedule->add_option("--M", sch.M);
    schedule->add_option("--N", sch.N);
    schedule->add_option("--out", out_path);

    // spectrum
    mpqw::SpectrumOptions spec;
    auto* spectrum = app.add_subcommand("spectrum", "phase gap, optimal steps, speedup report");
    spectrum->add_option("--case", spec.case_id)->required();
    spectrum->add_option("--M", spec.M)->required();
    spectrum->add_option("--N", spec.N)->required();
    spectrum->add_option("--n", spec.n)->required();
    spectrum->add_option("--out", out_path);

    // circuit
    mpqw::CircuitOptions circ;
    auto* circuit = app.add_subcommand("circuit", "compile one walk step to the gate format");
    circuit->add_option("--case", circ.case_id)->required();
    circuit->add_option("--M", circ.M)->required();
    circuit->add_option("--N", circ.N)->required();
    circuit->add_option("--n", circ.n)->required();
    circuit->add_option("--alpha", circ.alpha);
    circuit->add_option("--beta", circ.beta);
    circuit->add_flag("--verify", circ.verify, "check against the full-space step");
    circuit->add_option("--out", out_path);

    // sweep
    mpqw::SweepOptions swp;
    long long swp_step = -1;
    auto* sweep = app.add_subcommand("sweep", "robust final probability across schedule lengths");
    sweep->add_option("--case", swp.case_id)->required();
    sweep->add_option("--M", swp.M)->required();
    sweep->add_option("--N", swp.N)->required();
    sweep->add_option("--n", swp.n)->required();
    sweep->add_option("--epsilon", swp.epsilon)->required();
    sweep->add_option("--t-min", swp.t_min)->required();
    sweep->add_option("--t-max", swp.t_max)->required();
    sweep->add_option("--t-step", swp_step, "default: 2 for case 1, 1 for case 2");
    sweep->add_option("--initial", swp.initial, "exact | paper (case 2)");
    sweep->add_option("--svg", swp.svg_path, "also write an SVG line plot");
    sweep->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*simulate) {
            if (sim_steps >= 0) sim.steps = sim_steps;
            return run_with_output(out_path, [&](std::ostream& o) { mpqw::cmd_simulate(sim, o); });
        }
        if (*robust) {
            if (rob_t >= 0) rob.t = rob_t;
            return run_with_output(out_path, [&](std::ostream& o) { mpqw::cmd_robust(rob, o); });
        }
        if (*schedule) {
            if (sch_t >= 0) sch.t = sch_t;
            if (!bound_for.empty()) {
                if (bound_for == "case1")
                    sch.bound_for_case = 1;
                else if (bound_for == "case2")
                    sch.bound_for_case = 2;
                else
                    throw mpqw::UsageError("--bound-for must be case1 or case2");
            }
            return run_with_output(out_path, [&](std::ostream& o) { mpqw::cmd_schedule(sch, o); });
        }
        if (*spectrum)
            return run_with_output(out_path, [&](std::ostream& o) { mpqw::cmd_spectrum(spec, o); });
        if (*circuit)
            return run_with_output(out_path,
                                   [&](std::ostream& o) { mpqw::cmd_circuit(circ, o, std::cerr); });
        if (*sweep) {
            if (swp_step >= 0) swp.t_step = swp_step;
            return run_with_output(out_path, [&](std::ostream& o) {
                if (swp.svg_path.empty()) {
                    mpqw::cmd_sweep(swp, o, std::cerr);
                } else {
                    std::ofstream svg(swp.svg_path);
                    if (!svg) throw std::domain_error("cannot open svg file: " + swp.svg_path);
                    mpqw::cmd_sweep(swp, o, svg);
                }
            });
        }
    } catch (const mpqw::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
