// Command-line scenario runner for the swarm simulator.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "swarm/analysis.hpp"
#include "swarm/coupling.hpp"
#include "swarm/errors.hpp"
#include "swarm/format.hpp"
#include "swarm/scenario.hpp"

namespace {

using swarm::ExitCode;

int code(ExitCode c) { return static_cast<int>(c); }

swarm::Backend pick_backend(const std::string& name) {
    if (name == "scalar") return swarm::Backend::scalar;
    if (name == "avx2") return swarm::Backend::avx2;
    return swarm::simd::default_backend();
}

int cmd_run(const std::string& config, const std::string& output, const std::string& backend) {
    const auto root = output.empty() ? swarm::default_output_root() : std::filesystem::path(output);
    const auto outcome = swarm::run_scenario(config, root, pick_backend(backend));
    if (!outcome.result) {
        std::cerr << "error (" << swarm::exit_code_name(outcome.code) << "): " << outcome.message
                  << '\n';
        return code(outcome.code);
    }
    const auto& r = *outcome.result;
    std::cout << "scenario: " << r.scenario.name << '\n'
              << "force_backend: " << swarm::simd::backend_name(r.backend) << '\n';
    swarm::write_bound_report(std::cout, r.report);
    std::cout << "center_net_displacement: " << swarm::fmt_double(r.drift.net_displacement) << '\n'
              << "artifacts: " << outcome.artifact_dir.string() << '\n';
    if (outcome.code == ExitCode::not_contained) {
        std::cerr << "containment assertion failed\n";
    }
    return code(outcome.code);
}

int cmd_batch(const std::string& dir, std::size_t parallel, const std::string& output,
              const std::string& backend) {
    const auto root = output.empty() ? swarm::default_output_root() : std::filesystem::path(output);
    try {
        const auto rows = swarm::run_batch(dir, parallel, root, pick_backend(backend));
        swarm::write_batch_csv(std::cout, rows);
    } catch (const swarm::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return code(ExitCode::config_error);
    }
    return code(ExitCode::ok);
}

int cmd_validate(const std::string& file) {
    try {
        const auto w = swarm::read_coupling_file(file);
        const auto v = swarm::validate_coupling(w);
        auto yn = [](bool b) { return b ? "true" : "false"; };
        std::cout << "n_agents: " << w.size() << '\n'
                  << "zero_diagonal: " << yn(v.zero_diagonal) << '\n'
                  << "balanced: " << yn(v.balanced) << '\n'
                  << "irreducible: " << yn(v.irreducible) << '\n'
                  << "max_balance_residual: " << swarm::fmt_double(v.max_balance_residual) << '\n'
                  << "total_weight: " << swarm::fmt_double(swarm::total_weight(w)) << '\n'
                  << "valid: " << yn(v.ok()) << '\n';
        if (v.ok()) {
            std::cout << "lambda2: "
                      << swarm::fmt_double(swarm::lambda2(swarm::laplacian(w))) << '\n';
        }
        return v.ok() ? 0 : 1;
    } catch (const swarm::SwarmError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return code(ExitCode::config_error);
    }
}

int cmd_bounds(const std::string& config) {
    try {
        const auto s = swarm::load_scenario(config);
        const auto w = s.coupling.build(s.n_agents);
        const auto kernel = s.kernel.build();
        std::cout << "scenario: " << s.name << '\n';
        if (const auto* g = std::get_if<swarm::GaussianKernel>(&kernel)) {
            const auto b1 = swarm::gaussian_cohesion_bound(*g, w);
            const auto b2 = swarm::bounded_repulsion_cohesion_bound(swarm::gaussian_as_general(*g), w);
            std::cout << "lambda2: " << swarm::fmt_double(b1.lambda2) << '\n'
                      << "total_weight: " << swarm::fmt_double(b1.total_weight) << '\n'
                      << "rho: " << swarm::fmt_double(b1.rho) << '\n'
                      << "threshold_v: " << swarm::fmt_double(*b1.threshold_v) << '\n'
                      << "rho_star: " << swarm::fmt_double(b2.rho) << '\n'
                      << "equilibrium_distance: "
                      << swarm::fmt_double(swarm::equilibrium_distance(*g)) << '\n';
        } else {
            const auto b2 = swarm::bounded_repulsion_cohesion_bound(
                std::get<swarm::GeneralKernel>(kernel), w);
            std::cout << "lambda2: " << swarm::fmt_double(b2.lambda2) << '\n'
                      << "total_weight: " << swarm::fmt_double(b2.total_weight) << '\n'
                      << "rho: n/a\n"
                      << "rho_star: " << swarm::fmt_double(b2.rho) << '\n';
        }
        return 0;
    } catch (const swarm::GenerationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return code(ExitCode::generation_error);
    } catch (const swarm::SwarmError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return code(ExitCode::config_error);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonreciprocal swarm aggregation: simulate, bound, verify"};
    app.set_version_flag("--version", std::string(swarm::software_version()));
    app.require_subcommand(1);

    std::string output;
    std::string backend = "auto";

    std::string run_config;
    auto* run = app.add_subcommand("run", "Simulate one scenario and write artifacts");
    run->add_option("config", run_config, "Scenario config (.ini)")->required();
    run->add_option("-o,--output", output, "Output root (default $SWARM_OUTPUT_ROOT or ./runs)");
    run->add_option("--backend", backend, "Force backend")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    std::string batch_dir;
    std::size_t parallel = 1;
    auto* batch = app.add_subcommand("batch", "Run every .ini scenario in a directory");
    batch->add_option("dir", batch_dir, "Directory of scenario configs")->required();
    batch->add_option("-p,--parallel", parallel, "Concurrent scenarios")->check(CLI::PositiveNumber);
    batch->add_option("-o,--output", output, "Output root (default $SWARM_OUTPUT_ROOT or ./runs)");
    batch->add_option("--backend", backend, "Force backend")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    std::string matrix_file;
    auto* validate = app.add_subcommand("validate-coupling", "Check a coupling matrix file");
    validate->add_option("matrix", matrix_file, "Whitespace-separated matrix file")->required();

    std::string bounds_config;
    auto* bounds = app.add_subcommand("bounds", "Print lambda2, M, rho, rho* without simulating");
    bounds->add_option("config", bounds_config, "Scenario config (.ini)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help/--version exit 0; every usage error shares the config-error code.
        return app.exit(e) == 0 ? 0 : code(ExitCode::config_error);
    }

    if (*run) return cmd_run(run_config, output, backend);
    if (*batch) return cmd_batch(batch_dir, parallel, output, backend);
    if (*validate) return cmd_validate(matrix_file);
    if (*bounds) return cmd_bounds(bounds_config);
    return 0;
}
