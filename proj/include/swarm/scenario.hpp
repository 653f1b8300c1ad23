#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swarm/analysis.hpp"
#include "swarm/coupling.hpp"
#include "swarm/integrator.hpp"
#include "swarm/kernel.hpp"

namespace swarm {

struct KernelSpec {
    std::string type = "gaussian";  // gaussian | general
    std::string name;               // registered general kernel
    double a = 1.0;
    double b = 20.0;
    double c = 0.2;

    InteractionKernel build() const;
};

struct CouplingSpec {
    enum class Source { generate, file };
    Source source = Source::generate;
    std::filesystem::path file;
    double density = 0.5;
    double weight_scale = 1.0;
    std::uint64_t seed = 0;
    bool symmetric = false;  // replace W by (W + W^T) / 2

    CouplingMatrix build(std::size_t n_agents) const;
};

struct InitialSpec {
    enum class Source { box, file };
    Source source = Source::box;
    std::filesystem::path file;
    double low = -5.0;
    double high = 5.0;
    std::uint64_t seed = 0;

    AgentMatrix build(std::size_t n_agents, std::size_t dim) const;
};

/// One fully resolved simulation: everything needed to reproduce a run.
struct Scenario {
    std::string name;
    std::filesystem::path source;
    std::size_t n_agents = 0;
    std::size_t dimension = 2;
    KernelSpec kernel;
    CouplingSpec coupling;
    InitialSpec initial;
    IntegrationConfig integration;
    double t_hold = 10.0;
    bool assert_contained = false;
};

/// INI-style config. Relative file paths resolve against `base_dir`.
/// Throws ConfigError on syntax errors, unknown keys, missing seeds, or
/// inconsistent values.
Scenario parse_scenario(std::istream& in, const std::filesystem::path& base_dir,
                        const std::string& default_name);
Scenario load_scenario(const std::filesystem::path& path);

/// Resolved config as ordered (key, value) pairs, e.g. ("kernel.a", "1").
std::vector<std::pair<std::string, std::string>> describe(const Scenario& s);

/// Uniform box positions, deterministic in the seed.
AgentMatrix uniform_box(std::size_t n_agents, std::size_t dim, double low, double high,
                        std::uint64_t seed);

// Process exit status of the scenario runner.
enum class ExitCode : int {
    ok = 0,
    not_contained = 1,
    config_error = 2,
    generation_error = 3,
    divergence = 4,
    failure = 5,
};

std::string_view exit_code_name(ExitCode c) noexcept;

struct RunResult {
    Scenario scenario;
    CouplingMatrix coupling{1, {0.0}};
    BoundReport report;
    Trajectory trajectory;
    CenterDrift drift;
    Backend backend = Backend::scalar;
};

/// Bound + simulation + containment, no I/O. Uses the Gaussian bound for
/// gaussian kernels and the bounded-repulsion bound otherwise.
RunResult simulate(const Scenario& scenario, Backend backend = simd::default_backend());

/// The cohesion bound a scenario's containment check uses.
CohesionBound scenario_bound(const Scenario& scenario, const CouplingMatrix& w);

/// Writes trajectory.csv, center.csv, series.csv, bound_report.txt,
/// center_summary.txt and manifest.csv into `dir`, replacing it atomically.
void write_artifacts(const RunResult& result, const std::filesystem::path& dir);

void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
Trajectory read_trajectory_csv(std::istream& in);
void write_series_csv(std::ostream& out, const Trajectory& traj, double rho);
void write_center_csv(std::ostream& out, const Trajectory& traj);

struct RunOutcome {
    ExitCode code = ExitCode::ok;
    std::string message;
    std::filesystem::path artifact_dir;
    std::optional<RunResult> result;
};

/// Loads, simulates and persists under output_root/<name>. Never throws for
/// scenario-level failures; they come back as an exit code and message.
RunOutcome run_scenario(const std::filesystem::path& config,
                        const std::filesystem::path& output_root,
                        Backend backend = simd::default_backend());

struct BatchRow {
    std::string scenario;
    ExitCode code = ExitCode::ok;
    std::string message;
    std::optional<std::uint64_t> seed;
    std::optional<double> lambda2;
    std::optional<double> total_weight;
    std::optional<double> rho;
    std::optional<double> entry_time;
    bool contained = false;
    std::optional<double> max_dispersion_ratio;
};

/// Runs every *.ini in `dir` with up to `parallelism` workers. Rows are
/// sorted by scenario name; failures stay in their own row. Also writes
/// output_root/batch_summary.csv.
std::vector<BatchRow> run_batch(const std::filesystem::path& dir, std::size_t parallelism,
                                const std::filesystem::path& output_root,
                                Backend backend = simd::default_backend());

void write_batch_csv(std::ostream& out, const std::vector<BatchRow>& rows);

/// Output root from SWARM_OUTPUT_ROOT, default "runs".
std::filesystem::path default_output_root();

std::string_view software_version() noexcept;

}  // namespace swarm
