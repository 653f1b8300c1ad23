#include "swarm/scenario.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "swarm/errors.hpp"
#include "swarm/format.hpp"
#include "swarm/random.hpp"

#ifndef SWARM_VERSION
#define SWARM_VERSION "0.0.0"
#endif

namespace swarm {

namespace fs = std::filesystem;
namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys = {
        {"scenario", {"name"}},
        {"swarm", {"n_agents", "dimension"}},
        {"kernel", {"type", "name", "a", "b", "c"}},
        {"coupling", {"source", "file", "density", "weight_scale", "seed", "symmetric"}},
        {"initial", {"source", "file", "low", "high", "seed"}},
        {"integration", {"method", "dt", "t_end", "record_stride"}},
        {"analysis", {"t_hold", "assert_contained"}},
    };
    return keys;
}

class ConfigReader {
public:
    explicit ConfigReader(const pt::ptree& tree) : tree_(tree) {}

    std::optional<std::string> text(const std::string& key) const {
        auto v = tree_.get_optional<std::string>(pt::ptree::path_type(key, '.'));
        if (!v) return std::nullopt;
        std::string s = *v;
        const auto first = s.find_first_not_of(" \t");
        const auto last = s.find_last_not_of(" \t\r");
        return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
    }

    std::string text_or(const std::string& key, const std::string& fallback) const {
        return text(key).value_or(fallback);
    }

    std::optional<double> number(const std::string& key) const {
        auto t = text(key);
        if (!t) return std::nullopt;
        return parse_double(*t, key);
    }

    double number_or(const std::string& key, double fallback) const {
        return number(key).value_or(fallback);
    }

    std::optional<std::uint64_t> count(const std::string& key) const {
        auto t = text(key);
        if (!t) return std::nullopt;
        std::uint64_t v = 0;
        const auto res = std::from_chars(t->data(), t->data() + t->size(), v);
        if (res.ec != std::errc() || res.ptr != t->data() + t->size() || t->empty()) {
            throw ConfigError("invalid nonnegative integer for " + key + ": '" + *t + "'");
        }
        return v;
    }

    std::optional<bool> flag(const std::string& key) const {
        auto t = text(key);
        if (!t) return std::nullopt;
        if (*t == "true") return true;
        if (*t == "false") return false;
        throw ConfigError("expected true/false for " + key + ", got '" + *t + "'");
    }

private:
    const pt::ptree& tree_;
};

void check_keys(const pt::ptree& tree) {
    const auto& keys = known_keys();
    for (const auto& [section, body] : tree) {
        auto it = keys.find(section);
        if (it == keys.end()) throw ConfigError("unknown config section or key '" + section + "'");
        if (body.empty()) throw ConfigError("'" + section + "' must be a [section]");
        for (const auto& [key, value] : body) {
            if (!it->second.contains(key)) {
                throw ConfigError("unknown key '" + key + "' in [" + section + "]");
            }
        }
    }
}

fs::path resolve(const fs::path& base, const std::string& p) {
    fs::path path(p);
    return path.is_absolute() ? path : base / path;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

template <class F>
void write_file(const fs::path& path, F&& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SwarmError("cannot write " + path.string());
    body(out);
    out.flush();
    if (!out) throw SwarmError("write failed for " + path.string());
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

InteractionKernel KernelSpec::build() const {
    if (type == "gaussian") return GaussianKernel(a, b, c);
    if (type == "general") return general_kernel_by_name(name, a, b, c);
    throw ConfigError("unknown kernel type '" + type + "'");
}

CouplingMatrix CouplingSpec::build(std::size_t n_agents) const {
    CouplingMatrix w = source == Source::file
                           ? read_coupling_file(file)
                           : generate_balanced(n_agents, density, weight_scale, seed);
    if (w.size() != n_agents) {
        throw ConfigError("coupling matrix is " + std::to_string(w.size()) + "x" +
                          std::to_string(w.size()) + " but n_agents = " +
                          std::to_string(n_agents));
    }
    return symmetric ? w.symmetrized() : w;
}

AgentMatrix uniform_box(std::size_t n_agents, std::size_t dim, double low, double high,
                        std::uint64_t seed) {
    Rng rng(seed);
    AgentMatrix x(n_agents, dim);
    for (double& v : x.data()) v = rng.uniform(low, high);
    return x;
}

AgentMatrix InitialSpec::build(std::size_t n_agents, std::size_t dim) const {
    if (source == Source::box) return uniform_box(n_agents, dim, low, high, seed);
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open initial positions file " + file.string());
    const auto rows = read_number_rows(in);
    if (rows.size() != n_agents) {
        throw ConfigError("initial positions file has " + std::to_string(rows.size()) +
                          " rows, expected " + std::to_string(n_agents));
    }
    AgentMatrix x(n_agents, dim);
    for (std::size_t i = 0; i < n_agents; ++i) {
        if (rows[i].size() != dim) {
            throw ConfigError("initial positions row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) + " coordinates, expected " +
                              std::to_string(dim));
        }
        std::copy(rows[i].begin(), rows[i].end(), x.row(i).begin());
    }
    return x;
}

Scenario parse_scenario(std::istream& in, const fs::path& base_dir,
                        const std::string& default_name) {
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config syntax: ") + e.what());
    }
    check_keys(tree);
    const ConfigReader cfg(tree);

    Scenario s;
    s.name = cfg.text_or("scenario.name", default_name);
    if (s.name.empty() || s.name.find_first_of("/\\") != std::string::npos) {
        throw ConfigError("scenario.name must be a nonempty plain name");
    }

    s.kernel.type = cfg.text_or("kernel.type", "gaussian");
    s.kernel.name = cfg.text_or("kernel.name", "");
    s.kernel.a = cfg.number_or("kernel.a", s.kernel.a);
    s.kernel.b = cfg.number_or("kernel.b", s.kernel.b);
    s.kernel.c = cfg.number_or("kernel.c", s.kernel.c);
    try {
        (void)s.kernel.build();
    } catch (const InvalidInputError& e) {
        throw ConfigError(std::string("kernel: ") + e.what());
    }

    const std::string csrc = cfg.text_or("coupling.source", "generate");
    if (csrc == "generate") {
        s.coupling.source = CouplingSpec::Source::generate;
        auto seed = cfg.count("coupling.seed");
        if (!seed) throw ConfigError("coupling.seed is required for generated couplings");
        s.coupling.seed = *seed;
    } else if (csrc == "file") {
        s.coupling.source = CouplingSpec::Source::file;
        auto f = cfg.text("coupling.file");
        if (!f) throw ConfigError("coupling.file is required when coupling.source = file");
        s.coupling.file = resolve(base_dir, *f);
        if (!fs::exists(s.coupling.file)) {
            throw ConfigError("coupling file not found: " + s.coupling.file.string());
        }
    } else {
        throw ConfigError("coupling.source must be generate or file");
    }
    s.coupling.density = cfg.number_or("coupling.density", s.coupling.density);
    s.coupling.weight_scale = cfg.number_or("coupling.weight_scale", s.coupling.weight_scale);
    s.coupling.symmetric = cfg.flag("coupling.symmetric").value_or(false);

    if (auto n = cfg.count("swarm.n_agents")) {
        s.n_agents = *n;
    } else if (s.coupling.source == CouplingSpec::Source::file) {
        s.n_agents = read_coupling_file(s.coupling.file).size();
    } else {
        throw ConfigError("swarm.n_agents is required");
    }
    if (s.n_agents == 0) throw ConfigError("swarm.n_agents must be >= 1");
    s.dimension = cfg.count("swarm.dimension").value_or(2);
    if (s.dimension == 0) throw ConfigError("swarm.dimension must be >= 1");

    const std::string isrc = cfg.text_or("initial.source", "box");
    if (isrc == "box") {
        s.initial.source = InitialSpec::Source::box;
        auto seed = cfg.count("initial.seed");
        if (!seed) throw ConfigError("initial.seed is required for box initial conditions");
        s.initial.seed = *seed;
        s.initial.low = cfg.number_or("initial.low", s.initial.low);
        s.initial.high = cfg.number_or("initial.high", s.initial.high);
        if (!(s.initial.low < s.initial.high)) throw ConfigError("initial.low must be < high");
    } else if (isrc == "file") {
        s.initial.source = InitialSpec::Source::file;
        auto f = cfg.text("initial.file");
        if (!f) throw ConfigError("initial.file is required when initial.source = file");
        s.initial.file = resolve(base_dir, *f);
        if (!fs::exists(s.initial.file)) {
            throw ConfigError("initial positions file not found: " + s.initial.file.string());
        }
    } else {
        throw ConfigError("initial.source must be box or file");
    }

    s.integration.method = parse_method(cfg.text_or("integration.method", "rk4"));
    s.integration.dt = cfg.number_or("integration.dt", s.integration.dt);
    s.integration.t_end = cfg.number_or("integration.t_end", s.integration.t_end);
    s.integration.record_stride =
        cfg.count("integration.record_stride").value_or(s.integration.record_stride);
    try {
        s.integration.validate();
    } catch (const InvalidInputError& e) {
        throw ConfigError(std::string("integration: ") + e.what());
    }

    s.t_hold = cfg.number_or("analysis.t_hold", s.t_hold);
    if (!(s.t_hold >= 0.0)) throw ConfigError("analysis.t_hold must be >= 0");
    s.assert_contained = cfg.flag("analysis.assert_contained").value_or(false);
    return s;
}

Scenario load_scenario(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    Scenario s = parse_scenario(in, path.parent_path(), path.stem().string());
    s.source = path;
    return s;
}

std::vector<std::pair<std::string, std::string>> describe(const Scenario& s) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("scenario.name", s.name);
    kv.emplace_back("scenario.source", s.source.string());
    kv.emplace_back("swarm.n_agents", std::to_string(s.n_agents));
    kv.emplace_back("swarm.dimension", std::to_string(s.dimension));
    kv.emplace_back("kernel.type", s.kernel.type);
    if (s.kernel.type == "general") kv.emplace_back("kernel.name", s.kernel.name);
    kv.emplace_back("kernel.a", fmt_double(s.kernel.a));
    kv.emplace_back("kernel.b", fmt_double(s.kernel.b));
    kv.emplace_back("kernel.c", fmt_double(s.kernel.c));
    if (s.coupling.source == CouplingSpec::Source::file) {
        kv.emplace_back("coupling.source", "file");
        kv.emplace_back("coupling.file", s.coupling.file.string());
    } else {
        kv.emplace_back("coupling.source", "generate");
        kv.emplace_back("coupling.density", fmt_double(s.coupling.density));
        kv.emplace_back("coupling.weight_scale", fmt_double(s.coupling.weight_scale));
        kv.emplace_back("coupling.seed", std::to_string(s.coupling.seed));
    }
    kv.emplace_back("coupling.symmetric", s.coupling.symmetric ? "true" : "false");
    if (s.initial.source == InitialSpec::Source::file) {
        kv.emplace_back("initial.source", "file");
        kv.emplace_back("initial.file", s.initial.file.string());
    } else {
        kv.emplace_back("initial.source", "box");
        kv.emplace_back("initial.low", fmt_double(s.initial.low));
        kv.emplace_back("initial.high", fmt_double(s.initial.high));
        kv.emplace_back("initial.seed", std::to_string(s.initial.seed));
    }
    kv.emplace_back("integration.method", std::string(method_name(s.integration.method)));
    kv.emplace_back("integration.dt", fmt_double(s.integration.dt));
    kv.emplace_back("integration.t_end", fmt_double(s.integration.t_end));
    kv.emplace_back("integration.record_stride", std::to_string(s.integration.record_stride));
    kv.emplace_back("analysis.t_hold", fmt_double(s.t_hold));
    kv.emplace_back("analysis.assert_contained", s.assert_contained ? "true" : "false");
    return kv;
}

std::string_view exit_code_name(ExitCode c) noexcept {
    switch (c) {
        case ExitCode::ok: return "ok";
        case ExitCode::not_contained: return "not-contained";
        case ExitCode::config_error: return "config-error";
        case ExitCode::generation_error: return "generation-error";
        case ExitCode::divergence: return "divergence";
        case ExitCode::failure: return "failure";
    }
    return "failure";
}

CohesionBound scenario_bound(const Scenario& scenario, const CouplingMatrix& w) {
    const InteractionKernel kernel = scenario.kernel.build();
    if (const auto* g = std::get_if<GaussianKernel>(&kernel)) return gaussian_cohesion_bound(*g, w);
    return bounded_repulsion_cohesion_bound(std::get<GeneralKernel>(kernel), w);
}

RunResult simulate(const Scenario& scenario, Backend backend) {
    RunResult r;
    r.scenario = scenario;
    r.coupling = scenario.coupling.build(scenario.n_agents);
    r.report.bound = scenario_bound(scenario, r.coupling);
    const InteractionKernel kernel = scenario.kernel.build();
    const SwarmState initial{scenario.initial.build(scenario.n_agents, scenario.dimension), 0.0};
    const ForceField probe(r.coupling, kernel, backend);
    r.backend = probe.backend();
    r.trajectory = integrate(initial, r.coupling, kernel, scenario.integration, backend);
    r.report.containment = containment_check(r.trajectory, r.report.bound.rho, scenario.t_hold);
    r.drift = center_drift_summary(r.trajectory);
    return r;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << "t,agent";
    for (std::size_t k = 0; k < traj.dim(); ++k) out << ",x" << k;
    out << '\n';
    for (std::size_t s = 0; s < traj.size(); ++s) {
        const std::string t = fmt_double(traj.times()[s]);
        const auto& x = traj.positions(s);
        for (std::size_t i = 0; i < x.agents(); ++i) {
            out << t << ',' << i;
            for (std::size_t k = 0; k < x.dim(); ++k) out << ',' << fmt_double(x(i, k));
            out << '\n';
        }
    }
}

Trajectory read_trajectory_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("trajectory csv is empty");
    const auto header = split_csv_line(line);
    if (header.size() < 3 || header[0] != "t" || header[1] != "agent") {
        throw ConfigError("trajectory csv: bad header '" + line + "'");
    }
    const std::size_t dim = header.size() - 2;
    for (std::size_t k = 0; k < dim; ++k) {
        if (header[k + 2] != "x" + std::to_string(k)) {
            throw ConfigError("trajectory csv: bad column '" + header[k + 2] + "'");
        }
    }

    std::vector<double> times;
    std::vector<std::vector<double>> blocks;  // per time, agent-major coords
    std::size_t agents = 0;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto cols = split_csv_line(line);
        if (cols.size() != dim + 2) {
            throw ConfigError("trajectory csv line " + std::to_string(lineno) +
                              ": wrong column count");
        }
        const double t = parse_double(cols[0], "t");
        const auto agent = static_cast<std::size_t>(parse_double(cols[1], "agent"));
        if (times.empty() || t != times.back()) {
            times.push_back(t);
            blocks.emplace_back();
        }
        if (agent != blocks.back().size() / dim) {
            throw ConfigError("trajectory csv line " + std::to_string(lineno) +
                              ": agents out of order");
        }
        for (std::size_t k = 0; k < dim; ++k) blocks.back().push_back(parse_double(cols[k + 2], "x"));
    }
    if (blocks.empty()) throw ConfigError("trajectory csv has no samples");
    agents = blocks.front().size() / dim;
    Trajectory traj(agents, dim);
    for (std::size_t s = 0; s < times.size(); ++s) {
        if (blocks[s].size() != agents * dim) {
            throw ConfigError("trajectory csv: sample at t=" + fmt_double(times[s]) +
                              " has the wrong number of agents");
        }
        traj.record(times[s], AgentMatrix(agents, dim, std::move(blocks[s])));
    }
    return traj;
}

void write_series_csv(std::ostream& out, const Trajectory& traj, double rho) {
    const std::string rho_sq = fmt_double(rho * rho);
    out << "t,V,dispersion,rho_sq\n";
    for (std::size_t s = 0; s < traj.size(); ++s) {
        out << fmt_double(traj.times()[s]) << ',' << fmt_double(traj.lyapunov_values()[s]) << ','
            << fmt_double(traj.dispersions()[s]) << ',' << rho_sq << '\n';
    }
}

void write_center_csv(std::ostream& out, const Trajectory& traj) {
    out << "t";
    for (std::size_t k = 0; k < traj.dim(); ++k) out << ",c" << k;
    out << '\n';
    for (std::size_t s = 0; s < traj.size(); ++s) {
        out << fmt_double(traj.times()[s]);
        for (double c : traj.center(s)) out << ',' << fmt_double(c);
        out << '\n';
    }
}

void write_artifacts(const RunResult& r, const fs::path& dir) {
    const fs::path staging = dir.parent_path() / (dir.filename().string() + ".partial");
    fs::remove_all(staging);
    fs::create_directories(staging);

    write_file(staging / "trajectory.csv", [&](std::ostream& o) { write_trajectory_csv(o, r.trajectory); });
    write_file(staging / "center.csv", [&](std::ostream& o) { write_center_csv(o, r.trajectory); });
    write_file(staging / "series.csv",
               [&](std::ostream& o) { write_series_csv(o, r.trajectory, r.report.bound.rho); });
    write_file(staging / "bound_report.txt", [&](std::ostream& o) { write_bound_report(o, r.report); });
    write_file(staging / "coupling.txt", [&](std::ostream& o) { write_coupling(o, r.coupling); });
    write_file(staging / "center_summary.txt", [&](std::ostream& o) {
        o << "net_displacement: " << fmt_double(r.drift.net_displacement) << '\n'
          << "path_length: " << fmt_double(r.drift.path_length) << '\n'
          << "total_turning: "
          << (r.drift.total_turning ? fmt_double(*r.drift.total_turning) : "n/a") << '\n';
    });
    write_file(staging / "manifest.csv", [&](std::ostream& o) {
        const auto& b = r.report.bound;
        const auto& c = r.report.containment;
        o << "key,value\n";
        o << "software_version," << software_version() << '\n';
        o << "force_backend," << simd::backend_name(r.backend) << '\n';
        for (const auto& [k, v] : describe(r.scenario)) o << k << ',' << csv_escape(v) << '\n';
        o << "bound.kind," << bound_kind_name(b.kind) << '\n'
          << "bound.lambda2," << fmt_double(b.lambda2) << '\n'
          << "bound.total_weight," << fmt_double(b.total_weight) << '\n'
          << "bound.rho," << fmt_double(b.rho) << '\n'
          << "bound.threshold_v," << (b.threshold_v ? fmt_double(*b.threshold_v) : "") << '\n'
          << "containment.entry_time," << (c.entry_time ? fmt_double(*c.entry_time) : "") << '\n'
          << "containment.contained," << (c.contained ? "true" : "false") << '\n'
          << "containment.max_dispersion_ratio," << fmt_double(c.max_dispersion_ratio()) << '\n'
          << "diagnostics.coincidence_samples," << r.trajectory.coincidence_samples << '\n'
          << "diagnostics.clamped_evaluations," << r.trajectory.clamped_evaluations << '\n';
    });

    fs::remove_all(dir);
    fs::rename(staging, dir);
}

RunOutcome run_scenario(const fs::path& config, const fs::path& output_root, Backend backend) {
    RunOutcome out;
    try {
        const Scenario s = load_scenario(config);
        out.artifact_dir = output_root / s.name;
        RunResult r = simulate(s, backend);
        fs::create_directories(output_root);
        write_artifacts(r, out.artifact_dir);
        const bool contained = r.report.containment.contained;
        out.code = (s.assert_contained && !contained) ? ExitCode::not_contained : ExitCode::ok;
        out.message = contained ? "contained" : "not contained";
        out.result = std::move(r);
    } catch (const ConfigError& e) {
        out.code = ExitCode::config_error;
        out.message = e.what();
    } catch (const GenerationError& e) {
        out.code = ExitCode::generation_error;
        out.message = e.what();
    } catch (const DivergenceError& e) {
        out.code = ExitCode::divergence;
        out.message = e.what();
    } catch (const PreconditionError& e) {
        out.code = ExitCode::config_error;
        out.message = e.what();
    } catch (const DegenerateSpectrumError& e) {
        out.code = ExitCode::config_error;
        out.message = e.what();
    } catch (const InvalidInputError& e) {
        out.code = ExitCode::config_error;
        out.message = e.what();
    } catch (const std::exception& e) {
        out.code = ExitCode::failure;
        out.message = e.what();
    }
    if (out.code != ExitCode::ok && out.code != ExitCode::not_contained) out.artifact_dir.clear();
    return out;
}

std::vector<BatchRow> run_batch(const fs::path& dir, std::size_t parallelism,
                                const fs::path& output_root, Backend backend) {
    if (!fs::is_directory(dir)) throw ConfigError("not a directory: " + dir.string());
    std::vector<fs::path> configs;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".ini") {
            configs.push_back(entry.path());
        }
    }
    std::sort(configs.begin(), configs.end());

    std::vector<BatchRow> rows(configs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < configs.size(); k = next++) {
            BatchRow& row = rows[k];
            row.scenario = configs[k].stem().string();
            RunOutcome o = run_scenario(configs[k], output_root, backend);
            row.code = o.code;
            row.message = o.message;
            if (o.result) {
                const auto& r = *o.result;
                row.scenario = r.scenario.name;
                if (r.scenario.coupling.source == CouplingSpec::Source::generate)
                    row.seed = r.scenario.coupling.seed;
                row.lambda2 = r.report.bound.lambda2;
                row.total_weight = r.report.bound.total_weight;
                row.rho = r.report.bound.rho;
                row.entry_time = r.report.containment.entry_time;
                row.contained = r.report.containment.contained;
                row.max_dispersion_ratio = r.report.containment.max_dispersion_ratio();
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(parallelism, 1, std::max<std::size_t>(1, configs.size()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
        worker();
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const BatchRow& x, const BatchRow& y) { return x.scenario < y.scenario; });

    fs::create_directories(output_root);
    write_file(output_root / "batch_summary.csv", [&](std::ostream& o) { write_batch_csv(o, rows); });
    return rows;
}

void write_batch_csv(std::ostream& out, const std::vector<BatchRow>& rows) {
    auto opt = [](const std::optional<double>& v) { return v ? fmt_double(*v) : std::string(); };
    out << "scenario,status,seed,lambda2,M,rho,entry_time,contained,max_dispersion_ratio,message\n";
    for (const auto& r : rows) {
        out << csv_escape(r.scenario) << ',' << exit_code_name(r.code) << ','
            << (r.seed ? std::to_string(*r.seed) : "") << ',' << opt(r.lambda2) << ','
            << opt(r.total_weight) << ',' << opt(r.rho) << ',' << opt(r.entry_time) << ','
            << (r.contained ? "true" : "false") << ',' << opt(r.max_dispersion_ratio) << ','
            << csv_escape(r.message) << '\n';
    }
}

fs::path default_output_root() {
    if (const char* env = std::getenv("SWARM_OUTPUT_ROOT"); env && *env) return env;
    return "runs";
}

std::string_view software_version() noexcept { return SWARM_VERSION; }

}  // namespace swarm
