#include "swarm/coupling.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "swarm/errors.hpp"
#include "swarm/format.hpp"
#include "swarm/random.hpp"

namespace swarm {

CouplingMatrix::CouplingMatrix(std::size_t n_agents, std::vector<double> weights)
    : n_(n_agents), w_(std::move(weights)) {
    if (n_ == 0 || w_.size() != n_ * n_) {
        throw InvalidInputError("coupling matrix must be a nonempty square matrix");
    }
    for (double v : w_) {
        if (!std::isfinite(v) || v < 0.0) {
            throw InvalidInputError("coupling weights must be finite and nonnegative");
        }
    }
}

CouplingMatrix CouplingMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw InvalidInputError("coupling matrix rows must have length N");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return CouplingMatrix(n, std::move(flat));
}

bool CouplingMatrix::is_symmetric() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

CouplingMatrix CouplingMatrix::scaled(double factor) const {
    std::vector<double> w = w_;
    for (double& v : w) v *= factor;
    return CouplingMatrix(n_, std::move(w));
}

CouplingMatrix CouplingMatrix::symmetrized() const {
    std::vector<double> w(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            w[i * n_ + j] = 0.5 * ((*this)(i, j) + (*this)(j, i));
    return CouplingMatrix(n_, std::move(w));
}

CouplingValidation validate_coupling(const CouplingMatrix& w) {
    const std::size_t n = w.size();
    CouplingValidation v;

    v.zero_diagonal = true;
    for (std::size_t i = 0; i < n; ++i)
        if (w(i, i) != 0.0) v.zero_diagonal = false;

    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        double col = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row += w(i, j);
            col += w(j, i);
        }
        v.max_balance_residual = std::max(v.max_balance_residual, std::abs(row - col));
    }
    v.balanced = v.max_balance_residual <= kBalanceTolerance;

    // Depth-first search over the support of W + W^T.
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j) {
            if (!seen[j] && (w(i, j) > 0.0 || w(j, i) > 0.0)) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
        }
    }
    v.irreducible = reached == n;
    return v;
}

CouplingMatrix generate_balanced(std::size_t n_agents, double density, double weight_scale,
                                 std::uint64_t seed) {
    if (n_agents < 2) throw InvalidInputError("generate_balanced needs N >= 2");
    if (!(density > 0.0 && density <= 1.0)) {
        throw InvalidInputError("density must lie in (0, 1]");
    }
    if (!(std::isfinite(weight_scale) && weight_scale > 0.0)) {
        throw InvalidInputError("weight_scale must be positive");
    }

    const std::size_t n = n_agents;
    Rng rng(seed);
    std::vector<double> w(n * n, 0.0);
    std::size_t nonzero = 0;

    std::vector<std::size_t> nodes(n);
    auto add_cycle = [&](std::size_t length) {
        // Partial Fisher-Yates: the first `length` entries form the cycle.
        std::iota(nodes.begin(), nodes.end(), std::size_t{0});
        for (std::size_t k = 0; k < length; ++k) {
            std::swap(nodes[k], nodes[k + rng.below(n - k)]);
        }
        const double weight = weight_scale * (1.0 - rng.uniform01());
        for (std::size_t k = 0; k < length; ++k) {
            double& entry = w[nodes[k] * n + nodes[(k + 1) % length]];
            if (entry == 0.0) ++nonzero;
            entry += weight;
        }
    };

    add_cycle(n);

    const std::size_t off_diagonal = n * (n - 1);
    const auto target = static_cast<std::size_t>(
        std::ceil(density * static_cast<double>(off_diagonal) - 1e-9));
    const std::size_t max_cycles = 50 * n * n + 100;
    std::size_t cycles = 0;
    while (nonzero < target) {
        if (++cycles > max_cycles) {
            throw GenerationError("could not reach density " + std::to_string(density) +
                                  " after " + std::to_string(max_cycles) + " cycles");
        }
        add_cycle(2 + rng.below(n - 1));
    }
    return CouplingMatrix(n, std::move(w));
}

LaplacianPair laplacian(const CouplingMatrix& w) {
    const auto check = validate_coupling(w);
    if (!check.zero_diagonal) throw PreconditionError("laplacian: W must have a zero diagonal");
    if (!check.balanced) {
        throw PreconditionError("laplacian: W is not balanced (residual " +
                                std::to_string(check.max_balance_residual) + ")");
    }

    const std::size_t n = w.size();
    LaplacianPair p;
    p.n_ = n;
    p.l_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double deg = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            p.l_[i * n + j] = -w(i, j);
            deg += w(i, j);
        }
        p.l_[i * n + i] = deg;
    }
    p.ls_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p.ls_[i * n + j] = p.l_[i * n + j] + p.l_[j * n + i];

    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = p.ls_[i * n + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw DegenerateSpectrumError("symmetric eigensolver did not converge");
    }
    const auto& ev = solver.eigenvalues();
    p.eig_.assign(ev.data(), ev.data() + ev.size());
    std::sort(p.eig_.begin(), p.eig_.end());
    return p;
}

double LaplacianPair::quadratic_form(std::span<const double> e, std::size_t dim) const {
    if (e.size() != n_ * dim) throw InvalidInputError("quadratic_form: size mismatch");
    double q = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const double lij = ls_[i * n_ + j];
            if (lij == 0.0) continue;
            double dot = 0.0;
            for (std::size_t k = 0; k < dim; ++k) dot += e[i * dim + k] * e[j * dim + k];
            q += lij * dot;
        }
    }
    return q;
}

double lambda2(const LaplacianPair& pair) {
    const auto ev = pair.eigenvalues();
    if (ev.size() < 2) throw DegenerateSpectrumError("lambda2 needs at least two agents");
    const double radius = std::max(std::abs(ev.front()), std::abs(ev.back()));
    const double l2 = ev[1];
    if (!(l2 > 1e-10 * radius)) {
        throw DegenerateSpectrumError("second eigenvalue of L + L^T is ~0: graph is disconnected");
    }
    return l2;
}

double total_weight(const CouplingMatrix& w) {
    double m = 0.0;
    for (double v : w.data()) m += v;
    return m;
}

CouplingMatrix read_coupling(std::istream& in) {
    const auto rows = read_number_rows(in);
    if (rows.empty()) throw ConfigError("coupling file is empty");
    try {
        return CouplingMatrix::from_rows(rows);
    } catch (const InvalidInputError& e) {
        throw ConfigError(std::string("coupling file: ") + e.what());
    }
}

CouplingMatrix read_coupling_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open coupling file " + path.string());
    return read_coupling(in);
}

void write_coupling(std::ostream& out, const CouplingMatrix& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j) out << (j ? " " : "") << fmt_double(w(i, j));
        out << '\n';
    }
}

}  // namespace swarm
