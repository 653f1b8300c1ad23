#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace swarm {

// Per-index balance tolerance |row sum - column sum|.
inline constexpr double kBalanceTolerance = 1e-12;

/// Square nonnegative coupling weights w_ij (row i = how agent i weights
/// agent j). The diagonal and balance are not enforced here; see
/// validate_coupling().
class CouplingMatrix {
public:
    /// Row-major N x N weights. Throws InvalidInputError when the size is
    /// not a positive square or any weight is negative or non-finite.
    CouplingMatrix(std::size_t n_agents, std::vector<double> weights);

    static CouplingMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return w_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const noexcept {
        return {w_.data() + i * n_, n_};
    }
    std::span<const double> data() const noexcept { return w_; }

    bool is_symmetric() const noexcept;
    CouplingMatrix scaled(double factor) const;
    /// (W + W^T) / 2
    CouplingMatrix symmetrized() const;

    friend bool operator==(const CouplingMatrix&, const CouplingMatrix&) = default;

private:
    std::size_t n_;
    std::vector<double> w_;
};

struct CouplingValidation {
    bool zero_diagonal = false;
    bool balanced = false;
    bool irreducible = false;
    double max_balance_residual = 0.0;

    bool ok() const noexcept { return zero_diagonal && balanced && irreducible; }
};

/// Checks each condition independently. Irreducibility is connectivity of
/// the undirected support graph of W + W^T.
CouplingValidation validate_coupling(const CouplingMatrix& w);

/// Random balanced coupling built as a positive combination of directed
/// simple cycles, always including one Hamiltonian cycle. `density` is the
/// target fraction of nonzero off-diagonal entries; weights per cycle are
/// uniform in (0, weight_scale]. Deterministic for a fixed seed.
CouplingMatrix generate_balanced(std::size_t n_agents, double density,
                                 double weight_scale, std::uint64_t seed);

/// Laplacian L of W and its symmetrization L + L^T with sorted spectrum.
class LaplacianPair {
public:
    std::size_t size() const noexcept { return n_; }
    double laplacian(std::size_t i, std::size_t j) const noexcept { return l_[i * n_ + j]; }
    double symmetric(std::size_t i, std::size_t j) const noexcept { return ls_[i * n_ + j]; }
    std::span<const double> symmetric_data() const noexcept { return ls_; }
    /// Ascending eigenvalues of L + L^T.
    std::span<const double> eigenvalues() const noexcept { return eig_; }

    /// e^T ((L + L^T) x I) e for agent-major e (N blocks of `dim`), without
    /// forming the Kronecker product.
    double quadratic_form(std::span<const double> e, std::size_t dim) const;

private:
    friend LaplacianPair laplacian(const CouplingMatrix& w);
    LaplacianPair() = default;

    std::size_t n_ = 0;
    std::vector<double> l_;
    std::vector<double> ls_;
    std::vector<double> eig_;
};

/// Throws PreconditionError unless W has a zero diagonal and is balanced.
/// Connectivity is left to lambda2().
LaplacianPair laplacian(const CouplingMatrix& w);

/// Second-smallest eigenvalue of L + L^T. Throws DegenerateSpectrumError when
/// it is below 1e-10 times the spectral radius (disconnected graph).
double lambda2(const LaplacianPair& pair);

/// M = sum_ij w_ij
double total_weight(const CouplingMatrix& w);

/// Whitespace-separated rows; '#' starts a comment. Throws ConfigError.
CouplingMatrix read_coupling(std::istream& in);
CouplingMatrix read_coupling_file(const std::filesystem::path& path);
void write_coupling(std::ostream& out, const CouplingMatrix& w);

}  // namespace swarm
