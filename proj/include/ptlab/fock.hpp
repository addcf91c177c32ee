#ifndef PTLAB_FOCK_HPP
#define PTLAB_FOCK_HPP

#include <map>
#include <string_view>
#include <variant>
#include <vector>

#include "ptlab/params.hpp"
#include "ptlab/types.hpp"

namespace ptlab {

inline constexpr int kDefaultDimensionCap = 4096;

/// Per-mode truncation |n1> (x) |n2>, 0 <= n_j <= n_max. Basis index is
/// n1 * (n_max + 1) + n2.
class FockSpec
{
public:
    explicit FockSpec(int n_max, int dimension_cap = kDefaultDimensionCap);

    /// Recovers the spec from a two-mode dimension (n_max + 1)^2.
    static FockSpec from_dimension(Eigen::Index dim);

    int n_max() const noexcept { return m_n_max; }
    int levels() const noexcept { return m_n_max + 1; }
    int dim() const noexcept { return levels() * levels(); }
    int index(int n1, int n2) const noexcept { return n1 * levels() + n2; }

private:
    int m_n_max;
};

struct OperatorSet
{
    FockSpec spec;
    MatX x1, x2, p1, p2;
    // Diagonals of the parity operators: P = P1 P2 with P_j = (-1)^{n_j}.
    Eigen::VectorXd parity;
    Eigen::VectorXd parity1;
    Eigen::VectorXd parity2;

    // Single-mode factors the two-mode operators are built from.
    MatX x;
    MatX p;
};

/// x = (a + a^dagger)/sqrt 2, p = i (a^dagger - a)/sqrt 2 per mode, so that plain
/// complex conjugation in the Fock basis is time reversal.
OperatorSet build_operators(const FockSpec& spec);

/// Truncated Hamiltonian from products of truncated factors. Exactly symmetric.
MatX build_hamiltonian(const ModelParams& p, const OperatorSet& ops);
MatX build_hamiltonian(const ModelParams& p, const FockSpec& spec);

/// kron(a, b) with a acting on mode 1.
MatX kron(const MatX& a, const MatX& b);

/// v -> matrix * conj(v)
struct AntilinearOp
{
    MatX matrix;
    bool conjugates = true;

    VecX apply(const VecX& v) const;
};

enum class MetricName { P, P1, P2, T, PT };

std::string_view to_string(MetricName name) noexcept;
MetricName metric_from_string(std::string_view name);
const std::vector<MetricName>& all_metrics();

/// Metric operator eta for pseudo-Hermiticity H = eta^-1 H^dagger eta. Linear
/// metrics hold a matrix, antilinear ones an AntilinearOp; the two are never
/// interchanged.
class EtaMetric
{
public:
    EtaMetric(MetricName name, MatX linear);
    EtaMetric(MetricName name, AntilinearOp antilinear);

    MetricName name() const noexcept { return m_name; }
    bool is_linear() const noexcept { return std::holds_alternative<MatX>(m_rep); }
    Eigen::Index dim() const;

    const MatX& linear() const;
    const AntilinearOp& antilinear() const;

    VecX apply(const VecX& v) const;

private:
    MetricName m_name;
    std::variant<MatX, AntilinearOp> m_rep;
};

EtaMetric make_metric(MetricName name, const OperatorSet& ops);

/// eta^-1 A^dagger eta; for an antilinear eta = (M, conj) this is conj(M)^-1 A^T conj(M).
MatX pseudo_adjoint(const MatX& a, const EtaMetric& eta);

/// ||A - pseudo_adjoint(A, eta)||_max
double pseudo_hermiticity_residual(const MatX& a, const EtaMetric& eta);

struct SymmetryReport
{
    double hermiticity_residual;  // ||H - H^dagger||
    double pt_symmetry_residual;  // ||H - P conj(H) P||
    std::map<MetricName, double> pseudo_residuals;
};

SymmetryReport check_symmetries(const MatX& h, const OperatorSet& ops);
SymmetryReport check_symmetries(const ModelParams& p, const FockSpec& spec);

} // namespace ptlab

#endif
