#include "ptlab/fock.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "ptlab/errors.hpp"

namespace ptlab {

namespace {

bool is_exactly_diagonal(const MatX& m)
{
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (i != j && m(i, j) != cplx(0.0)) return false;
    return true;
}

// conj(M)^-1 X conj(M) or M^-1 X M, exploiting the diagonal metrics we actually build.
MatX similarity(const MatX& m, const MatX& x)
{
    if (m.rows() != x.rows() || m.cols() != x.cols())
        throw Error(ErrorKind::DimensionMismatch,
                    fmt::format("metric is {}x{}, operator is {}x{}", m.rows(), m.cols(), x.rows(), x.cols()));
    if (is_exactly_diagonal(m)) {
        const VecX d = m.diagonal();
        for (Eigen::Index i = 0; i < d.size(); ++i)
            if (d(i) == cplx(0.0)) throw Error(ErrorKind::SingularMetric, "zero on metric diagonal");
        return d.cwiseInverse().asDiagonal() * x * d.asDiagonal();
    }
    Eigen::FullPivLU<MatX> lu(m);
    if (!lu.isInvertible()) throw Error(ErrorKind::SingularMetric, "metric is not invertible");
    return lu.solve(x * m);
}

} // namespace

FockSpec::FockSpec(int n_max, int dimension_cap) : m_n_max(n_max)
{
    if (n_max < 1) throw Error(ErrorKind::InvalidInput, fmt::format("n_max must be >= 1, got {}", n_max));
    if (dim() > dimension_cap)
        throw Error(ErrorKind::DimensionCap,
                    fmt::format("dimension {} for n_max {} exceeds cap {}", dim(), n_max, dimension_cap));
}

FockSpec FockSpec::from_dimension(Eigen::Index dim)
{
    const auto levels = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(dim))));
    if (levels * levels != dim)
        throw Error(ErrorKind::DimensionMismatch, fmt::format("{} is not a two-mode Fock dimension", dim));
    return FockSpec(static_cast<int>(levels - 1));
}

MatX kron(const MatX& a, const MatX& b)
{
    MatX out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

OperatorSet build_operators(const FockSpec& spec)
{
    const int n = spec.levels();
    MatX lower = MatX::Zero(n, n);
    for (int k = 1; k < n; ++k) lower(k - 1, k) = std::sqrt(static_cast<double>(k));
    const MatX raise = lower.transpose();
    const double r2 = std::sqrt(2.0);

    OperatorSet ops{spec, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    ops.x = (lower + raise) / r2;
    ops.p = kImag * (raise - lower) / r2;

    const MatX id = MatX::Identity(n, n);
    ops.x1 = kron(ops.x, id);
    ops.x2 = kron(id, ops.x);
    ops.p1 = kron(ops.p, id);
    ops.p2 = kron(id, ops.p);

    ops.parity.resize(spec.dim());
    ops.parity1.resize(spec.dim());
    ops.parity2.resize(spec.dim());
    for (int n1 = 0; n1 < n; ++n1)
        for (int n2 = 0; n2 < n; ++n2) {
            const int idx = spec.index(n1, n2);
            ops.parity1(idx) = n1 % 2 == 0 ? 1.0 : -1.0;
            ops.parity2(idx) = n2 % 2 == 0 ? 1.0 : -1.0;
            ops.parity(idx) = ops.parity1(idx) * ops.parity2(idx);
        }
    return ops;
}

MatX build_hamiltonian(const ModelParams& p, const OperatorSet& ops)
{
    const MatX id = MatX::Identity(ops.spec.levels(), ops.spec.levels());
    const MatX pp = ops.p * ops.p;
    const MatX xx = ops.x * ops.x;
    // kron(A, I) kron(B, I) = kron(AB, I) and kron(A, I) kron(I, B) = kron(A, B),
    // so this is the product-of-truncated-factors Hamiltonian without the d^3 cost.
    MatX h = 0.5 * (kron(pp, id) + kron(id, pp));
    h += 0.5 * (p.a1() * p.a1()) * kron(xx, id);
    h += 0.5 * (p.a2() * p.a2()) * kron(id, xx);
    h += (kImag * p.coupling()) * kron(ops.p, ops.p);
    return h;
}

MatX build_hamiltonian(const ModelParams& p, const FockSpec& spec)
{
    return build_hamiltonian(p, build_operators(spec));
}

VecX AntilinearOp::apply(const VecX& v) const
{
    return conjugates ? VecX(matrix * v.conjugate()) : VecX(matrix * v);
}

std::string_view to_string(MetricName name) noexcept
{
    switch (name) {
    case MetricName::P: return "P";
    case MetricName::P1: return "P1";
    case MetricName::P2: return "P2";
    case MetricName::T: return "T";
    case MetricName::PT: return "PT";
    }
    return "?";
}

MetricName metric_from_string(std::string_view name)
{
    for (MetricName m : all_metrics())
        if (to_string(m) == name) return m;
    throw Error(ErrorKind::InvalidInput, fmt::format("unknown metric '{}'", name));
}

const std::vector<MetricName>& all_metrics()
{
    static const std::vector<MetricName> names{MetricName::P, MetricName::P1, MetricName::P2, MetricName::T,
                                               MetricName::PT};
    return names;
}

EtaMetric::EtaMetric(MetricName name, MatX linear) : m_name(name), m_rep(std::move(linear)) {}

EtaMetric::EtaMetric(MetricName name, AntilinearOp antilinear) : m_name(name), m_rep(std::move(antilinear)) {}

Eigen::Index EtaMetric::dim() const
{
    return is_linear() ? linear().rows() : antilinear().matrix.rows();
}

const MatX& EtaMetric::linear() const
{
    if (!is_linear()) throw Error(ErrorKind::InvalidInput, fmt::format("metric {} is antilinear", to_string(m_name)));
    return std::get<MatX>(m_rep);
}

const AntilinearOp& EtaMetric::antilinear() const
{
    if (is_linear()) throw Error(ErrorKind::InvalidInput, fmt::format("metric {} is linear", to_string(m_name)));
    return std::get<AntilinearOp>(m_rep);
}

VecX EtaMetric::apply(const VecX& v) const
{
    if (v.size() != dim())
        throw Error(ErrorKind::DimensionMismatch, fmt::format("state has {} entries, metric {}", v.size(), dim()));
    return is_linear() ? VecX(linear() * v) : antilinear().apply(v);
}

EtaMetric make_metric(MetricName name, const OperatorSet& ops)
{
    const auto diag = [](const Eigen::VectorXd& d) -> MatX { return d.cast<cplx>().asDiagonal(); };
    switch (name) {
    case MetricName::P: return {name, diag(ops.parity)};
    case MetricName::P1: return {name, diag(ops.parity1)};
    case MetricName::P2: return {name, diag(ops.parity2)};
    case MetricName::T: return {name, AntilinearOp{MatX::Identity(ops.spec.dim(), ops.spec.dim()), true}};
    case MetricName::PT: return {name, AntilinearOp{diag(ops.parity), true}};
    }
    throw Error(ErrorKind::InvalidInput, "unknown metric");
}

MatX pseudo_adjoint(const MatX& a, const EtaMetric& eta)
{
    if (eta.is_linear()) return similarity(eta.linear(), a.adjoint());
    const AntilinearOp& op = eta.antilinear();
    // eta^-1 A^dagger eta = K M^-1 A^dagger M K = conj(M)^-1 A^T conj(M)
    return similarity(op.matrix.conjugate(), a.transpose());
}

double pseudo_hermiticity_residual(const MatX& a, const EtaMetric& eta)
{
    return max_norm(a - pseudo_adjoint(a, eta));
}

SymmetryReport check_symmetries(const MatX& h, const OperatorSet& ops)
{
    if (h.rows() != ops.spec.dim())
        throw Error(ErrorKind::DimensionMismatch, "Hamiltonian and operator set dimensions differ");
    SymmetryReport r{};
    r.hermiticity_residual = max_norm(h - h.adjoint());
    const auto par = ops.parity.cast<cplx>().asDiagonal();
    r.pt_symmetry_residual = max_norm(h - par * h.conjugate() * par);
    for (MetricName name : all_metrics())
        r.pseudo_residuals[name] = pseudo_hermiticity_residual(h, make_metric(name, ops));
    return r;
}

SymmetryReport check_symmetries(const ModelParams& p, const FockSpec& spec)
{
    const OperatorSet ops = build_operators(spec);
    return check_symmetries(build_hamiltonian(p, ops), ops);
}

} // namespace ptlab
