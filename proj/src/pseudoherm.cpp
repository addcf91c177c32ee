#include "ptlab/pseudoherm.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ptlab/errors.hpp"

namespace ptlab {

namespace {

using quad = __float128;

struct QComplex
{
    quad re = 0;
    quad im = 0;
};

quad qabs_max(const QComplex& z)
{
    const quad a = z.re < 0 ? -z.re : z.re;
    const quad b = z.im < 0 ? -z.im : z.im;
    return a > b ? a : b;
}

// Row-compressed copy of a dense matrix with exact quad entries. The model
// Hamiltonian has only purely real or purely imaginary entries, which are kept
// apart to halve the work.
struct QuadSparse
{
    struct Entry
    {
        int col;
        quad value;
    };
    std::vector<int> real_start{0};
    std::vector<int> imag_start{0};
    std::vector<Entry> real_part;
    std::vector<Entry> imag_part;

    explicit QuadSparse(const MatX& m)
    {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                if (m(i, j).real() != 0.0) real_part.push_back({static_cast<int>(j), m(i, j).real()});
                if (m(i, j).imag() != 0.0) imag_part.push_back({static_cast<int>(j), m(i, j).imag()});
            }
            real_start.push_back(static_cast<int>(real_part.size()));
            imag_start.push_back(static_cast<int>(imag_part.size()));
        }
    }

    // out = (-i s) M v
    void apply_scaled(const std::vector<QComplex>& v, quad s, std::vector<QComplex>& out) const
    {
        for (std::size_t i = 0; i + 1 < real_start.size(); ++i) {
            quad re = 0;
            quad im = 0;
            for (int k = real_start[i]; k < real_start[i + 1]; ++k) {
                const Entry& e = real_part[static_cast<std::size_t>(k)];
                const QComplex& b = v[static_cast<std::size_t>(e.col)];
                re += e.value * b.re;
                im += e.value * b.im;
            }
            for (int k = imag_start[i]; k < imag_start[i + 1]; ++k) {
                const Entry& e = imag_part[static_cast<std::size_t>(k)];
                const QComplex& b = v[static_cast<std::size_t>(e.col)];
                re -= e.value * b.im;
                im += e.value * b.re;
            }
            out[i] = {im * s, -re * s};
        }
    }
};

// v <- exp(-i H dt) v by Taylor steps with ||H||_1 |h| <= 4.
void propagate(const QuadSparse& h, double norm1, double dt, std::vector<QComplex>& v)
{
    if (dt == 0.0) return;
    const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(dt) * norm1 / 4.0)));
    const quad step = static_cast<quad>(dt) / steps;
    const quad cutoff = 1e-36;
    std::vector<QComplex> term(v.size());
    std::vector<QComplex> next(v.size());
    for (int s = 0; s < steps; ++s) {
        term = v;
        for (int k = 1; k < 400; ++k) {
            h.apply_scaled(term, step / k, next);
            std::swap(term, next);
            quad term_size = 0;
            quad sum_size = 0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                v[i].re += term[i].re;
                v[i].im += term[i].im;
                term_size = std::max(term_size, qabs_max(term[i]));
                sum_size = std::max(sum_size, qabs_max(v[i]));
            }
            if (term_size <= cutoff * sum_size) break;
        }
    }
}

// exp(+iHt), computed once per t.
class Propagators
{
public:
    explicit Propagators(const MatX& h) : m_h(h) {}

    const MatX& forward(double t)
    {
        auto it = m_cache.find(t);
        if (it == m_cache.end()) it = m_cache.emplace(t, expm(MatX(kImag * t * m_h))).first;
        return it->second;
    }

    // exp(+iHt) A0 exp(-iHt)
    MatX evolve(const MatX& a0, double t) { return forward(t) * a0 * forward(-t); }

private:
    const MatX& m_h;
    std::map<double, MatX> m_cache;
};

Eigen::VectorXd parity_of(Eigen::Index dim)
{
    return build_operators(FockSpec::from_dimension(dim)).parity;
}

void require_square(const MatX& h, Eigen::Index dim)
{
    if (h.rows() != h.cols() || h.rows() != dim)
        throw Error(ErrorKind::DimensionMismatch, fmt::format("operator is {}x{}, expected {}", h.rows(), h.cols(), dim));
}

// P A^T P
MatX pt_adjoint(const MatX& a, const Eigen::VectorXd& parity)
{
    return parity.asDiagonal() * a.transpose() * parity.asDiagonal();
}

bool within(double a, double scale, double tol)
{
    return a <= tol * std::max(1.0, scale);
}

double relative_gap(cplx a, cplx b)
{
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

} // namespace

cplx eta_form(const StateVector& a, const StateVector& b, const EtaMetric& eta)
{
    if (a.size() != b.size() || a.size() != eta.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    fmt::format("states of size {} and {} with metric of size {}", a.size(), b.size(), eta.dim()));
    return a.dot(eta.apply(b));
}

RealityCheck reality_check(const StateVector& psi, const EtaMetric& eta, double tol)
{
    const cplx v = eta_form(psi, psi, eta);
    return {v, std::abs(v.imag()) <= tol * std::abs(v)};
}

PtFormSeries pt_form_series(const MatX& h, const StateVector& psi0, const std::vector<double>& times)
{
    require_square(h, psi0.size());
    for (double t : times)
        if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorKind::InvalidInput, "times must be finite and >= 0");
    const Eigen::VectorXd parity = parity_of(psi0.size());
    const QuadSparse sparse(h);
    const double norm1 = h.cwiseAbs().colwise().sum().maxCoeff();

    std::vector<double> order = times;
    std::sort(order.begin(), order.end());

    std::vector<QComplex> forward(static_cast<std::size_t>(psi0.size()));
    for (Eigen::Index i = 0; i < psi0.size(); ++i)
        forward[static_cast<std::size_t>(i)] = {psi0(i).real(), psi0(i).imag()};
    std::vector<QComplex> backward = forward;

    PtFormSeries out{order, {}, {}};
    double now = 0.0;
    for (double t : order) {
        propagate(sparse, norm1, t - now, forward);
        propagate(sparse, norm1, now - t, backward);
        now = t;
        // F = sum P_i conj(f_i b_i), G = sum P_i conj(f_i) conj(f_i)
        quad fr = 0, fi = 0, gr = 0, gi = 0;
        for (std::size_t i = 0; i < forward.size(); ++i) {
            const quad sgn = parity(static_cast<Eigen::Index>(i));
            const QComplex& f = forward[i];
            const QComplex& b = backward[i];
            fr += sgn * (f.re * b.re - f.im * b.im);
            fi -= sgn * (f.re * b.im + f.im * b.re);
            gr += sgn * (f.re * f.re - f.im * f.im);
            gi -= sgn * (2 * f.re * f.im);
        }
        out.reversed.emplace_back(static_cast<double>(fr), static_cast<double>(fi));
        out.same_time.emplace_back(static_cast<double>(gr), static_cast<double>(gi));
    }
    return out;
}

cplx conserved_pt_form(const MatX& h, const StateVector& psi0, double t)
{
    require_square(h, psi0.size());
    const double res = max_norm(h - pt_adjoint(h, parity_of(h.rows())));
    if (!within(res, max_norm(h), 1e-13))
        throw Error(ErrorKind::NotPseudoHermitian, fmt::format("||H - P H^T P|| = {:.3e}", res));
    return pt_form_series(h, psi0, {t}).reversed.front();
}

double unitarity_operator_check(const MatX& h, double t)
{
    require_square(h, h.rows());
    const Eigen::VectorXd parity = parity_of(h.rows());
    const MatX adj = expm(MatX(kImag * (-t) * h.adjoint()));
    const MatX lhs = parity.asDiagonal() * adj.conjugate() * parity.asDiagonal();
    return max_norm(lhs - expm(MatX(kImag * t * h)));
}

double unitarity_operator_same_time(const MatX& h, double t)
{
    require_square(h, h.rows());
    const Eigen::VectorXd parity = parity_of(h.rows());
    const MatX adj = expm(MatX(kImag * t * h.adjoint()));
    const MatX lhs = parity.asDiagonal() * adj.conjugate() * parity.asDiagonal();
    return max_norm(lhs - expm(MatX(kImag * t * h)));
}

bool ObservableMatrix::is_eta_selfadjoint(const EtaMetric& eta) const
{
    const auto it = m_flags.find(eta.name());
    if (it != m_flags.end()) return it->second;
    const bool flag = within(pseudo_hermiticity_residual(m_a, eta), max_norm(m_a), 1e-12);
    m_flags.emplace(eta.name(), flag);
    return flag;
}

cplx pseudo_expectation(const MatX& a, const StateVector& psi, const EtaMetric& eta)
{
    require_square(a, psi.size());
    return eta_form(psi, a * psi, eta);
}

MatX heisenberg_evolve(const MatX& a0, const MatX& h, double t)
{
    require_square(a0, h.rows());
    return Propagators(h).evolve(a0, t);
}

namespace {

void require_pt_selfadjoint(const MatX& a0, const Eigen::VectorXd& parity)
{
    const double res = max_norm(a0 - pt_adjoint(a0, parity));
    if (!within(res, max_norm(a0), 1e-12))
        throw Error(ErrorKind::InitialNotSelfAdjoint, fmt::format("||A0 - P A0^T P|| = {:.3e}", res));
}

double covariance_residual(Propagators& u, const MatX& a0, const Eigen::VectorXd& parity, double t)
{
    return max_norm(pt_adjoint(u.evolve(a0, -t), parity) - u.evolve(a0, t));
}

double covariance_same_time(Propagators& u, const MatX& a0, const Eigen::VectorXd& parity, double t)
{
    const MatX at = u.evolve(a0, t);
    return max_norm(pt_adjoint(at, parity) - at);
}

EhrenfestResult ehrenfest_with(Propagators& u, const MatX& a0, const MatX& h, const StateVector& psi,
                               const EtaMetric& pt, double t, double dt)
{
    if (!(dt > 0.0)) throw Error(ErrorKind::InvalidInput, "dt must be positive");
    const auto g = [&](double tau) { return pseudo_expectation(u.evolve(a0, -tau), psi, pt); };
    const MatX at = u.evolve(a0, -t);
    const MatX comm = h * at - at * h;

    EhrenfestResult r{};
    r.lhs = (g(t + dt) - g(t - dt)) / (2.0 * dt);
    r.rhs = kImag * pseudo_expectation(comm, psi, pt);
    r.residual = std::abs(r.lhs - r.rhs);
    return r;
}

} // namespace

double adjoint_covariance_check(const MatX& a0, const MatX& h, double t)
{
    require_square(a0, h.rows());
    const Eigen::VectorXd parity = parity_of(h.rows());
    require_pt_selfadjoint(a0, parity);
    Propagators u(h);
    return covariance_residual(u, a0, parity, t);
}

double adjoint_covariance_same_time(const MatX& a0, const MatX& h, double t)
{
    require_square(a0, h.rows());
    Propagators u(h);
    return covariance_same_time(u, a0, parity_of(h.rows()), t);
}

EhrenfestResult ehrenfest_check(const MatX& a0, const MatX& h, const StateVector& psi, double t, double dt)
{
    require_square(a0, psi.size());
    require_square(h, psi.size());
    const OperatorSet ops = build_operators(FockSpec::from_dimension(psi.size()));
    Propagators u(h);
    return ehrenfest_with(u, a0, h, psi, make_metric(MetricName::PT, ops), t, dt);
}

StateVector random_state(Eigen::Index dim, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal;
    StateVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v(i) = cplx(re, im);
    }
    return v / v.norm();
}

CheckResult make_check(std::string check, std::string metric, const ModelParams& p, int n_max, double residual,
                       double tolerance, bool asserted, bool lower_bound)
{
    const bool pass = lower_bound ? residual > tolerance : residual <= tolerance;
    return {std::move(check), std::move(metric), {p.a1(), p.a2(), p.a3()}, n_max, residual, tolerance,
            lower_bound, asserted, pass};
}

std::vector<std::pair<std::string, MatX>> selfadjoint_observables(const MatX& h, const OperatorSet& ops)
{
    return {{"H", h},
            {"p1^2", ops.p1 * ops.p1},
            {"p2^2", ops.p2 * ops.p2},
            {"x1^2", ops.x1 * ops.x1},
            {"x2^2", ops.x2 * ops.x2},
            {"x1x2", ops.x1 * ops.x2},
            {"i p1p2", kImag * ops.p1 * ops.p2},
            {"p1", ops.p1},
            {"p2", ops.p2}};
}

std::vector<CheckResult> appendix_suite(const ModelParams& p, const AppendixOptions& o)
{
    const FockSpec spec(o.n_max);
    const OperatorSet ops = build_operators(spec);
    const MatX model = build_hamiltonian(p, ops);
    const MatX h = o.perturbation ? MatX(model + kImag * *o.perturbation * ops.x1) : model;
    const Eigen::Index d = spec.dim();
    const int n = o.n_max;
    const EtaMetric pt = make_metric(MetricName::PT, ops);
    Propagators u(h);
    std::vector<CheckResult> out;
    const auto wanted = [&](MetricName m) { return !o.only_metric || *o.only_metric == m; };
    // Every block draws from its own stream, so filtering does not change the
    // states the remaining checks see.
    const auto stream = [&](std::uint64_t block) {
        std::seed_seq seq{o.seed, block};
        return std::mt19937_64(seq);
    };

    // A1: the metric form of a single state; real for the Hermitian linear metrics.
    for (MetricName name : {MetricName::P, MetricName::P1, MetricName::P2, MetricName::PT}) {
        if (!wanted(name)) continue;
        std::mt19937_64 rng = stream(1);
        const EtaMetric eta = make_metric(name, ops);
        double worst = 0.0;
        for (int s = 0; s < o.random_states; ++s) {
            const cplx v = reality_check(random_state(d, rng), eta).value;
            if (v != cplx(0.0)) worst = std::max(worst, std::abs(v.imag()) / std::abs(v));
        }
        const bool linear = name != MetricName::PT;
        const std::string label = linear && name == MetricName::P ? "A1" : fmt::format("A1:{}", to_string(name));
        out.push_back(make_check(label, std::string(to_string(name)), p, n, worst, 1e-12, linear));
    }

    if (!wanted(MetricName::PT) && !wanted(MetricName::P)) return out;

    // A2: PT form with time reversal on the second slot, and the same-time form.
    if (wanted(MetricName::PT)) {
        std::mt19937_64 rng = stream(2);
        double reversed = 0.0;
        double same_time = 0.0;
        for (int s = 0; s < o.propagated_states; ++s) {
            std::vector<double> grid = o.times;
            grid.insert(grid.begin(), 0.0);
            const PtFormSeries series = pt_form_series(h, random_state(d, rng), grid);
            for (std::size_t i = 1; i < series.times.size(); ++i) {
                reversed = std::max(reversed, std::abs(series.reversed[i] - series.reversed[0]));
                same_time = std::max(same_time, std::abs(series.same_time[i] - series.same_time[0]));
            }
        }
        out.push_back(make_check("A2", "PT", p, n, reversed, 1e-10));
        out.push_back(make_check("A2:same-time", "PT", p, n, same_time, 1e-10, false));
    }

    // A3: adjoint propagator under the metric.
    if (wanted(MetricName::PT)) {
        double reversed = 0.0;
        double same_time = 0.0;
        for (double t : o.times) {
            reversed = std::max(reversed, unitarity_operator_check(h, t));
            same_time = std::max(same_time, unitarity_operator_same_time(h, t));
        }
        out.push_back(make_check("A3", "PT", p, n, reversed, 1e-10));
        out.push_back(make_check("A3:same-time", "PT", p, n, same_time, 1e-10, false));
    }

    // A4: <A^ddag> = <A> for antilinear PT, = conj(<A>) for linear P, any A.
    {
        std::mt19937_64 rng = stream(4);
        const EtaMetric par = make_metric(MetricName::P, ops);
        std::normal_distribution<double> normal;
        double antilinear = 0.0;
        double linear = 0.0;
        MatX a(d, d);
        for (int s = 0; s < o.random_states; ++s) {
            for (Eigen::Index j = 0; j < d; ++j)
                for (Eigen::Index i = 0; i < d; ++i) {
                    const double re = normal(rng);
                    const double im = normal(rng);
                    a(i, j) = cplx(re, im);
                }
            const StateVector psi = random_state(d, rng);
            antilinear = std::max(antilinear, relative_gap(pseudo_expectation(pseudo_adjoint(a, pt), psi, pt),
                                                           pseudo_expectation(a, psi, pt)));
            linear = std::max(linear, relative_gap(pseudo_expectation(pseudo_adjoint(a, par), psi, par),
                                                   std::conj(pseudo_expectation(a, psi, par))));
        }
        if (wanted(MetricName::PT)) out.push_back(make_check("A4", "PT", p, n, antilinear, 1e-12));
        if (wanted(MetricName::P)) out.push_back(make_check("A4:P", "P", p, n, linear, 1e-12));
    }
    if (!wanted(MetricName::PT)) return out;

    // Observables for A5 and A6: the self-adjoint monomials of the unperturbed
    // model plus random real combinations of them.
    std::vector<std::pair<std::string, MatX>> observables = selfadjoint_observables(model, ops);
    {
        std::mt19937_64 rng = stream(5);
        std::uniform_real_distribution<double> coeff(-1.0, 1.0);
        const std::size_t basis = observables.size();
        for (int c = 0; c < 3; ++c) {
            MatX combo = MatX::Zero(d, d);
            for (std::size_t b = 0; b < basis; ++b) combo += coeff(rng) * observables[b].second;
            observables.emplace_back(fmt::format("combination {}", c + 1), std::move(combo));
        }
    }

    // A5: covariance of the metric adjoint under Heisenberg evolution.
    {
        double reversed = 0.0;
        double same_time = 0.0;
        for (const auto& [name, a0] : observables) {
            require_pt_selfadjoint(a0, ops.parity);
            for (double t : o.covariance_times) {
                reversed = std::max(reversed, covariance_residual(u, a0, ops.parity, t));
                same_time = std::max(same_time, covariance_same_time(u, a0, ops.parity, t));
            }
        }
        out.push_back(make_check("A5", "PT", p, n, reversed, 1e-9));
        out.push_back(make_check("A5:same-time", "PT", p, n, same_time, 1e-9, false));
    }

    // A6: Ehrenfest relation on a low-lying probe state.
    {
        std::mt19937_64 rng = stream(6);
        StateVector probe = StateVector::Zero(d);
        std::normal_distribution<double> normal;
        for (int idx : {spec.index(0, 0), spec.index(0, 1), spec.index(1, 0)}) {
            const double re = normal(rng);
            const double im = normal(rng);
            probe(idx) = cplx(re, im);
        }
        probe /= probe.norm();

        const MatX p1sq = ops.p1 * ops.p1;
        const double coarse = ehrenfest_with(u, p1sq, h, probe, pt, o.ehrenfest_time, o.ehrenfest_dt).residual;
        const double fine = ehrenfest_with(u, p1sq, h, probe, pt, o.ehrenfest_time, 0.5 * o.ehrenfest_dt).residual;
        out.push_back(make_check("A6", "PT", p, n, coarse, 1e-5));
        out.push_back(make_check("A6:richardson", "PT", p, n, std::abs(coarse / fine - 4.0), 0.5));

        double worst = 0.0;
        for (const auto& [name, a0] : observables) {
            const EhrenfestResult r = ehrenfest_with(u, a0, h, probe, pt, o.ehrenfest_time, o.ehrenfest_dt);
            worst = std::max(worst, r.residual / std::max(1.0, std::abs(r.rhs)));
        }
        out.push_back(make_check("A6:observables", "PT", p, n, worst, 1e-5));
    }
    return out;
}

} // namespace ptlab
