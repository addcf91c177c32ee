#include "ptlab/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ptlab/errors.hpp"
#include "ptlab/quadform.hpp"

namespace ptlab {

namespace {

double inf_norm(const Mat4& a)
{
    return a.cwiseAbs().rowwise().sum().maxCoeff();
}

} // namespace

HamiltonMatrix::HamiltonMatrix(const ModelParams& p) : m_params(p), m_a(Mat4::Zero()), m_residual(0.0)
{
    const cplx ic = kImag * p.coupling();
    m_a(kX1, kP1) = 1.0;
    m_a(kX1, kP2) = ic;
    m_a(kX2, kP2) = 1.0;
    m_a(kX2, kP1) = ic;
    m_a(kP1, kX1) = -p.a1() * p.a1();
    m_a(kP2, kX2) = -p.a2() * p.a2();

    const Mat4 jc = symplectic_form() * hamiltonian_form(p).matrix();
    m_residual = max_norm(m_a - jc);
    if (m_residual > 1e-14 * std::max(1.0, max_norm(jc)))
        throw Error(ErrorKind::InvalidInput, fmt::format("flow matrix differs from J C by {:.3e}", m_residual));
}

std::vector<double> uniform_grid(double t0, double t1, int n)
{
    if (n < 2 || !std::isfinite(t0) || !std::isfinite(t1) || !(t1 > t0))
        throw Error(ErrorKind::InvalidInput, fmt::format("bad time grid [{}, {}] with {} points", t0, t1, n));
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = t0 + (t1 - t0) * i / (n - 1);
    return t;
}

Trajectory evolve(const ModelParams& p, const Vec4& z0, const std::vector<double>& times)
{
    if (!z0.allFinite()) throw Error(ErrorKind::InvalidInput, "initial state must be finite");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i])) throw Error(ErrorKind::InvalidInput, "times must be finite");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw Error(ErrorKind::InvalidInput, "times must be strictly ascending");
    }
    const Mat4 a = HamiltonMatrix(p).matrix();
    Trajectory traj{p, times, {}};
    traj.states.reserve(times.size());
    for (double t : times) traj.states.push_back(expm(Mat4(a * t)) * z0);
    return traj;
}

PolynomialCheck fourth_order_residual(const ModelParams& p, const Mat4& a)
{
    const double c2 = p.a1() * p.a1() + p.a2() * p.a2();
    const double c0 = p.a1() * p.a1() * p.a2() * p.a2() + 0.25 * p.a3() * p.a3();
    const Mat4 a2 = a * a;
    const Mat4 poly = a2 * a2 + c2 * a2 + c0 * Mat4::Identity();
    return {max_norm(poly), std::pow(inf_norm(a), 4)};
}

PolynomialCheck fourth_order_residual(const ModelParams& p)
{
    return fourth_order_residual(p, HamiltonMatrix(p).matrix());
}

PuFormCheck pu_form_residual(const ModelParams& p, bool real_coefficients)
{
    if (real_coefficients && !p.is_hermitian_control() && classify(p) == Regime::CaseIII)
        throw Error(ErrorKind::WrongCase, "CaseIII frequencies are complex");
    const FrequencyRoots r = solve_frequencies(p, true);
    PuFormCheck c{};
    c.sum = p.a1() * p.a1() + p.a2() * p.a2();
    c.product = p.a1() * p.a1() * p.a2() * p.a2() + 0.25 * p.a3() * p.a3();
    c.frequency_sum = r.omega1_sq + r.omega2_sq;
    c.frequency_product = r.omega1_sq * r.omega2_sq;
    c.residual = std::max(std::abs(c.frequency_sum - c.sum) / c.sum,
                          std::abs(c.frequency_product - c.product) / c.product);
    return c;
}

double second_order_check(const ModelParams& p, const Trajectory& traj)
{
    if (!(traj.params == p)) throw Error(ErrorKind::ParamsMismatch, "trajectory was generated for other parameters");
    if (traj.states.size() != traj.times.size())
        throw Error(ErrorKind::DimensionMismatch, "trajectory has mismatched times and states");

    const Mat4 a = HamiltonMatrix(p).matrix();
    const Mat4 a2 = a * a;
    const double scale = inf_norm(a2);
    const cplx k12 = kImag * (p.a2() * p.a3() / (2.0 * p.a1()));
    const cplx k21 = kImag * (p.a1() * p.a3() / (2.0 * p.a2()));

    double worst = 0.0;
    for (const Vec4& z : traj.states) {
        const double size = z.cwiseAbs().maxCoeff();
        if (size == 0.0) continue;
        const Vec4 acc = a2 * z;
        const cplx rhs1 = -p.a1() * p.a1() * z(kX1) - k12 * z(kX2);
        const cplx rhs2 = -p.a2() * p.a2() * z(kX2) - k21 * z(kX1);
        const double err = std::max(std::abs(acc(kX1) - rhs1), std::abs(acc(kX2) - rhs2));
        worst = std::max(worst, err / (scale * size));
    }
    return worst;
}

cplx energy(const ModelParams& p, const Vec4& z)
{
    return hamiltonian_form(p).evaluate(z);
}

double energy_drift(const Trajectory& traj)
{
    if (traj.states.empty()) return 0.0;
    const QuadForm h = hamiltonian_form(traj.params);
    const cplx e0 = h.evaluate(traj.states.front());
    const double scale = std::abs(e0) > 0.0 ? std::abs(e0) : 1.0;
    double worst = 0.0;
    for (const Vec4& z : traj.states) worst = std::max(worst, std::abs(h.evaluate(z) - e0) / scale);
    return worst;
}

double max_amplitude(const Trajectory& traj)
{
    double m = 0.0;
    for (const Vec4& z : traj.states) m = std::max(m, z.cwiseAbs().maxCoeff());
    return m;
}

double max_imaginary_part(const Trajectory& traj)
{
    double m = 0.0;
    for (const Vec4& z : traj.states) m = std::max(m, z.imag().cwiseAbs().maxCoeff());
    return m;
}

} // namespace ptlab
