#include "ptlab/params.hpp"

#include <cmath>
#include <string>

#include "ptlab/errors.hpp"

namespace ptlab {

namespace {

// sqrt((a1^2 - a2^2)^2 - a3^2) on the principal branch, factored to avoid
// cancellation when |a3| is close to |a1^2 - a2^2|.
cplx discriminant_root(const ModelParams& p)
{
    const double d = std::abs(p.splitting());
    const double c = std::abs(p.a3());
    return std::sqrt(cplx((d - c) * (d + c), 0.0));
}

double frequency_sum(const ModelParams& p)
{
    return p.a1() * p.a1() + p.a2() * p.a2();
}

double frequency_product(const ModelParams& p)
{
    return p.a1() * p.a1() * p.a2() * p.a2() + 0.25 * p.a3() * p.a3();
}

} // namespace

std::string_view to_string(Regime r) noexcept
{
    switch (r) {
    case Regime::CaseI: return "CaseI";
    case Regime::CaseII: return "CaseII";
    case Regime::CaseIII: return "CaseIII";
    }
    return "?";
}

std::string_view to_string(Branch b) noexcept
{
    return b == Branch::One ? "Branch1" : "Branch2";
}

Branch opposite(Branch b) noexcept
{
    return b == Branch::One ? Branch::Two : Branch::One;
}

ModelParams ModelParams::make(double a1, double a2, double a3)
{
    if (!std::isfinite(a1) || !std::isfinite(a2) || !std::isfinite(a3))
        throw Error(ErrorKind::InvalidParams, "parameters must be finite");
    if (a1 == 0.0 || a2 == 0.0 || a3 == 0.0)
        throw Error(ErrorKind::InvalidParams, "a1, a2 and a3 must be non-zero");
    if (a1 == a2)
        throw Error(ErrorKind::InvalidParams, "a1 must differ from a2");
    return ModelParams(a1, a2, a3);
}

ModelParams ModelParams::hermitian_control(double a1, double a2)
{
    if (!std::isfinite(a1) || !std::isfinite(a2) || a1 == 0.0 || a2 == 0.0 || a1 == a2)
        throw Error(ErrorKind::InvalidParams, "control needs finite, non-zero, distinct a1 and a2");
    return ModelParams(a1, a2, 0.0);
}

Regime classify(const ModelParams& p, double boundary_band)
{
    const double lhs = std::abs(p.a3());
    const double rhs = std::abs(p.splitting());
    if (lhs == rhs || std::abs(lhs - rhs) <= boundary_band * rhs) return Regime::CaseII;
    return lhs < rhs ? Regime::CaseI : Regime::CaseIII;
}

FrequencyRoots solve_frequencies(const ModelParams& p, bool upper_sign)
{
    const double s = frequency_sum(p);
    const cplx r = discriminant_root(p);
    cplx hi;
    cplx lo;
    if (r == cplx(0.0)) {
        hi = lo = cplx(0.5 * s);
    }
    else {
        // smaller root from the product to avoid cancellation in s - r
        hi = 0.5 * (s + r);
        lo = frequency_product(p) / hi;
    }
    return upper_sign ? FrequencyRoots{hi, lo} : FrequencyRoots{lo, hi};
}

DerivedParams derive_all(const ModelParams& p)
{
    if (p.is_hermitian_control())
        throw Error(ErrorKind::InvalidParams, "derived parameters need a3 != 0");
    const Regime regime = classify(p);
    if (regime != Regime::CaseI)
        throw Error(ErrorKind::WrongCase,
                    "derived parameters need CaseI, got " + std::string(to_string(regime)));

    const double delta = p.splitting();
    const double a3 = p.a3();
    const double r = discriminant_root(p).real();

    // (delta + r)(delta - r) = a3^2; form the large-magnitude numerator directly.
    double num1;
    double num2;
    if (delta > 0.0) {
        num1 = delta + r;
        num2 = a3 * a3 / num1;
    }
    else {
        num2 = delta - r;
        num1 = a3 * a3 / num2;
    }
    const cplx denom = kImag * a3;

    DerivedParams d{p, {}, {}, num1 / denom, num2 / denom, 0.0, 0.0, 0.0, Branch::One, 0.0};

    const FrequencyRoots roots = solve_frequencies(p, true);
    d.omega1_sq = roots.omega1_sq;
    d.omega2_sq = roots.omega2_sq;

    const double s = frequency_sum(p);
    const double s_plus = s + r;
    const double s_minus = (4.0 * p.a1() * p.a1() * p.a2() * p.a2() + a3 * a3) / s_plus;
    d.U = std::pow(s_minus / s_plus, 0.25);
    d.omega = std::pow(frequency_product(p), 0.25);
    d.m = 2.0 / (d.omega * d.omega) * (r / std::abs(a3));

    d.constraint_residual = std::abs(1.0 + d.alpha1 * d.alpha2);
    d.branch = (1.0 + d.alpha1 * d.alpha1).real() > 0.0 ? Branch::One : Branch::Two;
    return d;
}

ModelParams permute(const ModelParams& p)
{
    if (p.is_hermitian_control()) return ModelParams::hermitian_control(p.a2(), p.a1());
    return ModelParams::make(p.a2(), p.a1(), p.a3());
}

ModeFrequencies frequency_identification(const DerivedParams& d)
{
    if (classify(d.params) != Regime::CaseI)
        throw Error(ErrorKind::WrongCase, "frequency identification needs CaseI");
    ModeFrequencies f{d.omega / d.U, d.U * d.omega, 0.0};
    const FrequencyRoots roots = solve_frequencies(d.params, true);
    const double e1 = std::abs(f.omega1 * f.omega1 - roots.omega1_sq) / std::abs(roots.omega1_sq);
    const double e2 = std::abs(f.omega2 * f.omega2 - roots.omega2_sq) / std::abs(roots.omega2_sq);
    f.consistency_residual = std::max(e1, e2);
    return f;
}

} // namespace ptlab
