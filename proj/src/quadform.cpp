#include "ptlab/quadform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ptlab/errors.hpp"

namespace ptlab {

namespace {

void require_case_one(const ModelParams& p, const char* what)
{
    if (p.is_hermitian_control() || classify(p) != Regime::CaseI)
        throw Error(ErrorKind::WrongCase, fmt::format("{} needs CaseI parameters", what));
}

Mat4 diagonal(cplx d0, cplx d1, cplx d2, cplx d3)
{
    Mat4 m = Mat4::Zero();
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    m(3, 3) = d3;
    return m;
}

Mat4 mode_swap()
{
    Mat4 pi = Mat4::Zero();
    pi(kX1, kX2) = pi(kX2, kX1) = 1.0;
    pi(kP1, kP2) = pi(kP2, kP1) = 1.0;
    return pi;
}

// X_j = s_j X'_j, P_j = P'_j / s_j
LinearCanonicalMap rescaling(const DerivedParams& d, double coordinate_sign)
{
    const double s1 = std::sqrt(std::abs(d.alpha1) * d.U);
    const double s2 = std::sqrt(std::abs(d.alpha2) / d.U);
    return {diagonal(coordinate_sign * s1, coordinate_sign * s2, 1.0 / s1, 1.0 / s2),
            intermediate_labels(), final_labels()};
}

} // namespace

VariableLabels canonical_labels()
{
    return {"x1", "x2", "p1", "p2"};
}

VariableLabels intermediate_labels()
{
    return {"X'1", "X'2", "P'1", "P'2"};
}

VariableLabels final_labels()
{
    return {"X1", "X2", "P1", "P2"};
}

const Mat4& symplectic_form()
{
    static const Mat4 j = [] {
        Mat4 m = Mat4::Zero();
        m(kX1, kP1) = m(kX2, kP2) = 1.0;
        m(kP1, kX1) = m(kP2, kX2) = -1.0;
        return m;
    }();
    return j;
}

QuadForm::QuadForm(const Mat4& c, VariableLabels labels)
    : m_c(0.5 * (c + c.transpose())), m_labels(std::move(labels))
{
}

cplx QuadForm::evaluate(const Vec4& z) const
{
    return 0.5 * (z.transpose() * m_c * z)(0, 0);
}

cplx QuadForm::coefficient(int i, int j) const
{
    return i == j ? 0.5 * m_c(i, i) : m_c(i, j);
}

LinearCanonicalMap::LinearCanonicalMap(const Mat4& m, VariableLabels from, VariableLabels to)
    : m_m(m), m_from(std::move(from)), m_to(std::move(to))
{
}

double LinearCanonicalMap::condition() const
{
    Eigen::JacobiSVD<Mat4> svd(m_m);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

double LinearCanonicalMap::symplectic_residual() const
{
    const Mat4& j = symplectic_form();
    return max_norm(m_m * j * m_m.transpose() - j);
}

double LinearCanonicalMap::antisymplectic_residual() const
{
    const Mat4& j = symplectic_form();
    return max_norm(m_m * j * m_m.transpose() + j);
}

LinearCanonicalMap LinearCanonicalMap::then(const LinearCanonicalMap& next) const
{
    return {next.m_m * m_m, m_from, next.m_to};
}

QuadForm hamiltonian_form(const ModelParams& p)
{
    Mat4 c = Mat4::Zero();
    c(kX1, kX1) = p.a1() * p.a1();
    c(kX2, kX2) = p.a2() * p.a2();
    c(kP1, kP1) = 1.0;
    c(kP2, kP2) = 1.0;
    c(kP1, kP2) = c(kP2, kP1) = kImag * p.coupling();
    return {c, canonical_labels()};
}

LinearCanonicalMap intermediate_map(const ModelParams& p)
{
    require_case_one(p, "intermediate_map");
    const DerivedParams d = derive_all(p);
    const cplx al1 = d.alpha1;
    const cplx al2 = d.alpha2;
    const double a1 = p.a1();
    const double a2 = p.a2();

    Mat4 m = Mat4::Zero();
    m(0, kX1) = a1 / (al2 - al1);
    m(0, kX2) = -al2 * a2 / (al2 - al1);
    m(1, kX1) = a1 / (al1 - al2);
    m(1, kX2) = -al1 * a2 / (al1 - al2);
    m(2, kP1) = al1 / a1;
    m(2, kP2) = 1.0 / a2;
    m(3, kP1) = al2 / a1;
    m(3, kP2) = 1.0 / a2;
    return {m, canonical_labels(), intermediate_labels()};
}

LinearCanonicalMap printed_final_map(const ModelParams& p)
{
    require_case_one(p, "printed_final_map");
    return intermediate_map(p).then(rescaling(derive_all(p), 1.0));
}

LinearCanonicalMap final_map(const ModelParams& p)
{
    require_case_one(p, "final_map");
    return intermediate_map(p).then(rescaling(derive_all(p), -1.0));
}

QuadForm apply_map(const QuadForm& f, const LinearCanonicalMap& m)
{
    const double cond = m.condition();
    if (!(cond <= kMaxMapCondition))
        throw Error(ErrorKind::SingularMap, fmt::format("condition number {:.3e} exceeds {:.0e}", cond,
                                                        kMaxMapCondition));
    const Mat4 inv = m.matrix().inverse();
    return {inv.transpose() * f.matrix() * inv, m.to()};
}

QuadForm expected_intermediate_form(const ModelParams& p)
{
    require_case_one(p, "expected_intermediate_form");
    const DerivedParams d = derive_all(p);
    const double w2 = d.omega * d.omega;
    const cplx k1 = 1.0 + d.alpha1 * d.alpha1;
    const cplx k2 = 1.0 + d.alpha2 * d.alpha2;
    const double u2 = d.U * d.U;
    return {diagonal(k1, k2, w2 / (u2 * k1), u2 * w2 / k2), intermediate_labels()};
}

QuadForm branch_form(const DerivedParams& d, Branch branch)
{
    const double sign = branch == Branch::One ? 1.0 : -1.0;
    const double mw2 = d.m * d.omega * d.omega;
    const double inv_u = 1.0 / d.U;
    return {diagonal(sign * inv_u * mw2, -sign * d.U * mw2, sign * inv_u / d.m, -sign * d.U / d.m),
            final_labels()};
}

QuadForm expected_branch_form(const ModelParams& p)
{
    require_case_one(p, "expected_branch_form");
    const DerivedParams d = derive_all(p);
    return branch_form(d, d.branch);
}

double check_permutation_invariance(const ModelParams& p)
{
    const Mat4 pi = mode_swap();
    const Mat4 swapped = pi.transpose() * hamiltonian_form(permute(p)).matrix() * pi;
    return max_norm(swapped - hamiltonian_form(p).matrix());
}

InducedPermutationReport check_induced_permutation(const ModelParams& p)
{
    require_case_one(p, "check_induced_permutation");
    const ModelParams q = permute(p);
    const DerivedParams dp = derive_all(p);
    const DerivedParams dq = derive_all(q);

    InducedPermutationReport r{};
    r.alpha_residual = std::max(std::abs(dq.alpha1 + dp.alpha2), std::abs(dq.alpha2 + dp.alpha1));
    r.u_residual = std::abs(dq.U - dp.U);

    // X'_j -> alpha_j X'_j, P'_j -> P'_j / alpha_j, with the permuted parameters
    const Mat4 scale = diagonal(dp.alpha1, dp.alpha2, 1.0 / dp.alpha1, 1.0 / dp.alpha2);
    const Mat4 moved = scale.transpose() * expected_intermediate_form(q).matrix() * scale;
    r.intermediate_residual = max_norm(moved - expected_intermediate_form(p).matrix());

    r.branch = dp.branch;
    r.permuted_branch = dq.branch;
    const Mat4 permuted_form = branch_form(dq, dq.branch).matrix();
    r.formal_branch_residual =
        max_norm(permuted_form - branch_form(dp, opposite(dp.branch)).matrix());

    // Final variables of the permuted parameters are phase multiples of the
    // original ones: X_j -> phi_j X_j, P_j -> P_j / phi_j with phi_j = alpha_j / |alpha_j|.
    const cplx phi1 = dp.alpha1 / std::abs(dp.alpha1);
    const cplx phi2 = dp.alpha2 / std::abs(dp.alpha2);
    const Mat4 phase = diagonal(phi1, phi2, 1.0 / phi1, 1.0 / phi2);
    r.induced_branch_residual =
        max_norm(phase.transpose() * permuted_form * phase - branch_form(dp, dp.branch).matrix());
    return r;
}

std::vector<cplx> classical_frequencies(const QuadForm& f)
{
    const Mat4 a = symplectic_form() * f.matrix();
    Eigen::ComplexEigenSolver<Mat4> solver(a, false);
    std::vector<cplx> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + 4);
    std::sort(ev.begin(), ev.end(), [](cplx l, cplx r) {
        if (l.imag() != r.imag()) return l.imag() < r.imag();
        return l.real() < r.real();
    });
    return ev;
}

} // namespace ptlab
