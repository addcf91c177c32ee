#include "ptlab/cli/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "ptlab/quadform.hpp"
#include "ptlab/spectra.hpp"

namespace ptlab::cli {

namespace {

double relative_form_gap(const QuadForm& got, const QuadForm& want)
{
    return max_norm(got.matrix() - want.matrix()) / std::max(1.0, max_norm(want.matrix()));
}

double frequency_gap(const QuadForm& f, double w1, double w2)
{
    const std::vector<cplx> got = classical_frequencies(f);
    const cplx want[4] = {-kImag * w1, -kImag * w2, kImag * w2, kImag * w1};
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(got[i] - want[i]) / w1);
    return worst;
}

double lattice_negation_gap(const LevelLattice& a, const LevelLattice& b)
{
    double worst = 0.0;
    for (const Level& l : a.levels) {
        const auto other = b.energy(l.n1, l.n2);
        if (!other) return INFINITY;
        worst = std::max(worst, std::abs(l.energy + *other) / std::max(1.0, std::abs(l.energy)));
    }
    return worst;
}

} // namespace

std::vector<CheckResult> symmetry_checks(const ModelParams& p, int n_max, std::optional<double> perturbation,
                                         std::optional<MetricName> only_metric)
{
    const OperatorSet ops = build_operators(FockSpec(n_max));
    MatX h = build_hamiltonian(p, ops);
    if (perturbation) h += kImag * *perturbation * ops.x1;
    const SymmetryReport r = check_symmetries(h, ops);

    std::vector<CheckResult> out;
    if (!only_metric) {
        out.push_back(make_check("symmetry:hermiticity", "-", p, n_max, r.hermiticity_residual, 0.1, true, true));
        out.push_back(make_check("symmetry:pt-symmetry", "-", p, n_max, r.pt_symmetry_residual, 0.1, true, true));
    }
    for (const auto& [name, residual] : r.pseudo_residuals) {
        if (only_metric && *only_metric != name) continue;
        const bool asserted = name != MetricName::P;
        out.push_back(make_check("pseudo-hermiticity", std::string(to_string(name)), p, n_max, residual, 1e-13,
                                 asserted));
    }
    return out;
}

std::vector<CheckResult> pipeline_checks(const ModelParams& p)
{
    std::vector<CheckResult> out;
    if (p.is_hermitian_control() || classify(p) != Regime::CaseI) return out;

    const DerivedParams d = derive_all(p);
    const ModeFrequencies f = frequency_identification(d);
    const QuadForm h = hamiltonian_form(p);
    const LinearCanonicalMap inter = intermediate_map(p);
    const LinearCanonicalMap fin = final_map(p);
    const LinearCanonicalMap printed = printed_final_map(p);

    out.push_back(make_check("pipeline:constraint", "-", p, 0, d.constraint_residual, 1e-12));
    out.push_back(make_check("pipeline:frequencies", "-", p, 0, f.consistency_residual, 1e-12));
    out.push_back(make_check("pipeline:intermediate-form", "-", p, 0,
                             relative_form_gap(apply_map(h, inter), expected_intermediate_form(p)), 1e-10));
    out.push_back(make_check("pipeline:branch-form", "-", p, 0,
                             relative_form_gap(apply_map(h, fin), expected_branch_form(p)), 1e-10));
    out.push_back(make_check("pipeline:printed-branch-form", "-", p, 0,
                             relative_form_gap(apply_map(h, printed), expected_branch_form(p)), 1e-10, false));
    out.push_back(make_check("pipeline:final-map-symplectic", "-", p, 0, fin.symplectic_residual(), 1e-12));
    out.push_back(make_check("pipeline:intermediate-map-symplectic", "-", p, 0, inter.symplectic_residual(), 1e-12,
                             false));
    out.push_back(make_check("pipeline:intermediate-map-antisymplectic", "-", p, 0,
                             inter.antisymplectic_residual(), 1e-12, false));
    out.push_back(make_check("pipeline:classical-frequencies", "-", p, 0,
                             frequency_gap(apply_map(h, fin), f.omega1, f.omega2), 1e-10));
    return out;
}

std::vector<CheckResult> permutation_checks(const ModelParams& p)
{
    std::vector<CheckResult> out;
    out.push_back(make_check("permutation:hamiltonian", "-", p, 0, check_permutation_invariance(p), 1e-15));
    if (p.is_hermitian_control() || classify(p) != Regime::CaseI) return out;

    const InducedPermutationReport r = check_induced_permutation(p);
    const DerivedParams d = derive_all(p);
    const DerivedParams q = derive_all(permute(p));
    const double flipped = r.permuted_branch == opposite(r.branch) ? 0.0 : 1.0;
    const double negation = lattice_negation_gap(naive_levels(d.U, d.omega, d.branch, 6),
                                                 naive_levels(q.U, q.omega, q.branch, 6));

    out.push_back(make_check("permutation:branch-flip", "-", p, 0, flipped, 0.0));
    out.push_back(make_check("permutation:naive-negation", "-", p, 0, negation, 1e-12));
    out.push_back(make_check("permutation:alpha", "-", p, 0, r.alpha_residual / std::abs(d.alpha1), 1e-12));
    out.push_back(make_check("permutation:U-invariance", "-", p, 0, r.u_residual / d.U, 1e-12));
    out.push_back(make_check("permutation:intermediate-form", "-", p, 0,
                             r.intermediate_residual / std::max(1.0, max_norm(expected_intermediate_form(p).matrix())),
                             1e-10));
    const double branch_scale = std::max(1.0, max_norm(expected_branch_form(p).matrix()));
    out.push_back(make_check("permutation:formal-branch", "-", p, 0, r.formal_branch_residual / branch_scale, 1e-10));
    out.push_back(make_check("permutation:induced-branch", "-", p, 0, r.induced_branch_residual / branch_scale, 1e-10));
    return out;
}

std::vector<CheckResult> verification_suite(const ModelParams& p, const VerifyOptions& options)
{
    AppendixOptions appendix = options.appendix;
    appendix.only_metric = options.metric;
    const int n_max = appendix.n_max;

    auto symmetry = std::async(std::launch::async, [&] {
        return symmetry_checks(p, n_max, appendix.perturbation, options.metric);
    });
    auto algebra = std::async(std::launch::async, [&] {
        std::vector<CheckResult> out;
        if (options.metric) return out;
        out = pipeline_checks(p);
        const std::vector<CheckResult> perm = permutation_checks(p);
        out.insert(out.end(), perm.begin(), perm.end());
        return out;
    });
    auto app = std::async(std::launch::async, [&] { return appendix_suite(p, appendix); });

    std::vector<CheckResult> out = symmetry.get();
    for (auto* part : {&algebra, &app}) {
        const std::vector<CheckResult> rows = part->get();
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

bool asserted_checks_pass(const std::vector<CheckResult>& checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.asserted || c.pass; });
}

} // namespace ptlab::cli
