#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "golden_values.hpp"
#include "ptlab/errors.hpp"
#include "ptlab/quadform.hpp"
#include "support.hpp"

using namespace ptlab;

namespace {

Vec4 random_point(std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    Vec4 z;
    for (Eigen::Index i = 0; i < 4; ++i) z(i) = cplx(g(rng), g(rng));
    return z;
}

double form_gap(const QuadForm& got, const QuadForm& want)
{
    return max_norm(got.matrix() - want.matrix()) / std::max(1.0, max_norm(want.matrix()));
}

bool off_diagonal_zero(const QuadForm& f)
{
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && f.matrix()(i, j) != cplx(0.0)) return false;
    return true;
}

} // namespace

TEST_CASE("quadform: Hamiltonian coefficients")
{
    const QuadForm h = hamiltonian_form(testing::worked());
    CHECK(h.matrix()(kX1, kX1) == cplx(4.0));
    CHECK(h.matrix()(kX2, kX2) == cplx(1.0));
    CHECK(h.matrix()(kP1, kP1) == cplx(1.0));
    CHECK(h.matrix()(kP2, kP2) == cplx(1.0));
    CHECK(std::abs(h.matrix()(kP1, kP2) - cplx(0.0, golden::kCoupling)) < 1e-16);
    CHECK(h.matrix()(kP1, kP2) == h.matrix()(kP2, kP1));
    CHECK(h.matrix()(kX1, kP1) == cplx(0.0));
    CHECK(h.coefficient(kX1, kX1) == cplx(2.0));
    CHECK(h.coefficient(kP1, kP2) == h.matrix()(kP1, kP2));
    // not Hermitian as a form
    CHECK(max_norm(Mat4(h.matrix().conjugate() - h.matrix())) > 1.0);
    CHECK(h.labels() == canonical_labels());
}

TEST_CASE("quadform: evaluation matches the written Hamiltonian")
{
    const ModelParams p = testing::worked();
    const QuadForm h = hamiltonian_form(p);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 20; ++i) {
        const Vec4 z = random_point(rng);
        const cplx want = 0.5 * (z(2) * z(2) + z(3) * z(3)) + 0.5 * (4.0 * z(0) * z(0) + z(1) * z(1))
            + kImag * p.coupling() * z(2) * z(3);
        CHECK(std::abs(h.evaluate(z) - want) <= 1e-13 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("quadform: intermediate and final maps of the worked triple")
{
    const ModelParams p = testing::worked();
    const Mat4 inter = intermediate_map(p).matrix();
    CHECK(max_norm(Mat4(inter - testing::golden_matrix(golden::kIntermediateMap))) < 1e-15);
    CHECK(inter(2, kP1) == cplx(0.0, -std::sqrt(5.0) / 2));
    CHECK(inter(2, kP2) == cplx(1.0));
    CHECK(max_norm(Mat4(printed_final_map(p).matrix() - testing::golden_matrix(golden::kPrintedFinalMap))) < 1e-15);
    CHECK(max_norm(Mat4(final_map(p).matrix() - testing::golden_matrix(golden::kFinalMap))) < 1e-15);
    CHECK(golden::kScale1 == doctest::Approx(1.345).epsilon(1e-3));
    CHECK(intermediate_map(p).to() == intermediate_labels());
    CHECK(final_map(p).from() == canonical_labels());
    CHECK(final_map(p).to() == final_labels());
}

TEST_CASE("quadform: canonical structure of the maps")
{
    const ModelParams p = testing::worked();
    CHECK(final_map(p).symplectic_residual() <= 1e-12);
    // the printed intermediate and rescaled maps flip the commutator sign
    CHECK(intermediate_map(p).symplectic_residual() > 0.1);
    CHECK(intermediate_map(p).antisymplectic_residual() <= 1e-12);
    CHECK(printed_final_map(p).antisymplectic_residual() <= 1e-12);
    CHECK(printed_final_map(p).symplectic_residual() > 0.1);
}

TEST_CASE("quadform: transformed forms of the worked triple")
{
    const ModelParams p = testing::worked();
    const QuadForm h = hamiltonian_form(p);
    const QuadForm inter = apply_map(h, intermediate_map(p));
    const QuadForm fin = apply_map(h, final_map(p));
    CHECK(max_norm(Mat4(inter.matrix() - testing::golden_matrix(golden::kIntermediateForm))) < 1e-14);
    CHECK(max_norm(Mat4(fin.matrix() - testing::golden_matrix(golden::kFinalForm))) < 1e-14);

    const QuadForm e = expected_intermediate_form(p);
    CHECK(off_diagonal_zero(e));
    const int order[4] = {kP1, kX1, kP2, kX2};
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(e.coefficient(order[i], order[i]) - golden::kIntermediateCoefficients[i]) < 1e-15);

    const QuadForm b = expected_branch_form(p);
    CHECK(off_diagonal_zero(b));
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(b.coefficient(order[i], order[i]) - golden::kBranchTwoCoefficients[i]) < 1e-15);
    CHECK(form_gap(fin, b) <= 1e-10);
    CHECK(form_gap(inter, e) <= 1e-10);
    CHECK(form_gap(apply_map(h, printed_final_map(p)), b) <= 1e-10);
}

TEST_CASE("quadform: branch forms differ by a sign on each block")
{
    const DerivedParams d = derive_all(testing::worked());
    const QuadForm one = branch_form(d, Branch::One);
    const QuadForm two = branch_form(d, Branch::Two);
    CHECK(max_norm(Mat4(one.matrix() + two.matrix())) == 0.0);
    // level spacing of each block: 2 sqrt(coefficient product)
    const double w1 = 2.0 * std::sqrt((one.coefficient(kP1, kP1) * one.coefficient(kX1, kX1)).real());
    const double w2 = 2.0 * std::sqrt((one.coefficient(kP2, kP2) * one.coefficient(kX2, kX2)).real());
    CHECK(w1 == doctest::Approx(golden::kOmega1).epsilon(1e-14));
    CHECK(w2 == doctest::Approx(golden::kOmega2).epsilon(1e-14));
}

TEST_CASE("quadform: apply_map preserves values and rejects singular maps")
{
    const ModelParams p = testing::worked();
    const QuadForm h = hamiltonian_form(p);
    const LinearCanonicalMap id(Mat4::Identity(), canonical_labels(), canonical_labels());
    CHECK(max_norm(Mat4(apply_map(h, id).matrix() - h.matrix())) == 0.0);

    std::mt19937_64 rng(22);
    for (const LinearCanonicalMap& m : {intermediate_map(p), final_map(p)}) {
        const QuadForm f = apply_map(h, m);
        for (int i = 0; i < 8; ++i) {
            const Vec4 z = random_point(rng);
            const Vec4 z_new = m.matrix() * z;
            CHECK(std::abs(f.evaluate(z_new) - h.evaluate(z)) <= 1e-10 * std::max(1.0, std::abs(h.evaluate(z))));
        }
    }

    Mat4 singular = Mat4::Identity();
    singular(3, 3) = 0.0;
    try {
        apply_map(h, LinearCanonicalMap(singular, canonical_labels(), canonical_labels()));
        FAIL("singular map accepted");
    }
    catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularMap);
    }
}

TEST_CASE("quadform: maps need the regime with real unequal frequencies")
{
    for (const ModelParams& p : {testing::boundary(), testing::complex_case()}) {
        CHECK_THROWS_AS(intermediate_map(p), Error);
        CHECK_THROWS_AS(final_map(p), Error);
        CHECK_THROWS_AS(expected_branch_form(p), Error);
        CHECK_THROWS_AS(expected_intermediate_form(p), Error);
    }
}

TEST_CASE("quadform: diagonalization pipeline over random triples")
{
    for (const ModelParams& p : testing::random_sweep(23, Regime::CaseI, 200)) {
        const QuadForm h = hamiltonian_form(p);
        const LinearCanonicalMap inter = intermediate_map(p);
        const LinearCanonicalMap fin = final_map(p);
        CHECK(std::abs(inter.matrix().determinant()) > 0.0);
        CHECK(form_gap(apply_map(h, inter), expected_intermediate_form(p)) <= 1e-10);
        CHECK(form_gap(apply_map(h, fin), expected_branch_form(p)) <= 1e-10);
        CHECK(fin.symplectic_residual() <= 1e-12);
        CHECK(inter.antisymplectic_residual() <= 1e-12);
    }
}

TEST_CASE("quadform: permutation invariance in every regime")
{
    CHECK(check_permutation_invariance(testing::worked()) == 0.0);
    CHECK(check_permutation_invariance(ModelParams::make(2, 1, -std::sqrt(5.0))) == 0.0);
    CHECK(check_permutation_invariance(ModelParams::hermitian_control(2, 1)) == 0.0);
    for (const ModelParams& p : testing::mixed_sweep(24, 300)) CHECK(check_permutation_invariance(p) <= 1e-14);
}

TEST_CASE("quadform: induced permutation and branch flip")
{
    const InducedPermutationReport r = check_induced_permutation(testing::worked());
    CHECK(r.branch == Branch::Two);
    CHECK(r.permuted_branch == Branch::One);
    CHECK(r.alpha_residual <= 1e-15);
    CHECK(r.u_residual <= 1e-15);
    CHECK(r.intermediate_residual <= 1e-10);
    CHECK(r.formal_branch_residual <= 1e-10);
    CHECK(r.induced_branch_residual <= 1e-10);

    for (const ModelParams& p : testing::random_sweep(25, Regime::CaseI, 200)) {
        const InducedPermutationReport q = check_induced_permutation(p);
        const DerivedParams d = derive_all(p);
        const double scale = std::max(1.0, max_norm(expected_branch_form(p).matrix()));
        CHECK(q.permuted_branch == opposite(q.branch));
        CHECK(q.alpha_residual <= 1e-12 * std::abs(d.alpha1));
        CHECK(q.u_residual <= 1e-12 * d.U);
        CHECK(q.intermediate_residual <= 1e-10 * std::max(1.0, max_norm(expected_intermediate_form(p).matrix())));
        CHECK(q.formal_branch_residual <= 1e-10 * scale);
        CHECK(q.induced_branch_residual <= 1e-10 * scale);
    }
}

TEST_CASE("quadform: classical frequencies")
{
    const std::vector<cplx> w = classical_frequencies(hamiltonian_form(testing::worked()));
    REQUIRE(w.size() == 4);
    const cplx want[4] = {-kImag * golden::kOmega1, -kImag * golden::kOmega2, kImag * golden::kOmega2,
                          kImag * golden::kOmega1};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(w[i] - want[i]) <= 1e-12);

    const std::vector<cplx> b = classical_frequencies(hamiltonian_form(testing::boundary()));
    for (const cplx& z : b) CHECK(std::abs(std::abs(z) - std::sqrt(2.5)) <= 1e-7);  // defective double root

    for (const ModelParams& p : testing::mixed_sweep(26, 300)) {
        const std::vector<cplx> e = classical_frequencies(hamiltonian_form(p));
        const FrequencyRoots r = solve_frequencies(p);
        const bool degenerate = classify(p) == Regime::CaseII;
        const double tol = degenerate ? 1e-6 : 1e-10;
        for (const cplx& z : e) {
            // z^2 = -omega_j^2 for one of the roots; eigenvalues come in +- pairs
            const double d = std::min(std::abs(z * z + r.omega1_sq), std::abs(z * z + r.omega2_sq));
            CHECK(d <= tol * std::abs(r.omega1_sq));
            const double pair = std::min({std::abs(e[0] + z), std::abs(e[1] + z), std::abs(e[2] + z),
                                          std::abs(e[3] + z)});
            CHECK(pair <= tol * std::sqrt(std::abs(r.omega1_sq)));
        }
    }
}
