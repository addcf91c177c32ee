#ifndef PTLAB_QUADFORM_HPP
#define PTLAB_QUADFORM_HPP

#include <array>
#include <string>
#include <vector>

#include "ptlab/params.hpp"
#include "ptlab/types.hpp"

namespace ptlab {

// Slots of a phase-space vector. Every QuadForm and map uses this ordering,
// whatever the variables are called.
inline constexpr int kX1 = 0;
inline constexpr int kX2 = 1;
inline constexpr int kP1 = 2;
inline constexpr int kP2 = 3;

using VariableLabels = std::array<std::string, 4>;

VariableLabels canonical_labels();     // x1 x2 p1 p2
VariableLabels intermediate_labels();  // X'1 X'2 P'1 P'2
VariableLabels final_labels();         // X1 X2 P1 P2

/// J = [[0, I2], [-I2, 0]]: commutators [z_a, z_b] = i J_ab for canonical variables.
const Mat4& symplectic_form();

/// Quadratic Hamiltonian H(z) = 1/2 z^T C z with complex symmetric C.
class QuadForm
{
public:
    QuadForm(const Mat4& c, VariableLabels labels);

    const Mat4& matrix() const noexcept { return m_c; }
    const VariableLabels& labels() const noexcept { return m_labels; }

    cplx evaluate(const Vec4& z) const;

    /// Coefficient of the monomial z_i z_j as it appears in H: C_ii / 2 on the
    /// diagonal, C_ij (= C_ji) off it.
    cplx coefficient(int i, int j) const;

private:
    Mat4 m_c;
    VariableLabels m_labels;
};

/// Linear change of phase-space variables. Row a expresses the new variable a
/// as a combination of the old ones: z_new = M z_old.
class LinearCanonicalMap
{
public:
    LinearCanonicalMap(const Mat4& m, VariableLabels from, VariableLabels to);

    const Mat4& matrix() const noexcept { return m_m; }
    const VariableLabels& from() const noexcept { return m_from; }
    const VariableLabels& to() const noexcept { return m_to; }

    /// 2-norm condition number.
    double condition() const;
    /// ||M J M^T - J||_max; zero iff the new variables obey canonical commutators.
    double symplectic_residual() const;
    /// ||M J M^T + J||_max; zero iff the commutators come out with the opposite sign.
    double antisymplectic_residual() const;

    LinearCanonicalMap then(const LinearCanonicalMap& next) const;

private:
    Mat4 m_m;
    VariableLabels m_from;
    VariableLabels m_to;
};

inline constexpr double kMaxMapCondition = 1e12;

QuadForm hamiltonian_form(const ModelParams& p);

/// The intermediate variables exactly as printed: coordinates divided by
/// (alpha2 - alpha1) and (alpha1 - alpha2), momenta alpha_j p1/a1 + p2/a2.
/// This map satisfies M J M^T = -J.
LinearCanonicalMap intermediate_map(const ModelParams& p);

/// The printed rescaling X_j = s_j X'_j, P_j = P'_j / s_j applied to
/// `intermediate_map`. Inherits M J M^T = -J, because the rescaling is unimodular
/// within each pair.
LinearCanonicalMap printed_final_map(const ModelParams& p);

/// Canonical final variables: same as `printed_final_map` with the coordinate
/// rows negated. Every diagonal form is unchanged and M J M^T = J.
LinearCanonicalMap final_map(const ModelParams& p);

/// Rewrites `f` in the variables defined by `m`. Throws SingularMap if the
/// condition number exceeds kMaxMapCondition.
QuadForm apply_map(const QuadForm& f, const LinearCanonicalMap& m);

/// Closed-form diagonal Hamiltonian in the intermediate variables.
QuadForm expected_intermediate_form(const ModelParams& p);

/// Closed-form diagonal Hamiltonian in the final variables for the given sign
/// pattern: +-U^-1 (P1^2/2m + m w^2 X1^2/2) -+ U (P2^2/2m + m w^2 X2^2/2).
QuadForm branch_form(const DerivedParams& d, Branch branch);

/// `branch_form` for the branch the parameters actually select.
QuadForm expected_branch_form(const ModelParams& p);

/// ||Pi^T C(permute(p)) Pi - C(p)||_max with Pi swapping the two modes.
double check_permutation_invariance(const ModelParams& p);

struct InducedPermutationReport
{
    double alpha_residual;          // alpha(permute(p)) vs (-alpha2, -alpha1)
    double u_residual;              // |U(permute(p)) - U(p)|
    double intermediate_residual;   // intermediate form under X'_j -> alpha_j X'_j, P'_j -> P'_j / alpha_j
    Branch branch;
    Branch permuted_branch;
    double formal_branch_residual;  // branch form of permute(p) vs opposite-sign branch form of p
    double induced_branch_residual; // same, after the induced phase identification of final variables
};

/// Requires CaseI.
InducedPermutationReport check_induced_permutation(const ModelParams& p);

/// Eigenvalues of J C, sorted by imaginary then real part.
std::vector<cplx> classical_frequencies(const QuadForm& f);

} // namespace ptlab

#endif
