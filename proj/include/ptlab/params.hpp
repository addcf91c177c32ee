#ifndef PTLAB_PARAMS_HPP
#define PTLAB_PARAMS_HPP

#include <string_view>

#include "ptlab/types.hpp"

namespace ptlab {

/// Parameter regime, decided by comparing |a3| with |a1^2 - a2^2|.
enum class Regime { CaseI, CaseII, CaseIII };

/// Sign pattern of (1 + alpha1^2, 1 + alpha2^2) in the regime with real unequal
/// frequencies: One is (+, -), Two is (-, +).
enum class Branch { One, Two };

std::string_view to_string(Regime r) noexcept;
std::string_view to_string(Branch b) noexcept;
Branch opposite(Branch b) noexcept;

/// The triple (a1, a2, a3) of the two-mode oscillator with the i p1 p2 coupling.
///
/// All three constants are real and non-zero, and a1 != a2. The only way to get
/// a3 == 0 is `hermitian_control`, a decoupled Hermitian oscillator that exists
/// purely as a numerical reference for the Fock-space and dynamics modules.
class ModelParams
{
public:
    static ModelParams make(double a1, double a2, double a3);
    static ModelParams hermitian_control(double a1, double a2);

    double a1() const noexcept { return m_a1; }
    double a2() const noexcept { return m_a2; }
    double a3() const noexcept { return m_a3; }
    bool is_hermitian_control() const noexcept { return m_a3 == 0.0; }

    /// Coefficient c of the i c p1 p2 term, c = a3 / (2 a1 a2).
    double coupling() const noexcept { return m_a3 / (2.0 * m_a1 * m_a2); }
    /// a1^2 - a2^2
    double splitting() const noexcept { return m_a1 * m_a1 - m_a2 * m_a2; }

    bool operator==(const ModelParams&) const = default;

private:
    ModelParams(double a1, double a2, double a3) : m_a1(a1), m_a2(a2), m_a3(a3) {}

    double m_a1;
    double m_a2;
    double m_a3;
};

/// `boundary_band` is a relative width around |a3| = |a1^2 - a2^2| that is
/// reclassified as CaseII. The default 0 means exact floating comparison.
Regime classify(const ModelParams& p, double boundary_band = 0.0);

struct FrequencyRoots
{
    cplx omega1_sq;
    cplx omega2_sq;
};

/// Roots of  w^4 - (a1^2 + a2^2) w^2 + (a1^2 a2^2 + a3^2/4) = 0  in w^2.
/// `upper_sign` puts the + root first.
FrequencyRoots solve_frequencies(const ModelParams& p, bool upper_sign = true);

struct DerivedParams
{
    ModelParams params;
    cplx omega1_sq;  // upper root
    cplx omega2_sq;
    cplx alpha1;
    cplx alpha2;
    double U;
    double omega;
    double m;
    Branch branch;
    double constraint_residual;  // |1 + alpha1 alpha2|
};

/// Every derived scalar of the canonical diagonalization. Requires CaseI.
DerivedParams derive_all(const ModelParams& p);

/// (a1, a2, a3) -> (a2, a1, a3)
ModelParams permute(const ModelParams& p);

struct ModeFrequencies
{
    double omega1;  // U^-1 omega, the larger one
    double omega2;  // U omega
    double consistency_residual;  // max relative deviation of omega_j^2 from the upper roots
};

ModeFrequencies frequency_identification(const DerivedParams& d);

} // namespace ptlab

#endif
