#ifndef PTLAB_SPECTRA_HPP
#define PTLAB_SPECTRA_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "ptlab/params.hpp"
#include "ptlab/types.hpp"

namespace ptlab {

struct Level
{
    int n1;
    int n2;
    double energy;
};

/// Oscillator levels (n1 + 1/2) w1 + (n2 + 1/2) w2, or the signed variant
/// sigma ((n1 + 1/2) w1 - (n2 + 1/2) w2). Sorted ascending by energy.
struct LevelLattice
{
    double omega1;
    double omega2;
    int sign;  // 0 for the bounded lattice, +1 / -1 for the signed one
    std::vector<Level> levels;

    /// Lookup by quantum numbers; nullopt when the pair was not generated.
    std::optional<double> energy(int n1, int n2) const;
};

/// The k smallest levels of the bounded lattice. Throws InvalidInput unless
/// both frequencies are positive.
LevelLattice closed_form_levels(double omega1, double omega2, int k);

/// Signed lattice over the square 0 <= n1, n2 < k, with w1 = omega / U and
/// w2 = U omega. Branch One carries the + sign on the first mode.
LevelLattice naive_levels(double U, double omega, Branch branch, int k);

/// All eigenvalues of a dense complex matrix, sorted by real then imaginary
/// part. Throws EigenSolverFailure with a short diagnostic.
std::vector<cplx> numerical_spectrum(const MatX& h);

/// Eigenvalues of h computed block by block, where `sector` labels invariant
/// subspaces of the basis (h must not couple different labels; checked).
std::vector<cplx> numerical_spectrum_by_sector(const MatX& h, const Eigen::VectorXd& sector);

/// |prod(eigs) / det(h) - 1|, evaluated in log space.
double determinant_consistency(const MatX& h, const std::vector<cplx>& eigs);

/// Largest distance from any eigenvalue to the nearest conjugate of another.
double conjugation_pairing_residual(const std::vector<cplx>& eigs);

enum class LatticeKind { Bounded, Signed, None };

std::string_view to_string(LatticeKind kind) noexcept;  // eq34 / eq29 / none

struct SpectrumOptions
{
    int k = 4;
    double drift_tolerance = 1e-4;
    double imag_tolerance = 1e-4;
    double match_tolerance = 1e-3;  // relative, for deciding which lattice is realized
    int dimension_cap = 4096;
};

/// One tracked eigenvalue at one truncation.
struct TrackedLevel
{
    int n_max;
    int index;
    cplx value;
    double drift;  // vs the same index at the previous truncation; NaN for the first
    bool converged;
    LatticeKind lattice;  // which lattice the eigenvalue was assigned to
    int matched_n1;       // -1 when unmatched
    int matched_n2;
    double mismatch;          // distance to the assigned lattice point, NaN when unmatched
    double bounded_distance;  // nearest point of the bounded lattice
    double signed_distance;   // nearest point of either signed lattice
};

struct TruncationSpectrum
{
    int n_max;
    std::vector<cplx> eigenvalues;
    double pairing_residual;
};

struct SpectrumReport
{
    ModelParams params;
    Regime regime;
    bool exploratory;  // no lattice matching is asserted
    SpectrumOptions options;
    std::optional<LevelLattice> target;   // bounded lattice the spectrum is compared with
    std::optional<LevelLattice> naive;    // both signed branches merged
    std::vector<TruncationSpectrum> spectra;
    std::vector<TrackedLevel> rows;

    // Over the tracked levels of the largest truncation.
    bool all_converged;
    double max_mismatch;          // relative to the bounded lattice
    double max_signed_distance;   // relative to the signed lattice
    double max_imag;
    LatticeKind finding;          // None when neither lattice matches decisively
};

/// Diagonalizes the truncated Hamiltonian for every n_max (concurrently, in
/// parity sectors) and matches the k lowest levels against the lattices.
SpectrumReport convergence_study(const ModelParams& p, const std::vector<int>& n_list,
                                 const SpectrumOptions& options = {});

} // namespace ptlab

#endif
