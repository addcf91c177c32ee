#include "ptlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <numbers>

#include <fmt/format.h>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "ptlab/errors.hpp"
#include "ptlab/fock.hpp"

namespace ptlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

bool by_real_then_imag(cplx l, cplx r)
{
    if (l.real() != r.real()) return l.real() < r.real();
    return l.imag() < r.imag();
}

void sort_levels(std::vector<Level>& levels)
{
    std::sort(levels.begin(), levels.end(), [](const Level& l, const Level& r) {
        if (l.energy != r.energy) return l.energy < r.energy;
        if (l.n1 != r.n1) return l.n1 < r.n1;
        return l.n2 < r.n2;
    });
}

const Level* nearest(const std::vector<Level>& levels, cplx value)
{
    const Level* best = nullptr;
    double best_d = kInf;
    for (const Level& l : levels) {
        const double d = std::abs(value - l.energy);
        if (d < best_d) {
            best_d = d;
            best = &l;
        }
    }
    return best;
}

// Greedy unique assignment of values to lattice points by increasing distance.
// Returns, per value, the index of its lattice point or -1.
std::vector<int> assign(const std::vector<cplx>& values, const std::vector<Level>& levels, double radius)
{
    struct Candidate
    {
        double distance;
        std::size_t value;
        std::size_t level;
    };
    std::vector<Candidate> candidates;
    for (std::size_t v = 0; v < values.size(); ++v)
        for (std::size_t l = 0; l < levels.size(); ++l) {
            const double d = std::abs(values[v] - levels[l].energy);
            if (d <= radius) candidates.push_back({d, v, l});
        }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });

    std::vector<int> out(values.size(), -1);
    std::vector<bool> taken(levels.size(), false);
    for (const Candidate& c : candidates) {
        if (out[c.value] >= 0 || taken[c.level]) continue;
        out[c.value] = static_cast<int>(c.level);
        taken[c.level] = true;
    }
    return out;
}

struct Lattices
{
    std::optional<LevelLattice> target;
    std::optional<LevelLattice> naive;
    double radius = 0.0;
};

Lattices lattices_for(const ModelParams& p, int k)
{
    Lattices out;
    const int span = std::max(4 * k, 16);
    if (p.is_hermitian_control()) {
        const double w1 = std::abs(p.a1());
        const double w2 = std::abs(p.a2());
        out.target = closed_form_levels(w1, w2, span);
        out.radius = 0.25 * std::min(w1, w2);
        return out;
    }
    if (classify(p) != Regime::CaseI) return out;

    const DerivedParams d = derive_all(p);
    const ModeFrequencies f = frequency_identification(d);
    out.target = closed_form_levels(f.omega1, f.omega2, span);
    out.radius = 0.25 * std::min(f.omega1, f.omega2);

    const int side = k + 8;
    LevelLattice merged = naive_levels(d.U, d.omega, Branch::One, side);
    const LevelLattice other = naive_levels(d.U, d.omega, Branch::Two, side);
    merged.sign = 0;
    merged.levels.insert(merged.levels.end(), other.levels.begin(), other.levels.end());
    sort_levels(merged.levels);
    out.naive = std::move(merged);
    return out;
}

TruncationSpectrum diagonalize(const ModelParams& p, int n_max, int cap)
{
    const FockSpec spec(n_max, cap);
    const OperatorSet ops = build_operators(spec);
    TruncationSpectrum t{n_max, numerical_spectrum_by_sector(build_hamiltonian(p, ops), ops.parity), 0.0};
    t.pairing_residual = conjugation_pairing_residual(t.eigenvalues);
    return t;
}

} // namespace

std::optional<double> LevelLattice::energy(int n1, int n2) const
{
    for (const Level& l : levels)
        if (l.n1 == n1 && l.n2 == n2) return l.energy;
    return std::nullopt;
}

LevelLattice closed_form_levels(double omega1, double omega2, int k)
{
    if (!(omega1 > 0.0) || !(omega2 > 0.0))
        throw Error(ErrorKind::InvalidInput, "lattice frequencies must be positive");
    if (k < 0) throw Error(ErrorKind::InvalidInput, "level count must be non-negative");
    LevelLattice lat{omega1, omega2, 0, {}};
    // any of the k lowest levels has n1, n2 < k
    for (int n1 = 0; n1 < k; ++n1)
        for (int n2 = 0; n2 < k; ++n2)
            lat.levels.push_back({n1, n2, (n1 + 0.5) * omega1 + (n2 + 0.5) * omega2});
    sort_levels(lat.levels);
    lat.levels.resize(static_cast<std::size_t>(k));
    return lat;
}

LevelLattice naive_levels(double U, double omega, Branch branch, int k)
{
    if (!(U > 0.0) || !(omega > 0.0)) throw Error(ErrorKind::InvalidInput, "U and omega must be positive");
    if (k < 0) throw Error(ErrorKind::InvalidInput, "level count must be non-negative");
    const double w1 = omega / U;
    const double w2 = U * omega;
    const int sign = branch == Branch::One ? 1 : -1;
    LevelLattice lat{w1, w2, sign, {}};
    for (int n1 = 0; n1 < k; ++n1)
        for (int n2 = 0; n2 < k; ++n2)
            lat.levels.push_back({n1, n2, sign * ((n1 + 0.5) * w1 - (n2 + 0.5) * w2)});
    sort_levels(lat.levels);
    return lat;
}

std::vector<cplx> numerical_spectrum(const MatX& h)
{
    if (h.rows() != h.cols())
        throw Error(ErrorKind::DimensionMismatch, fmt::format("matrix is {}x{}", h.rows(), h.cols()));
    const auto n = static_cast<lapack_int>(h.rows());
    if (n == 0) return {};
    if (!h.allFinite()) throw Error(ErrorKind::EigenSolverFailure, "matrix has non-finite entries");

    MatX a = h;
    VecX w(n);
    const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, w.data(), nullptr, 1,
                                          nullptr, 1);
    if (info != 0) {
        const double norm1 = h.cwiseAbs().colwise().sum().maxCoeff();
        throw Error(ErrorKind::EigenSolverFailure,
                    fmt::format("zgeev info {} (dimension {}, 1-norm {:.6e})", info, n, norm1));
    }
    std::vector<cplx> eigs(w.data(), w.data() + n);
    std::sort(eigs.begin(), eigs.end(), by_real_then_imag);
    return eigs;
}

std::vector<cplx> numerical_spectrum_by_sector(const MatX& h, const Eigen::VectorXd& sector)
{
    if (h.rows() != h.cols() || sector.size() != h.rows())
        throw Error(ErrorKind::DimensionMismatch, "sector labels must match the matrix dimension");

    std::map<double, std::vector<Eigen::Index>> blocks;
    for (Eigen::Index i = 0; i < sector.size(); ++i) blocks[sector(i)].push_back(i);

    for (Eigen::Index j = 0; j < h.cols(); ++j)
        for (Eigen::Index i = 0; i < h.rows(); ++i)
            if (sector(i) != sector(j) && h(i, j) != cplx(0.0))
                throw Error(ErrorKind::InvalidInput,
                            fmt::format("matrix couples sectors at ({}, {})", i, j));

    std::vector<cplx> eigs;
    eigs.reserve(static_cast<std::size_t>(h.rows()));
    for (const auto& [label, idx] : blocks) {
        const auto m = static_cast<Eigen::Index>(idx.size());
        MatX block(m, m);
        for (Eigen::Index c = 0; c < m; ++c)
            for (Eigen::Index r = 0; r < m; ++r) block(r, c) = h(idx[r], idx[c]);
        const std::vector<cplx> part = numerical_spectrum(block);
        eigs.insert(eigs.end(), part.begin(), part.end());
    }
    std::sort(eigs.begin(), eigs.end(), by_real_then_imag);
    return eigs;
}

double determinant_consistency(const MatX& h, const std::vector<cplx>& eigs)
{
    if (static_cast<Eigen::Index>(eigs.size()) != h.rows())
        throw Error(ErrorKind::DimensionMismatch, "eigenvalue count differs from dimension");
    const Eigen::PartialPivLU<MatX> lu(h);
    const MatX& packed = lu.matrixLU();
    cplx log_det = lu.permutationP().determinant() < 0 ? cplx(0.0, std::numbers::pi) : cplx(0.0);
    for (Eigen::Index i = 0; i < packed.rows(); ++i) {
        if (packed(i, i) == cplx(0.0)) return kInf;
        log_det += std::log(packed(i, i));
    }
    cplx log_prod{0.0};
    for (cplx e : eigs) {
        if (e == cplx(0.0)) return kInf;
        log_prod += std::log(e);
    }
    const cplx delta = log_prod - log_det;
    const double phase = std::remainder(delta.imag(), 2.0 * std::numbers::pi);
    return std::abs(std::exp(cplx(delta.real(), phase)) - 1.0);
}

double conjugation_pairing_residual(const std::vector<cplx>& eigs)
{
    double worst = 0.0;
    for (cplx e : eigs) {
        double best = kInf;
        for (cplx f : eigs) best = std::min(best, std::abs(e - std::conj(f)));
        worst = std::max(worst, best);
    }
    return worst;
}

std::string_view to_string(LatticeKind kind) noexcept
{
    switch (kind) {
    case LatticeKind::Bounded: return "eq34";
    case LatticeKind::Signed: return "eq29";
    case LatticeKind::None: return "none";
    }
    return "none";
}

SpectrumReport convergence_study(const ModelParams& p, const std::vector<int>& n_list,
                                 const SpectrumOptions& options)
{
    if (n_list.empty()) throw Error(ErrorKind::InvalidInput, "n_max list is empty");
    if (options.k < 1) throw Error(ErrorKind::InvalidInput, "level count must be positive");
    for (int n : n_list) {
        const FockSpec check(n, options.dimension_cap);
        if ((n + 1) * (n + 1) < options.k)
            throw Error(ErrorKind::InvalidInput, fmt::format("n_max {} has fewer than {} levels", n, options.k));
    }

    std::vector<int> sorted = n_list;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const Regime regime = p.is_hermitian_control() ? Regime::CaseI : classify(p);
    Lattices lat = lattices_for(p, options.k);

    SpectrumReport report{p, regime, !lat.target.has_value(), options, lat.target, lat.naive, {}, {},
                          false, kNaN, kNaN, kNaN, LatticeKind::None};

    std::vector<std::future<TruncationSpectrum>> jobs;
    for (int n : sorted)
        jobs.push_back(std::async(std::launch::async, diagonalize, p, n, options.dimension_cap));
    for (auto& job : jobs) report.spectra.push_back(job.get());

    const auto k = static_cast<std::size_t>(options.k);
    const std::vector<cplx>* previous = nullptr;
    for (const TruncationSpectrum& t : report.spectra) {
        const std::vector<cplx> low(t.eigenvalues.begin(), t.eigenvalues.begin() + static_cast<long>(k));
        std::vector<int> bounded(k, -1);
        std::vector<int> signed_match(k, -1);
        if (lat.target) bounded = assign(low, lat.target->levels, lat.radius);
        if (lat.naive) signed_match = assign(low, lat.naive->levels, lat.radius);

        for (std::size_t i = 0; i < k; ++i) {
            TrackedLevel row{t.n_max, static_cast<int>(i), low[i], kNaN, false, LatticeKind::None, -1, -1,
                             kNaN, kNaN, kNaN};
            if (previous) row.drift = std::abs(low[i] - (*previous)[i]);
            row.converged = previous && row.drift < options.drift_tolerance &&
                            std::abs(low[i].imag()) < options.imag_tolerance;
            if (lat.target) row.bounded_distance = std::abs(low[i] - nearest(lat.target->levels, low[i])->energy);
            if (lat.naive) row.signed_distance = std::abs(low[i] - nearest(lat.naive->levels, low[i])->energy);

            const Level* hit = nullptr;
            if (bounded[i] >= 0) {
                hit = &lat.target->levels[static_cast<std::size_t>(bounded[i])];
                row.lattice = LatticeKind::Bounded;
            }
            else if (signed_match[i] >= 0) {
                hit = &lat.naive->levels[static_cast<std::size_t>(signed_match[i])];
                row.lattice = LatticeKind::Signed;
            }
            if (hit) {
                row.matched_n1 = hit->n1;
                row.matched_n2 = hit->n2;
                row.mismatch = std::abs(low[i] - hit->energy);
            }
            report.rows.push_back(row);
        }
        previous = &t.eigenvalues;
    }

    // Summary over the largest truncation.
    const auto last = report.rows.end() - static_cast<long>(k);
    report.all_converged = std::all_of(last, report.rows.end(), [](const TrackedLevel& r) { return r.converged; });
    report.max_imag = 0.0;
    for (auto it = last; it != report.rows.end(); ++it) report.max_imag = std::max(report.max_imag, std::abs(it->value.imag()));
    if (report.exploratory) return report;

    double bounded_rel = 0.0;
    double signed_rel = 0.0;
    for (auto it = last; it != report.rows.end(); ++it) {
        const double scale = std::abs(it->value);
        bounded_rel = std::max(bounded_rel, it->lattice == LatticeKind::Bounded ? it->mismatch / scale : kInf);
        signed_rel = std::max(signed_rel, lat.naive ? it->signed_distance / scale : kInf);
    }
    report.max_mismatch = bounded_rel;
    report.max_signed_distance = lat.naive ? signed_rel : kNaN;
    if (report.all_converged) {
        if (bounded_rel <= options.match_tolerance)
            report.finding = LatticeKind::Bounded;
        else if (signed_rel <= options.match_tolerance)
            report.finding = LatticeKind::Signed;
    }
    return report;
}

} // namespace ptlab
