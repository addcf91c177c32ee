#ifndef PTLAB_DYNAMICS_HPP
#define PTLAB_DYNAMICS_HPP

#include <vector>

#include "ptlab/params.hpp"
#include "ptlab/types.hpp"

namespace ptlab {

/// Flow matrix of the linear Hamilton equations, dz/dt = A z with z = (x1, x2, p1, p2).
class HamiltonMatrix
{
public:
    /// Builds A row by row from the equations of motion and cross-checks it
    /// against J C.
    explicit HamiltonMatrix(const ModelParams& p);

    const Mat4& matrix() const noexcept { return m_a; }
    const ModelParams& params() const noexcept { return m_params; }
    /// ||A - J C||_max at construction.
    double construction_residual() const noexcept { return m_residual; }

private:
    ModelParams m_params;
    Mat4 m_a;
    double m_residual;
};

struct Trajectory
{
    ModelParams params;
    std::vector<double> times;
    std::vector<Vec4> states;
};

/// z(t) = exp(A t) z0 at every grid time, each computed directly from z0.
/// Times must be finite and strictly ascending.
Trajectory evolve(const ModelParams& p, const Vec4& z0, const std::vector<double>& times);

/// n points evenly spaced on [t0, t1].
std::vector<double> uniform_grid(double t0, double t1, int n);

struct PolynomialCheck
{
    double residual;  // ||A^4 + (a1^2 + a2^2) A^2 + (a1^2 a2^2 + a3^2/4) I||_max
    double scale;     // ||A||^4 in the induced infinity norm
    bool holds(double rel_tol = 1e-12) const { return residual <= rel_tol * scale; }
};

/// The fourth-order equation of motion as a matrix identity satisfied by A.
PolynomialCheck fourth_order_residual(const ModelParams& p);

/// Same polynomial evaluated at an arbitrary matrix (negative controls).
PolynomialCheck fourth_order_residual(const ModelParams& p, const Mat4& a);

struct PuFormCheck
{
    double sum;                 // a1^2 + a2^2
    double product;             // a1^2 a2^2 + a3^2 / 4
    cplx frequency_sum;         // w1^2 + w2^2 from the roots
    cplx frequency_product;     // w1^2 w2^2 from the roots
    double residual;            // max relative difference
};

/// Rebuilds the fourth-order coefficients from the frequency roots. With
/// `real_coefficients`, CaseIII (complex roots) is rejected with WrongCase.
PuFormCheck pu_form_residual(const ModelParams& p, bool real_coefficients = false);

/// Largest relative residual of the second-order equations for x1, x2 along
/// the trajectory. Throws ParamsMismatch when the trajectory belongs to other
/// parameters.
double second_order_check(const ModelParams& p, const Trajectory& traj);

/// 1/2 z^T C z
cplx energy(const ModelParams& p, const Vec4& z);

/// max_t |H(z(t)) - H(z(0))| / |H(z(0))| (absolute when H(z(0)) = 0).
double energy_drift(const Trajectory& traj);

/// Largest |z_i(t)| and largest |Im z_i(t)| along the trajectory.
double max_amplitude(const Trajectory& traj);
double max_imaginary_part(const Trajectory& traj);

} // namespace ptlab

#endif
