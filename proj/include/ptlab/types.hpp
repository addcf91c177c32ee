#ifndef PTLAB_TYPES_HPP
#define PTLAB_TYPES_HPP

#include <complex>

#include <Eigen/Dense>

namespace ptlab {

using cplx = std::complex<double>;

// Phase-space objects are always ordered (x1, x2, p1, p2).
using Mat4 = Eigen::Matrix<cplx, 4, 4>;
using Vec4 = Eigen::Matrix<cplx, 4, 1>;

using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

inline constexpr cplx kImag{0.0, 1.0};

/// Largest absolute entry; the norm every residual in this project is quoted in.
template <typename Derived>
double max_norm(const Eigen::MatrixBase<Derived>& m)
{
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

/// Matrix exponential (Pade approximant with scaling and squaring).
MatX expm(const MatX& a);
Mat4 expm(const Mat4& a);

} // namespace ptlab

#endif
