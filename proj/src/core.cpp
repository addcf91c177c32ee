#include "ptlab/errors.hpp"
#include "ptlab/types.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace ptlab {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidParams: return "invalid-params";
    case ErrorKind::WrongCase: return "wrong-case";
    case ErrorKind::SingularMap: return "singular-map";
    case ErrorKind::DimensionCap: return "dimension-cap-exceeded";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::SingularMetric: return "singular-metric";
    case ErrorKind::NotPseudoHermitian: return "not-pseudo-hermitian";
    case ErrorKind::InitialNotSelfAdjoint: return "initial-not-selfadjoint";
    case ErrorKind::EigenSolverFailure: return "eigensolver-failure";
    case ErrorKind::ParamsMismatch: return "params-mismatch";
    case ErrorKind::InvalidInput: return "invalid-input";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), m_kind(kind)
{
}

MatX expm(const MatX& a)
{
    return a.exp();
}

Mat4 expm(const Mat4& a)
{
    return a.exp();
}

} // namespace ptlab
