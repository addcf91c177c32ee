#ifndef PTLAB_ERRORS_HPP
#define PTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptlab {

enum class ErrorKind {
    InvalidParams,
    WrongCase,
    SingularMap,
    DimensionCap,
    DimensionMismatch,
    SingularMetric,
    NotPseudoHermitian,
    InitialNotSelfAdjoint,
    EigenSolverFailure,
    ParamsMismatch,
    InvalidInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return m_kind; }

private:
    ErrorKind m_kind;
};

} // namespace ptlab

#endif
