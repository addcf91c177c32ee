#ifndef PTLAB_CLI_EXPRESSION_HPP
#define PTLAB_CLI_EXPRESSION_HPP

#include <string_view>

namespace ptlab::cli {

/// Parses a number written as a decimal literal, "N/M", "sqrt(N)" or
/// "sqrt(N/M)", each optionally preceded by a minus sign. The root and the
/// quotient are taken once, on the parsed literals, so "sqrt(5)" is the
/// correctly rounded square root of 5. Throws ptlab::Error(InvalidInput).
double parse_expression(std::string_view text);

} // namespace ptlab::cli

#endif
