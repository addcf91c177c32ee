#include "ptlab/cli/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "ptlab/errors.hpp"

namespace ptlab::cli {

namespace {

[[noreturn]] void fail(std::string_view text, std::string_view why)
{
    throw Error(ErrorKind::InvalidInput, "cannot parse '" + std::string(text) + "': " + std::string(why));
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double literal(std::string_view whole, std::string_view s)
{
    s = trim(s);
    if (s.empty()) fail(whole, "missing number");
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) fail(whole, "not a number");
    if (!std::isfinite(v)) fail(whole, "not finite");
    return v;
}

double ratio(std::string_view whole, std::string_view s)
{
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return literal(whole, s);
    const double num = literal(whole, s.substr(0, slash));
    const double den = literal(whole, s.substr(slash + 1));
    if (den == 0.0) fail(whole, "division by zero");
    return num / den;
}

} // namespace

double parse_expression(std::string_view text)
{
    std::string_view s = trim(text);
    double sign = 1.0;
    if (!s.empty() && s.front() == '-') {
        sign = -1.0;
        s = trim(s.substr(1));
    }
    constexpr std::string_view root = "sqrt(";
    if (s.substr(0, root.size()) == root) {
        if (s.back() != ')') fail(text, "unbalanced parenthesis");
        const double arg = ratio(text, s.substr(root.size(), s.size() - root.size() - 1));
        if (arg < 0.0) fail(text, "negative square root");
        return sign * std::sqrt(arg);
    }
    if (!s.empty() && s.front() == '-') fail(text, "repeated sign");
    return sign * ratio(text, s);
}

} // namespace ptlab::cli
