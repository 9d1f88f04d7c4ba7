#pragma once

#include <functional>
#include <string>

namespace radheat {

/// Parses an arithmetic expression in the variable x into an evaluator.
/// Grammar: numbers, x, pi, + - * / ^ (right-assoc), parentheses, and the
/// functions sin cos tan exp log sqrt abs. Throws std::invalid_argument
/// on malformed input.
std::function<double(double)> parse_expression(const std::string& text);

} // namespace radheat
