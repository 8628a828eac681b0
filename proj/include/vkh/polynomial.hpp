#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace vkh {

/// Laurent polynomial in q: exponent -> coefficient, zeros dropped.
using LaurentPoly = std::map<int, long long>;

/// dim Kh^{i,j} keyed by (i, j), zeros dropped.
using KhPolynomial = std::map<std::pair<int, int>, long long>;

/// Terms in ascending (i, j): coefficient, q power, t power, and negative powers
/// in a "/" denominator, e.g. "1/q^9t^3+1/q^5t^2+1/q^3+1/q".
std::string format_kh(const KhPolynomial& p);

/// Accepts the formatted notation plus LaTeX braces, "\quad" and whitespace.
/// Throws Error(malformed_token).
KhPolynomial parse_kh(std::string_view text);

std::string format_laurent(const LaurentPoly& p);

LaurentPoly graded_euler_characteristic(const KhPolynomial& p);

/// Intercepts j - 2i of the support.
std::set<int> diagonal_support(const KhPolynomial& p);

/// (i, j) -> (-i, -j).
KhPolynomial mirror_flip(const KhPolynomial& p);

}  // namespace vkh
