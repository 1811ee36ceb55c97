#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace ordgrp {

/// Exact rational, always normalized (den > 0, gcd(num, den) = 1).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Accepts "p", "p/q" and "-p/q". Throws ParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// {"num": p, "den": q}; integers outside the int64 range are emitted as strings.
nlohmann::json rational_to_json(const Rational& q);
/// Accepts the object form, a plain integer, or a "p/q" string.
Rational rational_from_json(const nlohmann::json& j);

}  // namespace ordgrp
