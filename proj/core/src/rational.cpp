#include "ordgrp/rational.hpp"

#include <cctype>
#include <limits>

#include "ordgrp/error.hpp"

namespace ordgrp {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
  for (std::size_t k = i; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
  BigInt value(std::string(text.substr(i)));
  return text[0] == '-' ? BigInt(-value) : value;
}

nlohmann::json integer_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return n.convert_to<std::int64_t>();
  return n.str();
}

BigInt integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>(), j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

nlohmann::json rational_to_json(const Rational& q) {
  return nlohmann::json{{"num", integer_to_json(numerator(q))}, {"den", integer_to_json(denominator(q))}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_object()) {
    if (!j.contains("num") || !j.contains("den"))
      throw Error(ErrorCode::ParseError, "rational object needs num and den: " + j.dump());
    const BigInt den = integer_from_json(j.at("den"));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator: " + j.dump());
    return Rational(integer_from_json(j.at("num")), den);
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "not a rational: " + j.dump());
}

}  // namespace ordgrp
