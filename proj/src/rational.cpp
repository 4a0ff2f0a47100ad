#include "homlie/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace homlie {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  // mpz rejects a leading '+'.
  auto strip_plus = [](std::string_view s) { return s.front() == '+' ? s.substr(1) : s; };
  mpz_class n(std::string(strip_plus(num)), 10);
  mpz_class d(1);
  if (!den.empty()) d = mpz_class(std::string(strip_plus(den)), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace homlie
