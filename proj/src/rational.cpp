#include "dias/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace dias {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!all_digits(den)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (!all_digits(num)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

  using boost::multiprecision::mpz_int;
  const mpz_int n(std::string{num});
  const mpz_int d = den.empty() ? mpz_int(1) : mpz_int(std::string{den});
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

Rational height(const Rational& r) {
  using boost::multiprecision::abs;
  const auto num = abs(numerator(r));
  const auto den = denominator(r);
  return Rational(num > den ? num : den);
}

}  // namespace dias
