#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace dias {

/// Exact rational scalar (GMP-backed, always kept in lowest terms with a
/// positive denominator). Expression templates are disabled so the type
/// composes cleanly with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "a", "-a" or "a/b" (optional surrounding whitespace). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Height of a rational: max(|num|, den). Used to order sample points.
Rational height(const Rational& r);

}  // namespace dias

namespace Eigen {

template <>
struct NumTraits<dias::Rational> : GenericNumTraits<dias::Rational> {
  using Real = dias::Rational;
  using NonInteger = dias::Rational;
  using Literal = dias::Rational;
  using Nested = dias::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 80
  };

  // Exact arithmetic: there is no rounding to tolerate.
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
