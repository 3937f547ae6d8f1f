#pragma once

// Truncated model of the polynomial dialgebra K[x,y]:
//   f -| g = f(x,y) g(y,y),   f |- g = f(x,x) g(x,y).
// Every polynomial carries a total-degree bound; results that would exceed
// it raise DegreeBoundError instead of being truncated.

#include "dias/checks.hpp"
#include "dias/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dias::kxy {

inline constexpr int kDefaultBound = 8;

class DegreeBoundError : public std::range_error {
 public:
  using std::range_error::range_error;
};

class BivariatePoly {
 public:
  using Exponent = std::pair<int, int>;  // (deg_x, deg_y)

  explicit BivariatePoly(int bound = kDefaultBound);

  static BivariatePoly constant(const Rational& c, int bound = kDefaultBound);
  static BivariatePoly monomial(int a, int b, const Rational& c = Rational(1), int bound = kDefaultBound);
  static BivariatePoly x(int bound = kDefaultBound) { return monomial(1, 0, Rational(1), bound); }
  static BivariatePoly y(int bound = kDefaultBound) { return monomial(0, 1, Rational(1), bound); }

  int bound() const { return bound_; }
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }
  bool depends_on_y() const;
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coeff(int a, int b) const;

  void add_term(int a, int b, const Rational& c);

  /// f(x,x) and f(y,y).
  BivariatePoly diag_x() const;
  BivariatePoly diag_y() const;

  BivariatePoly with_bound(int bound) const;

  BivariatePoly operator-() const;
  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const Rational& c, const BivariatePoly& a);
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

 private:
  int bound_;
  std::map<Exponent, Rational> terms_;  // no zero coefficients
};

/// Text form: sum of terms c*x^a*y^b, e.g. "3/2*x^2*y - x + 1".
BivariatePoly parse_poly(std::string_view text, int bound = kDefaultBound);
std::string format_poly(const BivariatePoly& p);

BivariatePoly dashv(const BivariatePoly& f, const BivariatePoly& g);
BivariatePoly vdash(const BivariatePoly& f, const BivariatePoly& g);

/// sum_{k=0}^{m-1} x^k y^{m-1-k}, written out term by term.
BivariatePoly geometric_sum(int m, int bound = kDefaultBound);

/// h = (x - y) q, or nullopt when x - y does not divide h.
std::optional<BivariatePoly> divide_by_x_minus_y(const BivariatePoly& h);

bool ann_membership(const BivariatePoly& h);
bool halo_membership(const BivariatePoly& h);

/// Checks h |- m = m and m -| h = m for every monomial m that keeps both
/// products within the bound.
bool halo_membership_direct(const BivariatePoly& h);

/// m x^{m-1} y^n f(x) + x^m y^n (x-y) g + n x^m y^{n-1} f(y). f must not
/// involve y.
BivariatePoly derivation_apply(const BivariatePoly& f, const BivariatePoly& g, int m, int n);

/// f y^n sum_{k<m} x^k y^{m-1-k} + g x^m sum_{k<n} x^k y^{n-1-k}.
BivariatePoly diderivation_apply(const BivariatePoly& f, const BivariatePoly& g, int m, int n);

/// Linear extensions of the two maps above to a whole polynomial.
BivariatePoly derivation_map(const BivariatePoly& f, const BivariatePoly& g, const BivariatePoly& h);
BivariatePoly diderivation_map(const BivariatePoly& f, const BivariatePoly& g, const BivariatePoly& h);

/// Ad_p(h) = p (h(x,x) - h(y,y)).
BivariatePoly inner_dider_formula(const BivariatePoly& p, const BivariatePoly& h);
/// Ad_p(h) = h |- p - p -| h.
BivariatePoly inner_dider_operator(const BivariatePoly& p, const BivariatePoly& h);
/// Closed form; throws std::logic_error if the operator route disagrees.
BivariatePoly inner_dider_apply(const BivariatePoly& p, const BivariatePoly& h);

/// ad_p(h) = h -| p - p |- h.
BivariatePoly inner_der_operator(const BivariatePoly& p, const BivariatePoly& h);

/// All monomials x^a y^b with a + b <= bound, by total degree then a.
std::vector<BivariatePoly> monomials(int bound);

/// Both associativities and D3-D5 on every monomial triple whose products
/// stay within the bound. Requires bound >= 3.
CheckReport check_axioms_truncated(int bound);

/// The full K[x,y] suite at one bound: axioms, ann vs divisibility, the
/// derivation and diderivation closed forms, inner diderivations, halo.
CheckReport check_kxy(int bound, std::uint64_t seed);

}  // namespace dias::kxy
