#include "dias/kxy.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>

namespace dias::kxy {

namespace {

using R = Rational;

void check_fits(int a, int b, int bound) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
  if (a + b > bound)
    throw DegreeBoundError("degree bound exceeded: x^" + std::to_string(a) + "*y^" + std::to_string(b) +
                           " exceeds total degree " + std::to_string(bound));
}

}  // namespace

BivariatePoly::BivariatePoly(int bound) : bound_(bound) {
  if (bound < 0) throw std::invalid_argument("degree bound must be non-negative");
}

BivariatePoly BivariatePoly::constant(const Rational& c, int bound) { return monomial(0, 0, c, bound); }

BivariatePoly BivariatePoly::monomial(int a, int b, const Rational& c, int bound) {
  BivariatePoly p(bound);
  p.add_term(a, b, c);
  return p;
}

int BivariatePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

bool BivariatePoly::depends_on_y() const {
  for (const auto& [e, c] : terms_)
    if (e.second > 0) return true;
  return false;
}

Rational BivariatePoly::coeff(int a, int b) const {
  const auto it = terms_.find({a, b});
  return it == terms_.end() ? R(0) : it->second;
}

void BivariatePoly::add_term(int a, int b, const Rational& c) {
  if (dias::is_zero(c)) return;
  check_fits(a, b, bound_);
  auto [it, inserted] = terms_.emplace(Exponent{a, b}, c);
  if (inserted) return;
  it->second += c;
  if (dias::is_zero(it->second)) terms_.erase(it);
}

BivariatePoly BivariatePoly::diag_x() const {
  BivariatePoly out(bound_);
  for (const auto& [e, c] : terms_) out.add_term(e.first + e.second, 0, c);
  return out;
}

BivariatePoly BivariatePoly::diag_y() const {
  BivariatePoly out(bound_);
  for (const auto& [e, c] : terms_) out.add_term(0, e.first + e.second, c);
  return out;
}

BivariatePoly BivariatePoly::with_bound(int bound) const {
  BivariatePoly out(bound);
  for (const auto& [e, c] : terms_) out.add_term(e.first, e.second, c);
  return out;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly out(bound_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out(std::min(a.bound_, b.bound_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

BivariatePoly operator*(const Rational& c, const BivariatePoly& a) {
  BivariatePoly out(a.bound_);
  for (const auto& [e, v] : a.terms_) out.add_term(e.first, e.second, c * v);
  return out;
}

// ---- text ---------------------------------------------------------------

namespace {

int parse_exponent(std::string_view s, std::string_view term) {
  if (s.empty()) return 1;
  if (s.front() != '^' || s.size() == 1 || s.size() > 4)
    throw std::invalid_argument("bad exponent in term '" + std::string(term) + "'");
  int v = 0;
  for (char c : s.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad exponent in term '" + std::string(term) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

BivariatePoly parse_poly(std::string_view text, int bound) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  BivariatePoly out(bound);
  std::size_t i = 0;
  while (i < s.size()) {
    R sign(1);
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = R(-1);
      ++i;
    } else if (i != 0) {
      throw std::invalid_argument("expected '+' or '-' in '" + s + "'");
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    const std::string_view term = std::string_view(s).substr(i, j - i);
    if (term.empty()) throw std::invalid_argument("empty term in '" + s + "'");

    R coeff = sign;
    int a = 0, b = 0;
    std::size_t k = 0;
    while (k <= term.size()) {
      const std::size_t star = std::min(term.find('*', k), term.size());
      const std::string_view factor = term.substr(k, star - k);
      if (factor.empty()) throw std::invalid_argument("empty factor in term '" + std::string(term) + "'");
      if (factor.front() == 'x') a += parse_exponent(factor.substr(1), term);
      else if (factor.front() == 'y') b += parse_exponent(factor.substr(1), term);
      else coeff *= parse_rational(factor);
      k = star + 1;
    }
    out.add_term(a, b, coeff);
    i = j;
  }
  return out;
}

std::string format_poly(const BivariatePoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<BivariatePoly::Exponent, R>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
    return dl != dr ? dl > dr : l.first.first > r.first.first;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const R mag = negative ? R(-c) : c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    std::string mono;
    if (e.first > 0) mono += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
    if (e.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += e.second == 1 ? "y" : "y^" + std::to_string(e.second);
    }
    if (mono.empty()) out += to_string(mag);
    else if (mag == 1) out += mono;
    else out += to_string(mag) + "*" + mono;
  }
  return out;
}

// ---- products and structure -----------------------------------------------

BivariatePoly dashv(const BivariatePoly& f, const BivariatePoly& g) { return f * g.diag_y(); }
BivariatePoly vdash(const BivariatePoly& f, const BivariatePoly& g) { return f.diag_x() * g; }

BivariatePoly geometric_sum(int m, int bound) {
  BivariatePoly out(bound);
  for (int k = 0; k < m; ++k) out.add_term(k, m - 1 - k, R(1));
  return out;
}

std::optional<BivariatePoly> divide_by_x_minus_y(const BivariatePoly& h) {
  // Per homogeneous degree d: if h_d = sum c_a x^a y^{d-a} = (x - y) sum q_a x^a y^{d-1-a},
  // then c_a = q_{a-1} - q_a, so q_{a-1} = c_a + q_a from the top down and c_0 + q_0 = 0.
  BivariatePoly q(h.bound());
  const int top = h.degree();
  for (int d = 1; d <= top; ++d) {
    R carry(0);  // q_a, starting from q_d = 0
    for (int a = d; a >= 1; --a) {
      carry = h.coeff(a, d - a) + carry;
      q.add_term(a - 1, d - a, carry);
    }
    if (h.coeff(0, d) + carry != 0) return std::nullopt;
  }
  if (h.coeff(0, 0) != 0) return std::nullopt;
  return q;
}

bool ann_membership(const BivariatePoly& h) { return h.diag_x().is_zero() && h.diag_y().is_zero(); }

bool halo_membership(const BivariatePoly& h) {
  return ann_membership(h - BivariatePoly::constant(R(1), h.bound()));
}

std::vector<BivariatePoly> monomials(int bound) {
  std::vector<BivariatePoly> out;
  for (int d = 0; d <= bound; ++d)
    for (int a = d; a >= 0; --a) out.push_back(BivariatePoly::monomial(a, d - a, R(1), bound));
  return out;
}

bool halo_membership_direct(const BivariatePoly& h) {
  const int room = h.bound() - std::max(h.degree(), 0);
  for (const auto& m : monomials(room)) {
    const auto mm = m.with_bound(h.bound());
    if (vdash(h, mm) != mm || dashv(mm, h) != mm) return false;
  }
  return true;
}

BivariatePoly derivation_apply(const BivariatePoly& f, const BivariatePoly& g, int m, int n) {
  if (f.depends_on_y()) throw std::invalid_argument("derivation_apply: f must be a polynomial in x alone");
  const int bound = std::min(f.bound(), g.bound());
  BivariatePoly out(bound);
  if (m > 0) out += R(m) * (BivariatePoly::monomial(m - 1, n, R(1), bound) * f);
  out += BivariatePoly::monomial(m, n, R(1), bound) * (BivariatePoly::x(bound) - BivariatePoly::y(bound)) * g;
  if (n > 0) out += R(n) * (BivariatePoly::monomial(m, n - 1, R(1), bound) * f.diag_y());
  return out;
}

BivariatePoly diderivation_apply(const BivariatePoly& f, const BivariatePoly& g, int m, int n) {
  const int bound = std::min(f.bound(), g.bound());
  BivariatePoly out(bound);
  if (m > 0) out += f * BivariatePoly::monomial(0, n, R(1), bound) * geometric_sum(m, bound);
  if (n > 0) out += g * BivariatePoly::monomial(m, 0, R(1), bound) * geometric_sum(n, bound);
  return out;
}

BivariatePoly derivation_map(const BivariatePoly& f, const BivariatePoly& g, const BivariatePoly& h) {
  BivariatePoly out(std::min(f.bound(), g.bound()));
  for (const auto& [e, c] : h.terms()) out += c * derivation_apply(f, g, e.first, e.second);
  return out;
}

BivariatePoly diderivation_map(const BivariatePoly& f, const BivariatePoly& g, const BivariatePoly& h) {
  BivariatePoly out(std::min(f.bound(), g.bound()));
  for (const auto& [e, c] : h.terms()) out += c * diderivation_apply(f, g, e.first, e.second);
  return out;
}

BivariatePoly inner_dider_formula(const BivariatePoly& p, const BivariatePoly& h) {
  return p * (h.diag_x() - h.diag_y());
}

BivariatePoly inner_dider_operator(const BivariatePoly& p, const BivariatePoly& h) {
  return vdash(h, p) - dashv(p, h);
}

BivariatePoly inner_dider_apply(const BivariatePoly& p, const BivariatePoly& h) {
  auto closed = inner_dider_formula(p, h);
  if (closed != inner_dider_operator(p, h)) throw std::logic_error("inner_dider_apply: the two routes disagree");
  return closed;
}

BivariatePoly inner_der_operator(const BivariatePoly& p, const BivariatePoly& h) {
  return dashv(h, p) - vdash(p, h);
}

// ---- sweeps ---------------------------------------------------------------

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t size) { return static_cast<std::size_t>(rng() % size); }

BivariatePoly random_poly(std::mt19937_64& rng, int degree, int bound, bool x_only = false) {
  BivariatePoly p(bound);
  for (int d = 0; d <= degree; ++d)
    for (int a = d; a >= 0; --a) {
      if (x_only && a != d) continue;
      if (pick(rng, 2) == 0) continue;
      p.add_term(a, d - a, R(static_cast<long>(pick(rng, 7)) - 3));
    }
  return p;
}

std::string mono_name(const BivariatePoly& m) { return format_poly(m); }

/// Runs `body` on every monomial pair; pairs whose evaluation leaves the
/// bound are skipped. Returns the number of pairs checked, or the failing
/// pair through `detail`.
template <typename Body>
std::size_t sweep_pairs(int bound, Body&& body, std::string& detail) {
  const auto ms = monomials(bound);
  std::size_t checked = 0;
  for (const auto& a : ms)
    for (const auto& b : ms) {
      bool ok;
      try {
        ok = body(a, b);
      } catch (const DegreeBoundError&) {
        continue;
      }
      ++checked;
      if (!ok) {
        detail = "a = " + mono_name(a) + ", b = " + mono_name(b);
        return checked;
      }
    }
  return checked;
}

struct Spec {
  BivariatePoly f, g;
};

std::string describe(const Spec& s) { return "f = " + format_poly(s.f) + ", g = " + format_poly(s.g); }

}  // namespace

CheckReport check_axioms_truncated(int bound) {
  if (bound < 3) throw std::invalid_argument("check_axioms_truncated: bound must be at least 3");
  const auto ms = monomials(bound);
  struct Law {
    const char* name;
    std::function<std::pair<BivariatePoly, BivariatePoly>(const BivariatePoly&, const BivariatePoly&,
                                                          const BivariatePoly&)>
        sides;
  };
  const std::vector<Law> laws{
      {"vdash-assoc", [](auto& x, auto& y, auto& z) { return std::pair{vdash(vdash(x, y), z), vdash(x, vdash(y, z))}; }},
      {"dashv-assoc", [](auto& x, auto& y, auto& z) { return std::pair{dashv(dashv(x, y), z), dashv(x, dashv(y, z))}; }},
      {"D3", [](auto& x, auto& y, auto& z) { return std::pair{dashv(x, dashv(y, z)), dashv(x, vdash(y, z))}; }},
      {"D4", [](auto& x, auto& y, auto& z) { return std::pair{vdash(dashv(x, y), z), vdash(vdash(x, y), z)}; }},
      {"D5", [](auto& x, auto& y, auto& z) { return std::pair{vdash(x, dashv(y, z)), dashv(vdash(x, y), z)}; }},
  };
  CheckReport report;
  for (const auto& law : laws) {
    std::size_t checked = 0;
    std::string detail;
    for (const auto& x : ms)
      for (const auto& y : ms)
        for (const auto& z : ms) {
          if (x.degree() + y.degree() + z.degree() > bound || !detail.empty()) continue;
          const auto [l, r] = law.sides(x, y, z);
          ++checked;
          if (l != r) detail = "(" + mono_name(x) + ", " + mono_name(y) + ", " + mono_name(z) + ")";
        }
    report.add(std::string("K[x,y] ") + law.name, detail.empty(),
               detail.empty() ? std::to_string(checked) + " triples" : detail);
  }
  return report;
}

CheckReport check_kxy(int bound, std::uint64_t seed) {
  if (bound < 3) throw std::invalid_argument("check_kxy: bound must be at least 3");
  CheckReport report = check_axioms_truncated(bound);
  std::mt19937_64 rng(seed);
  const auto X = BivariatePoly::x(bound), Y = BivariatePoly::y(bound), one = BivariatePoly::constant(R(1), bound);

  // ann versus divisibility by x - y, on a mix of multiples and arbitrary polynomials.
  {
    const int deg = std::min(8, bound);
    std::size_t members = 0;
    std::string detail;
    for (int i = 0; i < 200 && detail.empty(); ++i) {
      const auto h = i % 2 == 0 ? (X - Y) * random_poly(rng, deg - 1, bound) : random_poly(rng, deg, bound);
      const auto q = divide_by_x_minus_y(h);
      const bool divisible = q.has_value() && (X - Y) * *q == h;
      if (q && !divisible) detail = "bad quotient for " + format_poly(h);
      else if (ann_membership(h) != divisible) detail = format_poly(h);
      members += divisible ? 1 : 0;
    }
    report.add("ann <=> divisible by x - y", detail.empty(),
               detail.empty() ? "200 polynomials, " + std::to_string(members) + " in ann" : detail);
  }

  // derivations and diderivations from the closed forms
  std::vector<Spec> der_specs{{one, BivariatePoly(bound)}, {X, one}};
  std::vector<Spec> dider_specs{{one, one}, {X, Y}};
  for (int i = 0; i < 4; ++i) der_specs.push_back({random_poly(rng, 2, bound, true), random_poly(rng, 2, bound)});
  for (int i = 0; i < 4; ++i) dider_specs.push_back({random_poly(rng, 2, bound), random_poly(rng, 2, bound)});

  auto leibniz_sweep = [&](const std::string& name, const std::vector<Spec>& specs, bool dider) {
    std::size_t checked = 0;
    for (const auto& s : specs) {
      auto map = [&](const BivariatePoly& h) { return dider ? diderivation_map(s.f, s.g, h) : derivation_map(s.f, s.g, h); };
      std::string detail;
      checked += sweep_pairs(bound, [&](const BivariatePoly& a, const BivariatePoly& b) {
        for (int p = 0; p < 2; ++p) {
          auto mul = [p](const BivariatePoly& u, const BivariatePoly& v) { return p == 0 ? vdash(u, v) : dashv(u, v); };
          const auto lhs = map(mul(a, b));
          const auto rhs = dider ? dashv(map(a), b) + vdash(a, map(b)) : mul(map(a), b) + mul(a, map(b));
          if (lhs != rhs) return false;
        }
        return true;
      }, detail);
      if (!detail.empty()) {
        report.add(name, false, describe(s) + "; " + detail);
        return;
      }
    }
    report.add(name, checked > 0, std::to_string(specs.size()) + " maps, " + std::to_string(checked) + " pairs");
  };
  leibniz_sweep("derivation closed form is a derivation", der_specs, false);
  leibniz_sweep("diderivation closed form is a diderivation", dider_specs, true);
  std::vector<Spec> equal_specs;
  for (const auto& s : dider_specs) equal_specs.push_back({s.f, s.f});
  leibniz_sweep("diderivation closed form with g = f is a diderivation", equal_specs, true);

  // delta(x^m) = delta(x^{m-1}) -| x + x^{m-1} |- delta(x), against the closed form.
  {
    std::string detail;
    for (const auto& s : dider_specs) {
      for (int m = 1; m <= 6 && detail.empty(); ++m) {
        try {
          const auto prev = diderivation_apply(s.f, s.g, m - 1, 0);
          const auto xm1 = BivariatePoly::monomial(m - 1, 0, R(1), bound);
          const auto recursive = m == 1 ? s.f : dashv(prev, X) + vdash(xm1, s.f);
          if (recursive != diderivation_apply(s.f, s.g, m, 0) || diderivation_apply(s.f, s.g, m, 0) != s.f * geometric_sum(m, bound))
            detail = describe(s) + ", m = " + std::to_string(m);
        } catch (const DegreeBoundError&) {
          break;
        }
      }
    }
    report.add("delta(x^m) = delta(x) * sum x^k y^(m-1-k)", detail.empty(), detail);
  }

  // inner diderivations
  {
    std::string route, image;
    std::size_t checked = 0;
    std::vector<BivariatePoly> ps{X, one};
    for (int i = 0; i < 4; ++i) ps.push_back(random_poly(rng, 2, bound));
    for (const auto& p : ps)
      for (const auto& h : monomials(bound)) {
        try {
          const auto closed = inner_dider_formula(p, h);
          const auto op = inner_dider_operator(p, h);
          ++checked;
          if (route.empty() && closed != op) route = "p = " + format_poly(p) + ", h = " + format_poly(h);
          if (image.empty() && !ann_membership(closed)) image = "p = " + format_poly(p) + ", h = " + format_poly(h);
        } catch (const DegreeBoundError&) {
        }
      }
    report.add("Ad_p operator route = closed form", route.empty() && checked > 0,
               route.empty() ? std::to_string(checked) + " evaluations" : route);
    report.add("Ad_p image in ann", image.empty(), image);
  }

  // halo
  {
    std::string detail;
    const auto xy = X * Y;
    if (!halo_membership(one) || !halo_membership(one + (Y - X) * xy) || halo_membership(X))
      detail = "reference examples";
    for (int i = 0; i < 40 && detail.empty(); ++i) {
      const auto h = i % 2 == 0 ? one + (Y - X) * random_poly(rng, 2, bound) : random_poly(rng, 3, bound);
      if (halo_membership(h) != halo_membership_direct(h)) detail = format_poly(h);
    }
    report.add("halo membership = direct bar-unit check", detail.empty(), detail);
  }
  auto halo_sweep = [&](const std::string& name, const std::vector<Spec>& specs) {
    std::string detail;
    for (const auto& s : specs) {
      for (const auto& h : monomials(2)) {
        const auto e = one + (X - Y) * h.with_bound(bound);
        try {
          if (!diderivation_map(s.f, s.g, e).is_zero()) {
            detail = describe(s) + ", e = " + format_poly(e);
            break;
          }
        } catch (const DegreeBoundError&) {
        }
      }
      if (!detail.empty()) break;
    }
    report.add(name, detail.empty(), detail);
  };
  halo_sweep("closed-form diderivations vanish on the halo", dider_specs);
  halo_sweep("closed-form diderivations with g = f vanish on the halo", equal_specs);

  // Forward direction of the inner-derivation description: for h(x) and
  // (x - y) g = h(y) - h(x), the closed form with f = 0 is ad_h.
  {
    std::string detail;
    for (int deg = 1; deg <= 3 && detail.empty(); ++deg) {
      const auto h = BivariatePoly::monomial(deg, 0, R(1), bound) + X;
      const auto q = divide_by_x_minus_y(h.diag_y() - h);
      if (!q) {
        detail = "h = " + format_poly(h) + ": no quotient";
        break;
      }
      for (const auto& m : monomials(bound)) {
        try {
          if (derivation_map(BivariatePoly(bound), *q, m) != inner_der_operator(h, m)) {
            detail = "h = " + format_poly(h) + ", monomial " + format_poly(m);
            break;
          }
        } catch (const DegreeBoundError&) {
        }
      }
    }
    report.add("inner derivation from (x - y) g = h(y) - h(x) equals ad_h", detail.empty(), detail);
  }
  return report;
}

}  // namespace dias::kxy
