#include "dias/catalog.hpp"

#include "dias/operator_spaces.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

namespace dias {

namespace {

using R = Rational;
using Entry = StructureEntry<Rational>;
constexpr Product V = Product::Vdash;
constexpr Product A = Product::Dashv;

struct Rel {
  Product p;
  int i, j;
  std::vector<std::pair<int, R>> terms;
};

std::vector<Entry> to_entries(const std::vector<Rel>& rels) {
  std::vector<Entry> out;
  for (const auto& r : rels)
    for (const auto& [k, c] : r.terms)
      if (!is_zero(c)) out.push_back({r.p, r.i - 1, r.j - 1, k - 1, c});
  return out;
}

Rel rel(Product p, int i, int j, int k, R c = R(1)) { return {p, i, j, {{k, c}}}; }

// Relation lists of the fixed-structure entries, as tabled. Dias2_2 uses
// e1 |- e2 = e2 (the printed -| reading is not a dialgebra).
const std::map<std::string, std::vector<Rel>>& fixed_relations() {
  static const std::map<std::string, std::vector<Rel>> table = [] {
    std::map<std::string, std::vector<Rel>> t;
    t["Dias2_1"] = {rel(V, 1, 1, 1), rel(A, 1, 1, 1), rel(A, 2, 1, 2)};
    t["Dias2_2"] = {rel(V, 1, 1, 1), rel(A, 1, 1, 1), rel(V, 1, 2, 2)};
    t["Dias2_4"] = {rel(V, 1, 1, 1), rel(A, 1, 1, 1), rel(V, 1, 2, 2), rel(A, 2, 1, 2)};

    t["Dias3_1"] = {rel(V, 1, 2, 1), rel(V, 2, 2, 2), rel(V, 3, 3, 3), rel(A, 2, 2, 2), rel(A, 3, 3, 3)};
    t["Dias3_2"] = {rel(V, 1, 2, 1), rel(V, 2, 2, 2), rel(V, 3, 3, 3),
                    rel(A, 2, 1, 1), rel(A, 2, 2, 2), rel(A, 3, 3, 3)};
    t["Dias3_3"] = {rel(V, 1, 2, 1), rel(V, 2, 2, 2), rel(V, 3, 3, 3),
                    rel(A, 2, 2, 2), rel(V, 3, 1, 1), rel(A, 3, 3, 3)};
    t["Dias3_4"] = {rel(V, 1, 3, 2), rel(V, 2, 3, 2), rel(V, 3, 3, 3), rel(A, 3, 3, 3)};
    t["Dias3_5"] = {rel(V, 1, 3, 2), rel(V, 2, 3, 2), rel(V, 3, 3, 3),
                    {V, 3, 1, {{1, R(1)}, {2, R(-1)}}}, rel(A, 3, 3, 3)};
    t["Dias3_6"] = {rel(V, 1, 3, 2), rel(V, 2, 3, 2), rel(V, 3, 3, 3),
                    rel(V, 3, 1, 1), rel(V, 3, 2, 2), rel(A, 3, 3, 3)};
    t["Dias3_7"] = {rel(V, 1, 3, 2), rel(V, 2, 3, 2), rel(V, 3, 3, 3),
                    rel(V, 3, 1, 2), rel(V, 3, 2, 2), rel(A, 3, 3, 3)};
    // The table states e1 |- e3 = e2 twice; it is one relation.
    t["Dias3_8"] = {rel(V, 1, 3, 2), rel(V, 2, 3, 2), rel(V, 3, 3, 3),
                    {V, 3, 1, {{1, R(1)}, {2, R(-1)}}}, rel(A, 3, 3, 3)};
    t["Dias3_9"] = {rel(V, 3, 1, 1), rel(V, 3, 2, 2), rel(V, 3, 3, 3)};
    t["Dias3_10"] = {rel(V, 3, 1, 1), rel(V, 3, 3, 3)};
    t["Dias3_11"] = {rel(V, 3, 1, 1), rel(V, 3, 2, 2), rel(V, 3, 3, 3)};
    t["Dias3_12"] = {rel(V, 1, 3, 1), rel(V, 2, 3, 2), rel(V, 3, 1, 1), rel(V, 3, 3, 3)};
    t["Dias3_13"] = {rel(V, 1, 3, 1), rel(V, 2, 3, 2), rel(V, 3, 1, 1), rel(V, 3, 2, 2), rel(V, 3, 3, 3)};
    t["Dias3_14"] = {{V, 1, 3, {{1, R(1)}, {2, R(1)}}}, rel(V, 3, 1, 1), rel(V, 3, 2, 2), rel(V, 3, 3, 3)};
    t["Dias3_15"] = {rel(V, 1, 1, 2), rel(V, 3, 3, 3)};
    return t;
  }();
  return table;
}

std::vector<Rel> dias316_relations(const Dias316Params& s) {
  return {rel(A, 1, 3, 2), rel(A, 3, 1, 2, s.k), rel(V, 1, 1, 2, s.m),
          rel(V, 1, 3, 2, s.n), rel(V, 3, 1, 2, s.p), rel(V, 3, 3, 2, s.q)};
}

const Rational& require(const Params& params, const std::string& entry, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw CatalogError(entry + ": missing parameter '" + key + "'");
  return it->second;
}

void check_param_names(const CatalogEntry& e, const Params& params) {
  for (const auto& [key, value] : params)
    if (std::find(e.params.begin(), e.params.end(), key) == e.params.end())
      throw CatalogError(e.name + ": unknown parameter '" + key + "'");
  for (const auto& key : e.params) require(params, e.name, key);
}

RMatrix E(Index n, Index i, Index j) { return unit_operator(n, i, j); }

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (int i = 1; i <= 4; ++i)
      out.push_back({"Dias2_" + std::to_string(i), 2, i == 3 ? std::vector<std::string>{"lambda"}
                                                           : std::vector<std::string>{},
                     false});
    for (int i = 1; i <= 17; ++i) {
      CatalogEntry e{"Dias3_" + std::to_string(i), 3, {}, i == 9 || i == 11 || i == 17};
      if (i == 16) e.params = {"k", "m", "n", "p", "q"};
      if (i == 17) e.params = {"l", "m", "n", "p", "q"};
      out.push_back(e);
    }
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw CatalogError("unknown catalog entry '" + name + "'");
}

Dialgebra<Rational> instantiate(const std::string& name, const Params& params) {
  const CatalogEntry& e = catalog_entry(name);
  check_param_names(e, params);
  std::vector<Rel> rels;
  if (name == "Dias2_3") {
    const R& lambda = require(params, name, "lambda");
    rels = {rel(V, 1, 1, 2), rel(A, 1, 1, 2, lambda)};
  } else if (name == "Dias3_16") {
    rels = dias316_relations(dias316_params(params, "k"));
  } else if (name == "Dias3_17") {
    rels = dias316_relations(dias316_params(params, "l"));
  } else {
    rels = fixed_relations().at(name);
  }
  std::string label = name;
  if (!params.empty()) label += "?" + format_params(name, params);
  return Dialgebra<Rational>(e.dim, to_entries(rels), label);
}

std::string format_params(const std::string& name, const Params& params) {
  std::string out;
  for (const auto& key : catalog_entry(name).params) {
    const auto it = params.find(key);
    if (it == params.end()) continue;
    if (!out.empty()) out += ",";
    out += key + "=" + to_string(it->second);
  }
  return out;
}

RMatrix unit_operator(Index n, Index i, Index j) {
  RMatrix m = RMatrix::Zero(n, n);
  m(i - 1, j - 1) = R(1);
  return m;
}

ExpectedDider expected_dider(const std::string& name, const Params& params) {
  const CatalogEntry& e = catalog_entry(name);
  const Index n = e.dim;
  auto fixed = [](std::vector<RMatrix> basis) {
    ExpectedDider x;
    x.dim = static_cast<Index>(basis.size());
    x.basis = std::move(basis);
    return x;
  };
  if (name == "Dias2_1" || name == "Dias2_2" || name == "Dias2_3") return fixed({E(n, 2, 1)});
  if (name == "Dias2_4") return fixed({});
  if (name == "Dias3_16") {
    check_param_names(e, params);
    const auto p = dias316_params(params, "k");
    const auto& branch = resolve_dias316_branch(p);
    ExpectedDider x;
    x.dim = branch.expected_dim(p);
    x.branch_row = branch.row;
    return x;
  }
  static const std::map<std::string, std::vector<RMatrix>> tabled = [] {
    const RMatrix e11_e21 = E(3, 1, 1) - E(3, 2, 1);
    std::map<std::string, std::vector<RMatrix>> t;
    t["Dias3_1"] = {E(3, 1, 2)};
    t["Dias3_2"] = {};
    t["Dias3_3"] = {};
    t["Dias3_4"] = {e11_e21};
    t["Dias3_5"] = {e11_e21};
    t["Dias3_6"] = {};
    t["Dias3_7"] = {e11_e21};
    t["Dias3_8"] = {E(3, 1, 3)};
    t["Dias3_9"] = {RMatrix(E(3, 2, 1) + E(3, 2, 2))};
    t["Dias3_10"] = {E(3, 1, 1), E(3, 1, 3)};
    t["Dias3_11"] = {E(3, 1, 1), E(3, 1, 3)};
    t["Dias3_12"] = {E(3, 1, 1)};
    t["Dias3_13"] = {E(3, 1, 1), E(3, 2, 1)};
    t["Dias3_14"] = {E(3, 1, 1), E(3, 2, 1)};
    t["Dias3_15"] = {};
    t["Dias3_17"] = {E(3, 3, 1)};
    return t;
  }();
  return fixed(tabled.at(name));
}

// ---- Dias3_16 -------------------------------------------------------------

Dias316Params dias316_params(const Params& params, const std::string& first) {
  const std::string entry = first == "k" ? "Dias3_16" : "Dias3_17";
  return {require(params, entry, first), require(params, entry, "m"), require(params, entry, "n"),
          require(params, entry, "p"), require(params, entry, "q")};
}

Params to_params(const Dias316Params& p, const std::string& first) {
  return {{first, p.k}, {"m", p.m}, {"n", p.n}, {"p", p.p}, {"q", p.q}};
}

std::string format_dias316(const Dias316Params& p, const std::string& first) {
  return first + "=" + to_string(p.k) + ",m=" + to_string(p.m) + ",n=" + to_string(p.n) +
         ",p=" + to_string(p.p) + ",q=" + to_string(p.q);
}

const std::vector<Dias316Branch>& dias316_branches() {
  using P = const Dias316Params&;
  static const std::vector<Dias316Branch> rows = [] {
    auto fixed = [](Index d) { return [d](P) { return d; }; };
    const R zero(0), minus_one(-1);
    std::vector<Dias316Branch> b;
    b.push_back({1, "m != 0, Delta1 != 0, Delta2 != 0", "2",
                 [](P s) { return s.m != 0 && delta1(s) != 0 && delta2(s) != 0; }, fixed(2)});
    b.push_back({2, "m != 0, Delta1 = 0, Delta2 != 0", "3",
                 [](P s) { return s.m != 0 && delta1(s) == 0 && delta2(s) != 0; }, fixed(3)});
    b.push_back({3, "m != 0, Delta1 != 0, Delta2 = 0", "3",
                 [](P s) { return s.m != 0 && delta1(s) != 0 && delta2(s) == 0; }, fixed(3)});
    b.push_back({4, "m != 0, Delta1 = Delta2 = 0", "4",
                 [](P s) { return s.m != 0 && delta1(s) == 0 && delta2(s) == 0; }, fixed(4)});
    b.push_back({5, "m != 0, p = -1, q = 0", "+1 (4 if Delta1 = 0 else 3, plus 1)",
                 [](P s) { return s.m != 0 && s.p == -1 && s.q == 0; },
                 [](P s) -> Index { return (delta1(s) == 0 ? 4 : 3) + 1; }});
    b.push_back({6, "m = 0, n + k != 0, k != np", "2",
                 [](P s) { return s.m == 0 && s.n + s.k != 0 && s.k != s.n * s.p; }, fixed(2)});
    b.push_back({7, "m = 0, n + k != 0, k = np", "3",
                 [](P s) { return s.m == 0 && s.n + s.k != 0 && s.k == s.n * s.p; }, fixed(3)});
    b.push_back({8, "m = 0, n + k != 0, k = np, p = -1, q = 0", "4",
                 [](P s) { return s.m == 0 && s.n + s.k != 0 && s.k == s.n * s.p && s.p == -1 && s.q == 0; },
                 fixed(4)});
    b.push_back({9, "m = 0, n + k = 0, q != 0", "3",
                 [](P s) { return s.m == 0 && s.n + s.k == 0 && s.q != 0; }, fixed(3)});
    b.push_back({10, "m = 0, n + k = 0, q != 0, k = -1", "4",
                 [](P s) { return s.m == 0 && s.n + s.k == 0 && s.q != 0 && s.k == -1; }, fixed(4)});
    b.push_back({11, "m = 0, n + k = 0, q = 0", "4",
                 [](P s) { return s.m == 0 && s.n + s.k == 0 && s.q == 0; }, fixed(4)});
    b.push_back({12, "m = n = k = q = 0, p != -1", "5",
                 [](P s) { return s.m == 0 && s.n == 0 && s.k == 0 && s.q == 0 && s.p != -1; }, fixed(5)});
    b.push_back({13, "m = n = k = q = 0, p = -1", "6",
                 [](P s) { return s.m == 0 && s.n == 0 && s.k == 0 && s.q == 0 && s.p == -1; }, fixed(6)});
    return b;
  }();
  return rows;
}

const std::vector<int>& dias316_resolution_order() {
  static const std::vector<int> order{13, 12, 10, 8, 5, 1, 2, 3, 4, 6, 7, 9, 11};
  return order;
}

const Dias316Branch& resolve_dias316_branch(const Dias316Params& p) {
  const auto& rows = dias316_branches();
  for (int r : dias316_resolution_order())
    if (rows[static_cast<std::size_t>(r - 1)].matches(p)) return rows[static_cast<std::size_t>(r - 1)];
  throw std::logic_error("Dias3_16 branch predicates do not cover " + format_dias316(p));
}

RMatrix dias316_matrix(const Dias316Params& s) {
  RMatrix m(5, 5);
  const R z(0);
  m << s.m, z, z, s.n + s.k, z,
      -s.p, z, -s.k, -s.q, s.k,
      -s.p, z, s.p, -s.q, -s.k,
      z, s.p + 1, z, z, s.q,
      R(-1), -s.m, R(1), z, -s.n;
  return m;
}

namespace {

// Index selection is done by hand (rng() % size) so the sample stream does
// not depend on the standard library's distribution implementations.
std::size_t pick(std::mt19937_64& rng, std::size_t size) { return static_cast<std::size_t>(rng() % size); }

struct GridPoint {
  Dias316Params p;
  Rational height_sum;
};

const std::vector<GridPoint>& dias316_grid() {
  static const std::vector<GridPoint> grid = [] {
    const std::array<R, 7> values{R(0), R(1), R(-1), R(2), R(-2), R(1, 2), R(-1, 2)};
    std::vector<GridPoint> g;
    for (const auto& k : values)
      for (const auto& m : values)
        for (const auto& n : values)
          for (const auto& p : values)
            for (const auto& q : values)
              g.push_back({{k, m, n, p, q}, height(k) + height(m) + height(n) + height(p) + height(q)});
    std::stable_sort(g.begin(), g.end(),
                     [](const GridPoint& a, const GridPoint& b) { return a.height_sum < b.height_sum; });
    return g;
  }();
  return grid;
}

R small_rational(std::mt19937_64& rng) {
  const auto num = static_cast<long>(pick(rng, 13)) - 6;
  const auto den = static_cast<long>(pick(rng, 4)) + 1;
  return R(num, den);
}

R small_nonzero(std::mt19937_64& rng) {
  R v;
  do v = small_rational(rng);
  while (v == 0);
  return v;
}

}  // namespace

std::vector<Dias316Params> dias316_branch_samples(int row, std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> members;
  const auto& grid = dias316_grid();
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (resolve_dias316_branch(grid[i].p).row == row) members.push_back(i);
  std::vector<Dias316Params> out;
  if (members.empty() || count == 0) return out;
  out.push_back(grid[members.front()].p);
  std::vector<std::size_t> rest(members.begin() + 1, members.end());
  std::mt19937_64 rng(seed);
  while (out.size() < count && !rest.empty()) {
    const std::size_t i = pick(rng, rest.size());
    out.push_back(grid[rest[i]].p);
    rest[i] = rest.back();
    rest.pop_back();
  }
  return out;
}

std::vector<Dias316Params> random_dias316_params(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Dias316Params> out;
  for (std::size_t i = 0; i < count; ++i) {
    Dias316Params p;
    p.k = small_rational(rng);
    p.m = small_rational(rng);
    p.n = small_rational(rng);
    p.p = small_rational(rng);
    p.q = small_rational(rng);
    out.push_back(p);
  }
  return out;
}

DetProbe check_det_factorization(const std::vector<Dias316Params>& samples) {
  DetProbe out;
  out.samples = samples.size();
  out.ratio_constant = true;
  for (const auto& s : samples) {
    const R d = det(dias316_matrix(s));
    const R prod = s.m * delta1(s) * delta2(s);
    if ((d == 0) == (prod == 0)) ++out.locus_agree;
    else out.exceptions.push_back({s, d, prod});
    if (d != 0 && prod != 0) {
      ++out.nonvanishing;
      const R ratio = d / prod;
      if (!out.ratio) out.ratio = ratio;
      else if (*out.ratio != ratio) out.ratio_constant = false;
    }
  }
  if (!out.ratio) out.ratio_constant = false;
  return out;
}

const char* solution_case_name(SolutionCase c) {
  switch (c) {
    case SolutionCase::B: return "B";
    case SolutionCase::C: return "C";
    case SolutionCase::D: return "D";
  }
  return "?";
}

std::vector<RMatrix> solution_family(const Dias316Params& s, SolutionCase c, const Rational& t) {
  auto need = [&](bool ok, const std::string& condition) {
    if (!ok)
      throw std::invalid_argument(std::string("Case ") + solution_case_name(c) + " requires " + condition +
                                  " (at " + format_dias316(s) + ")");
  };
  // (d11, d12, d13, d22, d31, d32, d33) -> operator, with d21 = d23 = 0
  auto op = [&](const std::array<R, 7>& v) {
    RMatrix m = RMatrix::Zero(3, 3);
    m(0, 0) = v[0];
    m(0, 1) = v[1];
    m(0, 2) = v[2];
    m(1, 1) = v[3];
    m(2, 0) = v[4];
    m(2, 1) = v[5];
    m(2, 2) = v[6];
    return RMatrix(t * m);
  };
  const R z(0);
  switch (c) {
    case SolutionCase::B:
      need(delta1(s) == 0, "Delta1 = 0");
      need(s.m != 0, "m != 0");
      need(s.p != -1, "p != -1");
      return {op({-(s.k + s.n) / (s.p + 1), z, (s.k - s.n * s.p) / (s.m * (s.p + 1)), z, s.m / (s.p + 1), z, R(1)})};
    case SolutionCase::C:
      need(delta2(s) == 0, "Delta2 = 0");
      need(s.m != 0, "m != 0");
      need(s.k + s.n != 0, "k + n != 0");
      return {op({s.k, z, -(s.k + s.n) / s.m, z, -(s.k * s.m) / (s.k + s.n), z, R(1)})};
    case SolutionCase::D: {
      need(s.m != 0, "m != 0");
      need(delta1(s) == 0, "Delta1 = 0");
      need(delta2(s) == 0, "Delta2 = 0");
      const R a = s.k * (s.p + 1) / s.m;
      return {op({a, z, z, z, R(1), z, z}), op({z, z, a, z, z, z, R(1)})};
    }
  }
  throw std::invalid_argument("unknown solution case");
}

FamilyCheck check_solution_families(const Dias316Params& s, SolutionCase c, const Rational& t) {
  FamilyCheck out;
  out.which = c;
  out.params = s;
  out.operators = solution_family(s, c, t);
  const auto d = instantiate("Dias3_16", to_params(s));
  const auto space = diderivation_space(d);
  out.identity_ok = true;
  out.in_kernel = true;
  for (const auto& m : out.operators) {
    if (!all_zero(diderivation_residual(d, m))) out.identity_ok = false;
    if (!space.contains(m)) out.in_kernel = false;
  }
  return out;
}

std::vector<Dias316Params> solution_family_samples(SolutionCase c, std::size_t count, std::uint64_t seed) {
  std::vector<Dias316Params> out;
  if (count == 0) return out;
  switch (c) {
    case SolutionCase::B: out.push_back({R(1), R(1), R(2), R(1), R(1)}); break;
    case SolutionCase::C: out.push_back({R(1), R(1), R(1), R(0), R(2)}); break;
    case SolutionCase::D: out.push_back({R(1), R(1), R(-2), R(0), R(-1)}); break;
  }
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    Dias316Params s;
    s.k = small_rational(rng);
    s.m = small_nonzero(rng);
    s.n = small_rational(rng);
    s.p = small_rational(rng);
    switch (c) {
      case SolutionCase::B:
        if (s.p == -1) continue;
        s.q = (s.n * s.p - s.k) / s.m;
        break;
      case SolutionCase::C:
        if (s.k + s.n == 0) continue;
        s.q = (s.k + s.n) * (s.p + 1) / s.m;
        break;
      case SolutionCase::D:
        s.n = -s.k * (s.p + 2);
        s.q = -s.k * (s.p + 1) * (s.p + 1) / s.m;
        break;
    }
    out.push_back(s);
  }
  return out;
}

// ---- catalog sweep --------------------------------------------------------

const char* row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "match";
    case RowStatus::Mismatch: return "MISMATCH";
    case RowStatus::Finding: return "FINDING";
    case RowStatus::Info: return "info";
  }
  return "?";
}

bool CatalogReport::failed() const {
  for (const auto& r : rows)
    if (r.status == RowStatus::Mismatch) return true;
  for (const auto& b : branches)
    if (!b.all_match) return true;
  if (det && !det->exceptions.empty()) return true;
  for (const auto& f : families)
    if (!f.identity_ok || !f.in_kernel) return true;
  for (const auto& a : ambiguities)
    if (!a.equal) return true;
  return false;
}

bool CatalogReport::has_findings() const {
  for (const auto& r : rows)
    if (r.status == RowStatus::Finding) return true;
  return false;
}

namespace {

std::string describe_axiom_failure(const AxiomReport<Rational>& ax) {
  std::string out;
  for (Axiom a : kAxioms) {
    const auto& f = ax.failure(a);
    if (!f) continue;
    if (!out.empty()) out += "; ";
    out += std::string(axiom_name(a)) + " at (" + std::to_string(f->i + 1) + "," + std::to_string(f->j + 1) +
           "," + std::to_string(f->k + 1) + ")";
  }
  return out;
}

CatalogRow evaluate(const std::string& name, const Params& params, bool gated) {
  CatalogRow row;
  row.entry = name;
  row.params = format_params(name, params);
  const auto d = instantiate(name, params);
  const auto ax = verify_axioms(d);
  row.axioms_ok = ax.ok();
  row.axiom_failure = describe_axiom_failure(ax);
  const auto space = diderivation_space(d);
  row.solver_dim = space.dim();
  row.solver_basis = space.matrices();

  const auto expected = expected_dider(name, params);
  row.expected_dim = expected.dim;
  row.branch_row = expected.branch_row;
  bool ok = row.axioms_ok && expected.dim == space.dim();
  if (expected.basis) {
    std::vector<VectorX<Rational>> gens;
    for (const auto& m : *expected.basis) gens.push_back(flatten(m));
    const auto tabled = Subspace<Rational>::span(d.dim() * d.dim(), gens);
    row.basis_match = tabled.dim() == expected.dim && tabled == space.space;
    ok = ok && *row.basis_match;
  }
  if (!row.axioms_ok) row.note = "axioms fail: " + row.axiom_failure;

  if (ok) row.status = gated ? RowStatus::Match : RowStatus::Info;
  else if (!gated) row.status = RowStatus::Info;
  else if (catalog_entry(name).ambiguous) row.status = RowStatus::Finding;
  else row.status = RowStatus::Mismatch;
  return row;
}

bool keep(const std::string& name, const std::string& filter) {
  return filter.empty() || name.rfind(filter, 0) == 0;
}

}  // namespace

CatalogReport verify_catalog(std::size_t samples, std::uint64_t seed, const std::string& filter) {
  if (samples == 0) throw std::invalid_argument("verify_catalog: need at least one sample");
  CatalogReport report;
  report.samples = samples;
  report.seed = seed;

  for (const auto& e : catalog_entries()) {
    if (!keep(e.name, filter) || e.name == "Dias3_16" || e.name == "Dias3_17") continue;
    if (e.name == "Dias2_3") {
      for (const R& lambda : {R(0), R(1), R(2), R(-1), R(1, 2)}) {
        auto row = evaluate(e.name, {{"lambda", lambda}}, lambda == 0 || lambda == 1);
        if (row.status == RowStatus::Info) row.note = "lambda outside {0, 1}: recorded, not gated";
        report.rows.push_back(std::move(row));
      }
      continue;
    }
    report.rows.push_back(evaluate(e.name, {}, true));
  }

  if (keep("Dias3_9", filter) && keep("Dias3_11", filter)) {
    const auto a = diderivation_space(instantiate("Dias3_9"));
    const auto b = diderivation_space(instantiate("Dias3_11"));
    report.ambiguities.push_back(
        {"Dias3_9 vs Dias3_11", "",
         "identical relation lists; solver dim " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) +
             "; tabled dim " + std::to_string(expected_dider("Dias3_9").dim) + " and " +
             std::to_string(expected_dider("Dias3_11").dim),
         a.space == b.space});
  }

  const bool with16 = keep("Dias3_16", filter);
  const bool with17 = keep("Dias3_17", filter);
  std::vector<Dias316Params> firsts;
  for (const auto& branch : dias316_branches()) {
    const auto points = dias316_branch_samples(branch.row, samples, seed + static_cast<std::uint64_t>(branch.row));
    if (!points.empty()) firsts.push_back(points.front());
    if (!with16) continue;
    BranchSummary summary;
    summary.row = branch.row;
    summary.conditions = branch.conditions;
    summary.dim_text = branch.dim_text;
    summary.requested = samples;
    summary.all_match = !points.empty();
    for (const auto& p : points) {
      auto row = evaluate("Dias3_16", to_params(p), true);
      if (row.branch_row != branch.row) throw std::logic_error("Dias3_16 sampler drifted off its branch");
      summary.samples.push_back({row.params, {*row.expected_dim, row.solver_dim}});
      if (row.status != RowStatus::Match) summary.all_match = false;
      report.rows.push_back(std::move(row));
    }
    report.branches.push_back(std::move(summary));
  }

  if (with17) {
    for (const auto& p : firsts) {
      report.rows.push_back(evaluate("Dias3_17", to_params(p, "l"), true));
      const auto a = diderivation_space(instantiate("Dias3_17", to_params(p, "l")));
      const auto b = diderivation_space(instantiate("Dias3_16", to_params(p, "k")));
      report.ambiguities.push_back({"Dias3_17 vs Dias3_16", format_dias316(p, "l"),
                                    "relation lists agree up to k <-> l; solver dim " + std::to_string(a.dim()) +
                                        " and " + std::to_string(b.dim()) + "; tabled Dias3_17 dim 1",
                                    a.space == b.space});
    }
  }

  if (with16) {
    report.det = check_det_factorization(random_dias316_params(std::max<std::size_t>(100, samples), seed));
    for (SolutionCase c : {SolutionCase::B, SolutionCase::C, SolutionCase::D})
      for (const auto& p : solution_family_samples(c, std::max<std::size_t>(3, samples), seed))
        report.families.push_back(check_solution_families(p, c));
  }
  return report;
}

}  // namespace dias
