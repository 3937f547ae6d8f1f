#pragma once

#include "dias/catalog.hpp"
#include "dias/dialgebra.hpp"
#include "dias/rational.hpp"

#include <random>
#include <string>
#include <vector>

namespace dias::test {

using R = Rational;
using Mat = MatrixX<R>;
using Vec = VectorX<R>;

inline R small_rational(std::mt19937_64& rng, int span = 3, int max_den = 3) {
  const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span;
  const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
  return R(num) / R(den);
}

inline Mat random_matrix(std::mt19937_64& rng, Index rows, Index cols, int zero_bias = 3) {
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = rng() % zero_bias == 0 ? R(0) : small_rational(rng);
  return m;
}

inline Vec random_phi(std::mt19937_64& rng, Index n) {
  Vec phi(n);
  do {
    for (Index i = 0; i < n; ++i) phi(i) = rng() % 3 == 0 ? R(0) : small_rational(rng);
  } while (all_zero(phi));
  return phi;
}

/// Seeded phi-dialgebras with dimensions cycling through [lo, hi].
inline std::vector<Dialgebra<R>> phi_family(std::size_t count, Index lo, Index hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Dialgebra<R>> out;
  for (std::size_t i = 0; i < count; ++i) {
    const Index n = lo + static_cast<Index>(i) % (hi - lo + 1);
    out.push_back(phi_dialgebra(random_phi(rng, n)).renamed("phi#" + std::to_string(i + 1)));
  }
  return out;
}

/// One representative per catalog entry; parametric entries get a few
/// fixed points.
inline std::vector<Dialgebra<R>> catalog_instances() {
  std::vector<Dialgebra<R>> out;
  for (const auto& e : catalog_entries()) {
    if (e.params.empty()) {
      out.push_back(instantiate(e.name));
    } else if (e.name == "Dias2_3") {
      for (const R& l : {R(0), R(1), R(2)}) out.push_back(instantiate(e.name, {{"lambda", l}}).renamed("Dias2_3?lambda=" + to_string(l)));
    } else {
      const std::string first = e.name == "Dias3_16" ? "k" : "l";
      for (const auto& p : {Dias316Params{1, 1, 1, 1, 1}, Dias316Params{0, 0, 0, 0, 0}, Dias316Params{0, 0, 0, -1, 0},
                            Dias316Params{1, 1, 2, 1, 1}})
        out.push_back(instantiate(e.name, to_params(p, first)).renamed(e.name + "?" + format_dias316(p, first)));
    }
  }
  return out;
}

inline Dialgebra<R> zero_dialgebra(Index n) { return Dialgebra<R>(n, "zero"); }

/// Same associative product on both sides.
inline Dialgebra<R> associative_as_dialgebra(Index n, const std::vector<StructureEntry<R>>& product) {
  std::vector<StructureEntry<R>> entries;
  for (auto e : product) {
    e.product = Product::Vdash;
    entries.push_back(e);
    e.product = Product::Dashv;
    entries.push_back(e);
  }
  return Dialgebra<R>(n, entries, "associative");
}

/// Upper triangular 2x2 matrices on the basis E11, E12, E22 (0, 1, 2).
inline Dialgebra<R> upper_triangular() {
  return associative_as_dialgebra(3, {{Product::Vdash, 0, 0, 0, R(1)},
                                      {Product::Vdash, 0, 1, 1, R(1)},
                                      {Product::Vdash, 1, 2, 1, R(1)},
                                      {Product::Vdash, 2, 2, 2, R(1)}});
}

}  // namespace dias::test
