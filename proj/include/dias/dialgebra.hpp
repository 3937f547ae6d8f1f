#pragma once

#include "dias/ratlin.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dias {

enum class Product { Vdash, Dashv };

inline constexpr std::array<Product, 2> kProducts{Product::Vdash, Product::Dashv};

inline const char* product_name(Product p) { return p == Product::Vdash ? "vdash" : "dashv"; }
inline const char* product_symbol(Product p) { return p == Product::Vdash ? "|-" : "-|"; }

/// One structure constant: e_i * e_j has coefficient `value` on e_k (0-based).
template <typename Scalar>
struct StructureEntry {
  Product product;
  Index i, j, k;
  Scalar value;
};

/// Finite-dimensional dialgebra given by structure constants.
///
/// Internally each product is stored as n left-multiplication matrices:
/// column j of table(p)[i] is the coordinate vector of e_i * e_j. All
/// operator matrices act on coordinate columns.
template <typename Scalar>
class Dialgebra {
 public:
  using Matrix = MatrixX<Scalar>;
  using Vector = VectorX<Scalar>;

  Dialgebra() = default;

  /// Zero dialgebra of dimension n.
  explicit Dialgebra(Index n, std::string name = {}) : dim_(n), name_(std::move(name)) {
    if (n < 1) throw std::invalid_argument("Dialgebra: dimension must be at least 1");
    for (auto& t : tables_) t.assign(static_cast<std::size_t>(n), Matrix::Zero(n, n));
  }

  /// Entries for the same (product, i, j, k) accumulate.
  Dialgebra(Index n, const std::vector<StructureEntry<Scalar>>& entries, std::string name = {})
      : Dialgebra(n, std::move(name)) {
    for (const auto& e : entries) {
      if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= n || e.j >= n || e.k >= n)
        throw std::out_of_range("Dialgebra: structure constant index out of range");
      tables_[slot(e.product)][static_cast<std::size_t>(e.i)](e.k, e.j) += e.value;
    }
  }

  Index dim() const { return dim_; }
  const std::string& name() const { return name_; }

  Dialgebra renamed(std::string name) const {
    Dialgebra d = *this;
    d.name_ = std::move(name);
    return d;
  }

  /// Coefficient of e_k in e_i * e_j.
  const Scalar& coeff(Product p, Index i, Index j, Index k) const {
    return tables_[slot(p)][static_cast<std::size_t>(i)](k, j);
  }

  /// L^p_{e_i}.
  const Matrix& left_basis_op(Product p, Index i) const {
    return tables_[slot(p)][static_cast<std::size_t>(i)];
  }

  Vector multiply(const Vector& x, const Vector& y, Product p) const {
    check_length(x);
    check_length(y);
    Vector out = Vector::Zero(dim_);
    for (Index i = 0; i < dim_; ++i) {
      if (x(i) == Scalar(0)) continue;
      out += x(i) * (left_basis_op(p, i) * y);
    }
    return out;
  }

  Vector basis_product(Index i, Index j, Product p) const {
    return left_basis_op(p, i).col(j);
  }

  /// L^p_a: b -> a * b.
  Matrix left_op(const Vector& a, Product p) const {
    check_length(a);
    Matrix out = Matrix::Zero(dim_, dim_);
    for (Index i = 0; i < dim_; ++i)
      if (a(i) != Scalar(0)) out += a(i) * left_basis_op(p, i);
    return out;
  }

  /// R^p_a: b -> b * a. Column j is e_j * a.
  Matrix right_op(const Vector& a, Product p) const {
    check_length(a);
    Matrix out(dim_, dim_);
    for (Index j = 0; j < dim_; ++j) out.col(j) = left_basis_op(p, j) * a;
    return out;
  }

  Vector unit(Index i) const { return Vector::Unit(dim_, i); }

  /// All nonzero structure constants in (product, i, j, k) order, vdash first.
  std::vector<StructureEntry<Scalar>> entries() const {
    std::vector<StructureEntry<Scalar>> out;
    for (Product p : kProducts)
      for (Index i = 0; i < dim_; ++i)
        for (Index j = 0; j < dim_; ++j)
          for (Index k = 0; k < dim_; ++k)
            if (coeff(p, i, j, k) != Scalar(0)) out.push_back({p, i, j, k, coeff(p, i, j, k)});
    return out;
  }

  /// Same structure on a relabeled basis: new e_{perm[i]} is old e_i.
  Dialgebra permuted(const std::vector<Index>& perm) const {
    std::vector<StructureEntry<Scalar>> moved;
    for (const auto& e : entries())
      moved.push_back({e.product, perm[static_cast<std::size_t>(e.i)],
                       perm[static_cast<std::size_t>(e.j)], perm[static_cast<std::size_t>(e.k)], e.value});
    return Dialgebra(dim_, moved, name_);
  }

  friend bool operator==(const Dialgebra& a, const Dialgebra& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t i = 0; i < a.tables_[p].size(); ++i)
        if (a.tables_[p][i] != b.tables_[p][i]) return false;
    return true;
  }

 private:
  static std::size_t slot(Product p) { return p == Product::Vdash ? 0 : 1; }

  void check_length(const Vector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("Dialgebra: vector length does not match dimension");
  }

  Index dim_ = 0;
  std::string name_;
  std::array<std::vector<Matrix>, 2> tables_;
};

enum class Axiom { VdashAssoc, DashvAssoc, D3, D4, D5 };

inline constexpr std::array<Axiom, 5> kAxioms{Axiom::VdashAssoc, Axiom::DashvAssoc, Axiom::D3,
                                              Axiom::D4, Axiom::D5};

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::VdashAssoc: return "vdash-assoc";
    case Axiom::DashvAssoc: return "dashv-assoc";
    case Axiom::D3: return "D3";
    case Axiom::D4: return "D4";
    case Axiom::D5: return "D5";
  }
  return "?";
}

/// The identity each axiom asserts, written as "lhs = rhs".
inline const char* axiom_statement(Axiom a) {
  switch (a) {
    case Axiom::VdashAssoc: return "(x|-y)|-z = x|-(y|-z)";
    case Axiom::DashvAssoc: return "(x-|y)-|z = x-|(y-|z)";
    case Axiom::D3: return "x-|(y-|z) = x-|(y|-z)";
    case Axiom::D4: return "(x-|y)|-z = (x|-y)|-z";
    case Axiom::D5: return "x|-(y-|z) = (x|-y)-|z";
  }
  return "?";
}

template <typename Scalar>
struct AxiomFailure {
  Index i, j, k;  // 0-based basis triple
  VectorX<Scalar> lhs, rhs;
};

template <typename Scalar>
struct AxiomReport {
  std::array<std::optional<AxiomFailure<Scalar>>, 5> failures;

  const std::optional<AxiomFailure<Scalar>>& failure(Axiom a) const {
    return failures[static_cast<std::size_t>(a)];
  }
  bool passes(Axiom a) const { return !failure(a).has_value(); }
  bool ok() const {
    for (const auto& f : failures)
      if (f) return false;
    return true;
  }
};

/// Checks both associativities and D3-D5 on every basis triple (enough by
/// trilinearity); keeps the first failing triple of each family.
template <typename Scalar>
AxiomReport<Scalar> verify_axioms(const Dialgebra<Scalar>& d) {
  using Vector = VectorX<Scalar>;
  constexpr Product V = Product::Vdash;
  constexpr Product A = Product::Dashv;
  AxiomReport<Scalar> report;
  const Index n = d.dim();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        const Vector x = d.unit(i), y = d.unit(j), z = d.unit(k);
        const std::array<std::pair<Vector, Vector>, 5> sides{{
            {d.multiply(d.multiply(x, y, V), z, V), d.multiply(x, d.multiply(y, z, V), V)},
            {d.multiply(d.multiply(x, y, A), z, A), d.multiply(x, d.multiply(y, z, A), A)},
            {d.multiply(x, d.multiply(y, z, A), A), d.multiply(x, d.multiply(y, z, V), A)},
            {d.multiply(d.multiply(x, y, A), z, V), d.multiply(d.multiply(x, y, V), z, V)},
            {d.multiply(x, d.multiply(y, z, A), V), d.multiply(d.multiply(x, y, V), z, A)},
        }};
        for (std::size_t a = 0; a < sides.size(); ++a) {
          if (report.failures[a] || sides[a].first == sides[a].second) continue;
          report.failures[a] = AxiomFailure<Scalar>{i, j, k, sides[a].first, sides[a].second};
        }
      }
    }
  }
  return report;
}

/// Dialgebra on Scalar^n induced by a nonzero functional phi:
/// v |- w = phi(v) w and v -| w = phi(w) v.
template <typename Scalar>
Dialgebra<Scalar> phi_dialgebra(const VectorX<Scalar>& phi) {
  if (phi.size() < 1 || all_zero(phi))
    throw std::invalid_argument("phi_dialgebra: the functional must be nonzero");
  const Index n = phi.size();
  std::vector<StructureEntry<Scalar>> entries;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (phi(i) != Scalar(0)) entries.push_back({Product::Vdash, i, j, j, phi(i)});
      if (phi(j) != Scalar(0)) entries.push_back({Product::Dashv, i, j, i, phi(j)});
    }
  }
  return Dialgebra<Scalar>(n, entries, "phi-dialgebra");
}

}  // namespace dias
