#pragma once

#include "dias/checks.hpp"
#include "dias/dialgebra.hpp"
#include "dias/invariants.hpp"

#include <string>
#include <vector>

namespace dias {

enum class OperatorKind { Derivation, Diderivation, InnerDerivation, InnerDiderivation };

inline const char* operator_kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::Derivation: return "der";
    case OperatorKind::Diderivation: return "dider";
    case OperatorKind::InnerDerivation: return "inn";
    case OperatorKind::InnerDiderivation: return "dinn";
  }
  return "?";
}

/// Row-major flattening of an n x n matrix into an n^2 vector.
template <typename Scalar>
VectorX<Scalar> flatten(const MatrixX<Scalar>& m) {
  VectorX<Scalar> v(m.rows() * m.cols());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
  return v;
}

template <typename Scalar>
MatrixX<Scalar> unflatten(const VectorX<Scalar>& v, Index n) {
  MatrixX<Scalar> m(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) m(r, c) = v(r * n + c);
  return m;
}

/// A space of linear operators on an n-dimensional dialgebra, stored as a
/// canonical subspace of flattened matrices.
template <typename Scalar>
struct OperatorBasis {
  Index dialgebra_dim = 0;
  OperatorKind kind = OperatorKind::Derivation;
  Subspace<Scalar> space;

  Index dim() const { return space.dim(); }
  MatrixX<Scalar> matrix(Index i) const { return unflatten(space.basis_vector(i), dialgebra_dim); }
  std::vector<MatrixX<Scalar>> matrices() const {
    std::vector<MatrixX<Scalar>> out;
    for (Index i = 0; i < dim(); ++i) out.push_back(matrix(i));
    return out;
  }
  bool contains(const MatrixX<Scalar>& m) const { return space.contains(flatten(m)); }
  bool contains(const OperatorBasis& other) const { return space.contains(other.space); }
};

template <typename Scalar>
MatrixX<Scalar> commutator(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  return a * b - b * a;
}

/// Matrix of a linear map T -> residual(T) from n x n matrices to vectors:
/// column c is residual(E_c) for the c-th row-major unit matrix.
template <typename Scalar, typename Residual>
MatrixX<Scalar> constraint_matrix(Index n, Residual&& residual) {
  MatrixX<Scalar> out;
  for (Index c = 0; c < n * n; ++c) {
    MatrixX<Scalar> e = MatrixX<Scalar>::Zero(n, n);
    e(c / n, c % n) = Scalar(1);
    const VectorX<Scalar> col = residual(e);
    if (c == 0) out.resize(col.size(), n * n);
    out.col(c) = col;
  }
  return out;
}

namespace detail {

template <typename Scalar>
void append(VectorX<Scalar>& out, Index& at, const MatrixX<Scalar>& block) {
  for (Index c = 0; c < block.cols(); ++c)
    for (Index r = 0; r < block.rows(); ++r) out(at++) = block(r, c);
}

template <typename Scalar>
struct Ops {
  std::array<std::vector<MatrixX<Scalar>>, 2> left, right;  // [product][basis index]
  explicit Ops(const Dialgebra<Scalar>& d) {
    for (std::size_t p = 0; p < 2; ++p)
      for (Index i = 0; i < d.dim(); ++i) {
        left[p].push_back(d.left_basis_op(kProducts[p], i));
        right[p].push_back(d.right_op(d.unit(i), kProducts[p]));
      }
  }
  const MatrixX<Scalar>& L(std::size_t p, Index i) const { return left[p][static_cast<std::size_t>(i)]; }
  const MatrixX<Scalar>& R(std::size_t p, Index i) const { return right[p][static_cast<std::size_t>(i)]; }
};

constexpr std::size_t kV = 0;  // slot of |- in Ops
constexpr std::size_t kA = 1;  // slot of -|

}  // namespace detail

/// T(e_i*e_j) - T(e_i)*e_j - e_i*T(e_j) for every i, j and both products.
template <typename Scalar>
VectorX<Scalar> derivation_residual(const Dialgebra<Scalar>& d, const MatrixX<Scalar>& t) {
  const Index n = d.dim();
  VectorX<Scalar> out(2 * n * n * n);
  Index at = 0;
  for (Product p : kProducts)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const VectorX<Scalar> r = t * d.basis_product(i, j, p) - d.multiply(t.col(i), d.unit(j), p) -
                                  d.multiply(d.unit(i), t.col(j), p);
        out.segment(at, n) = r;
        at += n;
      }
  return out;
}

/// T(e_i*e_j) - T(e_i)-|e_j - e_i|-T(e_j) for every i, j and both products.
template <typename Scalar>
VectorX<Scalar> diderivation_residual(const Dialgebra<Scalar>& d, const MatrixX<Scalar>& t) {
  const Index n = d.dim();
  VectorX<Scalar> out(2 * n * n * n);
  Index at = 0;
  for (Product p : kProducts)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const VectorX<Scalar> r = t * d.basis_product(i, j, p) -
                                  d.multiply(t.col(i), d.unit(j), Product::Dashv) -
                                  d.multiply(d.unit(i), t.col(j), Product::Vdash);
        out.segment(at, n) = r;
        at += n;
      }
  return out;
}

template <typename Scalar>
OperatorBasis<Scalar> derivation_space(const Dialgebra<Scalar>& d) {
  const auto m = constraint_matrix<Scalar>(d.dim(), [&](const MatrixX<Scalar>& t) { return derivation_residual(d, t); });
  return {d.dim(), OperatorKind::Derivation, nullspace(m)};
}

template <typename Scalar>
OperatorBasis<Scalar> diderivation_space(const Dialgebra<Scalar>& d) {
  const auto m = constraint_matrix<Scalar>(d.dim(), [&](const MatrixX<Scalar>& t) { return diderivation_residual(d, t); });
  return {d.dim(), OperatorKind::Diderivation, nullspace(m)};
}

/// ad_a = R^-|_a - L^|-_a.
template <typename Scalar>
MatrixX<Scalar> ad(const Dialgebra<Scalar>& d, const VectorX<Scalar>& a) {
  return d.right_op(a, Product::Dashv) - d.left_op(a, Product::Vdash);
}

/// Ad_a = R^|-_a - L^-|_a.
template <typename Scalar>
MatrixX<Scalar> Ad(const Dialgebra<Scalar>& d, const VectorX<Scalar>& a) {
  return d.right_op(a, Product::Vdash) - d.left_op(a, Product::Dashv);
}

template <typename Scalar>
OperatorBasis<Scalar> inner_derivations(const Dialgebra<Scalar>& d) {
  std::vector<VectorX<Scalar>> gens;
  for (Index i = 0; i < d.dim(); ++i) gens.push_back(flatten(ad(d, d.unit(i))));
  return {d.dim(), OperatorKind::InnerDerivation, Subspace<Scalar>::span(d.dim() * d.dim(), gens)};
}

template <typename Scalar>
OperatorBasis<Scalar> inner_diderivations(const Dialgebra<Scalar>& d) {
  std::vector<VectorX<Scalar>> gens;
  for (Index i = 0; i < d.dim(); ++i) gens.push_back(flatten(Ad(d, d.unit(i))));
  return {d.dim(), OperatorKind::InnerDiderivation, Subspace<Scalar>::span(d.dim() * d.dim(), gens)};
}

template <typename Scalar>
OperatorBasis<Scalar> operator_space(const Dialgebra<Scalar>& d, OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Derivation: return derivation_space(d);
    case OperatorKind::Diderivation: return diderivation_space(d);
    case OperatorKind::InnerDerivation: return inner_derivations(d);
    case OperatorKind::InnerDiderivation: return inner_diderivations(d);
  }
  throw std::invalid_argument("operator_space: unknown kind");
}

// Operator-form systems. Each is a complete reformulation of the defining
// identity, so its kernel must equal the corresponding space above.

/// [T, L*_a] - L*_{T(a)} for basis a and both products.
template <typename Scalar>
VectorX<Scalar> derivation_left_residual(const Dialgebra<Scalar>& d, const detail::Ops<Scalar>& ops,
                                         const MatrixX<Scalar>& t) {
  const Index n = d.dim();
  VectorX<Scalar> out(2 * n * n * n);
  Index at = 0;
  for (std::size_t p = 0; p < 2; ++p)
    for (Index i = 0; i < n; ++i)
      detail::append<Scalar>(out, at, commutator(t, ops.L(p, i)) - d.left_op(t.col(i), kProducts[p]));
  return out;
}

/// [T, R*_a] - R*_{T(a)} for basis a and both products.
template <typename Scalar>
VectorX<Scalar> derivation_right_residual(const Dialgebra<Scalar>& d, const detail::Ops<Scalar>& ops,
                                          const MatrixX<Scalar>& t) {
  const Index n = d.dim();
  VectorX<Scalar> out(2 * n * n * n);
  Index at = 0;
  for (std::size_t p = 0; p < 2; ++p)
    for (Index i = 0; i < n; ++i)
      detail::append<Scalar>(out, at, commutator(t, ops.R(p, i)) - d.right_op(t.col(i), kProducts[p]));
  return out;
}

/// T L*_a - L^|-_a T - L^-|_{T(a)} for basis a and both products.
template <typename Scalar>
VectorX<Scalar> diderivation_left_residual(const Dialgebra<Scalar>& d, const detail::Ops<Scalar>& ops,
                                           const MatrixX<Scalar>& t) {
  const Index n = d.dim();
  VectorX<Scalar> out(2 * n * n * n);
  Index at = 0;
  for (std::size_t p = 0; p < 2; ++p)
    for (Index i = 0; i < n; ++i)
      detail::append<Scalar>(out, at,
                             t * ops.L(p, i) - ops.L(detail::kV, i) * t - d.left_op(t.col(i), Product::Dashv));
  return out;
}

/// T R*_b - R^-|_b T - R^|-_{T(b)} for basis b and both products.
template <typename Scalar>
VectorX<Scalar> diderivation_right_residual(const Dialgebra<Scalar>& d, const detail::Ops<Scalar>& ops,
                                            const MatrixX<Scalar>& t) {
  const Index n = d.dim();
  VectorX<Scalar> out(2 * n * n * n);
  Index at = 0;
  for (std::size_t p = 0; p < 2; ++p)
    for (Index i = 0; i < n; ++i)
      detail::append<Scalar>(out, at,
                             t * ops.R(p, i) - ops.R(detail::kA, i) * t - d.right_op(t.col(i), Product::Vdash));
  return out;
}

enum class OperatorForm { Left, Right };

template <typename Scalar>
Subspace<Scalar> derivation_space_operator_form(const Dialgebra<Scalar>& d, OperatorForm form) {
  const detail::Ops<Scalar> ops(d);
  const auto m = constraint_matrix<Scalar>(d.dim(), [&](const MatrixX<Scalar>& t) {
    return form == OperatorForm::Left ? derivation_left_residual(d, ops, t) : derivation_right_residual(d, ops, t);
  });
  return nullspace(m);
}

template <typename Scalar>
Subspace<Scalar> diderivation_space_operator_form(const Dialgebra<Scalar>& d, OperatorForm form) {
  const detail::Ops<Scalar> ops(d);
  const auto m = constraint_matrix<Scalar>(d.dim(), [&](const MatrixX<Scalar>& t) {
    return form == OperatorForm::Left ? diderivation_left_residual(d, ops, t)
                                      : diderivation_right_residual(d, ops, t);
  });
  return nullspace(m);
}

template <typename Scalar>
struct OperatorSpaces {
  OperatorBasis<Scalar> der, dider, inn, dinn;
};

template <typename Scalar>
OperatorSpaces<Scalar> compute_spaces(const Dialgebra<Scalar>& d) {
  return {derivation_space(d), diderivation_space(d), inner_derivations(d), inner_diderivations(d)};
}

/// Operator identities on every basis element, plus equality of the
/// defining-identity kernels with the operator-form kernels.
template <typename Scalar>
CheckReport check_characterizations(const Dialgebra<Scalar>& d, const OperatorSpaces<Scalar>& s) {
  CheckReport report;
  const detail::Ops<Scalar> ops(d);
  auto sweep = [&](const std::string& name, const OperatorBasis<Scalar>& space, auto&& residual) {
    for (Index b = 0; b < space.dim(); ++b) {
      const auto t = space.matrix(b);
      if (!all_zero(residual(d, ops, t))) {
        report.add(name, false, "basis element " + std::to_string(b + 1) + " = " + format_matrix(t));
        return;
      }
    }
    report.add(name, true);
  };
  sweep("der: L*_{d(a)} = [d, L*_a]", s.der,
        [](const auto& dd, const auto& o, const auto& t) { return derivation_left_residual(dd, o, t); });
  sweep("der: R*_{d(a)} = [d, R*_a]", s.der,
        [](const auto& dd, const auto& o, const auto& t) { return derivation_right_residual(dd, o, t); });
  sweep("dider: L^-|_{delta(a)} = delta L*_a - L^|-_a delta", s.dider,
        [](const auto& dd, const auto& o, const auto& t) { return diderivation_left_residual(dd, o, t); });
  sweep("dider: R^|-_{delta(a)} = delta R*_a - R^-|_a delta", s.dider,
        [](const auto& dd, const auto& o, const auto& t) { return diderivation_right_residual(dd, o, t); });

  report.add("der kernel = left operator-form kernel",
             s.der.space == derivation_space_operator_form(d, OperatorForm::Left));
  report.add("der kernel = right operator-form kernel",
             s.der.space == derivation_space_operator_form(d, OperatorForm::Right));
  report.add("dider kernel = left operator-form kernel",
             s.dider.space == diderivation_space_operator_form(d, OperatorForm::Left));
  report.add("dider kernel = right operator-form kernel",
             s.dider.space == diderivation_space_operator_form(d, OperatorForm::Right));
  return report;
}

/// Containments and bracket closures among Der, Dider, Inn and DInn,
/// checked on the computed bases.
template <typename Scalar>
CheckReport check_closures(const Dialgebra<Scalar>& d, const OperatorSpaces<Scalar>& s) {
  CheckReport report;
  report.add("Inn in Der", s.der.contains(s.inn));
  report.add("DInn in Dider", s.dider.contains(s.dinn));

  auto bracket_into = [&](const std::string& name, const OperatorBasis<Scalar>& a, const OperatorBasis<Scalar>& b,
                          const OperatorBasis<Scalar>& target) {
    for (Index i = 0; i < a.dim(); ++i)
      for (Index j = 0; j < b.dim(); ++j)
        if (!target.contains(commutator(a.matrix(i), b.matrix(j)))) {
          report.add(name, false, "basis pair (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
          return;
        }
    report.add(name, true);
  };
  bracket_into("[Der, Der] in Der", s.der, s.der, s.der);
  bracket_into("[Der, Inn] in Inn", s.der, s.inn, s.inn);
  bracket_into("[Dider, Der] in Dider", s.dider, s.der, s.dider);
  bracket_into("[DInn, Der] in DInn", s.dinn, s.der, s.dinn);

  bool ok = true;
  std::string detail;
  for (Index b = 0; b < s.der.dim() && ok; ++b) {
    const auto t = s.der.matrix(b);
    for (Index i = 0; i < d.dim() && ok; ++i) {
      if (commutator(t, ad(d, d.unit(i))) != ad(d, VectorX<Scalar>(t.col(i)))) {
        ok = false;
        detail = "derivation " + std::to_string(b + 1) + ", a = e" + std::to_string(i + 1);
      }
    }
  }
  report.add("[d, ad_a] = ad_{d(a)}", ok, detail);
  return report;
}

/// Actions of Der and Dider on ann, Z_B and the halo.
template <typename Scalar>
CheckReport check_invariant_actions(const Dialgebra<Scalar>& d, const OperatorSpaces<Scalar>& s) {
  CheckReport report;
  const auto ann = annihilator(d);
  const auto zb = bar_center(d);
  const auto h = halo(d);

  auto maps_into = [&](const std::string& name, const OperatorBasis<Scalar>& ops, const Subspace<Scalar>& src,
                       const Subspace<Scalar>& dst) {
    for (Index b = 0; b < ops.dim(); ++b) {
      const auto t = ops.matrix(b);
      for (Index g = 0; g < src.dim(); ++g)
        if (!dst.contains(VectorX<Scalar>(t * src.basis_vector(g)))) {
          report.add(name, false, "operator " + std::to_string(b + 1) + ", generator " + std::to_string(g + 1));
          return;
        }
    }
    report.add(name, true);
  };
  const Subspace<Scalar> zero(d.dim());
  maps_into("d(ann) in ann", s.der, ann, ann);
  maps_into("d(Z_B) in Z_B", s.der, zb, zb);
  maps_into("delta(ann) = 0", s.dider, ann, zero);

  if (!h.empty()) {
    const Subspace<Scalar> unit = Subspace<Scalar>::span(d.dim(), {*h.point()});
    maps_into("unital: d(e) in ann", s.der, unit, ann);
    maps_into("unital: delta(e) = 0", s.dider, unit, zero);
    maps_into("unital: delta(Z_B) = 0", s.dider, zb, zero);
  }
  return report;
}

}  // namespace dias
