#pragma once

#include "dias/checks.hpp"
#include "dias/dialgebra.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dias {

/// span{e_i -| e_j - e_i |- e_j}.
template <typename Scalar>
Subspace<Scalar> annihilator(const Dialgebra<Scalar>& d) {
  std::vector<VectorX<Scalar>> gens;
  for (Index i = 0; i < d.dim(); ++i)
    for (Index j = 0; j < d.dim(); ++j)
      gens.push_back(d.basis_product(i, j, Product::Dashv) - d.basis_product(i, j, Product::Vdash));
  return Subspace<Scalar>::span(d.dim(), gens);
}

/// {z : z |- x = 0 = x -| z for all x}.
template <typename Scalar>
Subspace<Scalar> bar_center(const Dialgebra<Scalar>& d) {
  const Index n = d.dim();
  MatrixX<Scalar> stacked(2 * n * n, n);
  for (Index j = 0; j < n; ++j) {
    stacked.block(2 * j * n, 0, n, n) = d.right_op(d.unit(j), Product::Vdash);
    stacked.block((2 * j + 1) * n, 0, n, n) = d.left_basis_op(Product::Dashv, j);
  }
  return nullspace(stacked);
}

/// All bar units e (e |- x = x = x -| e). Empty when d is not unital.
template <typename Scalar>
AffineSet<Scalar> halo(const Dialgebra<Scalar>& d) {
  const Index n = d.dim();
  MatrixX<Scalar> a(2 * n * n, n);
  VectorX<Scalar> b(2 * n * n);
  for (Index j = 0; j < n; ++j) {
    a.block(2 * j * n, 0, n, n) = d.right_op(d.unit(j), Product::Vdash);
    a.block((2 * j + 1) * n, 0, n, n) = d.left_basis_op(Product::Dashv, j);
    b.segment(2 * j * n, n) = d.unit(j);
    b.segment((2 * j + 1) * n, n) = d.unit(j);
  }
  return solve_affine(a, b);
}

struct Triple {
  Index i, j, k;
};

/// Bracket algebra [a, b] = a -| b - b |- a. Column j of bracket_op(i) is
/// [e_i, e_j]. Both Leibniz identities are evaluated:
///   left:  [x,[y,z]] = [[x,y],z] + [y,[x,z]]
///   right: [[x,y],z] = [[x,z],y] + [x,[y,z]]
template <typename Scalar>
struct LeibnizAlgebra {
  Index dim = 0;
  std::vector<MatrixX<Scalar>> bracket_ops;
  bool left_ok = true;
  bool right_ok = true;
  std::optional<Triple> left_counterexample;
  std::optional<Triple> right_counterexample;

  VectorX<Scalar> bracket(const VectorX<Scalar>& x, const VectorX<Scalar>& y) const {
    VectorX<Scalar> out = VectorX<Scalar>::Zero(dim);
    for (Index i = 0; i < dim; ++i)
      if (x(i) != Scalar(0)) out += x(i) * (bracket_ops[static_cast<std::size_t>(i)] * y);
    return out;
  }
  const Scalar& coeff(Index i, Index j, Index k) const {
    return bracket_ops[static_cast<std::size_t>(i)](k, j);
  }
};

template <typename Scalar>
LeibnizAlgebra<Scalar> leibniz_of(const Dialgebra<Scalar>& d) {
  const Index n = d.dim();
  LeibnizAlgebra<Scalar> out;
  out.dim = n;
  for (Index i = 0; i < n; ++i) {
    MatrixX<Scalar> b(n, n);
    for (Index j = 0; j < n; ++j)
      b.col(j) = d.basis_product(i, j, Product::Dashv) - d.basis_product(j, i, Product::Vdash);
    out.bracket_ops.push_back(std::move(b));
  }
  auto br = [&](const VectorX<Scalar>& x, const VectorX<Scalar>& y) { return out.bracket(x, y); };
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        const auto x = d.unit(i), y = d.unit(j), z = d.unit(k);
        if (out.left_ok && br(x, br(y, z)) != VectorX<Scalar>(br(br(x, y), z) + br(y, br(x, z)))) {
          out.left_ok = false;
          out.left_counterexample = Triple{i, j, k};
        }
        if (out.right_ok && br(br(x, y), z) != VectorX<Scalar>(br(br(x, z), y) + br(x, br(y, z)))) {
          out.right_ok = false;
          out.right_counterexample = Triple{i, j, k};
        }
      }
    }
  }
  return out;
}

/// Ideal and containment properties of ann and Z_B, plus the unital case
/// (halo direction = ann = Z_B).
template <typename Scalar>
CheckReport check_invariant_structure(const Dialgebra<Scalar>& d) {
  CheckReport report;
  const auto ann = annihilator(d);
  const auto zb = bar_center(d);
  const auto h = halo(d);

  auto ideal = [&](const Subspace<Scalar>& s, const Subspace<Scalar>& target, const std::string& name) {
    for (Product p : kProducts) {
      for (Index i = 0; i < d.dim(); ++i) {
        for (Index g = 0; g < s.dim(); ++g) {
          const auto v = s.basis_vector(g);
          const auto left = d.multiply(d.unit(i), v, p);
          const auto right = d.multiply(v, d.unit(i), p);
          if (!target.contains(left) || !target.contains(right)) {
            report.add(name, false,
                       std::string("e") + std::to_string(i + 1) + " " + product_symbol(p) + " generator " +
                           std::to_string(g + 1));
            return;
          }
        }
      }
    }
    report.add(name, true);
  };
  ideal(ann, ann, "ann is an ideal");
  ideal(zb, zb, "Z_B is an ideal");
  ideal(zb, ann, "D*Z_B and Z_B*D lie in ann");

  if (!h.empty()) {
    report.add("unital: halo direction = ann", h.direction() == ann);
    report.add("unital: ann = Z_B", ann == zb);
  }
  return report;
}

}  // namespace dias
