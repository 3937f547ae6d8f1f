#pragma once

#include "dias/operator_spaces.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dias {

/// Element delta + d of Dider(D) + Der(D).
template <typename Scalar>
struct BiderElement {
  MatrixX<Scalar> dider;
  MatrixX<Scalar> der;

  friend bool operator==(const BiderElement& a, const BiderElement& b) {
    return a.dider == b.dider && a.der == b.der;
  }
};

/// <delta + d, delta' + d'> = [delta, d'] + [d, d'], without membership checks.
template <typename Scalar>
BiderElement<Scalar> bider_bracket_unchecked(const BiderElement<Scalar>& x, const BiderElement<Scalar>& y) {
  return {commutator(x.dider, y.der), commutator(x.der, y.der)};
}

template <typename Scalar>
bool in_bider(const OperatorSpaces<Scalar>& s, const BiderElement<Scalar>& x) {
  return s.dider.contains(x.dider) && s.der.contains(x.der);
}

/// Bracket of two elements of Bider(D). Throws if an argument has a part
/// outside Dider(D) or Der(D), and if the result does (which would
/// contradict the closure [Dider, Der] in Dider).
template <typename Scalar>
BiderElement<Scalar> bider_bracket(const OperatorSpaces<Scalar>& s, const BiderElement<Scalar>& x,
                                   const BiderElement<Scalar>& y) {
  if (!in_bider(s, x)) throw std::invalid_argument("bider_bracket: first argument is not in Dider + Der");
  if (!in_bider(s, y)) throw std::invalid_argument("bider_bracket: second argument is not in Dider + Der");
  auto out = bider_bracket_unchecked(x, y);
  if (!in_bider(s, out)) throw std::logic_error("bider_bracket: result left Dider + Der");
  return out;
}

template <typename Scalar>
std::vector<BiderElement<Scalar>> bider_basis(const OperatorBasis<Scalar>& dider_part,
                                              const OperatorBasis<Scalar>& der_part) {
  const Index n = dider_part.dialgebra_dim;
  const MatrixX<Scalar> zero = MatrixX<Scalar>::Zero(n, n);
  std::vector<BiderElement<Scalar>> out;
  for (const auto& m : dider_part.matrices()) out.push_back({m, zero});
  for (const auto& m : der_part.matrices()) out.push_back({zero, m});
  return out;
}

template <typename Scalar>
struct BiderReport {
  CheckReport checks;
  Index bider_dim = 0;
  Index ann_dim = 0;          // dim span{<x, x>}
  bool ann_in_dider = true;   // span{<x, x>} lies in Dider + 0
};

/// Leibniz identity <<A,B>,C> = <<A,C>,B> + <A,<B,C>> on all basis triples,
/// two-sided ideal checks for DInn+Der and DInn+Inn, and the span of
/// squares <x, x>.
template <typename Scalar>
BiderReport<Scalar> check_bider_leibniz(const OperatorSpaces<Scalar>& s) {
  BiderReport<Scalar> out;
  const auto basis = bider_basis(s.dider, s.der);
  out.bider_dim = static_cast<Index>(basis.size());
  auto br = [](const BiderElement<Scalar>& x, const BiderElement<Scalar>& y) { return bider_bracket_unchecked(x, y); };

  {
    bool ok = true;
    std::string detail;
    for (std::size_t a = 0; a < basis.size() && ok; ++a)
      for (std::size_t b = 0; b < basis.size() && ok; ++b) {
        const auto ab = br(basis[a], basis[b]);
        for (std::size_t c = 0; c < basis.size() && ok; ++c) {
          const auto lhs = br(ab, basis[c]);
          const auto t1 = br(br(basis[a], basis[c]), basis[b]);
          const auto t2 = br(basis[a], br(basis[b], basis[c]));
          if (lhs.dider != t1.dider + t2.dider || lhs.der != t1.der + t2.der) {
            ok = false;
            detail = "basis triple (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ", " +
                     std::to_string(c + 1) + ")";
          }
        }
      }
    out.checks.add("Bider Leibniz identity", ok, detail);
  }

  auto ideal = [&](const std::string& name, const OperatorBasis<Scalar>& first, const OperatorBasis<Scalar>& second) {
    const auto gens = bider_basis(first, second);
    auto member = [&](const BiderElement<Scalar>& x) { return first.contains(x.dider) && second.contains(x.der); };
    std::string left_detail, right_detail;
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::string where = "generator " + std::to_string(g + 1) + ", basis " + std::to_string(b + 1);
        if (left_detail.empty() && !member(br(gens[g], basis[b]))) left_detail = where;
        if (right_detail.empty() && !member(br(basis[b], gens[g]))) right_detail = where;
      }
    out.checks.add(name + " ideal: <I, Bider> in I", left_detail.empty(), left_detail);
    out.checks.add(name + " ideal: <Bider, I> in I", right_detail.empty(), right_detail);
  };
  ideal("DInn+Der", s.dinn, s.der);
  ideal("DInn+Inn", s.dinn, s.inn);

  // span{<x,x>} is spanned by <z,z> and <z,w> + <w,z> over basis elements.
  const Index n = s.der.dialgebra_dim;
  std::vector<VectorX<Scalar>> squares;
  auto flat = [&](const BiderElement<Scalar>& x) {
    VectorX<Scalar> v(2 * n * n);
    v << flatten(x.dider), flatten(x.der);
    return v;
  };
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b) {
      const auto ab = br(basis[a], basis[b]);
      const auto ba = br(basis[b], basis[a]);
      squares.push_back(a == b ? flat(ab) : VectorX<Scalar>(flat(ab) + flat(ba)));
    }
  const auto ann = Subspace<Scalar>::span(2 * n * n, squares);
  out.ann_dim = ann.dim();
  for (Index i = 0; i < ann.dim(); ++i) {
    const VectorX<Scalar> v = ann.basis_vector(i);
    if (!all_zero(v.tail(n * n)) || !s.dider.contains(unflatten(VectorX<Scalar>(v.head(n * n)), n)))
      out.ann_in_dider = false;
  }
  return out;
}

}  // namespace dias
