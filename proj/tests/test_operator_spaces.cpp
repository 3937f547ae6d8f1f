#include "support.hpp"

#include "dias/operator_spaces.hpp"

#include <doctest.h>

using namespace dias;
using namespace dias::test;

namespace {

Mat unit_op(Index n, Index i, Index j) { return unit_operator(n, i, j); }

/// P with P e_i = e_{perm[i]}.
Mat permutation_matrix(const std::vector<Index>& perm) {
  const Index n = static_cast<Index>(perm.size());
  Mat p = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i) p(perm[static_cast<std::size_t>(i)], i) = R(1);
  return p;
}

std::vector<Dialgebra<R>> axiom_passing() {
  std::vector<Dialgebra<R>> out;
  for (auto& d : catalog_instances())
    if (verify_axioms(d).ok()) out.push_back(d);
  for (auto& d : phi_family(20, 2, 4, 31)) out.push_back(d);
  out.push_back(zero_dialgebra(2));
  out.push_back(upper_triangular());
  return out;
}

}  // namespace

TEST_SUITE("operator-spaces") {

TEST_CASE("flatten is row-major") {
  Mat m(2, 2);
  m << R(1), R(2), R(3), R(4);
  const Vec v = flatten(m);
  CHECK(v(1) == R(2));
  CHECK(v(2) == R(3));
  CHECK(unflatten(v, 2) == m);
}

TEST_CASE("small spaces") {
  SUBCASE("zero dialgebra") {
    const auto z = zero_dialgebra(2);
    CHECK(derivation_space(z).dim() == 4);
    CHECK(diderivation_space(z).dim() == 4);
    CHECK(inner_derivations(z).dim() == 0);
    CHECK(inner_diderivations(z).dim() == 0);
  }
  SUBCASE("the field as a dialgebra has no derivations") {
    const auto k = associative_as_dialgebra(1, {{Product::Vdash, 0, 0, 0, R(1)}});
    CHECK(derivation_space(k).dim() == 0);
  }
  SUBCASE("Dias2_1 diderivations") {
    const auto s = diderivation_space(instantiate("Dias2_1"));
    REQUIRE(s.dim() == 1);
    CHECK(s.matrix(0) == unit_op(2, 2, 1));
  }
  SUBCASE("Dias2_4 has no diderivations") { CHECK(diderivation_space(instantiate("Dias2_4")).dim() == 0); }
  SUBCASE("Dias2_3 at lambda = 1: d21 free, d22 = 2 d11") {
    const auto der = derivation_space(instantiate("Dias2_3", {{"lambda", R(1)}}));
    CHECK(der.dim() == 2);
    CHECK(der.contains(unit_op(2, 2, 1)));
    CHECK(der.contains(Mat(unit_op(2, 1, 1) + R(2) * unit_op(2, 2, 2))));
    CHECK_FALSE(der.contains(unit_op(2, 1, 1)));
  }
  SUBCASE("commutative associative algebras have no inner derivations") {
    // K[t]/(t^3) on 1, t, t^2
    std::vector<StructureEntry<R>> mul;
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; i + j < 3; ++j) mul.push_back({Product::Vdash, i, j, i + j, R(1)});
    const auto d = associative_as_dialgebra(3, mul);
    CHECK(verify_axioms(d).ok());
    CHECK(inner_derivations(d).dim() == 0);
    CHECK(inner_diderivations(d).dim() == 0);
  }
}

TEST_CASE("associative case: Dider = Der and Inn = DInn") {
  const auto d = upper_triangular();
  REQUIRE(verify_axioms(d).ok());
  const auto s = compute_spaces(d);
  CHECK(s.der.dim() == 2);
  CHECK(s.dider.space == s.der.space);
  CHECK(s.inn.space == s.dinn.space);
}

TEST_CASE("property: the defining identity and the operator forms give one kernel") {
  auto all = catalog_instances();
  for (auto& d : phi_family(20, 2, 4, 32)) all.push_back(d);
  all.push_back(zero_dialgebra(3));
  for (const auto& d : all) {
    CAPTURE(d.name());
    const auto report = check_characterizations(d, compute_spaces(d));
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CHECK(c.ok);
    }
    for (OperatorForm f : {OperatorForm::Left, OperatorForm::Right}) {
      CHECK(derivation_space_operator_form(d, f) == derivation_space(d).space);
      CHECK(diderivation_space_operator_form(d, f) == diderivation_space(d).space);
    }
  }
}

TEST_CASE("property: closure theorems on axiom-passing dialgebras") {
  for (const auto& d : axiom_passing()) {
    CAPTURE(d.name());
    const auto s = compute_spaces(d);
    for (const auto& c : check_closures(d, s).checks) {
      CAPTURE(c.name);
      CHECK(c.ok);
    }
    for (const auto& c : check_invariant_actions(d, s).checks) {
      CAPTURE(c.name);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("[d, ad_a] = ad_{d(a)} directly") {
  const auto d = instantiate("Dias3_16", {{"k", R(1)}, {"m", R(1)}, {"n", R(1)}, {"p", R(1)}, {"q", R(1)}});
  for (const Mat& t : derivation_space(d).matrices())
    for (Index i = 0; i < 3; ++i) CHECK(commutator(t, ad(d, d.unit(i))) == ad(d, Vec(t * d.unit(i))));
}

TEST_CASE("Dias2_4 unital actions") {
  const auto d = instantiate("Dias2_4");
  const auto s = compute_spaces(d);
  CHECK(s.dider.dim() == 0);
  const auto ann = Subspace<R>::span(2, {d.unit(1)});
  for (const Mat& t : s.der.matrices()) CHECK(ann.contains(Vec(t * d.unit(0))));
}

TEST_CASE("property: relabeling conjugates every space") {
  std::vector<Dialgebra<R>> all;
  for (const char* name : {"Dias2_1", "Dias2_4", "Dias3_13", "Dias3_15"}) all.push_back(instantiate(name));
  all.push_back(instantiate("Dias3_16", {{"k", R(0)}, {"m", R(0)}, {"n", R(0)}, {"p", R(-1)}, {"q", R(0)}}));
  for (auto& d : phi_family(6, 3, 3, 33)) all.push_back(d);
  for (const auto& d : all) {
    std::vector<Index> perm(static_cast<std::size_t>(d.dim()));
    for (Index i = 0; i < d.dim(); ++i) perm[static_cast<std::size_t>(i)] = (i + 1) % d.dim();
    const auto moved = d.permuted(perm);
    const Mat p = permutation_matrix(perm);
    for (OperatorKind k : {OperatorKind::Derivation, OperatorKind::Diderivation, OperatorKind::InnerDerivation,
                           OperatorKind::InnerDiderivation}) {
      const auto a = operator_space(d, k), b = operator_space(moved, k);
      CAPTURE(d.name());
      CAPTURE(operator_kind_name(k));
      CHECK(a.dim() == b.dim());
      for (const Mat& t : a.matrices()) CHECK(b.contains(Mat(p * t * p.transpose())));
    }
  }
}

TEST_CASE("constraint matrix columns follow the flattening") {
  const auto d = instantiate("Dias2_1");
  const Mat c = constraint_matrix<R>(2, [&](const Mat& t) { return diderivation_residual(d, t); });
  CHECK(c.cols() == 4);
  CHECK(c.rows() == 2 * 2 * 2 * 2);
  CHECK(nullspace(c) == diderivation_space(d).space);
  CHECK(all_zero(c.col(2)));  // d21, the free entry
}

}
