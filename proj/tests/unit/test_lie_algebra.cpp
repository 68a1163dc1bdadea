#include <doctest.h>

#include <liegrad/demo.hpp>
#include <liegrad/lie_algebra.hpp>

#include "test_util.hpp"

using namespace liegrad;

namespace {

Row unit_row(int n, int i) {
  Row r(static_cast<std::size_t>(n), Rational(0));
  r[i] = 1;
  return r;
}

const demo::BuiltAlgebra& built() {
  static const demo::BuiltAlgebra b = demo::build_graded_algebra();
  return b;
}

} // namespace

TEST_CASE("from_operators reproduces the bracket words of g") {
  const LieAlgebra g = from_operators(built().lie_span);
  CHECK(g.dim() == 7);
  CHECK(g.basis_names() == std::vector<std::string>{"x", "y", "z", "[x,y]", "[x,z]",
                                                    "[y,z]", "[[y,z],x]"});
  // [x, y] is the basis vector named "[x,y]" with coefficient 1.
  CHECK(g.bracket_basis(0, 1) == unit_row(7, g.index_of("[x,y]")));
  // [[z,x],y] = -[[y,z],x].
  const Row zx = g.bracket(unit_row(7, 2), unit_row(7, 0));
  const Row zxy = g.bracket(zx, unit_row(7, 1));
  Row expected = unit_row(7, g.index_of("[[y,z],x]"));
  for (auto& c : expected) c = -c;
  CHECK(zxy == expected);
}

TEST_CASE("from_operators on commuting operators gives zero constants") {
  const SpacePtr space = make_space({"e1", "e2"});
  const LinearMap d1 = LinearMap::from_action(space, {{"e1", "e1", 1}, {"e2", "e2", 2}});
  const LinearMap d2 = LinearMap::from_action(space, {{"e1", "e1", 3}, {"e2", "e2", 5}});
  const AlgebraSpan span = AlgebraSpan::from_monomials(
      space, {Monomial{"p", d1}, Monomial{"q", d2}});
  const LieAlgebra abelian = from_operators(span);
  CHECK(abelian.table().empty());
}

TEST_CASE("from_operators rejects spans that are not bracket-closed") {
  const SpacePtr space = make_space({"e1", "e2"});
  // span{E12} with E21: bracket is diagonal, outside the span.
  const LinearMap e12 = LinearMap::from_action(space, {{"e2", "e1", 1}});
  const LinearMap e21 = LinearMap::from_action(space, {{"e1", "e2", 1}});
  const AlgebraSpan span = AlgebraSpan::from_monomials(
      space, {Monomial{"p", e12}, Monomial{"q", e21}});
  CHECK_THROWS_AS(from_operators(span), InputError);
}

TEST_CASE("semidirect sum: dimensions and module action") {
  const LieAlgebra& L = built().algebra;
  CHECK(L.dim() == 16); // 7 + 9
  const int n = L.dim();
  auto unit = [&](const char* name) { return unit_row(n, L.index_of(name)); };
  CHECK(L.bracket(unit("x"), unit("a")) == unit("b1"));
  CHECK(L.bracket(unit("a"), unit("b1")) == Row(16, Rational(0))); // V abelian
  // Nested evaluations inside L.
  CHECK(L.bracket(unit("y"), L.bracket(unit("z"), L.bracket(unit("x"), unit("a")))) ==
        unit("d1"));
  CHECK(L.bracket(unit("x"), L.bracket(unit("y"), L.bracket(unit("z"), unit("a")))) ==
        unit("d2"));
}

TEST_CASE("semidirect sum restricted to g reproduces its structure constants") {
  const LieAlgebra g = from_operators(built().lie_span);
  const LieAlgebra& L = built().algebra;
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i + 1; j < g.dim(); ++j) {
      const Row inside_g = g.bracket_basis(i, j);
      const Row inside_l = L.bracket_basis(i, j);
      for (int t = 0; t < g.dim(); ++t) CHECK(inside_l[t] == inside_g[t]);
      for (int t = g.dim(); t < L.dim(); ++t) CHECK(inside_l[t] == 0);
    }
  }
}

TEST_CASE("check_axioms accepts L and the abelian algebra") {
  CHECK(check_axioms(built().algebra).pass);
  const LieAlgebra abelian({"u", "v"}, {});
  CHECK(check_axioms(abelian).pass);
}

TEST_CASE("check_axioms reports the Jacobi failure of a bad table") {
  // [e1,e2] = e3, [e1,e3] = e1: the Jacobiator of (e1,e2,e3) is -e3.
  const LieAlgebra bad({"e1", "e2", "e3"},
                       {{{0, 1}, unit_row(3, 2)}, {{0, 2}, unit_row(3, 0)}});
  const AxiomReport report = check_axioms(bad);
  CHECK_FALSE(report.pass);
  REQUIRE_FALSE(report.violations.empty());
  const AxiomViolation& first = report.violations.front();
  CHECK(first.i == 0);
  CHECK(first.j == 1);
  CHECK(first.k == 2);
}

TEST_CASE("lower central series of g has class 3") {
  const LieAlgebra g = from_operators(built().lie_span);
  const LowerCentralSeries series = lower_central_series(g);
  CHECK(series.nilpotent);
  CHECK(series.nilpotency_class == 3);
  REQUIRE(series.terms.size() == 4);
  CHECK(series.terms[0].dim() == 7);
  CHECK(series.terms[1].dim() == 4);
  CHECK(series.terms[2].dim() == 1);
  CHECK(series.terms[3].dim() == 0);
}

TEST_CASE("lower central series of L reaches zero") {
  const LowerCentralSeries series = lower_central_series(built().algebra);
  CHECK(series.nilpotent);
  CHECK(series.nilpotency_class == 4);
  for (std::size_t k = 1; k < series.terms.size(); ++k) {
    CHECK(series.terms[k].dim() < series.terms[k - 1].dim());
  }
  CHECK(series.terms.size() <= static_cast<std::size_t>(built().algebra.dim()) + 1);
}

TEST_CASE("lower central series of an abelian algebra has class 1") {
  const LieAlgebra abelian({"u", "v", "w"}, {});
  const LowerCentralSeries series = lower_central_series(abelian);
  CHECK(series.nilpotent);
  CHECK(series.nilpotency_class == 1);
}

TEST_CASE("lower central series stabilizes on non-nilpotent input") {
  // [e1,e2] = e2 is solvable but not nilpotent.
  const LieAlgebra affine({"e1", "e2"}, {{{0, 1}, unit_row(2, 1)}});
  const LowerCentralSeries series = lower_central_series(affine);
  CHECK_FALSE(series.nilpotent);
  CHECK(series.nilpotency_class == 0);
  CHECK(series.terms.back().dim() == 1);
}

TEST_CASE("constructed algebras pass the axiom check") {
  CHECK(check_axioms(from_operators(built().lie_span)).pass);
  CHECK(check_axioms(testing::heisenberg()).pass);
}
