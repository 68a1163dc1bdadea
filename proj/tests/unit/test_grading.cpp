#include <doctest.h>

#include <liegrad/demo.hpp>
#include <liegrad/grading.hpp>

#include "test_util.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

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

// Orientation-free rendering, for multiset comparison of triples.
std::set<std::tuple<std::string, std::string, std::string>> canonical_triples(
    const RelationSet& set) {
  std::set<std::tuple<std::string, std::string, std::string>> out;
  for (const RelationTriple& t : set.triples) {
    std::string a = set.labels.at(t.g);
    std::string b = set.labels.at(t.gp);
    if (b < a) std::swap(a, b);
    out.emplace(a, b, set.labels.at(t.gpp));
  }
  return out;
}

// Permutes the basis of a Lie algebra; brackets move along.
LieAlgebra permuted_algebra(const LieAlgebra& algebra, const std::vector<int>& perm) {
  const int n = algebra.dim();
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names[perm[i]] = algebra.basis_names()[i];
  std::map<std::pair<int, int>, Row> table;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Row value = algebra.bracket_basis(i, j);
      int a = perm[i], b = perm[j];
      if (a > b) {
        std::swap(a, b);
        for (auto& c : value) c = -c;
      }
      Row moved(static_cast<std::size_t>(n), Rational(0));
      for (int t = 0; t < n; ++t) moved[perm[t]] = value[t];
      table.emplace(std::make_pair(a, b), std::move(moved));
    }
  }
  return LieAlgebra(std::move(names), std::move(table));
}

} // namespace

TEST_CASE("fine grading of L has 16 one-dimensional components") {
  const Grading& grading = built().grading;
  CHECK(grading.labels.size() == 16);
  for (const Subspace& c : grading.components) CHECK(c.dim() == 1);
  CHECK(grading.labels == built().algebra.basis_names());
}

TEST_CASE("fine grading of small algebras") {
  const LieAlgebra trivial({"u"}, {});
  CHECK(fine_grading_from_basis(trivial).labels == std::vector<std::string>{"u"});
  const Grading heis = fine_grading_from_basis(testing::heisenberg());
  CHECK(heis.labels == std::vector<std::string>{"x", "y", "z"});
  CHECK(verify_grading(heis).valid);
}

TEST_CASE("verify_grading accepts the fine grading of L") {
  const GradingReport report = verify_grading(built().grading);
  CHECK(report.valid);
  CHECK(report.violations.empty());
  CHECK(report.relation_count == 20);
  // Spot check: [L_x, L_a] = span{b1} inside L_b1.
  const LieAlgebra& L = built().algebra;
  const Row bracket = L.bracket(unit_row(16, L.index_of("x")), unit_row(16, L.index_of("a")));
  CHECK(built().grading.components[L.index_of("b1")].contains(bracket));
}

TEST_CASE("any direct-sum decomposition of an abelian algebra is a valid grading") {
  const LieAlgebra abelian({"u", "v"}, {});
  Grading grading{abelian, {"p", "q"}, {}};
  grading.components.push_back(Subspace::from_rows(2, {Row{1, 1}}));
  grading.components.push_back(Subspace::from_rows(2, {Row{1, -1}}));
  CHECK(verify_grading(grading).valid);
  CHECK(relation_set(grading).triples.empty());
}

TEST_CASE("a bracket escaping every component is reported") {
  // [x, y] = z against components {span(x), span(y, x+z)}: the bracket
  // span{z} sits inside neither.
  const LieAlgebra heis = testing::heisenberg();
  Grading grading{heis, {"p", "q"}, {}};
  grading.components.push_back(Subspace::from_rows(3, {Row{1, 0, 0}}));
  grading.components.push_back(Subspace::from_rows(3, {Row{0, 1, 0}, Row{1, 0, 1}}));
  const GradingReport report = verify_grading(grading);
  CHECK_FALSE(report.valid);
  // Both the cross pair and the self-bracket of the second component
  // ([y, x+z] = -z) escape; violations are collected, not short-circuited.
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0].label_a == "p");
  CHECK(report.violations[0].label_b == "q");
  CHECK(report.violations[1].label_a == "q");
  CHECK(report.violations[1].label_b == "q");
  CHECK_THROWS_AS(relation_set(grading), PreconditionError);
}

TEST_CASE("zero components and failed direct sums are violations") {
  const LieAlgebra abelian({"u", "v"}, {});
  Grading zero_component{abelian, {"p", "q"}, {Subspace::from_rows(2, {Row{1, 0}}),
                                               Subspace::zero_subspace(2)}};
  const GradingReport r1 = verify_grading(zero_component);
  CHECK_FALSE(r1.valid);
  Grading overcount{abelian, {"p", "q"}, {Subspace::from_rows(2, {Row{1, 0}}),
                                          Subspace::from_rows(2, {Row{2, 0}})}};
  const GradingReport r2 = verify_grading(overcount);
  CHECK_FALSE(r2.valid);
}

TEST_CASE("relation set of the demo grading contains both evaluation chains") {
  const RelationSet set = relation_set(built().grading);
  CHECK(set.triples.size() == 20);
  const auto triples = canonical_triples(set);
  auto has = [&](const char* a, const char* b, const char* c) {
    std::string u = a, v = b;
    if (v < u) std::swap(u, v);
    return triples.count({u, v, c}) == 1;
  };
  CHECK(has("x", "a", "b1"));
  CHECK(has("z", "b1", "c1"));
  CHECK(has("y", "c1", "d1"));
  CHECK(has("z", "a", "b3"));
  CHECK(has("y", "b3", "c3"));
  CHECK(has("x", "c3", "d2"));
}

TEST_CASE("relation count equals the number of basis pairs with nonzero bracket") {
  const LieAlgebra& L = built().algebra;
  int nonzero_pairs = 0;
  for (int i = 0; i < L.dim(); ++i) {
    for (int j = i; j < L.dim(); ++j) {
      const Row b = L.bracket_basis(i, j);
      if (!std::all_of(b.begin(), b.end(), [](const Rational& c) { return c == 0; })) {
        ++nonzero_pairs;
      }
    }
  }
  CHECK(nonzero_pairs == static_cast<int>(relation_set(built().grading).triples.size()));
}

TEST_CASE("scaling component vectors changes nothing") {
  std::mt19937 rng(7300);
  const RelationSet reference = relation_set(built().grading);
  Grading scaled = built().grading;
  for (Subspace& c : scaled.components) {
    std::vector<Row> rows = c.basis();
    for (Row& row : rows) {
      Rational factor = testing::random_rational(rng);
      if (factor == 0) factor = Rational(5, 3);
      for (Rational& entry : row) entry *= factor;
    }
    c = Subspace::from_rows(c.ambient_dim(), std::move(rows));
  }
  CHECK(verify_grading(scaled).valid);
  CHECK(canonical_triples(relation_set(scaled)) == canonical_triples(reference));
}

TEST_CASE("the triple multiset is invariant under basis permutation") {
  std::mt19937 rng(7301);
  const RelationSet reference = relation_set(built().grading);
  std::vector<int> perm(16);
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const LieAlgebra permuted = permuted_algebra(built().algebra, perm);
    CHECK(check_axioms(permuted).pass);
    const RelationSet set = relation_set(fine_grading_from_basis(permuted));
    CHECK(canonical_triples(set) == canonical_triples(reference));
  }
}

TEST_CASE("relation triples are orientation independent") {
  // The emitted triple for {g, g'} stores the pair in label order; the
  // bracket in the other orientation only flips sign, never the target.
  const LieAlgebra& L = built().algebra;
  const RelationSet set = relation_set(built().grading);
  for (const RelationTriple& t : set.triples) {
    const Row forward = L.bracket(unit_row(16, t.g), unit_row(16, t.gp));
    const Row backward = L.bracket(unit_row(16, t.gp), unit_row(16, t.g));
    const Subspace& target = built().grading.components[t.gpp];
    if (t.g != t.gp) {
      CHECK(target.contains(forward));
      CHECK(target.contains(backward));
    }
  }
}
