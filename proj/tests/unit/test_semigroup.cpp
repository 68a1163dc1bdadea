#include <doctest.h>

#include <liegrad/demo.hpp>
#include <liegrad/grading.hpp>
#include <liegrad/semigroup.hpp>

#include "test_util.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace liegrad;

namespace {

const RelationSet& demo_relations() {
  static const RelationSet set = relation_set(demo::build_graded_algebra().grading);
  return set;
}

RelationSet sl2_relations() {
  return make_relation_set({"e", "f", "h"},
                           {{{"e", "h", "e"}}, {{"f", "h", "f"}}, {{"e", "f", "h"}}});
}

ExponentVector ev(std::vector<int> counts) { return ExponentVector(std::move(counts)); }

ExponentVector sum_of(const RelationSet& set, std::initializer_list<const char*> labels) {
  std::vector<int> counts(set.labels.size(), 0);
  for (const char* l : labels) ++counts[static_cast<std::size_t>(set.index_of(l))];
  return ExponentVector(std::move(counts));
}

} // namespace

TEST_CASE("term order: degree first, then lexicographic by label order") {
  // Two labels x < y.
  CHECK(term_order_less(ev({1, 0}), ev({1, 1})));        // lower degree first
  CHECK_FALSE(term_order_less(ev({1, 0}), ev({1, 0}))); // irreflexive
  // At equal degree the larger count at the first label wins, so
  // x+x > x+y > y+y.
  CHECK(term_order_less(ev({1, 1}), ev({2, 0})));
  CHECK(term_order_less(ev({0, 2}), ev({1, 1})));
  CHECK(term_order_less(ev({0, 1}), ev({1, 0}))); // e_y < e_x
}

TEST_CASE("exponent vectors reject negative counts and degree-0 units") {
  CHECK_THROWS_AS(ExponentVector({1, -1}), InputError);
  CHECK(ExponentVector::unit(3, 1).degree() == 1);
  CHECK(ev({2, 1}).divides(ev({2, 2})));
  CHECK_FALSE(ev({2, 1}).divides(ev({1, 2})));
  CHECK(ev({2, 1}).lcm_with(ev({1, 3})) == ev({2, 3}));
}

TEST_CASE("reduce leaves irreducible vectors unchanged") {
  const RelationSet empty{{"p", "q"}, {}};
  const auto rules = complete(empty);
  CHECK(rules.empty());
  CHECK(reduce(ev({1, 0}), rules) == ev({1, 0}));
}

TEST_CASE("reduce applies the demo relations") {
  const RelationSet& set = demo_relations();
  const auto relations = to_relations(set);
  std::vector<RewriteRule> raw;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    raw.push_back(RewriteRule{relations[i].left, relations[i].right,
                              {ChainStep{static_cast<int>(i), true}}});
  }
  CHECK(reduce(sum_of(set, {"x", "a"}), raw) == sum_of(set, {"b1"}));

  // Pre-completion the result is rule-order dependent: the two
  // evaluation chains send x+y+z+a to different generators.
  auto chain_rules = [&](std::initializer_list<const char*> names) {
    std::vector<RewriteRule> out;
    for (const char* wanted : names) {
      for (std::size_t i = 0; i < set.triples.size(); ++i) {
        if (format_triple(set, set.triples[i]) == wanted) {
          out.push_back(RewriteRule{relations[i].left, relations[i].right,
                                    {ChainStep{static_cast<int>(i), true}}});
        }
      }
    }
    REQUIRE(out.size() == 3);
    return out;
  };
  const auto first = chain_rules({"(x,a,b1)", "(z,b1,c1)", "(y,c1,d1)"});
  CHECK(reduce(sum_of(set, {"x", "y", "z", "a"}), first) == sum_of(set, {"d1"}));
  const auto second = chain_rules({"(z,a,b3)", "(y,b3,c3)", "(x,c3,d2)"});
  CHECK(reduce(sum_of(set, {"x", "y", "z", "a"}), second) == sum_of(set, {"d2"}));
}

TEST_CASE("completion of the Cartan-type relations derives 2h -> h") {
  const RelationSet set = sl2_relations();
  const auto rules = complete(set);
  const ExponentVector two_h = ev({0, 0, 2});
  const ExponentVector one_h = ev({0, 0, 1});
  const bool found = std::any_of(rules.begin(), rules.end(), [&](const RewriteRule& r) {
    return r.lhs == two_h && r.rhs == one_h;
  });
  CHECK(found);
  // The quotient satisfies the input relations.
  for (const SemigroupRelation& rel : to_relations(set)) {
    CHECK(reduce(rel.left, rules) == reduce(rel.right, rules));
  }
}

TEST_CASE("completion of the demo relations merges d1 and d2") {
  const RelationSet& set = demo_relations();
  const auto rules = complete(set);
  const ExponentVector d1 = sum_of(set, {"d1"});
  const ExponentVector d2 = sum_of(set, {"d2"});
  CHECK(reduce(d1, rules) == reduce(d2, rules));
  const bool found = std::any_of(rules.begin(), rules.end(), [&](const RewriteRule& r) {
    return r.lhs == d1 && r.rhs == d2;
  });
  CHECK(found);
}

TEST_CASE("decide: the demo grading is not semigroup-gradable") {
  const RelationSet& set = demo_relations();
  const Decision decision = decide(set);
  REQUIRE(decision.verdict == Verdict::NotEmbeddable);
  REQUIRE(decision.certificate.has_value());
  const CollisionCertificate& cert = *decision.certificate;
  CHECK(set.labels.at(cert.label_a) == "d1");
  CHECK(set.labels.at(cert.label_b) == "d2");
  CHECK(replay(cert, set));
  // The chain passes through x+y+z+a.
  const ExponentVector junction = sum_of(set, {"x", "y", "z", "a"});
  CHECK(std::count(cert.vectors.begin(), cert.vectors.end(), junction) == 1);
  // It cites exactly the two evaluation chains.
  std::set<std::string> cited;
  for (const RelationTriple& t : cited_relations(cert, set)) {
    cited.insert(format_triple(set, t));
  }
  CHECK(cited == std::set<std::string>{"(x,a,b1)", "(z,b1,c1)", "(y,c1,d1)",
                                       "(z,a,b3)", "(y,b3,c3)", "(x,c3,d2)"});
}

TEST_CASE("decide: empty relation sets are free, hence embeddable") {
  const RelationSet set{{"p", "q", "r"}, {}};
  const Decision decision = decide(set);
  CHECK(decision.verdict == Verdict::Embeddable);
  REQUIRE(decision.normal_forms.size() == 3);
  for (int g = 0; g < 3; ++g) {
    CHECK(decision.normal_forms[g] == ExponentVector::unit(3, g));
  }
}

TEST_CASE("decide: Cartan-type relations embed with distinct normal forms") {
  const Decision decision = decide(sl2_relations());
  REQUIRE(decision.verdict == Verdict::Embeddable);
  REQUIRE(decision.normal_forms.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(decision.normal_forms[i] == ExponentVector::unit(3, i));
  }
}

TEST_CASE("bfs_oracle finds the demo collision at degree 4 but not 2") {
  const RelationSet& set = demo_relations();
  const OracleResult found = bfs_oracle(set, 4);
  REQUIRE(found.collision.has_value());
  CHECK(set.labels.at(found.collision->label_a) == "d1");
  CHECK(set.labels.at(found.collision->label_b) == "d2");
  CHECK(replay(*found.collision, set));
  CHECK_FALSE(bfs_oracle(set, 2).collision.has_value());
  CHECK_FALSE(bfs_oracle(RelationSet{{"p"}, {}}, 5).collision.has_value());
  CHECK_THROWS_AS(bfs_oracle(set, 1), InputError);
}

TEST_CASE("certificate rendering, text and bracket styles") {
  const RelationSet& set = demo_relations();
  const Decision decision = decide(set);
  REQUIRE(decision.certificate.has_value());
  CHECK(render_certificate(*decision.certificate, set, CertificateStyle::Text) ==
        "d1 = y+c1 = y+z+b1 = x+y+z+a = x+y+b3 = x+c3 = d2");
  CHECK(render_certificate(*decision.certificate, set, CertificateStyle::Bracket) ==
        "[y,[z,[x,a]]] = d1\n[x,[y,[z,a]]] = d2");
}

TEST_CASE("bracket rendering of the smallest valid chain has two lines") {
  // a ~ b through [[c,d],v] = a and [c,[d,v]] = b.
  const RelationSet set = make_relation_set(
      {"a", "b", "c", "d", "e", "u", "v"},
      {{{"c", "d", "u"}}, {{"u", "v", "a"}}, {{"d", "v", "e"}}, {{"c", "e", "b"}}});
  const Decision decision = decide(set);
  REQUIRE(decision.verdict == Verdict::NotEmbeddable);
  REQUIRE(decision.certificate.has_value());
  CHECK(set.labels.at(decision.certificate->label_a) == "a");
  CHECK(set.labels.at(decision.certificate->label_b) == "b");
  const std::string rendered =
      render_certificate(*decision.certificate, set, CertificateStyle::Bracket);
  CHECK(std::count(rendered.begin(), rendered.end(), '\n') == 1);
  CHECK(rendered == "[[c,d],v] = a\n[c,[d,v]] = b");
}

TEST_CASE("broken certificates are rejected") {
  const RelationSet& set = demo_relations();
  const Decision decision = decide(set);
  CollisionCertificate tampered = *decision.certificate;
  tampered.vectors[1] = sum_of(set, {"x", "x"});
  CHECK_FALSE(replay(tampered, set));
  CHECK_THROWS_AS(render_certificate(tampered, set, CertificateStyle::Text),
                  CertificateError);
}

TEST_CASE("formatting exponent vectors expands multiplicity") {
  const RelationSet set{{"p", "q"}, {}};
  CHECK(format_exponent_vector(ev({2, 1}), set.labels) == "p+p+q");
}

TEST_CASE("relation sets validate labels and pair uniqueness") {
  CHECK_THROWS_AS(validate(RelationSet{{"p", "p"}, {}}), InputError);
  CHECK_THROWS_AS(validate(RelationSet{{"p", "q"},
                                       {RelationTriple{0, 1, 0}, RelationTriple{1, 0, 1}}}),
                  InputError);
  CHECK_THROWS_AS(validate(RelationSet{{"p"}, {RelationTriple{0, 0, 3}}}), InputError);
}

TEST_CASE("property corpus: confluence, soundness, oracle agreement, invariance") {
  std::mt19937 rng(0xC0FFEE);
  std::uniform_int_distribution<int> degree(1, 6);
  int collisions = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const RelationSet set = testing::random_relation_set(rng);
    const int n = static_cast<int>(set.labels.size());
    const auto rules = complete(set);

    // Every rule keeps both sides at degree >= 1 (semigroup positivity).
    for (const RewriteRule& r : rules) {
      CHECK(r.lhs.degree() >= 1);
      CHECK(r.rhs.degree() >= 1);
    }

    // Quotient satisfies the input relations.
    for (const SemigroupRelation& rel : to_relations(set)) {
      CHECK(reduce(rel.left, rules) == reduce(rel.right, rules));
    }

    // Random-order reduction reaches the same normal form.
    for (int probe = 0; probe < 4; ++probe) {
      std::vector<int> counts(static_cast<std::size_t>(n), 0);
      const int d = degree(rng);
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int k = 0; k < d; ++k) ++counts[static_cast<std::size_t>(pick(rng))];
      const ExponentVector v{std::vector<int>(counts)};
      const ExponentVector nf = reduce(v, rules);
      CHECK(nf.degree() >= 1);
      for (int run = 0; run < 3; ++run) {
        CHECK(reduce_random(v, rules, rng) == nf);
      }
    }

    const Decision decision = decide(set);
    const OracleResult oracle = bfs_oracle(set, 6);
    if (oracle.collision) {
      CHECK(decision.verdict == Verdict::NotEmbeddable);
      CHECK(replay(*oracle.collision, set));
    }
    if (decision.verdict == Verdict::Embeddable) {
      CHECK_FALSE(oracle.collision.has_value());
      // Normal forms are pairwise distinct by definition of the verdict.
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          CHECK_FALSE(decision.normal_forms[i] == decision.normal_forms[j]);
        }
      }
    } else {
      ++collisions;
      REQUIRE(decision.certificate.has_value());
      CHECK(replay(*decision.certificate, set));
    }

    // The verdict survives relabeling.
    const RelationSet shuffled = testing::permuted_relation_set(set, rng);
    CHECK(decide(shuffled).verdict == decision.verdict);
  }
  CHECK(collisions > 0); // the corpus exercises both verdicts
}
