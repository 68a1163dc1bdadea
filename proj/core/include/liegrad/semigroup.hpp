#pragma once

#include <liegrad/relations.hpp>

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace liegrad {

// Decides whether the label set G of a relation set embeds into an
// abelian semigroup in which every relation g + g' = g'' holds. By the
// universal property of the quotient F(G)/≈ of the free abelian
// semigroup on G by the congruence the relations generate, such a
// semigroup exists iff the canonical images of the generators in F(G)/≈
// are pairwise distinct. The word problem for F(G)/≈ is solved by
// terminating completion on exponent vectors (a ground commutative
// Knuth-Bendix run; equivalently a binomial Gröbner computation), and
// every derived rule carries a replayable derivation from the input
// relations, so both verdicts come with machine-checkable evidence.

/// Element of the free abelian semigroup on the label set: one
/// nonnegative count per label, total degree >= 1. The zero vector is
/// not an element (semigroup, not monoid).
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> counts);
  static ExponentVector unit(int n_labels, int index);

  const std::vector<int>& counts() const { return counts_; }
  int count(int i) const { return counts_.at(i); }
  int size() const { return static_cast<int>(counts_.size()); }
  int degree() const;

  /// Componentwise <=.
  bool divides(const ExponentVector& v) const;
  /// Componentwise max.
  ExponentVector lcm_with(const ExponentVector& v) const;
  ExponentVector plus(const ExponentVector& v) const;
  /// this - lhs + rhs in one pass; requires lhs.divides(*this).
  ExponentVector rewrite(const ExponentVector& lhs, const ExponentVector& rhs) const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.counts_ == b.counts_;
  }

private:
  std::vector<int> counts_;
};

/// Graded lexicographic order: lower total degree first; at equal degree
/// the vector with the larger count at the first differing label (in the
/// fixed input order of G) is the greater one. So with labels x < y,
/// e_x + e_x > e_x + e_y > e_y + e_y.
bool term_order_less(const ExponentVector& u, const ExponentVector& v);

/// "x+y+z+a" rendering: labels in universe order, repeated per count.
std::string format_exponent_vector(const ExponentVector& v,
                                   const std::vector<std::string>& labels);

/// A single application of an input relation: forward replaces the
/// degree-2 side by the degree-1 side. Applications need no position
/// data — applying relation r to a vector v is uniquely v - from + to.
struct ChainStep {
  int relation;
  bool forward;
};

/// An input relation as exponent vectors: left = e_g + e_g' (degree 2),
/// right = e_g'' (degree 1).
struct SemigroupRelation {
  ExponentVector left, right;
  RelationTriple provenance;
};

/// Validates the set and expands its triples.
std::vector<SemigroupRelation> to_relations(const RelationSet& set);

/// Oriented rewrite rule lhs -> rhs with lhs > rhs in the term order.
/// The proof replays lhs into rhs using only input relations.
struct RewriteRule {
  ExponentVector lhs, rhs;
  std::vector<ChainStep> proof;
};

struct DeciderLimits {
  std::size_t max_rules = 100000;      // live rules during completion
  std::size_t max_vectors = 10000000;  // oracle enumeration size
};

/// Ground commutative completion: returns a confluent, interreduced,
/// terminating rule system presenting the same congruence. Critical
/// pairs are processed FIFO and the system is interreduced after every
/// added rule. Throws ResourceError if the rule cap is exceeded.
std::vector<RewriteRule> complete(const RelationSet& set,
                                  const DeciderLimits& limits = {});

/// Applies the first applicable rule until no rule applies. Terminates
/// because every step strictly decreases the term order. When trace is
/// given, the relation-level steps of every applied rule are appended.
ExponentVector reduce(ExponentVector v, const std::vector<RewriteRule>& rules,
                      std::vector<ChainStep>* trace = nullptr);

/// Like reduce but picks a uniformly random applicable rule each step;
/// used to probe confluence.
ExponentVector reduce_random(ExponentVector v, const std::vector<RewriteRule>& rules,
                             std::mt19937& rng);

/// Proof that two distinct labels merge in the quotient: a chain of
/// exponent vectors from e_{label_a} to e_{label_b} where consecutive
/// vectors differ by a single relation application.
struct CollisionCertificate {
  int label_a = -1, label_b = -1;
  std::vector<ExponentVector> vectors; // steps.size() + 1 entries
  std::vector<ChainStep> steps;
};

/// Mechanical replay of every step; true iff the chain is valid, starts
/// at e_{label_a}, and ends at e_{label_b}.
bool replay(const CollisionCertificate& cert, const RelationSet& set);

enum class Verdict { Embeddable, NotEmbeddable };

struct Decision {
  Verdict verdict = Verdict::Embeddable;
  /// Normal forms of the generators, per label, when embeddable.
  std::vector<ExponentVector> normal_forms;
  /// Populated exactly when not embeddable; replay-verified.
  std::optional<CollisionCertificate> certificate;
};

/// Runs completion and compares generator normal forms. A collision is
/// reported with a canonical certificate: the rule proofs witness the
/// collision and fix a degree bound, then the reported chain is the
/// shortest one within that bound, ties broken toward the term-order-
/// greatest next vector, re-verified by replay.
Decision decide(const RelationSet& set, const DeciderLimits& limits = {});

/// Brute-force check independent of the completion path: enumerates all
/// exponent vectors of degree <= max_degree and merges along single
/// relation applications. Finding a collision is conclusive; finding
/// none only bounds the search.
struct OracleResult {
  int max_degree = 0;
  std::optional<CollisionCertificate> collision;
};

OracleResult bfs_oracle(const RelationSet& set, int max_degree,
                        const DeciderLimits& limits = {});

enum class CertificateStyle { Text, Bracket };

/// Text style: the full vector chain, "d1 = y+c1 = ... = d2".
/// Bracket style: available for unimodal chains (degrees strictly rise
/// to a single apex then fall); renders the two nested bracket
/// expressions the chain folds into, one line per colliding label.
/// Certificates are re-verified first; broken chains and unavailable
/// styles throw CertificateError.
std::string render_certificate(const CollisionCertificate& cert,
                               const RelationSet& set, CertificateStyle style);

/// The distinct relations a certificate cites, in first-use order.
std::vector<RelationTriple> cited_relations(const CollisionCertificate& cert,
                                            const RelationSet& set);

} // namespace liegrad
