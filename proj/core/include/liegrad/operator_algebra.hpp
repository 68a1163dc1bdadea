#pragma once

#include <liegrad/linalg.hpp>

#include <string>
#include <utility>
#include <vector>

namespace liegrad {

/// Named generators acting on a common space.
struct OperatorSet {
  SpacePtr space;
  std::vector<std::pair<std::string, LinearMap>> ops;

  const LinearMap& map_of(const std::string& name) const;
  bool has(const std::string& name) const;
};

/// Throws InputError unless the set is nonempty with distinct names and
/// all maps share the space.
void validate(const OperatorSet& gens);

/// A spanning monomial: the generator word that produced the map. Words
/// are plain concatenations ("yzx") for associative products and nested
/// bracket spellings ("[[y,z],x]") for Lie products.
struct Monomial {
  std::string word;
  LinearMap map;
};

/// A subspace of endomorphisms together with the monomials that span it.
struct AlgebraSpan {
  SpacePtr space;
  std::vector<Monomial> monomials;
  Subspace span; // rref of the flattened monomial maps

  static AlgebraSpan from_monomials(SpacePtr space, std::vector<Monomial> monomials);
  int dim() const { return span.dim(); }
  bool contains(const LinearMap& m) const { return span.contains(m.flatten()); }
  std::vector<std::string> words() const;
};

/// Smallest subspace containing the generators and closed under
/// composition. Breadth-first by word length: each kept monomial is
/// extended on the right by every generator in input order, and products
/// that do not enlarge the span are dropped. Terminates because the span
/// dimension is bounded by dim(V)².
AlgebraSpan associative_closure(const OperatorSet& gens);

/// Smallest subspace containing the generators and closed under the
/// commutator. Kept monomials are left-normed: each layer brackets the
/// previous layer's monomials against the generators, iterating
/// generators in input order and monomials in kept order, as [m, g];
/// generator pairs are produced only in increasing orientation since the
/// reversed bracket is a scalar multiple. The span of left-normed
/// brackets is the full generated Lie subalgebra.
AlgebraSpan lie_closure(const OperatorSet& gens);

/// rref of {compose(f, g) : f over a's monomials, g over b's monomials}.
Subspace span_product(const AlgebraSpan& a, const AlgebraSpan& b);

/// Wraps a subspace of flattened maps back into an AlgebraSpan so span
/// products can be chained; the synthesized words are positional.
AlgebraSpan span_from_flattened(SpacePtr space, const Subspace& flats);

/// A claimed identity between two generator words, the right side
/// possibly the zero map (empty word list on the right means zero).
struct RelationClaim {
  std::vector<std::string> lhs;
  std::vector<std::string> rhs; // empty = claim lhs evaluates to 0
};

struct RelationCheck {
  std::string description;
  bool holds;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_hold = true;
};

/// Composition of the named generators, leftmost letter applied last.
LinearMap evaluate_word(const OperatorSet& gens, const std::vector<std::string>& word);

/// Verifies each claim by exact evaluation. Unknown generator names in a
/// claim throw InputError.
RelationReport check_relations(const OperatorSet& gens,
                               const std::vector<RelationClaim>& claims);

} // namespace liegrad
