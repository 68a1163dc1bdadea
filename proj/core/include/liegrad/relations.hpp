#pragma once

#include <array>
#include <string>
#include <vector>

namespace liegrad {

/// One bracket containment [L_g, L_g'] ⊆ L_g'' recorded as label indices.
/// The pair {g, gp} is unordered; g == gp is allowed (self-bracket of a
/// component).
struct RelationTriple {
  int g, gp, gpp;

  friend bool operator==(const RelationTriple& a, const RelationTriple& b) {
    return a.g == b.g && a.gp == b.gp && a.gpp == b.gpp;
  }
};

/// The label set G of a grading together with its additive relations
/// g + g' = g''.
struct RelationSet {
  std::vector<std::string> labels;
  std::vector<RelationTriple> triples;

  int index_of(const std::string& label) const; // InputError if unknown
};

/// Throws InputError unless labels are distinct and nonempty, all triple
/// indices are in range, and no unordered pair {g, g'} repeats.
void validate(const RelationSet& set);

/// Convenience builder from label names.
RelationSet make_relation_set(std::vector<std::string> labels,
                              const std::vector<std::array<std::string, 3>>& named_triples);

/// "(x,a,b1)" rendering of one triple.
std::string format_triple(const RelationSet& set, const RelationTriple& triple);

} // namespace liegrad
