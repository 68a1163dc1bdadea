#pragma once

#include <liegrad/lie_algebra.hpp>
#include <liegrad/relations.hpp>

#include <string>
#include <vector>

namespace liegrad {

/// A candidate grading: labeled subspace components of a Lie algebra.
/// Components may be multi-dimensional; validity is decided by
/// verify_grading, not assumed here.
struct Grading {
  LieAlgebra algebra;
  std::vector<std::string> labels;
  std::vector<Subspace> components; // over the algebra's coordinate space
};

/// The grading with one label per basis name whose components are the
/// one-dimensional spans of the basis vectors.
Grading fine_grading_from_basis(const LieAlgebra& algebra);

struct GradingViolation {
  std::string label_a;
  std::string label_b; // empty for non-pair failures
  std::string reason;
};

struct GradingReport {
  bool valid = false;
  std::vector<GradingViolation> violations;
  int relation_count = 0;
};

/// Checks that (a) every component is nonzero, (b) the components form a
/// direct sum equal to the whole algebra, and (c) for every unordered
/// label pair the span of all brackets between the two components is
/// either zero or contained in a single component. All violations are
/// collected.
GradingReport verify_grading(const Grading& grading);

/// One triple per unordered label pair with nonzero bracket span; the
/// target is the unique containing component. Requires a valid grading
/// (PreconditionError otherwise).
RelationSet relation_set(const Grading& grading);

} // namespace liegrad
