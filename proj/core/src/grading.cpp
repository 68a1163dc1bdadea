#include <liegrad/grading.hpp>

#include <set>
#include <stdexcept>

namespace liegrad {

Grading fine_grading_from_basis(const LieAlgebra& algebra) {
  const int n = algebra.dim();
  Grading grading{algebra, algebra.basis_names(), {}};
  grading.components.reserve(n);
  for (int i = 0; i < n; ++i) {
    Row e_i(static_cast<std::size_t>(n), Rational(0));
    e_i[i] = 1;
    grading.components.push_back(Subspace::from_rows(n, {std::move(e_i)}));
  }
  return grading;
}

namespace {

// Span of all brackets between two components.
Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b) {
  std::vector<Row> rows;
  rows.reserve(a.basis().size() * b.basis().size());
  for (const Row& u : a.basis()) {
    for (const Row& v : b.basis()) rows.push_back(algebra.bracket(u, v));
  }
  return Subspace::from_rows(algebra.dim(), std::move(rows));
}

// The unique component containing the (nonzero) span, or -1. Containment
// in two components is impossible once the components form a direct sum:
// their intersection would be a nonzero subspace of independent parts.
int containing_component(const Grading& grading, const Subspace& span) {
  int found = -1;
  for (std::size_t k = 0; k < grading.components.size(); ++k) {
    if (grading.components[k].contains_all(span)) {
      if (found >= 0) {
        throw std::logic_error("bracket span contained in two components of a direct sum");
      }
      found = static_cast<int>(k);
    }
  }
  return found;
}

void check_shape(const Grading& grading) {
  if (grading.labels.size() != grading.components.size()) {
    throw InputError("grading must have one component per label");
  }
  std::set<std::string> seen;
  for (const std::string& label : grading.labels) {
    if (label.empty() || !seen.insert(label).second) {
      throw InputError("grading labels must be distinct and non-empty");
    }
  }
  for (const Subspace& c : grading.components) {
    if (c.ambient_dim() != grading.algebra.dim()) {
      throw InputError("grading component has the wrong ambient dimension");
    }
  }
}

} // namespace

GradingReport verify_grading(const Grading& grading) {
  check_shape(grading);
  GradingReport report;
  const std::size_t n = grading.components.size();

  for (std::size_t i = 0; i < n; ++i) {
    if (grading.components[i].is_zero()) {
      report.violations.push_back(
          GradingViolation{grading.labels[i], "", "component is zero"});
    }
  }
  if (!direct_sum_check(grading.components, Subspace::full(grading.algebra.dim()))) {
    report.violations.push_back(
        GradingViolation{"", "", "components do not form a direct sum equal to the algebra"});
  }

  bool direct_sum_ok = report.violations.empty();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Subspace span =
          bracket_span(grading.algebra, grading.components[i], grading.components[j]);
      if (span.is_zero()) continue;
      int target = -1;
      if (direct_sum_ok) {
        target = containing_component(grading, span);
      } else {
        // Without a direct sum, uniqueness of the target can fail; report
        // the first containing component or none.
        for (std::size_t k = 0; k < n && target < 0; ++k) {
          if (grading.components[k].contains_all(span)) target = static_cast<int>(k);
        }
      }
      if (target < 0) {
        report.violations.push_back(
            GradingViolation{grading.labels[i], grading.labels[j],
                             "bracket span is not contained in a single component"});
      } else {
        ++report.relation_count;
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

RelationSet relation_set(const Grading& grading) {
  const GradingReport report = verify_grading(grading);
  if (!report.valid) {
    throw PreconditionError("relation extraction requires a valid grading");
  }
  RelationSet set;
  set.labels = grading.labels;
  const std::size_t n = grading.components.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Subspace span =
          bracket_span(grading.algebra, grading.components[i], grading.components[j]);
      if (span.is_zero()) continue;
      const int target = containing_component(grading, span);
      set.triples.push_back(
          RelationTriple{static_cast<int>(i), static_cast<int>(j), target});
    }
  }
  validate(set);
  return set;
}

} // namespace liegrad
