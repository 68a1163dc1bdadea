#pragma once

#include <liegrad/grading.hpp>
#include <liegrad/semigroup.hpp>

#include <string>
#include <utility>
#include <vector>

// Built-in 16-dimensional construction behind the `paper-demo` command: a
// nilpotent Lie algebra whose fine basis grading is a valid Lie grading
// but whose label set embeds in no abelian semigroup compatible with the
// bracket relations. run_full_report checks every claimed identity of
// the construction and records the embeddability decision with its
// certificate.

namespace liegrad::demo {

/// The three nilpotent generators x, y, z on the nine-dimensional space
/// with basis a, b1, b2, b3, c1, c2, c3, d1, d2:
///   x: a -> b1, b2 -> c2, c3 -> d2
///   y: a -> b2, b3 -> c3, c1 -> d1
///   z: a -> b3, b1 -> c1, b2 -> c3, c2 -> d2
/// and zero on all other basis vectors.
OperatorSet build_operators();

struct BuiltAlgebra {
  AlgebraSpan lie_span; // g, the Lie closure of {x, y, z}
  LieAlgebra algebra;   // L = g ⊕ V
  Grading grading;      // fine grading over the 16-element basis
};

BuiltAlgebra build_graded_algebra();

struct ClaimCheck {
  std::string name;
  bool holds;
};

struct DemoReport {
  int dim_A = 0;
  int dim_g = 0;
  int dim_L = 0;
  std::vector<ClaimCheck> relation_checks; // operator and bracket identities
  bool jacobi_pass = false;
  bool g_nilpotent = false;
  int g_class = 0;
  bool l_nilpotent = false;
  int l_class = 0;
  bool grading_valid = false;
  int grading_components = 0;
  int relation_count = 0;
  std::vector<std::pair<std::string, std::string>> bracket_evaluations;
  bool evaluations_hold = false;
  bool d1_d2_distinct = false;
  Decision decision;
  bool verdict_expected = false; // NOT_EMBEDDABLE with colliding labels {d1, d2}
  std::string certificate_text;
  std::string certificate_brackets;
  bool all_pass = false;
};

DemoReport run_full_report();

enum class ReportFormat { Text, Json };

std::string format_report(const DemoReport& report, ReportFormat format);

} // namespace liegrad::demo
