#include <liegrad/demo.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace liegrad::demo {

using Json = nlohmann::ordered_json;

OperatorSet build_operators() {
  SpacePtr space = make_space({"a", "b1", "b2", "b3", "c1", "c2", "c3", "d1", "d2"});
  const LinearMap x = LinearMap::from_action(
      space, {{"a", "b1", 1}, {"b2", "c2", 1}, {"c3", "d2", 1}});
  const LinearMap y = LinearMap::from_action(
      space, {{"a", "b2", 1}, {"b3", "c3", 1}, {"c1", "d1", 1}});
  const LinearMap z = LinearMap::from_action(
      space, {{"a", "b3", 1}, {"b1", "c1", 1}, {"b2", "c3", 1}, {"c2", "d2", 1}});
  return OperatorSet{space, {{"x", x}, {"y", y}, {"z", z}}};
}

BuiltAlgebra build_graded_algebra() {
  const OperatorSet gens = build_operators();
  AlgebraSpan g = lie_closure(gens);
  LieAlgebra algebra = semidirect_sum(g, gens.space);
  Grading grading = fine_grading_from_basis(algebra);
  return BuiltAlgebra{std::move(g), std::move(algebra), std::move(grading)};
}

namespace {

AlgebraSpan single(const std::string& word, const LinearMap& map) {
  return AlgebraSpan::from_monomials(map.space(), {Monomial{word, map}});
}

} // namespace

DemoReport run_full_report() {
  DemoReport report;
  const OperatorSet gens = build_operators();
  const LinearMap& x = gens.map_of("x");
  const LinearMap& y = gens.map_of("y");
  const LinearMap& z = gens.map_of("z");

  const AlgebraSpan assoc = associative_closure(gens);
  report.dim_A = assoc.dim();

  const BuiltAlgebra built = build_graded_algebra();
  report.dim_g = built.lie_span.dim();
  report.dim_L = built.algebra.dim();

  auto add_check = [&report](std::string name, bool holds) {
    report.relation_checks.push_back(ClaimCheck{std::move(name), holds});
  };

  const RelationReport words = check_relations(
      gens, {RelationClaim{{"y", "x"}, {}}, RelationClaim{{"x", "x"}, {}},
             RelationClaim{{"y", "y"}, {}}, RelationClaim{{"z", "z"}, {}},
             RelationClaim{{"x", "y", "z"}, {"x", "z", "y"}},
             RelationClaim{{"x", "z", "y"}, {"z", "x", "y"}}});
  for (const RelationCheck& c : words.checks) add_check(c.description, c.holds);

  auto sandwich_zero = [&](const AlgebraSpan& s) {
    const AlgebraSpan inner =
        span_from_flattened(gens.space, span_product(assoc, s));
    return span_product(s, inner).is_zero();
  };
  add_check("xAx = 0", sandwich_zero(single("x", x)));
  add_check("yAy = 0", sandwich_zero(single("y", y)));
  add_check("zAz = 0", sandwich_zero(single("z", z)));
  {
    AlgebraSpan acc = assoc;
    for (int step = 0; step < 2; ++step) {
      acc = span_from_flattened(gens.space, span_product(assoc, acc));
    }
    add_check("A^4 = 0", span_product(assoc, acc).is_zero());
  }

  const LinearMap yzx = evaluate_word(gens, {"y", "z", "x"});
  add_check("[[x,y],z] = 0", commutator(commutator(x, y), z).is_zero());
  add_check("[[y,z],x] = yzx", commutator(commutator(y, z), x) == yzx);
  add_check("[[z,x],y] = -yzx", commutator(commutator(z, x), y) == Rational(-1) * yzx);

  const AxiomReport axioms = check_axioms(built.algebra);
  report.jacobi_pass = axioms.pass;

  const LieAlgebra g_algebra = from_operators(built.lie_span);
  const LowerCentralSeries g_series = lower_central_series(g_algebra);
  report.g_nilpotent = g_series.nilpotent;
  report.g_class = g_series.nilpotency_class;
  const LowerCentralSeries l_series = lower_central_series(built.algebra);
  report.l_nilpotent = l_series.nilpotent;
  report.l_class = l_series.nilpotency_class;

  const GradingReport grading_report = verify_grading(built.grading);
  report.grading_valid = grading_report.valid;
  report.grading_components = static_cast<int>(built.grading.components.size());
  report.relation_count = grading_report.relation_count;

  // Nested evaluations inside L.
  const int n = built.algebra.dim();
  auto unit = [&](const std::string& name) {
    Row r(static_cast<std::size_t>(n), Rational(0));
    r[built.algebra.index_of(name)] = 1;
    return r;
  };
  const Row first = built.algebra.bracket(
      unit("y"), built.algebra.bracket(unit("z"), built.algebra.bracket(unit("x"), unit("a"))));
  const Row second = built.algebra.bracket(
      unit("x"), built.algebra.bracket(unit("y"), built.algebra.bracket(unit("z"), unit("a"))));
  report.bracket_evaluations.emplace_back(
      "[y,[z,[x,a]]]", format_in_basis(first, built.algebra.basis_names()));
  report.bracket_evaluations.emplace_back(
      "[x,[y,[z,a]]]", format_in_basis(second, built.algebra.basis_names()));
  report.evaluations_hold = first == unit("d1") && second == unit("d2");
  report.d1_d2_distinct =
      std::find(built.grading.labels.begin(), built.grading.labels.end(), "d1") !=
          built.grading.labels.end() &&
      std::find(built.grading.labels.begin(), built.grading.labels.end(), "d2") !=
          built.grading.labels.end();

  const RelationSet relations = relation_set(built.grading);
  report.decision = decide(relations);
  report.verdict_expected = false;
  if (report.decision.verdict == Verdict::NotEmbeddable && report.decision.certificate) {
    const CollisionCertificate& cert = *report.decision.certificate;
    report.verdict_expected =
        relations.labels.at(cert.label_a) == "d1" && relations.labels.at(cert.label_b) == "d2";
    report.certificate_text =
        render_certificate(cert, relations, CertificateStyle::Text);
    report.certificate_brackets =
        render_certificate(cert, relations, CertificateStyle::Bracket);
  }

  report.all_pass = report.dim_A == 10 && report.dim_g == 7 && report.dim_L == 16 &&
                    report.jacobi_pass && report.g_nilpotent && report.l_nilpotent &&
                    report.grading_valid && report.evaluations_hold &&
                    report.d1_d2_distinct && report.verdict_expected;
  for (const ClaimCheck& c : report.relation_checks) {
    report.all_pass = report.all_pass && c.holds;
  }
  return report;
}

namespace {

std::string format_text(const DemoReport& r) {
  std::ostringstream out;
  auto line = [&out](bool ok, const std::string& text) {
    out << "  [" << (ok ? "ok" : "FAIL") << "] " << text << "\n";
  };
  out << "graded nilpotent Lie algebra report\n";
  line(r.dim_A == 10, "dim A = " + std::to_string(r.dim_A) + " (expected 10)");
  line(r.dim_g == 7, "dim g = " + std::to_string(r.dim_g) + " (expected 7)");
  line(r.dim_L == 16, "dim L = " + std::to_string(r.dim_L) + " (expected 16)");
  for (const ClaimCheck& c : r.relation_checks) line(c.holds, c.name);
  line(r.jacobi_pass, "Jacobi identity holds on all basis triples of L");
  line(r.g_nilpotent, "g is nilpotent (class " + std::to_string(r.g_class) + ")");
  line(r.l_nilpotent, "L is nilpotent (class " + std::to_string(r.l_class) + ")");
  line(r.grading_valid, "fine basis grading of L is a valid Lie grading (" +
                            std::to_string(r.grading_components) + " components, " +
                            std::to_string(r.relation_count) + " relations)");
  for (const auto& [expr, value] : r.bracket_evaluations) {
    out << "  " << expr << " = " << value << "\n";
  }
  line(r.evaluations_hold, "nested bracket evaluations give d1 and d2");
  line(r.d1_d2_distinct, "d1 and d2 lie in different components");
  line(r.verdict_expected, "label set admits no compatible abelian semigroup: "
                           "NOT_EMBEDDABLE (d1, d2)");
  if (!r.certificate_text.empty()) {
    out << "  certificate: " << r.certificate_text << "\n";
    std::istringstream brackets(r.certificate_brackets);
    std::string bracket_line;
    while (std::getline(brackets, bracket_line)) {
      out << "    " << bracket_line << "\n";
    }
  }
  out << (r.all_pass ? "all claims pass\n" : "SOME CLAIMS FAILED\n");
  if (r.verdict_expected) out << "NOT EMBEDDABLE: d1 = d2\n";
  return out.str();
}

std::string format_json(const DemoReport& r) {
  Json j;
  j["dim_A"] = r.dim_A;
  j["dim_g"] = r.dim_g;
  j["dim_L"] = r.dim_L;
  Json checks = Json::object();
  for (const ClaimCheck& c : r.relation_checks) checks[c.name] = c.holds;
  j["relation_checks"] = checks;
  j["jacobi_pass"] = r.jacobi_pass;
  j["g_nilpotent"] = r.g_nilpotent;
  j["g_class"] = r.g_class;
  j["L_nilpotent"] = r.l_nilpotent;
  j["L_class"] = r.l_class;
  j["grading_valid"] = r.grading_valid;
  j["grading_components"] = r.grading_components;
  j["relation_count"] = r.relation_count;
  Json evals = Json::object();
  for (const auto& [expr, value] : r.bracket_evaluations) evals[expr] = value;
  j["bracket_evaluations"] = evals;
  j["d1_d2_distinct_components"] = r.d1_d2_distinct;
  Json decision;
  decision["verdict"] =
      r.decision.verdict == Verdict::NotEmbeddable ? "NOT_EMBEDDABLE" : "EMBEDDABLE";
  if (r.decision.certificate) {
    decision["colliding_labels"] = Json::array();
    decision["colliding_labels"].push_back("d1");
    decision["colliding_labels"].push_back("d2");
    decision["certificate"] = r.certificate_text;
  }
  j["decision"] = decision;
  j["all_pass"] = r.all_pass;
  return j.dump(2) + "\n";
}

} // namespace

std::string format_report(const DemoReport& report, ReportFormat format) {
  return format == ReportFormat::Text ? format_text(report) : format_json(report);
}

} // namespace liegrad::demo
