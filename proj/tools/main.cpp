// liegrad: exact tools for Lie gradings and their semigroup labelings.
//
// Exit codes:
//   0  success (valid grading / embeddable / all demo claims pass)
//   1  negative verdict (not embeddable / a demo claim failed)
//   2  malformed input or usage error
//   3  invalid grading
//   4  configured resource cap exceeded

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <liegrad/demo.hpp>
#include <liegrad/io.hpp>
#include <liegrad/semigroup.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using liegrad::CertificateStyle;
using liegrad::Decision;
using liegrad::DeciderLimits;
using liegrad::RelationSet;
using liegrad::Verdict;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInvalidGrading = 3;
constexpr int kExitResource = 4;

int run_paper_demo(const std::string& format) {
  const liegrad::demo::DemoReport report = liegrad::demo::run_full_report();
  const auto fmt = format == "json" ? liegrad::demo::ReportFormat::Json
                                    : liegrad::demo::ReportFormat::Text;
  std::cout << liegrad::demo::format_report(report, fmt);
  return report.all_pass ? kExitOk : kExitNegative;
}

int run_verify_grading(const std::string& algebra_path, const std::string& grading_path) {
  const liegrad::LieAlgebra algebra =
      liegrad::realize_algebra(liegrad::load_algebra_file(algebra_path));
  const liegrad::Grading grading = liegrad::load_grading_file(grading_path, algebra);
  const liegrad::GradingReport report = liegrad::verify_grading(grading);
  if (report.valid) {
    std::cout << "grading: valid\n"
              << "components: " << grading.components.size()
              << ", relations: " << report.relation_count << "\n";
    return kExitOk;
  }
  std::cout << "grading: invalid\n";
  for (const liegrad::GradingViolation& v : report.violations) {
    std::cout << "  ";
    if (!v.label_a.empty() && !v.label_b.empty()) {
      std::cout << "(" << v.label_a << ", " << v.label_b << "): ";
    } else if (!v.label_a.empty()) {
      std::cout << v.label_a << ": ";
    }
    std::cout << v.reason << "\n";
  }
  return kExitInvalidGrading;
}

struct DecideOptions {
  std::vector<std::string> inputs;
  int max_degree = 6;
  bool certificate = false;
  bool oracle = false;
  std::string format = "text";
  DeciderLimits limits;
};

RelationSet decide_input(const DecideOptions& opt) {
  if (opt.inputs.size() == 1) {
    return liegrad::load_relations_file(opt.inputs[0]);
  }
  const liegrad::LieAlgebra algebra =
      liegrad::realize_algebra(liegrad::load_algebra_file(opt.inputs[0]));
  const liegrad::Grading grading = liegrad::load_grading_file(opt.inputs[1], algebra);
  const liegrad::GradingReport report = liegrad::verify_grading(grading);
  if (!report.valid) {
    throw liegrad::PreconditionError("the given grading is not a valid Lie grading");
  }
  return liegrad::relation_set(grading);
}

int run_decide(const DecideOptions& opt) {
  const RelationSet relations = decide_input(opt);
  const Decision decision = liegrad::decide(relations, opt.limits);
  const bool embeddable = decision.verdict == Verdict::Embeddable;

  std::optional<liegrad::OracleResult> oracle;
  if (opt.oracle) {
    oracle = liegrad::bfs_oracle(relations, opt.max_degree, opt.limits);
  }

  if (opt.format == "json") {
    Json j;
    j["labels"] = relations.labels.size();
    j["relations"] = relations.triples.size();
    j["verdict"] = embeddable ? "EMBEDDABLE" : "NOT_EMBEDDABLE";
    if (embeddable) {
      Json nf = Json::object();
      for (std::size_t g = 0; g < relations.labels.size(); ++g) {
        nf[relations.labels[g]] =
            format_exponent_vector(decision.normal_forms[g], relations.labels);
      }
      j["normal_forms"] = nf;
    } else {
      const liegrad::CollisionCertificate& cert = *decision.certificate;
      j["colliding_labels"] = Json::array({relations.labels.at(cert.label_a),
                                           relations.labels.at(cert.label_b)});
      if (opt.certificate) {
        j["certificate"] = render_certificate(cert, relations, CertificateStyle::Text);
        Json cited = Json::array();
        for (const liegrad::RelationTriple& t : cited_relations(cert, relations)) {
          cited.push_back(Json::array({relations.labels.at(t.g), relations.labels.at(t.gp),
                                       relations.labels.at(t.gpp)}));
        }
        j["cited_relations"] = cited;
      }
    }
    if (oracle) {
      Json o;
      o["max_degree"] = oracle->max_degree;
      o["collision"] = oracle->collision.has_value();
      o["agrees"] = oracle->collision.has_value() == !embeddable;
      j["oracle"] = o;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "labels: " << relations.labels.size()
              << ", relations: " << relations.triples.size() << "\n";
    std::cout << "verdict: " << (embeddable ? "EMBEDDABLE" : "NOT_EMBEDDABLE") << "\n";
    if (embeddable) {
      std::cout << "normal forms:\n";
      for (std::size_t g = 0; g < relations.labels.size(); ++g) {
        std::cout << "  " << relations.labels[g] << " = "
                  << format_exponent_vector(decision.normal_forms[g], relations.labels)
                  << "\n";
      }
    } else {
      const liegrad::CollisionCertificate& cert = *decision.certificate;
      std::cout << "colliding labels: " << relations.labels.at(cert.label_a) << ", "
                << relations.labels.at(cert.label_b) << "\n";
      if (opt.certificate) {
        std::cout << "certificate: "
                  << render_certificate(cert, relations, CertificateStyle::Text) << "\n";
        std::cout << "cited relations:";
        for (const liegrad::RelationTriple& t : cited_relations(cert, relations)) {
          std::cout << " " << format_triple(relations, t);
        }
        std::cout << "\n";
        try {
          const std::string brackets =
              render_certificate(cert, relations, CertificateStyle::Bracket);
          std::cout << brackets << "\n";
        } catch (const liegrad::CertificateError&) {
          // Bracket rendering needs a unimodal chain; skip quietly.
        }
      }
    }
    if (oracle) {
      std::cout << "oracle (degree <= " << oracle->max_degree << "): ";
      if (oracle->collision) {
        std::cout << "collision " << relations.labels.at(oracle->collision->label_a)
                  << " ~ " << relations.labels.at(oracle->collision->label_b);
      } else {
        std::cout << "no collision up to the bound (inconclusive)";
      }
      std::cout << "; "
                << (oracle->collision.has_value() == !embeddable ? "agrees with"
                                                                 : "DISAGREES with")
                << " the decision\n";
    }
  }
  return embeddable ? kExitOk : kExitNegative;
}

int run_closure(const std::string& operators_path, const std::string& kind) {
  const liegrad::AlgebraFile file = liegrad::load_algebra_file(operators_path);
  if (!file.operators) {
    throw liegrad::ParseError("closure needs an operator-form algebra file");
  }
  const liegrad::AlgebraSpan span = kind == "associative"
                                        ? liegrad::associative_closure(*file.operators)
                                        : liegrad::lie_closure(*file.operators);
  std::cout << "kind: " << kind << "\n"
            << "dimension: " << span.dim() << "\n"
            << "words:";
  for (const std::string& w : span.words()) std::cout << " " << w;
  std::cout << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tools for Lie gradings and abelian-semigroup labelings"};
  app.require_subcommand(1);

  std::string demo_format = "text";
  CLI::App* demo = app.add_subcommand(
      "paper-demo", "build the 16-dimensional counterexample construction and "
                    "check every claimed identity");
  demo->add_option("--format", demo_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string vg_algebra, vg_grading;
  CLI::App* verify = app.add_subcommand("verify-grading",
                                        "check that a decomposition is a Lie grading");
  verify->add_option("algebra", vg_algebra, "algebra file")->required();
  verify->add_option("grading", vg_grading, "grading file")->required();

  DecideOptions decide_opt;
  CLI::App* decide = app.add_subcommand(
      "decide", "decide abelian-semigroup embeddability of a relation set");
  decide->add_option("input", decide_opt.inputs,
                     "relations file, or an algebra file plus a grading file")
      ->expected(1, 2)
      ->required();
  decide->add_option("--max-degree", decide_opt.max_degree,
                     "degree bound for the enumeration oracle")
      ->check(CLI::Range(2, 1000));
  decide->add_flag("--certificate", decide_opt.certificate,
                   "print the collision certificate chain");
  decide->add_flag("--oracle", decide_opt.oracle,
                   "also run the enumeration oracle and report agreement");
  decide->add_option("--max-rules", decide_opt.limits.max_rules,
                     "completion rule cap");
  decide->add_option("--max-enumeration", decide_opt.limits.max_vectors,
                     "oracle enumeration cap");
  decide->add_option("--format", decide_opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string closure_path, closure_kind;
  CLI::App* closure = app.add_subcommand("closure",
                                         "span closure of an operator set");
  closure->add_option("operators", closure_path, "operator-form algebra file")->required();
  closure->add_option("--kind", closure_kind, "closure kind")
      ->check(CLI::IsMember({"associative", "lie"}))
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (demo->parsed()) return run_paper_demo(demo_format);
    if (verify->parsed()) return run_verify_grading(vg_algebra, vg_grading);
    if (decide->parsed()) return run_decide(decide_opt);
    if (closure->parsed()) return run_closure(closure_path, closure_kind);
  } catch (const liegrad::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const liegrad::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidGrading;
  } catch (const liegrad::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
