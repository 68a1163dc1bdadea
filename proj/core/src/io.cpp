#include <liegrad/io.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace liegrad {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& expect(const Json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(context) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* context) {
  if (!j.is_array()) throw ParseError(std::string(context) + ": expected an array");
  std::vector<std::string> out;
  for (const Json& item : j) {
    if (!item.is_string()) {
      throw ParseError(std::string(context) + ": expected strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rational rational_field(const Json& j, const char* context) {
  if (!j.is_string()) {
    throw ParseError(std::string(context) + ": rationals must be strings like \"-3/2\"");
  }
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    throw ParseError(std::string(context) + ": " + e.what());
  }
}

LieAlgebra parse_structure_constants(const Json& j) {
  const std::vector<std::string> basis = string_list(expect(j, "basis", "algebra file"),
                                                     "algebra file basis");
  BasedSpace space(basis); // validates names
  const int n = space.dim();
  std::map<std::pair<int, int>, Row> table;
  if (j.contains("brackets")) {
    const Json& brackets = j.at("brackets");
    if (!brackets.is_object()) throw ParseError("algebra file: brackets must be an object");
    for (const auto& [key, value] : brackets.items()) {
      int i = -1, jj = -1;
      char comma = 0;
      std::istringstream stream(key);
      if (!(stream >> i >> comma >> jj) || comma != ',' || !stream.eof()) {
        throw ParseError("algebra file: bracket key '" + key + "' is not \"i,j\"");
      }
      if (i < 0 || jj < 0 || i >= n || jj >= n || i >= jj) {
        throw ParseError("algebra file: bracket key '" + key + "' must satisfy i < j");
      }
      if (!value.is_array()) {
        throw ParseError("algebra file: bracket values must be arrays of [name, coeff]");
      }
      Row row(static_cast<std::size_t>(n), Rational(0));
      for (const Json& term : value) {
        if (!term.is_array() || term.size() != 2 || !term.at(0).is_string()) {
          throw ParseError("algebra file: bracket terms must be [name, coeff]");
        }
        row[space.index_of(term.at(0).get<std::string>())] +=
            rational_field(term.at(1), "algebra file bracket");
      }
      table.emplace(std::make_pair(i, jj), std::move(row));
    }
  }
  return LieAlgebra(basis, std::move(table));
}

OperatorSet parse_operator_form(const Json& j) {
  SpacePtr space = make_space(
      string_list(expect(j, "space", "algebra file"), "algebra file space"));
  const Json& operators = expect(j, "operators", "algebra file");
  if (!operators.is_object()) {
    throw ParseError("algebra file: operators must be an object");
  }
  OperatorSet gens{space, {}};
  for (const auto& [name, entries] : operators.items()) {
    if (!entries.is_array()) {
      throw ParseError("algebra file: operator '" + name + "' must be an array");
    }
    std::vector<std::tuple<std::string, std::string, Rational>> action;
    for (const Json& entry : entries) {
      if (!entry.is_array() || entry.size() != 3 || !entry.at(0).is_string() ||
          !entry.at(1).is_string()) {
        throw ParseError("algebra file: operator entries must be [from, to, coeff]");
      }
      action.emplace_back(entry.at(0).get<std::string>(), entry.at(1).get<std::string>(),
                          rational_field(entry.at(2), "algebra file operator"));
    }
    try {
      gens.ops.emplace_back(name, LinearMap::from_action(space, action));
    } catch (const InputError& e) {
      throw ParseError("algebra file: operator '" + name + "': " + e.what());
    }
  }
  try {
    validate(gens);
  } catch (const InputError& e) {
    throw ParseError(std::string("algebra file: ") + e.what());
  }
  return gens;
}

} // namespace

AlgebraFile parse_algebra_file(const std::string& json_text) {
  const Json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError("algebra file: expected a JSON object");
  AlgebraFile file;
  if (j.contains("basis")) {
    try {
      file.algebra = parse_structure_constants(j);
    } catch (const InputError& e) {
      throw ParseError(std::string("algebra file: ") + e.what());
    }
    return file;
  }
  if (j.contains("space")) {
    file.operators = parse_operator_form(j);
    if (j.contains("construction")) {
      const Json& c = j.at("construction");
      if (!c.is_string()) throw ParseError("algebra file: construction must be a string");
      file.construction = c.get<std::string>();
      if (file.construction != "lie-closure-semidirect") {
        throw ParseError("algebra file: unknown construction '" + file.construction + "'");
      }
    }
    return file;
  }
  throw ParseError("algebra file: expected either \"basis\" or \"space\"");
}

AlgebraFile load_algebra_file(const std::filesystem::path& path) {
  return parse_algebra_file(read_text_file(path));
}

LieAlgebra realize_algebra(const AlgebraFile& file) {
  if (file.algebra) return *file.algebra;
  if (!file.operators) throw InputError("algebra file carries no algebra");
  if (file.construction != "lie-closure-semidirect") {
    throw InputError(
        "operator-form algebra needs construction \"lie-closure-semidirect\"");
  }
  return semidirect_sum(lie_closure(*file.operators), file.operators->space);
}

std::string serialize_lie_algebra(const LieAlgebra& algebra) {
  Json j;
  j["basis"] = algebra.basis_names();
  Json brackets = Json::object();
  for (const auto& [key, row] : algebra.table()) {
    Json terms = Json::array();
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (row[t] == 0) continue;
      terms.push_back(Json::array({algebra.basis_names()[t], format_rational(row[t])}));
    }
    brackets[std::to_string(key.first) + "," + std::to_string(key.second)] = terms;
  }
  j["brackets"] = brackets;
  return j.dump(2) + "\n";
}

std::string serialize_operator_set(const OperatorSet& gens, const std::string& construction) {
  Json j;
  j["space"] = gens.space->names();
  Json operators = Json::object();
  for (const auto& [name, map] : gens.ops) {
    Json entries = Json::array();
    for (int col = 0; col < map.dim(); ++col) {
      const Vec image = map.column(col);
      for (int row = 0; row < map.dim(); ++row) {
        if (image[row] == 0) continue;
        entries.push_back(Json::array({gens.space->name(col), gens.space->name(row),
                                       format_rational(image[row])}));
      }
    }
    operators[name] = entries;
  }
  j["operators"] = operators;
  if (!construction.empty()) j["construction"] = construction;
  return j.dump(2) + "\n";
}

Grading parse_grading_file(const std::string& json_text, const LieAlgebra& algebra) {
  const Json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError("grading file: expected a JSON object");
  if (j.contains("fine")) {
    if (!j.at("fine").is_boolean() || !j.at("fine").get<bool>()) {
      throw ParseError("grading file: \"fine\" must be true when present");
    }
    return fine_grading_from_basis(algebra);
  }
  const Json& labels = expect(j, "labels", "grading file");
  if (!labels.is_object()) throw ParseError("grading file: labels must be an object");
  Grading grading{algebra, {}, {}};
  const int n = algebra.dim();
  for (const auto& [label, rows_json] : labels.items()) {
    if (!rows_json.is_array()) {
      throw ParseError("grading file: label '" + label + "' must map to an array of rows");
    }
    std::vector<Row> rows;
    for (const Json& row_json : rows_json) {
      if (!row_json.is_array() || static_cast<int>(row_json.size()) != n) {
        throw ParseError("grading file: component rows must have length " +
                         std::to_string(n));
      }
      Row row;
      row.reserve(static_cast<std::size_t>(n));
      for (const Json& coeff : row_json) {
        row.push_back(rational_field(coeff, "grading file component"));
      }
      rows.push_back(std::move(row));
    }
    grading.labels.push_back(label);
    grading.components.push_back(Subspace::from_rows(n, std::move(rows)));
  }
  return grading;
}

Grading load_grading_file(const std::filesystem::path& path, const LieAlgebra& algebra) {
  return parse_grading_file(read_text_file(path), algebra);
}

std::string serialize_grading(const Grading& grading) {
  Json j;
  Json labels = Json::object();
  for (std::size_t i = 0; i < grading.labels.size(); ++i) {
    Json rows = Json::array();
    for (const Row& row : grading.components[i].basis()) {
      Json row_json = Json::array();
      for (const Rational& c : row) row_json.push_back(format_rational(c));
      rows.push_back(row_json);
    }
    labels[grading.labels[i]] = rows;
  }
  j["labels"] = labels;
  return j.dump(2) + "\n";
}

RelationSet parse_relations_file(const std::string& json_text) {
  const Json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError("relations file: expected a JSON object");
  RelationSet set;
  set.labels = string_list(expect(j, "labels", "relations file"), "relations file labels");
  const Json& triples = expect(j, "triples", "relations file");
  if (!triples.is_array()) throw ParseError("relations file: triples must be an array");
  for (const Json& triple : triples) {
    if (!triple.is_array() || triple.size() != 3) {
      throw ParseError("relations file: triples must be [g, g', g''] label arrays");
    }
    std::array<std::string, 3> names;
    for (int t = 0; t < 3; ++t) {
      if (!triple.at(t).is_string()) {
        throw ParseError("relations file: triple entries must be label strings");
      }
      names[t] = triple.at(t).get<std::string>();
    }
    try {
      set.triples.push_back(RelationTriple{set.index_of(names[0]), set.index_of(names[1]),
                                           set.index_of(names[2])});
    } catch (const InputError& e) {
      throw ParseError(std::string("relations file: ") + e.what());
    }
  }
  try {
    validate(set);
  } catch (const InputError& e) {
    throw ParseError(std::string("relations file: ") + e.what());
  }
  return set;
}

RelationSet load_relations_file(const std::filesystem::path& path) {
  return parse_relations_file(read_text_file(path));
}

std::string serialize_relations(const RelationSet& set) {
  Json j;
  j["labels"] = set.labels;
  Json triples = Json::array();
  for (const RelationTriple& t : set.triples) {
    triples.push_back(Json::array(
        {set.labels.at(t.g), set.labels.at(t.gp), set.labels.at(t.gpp)}));
  }
  j["triples"] = triples;
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << content;
}

} // namespace liegrad
