#pragma once

#include <liegrad/grading.hpp>
#include <liegrad/relations.hpp>

#include <filesystem>
#include <optional>
#include <string>

// JSON file formats. Rationals are strings ("1", "-3/2") so files carry
// no binary float ambiguity. Serializers emit deterministic field order,
// so output is byte-stable for fixed inputs.
//
// Algebra file, structure-constant form:
//   { "basis": ["x", "y", "z"],
//     "brackets": { "0,1": [["z", "1"]] } }       // keys "i,j" with i < j
//
// Algebra file, operator form:
//   { "space": ["a", "b1", ...],
//     "operators": { "x": [["a", "b1", "1"], ...] },   // from, to, coeff
//     "construction": "lie-closure-semidirect" }
// The construction field asks for L = g ⊕ V with g the Lie closure of
// the operators; without it the file only names operators (enough for
// the closure command).
//
// Grading file: { "fine": true }
//   or { "labels": { "x": [["1", "0", ...], ...] } }   // rows per label
//
// Relations file: { "labels": [...], "triples": [["x", "a", "b1"], ...] }

namespace liegrad {

struct AlgebraFile {
  std::optional<LieAlgebra> algebra;    // structure-constant form
  std::optional<OperatorSet> operators; // operator form
  std::string construction;             // "" or "lie-closure-semidirect"
};

AlgebraFile parse_algebra_file(const std::string& json_text);
AlgebraFile load_algebra_file(const std::filesystem::path& path);

/// The Lie algebra an algebra file denotes: structure-constant files as
/// written; operator files through their construction recipe.
LieAlgebra realize_algebra(const AlgebraFile& file);

std::string serialize_lie_algebra(const LieAlgebra& algebra);
std::string serialize_operator_set(const OperatorSet& gens, const std::string& construction = "");

Grading parse_grading_file(const std::string& json_text, const LieAlgebra& algebra);
Grading load_grading_file(const std::filesystem::path& path, const LieAlgebra& algebra);
std::string serialize_grading(const Grading& grading);

RelationSet parse_relations_file(const std::string& json_text);
RelationSet load_relations_file(const std::filesystem::path& path);
std::string serialize_relations(const RelationSet& set);

std::string read_text_file(const std::filesystem::path& path); // ParseError if unreadable
void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace liegrad
