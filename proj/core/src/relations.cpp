#include <liegrad/relations.hpp>

#include <liegrad/errors.hpp>

#include <algorithm>
#include <set>

namespace liegrad {

int RelationSet::index_of(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InputError("unknown label '" + label + "'");
  return static_cast<int>(it - labels.begin());
}

void validate(const RelationSet& set) {
  std::set<std::string> seen;
  for (const std::string& label : set.labels) {
    if (label.empty()) throw InputError("labels must be non-empty");
    if (!seen.insert(label).second) {
      throw InputError("duplicate label '" + label + "'");
    }
  }
  const int n = static_cast<int>(set.labels.size());
  std::set<std::pair<int, int>> pairs;
  for (const RelationTriple& t : set.triples) {
    for (int idx : {t.g, t.gp, t.gpp}) {
      if (idx < 0 || idx >= n) throw InputError("relation triple index out of range");
    }
    const auto key = std::minmax(t.g, t.gp);
    if (!pairs.insert(key).second) {
      throw InputError("the unordered pair {" + set.labels[key.first] + "," +
                       set.labels[key.second] + "} appears in more than one relation");
    }
  }
}

RelationSet make_relation_set(std::vector<std::string> labels,
                              const std::vector<std::array<std::string, 3>>& named_triples) {
  RelationSet set;
  set.labels = std::move(labels);
  for (const auto& t : named_triples) {
    set.triples.push_back(RelationTriple{set.index_of(t[0]), set.index_of(t[1]),
                                         set.index_of(t[2])});
  }
  validate(set);
  return set;
}

std::string format_triple(const RelationSet& set, const RelationTriple& triple) {
  return "(" + set.labels.at(triple.g) + "," + set.labels.at(triple.gp) + "," +
         set.labels.at(triple.gpp) + ")";
}

} // namespace liegrad
