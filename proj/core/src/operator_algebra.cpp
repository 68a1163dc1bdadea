#include <liegrad/operator_algebra.hpp>

#include <algorithm>
#include <set>

namespace liegrad {

const LinearMap& OperatorSet::map_of(const std::string& name) const {
  for (const auto& [n, m] : ops) {
    if (n == name) return m;
  }
  throw InputError("unknown generator '" + name + "'");
}

bool OperatorSet::has(const std::string& name) const {
  return std::any_of(ops.begin(), ops.end(),
                     [&](const auto& p) { return p.first == name; });
}

void validate(const OperatorSet& gens) {
  if (!gens.space) throw InputError("operator set requires a space");
  if (gens.ops.empty()) throw InputError("operator set must be nonempty");
  std::set<std::string> seen;
  for (const auto& [name, map] : gens.ops) {
    if (name.empty()) throw InputError("generator names must be non-empty");
    if (!seen.insert(name).second) {
      throw InputError("duplicate generator name '" + name + "'");
    }
    if (!same_space(map.space(), gens.space)) {
      throw InputError("generator '" + name + "' acts on a different space");
    }
  }
}

AlgebraSpan AlgebraSpan::from_monomials(SpacePtr space, std::vector<Monomial> monomials) {
  std::vector<Row> rows;
  rows.reserve(monomials.size());
  for (const Monomial& m : monomials) {
    if (!same_space(m.map.space(), space)) {
      throw InputError("monomial map acts on a different space");
    }
    rows.push_back(m.map.flatten());
  }
  const int flat_dim = space->dim() * space->dim();
  return AlgebraSpan{std::move(space), std::move(monomials),
                     Subspace::from_rows(flat_dim, std::move(rows))};
}

std::vector<std::string> AlgebraSpan::words() const {
  std::vector<std::string> out;
  out.reserve(monomials.size());
  for (const Monomial& m : monomials) out.push_back(m.word);
  return out;
}

namespace {

// Shared incremental span builder: keeps a monomial exactly when its map
// enlarges the current span.
struct SpanBuilder {
  int flat_dim;
  std::vector<Monomial> kept;
  std::vector<Row> rows;
  Subspace span;

  explicit SpanBuilder(int flat_dim_)
      : flat_dim(flat_dim_), span(Subspace::zero_subspace(flat_dim_)) {}

  bool try_add(std::string word, const LinearMap& map) {
    Row flat = map.flatten();
    if (span.contains(flat)) return false;
    kept.push_back(Monomial{std::move(word), map});
    rows.push_back(std::move(flat));
    span = Subspace::from_rows(flat_dim, rows);
    return true;
  }
};

} // namespace

AlgebraSpan associative_closure(const OperatorSet& gens) {
  validate(gens);
  const int n = gens.space->dim();
  SpanBuilder builder(n * n);
  for (const auto& [name, map] : gens.ops) builder.try_add(name, map);
  // FIFO worklist over kept monomials; every word of length k+1 is some
  // kept word of length k extended by a generator on the right.
  for (std::size_t head = 0; head < builder.kept.size(); ++head) {
    const Monomial m = builder.kept[head]; // copy: kept grows below
    for (const auto& [gname, gmap] : gens.ops) {
      builder.try_add(m.word + gname, compose(m.map, gmap));
    }
  }
  return AlgebraSpan{gens.space, std::move(builder.kept), std::move(builder.span)};
}

AlgebraSpan lie_closure(const OperatorSet& gens) {
  validate(gens);
  const int n = gens.space->dim();
  SpanBuilder builder(n * n);
  std::vector<int> seed_index; // generator input index per kept monomial, -1 if composite
  for (std::size_t gi = 0; gi < gens.ops.size(); ++gi) {
    if (builder.try_add(gens.ops[gi].first, gens.ops[gi].second)) {
      seed_index.push_back(static_cast<int>(gi));
    }
  }
  std::size_t layer_begin = 0;
  std::size_t layer_end = builder.kept.size();
  while (layer_begin < layer_end) {
    for (std::size_t gi = 0; gi < gens.ops.size(); ++gi) {
      const auto& [gname, gmap] = gens.ops[gi];
      for (std::size_t k = layer_begin; k < layer_end; ++k) {
        // Generator pairs only in increasing orientation: the reversed
        // bracket is the negative and spans nothing new.
        if (k < seed_index.size() && seed_index[k] >= static_cast<int>(gi)) continue;
        const Monomial m = builder.kept[k];
        builder.try_add("[" + m.word + "," + gname + "]", commutator(m.map, gmap));
      }
    }
    layer_begin = layer_end;
    layer_end = builder.kept.size();
  }
  return AlgebraSpan{gens.space, std::move(builder.kept), std::move(builder.span)};
}

Subspace span_product(const AlgebraSpan& a, const AlgebraSpan& b) {
  if (!same_space(a.space, b.space)) throw InputError("span product: space mismatch");
  std::vector<Row> rows;
  rows.reserve(a.monomials.size() * b.monomials.size());
  for (const Monomial& f : a.monomials) {
    for (const Monomial& g : b.monomials) {
      rows.push_back(compose(f.map, g.map).flatten());
    }
  }
  const int n = a.space->dim();
  return Subspace::from_rows(n * n, std::move(rows));
}

AlgebraSpan span_from_flattened(SpacePtr space, const Subspace& flats) {
  const int n = space->dim();
  if (flats.ambient_dim() != n * n) {
    throw InputError("flattened subspace has the wrong ambient dimension");
  }
  std::vector<Monomial> monomials;
  int counter = 0;
  for (const Row& r : flats.basis()) {
    std::vector<Row> cols;
    cols.reserve(n);
    for (int j = 0; j < n; ++j) {
      cols.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(j) * n,
                        r.begin() + static_cast<std::ptrdiff_t>(j + 1) * n);
    }
    monomials.push_back(
        Monomial{"e" + std::to_string(counter++), LinearMap(space, std::move(cols))});
  }
  return AlgebraSpan::from_monomials(std::move(space), std::move(monomials));
}

LinearMap evaluate_word(const OperatorSet& gens, const std::vector<std::string>& word) {
  LinearMap acc = LinearMap::identity(gens.space);
  for (const std::string& letter : word) acc = compose(acc, gens.map_of(letter));
  return acc;
}

namespace {

std::string join_word(const std::vector<std::string>& word) {
  std::string out;
  for (const auto& w : word) out += w;
  return out.empty() ? "1" : out;
}

} // namespace

RelationReport check_relations(const OperatorSet& gens,
                               const std::vector<RelationClaim>& claims) {
  validate(gens);
  RelationReport report;
  for (const RelationClaim& claim : claims) {
    const LinearMap lhs = evaluate_word(gens, claim.lhs);
    bool holds;
    std::string description;
    if (claim.rhs.empty()) {
      holds = lhs.is_zero();
      description = join_word(claim.lhs) + " = 0";
    } else {
      holds = lhs == evaluate_word(gens, claim.rhs);
      description = join_word(claim.lhs) + " = " + join_word(claim.rhs);
    }
    report.checks.push_back(RelationCheck{std::move(description), holds});
    report.all_hold = report.all_hold && holds;
  }
  return report;
}

} // namespace liegrad
