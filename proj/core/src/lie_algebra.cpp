#include <liegrad/lie_algebra.hpp>

#include <algorithm>
#include <utility>

namespace liegrad {

namespace {

Row zero_row(int n) { return Row(static_cast<std::size_t>(n), Rational(0)); }

bool row_is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

} // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names,
                       std::map<std::pair<int, int>, Row> brackets)
    : space_(make_space(std::move(basis_names))) {
  const int n = space_->dim();
  for (auto& [key, value] : brackets) {
    const auto [i, j] = key;
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw InputError("bracket table index out of range");
    }
    if (i >= j) throw InputError("bracket table keys must satisfy i < j");
    if (static_cast<int>(value.size()) != n) {
      throw InputError("bracket table value has wrong dimension");
    }
    if (!row_is_zero(value)) table_.emplace(key, std::move(value));
  }
}

Row LieAlgebra::bracket_basis(int i, int j) const {
  const int n = dim();
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw InputError("basis index out of range");
  }
  if (i == j) return zero_row(n);
  const bool flip = i > j;
  const auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == table_.end()) return zero_row(n);
  Row out = it->second;
  if (flip) {
    for (auto& x : out) x = -x;
  }
  return out;
}

Row LieAlgebra::bracket(const Row& u, const Row& v) const {
  const int n = dim();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n) {
    throw InputError("bracket operands have wrong dimension");
  }
  Row out = zero_row(n);
  for (const auto& [key, value] : table_) {
    const auto [i, j] = key;
    const Rational coeff = u[i] * v[j] - u[j] * v[i];
    if (coeff == 0) continue;
    for (int t = 0; t < n; ++t) out[t] += coeff * value[t];
  }
  return out;
}

LieAlgebra from_operators(const AlgebraSpan& span) {
  const std::size_t k = span.monomials.size();
  if (k == 0) throw InputError("cannot build a Lie algebra from an empty span");
  std::vector<Row> flats;
  flats.reserve(k);
  std::vector<std::string> names;
  names.reserve(k);
  for (const Monomial& m : span.monomials) {
    flats.push_back(m.map.flatten());
    names.push_back(m.word);
  }
  std::map<std::pair<int, int>, Row> table;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const LinearMap c = commutator(span.monomials[i].map, span.monomials[j].map);
      const auto coords = express(flats, c.flatten());
      if (!coords) {
        throw InputError("span is not closed under the commutator: [" +
                         span.monomials[i].word + "," + span.monomials[j].word +
                         "] lies outside the span");
      }
      table.emplace(std::make_pair(static_cast<int>(i), static_cast<int>(j)), *coords);
    }
  }
  return LieAlgebra(std::move(names), std::move(table));
}

LieAlgebra semidirect_sum(const AlgebraSpan& g, const SpacePtr& v_space) {
  if (!same_space(g.space, v_space)) {
    throw InputError("semidirect sum: the operators must act on the given space");
  }
  const int k = static_cast<int>(g.monomials.size());
  const int n = v_space->dim();
  const int total = k + n;

  std::vector<std::string> names;
  names.reserve(total);
  std::vector<Row> flats;
  flats.reserve(k);
  for (const Monomial& m : g.monomials) {
    names.push_back(m.word);
    flats.push_back(m.map.flatten());
  }
  for (const std::string& name : v_space->names()) names.push_back(name);

  std::map<std::pair<int, int>, Row> table;
  // g-g block: commutators in the monomial basis.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const LinearMap c = commutator(g.monomials[i].map, g.monomials[j].map);
      const auto coords = express(flats, c.flatten());
      if (!coords) {
        throw InputError("semidirect sum: operator span is not closed under the commutator");
      }
      Row value = zero_row(total);
      std::copy(coords->begin(), coords->end(), value.begin());
      table.emplace(std::make_pair(i, j), std::move(value));
    }
  }
  // Module action: [f, v] = f(v); V is an abelian ideal, so [v, w] = 0.
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec image = g.monomials[i].map.apply(Vec::unit(v_space, j));
      Row value = zero_row(total);
      std::copy(image.coords().begin(), image.coords().end(), value.begin() + k);
      table.emplace(std::make_pair(i, k + j), std::move(value));
    }
  }
  return LieAlgebra(std::move(names), std::move(table));
}

AxiomReport check_axioms(const LieAlgebra& algebra) {
  AxiomReport report;
  const int n = algebra.dim();
  for (int i = 0; i < n; ++i) {
    Row self = algebra.bracket_basis(i, i);
    if (!row_is_zero(self)) {
      report.violations.push_back(AxiomViolation{i, i, -1, std::move(self)});
    }
  }
  std::vector<Row> units(n, zero_row(n));
  for (int i = 0; i < n; ++i) units[i][i] = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // [[i,j],k] + [[j,k],i] + [[k,i],j]
        Row jacobiator = algebra.bracket(algebra.bracket_basis(i, j), units[k]);
        const Row second = algebra.bracket(algebra.bracket_basis(j, k), units[i]);
        const Row third = algebra.bracket(algebra.bracket_basis(k, i), units[j]);
        for (int t = 0; t < n; ++t) jacobiator[t] += second[t] + third[t];
        if (!row_is_zero(jacobiator)) {
          report.violations.push_back(AxiomViolation{i, j, k, std::move(jacobiator)});
        }
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

LowerCentralSeries lower_central_series(const LieAlgebra& algebra) {
  const int n = algebra.dim();
  LowerCentralSeries result;
  result.terms.push_back(Subspace::full(n));
  while (true) {
    const Subspace& current = result.terms.back();
    if (current.is_zero()) break;
    std::vector<Row> rows;
    for (int i = 0; i < n; ++i) {
      Row e_i = zero_row(n);
      e_i[i] = 1;
      for (const Row& r : current.basis()) rows.push_back(algebra.bracket(e_i, r));
    }
    Subspace next = Subspace::from_rows(n, std::move(rows));
    if (next.dim() == current.dim()) {
      result.terms.push_back(std::move(next)); // stabilized without reaching zero
      break;
    }
    result.terms.push_back(std::move(next));
  }
  result.nilpotent = result.terms.back().is_zero();
  result.nilpotency_class =
      result.nilpotent ? static_cast<int>(result.terms.size()) - 1 : 0;
  return result;
}

} // namespace liegrad
