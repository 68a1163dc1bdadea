#include <liegrad/linalg.hpp>

#include <algorithm>
#include <tuple>
#include <utility>

namespace liegrad {

BasedSpace::BasedSpace(std::vector<std::string> basis_names)
    : names_(std::move(basis_names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InputError("basis names must be non-empty");
    auto [it, inserted] = index_.emplace(names_[i], static_cast<int>(i));
    (void)it;
    if (!inserted) throw InputError("duplicate basis name '" + names_[i] + "'");
  }
}

int BasedSpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown basis name '" + name + "'");
  return it->second;
}

SpacePtr make_space(std::vector<std::string> basis_names) {
  return std::make_shared<const BasedSpace>(std::move(basis_names));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (!same_space(a, b)) throw InputError("space mismatch");
}

Row zero_row(int n) { return Row(static_cast<std::size_t>(n), Rational(0)); }

bool row_is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

} // namespace

Vec::Vec(SpacePtr space, Row coords) : space_(std::move(space)), coords_(std::move(coords)) {
  if (!space_) throw InputError("vector requires a space");
  if (static_cast<int>(coords_.size()) != space_->dim()) {
    throw InputError("coordinate count does not match the space dimension");
  }
}

Vec Vec::zero(SpacePtr space) {
  int n = space->dim();
  return Vec(std::move(space), zero_row(n));
}

Vec Vec::unit(SpacePtr space, int index) {
  Row r = zero_row(space->dim());
  r.at(index) = 1;
  return Vec(std::move(space), std::move(r));
}

bool Vec::is_zero() const { return row_is_zero(coords_); }

Vec& Vec::operator+=(const Vec& other) {
  require_same_space(space_, other.space_);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  require_same_space(space_, other.space_);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vec& Vec::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

std::string Vec::format() const { return format_in_basis(coords_, space_->names()); }

LinearMap::LinearMap(SpacePtr space, std::vector<Row> columns)
    : space_(std::move(space)), cols_(std::move(columns)) {
  if (!space_) throw InputError("linear map requires a space");
  const int n = space_->dim();
  if (static_cast<int>(cols_.size()) != n) {
    throw InputError("column count does not match the space dimension");
  }
  for (const Row& c : cols_) {
    if (static_cast<int>(c.size()) != n) {
      throw InputError("column length does not match the space dimension");
    }
  }
}

LinearMap LinearMap::zero(SpacePtr space) {
  const int n = space->dim();
  return LinearMap(std::move(space), std::vector<Row>(n, zero_row(n)));
}

LinearMap LinearMap::identity(SpacePtr space) {
  const int n = space->dim();
  std::vector<Row> cols(n, zero_row(n));
  for (int j = 0; j < n; ++j) cols[j][j] = 1;
  return LinearMap(std::move(space), std::move(cols));
}

LinearMap LinearMap::from_action(
    SpacePtr space,
    const std::vector<std::tuple<std::string, std::string, Rational>>& entries) {
  const int n = space->dim();
  std::vector<Row> cols(n, zero_row(n));
  for (const auto& [from, to, coeff] : entries) {
    cols[space->index_of(from)][space->index_of(to)] += coeff;
  }
  return LinearMap(std::move(space), std::move(cols));
}

Vec LinearMap::apply(const Vec& v) const {
  require_same_space(space_, v.space());
  Row out = zero_row(dim());
  for (int j = 0; j < dim(); ++j) {
    const Rational& c = v.coords()[j];
    if (c == 0) continue;
    for (int i = 0; i < dim(); ++i) out[i] += c * cols_[j][i];
  }
  return Vec(space_, std::move(out));
}

bool LinearMap::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), row_is_zero);
}

Row LinearMap::flatten() const {
  Row out;
  out.reserve(static_cast<std::size_t>(dim()) * dim());
  for (const Row& c : cols_) out.insert(out.end(), c.begin(), c.end());
  return out;
}

LinearMap& LinearMap::operator+=(const LinearMap& other) {
  require_same_space(space_, other.space_);
  for (int j = 0; j < dim(); ++j)
    for (int i = 0; i < dim(); ++i) cols_[j][i] += other.cols_[j][i];
  return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& other) {
  require_same_space(space_, other.space_);
  for (int j = 0; j < dim(); ++j)
    for (int i = 0; i < dim(); ++i) cols_[j][i] -= other.cols_[j][i];
  return *this;
}

LinearMap& LinearMap::operator*=(const Rational& scalar) {
  for (auto& col : cols_)
    for (auto& x : col) x *= scalar;
  return *this;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  require_same_space(f.space(), g.space());
  const int n = f.dim();
  std::vector<Row> cols;
  cols.reserve(n);
  for (int j = 0; j < n; ++j) cols.push_back(f.apply(g.column(j)).coords());
  return LinearMap(f.space(), std::move(cols));
}

LinearMap commutator(const LinearMap& f, const LinearMap& g) {
  return compose(f, g) - compose(g, f);
}

std::vector<Row> rref(std::vector<Row> rows) {
  if (rows.empty()) return rows;
  const std::size_t width = rows[0].size();
  for (const Row& r : rows) {
    if (r.size() != width) throw InputError("rref: mismatched row lengths");
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < rows.size() && rows[found][col] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    const Rational inv = Rational(1) / rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = 0; c < width; ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

int rank(const std::vector<Row>& rows) {
  return static_cast<int>(rref(rows).size());
}

std::optional<Row> express(const std::vector<Row>& rows, const Row& target) {
  const std::size_t k = rows.size();
  const std::size_t n = target.size();
  for (const Row& r : rows) {
    if (r.size() != n) throw InputError("express: mismatched row lengths");
  }
  // Solve sum(c_i rows_i) = target: Gaussian elimination on the k+1 wide
  // augmented system whose columns are the rows.
  std::vector<Row> aug(n, zero_row(static_cast<int>(k) + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug[j][i] = rows[i][j];
    aug[j][k] = target[j];
  }
  std::size_t pivot_row = 0;
  std::vector<int> pivot_col_of_row;
  for (std::size_t col = 0; col < k && pivot_row < n; ++col) {
    std::size_t found = pivot_row;
    while (found < n && aug[found][col] == 0) ++found;
    if (found == n) continue;
    std::swap(aug[pivot_row], aug[found]);
    const Rational inv = Rational(1) / aug[pivot_row][col];
    for (auto& x : aug[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == pivot_row || aug[r][col] == 0) continue;
      const Rational factor = aug[r][col];
      for (std::size_t c = col; c <= k; ++c) aug[r][c] -= factor * aug[pivot_row][c];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < n; ++r) {
    if (aug[r][k] != 0) return std::nullopt; // inconsistent
  }
  Row solution = zero_row(static_cast<int>(k));
  for (std::size_t r = 0; r < pivot_row; ++r) {
    solution[pivot_col_of_row[r]] = aug[r][k];
  }
  return solution;
}

Subspace::Subspace(int ambient_dim, std::vector<Row> echelon_rows)
    : ambient_(ambient_dim), rows_(std::move(echelon_rows)) {
  pivots_.reserve(rows_.size());
  for (const Row& r : rows_) {
    std::size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    pivots_.push_back(static_cast<int>(p));
  }
}

Subspace Subspace::from_rows(int ambient_dim, std::vector<Row> rows) {
  for (const Row& r : rows) {
    if (static_cast<int>(r.size()) != ambient_dim) {
      throw InputError("subspace rows must have the ambient dimension");
    }
  }
  return Subspace(ambient_dim, rref(std::move(rows)));
}

Subspace Subspace::zero_subspace(int ambient_dim) {
  return Subspace(ambient_dim, {});
}

Subspace Subspace::full(int ambient_dim) {
  std::vector<Row> rows(ambient_dim, zero_row(ambient_dim));
  for (int i = 0; i < ambient_dim; ++i) rows[i][i] = 1;
  return Subspace(ambient_dim, std::move(rows));
}

Row Subspace::reduce(Row v) const {
  if (static_cast<int>(v.size()) != ambient_) {
    throw InputError("subspace membership test: dimension mismatch");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (c == 0) continue;
    const Rational factor = c;
    for (int j = pivots_[r]; j < ambient_; ++j) v[j] -= factor * rows_[r][j];
  }
  return v;
}

bool Subspace::contains(const Row& v) const { return row_is_zero(reduce(v)); }

bool Subspace::contains_all(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Row& r) { return contains(r); });
}

bool direct_sum_check(const std::vector<Subspace>& parts, const Subspace& whole) {
  int total = 0;
  std::vector<Row> all_rows;
  for (const Subspace& p : parts) {
    if (p.ambient_dim() != whole.ambient_dim()) {
      throw InputError("direct sum check: ambient dimension mismatch");
    }
    total += p.dim();
    all_rows.insert(all_rows.end(), p.basis().begin(), p.basis().end());
  }
  if (total != whole.dim()) return false;
  return Subspace::from_rows(whole.ambient_dim(), std::move(all_rows)) == whole;
}

std::string format_in_basis(const Row& coords, const std::vector<std::string>& names) {
  if (coords.size() != names.size()) {
    throw InputError("format_in_basis: dimension mismatch");
  }
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Rational& c = coords[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += format_rational(magnitude) + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

} // namespace liegrad
