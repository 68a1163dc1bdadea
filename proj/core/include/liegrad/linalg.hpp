#pragma once

#include <liegrad/errors.hpp>
#include <liegrad/rational.hpp>

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace liegrad {

/// A dense coordinate row over some fixed basis.
using Row = std::vector<Rational>;

/// Ordered named basis of a finite-dimensional vector space. The name
/// order is fixed at construction and indexes every coordinate row.
class BasedSpace {
public:
  explicit BasedSpace(std::vector<std::string> basis_names);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  /// Throws InputError for unknown names.
  int index_of(const std::string& name) const;
  bool has(const std::string& name) const { return index_.count(name) != 0; }

  friend bool operator==(const BasedSpace& a, const BasedSpace& b) {
    return a.names_ == b.names_;
  }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using SpacePtr = std::shared_ptr<const BasedSpace>;
SpacePtr make_space(std::vector<std::string> basis_names);

/// True when both handles describe the same basis (not necessarily the
/// same object).
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// Coordinate vector over a BasedSpace.
class Vec {
public:
  Vec(SpacePtr space, Row coords);
  static Vec zero(SpacePtr space);
  static Vec unit(SpacePtr space, int index);

  const SpacePtr& space() const { return space_; }
  const Row& coords() const { return coords_; }
  const Rational& operator[](int i) const { return coords_.at(i); }
  int dim() const { return static_cast<int>(coords_.size()); }
  bool is_zero() const;

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(const Rational& scalar);

  /// Human-readable rendering such as "b1", "2*a - 1/2*c3", or "0".
  std::string format() const;

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rational& s, Vec v) { return v *= s; }
  friend bool operator==(const Vec& a, const Vec& b) {
    return same_space(a.space_, b.space_) && a.coords_ == b.coords_;
  }

private:
  SpacePtr space_;
  Row coords_;
};

/// Endomorphism of a BasedSpace stored by columns: column j is the image
/// of the j-th basis vector.
class LinearMap {
public:
  LinearMap(SpacePtr space, std::vector<Row> columns);
  static LinearMap zero(SpacePtr space);
  static LinearMap identity(SpacePtr space);
  /// Sparse constructor: each (from, to, coeff) entry adds
  /// coeff * e_to to the image of e_from.
  static LinearMap from_action(
      SpacePtr space,
      const std::vector<std::tuple<std::string, std::string, Rational>>& entries);

  const SpacePtr& space() const { return space_; }
  int dim() const { return static_cast<int>(cols_.size()); }
  Vec apply(const Vec& v) const;
  Vec column(int j) const { return Vec(space_, cols_.at(j)); }
  bool is_zero() const;
  /// Column-major flattening into a single coordinate row of length dim².
  Row flatten() const;

  LinearMap& operator+=(const LinearMap& other);
  LinearMap& operator-=(const LinearMap& other);
  LinearMap& operator*=(const Rational& scalar);

  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator*(const Rational& s, LinearMap m) { return m *= s; }
  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return same_space(a.space_, b.space_) && a.cols_ == b.cols_;
  }

private:
  SpacePtr space_;
  std::vector<Row> cols_;
};

/// f after g: compose(f, g)(v) = f(g(v)).
LinearMap compose(const LinearMap& f, const LinearMap& g);
/// fg - gf.
LinearMap commutator(const LinearMap& f, const LinearMap& g);

/// Reduced row-echelon basis of the span of the given rows. Zero rows are
/// dropped; pivots are 1 and strictly increasing, pivot columns are zero
/// elsewhere. Throws InputError on mismatched row lengths.
std::vector<Row> rref(std::vector<Row> rows);
int rank(const std::vector<Row>& rows);

/// Coefficients c with sum(c_i * rows_i) = target, if the target lies in
/// the span. Free coefficients are set to zero.
std::optional<Row> express(const std::vector<Row>& rows, const Row& target);

/// A linear subspace held in canonical reduced row-echelon form, so two
/// subspaces are equal exactly when their stored bases are equal.
class Subspace {
public:
  static Subspace from_rows(int ambient_dim, std::vector<Row> rows);
  static Subspace zero_subspace(int ambient_dim);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<Row>& basis() const { return rows_; }

  /// Residual of v after elimination against the echelon basis.
  Row reduce(Row v) const;
  bool contains(const Row& v) const;
  bool contains_all(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

private:
  Subspace(int ambient_dim, std::vector<Row> echelon_rows);

  int ambient_;
  std::vector<Row> rows_;
  std::vector<int> pivots_;
};

/// True iff the parts' dimensions add up to dim(whole) and their union
/// spans the whole space.
bool direct_sum_check(const std::vector<Subspace>& parts, const Subspace& whole);

/// Renders a coordinate row against basis names ("a - 2*c3", "0").
std::string format_in_basis(const Row& coords, const std::vector<std::string>& names);

} // namespace liegrad
