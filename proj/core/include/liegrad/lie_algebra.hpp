#pragma once

#include <liegrad/operator_algebra.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace liegrad {

/// A finite-dimensional Lie algebra given by a named basis and structure
/// constants. Only pairs (i, j) with i < j and nonzero bracket are
/// stored; [b_i, b_i] = 0 by construction and brackets with i > j follow
/// from the alternating rule.
class LieAlgebra {
public:
  /// Bracket table keys must satisfy i < j; values are coordinate rows of
  /// length dim. Zero rows are dropped. The Jacobi identity is *not*
  /// assumed here; run check_axioms to validate it.
  LieAlgebra(std::vector<std::string> basis_names,
             std::map<std::pair<int, int>, Row> brackets);

  int dim() const { return space_->dim(); }
  const std::vector<std::string>& basis_names() const { return space_->names(); }
  int index_of(const std::string& name) const { return space_->index_of(name); }
  const SpacePtr& space() const { return space_; }
  const std::map<std::pair<int, int>, Row>& table() const { return table_; }

  /// [b_i, b_j] for any pair, alternating rule applied.
  Row bracket_basis(int i, int j) const;
  /// Bilinear extension to arbitrary coordinate rows.
  Row bracket(const Row& u, const Row& v) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.basis_names() == b.basis_names() && a.table_ == b.table_;
  }

private:
  SpacePtr space_;
  std::map<std::pair<int, int>, Row> table_;
};

/// Lie algebra structure on a commutator-closed span of operators: basis
/// names are the spanning words, structure constants are the coordinates
/// of pairwise commutators in the monomial basis. Throws InputError when
/// the span is not closed under the commutator.
LieAlgebra from_operators(const AlgebraSpan& span);

/// L = g ⊕ V with V an abelian ideal: the g-g block comes from the
/// operator commutators, [f, v] = f(v), and [v, w] = 0. The operators
/// must act on V itself.
LieAlgebra semidirect_sum(const AlgebraSpan& g, const SpacePtr& v_space);

struct AxiomViolation {
  int i, j, k;     // basis triple; k = -1 marks an alternating failure on (i, j)
  Row value;       // the nonzero jacobiator (or self-bracket)
};

struct AxiomReport {
  bool pass = true;
  std::vector<AxiomViolation> violations;
};

/// Verifies [b_i, b_i] = 0 and the Jacobi identity on all ordered basis
/// triples. Failures are collected, not short-circuited.
AxiomReport check_axioms(const LieAlgebra& algebra);

struct LowerCentralSeries {
  /// L¹ = L, L^{k+1} = [L, L^k], listed until stabilization (the first
  /// repeated dimension, or the zero term).
  std::vector<Subspace> terms;
  bool nilpotent = false;
  /// Largest c with L^c ≠ 0 when nilpotent; 0 otherwise.
  int nilpotency_class = 0;
};

LowerCentralSeries lower_central_series(const LieAlgebra& algebra);

} // namespace liegrad
