#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wfm/ratmat.hpp"

namespace wfm {

/// Sparse vector as (index, value) pairs sorted by index, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow to_sparse(const RatMatrix& m);  // row-major flattening

/// Incrementally maintained reduced row echelon form. Every stored row has
/// leading coefficient 1 and is zero in every other stored row's pivot column.
class RowReducer {
 public:
  explicit RowReducer(std::size_t width);

  /// Reduces `row` against the stored rows; stores the remainder if nonzero.
  /// Returns true when the row was independent of what was stored.
  bool insert(SparseRow row);
  /// True when `row` lies in the span of the stored rows.
  bool contains(SparseRow row) const;

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  bool has_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
  const std::vector<SparseRow>& rows() const { return rows_; }

 private:
  SparseRow reduce(SparseRow row) const;

  std::size_t width_;
  std::vector<SparseRow> rows_;
  std::vector<long> pivot_row_;
};

/// How the unknown X enters a term left · P(X) · right.
enum class Placement {
  plain,           // P(X) = X
  left_identity,   // P(X) = I_k ⊗ X
  right_identity,  // P(X) = X ⊗ I_k
};

struct LinearTerm {
  RatMatrix left;
  RatMatrix right;
  Placement placement = Placement::plain;
  std::size_t k = 1;
};

/// Affine conditions  Σ_t left_t · P_t(X) · right_t = rhs  on the entries of
/// an unknown matrix X, vectorised row-major.
class LinearConstraints {
 public:
  LinearConstraints(std::size_t rows, std::size_t cols);

  void add(const std::vector<LinearTerm>& terms, const RatMatrix& rhs);
  void add_homogeneous(const std::vector<LinearTerm>& terms);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t unknowns() const { return rows_ * cols_; }
  /// Equations with the right-hand side stored at column unknowns().
  const std::vector<SparseRow>& equations() const { return equations_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseRow> equations_;
};

struct AffineSolution {
  bool consistent = false;
  RatMatrix particular;                // valid when consistent
  std::vector<RatMatrix> homogeneous;  // basis of the solution space of the homogeneous system
};

AffineSolution solve(const LinearConstraints& constraints);

/// Basis of { X : constraints hold with rhs replaced by zero }.
std::vector<RatMatrix> solution_space(const LinearConstraints& constraints);

struct FactorResult {
  enum class Kind { no_solution, unique, affine };
  Kind kind = Kind::no_solution;
  RatMatrix q;                         // the unique or particular solution
  std::vector<RatMatrix> homogeneous;  // nonempty exactly when kind == affine
};

/// Solves q·s = h together with `constraints` (whose unknown must be shaped
/// h.rows × s.rows).
FactorResult factor_through(const RatMatrix& s, const RatMatrix& h,
                            const LinearConstraints& constraints);
FactorResult factor_through(const RatMatrix& s, const RatMatrix& h);

/// Solves k·q = h together with `constraints` (unknown shaped k.cols × h.cols).
FactorResult factor_through_left(const RatMatrix& k, const RatMatrix& h,
                                 const LinearConstraints& constraints);

/// dim span(vectors); all matrices must share one shape.
std::size_t span_rank(const std::vector<RatMatrix>& vectors);

}  // namespace wfm
