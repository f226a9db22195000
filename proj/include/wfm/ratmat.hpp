#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "wfm/rational.hpp"

namespace wfm {

/// Dense row-major matrix of exact rationals. Shapes with a zero
/// dimension are legal and behave as the empty linear maps they denote.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix column(std::initializer_list<Rational> values);
  static RatMatrix row(std::initializer_list<Rational> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<const Rational> entries() const { return entries_; }

  RatMatrix transpose() const;
  /// Columns listed in `indices`, in that order.
  RatMatrix select_columns(std::span<const std::size_t> indices) const;
  RatMatrix select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& a);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

/// Kronecker product; block (i,j) of the result is a(i,j)·b.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
RatMatrix kron(std::initializer_list<RatMatrix> factors);

/// Reduced row echelon form with leftmost pivots.
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};
RowEchelon row_echelon(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Factorisation e = i·p of an idempotent with p·i = I_rank.
struct SplitPair {
  RatMatrix p;  // rank × n
  RatMatrix i;  // n × rank
  std::size_t rank = 0;
};

/// i takes the pivot columns of e (leftmost-pivot elimination), p the
/// nonzero rows of the reduced echelon form of e. Throws NotIdempotent with
/// the first entry where e·e and e differ.
SplitPair split_idempotent(const RatMatrix& e);

}  // namespace wfm
