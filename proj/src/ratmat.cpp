#include "wfm/ratmat.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "wfm/errors.hpp"

namespace wfm {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw ShapeMismatch("entry count " + std::to_string(entries_.size()) + " does not match " +
                        std::to_string(rows_) + "x" + std::to_string(cols_));
  for (auto& e : entries_) e.canonicalize();
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Rational> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeMismatch("ragged row list");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return {r, c, std::move(entries)};
}

RatMatrix RatMatrix::column(std::initializer_list<Rational> values) {
  return {values.size(), 1, std::vector<Rational>(values)};
}

RatMatrix RatMatrix::row(std::initializer_list<Rational> values) {
  return {1, values.size(), std::vector<Rational>(values)};
}

bool RatMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> indices) const {
  RatMatrix out(rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < indices.size(); ++k) out(r, k) = (*this)(r, indices[k]);
  return out;
}

RatMatrix RatMatrix::select_rows(std::span<const std::size_t> indices) const {
  RatMatrix out(indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) out(k, c) = (*this)(indices[k], c);
  return out;
}

namespace {

void require_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
}

}  // namespace

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  require_same_shape(a, b, "sum");
  RatMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  require_same_shape(a, b, "difference");
  RatMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  return out;
}

RatMatrix operator-(const RatMatrix& a) { return Rational(-1) * a; }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeMismatch("product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  RatMatrix out(a.rows(), b.cols());
  Rational term;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(r, k);
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const Rational& y = b(k, c);
        if (sgn(y) == 0) continue;
        term = x * y;
        out(r, c) += term;
      }
    }
  }
  return out;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= s;
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : " [");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c == 0 ? "" : ", ") << to_string(m(r, c));
    os << "]";
  }
  return os << "] (" << m.rows() << "x" << m.cols() << ")";
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  }
  return out;
}

RatMatrix kron(std::initializer_list<RatMatrix> factors) {
  RatMatrix out = RatMatrix::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

RowEchelon row_echelon(const RatMatrix& m) {
  RowEchelon result{m, {}};
  RatMatrix& a = result.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < a.rows() && sgn(a(found, col)) == 0) ++found;
    if (found == a.rows()) continue;
    if (found != pivot_row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(found, c), a(pivot_row, c));
    const Rational inv = 1 / a(pivot_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (sgn(a(pivot_row, c)) != 0) a(r, c) -= factor * a(pivot_row, c);
    }
    result.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return result;
}

std::size_t rank(const RatMatrix& m) { return row_echelon(m).pivot_columns.size(); }

SplitPair split_idempotent(const RatMatrix& e) {
  if (!e.is_square()) throw ShapeMismatch("split_idempotent: matrix is not square");
  const RatMatrix square = e * e;
  for (std::size_t r = 0; r < e.rows(); ++r)
    for (std::size_t c = 0; c < e.cols(); ++c)
      if (square(r, c) != e(r, c)) throw NotIdempotent(r, c);

  const RowEchelon ech = row_echelon(e);
  const std::size_t r = ech.pivot_columns.size();
  std::vector<std::size_t> leading(r);
  for (std::size_t k = 0; k < r; ++k) leading[k] = k;
  return SplitPair{ech.reduced.select_rows(leading), e.select_columns(ech.pivot_columns), r};
}

}  // namespace wfm
