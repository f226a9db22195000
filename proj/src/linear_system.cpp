#include "wfm/linear_system.hpp"

#include <algorithm>

#include "wfm/errors.hpp"

namespace wfm {

namespace {

// a + factor·b, both sorted by index.
SparseRow axpy(const SparseRow& a, const Rational& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, factor * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + factor * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Rational* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& entry, std::size_t c) { return entry.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

SparseRow to_sparse(const RatMatrix& m) {
  SparseRow out;
  const auto entries = m.entries();
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (sgn(entries[k]) != 0) out.emplace_back(k, entries[k]);
  return out;
}

RowReducer::RowReducer(std::size_t width) : width_(width), pivot_row_(width, -1) {}

SparseRow RowReducer::reduce(SparseRow row) const {
  std::size_t pos = 0;
  while (pos < row.size()) {
    const long p = pivot_row_[row[pos].first];
    if (p < 0) {
      ++pos;
      continue;
    }
    const Rational factor = -row[pos].second;
    row = axpy(row, factor, rows_[static_cast<std::size_t>(p)]);
  }
  return row;
}

bool RowReducer::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::size_t pivot = row.front().first;
  const Rational inv = 1 / row.front().second;
  for (auto& entry : row) entry.second *= inv;
  for (auto& stored : rows_) {
    if (const Rational* v = find_entry(stored, pivot)) {
      const Rational factor = -*v;
      stored = axpy(stored, factor, row);
    }
  }
  pivot_row_[pivot] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool RowReducer::contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

LinearConstraints::LinearConstraints(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

namespace {

struct ExpandedTerm {
  std::vector<SparseRow> left_rows;   // nonzeros of each row of `left`
  std::vector<SparseRow> right_cols;  // nonzeros of each column of `right`
  Placement placement;
  std::size_t k;
};

ExpandedTerm expand(const LinearTerm& t, std::size_t xr, std::size_t xc) {
  const std::size_t need_left = t.placement == Placement::plain ? xr : t.k * xr;
  const std::size_t need_right = t.placement == Placement::plain ? xc : t.k * xc;
  if (t.left.cols() != need_left || t.right.rows() != need_right)
    throw ShapeMismatch("linear term does not fit the unknown's shape");
  ExpandedTerm e{std::vector<SparseRow>(t.left.rows()), std::vector<SparseRow>(t.right.cols()),
                 t.placement, t.k};
  for (std::size_t i = 0; i < t.left.rows(); ++i)
    for (std::size_t c = 0; c < t.left.cols(); ++c)
      if (sgn(t.left(i, c)) != 0) e.left_rows[i].emplace_back(c, t.left(i, c));
  for (std::size_t r = 0; r < t.right.rows(); ++r)
    for (std::size_t j = 0; j < t.right.cols(); ++j)
      if (sgn(t.right(r, j)) != 0) e.right_cols[j].emplace_back(r, t.right(r, j));
  return e;
}

// Splits an index into (identity slot, unknown index) according to placement.
std::pair<std::size_t, std::size_t> decode(Placement placement, std::size_t index,
                                           std::size_t unknown_dim, std::size_t k) {
  switch (placement) {
    case Placement::plain:
      return {0, index};
    case Placement::left_identity:
      return {index / unknown_dim, index % unknown_dim};
    case Placement::right_identity:
      return {index % k, index / k};
  }
  return {0, index};
}

}  // namespace

void LinearConstraints::add(const std::vector<LinearTerm>& terms, const RatMatrix& rhs) {
  std::vector<ExpandedTerm> expanded;
  expanded.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.left.rows() != rhs.rows() || t.right.cols() != rhs.cols())
      throw ShapeMismatch("linear term result shape differs from right-hand side");
    expanded.push_back(expand(t, rows_, cols_));
  }
  const std::size_t rhs_col = unknowns();
  SparseRow scratch;
  for (std::size_t i = 0; i < rhs.rows(); ++i) {
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      scratch.clear();
      for (const auto& t : expanded) {
        for (const auto& [lc, lv] : t.left_rows[i]) {
          const auto [s, a] = decode(t.placement, lc, rows_, t.k);
          for (const auto& [rr, rv] : t.right_cols[j]) {
            const auto [s2, b] = decode(t.placement, rr, cols_, t.k);
            if (s != s2) continue;
            scratch.emplace_back(a * cols_ + b, lv * rv);
          }
        }
      }
      std::sort(scratch.begin(), scratch.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      SparseRow eq;
      for (auto& entry : scratch) {
        if (!eq.empty() && eq.back().first == entry.first)
          eq.back().second += entry.second;
        else
          eq.push_back(std::move(entry));
      }
      std::erase_if(eq, [](const auto& entry) { return sgn(entry.second) == 0; });
      if (sgn(rhs(i, j)) != 0) eq.emplace_back(rhs_col, rhs(i, j));
      if (!eq.empty()) equations_.push_back(std::move(eq));
    }
  }
}

void LinearConstraints::add_homogeneous(const std::vector<LinearTerm>& terms) {
  if (terms.empty()) return;
  add(terms, RatMatrix(terms.front().left.rows(), terms.front().right.cols()));
}

AffineSolution solve(const LinearConstraints& constraints) {
  const std::size_t n = constraints.unknowns();
  RowReducer reducer(n + 1);
  for (const auto& eq : constraints.equations()) reducer.insert(eq);

  AffineSolution sol;
  sol.consistent = !reducer.has_pivot(n);

  std::vector<long> free_index(n, -1);
  std::size_t free_count = 0;
  for (std::size_t c = 0; c < n; ++c)
    if (!reducer.has_pivot(c)) free_index[c] = static_cast<long>(free_count++);

  std::vector<RatMatrix> basis(free_count, RatMatrix(constraints.rows(), constraints.cols()));
  const std::size_t width = constraints.cols();
  for (std::size_t c = 0; c < n; ++c)
    if (free_index[c] >= 0) basis[static_cast<std::size_t>(free_index[c])](c / width, c % width) = 1;

  RatMatrix particular(constraints.rows(), constraints.cols());
  for (const auto& row : reducer.rows()) {
    const std::size_t pivot = row.front().first;
    if (pivot == n) continue;
    for (const auto& [c, v] : row) {
      if (c == pivot) continue;
      if (c == n) {
        particular(pivot / width, pivot % width) = v;
      } else {
        basis[static_cast<std::size_t>(free_index[c])](pivot / width, pivot % width) = -v;
      }
    }
  }
  if (sol.consistent) sol.particular = std::move(particular);
  sol.homogeneous = std::move(basis);
  return sol;
}

std::vector<RatMatrix> solution_space(const LinearConstraints& constraints) {
  AffineSolution sol = solve(constraints);
  return std::move(sol.homogeneous);
}

namespace {

FactorResult classify(AffineSolution sol) {
  FactorResult out;
  if (!sol.consistent) return out;
  out.q = std::move(sol.particular);
  if (sol.homogeneous.empty()) {
    out.kind = FactorResult::Kind::unique;
  } else {
    out.kind = FactorResult::Kind::affine;
    out.homogeneous = std::move(sol.homogeneous);
  }
  return out;
}

}  // namespace

FactorResult factor_through(const RatMatrix& s, const RatMatrix& h,
                            const LinearConstraints& constraints) {
  if (h.cols() != s.cols() || constraints.rows() != h.rows() || constraints.cols() != s.rows())
    throw ShapeMismatch("factor_through: shapes of s, h and constraints disagree");
  LinearConstraints system = constraints;
  system.add({{RatMatrix::identity(h.rows()), s}}, h);
  return classify(solve(system));
}

FactorResult factor_through(const RatMatrix& s, const RatMatrix& h) {
  return factor_through(s, h, LinearConstraints(h.rows(), s.rows()));
}

FactorResult factor_through_left(const RatMatrix& k, const RatMatrix& h,
                                 const LinearConstraints& constraints) {
  if (h.rows() != k.rows() || constraints.rows() != k.cols() || constraints.cols() != h.cols())
    throw ShapeMismatch("factor_through_left: shapes of k, h and constraints disagree");
  LinearConstraints system = constraints;
  system.add({{k, RatMatrix::identity(h.cols())}}, h);
  return classify(solve(system));
}

std::size_t span_rank(const std::vector<RatMatrix>& vectors) {
  if (vectors.empty()) return 0;
  RowReducer reducer(vectors.front().size());
  for (const auto& v : vectors) reducer.insert(to_sparse(v));
  return reducer.rank();
}

}  // namespace wfm
