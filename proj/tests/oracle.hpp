#pragma once

// Reference computations written directly in terms of structure constants,
// without the Kronecker machinery the library uses.

#include <random>
#include <vector>

#include "wfm/ratmat.hpp"
#include "wfm/weakstruct.hpp"

namespace oracle {

using wfm::RatMatrix;
using wfm::Rational;

using Tensor3 = std::vector<std::vector<std::vector<Rational>>>;

inline Tensor3 tensor(std::size_t n) {
  return Tensor3(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
}

// e_i·e_j = Σ_k c[i][j][k] e_k
inline Tensor3 mult_constants(const wfm::AlgebraSpec& a) {
  const std::size_t n = a.dim;
  Tensor3 c = tensor(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] = (*a.mult)(k, i * n + j);
  return c;
}

// δ(e_i) = Σ d[i][j][k] e_j ⊗ e_k
inline Tensor3 comult_constants(const wfm::AlgebraSpec& a) {
  const std::size_t n = a.dim;
  Tensor3 d = tensor(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d[i][j][k] = (*a.comult)(j * n + k, i);
  return d;
}

inline bool associative(const wfm::AlgebraSpec& a) {
  const std::size_t n = a.dim;
  const Tensor3 c = mult_constants(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t out = 0; out < n; ++out) {
          Rational lhs = 0, rhs = 0;  // (e_i e_j) e_k  vs  e_i (e_j e_k)
          for (std::size_t s = 0; s < n; ++s) {
            lhs += c[i][j][s] * c[s][k][out];
            rhs += c[j][k][s] * c[i][s][out];
          }
          if (lhs != rhs) return false;
        }
  return true;
}

inline bool coassociative(const wfm::AlgebraSpec& a) {
  const std::size_t n = a.dim;
  const Tensor3 d = comult_constants(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Rational lhs = 0, rhs = 0;  // (δ⊗1)δ  vs  (1⊗δ)δ
          for (std::size_t s = 0; s < n; ++s) {
            lhs += d[i][s][z] * d[s][x][y];
            rhs += d[i][x][s] * d[s][y][z];
          }
          if (lhs != rhs) return false;
        }
  return true;
}

// ϑ(e_i) = Σ_j u_j e_i e_j
inline RatMatrix vartheta(const wfm::AlgebraSpec& a) {
  const std::size_t n = a.dim;
  const Tensor3 c = mult_constants(a);
  RatMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(k, i) += (*a.unit)(j, 0) * c[i][j][k];
  return t;
}

// γ(e_i) = Σ_{j,k} d[i][j][k] ε_k e_j
inline RatMatrix gamma(const wfm::AlgebraSpec& a) {
  const std::size_t n = a.dim;
  const Tensor3 d = comult_constants(a);
  RatMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(j, i) += d[i][j][k] * (*a.counit)(0, k);
  return t;
}

// θ(e_i) = Σ d[i][j][k] e_j e_k
inline RatMatrix theta(const wfm::AlgebraSpec& a) {
  const std::size_t n = a.dim;
  const Tensor3 c = mult_constants(a);
  const Tensor3 d = comult_constants(a);
  RatMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t out = 0; out < n; ++out) t(out, i) += d[i][j][k] * c[j][k][out];
  return t;
}

// δ(ab) = Σ a b₁ ⊗ b₂  and  δ(ab) = Σ a₁ ⊗ a₂ b
inline bool frobenius(const wfm::AlgebraSpec& a) {
  const std::size_t n = a.dim;
  const Tensor3 c = mult_constants(a);
  const Tensor3 d = comult_constants(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          Rational delta_m = 0, left = 0, right = 0;
          for (std::size_t s = 0; s < n; ++s) {
            delta_m += c[i][j][s] * d[s][x][y];
            left += d[j][s][y] * c[i][s][x];
            right += d[i][x][s] * c[s][j][y];
          }
          if (delta_m != left || delta_m != right) return false;
        }
  return true;
}

inline RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -2,
                               int hi = 2) {
  std::uniform_int_distribution<int> dist(lo, hi);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Every index tuple over {-1, 0, 1} of the given length, in lexicographic order.
inline std::vector<std::vector<int>> ternary_vectors(std::size_t len) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int x : {-1, 0, 1}) {
        next.push_back(v);
        next.back().push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
