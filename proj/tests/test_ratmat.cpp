#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "wfm/errors.hpp"
#include "wfm/linear_system.hpp"
#include "wfm/ratmat.hpp"

using namespace wfm;

TEST_CASE("canonical rationals round-trip through text") {
  CHECK(to_string(frac(3, 6)) == "1/2");
  CHECK(to_string(frac(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  for (const char* ok : {"0", "7", "-7", "1/2", "-3/4", "123456789012345678901234567890"}) {
    const auto q = parse_canonical_rational(ok);
    REQUIRE(q);
    CHECK(to_string(*q) == ok);
  }
  for (const char* bad : {"", "3/6", "+1", "-0", "01", "1/1", "1/0", "1/-2", "0/5", " 1", "1.5",
                          "-", "1/", "2/4"})
    CHECK_FALSE(parse_canonical_rational(bad));
}

TEST_CASE("kron of identities and scalars") {
  CHECK(kron(RatMatrix::identity(2), RatMatrix::identity(3)) == RatMatrix::identity(6));
  const RatMatrix m = RatMatrix::from_rows({{1, 2, 3}, {frac(1, 2), 0, -1}});
  CHECK(kron(RatMatrix::from_rows({{2}}), m) == Rational(2) * m);
}

TEST_CASE("kron of two nilpotent Jordan blocks") {
  const RatMatrix n = RatMatrix::from_rows({{0, 1}, {0, 0}});
  const RatMatrix k = kron(n, n);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(k(r, c) == Rational(r == 0 && c == 3 ? 1 : 0));
}

TEST_CASE("kron with zero-sized factors") {
  const RatMatrix e(0, 3);
  const RatMatrix k = kron(e, RatMatrix::identity(2));
  CHECK(k.rows() == 0);
  CHECK(k.cols() == 6);
  CHECK(kron({RatMatrix::identity(1), RatMatrix::identity(2), RatMatrix::identity(2)}) ==
        RatMatrix::identity(4));
}

TEST_CASE("kron interchange law on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    const std::size_t a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng), e = dim(rng),
                      f = dim(rng);
    const RatMatrix A = oracle::random_matrix(rng, a, b);
    const RatMatrix B = oracle::random_matrix(rng, b, c);
    const RatMatrix C = oracle::random_matrix(rng, d, e);
    const RatMatrix D = oracle::random_matrix(rng, e, f);
    CHECK(kron(A, C) * kron(B, D) == kron(A * B, C * D));
    // entrywise definition
    const RatMatrix K = kron(A, C);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < e; ++l) CHECK(K(i * d + k, j * e + l) == A(i, j) * C(k, l));
  }
}

TEST_CASE("split_idempotent on the basic cases") {
  SUBCASE("identity") {
    const SplitPair s = split_idempotent(RatMatrix::identity(3));
    CHECK(s.rank == 3);
    CHECK(s.p == RatMatrix::identity(3));
    CHECK(s.i == RatMatrix::identity(3));
  }
  SUBCASE("zero") {
    const SplitPair s = split_idempotent(RatMatrix(2, 2));
    CHECK(s.rank == 0);
    CHECK(s.p.rows() == 0);
    CHECK(s.p.cols() == 2);
    CHECK(s.i.rows() == 2);
    CHECK(s.i.cols() == 0);
  }
  SUBCASE("rank one, not symmetric") {
    const RatMatrix e = RatMatrix::from_rows({{1, 1}, {0, 0}});
    const SplitPair s = split_idempotent(e);
    CHECK(s.i == RatMatrix::column({1, 0}));
    CHECK(s.p == RatMatrix::row({1, 1}));
    CHECK(s.i * s.p == e);
    CHECK(s.p * s.i == RatMatrix::identity(1));
  }
  SUBCASE("not idempotent") {
    const RatMatrix e = RatMatrix::from_rows({{2, 0}, {0, 1}});
    CHECK_THROWS_AS(split_idempotent(e), NotIdempotent);
    try {
      split_idempotent(e);
    } catch (const NotIdempotent& err) {
      CHECK(err.row() == 0);
      CHECK(err.col() == 0);
    }
  }
  SUBCASE("not square") { CHECK_THROWS_AS(split_idempotent(RatMatrix(2, 3)), ShapeMismatch); }
}

TEST_CASE("split_idempotent on conjugated projectors") {
  // e = S·diag(1..1,0..0)·S⁻¹ for unimodular S built from elementary moves
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t k = static_cast<std::size_t>(trial) % (n + 1);
    RatMatrix s = RatMatrix::identity(n), s_inv = RatMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int step = 0; step < 6 && n > 1; ++step) {
      const std::size_t r = idx(rng), c = idx(rng);
      if (r == c) continue;
      const int t = coef(rng);
      RatMatrix el = RatMatrix::identity(n), el_inv = RatMatrix::identity(n);
      el(r, c) = t;
      el_inv(r, c) = -t;
      s = s * el;
      s_inv = el_inv * s_inv;
    }
    RatMatrix d(n, n);
    for (std::size_t j = 0; j < k; ++j) d(j, j) = 1;
    const RatMatrix e = s * d * s_inv;
    REQUIRE(e * e == e);
    const SplitPair sp = split_idempotent(e);
    CHECK(sp.rank == k);
    CHECK(sp.i * sp.p == e);
    CHECK(sp.p * sp.i == RatMatrix::identity(k));
    CHECK(split_idempotent(e).p == sp.p);  // deterministic
  }
}

TEST_CASE("rank and row echelon") {
  CHECK(rank(RatMatrix(3, 4)) == 0);
  CHECK(rank(RatMatrix::identity(4)) == 4);
  const RatMatrix m = RatMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, frac(1, 3)}});
  CHECK(rank(m) == 2);
  const RowEchelon re = row_echelon(m);
  CHECK(re.pivot_columns == std::vector<std::size_t>{0, 1});
  CHECK(re.reduced(0, 0) == 1);
  CHECK(re.reduced(0, 1) == 0);
  CHECK(re.reduced(1, 1) == 1);
  CHECK(re.reduced(2, 2) == 0);
}

TEST_CASE("factor_through basic cases") {
  SUBCASE("identity factorisation") {
    const FactorResult f = factor_through(RatMatrix::row({1, 0}), RatMatrix::row({1, 0}));
    CHECK(f.kind == FactorResult::Kind::unique);
    CHECK(f.q == RatMatrix::from_rows({{1}}));
  }
  SUBCASE("nothing factors through zero") {
    const FactorResult f = factor_through(RatMatrix(1, 2), RatMatrix::row({1, 0}));
    CHECK(f.kind == FactorResult::Kind::no_solution);
  }
  SUBCASE("through the identity") {
    const RatMatrix h = RatMatrix::from_rows({{1, frac(-2, 3)}, {5, 7}});
    const FactorResult f = factor_through(RatMatrix::identity(2), h);
    CHECK(f.kind == FactorResult::Kind::unique);
    CHECK(f.q == h);
  }
  SUBCASE("non-injective source gives an affine family") {
    // q·(1,1)ᵀ = 2 leaves a one-parameter family of q
    const FactorResult f =
        factor_through(RatMatrix::column({1, 1}), RatMatrix::from_rows({{2}}));
    CHECK(f.kind == FactorResult::Kind::affine);
    CHECK(f.q * RatMatrix::column({1, 1}) == RatMatrix::from_rows({{2}}));
    CHECK(f.homogeneous.size() == 1);
  }
  SUBCASE("left factorisation") {
    const RatMatrix k = RatMatrix::column({1, 2});
    const FactorResult f = factor_through_left(k, RatMatrix::from_rows({{3}, {6}}),
                                               LinearConstraints(1, 1));
    CHECK(f.kind == FactorResult::Kind::unique);
    CHECK(f.q == RatMatrix::from_rows({{3}}));
  }
}

TEST_CASE("linear constraints with whiskered unknowns") {
  // X ⊗ I_2 = I_4 forces X = I_2
  LinearConstraints lc(2, 2);
  lc.add({{RatMatrix::identity(4), RatMatrix::identity(4), Placement::right_identity, 2}},
         RatMatrix::identity(4));
  const AffineSolution s = solve(lc);
  REQUIRE(s.consistent);
  CHECK(s.particular == RatMatrix::identity(2));
  CHECK(s.homogeneous.empty());

  LinearConstraints lc2(2, 2);
  const RatMatrix n = RatMatrix::from_rows({{0, 1}, {0, 0}});
  lc2.add_homogeneous({{n, RatMatrix::identity(2), Placement::plain, 1},
                       {-RatMatrix::identity(2), n, Placement::plain, 1}});
  // X commutes with a Jordan block: X = aI + bN
  CHECK(solution_space(lc2).size() == 2);
}

TEST_CASE("RowReducer membership") {
  RowReducer rr(3);
  CHECK(rr.insert(to_sparse(RatMatrix::row({1, 2, 0}))));
  CHECK(rr.insert(to_sparse(RatMatrix::row({0, 1, 1}))));
  CHECK_FALSE(rr.insert(to_sparse(RatMatrix::row({1, 3, 1}))));
  CHECK(rr.contains(to_sparse(RatMatrix::row({2, 5, 1}))));
  CHECK_FALSE(rr.contains(to_sparse(RatMatrix::row({0, 0, 1}))));
  CHECK(rr.rank() == 2);
  CHECK(span_rank({RatMatrix::identity(2), Rational(3) * RatMatrix::identity(2)}) == 1);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(RatMatrix(2, 2) * RatMatrix(3, 1), ShapeMismatch);
  CHECK_THROWS_AS(RatMatrix(2, 2) + RatMatrix(2, 1), ShapeMismatch);
}
