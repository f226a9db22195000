#include <doctest.h>

#include "oracle.hpp"
#include "wfm/catalog.hpp"
#include "wfm/errors.hpp"
#include "wfm/weakstruct.hpp"

using namespace wfm;

namespace {

AlgebraSpec alg(const char* name) { return builtin(name).as_algebra(); }

RatMatrix diag(std::initializer_list<int> d) {
  RatMatrix m(d.size(), d.size());
  std::size_t k = 0;
  for (int x : d) {
    m(k, k) = x;
    ++k;
  }
  return m;
}

}  // namespace

TEST_CASE("classifier agrees with the structure-constant oracle") {
  for (const char* name : {"C2", "C2n", "Dual", "Mat2", "Mat2n", "Zero(1)", "Zero(3)",
                           "InflC2_1", "InflC2_2", "InflDual_2", "InflMat2n_1"}) {
    CAPTURE(name);
    const AlgebraSpec a = alg(name);
    const StructureReport st = classify(a);
    CHECK(st.assoc.holds() == oracle::associative(a));
    CHECK(st.coassoc.holds() == oracle::coassociative(a));
    REQUIRE(st.vartheta);
    REQUIRE(st.gamma);
    CHECK(st.vartheta->mat() == oracle::vartheta(a));
    CHECK(st.gamma->mat() == oracle::gamma(a));
    const bool unital = oracle::vartheta(a) == RatMatrix::identity(a.dim);
    CHECK(st.unit_right.holds() == unital);
  }
}

TEST_CASE("C2 is a proper monad and comonad") {
  const StructureReport st = classify(alg("C2"));
  CHECK(st.is_monad());
  CHECK(st.is_weak_monad());
  CHECK(st.is_comonad());
  CHECK(st.is_weak_comonad());
  CHECK(st.vartheta->mat() == RatMatrix::identity(2));
  CHECK(st.gamma->mat() == RatMatrix::identity(2));
}

TEST_CASE("inflated C2 is weak but not unital") {
  const StructureReport st = classify(alg("InflC2_1"));
  CHECK(st.is_associative());
  CHECK(st.is_weak_monad());
  CHECK(st.is_weak_comonad());
  CHECK_FALSE(st.is_monad());
  CHECK_FALSE(st.is_comonad());
  CHECK(st.unit_left.fails());
  CHECK(st.unit_right.fails());
  CHECK(st.counit_left.fails());
  CHECK(st.vartheta->mat() == diag({1, 1, 0}));
  CHECK(st.gamma->mat() == diag({1, 1, 0}));
  CHECK(*st.vartheta_idempotent);
  REQUIRE(st.unit_right.witness);
  CHECK(st.unit_right.witness->row == 2);
  CHECK(st.unit_right.witness->col == 2);
}

TEST_CASE("zero algebras satisfy the weak axioms only") {
  for (std::size_t n : {1u, 2u, 3u}) {
    const StructureReport st = classify(alg(("Zero(" + std::to_string(n) + ")").c_str()));
    CHECK(st.is_weak_monad());
    CHECK(st.is_weak_comonad());
    CHECK_FALSE(st.is_monad());
    CHECK_FALSE(st.is_comonad());
    CHECK(st.vartheta->mat() == RatMatrix(n, n));
  }
}

TEST_CASE("dual numbers are counital") {
  const StructureReport st = classify(alg("Dual"));
  CHECK(st.is_comonad());
  CHECK(st.is_monad());
}

TEST_CASE("absent data is reported, not guessed") {
  AlgebraSpec a = alg("C2");
  a.unit.reset();
  a.counit.reset();
  const StructureReport st = classify(a);
  CHECK(st.assoc.holds());
  CHECK(st.weak_unit.absent());
  CHECK(st.unit_left.absent());
  CHECK(st.counit_right.absent());
  CHECK_FALSE(st.is_weak_monad());
  CHECK_FALSE(st.vartheta);

  AlgebraSpec only_mult;
  only_mult.dim = 2;
  only_mult.mult = *alg("C2").mult;
  const StructureReport s2 = classify(only_mult);
  CHECK(s2.coassoc.absent());
  CHECK_THROWS_AS(classify_comonad(only_mult), MissingData);
  CHECK_THROWS_AS(only_mult.comult_nat(), MissingData);
}

TEST_CASE("shape validation") {
  AlgebraSpec a = alg("C2");
  a.unit = RatMatrix::column({1, 0, 0});
  CHECK_THROWS_AS(a.validate(), ShapeMismatch);
  CHECK_THROWS_AS(classify(a), ShapeMismatch);
}

TEST_CASE("a non-associative product is caught with a witness") {
  AlgebraSpec a = alg("C2");
  (*a.mult)(1, 0) = 1;  // 1·1 = 1 + g
  const StructureReport st = classify_monad(a);
  CHECK(st.assoc.fails());
  CHECK(st.assoc.witness);
  CHECK_FALSE(oracle::associative(a));
}

TEST_CASE("splitting the weak monad of an inflation") {
  SUBCASE("C2 is returned unchanged") {
    const AlgebraSpec s = split_weak_monad(alg("C2"));
    CHECK(s.mult == alg("C2").mult);
    CHECK(s.unit == alg("C2").unit);
  }
  SUBCASE("InflC2_1 splits to C2") {
    const AlgebraSpec s = split_weak_monad(alg("InflC2_1"));
    CHECK(s.dim == 2);
    CHECK(*s.mult == *alg("C2").mult);
    CHECK(*s.unit == *alg("C2").unit);
    CHECK(classify_monad(s).is_monad());
  }
  SUBCASE("zero splits to dimension zero") {
    const AlgebraSpec s = split_weak_monad(alg("Zero(2)"));
    CHECK(s.dim == 0);
    CHECK(classify_monad(s).is_monad());
  }
  SUBCASE("comonad side") {
    const AlgebraSpec s = split_weak_comonad(alg("InflDual_2"));
    CHECK(s.dim == 2);
    CHECK(*s.comult == *alg("Dual").comult);
    CHECK(*s.counit == *alg("Dual").counit);
  }
}

TEST_CASE("splitting requires weak axioms") {
  AlgebraSpec a = alg("C2");
  (*a.mult)(1, 0) = 1;
  CHECK_THROWS_AS(split_weak_monad(a), NotWeakMonad);
  AlgebraSpec b = alg("C2");
  (*b.comult)(0, 0) = 2;
  CHECK_THROWS_AS(split_weak_comonad(b), NotWeakComonad);
}

TEST_CASE("vartheta is idempotent for weak monads") {
  for (const char* name : {"C2", "InflC2_2", "InflDual_1", "Zero(2)", "InflMat2n_1"}) {
    CAPTURE(name);
    const RatMatrix t = oracle::vartheta(alg(name));
    CHECK(t * t == t);
    const RatMatrix g = oracle::gamma(alg(name));
    CHECK(g * g == g);
  }
}
