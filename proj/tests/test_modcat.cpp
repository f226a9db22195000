#include <doctest.h>

#include "oracle.hpp"
#include "wfm/catalog.hpp"
#include "wfm/errors.hpp"
#include "wfm/modcat.hpp"

using namespace wfm;

namespace {

AlgebraSpec alg(const std::string& name) { return builtin(name).as_algebra(); }

ModuleSpec regular(const AlgebraSpec& a) { return {a.dim, *a.mult}; }
ComoduleSpec coregular(const AlgebraSpec& a) { return {a.dim, *a.comult}; }

// dim Hom_A(M1, M2) from h·ρ1(e_i ⊗ x) = ρ2(e_i ⊗ h·x), written out entrywise.
std::size_t hom_dim_oracle(const AlgebraSpec& a, const ModuleSpec& m1, const ModuleSpec& m2) {
  const std::size_t n = a.dim, b1 = m1.dim, b2 = m2.dim;
  const std::size_t unknowns = b2 * b1;  // h(r, c) at r·b1 + c
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < b1; ++x)
      for (std::size_t out = 0; out < b2; ++out) {
        std::vector<Rational> eq(unknowns);
        // Σ_y h(out, y) ρ1(y, i·b1 + x)
        for (std::size_t y = 0; y < b1; ++y) eq[out * b1 + y] += m1.action(y, i * b1 + x);
        // − Σ_z ρ2(out, i·b2 + z) h(z, x)
        for (std::size_t z = 0; z < b2; ++z) eq[z * b1 + x] -= m2.action(out, i * b2 + z);
        rows.push_back(std::move(eq));
      }
  if (rows.empty()) return unknowns;
  RatMatrix sys(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) sys(r, c) = rows[r][c];
  return unknowns - rank(sys);
}

std::vector<std::string> weak_algebras() {
  return {"C2",       "C2n",        "Dual",       "Mat2n",   "Mat2",   "InflC2_1",
          "InflC2_2", "InflDual_2", "InflC2n_1",  "Zero(1)", "Zero(2)"};
}

// Compatible modules: regular, inflated regular, zero action, free, 0-dimensional.
std::vector<ModuleSpec> module_samples(const AlgebraSpec& a) {
  return {regular(a), inflate_module(regular(a), a.dim, 1), ModuleSpec{1, RatMatrix(1, a.dim)},
          free_module(a, 1), ModuleSpec{0, RatMatrix(0, 0)}};
}

std::vector<ComoduleSpec> comodule_samples(const AlgebraSpec& a) {
  return {coregular(a), inflate_comodule(coregular(a), a.dim, 1),
          ComoduleSpec{1, RatMatrix(a.dim, 1)}, cofree_comodule(a, 1),
          ComoduleSpec{0, RatMatrix(0, 0)}};
}

}  // namespace

TEST_CASE("module laws") {
  SUBCASE("regular module over C2") {
    const ModuleReport r = check_module(alg("C2"), regular(alg("C2")));
    CHECK(r.law.holds());
    CHECK(r.compatible.holds());
    CHECK(r.unital.holds());
  }
  SUBCASE("zero action on a line over C2") {
    const ModuleReport r = check_module(alg("C2"), {1, RatMatrix(1, 2)});
    CHECK(r.law.holds());
    CHECK(r.unital.fails());
  }
  SUBCASE("regular module over InflC2_1") {
    const ModuleReport r = check_module(alg("InflC2_1"), regular(alg("InflC2_1")));
    CHECK(r.law.holds());
    CHECK(r.compatible.holds());
    CHECK(r.unital.fails());
  }
  SUBCASE("an action that is not associative") {
    ModuleSpec m = regular(alg("C2"));
    m.action(1, 0) = 1;
    CHECK(check_module(alg("C2"), m).law.fails());
  }
  SUBCASE("shape errors") {
    CHECK_THROWS_AS(check_module(alg("C2"), {2, RatMatrix(2, 3)}), ShapeMismatch);
  }
}

TEST_CASE("comodule laws") {
  const ComoduleReport r = check_comodule(alg("C2"), coregular(alg("C2")));
  CHECK(r.law.holds());
  CHECK(r.compatible.holds());
  CHECK(r.counital.holds());
  const ComoduleReport z = check_comodule(alg("C2"), {1, RatMatrix(2, 1)});
  CHECK(z.law.holds());
  CHECK(z.counital.fails());
  const ComoduleReport infl = check_comodule(alg("InflDual_2"), coregular(alg("InflDual_2")));
  CHECK(infl.law.holds());
  CHECK(infl.compatible.holds());
  CHECK(infl.counital.fails());
}

TEST_CASE("module morphisms and their classes") {
  const AlgebraSpec c2 = alg("C2");
  const ModuleSpec reg = regular(c2);
  SUBCASE("identity on the regular module") {
    const MorphismReport r =
        check_module_morphism(c2, reg, reg, RatMatrix::identity(2), ClassKind::vartheta);
    CHECK(r.morphism.holds());
    CHECK(r.in_class.holds());
    CHECK(check_module_morphism(c2, reg, reg, RatMatrix::identity(2)).in_class.absent());
  }
  SUBCASE("vartheta_B lies in the class") {
    const AlgebraSpec a = alg("InflC2_1");
    for (const ModuleSpec& m : module_samples(a)) {
      const RatMatrix t = m.action * kron(*a.unit, RatMatrix::identity(m.dim));
      const MorphismReport r = check_module_morphism(a, m, m, t, ClassKind::vartheta);
      CHECK(r.morphism.holds());
      CHECK(r.in_class.holds());
    }
  }
  SUBCASE("a projection that does not intertwine") {
    const MorphismReport r =
        check_module_morphism(c2, reg, reg, RatMatrix::from_rows({{1, 0}, {0, 0}}));
    CHECK(r.morphism.fails());
    CHECK(r.morphism.witness);
  }
  SUBCASE("the identity of an inflated module is outside the class") {
    const AlgebraSpec a = alg("InflC2_1");
    const ModuleSpec m = regular(a);
    const MorphismReport r =
        check_module_morphism(a, m, m, RatMatrix::identity(3), ClassKind::vartheta);
    CHECK(r.morphism.holds());
    CHECK(r.in_class.fails());
  }
}

TEST_CASE("hom spaces agree with the entrywise oracle") {
  for (const auto& name : weak_algebras()) {
    CAPTURE(name);
    const AlgebraSpec a = alg(name);
    const auto samples = module_samples(a);
    for (std::size_t s = 0; s < samples.size(); ++s)
      for (std::size_t t = 0; t < samples.size(); ++t) {
        if (samples[s].dim * samples[t].dim > 36) continue;
        CAPTURE(s);
        CAPTURE(t);
        const auto basis = module_hom_basis(a, samples[s], samples[t]);
        CHECK(basis.size() == hom_dim_oracle(a, samples[s], samples[t]));
        for (const auto& h : basis)
          CHECK(check_module_morphism(a, samples[s], samples[t], h).morphism.holds());
      }
  }
  // End_A(A) is A itself acting by right multiplication
  CHECK(module_hom_basis(alg("C2"), regular(alg("C2")), regular(alg("C2"))).size() == 2);
  CHECK(module_hom_basis(alg("Mat2"), regular(alg("Mat2")), regular(alg("Mat2"))).size() == 4);
}

TEST_CASE("class morphisms form an ideal") {
  // h in the class, f and g arbitrary morphisms: f·h and h·g stay in the class
  for (const char* name : {"InflC2_1", "InflDual_2", "Zero(2)", "C2"}) {
    CAPTURE(name);
    const AlgebraSpec a = alg(name);
    const auto samples = module_samples(a);
    for (ClassKind cls : {ClassKind::vartheta, ClassKind::all}) {
      for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t t = 0; t < 3; ++t)
          for (std::size_t u = 0; u < 3; ++u) {
            const auto hs = module_hom_basis(a, samples[s], samples[t], cls);
            const auto fs = module_hom_basis(a, samples[t], samples[u]);
            const auto gs = module_hom_basis(a, samples[u], samples[s]);
            for (const auto& h : hs) {
              CHECK(check_module_morphism(a, samples[s], samples[t], h, cls).in_class.holds());
              for (const auto& f : fs)
                CHECK(check_module_morphism(a, samples[s], samples[u], f * h, cls)
                          .in_class.holds());
              for (const auto& g : gs)
                CHECK(check_module_morphism(a, samples[u], samples[t], h * g, cls)
                          .in_class.holds());
            }
          }
    }
  }
}

TEST_CASE("comodule hom spaces") {
  const AlgebraSpec c2 = alg("C2");
  CHECK(comodule_hom_basis(c2, coregular(c2), coregular(c2)).size() == 2);
  const AlgebraSpec a = alg("InflDual_2");
  const auto in_class = comodule_hom_basis(a, coregular(a), coregular(a), ClassKind::gamma);
  const auto all = comodule_hom_basis(a, coregular(a), coregular(a));
  CHECK(in_class.size() < all.size());
  for (const auto& h : in_class) {
    const MorphismReport r = check_comodule_morphism(a, coregular(a), coregular(a), h,
                                                     ClassKind::gamma);
    CHECK(r.morphism.holds());
    CHECK(r.in_class.holds());
  }
}

TEST_CASE("free modules") {
  const AlgebraSpec a = alg("InflC2_1");
  const ModuleSpec f = free_module(a, 2);
  CHECK(f.dim == 6);
  CHECK(check_module(a, f).law.holds());
  CHECK(check_module(a, f).compatible.holds());
  CHECK(iterated_free_module(a, 1, 2).dim == 9);
  CHECK(check_comodule(a, iterated_cofree_comodule(a, 1, 2)).law.holds());
  const BimoduleSpec b = free_bimodule(a, 1);
  CHECK(b.module_part() == free_module(a, 1));
  CHECK(b.comodule_part() == cofree_comodule(a, 1));
  AlgebraSpec no_mult = a;
  no_mult.mult.reset();
  CHECK_THROWS_AS(free_module(no_mult, 1), MissingData);
}

TEST_CASE("compatible modules are firm in their class") {
  for (const auto& name : weak_algebras()) {
    CAPTURE(name);
    const AlgebraSpec a = alg(name);
    for (const ModuleSpec& m : module_samples(a)) {
      CAPTURE(m.dim);
      REQUIRE(check_module(a, m).compatible.holds());
      const FirmReport r =
          verify_firm(a, m, ClassKind::vartheta, {iterated_free_module(a, m.dim, 2)});
      CHECK(r.structure_in_class);
      CHECK(r.members.size() == 3);
      CHECK(r.k_firm());
      CHECK(r.passes());
    }
  }
}

TEST_CASE("compatible comodules are cofirm in their class") {
  for (const auto& name : weak_algebras()) {
    CAPTURE(name);
    const AlgebraSpec a = alg(name);
    for (const ComoduleSpec& c : comodule_samples(a)) {
      CAPTURE(c.dim);
      REQUIRE(check_comodule(a, c).compatible.holds());
      const FirmReport r =
          verify_cofirm(a, c, ClassKind::gamma, {iterated_cofree_comodule(a, c.dim, 2)});
      CHECK(r.structure_in_class);
      CHECK(r.k_firm());
    }
  }
}

TEST_CASE("over a proper monad firm means unital") {
  const AlgebraSpec c2 = alg("C2");
  const ModuleSpec zero{1, RatMatrix(1, 2)};
  const FirmReport bad = verify_firm(c2, zero, ClassKind::all, {iterated_free_module(c2, 1, 2)});
  CHECK_FALSE(bad.passes());
  CHECK_FALSE(bad.members.front().ok());  // identity and ρ·η_B both lift the zero fork
  const FirmReport good =
      verify_firm(c2, regular(c2), ClassKind::all, {iterated_free_module(c2, 2, 2)});
  CHECK(good.passes());
  CHECK(good.epi);

  for (const char* name : {"C2", "C2n", "Dual", "Mat2n"}) {
    CAPTURE(name);
    const AlgebraSpec a = alg(name);
    for (const ModuleSpec& m : module_samples(a)) {
      const bool unital = check_module(a, m).unital.holds();
      CHECK(verify_firm(a, m, ClassKind::all).passes() == unital);
    }
  }
}

TEST_CASE("over a proper comonad cofirm means counital") {
  const AlgebraSpec c2 = alg("C2");
  CHECK(verify_cofirm(c2, coregular(c2), ClassKind::all).passes());
  CHECK_FALSE(verify_cofirm(c2, ComoduleSpec{1, RatMatrix(2, 1)}, ClassKind::all).passes());
  for (const char* name : {"C2", "C2n", "Dual", "Mat2n"}) {
    CAPTURE(name);
    const AlgebraSpec a = alg(name);
    for (const ComoduleSpec& c : comodule_samples(a)) {
      const bool counital = check_comodule(a, c).counital.holds();
      CHECK(verify_cofirm(a, c, ClassKind::all).passes() == counital);
    }
  }
}

TEST_CASE("degenerate firmness cases") {
  const AlgebraSpec c2 = alg("C2");
  CHECK(verify_firm(c2, ModuleSpec{0, RatMatrix(0, 0)}, ClassKind::all).passes());
  CHECK(verify_cofirm(c2, ComoduleSpec{0, RatMatrix(0, 0)}, ClassKind::all).passes());
  // the structure map of a module over a non-unital inflation is not surjective
  const AlgebraSpec a = alg("InflC2_1");
  const FirmReport r = verify_firm(a, regular(a), ClassKind::vartheta);
  CHECK(r.k_firm());
  CHECK_FALSE(r.epi);
  CHECK_FALSE(verify_firm(a, regular(a), ClassKind::all).passes());
}

TEST_CASE("bimodules in the theta class") {
  for (const char* name : {"C2", "C2n", "Dual", "InflC2_1"}) {
    CAPTURE(name);
    const AlgebraSpec a = alg(name);
    const BimoduleSpec bm = builtin(std::string("RegBimod(") + name + ")").as_bimodule();
    const FirmReport f = verify_firm(a, bm, ClassKind::theta);
    const FirmReport c = verify_cofirm(a, bm, ClassKind::theta);
    CHECK(f.members.size() == 2);
    CHECK(f.structure_in_class == (class_projector(a, ClassKind::theta, bm) * bm.action ==
                                   bm.action));
    CHECK(c.structure_in_class ==
          (class_projector(a, ClassKind::theta, free_bimodule(a, bm.dim)) * bm.coaction ==
           bm.coaction));
  }
}
