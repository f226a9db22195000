#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "oracle.hpp"
#include "wfm/catalog.hpp"
#include "wfm/errors.hpp"
#include "wfm/frobenius.hpp"

using namespace wfm;

namespace {

AlgebraSpec alg(const char* name) { return builtin(name).as_algebra(); }

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("builtin algebras") {
  const AlgebraSpec c2 = alg("C2");
  CHECK(c2.dim == 2);
  CHECK(check_weak_frobenius(c2).proper());
  CHECK(c2.mult_nat().mat() * c2.comult_nat().mat() == Rational(2) * RatMatrix::identity(2));

  const AlgebraSpec c2n = alg("C2n");
  CHECK(*c2n.mult * *c2n.comult == RatMatrix::identity(2));
  CHECK(check_weak_frobenius(c2n).proper());

  // δ(g·g) = δ(1) = 1⊗1 + g⊗g
  CHECK(*c2.comult * RatMatrix::column({1, 0}) == RatMatrix::column({1, 0, 0, 1}));

  const AlgebraSpec mat2 = alg("Mat2");
  CHECK(mat2.dim == 4);
  CHECK(oracle::associative(mat2));
  CHECK(oracle::coassociative(mat2));
  CHECK(oracle::frobenius(mat2));

  for (const char* name : {"Zero(1)", "Zero(4)"}) {
    const AlgebraSpec z = alg(name);
    CHECK(*z.mult == RatMatrix(z.dim, z.dim * z.dim));
    CHECK(*z.counit == RatMatrix(1, z.dim));
  }
}

TEST_CASE("inflation") {
  for (const char* name : {"C2", "Dual", "Mat2n"}) {
    CAPTURE(name);
    CHECK(inflate(alg(name), 0) == alg(name));
  }
  const AlgebraSpec i = inflate(alg("C2"), 1);
  CHECK(i == alg("InflC2_1"));
  const StructureReport st = classify(i);
  CHECK(st.is_weak_monad());
  CHECK_FALSE(st.is_monad());
  CHECK(st.vartheta->mat() == RatMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  CHECK(split_weak_frobenius(WeakFrobeniusSpec::make(inflate(alg("Dual"), 2))) == alg("Dual"));

  const CatalogEntry e = inflate(builtin("C2"), 2);
  CHECK(e.as_algebra() == alg("InflC2_2"));

  const ModuleSpec m = inflate_module(ModuleSpec{2, *alg("C2").mult}, 2, 1);
  CHECK(m.dim == 3);
  CHECK(check_module(alg("C2"), m).law.holds());
  CHECK(m == builtin("InflRegMod(C2,1)").as_module());
}

TEST_CASE("builtin name grammar") {
  CHECK(is_builtin("Zero(3)"));
  CHECK(is_builtin("InflDual_3"));
  CHECK(is_builtin("RegMod(InflC2_1)"));
  CHECK(is_builtin("Scalar(-1/2,2)"));
  CHECK(is_builtin("ZeroMod(Mat2,2)"));
  for (const char* bad : {"", "c2", "Zero()", "Zero(01)", "Zero(1000)", "InflC2_", "InflC2_01",
                          "RegMod(C2", "RegMod(C2))", "RegMod(SelfC2)", "Scalar(2/4,1)",
                          "Scalar(1)", "ZeroMod(C2)", "C2 ", "Infl_1", "InflFoo_1"}) {
    CAPTURE(bad);
    CHECK_FALSE(is_builtin(bad));
    CHECK_THROWS_AS(builtin(bad), UnknownName);
  }
  CHECK_THROWS_AS(builtin("SelfC2").as_algebra(), SchemaError);
}

TEST_CASE("every builtin round-trips through its serialization") {
  const auto names = builtin_names();
  CHECK(names.size() == 25);
  for (const std::string& name : names) {
    CAPTURE(name);
    const CatalogEntry e = builtin(name);
    CHECK(e.name == name);
    const std::string text = serialize(e);
    CHECK(text.back() == '\n');
    const CatalogEntry back = parse_entry(text);
    CHECK(back == e);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("parse errors carry their location") {
  SUBCASE("malformed JSON") {
    const std::string text = "{\n  \"kind\": \"algebra\",\n  \"dim\": 2,,\n}\n";
    try {
      parse_entry(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("non-canonical rational") {
    const std::string text = replace_once(serialize(builtin("Dual")), "\"1\"", "\"3/3\"");
    try {
      parse_entry(text);
      FAIL("expected NonCanonicalRational");
    } catch (const NonCanonicalRational& e) {
      CHECK(e.field().rfind("comult[", 0) == 0);
    }
  }
  SUBCASE("reducible fraction names its field") {
    nlohmann::json j = nlohmann::json::parse(serialize(builtin("C2")));
    j["mult"][3] = "3/6";
    try {
      parse_entry(j.dump(2));
      FAIL("expected NonCanonicalRational");
    } catch (const NonCanonicalRational& e) {
      CHECK(e.field() == "mult[3]");
    }
  }
  SUBCASE("wrong array length") {
    const std::string text = replace_once(serialize(builtin("C2")), "\"counit\": [\n    \"1\",",
                                          "\"counit\": [");
    try {
      parse_entry(text);
      FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
      CHECK(e.field() == "counit");
    }
  }
  SUBCASE("unknown field") {
    const std::string text =
        replace_once(serialize(builtin("C2")), "\"dim\": 2,", "\"dim\": 2,\n  \"extra\": 1,");
    try {
      parse_entry(text);
      FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
      CHECK(e.field() == "extra");
    }
  }
  SUBCASE("unknown kind") {
    const std::string text =
        replace_once(serialize(builtin("C2")), "\"algebra\"", "\"coalgebra\"");
    CHECK_THROWS_AS(parse_entry(text), SchemaError);
  }
  SUBCASE("wrong type") {
    const std::string text =
        replace_once(serialize(builtin("C2")), "\"dim\": 2", "\"dim\": \"2\"");
    CHECK_THROWS_AS(parse_entry(text), SchemaError);
  }
}

TEST_CASE("absent structure maps are kept absent") {
  const std::string text =
      "{\"kind\": \"algebra\", \"name\": \"half\", \"dim\": 1, \"comult\": [\"1\"], "
      "\"counit\": [\"1\"]}";
  const CatalogEntry e = parse_entry(text);
  const AlgebraSpec& a = e.as_algebra();
  CHECK_FALSE(a.mult);
  CHECK_FALSE(a.unit);
  const StructureReport st = classify(a);
  CHECK(st.assoc.absent());
  CHECK(st.is_comonad());
  CHECK(serialize(e).find("\"mult\"") == std::string::npos);
}

TEST_CASE("save and load") {
  const auto dir = std::filesystem::temp_directory_path() / "weakfrob_catalog_test";
  std::filesystem::create_directories(dir);
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    const auto path = dir / "entry.json";
    save(builtin(name), path);
    CHECK(load(path) == builtin(name));
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == serialize(builtin(name)));
  }
  CHECK_THROWS_AS(load(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir);
}
