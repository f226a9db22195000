#include "wfm/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wfm/errors.hpp"

namespace wfm {

using nlohmann::json;

namespace {

RatMatrix eye(std::size_t n) { return RatMatrix::identity(n); }

// Structure constants c(i, j, k) for e_i·e_j = Σ_k c e_k.
template <typename F>
RatMatrix mult_from(std::size_t n, F c) {
  RatMatrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, i * n + j) = c(i, j, k);
  return m;
}

// d(i, j, k) for δ(e_i) = Σ d e_j ⊗ e_k.
template <typename F>
RatMatrix comult_from(std::size_t n, F d) {
  RatMatrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = d(i, j, k);
  return m;
}

AlgebraSpec c2(const Rational& comult_scale, const Rational& counit_scale) {
  AlgebraSpec a;
  a.dim = 2;
  // basis {1, g}: indices add mod 2
  a.mult = mult_from(2, [](auto i, auto j, auto k) { return Rational((i + j) % 2 == k ? 1 : 0); });
  a.unit = RatMatrix::column({1, 0});
  a.comult = comult_from(2, [&](auto i, auto j, auto k) {
    return (j + k) % 2 == i ? comult_scale : Rational(0);
  });
  a.counit = counit_scale * RatMatrix::row({1, 0});
  return a;
}

AlgebraSpec dual_numbers() {
  AlgebraSpec a;
  a.dim = 2;
  // basis {1, x}, x² = 0
  a.mult = mult_from(2, [](auto i, auto j, auto k) { return Rational(i + j == k ? 1 : 0); });
  a.unit = RatMatrix::column({1, 0});
  a.comult = comult_from(2, [](auto i, auto j, auto k) {
    if (i == 0) return Rational(j + k == 1 ? 1 : 0);
    return Rational(j == 1 && k == 1 ? 1 : 0);
  });
  a.counit = RatMatrix::row({0, 1});
  return a;
}

AlgebraSpec mat2(const Rational& comult_scale, const Rational& counit_scale) {
  AlgebraSpec a;
  a.dim = 4;
  // E_ij has index 2i + j
  auto row = [](std::size_t e) { return e / 2; };
  auto col = [](std::size_t e) { return e % 2; };
  a.mult = mult_from(4, [&](auto x, auto y, auto z) {
    return Rational(col(x) == row(y) && row(z) == row(x) && col(z) == col(y) ? 1 : 0);
  });
  a.unit = RatMatrix::column({1, 0, 0, 1});
  a.comult = comult_from(4, [&](auto x, auto y, auto z) {
    return row(y) == row(x) && col(y) == row(z) && col(z) == col(x) ? comult_scale : Rational(0);
  });
  a.counit = counit_scale * RatMatrix::row({1, 0, 0, 1});
  return a;
}

AlgebraSpec zero_algebra(std::size_t n) {
  AlgebraSpec a;
  a.dim = n;
  a.mult = RatMatrix(n, n * n);
  a.unit = RatMatrix(n, 1);
  a.comult = RatMatrix(n * n, n);
  a.counit = RatMatrix(1, n);
  return a;
}

PairingSpec self_c2() {
  const AlgebraSpec a = c2(1, 1);
  PairingSpec p;
  p.L = {2};
  p.R = {2};
  p.eta = *a.comult * *a.unit;   // δ(1)
  p.eps = *a.counit * *a.mult;   // x⊗y ↦ ε(xy)
  p.eta_t = p.eta;
  p.eps_t = p.eps;
  return p;
}

RatMatrix inclusion(std::size_t n, std::size_t k) {
  RatMatrix i(n + k, n);
  for (std::size_t r = 0; r < n; ++r) i(r, r) = 1;
  return i;
}

// Call syntax Head(arg, arg, ...) with nesting-aware argument splitting.
struct Call {
  std::string head;
  std::vector<std::string> args;
};

std::optional<Call> parse_call(std::string_view s) {
  const auto open = s.find('(');
  if (open == std::string_view::npos || s.empty() || s.back() != ')') return std::nullopt;
  Call c{std::string(s.substr(0, open)), {}};
  int depth = 0;
  std::string cur;
  for (std::size_t k = open + 1; k + 1 < s.size(); ++k) {
    const char ch = s[k];
    if (ch == '(') ++depth;
    if (ch == ')' && --depth < 0) return std::nullopt;
    if (ch == ',' && depth == 0) {
      c.args.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) return std::nullopt;
  c.args.push_back(cur);
  return c;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  if (s.empty() || s.size() > 3 || (s.size() > 1 && s[0] == '0')) return std::nullopt;
  std::size_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v;
}

const AlgebraSpec& algebra_arg(const CatalogEntry& e, std::string_view name) {
  if (e.kind() != EntryKind::algebra) throw UnknownName(std::string(name));
  return e.as_algebra();
}

CatalogEntry from_call(const Call& c, std::string_view name) {
  const std::string full(name);
  auto arity = [&](std::size_t k) {
    if (c.args.size() != k) throw UnknownName(full);
  };
  auto count = [&](const std::string& s) {
    const auto v = parse_count(s);
    if (!v) throw UnknownName(full);
    return *v;
  };

  if (c.head == "Zero") {
    arity(1);
    return {full, zero_algebra(count(c.args[0])), "all structure maps zero", ""};
  }
  if (c.head == "Scalar") {
    arity(2);
    const auto eta = parse_canonical_rational(c.args[0]);
    const auto eps = parse_canonical_rational(c.args[1]);
    if (!eta || !eps) throw UnknownName(full);
    PairingSpec p;
    p.L = {1};
    p.R = {1};
    p.eta = RatMatrix::column({*eta});
    p.eps = RatMatrix::row({*eps});
    return {full, p, "scalar pairing on one-dimensional carriers", ""};
  }

  const CatalogEntry base = builtin(c.args.empty() ? std::string_view{} : c.args[0]);
  const AlgebraSpec& a = algebra_arg(base, full);
  const std::size_t n = a.dim;
  if (c.head == "RegMod") {
    arity(1);
    if (!a.mult) throw UnknownName(full);
    return {full, ModuleSpec{n, *a.mult}, "regular module", base.name};
  }
  if (c.head == "CoregComod") {
    arity(1);
    if (!a.comult) throw UnknownName(full);
    return {full, ComoduleSpec{n, *a.comult}, "coregular comodule", base.name};
  }
  if (c.head == "RegBimod") {
    arity(1);
    if (!a.mult || !a.comult) throw UnknownName(full);
    return {full, BimoduleSpec{n, *a.mult, *a.comult}, "regular bimodule", base.name};
  }
  if (c.head == "ZeroMod") {
    arity(2);
    const std::size_t b = count(c.args[1]);
    return {full, ModuleSpec{b, RatMatrix(b, n * b)}, "zero action", base.name};
  }
  if (c.head == "ZeroComod") {
    arity(2);
    const std::size_t b = count(c.args[1]);
    return {full, ComoduleSpec{b, RatMatrix(n * b, b)}, "zero coaction", base.name};
  }
  if (c.head == "InflRegMod") {
    arity(2);
    if (!a.mult) throw UnknownName(full);
    return {full, inflate_module({n, *a.mult}, n, count(c.args[1])), "inflated regular module",
            base.name};
  }
  if (c.head == "InflCoregComod") {
    arity(2);
    if (!a.comult) throw UnknownName(full);
    return {full, inflate_comodule({n, *a.comult}, n, count(c.args[1])),
            "inflated coregular comodule", base.name};
  }
  throw UnknownName(full);
}

}  // namespace

const char* to_string(EntryKind k) {
  switch (k) {
    case EntryKind::algebra:
      return "algebra";
    case EntryKind::pairing:
      return "pairing";
    case EntryKind::module:
      return "module";
    case EntryKind::comodule:
      return "comodule";
    case EntryKind::bimodule:
      return "bimodule";
  }
  return "?";
}

namespace {

template <typename T>
const T& typed(const CatalogEntry& e, EntryKind want) {
  if (const T* p = std::get_if<T>(&e.payload)) return *p;
  throw SchemaError("kind", "entry '" + e.name + "' is a " + to_string(e.kind()) + ", expected " +
                                to_string(want));
}

}  // namespace

const AlgebraSpec& CatalogEntry::as_algebra() const {
  return typed<AlgebraSpec>(*this, EntryKind::algebra);
}
const PairingSpec& CatalogEntry::as_pairing() const {
  return typed<PairingSpec>(*this, EntryKind::pairing);
}
const ModuleSpec& CatalogEntry::as_module() const {
  return typed<ModuleSpec>(*this, EntryKind::module);
}
const ComoduleSpec& CatalogEntry::as_comodule() const {
  return typed<ComoduleSpec>(*this, EntryKind::comodule);
}
const BimoduleSpec& CatalogEntry::as_bimodule() const {
  return typed<BimoduleSpec>(*this, EntryKind::bimodule);
}

CatalogEntry builtin(std::string_view name) {
  if (name == "C2") return {"C2", c2(1, 1), "group algebra of the cyclic group of order 2", ""};
  if (name == "C2n")
    return {"C2n", c2(frac(1, 2), 2), "C2 with comultiplication halved and counit doubled", ""};
  if (name == "Dual") return {"Dual", dual_numbers(), "dual numbers k[x]/(x^2)", ""};
  if (name == "Mat2") return {"Mat2", mat2(1, 1), "2x2 matrix algebra with trace counit", ""};
  if (name == "Mat2n")
    return {"Mat2n", mat2(frac(1, 2), 2), "Mat2 with comultiplication halved and counit doubled",
            ""};
  if (name == "SelfC2") return {"SelfC2", self_c2(), "self-pairing of C2 through its Frobenius form", ""};

  if (auto call = parse_call(name)) return from_call(*call, name);

  if (name.starts_with("Infl")) {
    const auto us = name.rfind('_');
    if (us == std::string_view::npos || us <= 4) throw UnknownName(std::string(name));
    const auto k = parse_count(name.substr(us + 1));
    if (!k) throw UnknownName(std::string(name));
    const CatalogEntry base = builtin(name.substr(4, us - 4));
    algebra_arg(base, name);
    CatalogEntry out = inflate(base, *k);
    out.name = std::string(name);
    return out;
  }
  throw UnknownName(std::string(name));
}

bool is_builtin(std::string_view name) {
  try {
    builtin(name);
    return true;
  } catch (const UnknownName&) {
    return false;
  }
}

std::vector<std::string> builtin_names() {
  return {"C2",
          "C2n",
          "Dual",
          "Mat2",
          "Mat2n",
          "Zero(1)",
          "Zero(2)",
          "InflC2_1",
          "InflC2_2",
          "InflC2n_1",
          "InflDual_1",
          "InflDual_2",
          "InflMat2n_1",
          "SelfC2",
          "Scalar(1,1)",
          "Scalar(2,1)",
          "RegMod(C2)",
          "CoregComod(C2)",
          "RegBimod(C2)",
          "ZeroMod(C2,1)",
          "ZeroComod(C2,1)",
          "RegMod(InflC2_1)",
          "CoregComod(InflC2_1)",
          "InflRegMod(C2,1)",
          "InflCoregComod(C2,1)"};
}

AlgebraSpec inflate(const AlgebraSpec& a, std::size_t k) {
  a.validate();
  const std::size_t n = a.dim;
  const RatMatrix i = inclusion(n, k);
  const RatMatrix p = i.transpose();
  AlgebraSpec out;
  out.dim = n + k;
  if (a.mult) out.mult = i * *a.mult * kron(p, p);
  if (a.unit) out.unit = i * *a.unit;
  if (a.comult) out.comult = kron(i, i) * *a.comult * p;
  if (a.counit) out.counit = *a.counit * p;
  return out;
}

CatalogEntry inflate(const CatalogEntry& entry, std::size_t k) {
  return {"Infl" + entry.name + "_" + std::to_string(k), inflate(entry.as_algebra(), k),
          "inflate(" + entry.name + ", " + std::to_string(k) + ")", ""};
}

ModuleSpec inflate_module(const ModuleSpec& m, std::size_t n, std::size_t k) {
  const RatMatrix i = inclusion(m.dim, k);
  return {m.dim + k, i * m.action * kron(eye(n), i.transpose())};
}

ComoduleSpec inflate_comodule(const ComoduleSpec& c, std::size_t n, std::size_t k) {
  const RatMatrix i = inclusion(c.dim, k);
  return {c.dim + k, kron(eye(n), i) * c.coaction * i.transpose()};
}

// ---------------------------------------------------------------- JSON

namespace {

json rationals(std::span<const Rational> values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

json matrix_entries(const RatMatrix& m) { return rationals(m.entries()); }

// mult flattened as c[i][j][k] at (i·n + j)·n + k.
json mult_json(const RatMatrix& m, std::size_t n) {
  std::vector<Rational> flat(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) flat[(i * n + j) * n + k] = m(k, i * n + j);
  return rationals(flat);
}

// comult flattened as d[i][j][k] at (i·n + j)·n + k.
json comult_json(const RatMatrix& d, std::size_t n) {
  std::vector<Rational> flat(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) flat[(i * n + j) * n + k] = d(j * n + k, i);
  return rationals(flat);
}

json to_json(const CatalogEntry& e) {
  json j;
  j["kind"] = to_string(e.kind());
  j["name"] = e.name;
  if (!e.provenance.empty()) j["provenance"] = e.provenance;
  if (!e.algebra.empty()) j["algebra"] = e.algebra;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, AlgebraSpec>) {
          const std::size_t n = p.dim;
          j["dim"] = n;
          if (p.mult) j["mult"] = mult_json(*p.mult, n);
          if (p.unit) j["unit"] = matrix_entries(*p.unit);
          if (p.comult) j["comult"] = comult_json(*p.comult, n);
          if (p.counit) j["counit"] = matrix_entries(*p.counit);
        } else if constexpr (std::is_same_v<T, PairingSpec>) {
          j["l_dim"] = p.v();
          j["r_dim"] = p.w();
          j["eta"] = matrix_entries(p.eta);
          j["eps"] = matrix_entries(p.eps);
          if (p.eta_t) j["eta_t"] = matrix_entries(*p.eta_t);
          if (p.eps_t) j["eps_t"] = matrix_entries(*p.eps_t);
        } else if constexpr (std::is_same_v<T, ModuleSpec>) {
          j["dim"] = p.dim;
          j["algebra_dim"] = p.dim == 0 ? 0 : p.action.cols() / p.dim;
          j["action"] = matrix_entries(p.action);
        } else if constexpr (std::is_same_v<T, ComoduleSpec>) {
          j["dim"] = p.dim;
          j["algebra_dim"] = p.dim == 0 ? 0 : p.coaction.rows() / p.dim;
          j["coaction"] = matrix_entries(p.coaction);
        } else {
          j["dim"] = p.dim;
          j["algebra_dim"] = p.dim == 0 ? 0 : p.action.cols() / p.dim;
          j["action"] = matrix_entries(p.action);
          j["coaction"] = matrix_entries(p.coaction);
        }
      },
      e.payload);
  return j;
}

class Reader {
 public:
  explicit Reader(const json& j) : j_(j) {
    if (!j_.is_object()) throw SchemaError("(root)", "expected a JSON object");
  }

  bool has(const char* key) const { return j_.contains(key); }

  std::string string(const char* key, bool required = true) {
    seen_.insert(key);
    if (!j_.contains(key)) {
      if (required) throw SchemaError(key, "missing");
      return {};
    }
    if (!j_.at(key).is_string()) throw SchemaError(key, "expected a string");
    return j_.at(key).get<std::string>();
  }

  std::size_t count(const char* key) {
    seen_.insert(key);
    if (!j_.contains(key)) throw SchemaError(key, "missing");
    const json& v = j_.at(key);
    if (!v.is_number_unsigned()) throw SchemaError(key, "expected a non-negative integer");
    const auto n = v.get<std::uint64_t>();
    if (n > 4096) throw SchemaError(key, "dimension too large");
    return static_cast<std::size_t>(n);
  }

  std::optional<std::vector<Rational>> rationals(const char* key, std::size_t expected,
                                                 bool required) {
    seen_.insert(key);
    if (!j_.contains(key)) {
      if (required) throw SchemaError(key, "missing");
      return std::nullopt;
    }
    const json& arr = j_.at(key);
    if (!arr.is_array()) throw SchemaError(key, "expected an array of rational strings");
    if (arr.size() != expected)
      throw SchemaError(key, "expected " + std::to_string(expected) + " entries, found " +
                                 std::to_string(arr.size()));
    std::vector<Rational> out;
    out.reserve(expected);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string field = std::string(key) + "[" + std::to_string(k) + "]";
      if (!arr[k].is_string()) throw SchemaError(field, "expected a rational string");
      const std::string text = arr[k].get<std::string>();
      const auto value = parse_canonical_rational(text);
      if (!value) throw NonCanonicalRational(field, text);
      out.push_back(*value);
    }
    return out;
  }

  std::optional<RatMatrix> matrix(const char* key, std::size_t rows, std::size_t cols,
                                  bool required) {
    auto values = rationals(key, rows * cols, required);
    if (!values) return std::nullopt;
    return RatMatrix(rows, cols, std::move(*values));
  }

  void reject_unknown() const {
    for (const auto& [key, value] : j_.items())
      if (!seen_.contains(key)) throw SchemaError(key, "unknown field");
  }

 private:
  const json& j_;
  std::set<std::string> seen_;
};

RatMatrix mult_from_flat(const std::vector<Rational>& flat, std::size_t n) {
  RatMatrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, i * n + j) = flat[(i * n + j) * n + k];
  return m;
}

RatMatrix comult_from_flat(const std::vector<Rational>& flat, std::size_t n) {
  RatMatrix d(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d(j * n + k, i) = flat[(i * n + j) * n + k];
  return d;
}

CatalogEntry from_json(const json& j) {
  Reader r(j);
  CatalogEntry e;
  const std::string kind = r.string("kind");
  e.name = r.string("name");
  e.provenance = r.string("provenance", false);
  e.algebra = r.string("algebra", false);

  if (kind == "algebra") {
    AlgebraSpec a;
    const std::size_t n = a.dim = r.count("dim");
    if (auto v = r.rationals("mult", n * n * n, false)) a.mult = mult_from_flat(*v, n);
    a.unit = r.matrix("unit", n, 1, false);
    if (auto v = r.rationals("comult", n * n * n, false)) a.comult = comult_from_flat(*v, n);
    a.counit = r.matrix("counit", 1, n, false);
    e.payload = std::move(a);
  } else if (kind == "pairing") {
    PairingSpec p;
    const std::size_t v = r.count("l_dim"), w = r.count("r_dim");
    p.L = {v};
    p.R = {w};
    p.eta = *r.matrix("eta", w * v, 1, true);
    p.eps = *r.matrix("eps", 1, v * w, true);
    p.eta_t = r.matrix("eta_t", v * w, 1, false);
    p.eps_t = r.matrix("eps_t", 1, w * v, false);
    e.payload = std::move(p);
  } else if (kind == "module" || kind == "comodule" || kind == "bimodule") {
    const std::size_t b = r.count("dim");
    const std::size_t n = r.count("algebra_dim");
    if (kind == "module") {
      e.payload = ModuleSpec{b, *r.matrix("action", b, n * b, true)};
    } else if (kind == "comodule") {
      e.payload = ComoduleSpec{b, *r.matrix("coaction", n * b, b, true)};
    } else {
      RatMatrix action = *r.matrix("action", b, n * b, true);
      RatMatrix coaction = *r.matrix("coaction", n * b, b, true);
      e.payload = BimoduleSpec{b, std::move(action), std::move(coaction)};
    }
  } else {
    throw SchemaError("kind", "unknown kind '" + kind + "'");
  }
  r.reject_unknown();
  return e;
}

}  // namespace

std::string serialize(const CatalogEntry& entry) { return to_json(entry).dump(2) + "\n"; }

CatalogEntry parse_entry(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + static_cast<std::size_t>(
                              std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
    std::string reason = e.what();
    if (const auto pos = reason.find("parse error"); pos != std::string::npos)
      reason = reason.substr(pos);
    throw ParseError(line, reason);
  }
  return from_json(j);
}

CatalogEntry load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_entry(text.str());
}

void save(const CatalogEntry& entry, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize(entry);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace wfm
