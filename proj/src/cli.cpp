#include "wfm/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wfm/catalog.hpp"
#include "wfm/errors.hpp"
#include "wfm/frobenius.hpp"
#include "wfm/modcat.hpp"
#include "wfm/pairings.hpp"
#include "wfm/weakstruct.hpp"

namespace wfm::cli {

using nlohmann::json;

bool Report::any_failed() const {
  for (const auto& g : results)
    for (const auto& r : g.checks)
      if (r.status == Status::fails) return true;
  return false;
}

namespace {

// Bad command lines and unusable inputs; always exit 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string matrix_text(const RatMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ",";
      s += to_string(m(r, c));
    }
    s += "]";
  }
  return s + "]";
}

Result from_check(const AxiomCheck& c, bool verbose) {
  Result r{c.id, c.status, c.witness, {}, std::nullopt, std::nullopt};
  if (verbose && c.fails()) {
    r.lhs = c.lhs;
    r.rhs = c.rhs;
  }
  return r;
}

Result yes_no(std::string id, bool ok, std::string detail = {}) {
  return {std::move(id), ok ? Status::holds : Status::fails, std::nullopt, std::move(detail),
          std::nullopt, std::nullopt};
}

// Informational line, never counts as a failure.
Result info(std::string id, std::string detail) {
  return {std::move(id), Status::absent, std::nullopt, std::move(detail), std::nullopt,
          std::nullopt};
}

struct Context {
  Report rep;
  bool verbose = false;
  std::ostream& err;

  Group& group(std::string name) {
    rep.results.push_back({std::move(name), {}});
    return rep.results.back();
  }

  void add(Group& g, const AxiomCheck& c) const { g.checks.push_back(from_check(c, verbose)); }
  void add(Group& g, const std::vector<AxiomCheck>& cs) const {
    for (const auto& c : cs) add(g, c);
  }

  void note(std::string text) { rep.notes.push_back(std::move(text)); }

  CatalogEntry resolve(const std::string& name) {
    rep.inputs.push_back(name);
    if (is_builtin(name)) {
      std::error_code ec;
      if (std::filesystem::exists(name, ec)) {
        const std::string warning =
            "warning: builtin '" + name + "' shadows the file of the same name";
        err << warning << "\n";
        note(warning);
      }
      return builtin(name);
    }
    try {
      return load(name);
    } catch (const ParseError& e) {
      throw UsageError(name + ":" + std::to_string(e.line()) + ": " + e.what());
    } catch (const SchemaError& e) {
      throw UsageError(name + ": " + e.what());
    } catch (const NonCanonicalRational& e) {
      throw UsageError(name + ": " + e.what());
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  AlgebraSpec algebra(const std::string& name) {
    const CatalogEntry e = resolve(name);
    if (e.kind() != EntryKind::algebra)
      throw UsageError("'" + name + "' is a " + to_string(e.kind()) + ", expected an algebra");
    e.as_algebra().validate();
    return e.as_algebra();
  }

  void write(const CatalogEntry& entry, const std::string& path) {
    try {
      save(entry, path);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    note("wrote " + path);
  }
};

// ------------------------------------------------------------------ check

struct CheckArgs {
  std::string spec;
  bool monad = false, comonad = false, weak_monad = false, weak_comonad = false;
  bool frobenius = false, weak_frobenius = false, separability = false, all = false;
};

void cmd_check(Context& ctx, const CheckArgs& args) {
  const CatalogEntry entry = ctx.resolve(args.spec);
  if (entry.kind() == EntryKind::pairing)
    throw UsageError("'" + args.spec + "' is a pairing; use the pairing command");
  if (entry.kind() != EntryKind::algebra)
    throw UsageError("'" + args.spec + "' is a " + to_string(entry.kind()) +
                     "; check expects an algebra");
  const AlgebraSpec& a = entry.as_algebra();
  a.validate();

  const bool chosen = args.monad || args.comonad || args.weak_monad || args.weak_comonad ||
                      args.frobenius || args.weak_frobenius || args.separability;
  const bool all = args.all || !chosen;
  // Explicit requests need their data; --all skips what the input cannot answer.
  auto want = [&](bool flag, bool available, const std::string& what) {
    if (flag && !available) throw UsageError(what + " needs structure maps absent from the input");
    if (flag) return true;
    if (all && !available) ctx.note("skipped " + what + ": structure maps absent");
    return all && available;
  };

  const StructureReport st = classify(a);
  if (want(args.monad, a.has_monad_data(), "monad")) {
    Group& g = ctx.group("monad");
    ctx.add(g, {st.assoc, st.unit_left, st.unit_right});
  }
  if (want(args.weak_monad, a.has_monad_data(), "weak-monad")) {
    Group& g = ctx.group("weak-monad");
    ctx.add(g, {st.assoc, st.weak_unit, st.weak_mult, st.weak_balance});
    g.checks.push_back(yes_no("vartheta-idempotent", st.vartheta_idempotent.value_or(false),
                              matrix_text(st.vartheta->mat())));
  }
  if (want(args.comonad, a.has_comonad_data(), "comonad")) {
    Group& g = ctx.group("comonad");
    ctx.add(g, {st.coassoc, st.counit_left, st.counit_right});
  }
  if (want(args.weak_comonad, a.has_comonad_data(), "weak-comonad")) {
    Group& g = ctx.group("weak-comonad");
    ctx.add(g, {st.coassoc, st.weak_counit, st.weak_comult, st.weak_cobalance});
    g.checks.push_back(yes_no("gamma-idempotent", st.gamma_idempotent.value_or(false),
                              matrix_text(st.gamma->mat())));
  }
  std::optional<FrobeniusPropertyReport> fp;
  if (a.mult && a.comult) fp = check_frobenius_property(a);
  if (want(args.frobenius, fp.has_value(), "frobenius")) {
    Group& g = ctx.group("frobenius");
    ctx.add(g, {fp->left, fp->right});
  }
  if (want(args.weak_frobenius, a.complete(), "weak-frobenius")) {
    const WeakFrobeniusReport wf = check_weak_frobenius(a);
    Group& g = ctx.group("weak-frobenius");
    g.checks.push_back(yes_no("weak-monad", wf.structure.is_weak_monad()));
    g.checks.push_back(yes_no("weak-comonad", wf.structure.is_weak_comonad()));
    g.checks.push_back(yes_no("frobenius-property", wf.frobenius.holds()));
    ctx.add(g, wf.vartheta_gamma);
    g.checks.push_back(info("proper", wf.proper() ? "yes" : "no"));
  }
  if (want(args.separability, a.complete(), "separability")) {
    const bool frob = fp && fp->holds();
    const SeparabilityReport sr =
        separability_report(a, frob ? std::optional(canonical_bimodule(a, 1)) : std::nullopt);
    Group& g = ctx.group("separability");
    g.checks.push_back(info("theta", matrix_text(sr.theta)));
    g.checks.push_back(info("counit-unit", to_string(sr.counit_unit)));
    g.checks.push_back(info("separable", sr.separable ? "yes" : "no"));
    if (frob) {
      ctx.add(g, sr.theta_identities);
      ctx.add(g, sr.bimodule_checks);
    } else {
      ctx.note("separability: theta identities skipped, the Frobenius property fails");
    }
  }
}

// ------------------------------------------------------------------ split

struct SplitArgs {
  std::string spec;
  std::string out;
  std::string expect;
};

void add_proper_checks(Context& ctx, Group& g, const AlgebraSpec& a) {
  const StructureReport st = classify(a);
  if (a.has_monad_data()) ctx.add(g, {st.assoc, st.unit_left, st.unit_right});
  if (a.has_comonad_data()) ctx.add(g, {st.coassoc, st.counit_left, st.counit_right});
  if (a.mult && a.comult) {
    const FrobeniusPropertyReport fp = check_frobenius_property(a);
    ctx.add(g, {fp.left, fp.right});
  }
}

void cmd_split(Context& ctx, const SplitArgs& args) {
  const AlgebraSpec a = ctx.algebra(args.spec);
  const StructureReport st = classify(a);
  Group& g = ctx.group("split");
  std::optional<AlgebraSpec> split;
  if (a.complete() && check_weak_frobenius(a).holds()) {
    split = split_weak_frobenius(WeakFrobeniusSpec::make(a));
    g.checks.push_back(info("kind", "weak Frobenius monad"));
  } else if (a.has_monad_data() && st.is_weak_monad()) {
    split = split_weak_monad(a);
    g.checks.push_back(info("kind", "weak monad"));
  } else if (a.has_comonad_data() && st.is_weak_comonad()) {
    split = split_weak_comonad(a);
    g.checks.push_back(info("kind", "weak comonad"));
  }
  g.checks.push_back(yes_no("split", split.has_value(),
                            split ? "dim " + std::to_string(split->dim)
                                  : "neither a weak monad nor a weak comonad"));
  if (!split) return;

  add_proper_checks(ctx, ctx.group("split-result"), *split);
  if (!args.expect.empty()) {
    const AlgebraSpec expected = ctx.algebra(args.expect);
    ctx.rep.results.back().checks.push_back(yes_no("matches-expected", *split == expected));
  }
  ctx.write({"split(" + args.spec + ")", *split, "split of " + args.spec, ""}, args.out);
}

// ---------------------------------------------------------------- pairing

struct PairingArgs {
  std::string spec;
  bool regular = false, symmetric = false, frobenius_pair = false, induce_monad = false;
  bool induce_comonad = false, split = false, theta_lemma = false, lr_algebra = false;
  std::string out;
};

void cmd_pairing(Context& ctx, const PairingArgs& args) {
  const CatalogEntry entry = ctx.resolve(args.spec);
  if (entry.kind() != EntryKind::pairing)
    throw UsageError("'" + args.spec + "' is a " + to_string(entry.kind()) +
                     "; pairing expects a pairing");
  const PairingSpec& p = entry.as_pairing();
  p.validate();
  const bool tilde = p.eta_t && p.eps_t;

  const bool chosen = args.regular || args.symmetric || args.frobenius_pair ||
                      args.induce_monad || args.induce_comonad || args.split ||
                      args.theta_lemma || args.lr_algebra;
  if (!args.out.empty() && !args.split)
    throw UsageError("-o is only meaningful together with --split");
  auto want = [&](bool flag, bool available, const std::string& what) {
    if (flag && !available) throw UsageError(what + " needs eta_t and eps_t");
    if (flag) return true;
    if (!chosen && !available) ctx.note("skipped " + what + ": eta_t/eps_t absent");
    return !chosen && available;
  };

  const RegularityReport reg = check_regular(p);
  if (want(args.regular, true, "regular")) {
    Group& g = ctx.group("regular");
    ctx.add(g, {reg.unit_side, reg.counit_side});
    if (reg.regular()) ctx.add(ctx.group("regular-consequences"), check_consequences(p));
  }
  if (want(args.symmetric, true, "symmetric")) {
    const SymmetryReport sym = check_symmetry(p);
    ctx.add(ctx.group("symmetric"), {sym.beta, sym.alpha});
  }
  if (want(args.frobenius_pair, tilde, "frobenius-pair"))
    ctx.add(ctx.group("frobenius-pair"), check_frobenius_pair(p).checks);

  const bool monad = want(args.induce_monad, true, "induce-monad");
  const bool comonad = want(args.induce_comonad, true, "induce-comonad");
  if (monad) {
    Group& g = ctx.group("induce-monad");
    if (!reg.regular()) {
      g.checks.push_back(yes_no("induce-monad", false, "the pairing is not regular"));
    } else {
      const StructureReport st = classify_monad(induced_weak_monad(p));
      ctx.add(g, {st.assoc, st.weak_unit, st.weak_mult, st.weak_balance});
    }
  }
  if (comonad) {
    Group& g = ctx.group("induce-comonad");
    if (!reg.regular()) {
      g.checks.push_back(yes_no("induce-comonad", false, "the pairing is not regular"));
    } else {
      const StructureReport st = classify_comonad(induced_weak_comonad(p));
      ctx.add(g, {st.coassoc, st.weak_counit, st.weak_comult, st.weak_cobalance});
    }
  }
  if ((monad || comonad) && reg.regular())
    ctx.add(ctx.group("induced-identities"), check_induced_identities(p));

  if (want(args.split, true, "split")) {
    Group& g = ctx.group("split");
    if (!reg.regular()) {
      g.checks.push_back(yes_no("split", false, "the pairing is not regular"));
    } else {
      const PairingSpec adj = split_to_adjunction(p);
      g.checks.push_back(info("dims", std::to_string(adj.v()) + "x" + std::to_string(adj.w())));
      ctx.add(g, check_triangles(adj));
      if (!args.out.empty())
        ctx.write({"split(" + args.spec + ")", adj, "adjunction split from " + args.spec, ""},
                  args.out);
    }
  }
  if (want(args.theta_lemma, tilde, "theta-lemma")) {
    const ThetaLemmaReport tl = check_theta_lemma(p);
    Group& g = ctx.group("theta-lemma");
    g.checks.push_back(info("unit-hypothesis", tl.unit_hypothesis ? "holds" : "fails"));
    ctx.add(g, tl.unit_conclusion);
    g.checks.push_back(info("counit-hypothesis", tl.counit_hypothesis ? "holds" : "fails"));
    ctx.add(g, tl.counit_conclusion);
  }
  if (args.lr_algebra) {
    if (!tilde) throw UsageError("lr-algebra needs eta_t and eps_t");
    auto form = [&](const char* name, auto build) {
      Group& g = ctx.group(name);
      try {
        const AlgebraSpec lr = build(p);
        const StructureReport st = classify(lr);
        g.checks.push_back(info("dim", std::to_string(lr.dim)));
        if (lr.has_monad_data())
          ctx.add(g, {st.assoc, st.weak_unit, st.weak_mult, st.weak_balance});
        else
          ctx.add(g, st.assoc);
        if (lr.has_comonad_data())
          ctx.add(g, {st.coassoc, st.weak_counit, st.weak_comult, st.weak_cobalance});
        else
          ctx.add(g, st.coassoc);
        const FrobeniusPropertyReport fp = check_frobenius_property(lr);
        ctx.add(g, {fp.left, fp.right});
      } catch (const PreconditionFailed& e) {
        for (const auto& f : e.failures()) g.checks.push_back(yes_no("precondition", false, f));
      }
    };
    form("lr-algebra-counit-form", lr_algebra_counit_form);
    form("lr-algebra-unit-form", lr_algebra_unit_form);
  }
}

// --------------------------------------------------------------- complete

struct CompleteArgs {
  std::string alg;
  std::string sample;
  std::string out;
};

void report_completion(Context& ctx, const CompletionResult& done) {
  Group& g = ctx.group("completion");
  ctx.add(g, done.squares.squares());
  ctx.add(g, done.in_class);
  g.checks.push_back(yes_no("unique", done.uniqueness == FactorResult::Kind::unique));
  g.checks.push_back(yes_no("matches-solution", done.matches_solution));
}

void cmd_complete(Context& ctx, const CompleteArgs& args) {
  const AlgebraSpec a = ctx.algebra(args.alg);
  const CatalogEntry sample = ctx.resolve(args.sample);
  std::optional<CompletionResult> done;
  try {
    if (sample.kind() == EntryKind::module)
      done = complete_module(a, sample.as_module());
    else if (sample.kind() == EntryKind::comodule)
      done = complete_comodule(a, sample.as_comodule());
    else
      throw UsageError("'" + args.sample + "' is a " + to_string(sample.kind()) +
                       "; complete expects a module or comodule");
  } catch (const PreconditionFailed& e) {
    Group& g = ctx.group("preconditions");
    for (const auto& f : e.failures()) g.checks.push_back(yes_no("precondition", false, f));
    return;
  }
  report_completion(ctx, *done);
  ctx.write({"completed(" + args.alg + "," + args.sample + ")", done->bimodule,
             "completion of " + args.sample, args.alg},
            args.out);
}

// -------------------------------------------------------------- roundtrip

struct RoundtripArgs {
  std::string alg;
  std::vector<std::string> samples;
  bool corollaries = false;
};

void cmd_roundtrip(Context& ctx, const RoundtripArgs& args) {
  const AlgebraSpec a = ctx.algebra(args.alg);
  std::vector<ModuleSpec> modules;
  std::vector<ComoduleSpec> comodules;
  if (args.samples.empty()) {
    const std::size_t n = a.dim;
    if (a.mult) {
      modules.push_back({n, *a.mult});
      modules.push_back(inflate_module({n, *a.mult}, n, 1));
    }
    modules.push_back({0, RatMatrix(0, 0)});
    if (a.comult) {
      comodules.push_back({n, *a.comult});
      comodules.push_back(inflate_comodule({n, *a.comult}, n, 1));
    }
    comodules.push_back({0, RatMatrix(0, 0)});
    ctx.note("default samples: regular, inflated regular and zero-dimensional (co)modules");
  }
  for (const auto& name : args.samples) {
    const CatalogEntry e = ctx.resolve(name);
    if (e.kind() == EntryKind::module)
      modules.push_back(e.as_module());
    else if (e.kind() == EntryKind::comodule)
      comodules.push_back(e.as_comodule());
    else
      throw UsageError("'" + name + "' is a " + to_string(e.kind()) +
                       "; samples must be modules or comodules");
  }
  for (const auto& m : modules) validate(a, m);
  for (const auto& c : comodules) validate(a, c);

  std::optional<WeakFrobeniusSpec> wf;
  try {
    wf = WeakFrobeniusSpec::make(a);
  } catch (const PreconditionFailed& e) {
    Group& g = ctx.group("preconditions");
    for (const auto& f : e.failures()) g.checks.push_back(yes_no("precondition", false, f));
    return;
  }
  const RoundtripReport rt = roundtrip_isomorphism(*wf, modules, comodules);
  Group& g = ctx.group("roundtrip");
  for (const auto& item : rt.items) g.checks.push_back(yes_no(item.label, item.returned_exactly, item.error));
  Group& mg = ctx.group("morphisms");
  mg.checks.push_back(yes_no("transport", rt.morphism_failures.empty(),
                             std::to_string(rt.morphisms_checked) + " checked"));
  for (const auto& f : rt.morphism_failures) mg.checks.push_back(yes_no("transport", false, f));

  if (args.corollaries) {
    const CorollaryReport cr = corollary_checks(a, modules, comodules);
    Group& cg = ctx.group("corollaries");
    for (const auto& item : cr.items)
      cg.checks.push_back({item.id, item.status, std::nullopt, item.detail, std::nullopt,
                           std::nullopt});
  }
}

// ------------------------------------------------------------ firm/cofirm

struct FirmArgs {
  std::string alg;
  std::string sample;
  std::string cls;
  std::vector<std::string> family;
};

ClassKind class_kind(const std::string& s) {
  if (s == "vartheta") return ClassKind::vartheta;
  if (s == "gamma") return ClassKind::gamma;
  if (s == "theta") return ClassKind::theta;
  return ClassKind::all;
}

void report_firm(Context& ctx, Group& g, const FirmReport& fr, bool co) {
  g.checks.push_back(yes_no("structure-in-class", fr.structure_in_class));
  for (const auto& m : fr.members)
    g.checks.push_back(yes_no(m.label, m.ok(),
                              "dim " + std::to_string(m.dim) + ", forks " +
                                  std::to_string(m.forks) + ", lifts " +
                                  std::to_string(m.liftable) +
                                  (m.factors ? "" : ", some fork does not factor") +
                                  (m.unique ? "" : ", factorisation not unique")));
  g.checks.push_back(info(co ? "structure-map-injective" : "structure-map-surjective",
                          fr.epi ? "yes" : "no"));
  const std::string verdict = std::string(co ? "cofirm" : "firm") + "(" + to_string(fr.cls) + ")";
  g.checks.push_back(yes_no(verdict, fr.passes()));
  (void)ctx;
}

void cmd_firm(Context& ctx, const FirmArgs& args, bool co) {
  const AlgebraSpec a = ctx.algebra(args.alg);
  const CatalogEntry sample = ctx.resolve(args.sample);
  const ClassKind cls = class_kind(args.cls);
  std::vector<CatalogEntry> family;
  for (const auto& name : args.family) family.push_back(ctx.resolve(name));
  auto members = [&]<typename T>(EntryKind kind, T extra) {
    std::vector<T> out{std::move(extra)};
    for (const auto& e : family) {
      if (e.kind() != kind)
        throw UsageError("family member '" + e.name + "' is a " + to_string(e.kind()) +
                         ", expected a " + to_string(kind));
      out.push_back(std::get<T>(e.payload));
    }
    return out;
  };

  Group& g = ctx.group(co ? "cofirm" : "firm");
  if (!co && sample.kind() == EntryKind::module) {
    const ModuleSpec& m = sample.as_module();
    validate(a, m);
    const ModuleReport mr = check_module(a, m);
    ctx.add(g, mr.law);
    const FirmReport fr =
        verify_firm(a, m, cls, members(EntryKind::module, iterated_free_module(a, m.dim, 2)));
    report_firm(ctx, g, fr, co);
  } else if (co && sample.kind() == EntryKind::comodule) {
    const ComoduleSpec& c = sample.as_comodule();
    validate(a, c);
    ctx.add(g, check_comodule(a, c).law);
    const FirmReport fr = verify_cofirm(
        a, c, cls, members(EntryKind::comodule, iterated_cofree_comodule(a, c.dim, 2)));
    report_firm(ctx, g, fr, co);
  } else if (sample.kind() == EntryKind::bimodule) {
    const BimoduleSpec& bm = sample.as_bimodule();
    validate(a, bm);
    ctx.add(g, co ? check_comodule(a, bm.comodule_part()).law : check_module(a, bm.module_part()).law);
    const BimoduleSpec ff = iterated_free_bimodule(a, bm.dim, 2);
    const FirmReport fr = co ? verify_cofirm(a, bm, cls, members(EntryKind::bimodule, ff))
                             : verify_firm(a, bm, cls, members(EntryKind::bimodule, ff));
    report_firm(ctx, g, fr, co);
  } else {
    throw UsageError("'" + args.sample + "' is a " + to_string(sample.kind()) + "; " +
                     (co ? "cofirm expects a comodule" : "firm expects a module") +
                     " or bimodule");
  }
}

// ---------------------------------------------------------------- catalog

struct CatalogArgs {
  std::string action = "list";
  std::string name;
  std::string out;
};

// Returns text to print instead of the report, if any.
std::optional<std::string> cmd_catalog(Context& ctx, const CatalogArgs& args) {
  if (args.action == "list") {
    Group& g = ctx.group("catalog");
    for (const auto& name : builtin_names()) {
      const CatalogEntry e = builtin(name);
      g.checks.push_back(info(name, std::string(to_string(e.kind())) + ": " + e.provenance));
    }
    return std::nullopt;
  }
  if (args.name.empty()) throw UsageError("catalog emit needs a name");
  const CatalogEntry e = ctx.resolve(args.name);
  if (!args.out.empty()) {
    ctx.write(e, args.out);
    return std::nullopt;
  }
  return serialize(e);
}

// ------------------------------------------------------------- rendering

const char* tag(Status s) {
  switch (s) {
    case Status::holds:
      return "PASS";
    case Status::fails:
      return "FAIL";
    case Status::absent:
      return "--  ";
  }
  return "?";
}

void render(const Report& rep, std::ostream& out) {
  if (rep.command == "catalog" && rep.exit_code == 0) {
    for (const auto& g : rep.results)
      for (const auto& r : g.checks) out << r.id << "  " << r.detail << "\n";
    for (const auto& n : rep.notes) out << "note: " << n << "\n";
    return;
  }
  out << rep.command;
  for (const auto& in : rep.inputs) out << " " << in;
  out << "\n";
  std::size_t passed = 0, failed = 0;
  for (const auto& g : rep.results) {
    out << g.name << "\n";
    for (const auto& r : g.checks) {
      out << "  " << tag(r.status) << "  " << r.id;
      if (r.witness)
        out << "  at (" << r.witness->row << "," << r.witness->col
            << "): " << to_string(r.witness->lhs) << " vs " << to_string(r.witness->rhs);
      if (!r.detail.empty()) out << "  " << r.detail;
      out << "\n";
      if (r.lhs) out << "    lhs = " << matrix_text(*r.lhs) << "\n";
      if (r.rhs) out << "    rhs = " << matrix_text(*r.rhs) << "\n";
      passed += r.status == Status::holds;
      failed += r.status == Status::fails;
    }
  }
  for (const auto& n : rep.notes) out << "note: " << n << "\n";
  if (rep.exit_code == 2) return;
  out << (failed ? "FAIL" : "PASS") << ": " << passed << " passed, " << failed << " failed\n";
}

json matrix_json(const RatMatrix& m) {
  json entries = json::array();
  for (const auto& v : m.entries()) entries.push_back(to_string(v));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RatMatrix matrix_from(const json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  std::vector<Rational> entries;
  for (const auto& v : j.at("entries")) {
    const auto text = v.get<std::string>();
    const auto q = parse_canonical_rational(text);
    if (!q) throw NonCanonicalRational("entries", text);
    entries.push_back(*q);
  }
  if (entries.size() != rows * cols) throw SchemaError("entries", "wrong number of entries");
  return RatMatrix(rows, cols, std::move(entries));
}

Rational rational_from(const json& j, const char* field) {
  const auto text = j.get<std::string>();
  const auto q = parse_canonical_rational(text);
  if (!q) throw NonCanonicalRational(field, text);
  return *q;
}

Status status_from(const std::string& s) {
  if (s == "holds") return Status::holds;
  if (s == "fails") return Status::fails;
  if (s == "n/a") return Status::absent;
  throw SchemaError("status", "unknown status '" + s + "'");
}

}  // namespace

std::string to_json(const Report& r) {
  json groups = json::array();
  for (const auto& g : r.results) {
    json checks = json::array();
    for (const auto& c : g.checks) {
      json jc{{"id", c.id}, {"status", to_string(c.status)}};
      if (!c.detail.empty()) jc["detail"] = c.detail;
      if (c.witness)
        jc["witness"] = {{"row", c.witness->row},
                         {"col", c.witness->col},
                         {"lhs", to_string(c.witness->lhs)},
                         {"rhs", to_string(c.witness->rhs)}};
      if (c.lhs) jc["lhs"] = matrix_json(*c.lhs);
      if (c.rhs) jc["rhs"] = matrix_json(*c.rhs);
      checks.push_back(std::move(jc));
    }
    groups.push_back({{"name", g.name}, {"checks", std::move(checks)}});
  }
  const json j{{"command", r.command},
               {"inputs", r.inputs},
               {"results", std::move(groups)},
               {"notes", r.notes},
               {"exit_code", r.exit_code}};
  return j.dump(2) + "\n";
}

Report parse_report(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + static_cast<std::size_t>(std::count(
                              text.begin(), text.begin() + static_cast<long>(upto), '\n'));
    throw ParseError(line, "malformed report");
  }
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs").get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.exit_code = j.at("exit_code").get<int>();
    for (const auto& jg : j.at("results")) {
      Group g{jg.at("name").get<std::string>(), {}};
      for (const auto& jc : jg.at("checks")) {
        Result c;
        c.id = jc.at("id").get<std::string>();
        c.status = status_from(jc.at("status").get<std::string>());
        if (jc.contains("detail")) c.detail = jc.at("detail").get<std::string>();
        if (jc.contains("witness")) {
          const json& w = jc.at("witness");
          c.witness = Witness{w.at("row").get<std::size_t>(), w.at("col").get<std::size_t>(),
                              rational_from(w.at("lhs"), "witness.lhs"),
                              rational_from(w.at("rhs"), "witness.rhs")};
        }
        if (jc.contains("lhs")) c.lhs = matrix_from(jc.at("lhs"));
        if (jc.contains("rhs")) c.rhs = matrix_from(jc.at("rhs"));
        g.checks.push_back(std::move(c));
      }
      r.results.push_back(std::move(g));
    }
    return r;
  } catch (const json::exception& e) {
    throw SchemaError("report", e.what());
  }
}

Report run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for weak (co)monads, pairings and weak Frobenius monads.",
               "weakfrob"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_out = false, verbose = false;
  app.add_flag("--json", json_out, "Machine-readable report");
  app.add_flag("--verbose", verbose, "Include both sides of failing identities");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Classify an algebra");
  check->add_option("spec", check_args.spec, "Builtin name or JSON file")->required();
  check->add_flag("--monad", check_args.monad, "Proper monad axioms");
  check->add_flag("--comonad", check_args.comonad, "Proper comonad axioms");
  check->add_flag("--weak-monad", check_args.weak_monad, "Weak monad axioms");
  check->add_flag("--weak-comonad", check_args.weak_comonad, "Weak comonad axioms");
  check->add_flag("--frobenius", check_args.frobenius, "Frobenius property");
  check->add_flag("--weak-frobenius", check_args.weak_frobenius, "Weak Frobenius monad");
  check->add_flag("--separability", check_args.separability, "theta = m.delta and its identities");
  check->add_flag("--all", check_args.all, "Everything the input supports (default)");

  SplitArgs split_args;
  auto* split = app.add_subcommand("split", "Split the idempotent of a weak (co)monad");
  split->add_option("spec", split_args.spec)->required();
  split->add_option("-o,--output", split_args.out, "Where to write the split algebra")->required();
  split->add_option("--expect", split_args.expect, "Compare the result with this algebra");

  PairingArgs pairing_args;
  auto* pairing = app.add_subcommand("pairing", "Check a pairing of tensoring functors");
  pairing->add_option("spec", pairing_args.spec)->required();
  pairing->add_flag("--regular", pairing_args.regular);
  pairing->add_flag("--symmetric", pairing_args.symmetric);
  pairing->add_flag("--frobenius-pair", pairing_args.frobenius_pair);
  pairing->add_flag("--induce-monad", pairing_args.induce_monad);
  pairing->add_flag("--induce-comonad", pairing_args.induce_comonad);
  pairing->add_flag("--split", pairing_args.split);
  pairing->add_flag("--theta-lemma", pairing_args.theta_lemma);
  pairing->add_flag("--lr-algebra", pairing_args.lr_algebra);
  pairing->add_option("-o,--output", pairing_args.out, "Where to write the split adjunction");

  CompleteArgs complete_args;
  auto* complete = app.add_subcommand("complete", "Complete a module or comodule to a bimodule");
  complete->add_option("alg", complete_args.alg)->required();
  complete->add_option("sample", complete_args.sample)->required();
  complete->add_option("-o,--output", complete_args.out)->required();

  RoundtripArgs roundtrip_args;
  auto* roundtrip = app.add_subcommand("roundtrip", "Module/comodule round trips");
  roundtrip->add_option("alg", roundtrip_args.alg)->required();
  roundtrip->add_option("samples", roundtrip_args.samples);
  roundtrip->add_flag("--corollaries", roundtrip_args.corollaries,
                      "Also check the completion corollaries");

  FirmArgs firm_args, cofirm_args;
  auto* firm = app.add_subcommand("firm", "Firmness of a module within a class");
  firm->add_option("alg", firm_args.alg)->required();
  firm->add_option("module", firm_args.sample)->required();
  firm->add_option("--class", firm_args.cls)
      ->check(CLI::IsMember({"vartheta", "theta", "all"}))
      ->default_val("vartheta");
  firm->add_option("--family", firm_args.family, "Extra test objects");
  auto* cofirm = app.add_subcommand("cofirm", "Cofirmness of a comodule within a class");
  cofirm->add_option("alg", cofirm_args.alg)->required();
  cofirm->add_option("comodule", cofirm_args.sample)->required();
  cofirm->add_option("--class", cofirm_args.cls)
      ->check(CLI::IsMember({"gamma", "theta", "all"}))
      ->default_val("gamma");
  cofirm->add_option("--family", cofirm_args.family, "Extra test objects");

  CatalogArgs catalog_args;
  auto* catalog = app.add_subcommand("catalog", "List or emit builtin entries");
  catalog->add_option("action", catalog_args.action)
      ->check(CLI::IsMember({"list", "emit"}))
      ->default_val("list");
  catalog->add_option("name", catalog_args.name);
  catalog->add_option("-o,--output", catalog_args.out);

  Context ctx{{}, false, err};
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    ctx.rep.command = args.empty() ? "" : args.front();
    ctx.rep.exit_code = code == 0 ? 0 : 2;
    return ctx.rep;
  }
  ctx.verbose = verbose;

  std::optional<std::string> raw;
  try {
    if (check->parsed()) {
      ctx.rep.command = "check";
      cmd_check(ctx, check_args);
    } else if (split->parsed()) {
      ctx.rep.command = "split";
      cmd_split(ctx, split_args);
    } else if (pairing->parsed()) {
      ctx.rep.command = "pairing";
      cmd_pairing(ctx, pairing_args);
    } else if (complete->parsed()) {
      ctx.rep.command = "complete";
      cmd_complete(ctx, complete_args);
    } else if (roundtrip->parsed()) {
      ctx.rep.command = "roundtrip";
      cmd_roundtrip(ctx, roundtrip_args);
    } else if (firm->parsed()) {
      ctx.rep.command = "firm";
      cmd_firm(ctx, firm_args, false);
    } else if (cofirm->parsed()) {
      ctx.rep.command = "cofirm";
      cmd_firm(ctx, cofirm_args, true);
    } else if (catalog->parsed()) {
      ctx.rep.command = "catalog";
      raw = cmd_catalog(ctx, catalog_args);
    }
    ctx.rep.exit_code = ctx.rep.any_failed() ? 1 : 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    ctx.note(std::string("error: ") + e.what());
    ctx.rep.exit_code = 2;
  }

  if (raw)
    out << *raw;
  else if (json_out)
    out << to_json(ctx.rep);
  else
    render(ctx.rep, out);
  return ctx.rep;
}

}  // namespace wfm::cli
