#include "wfm/frobenius.hpp"

#include "wfm/errors.hpp"

namespace wfm {

namespace {

RatMatrix eye(std::size_t n) { return RatMatrix::identity(n); }

const RatMatrix& need(const std::optional<RatMatrix>& m, const char* what) {
  if (!m) throw MissingData(std::string(what) + " is absent");
  return *m;
}

void need_all(const AlgebraSpec& a) {
  need(a.mult, "mult");
  need(a.unit, "unit");
  need(a.comult, "comult");
  need(a.counit, "counit");
}

bool all_hold(const std::vector<AxiomCheck>& checks) {
  for (const auto& c : checks)
    if (!c.holds()) return false;
  return true;
}

}  // namespace

FrobeniusPropertyReport check_frobenius_property(const AlgebraSpec& a) {
  a.validate();
  const RatMatrix& m = need(a.mult, "mult");
  const RatMatrix& d = need(a.comult, "comult");
  const RatMatrix id = eye(a.dim);
  const RatMatrix dm = d * m;
  return {compare("frobenius-left", dm, kron(id, m) * kron(d, id)),
          compare("frobenius-right", dm, kron(m, id) * kron(id, d))};
}

bool BimoduleReport::holds() const { return all_hold(squares()); }

std::vector<AxiomCheck> BimoduleReport::squares() const {
  return {module_law, frobenius_mult, frobenius_comult, comodule_law};
}

BimoduleReport check_frobenius_bimodule(const AlgebraSpec& a, const BimoduleSpec& bm) {
  validate(a, bm);
  const RatMatrix ib = eye(bm.dim), in = eye(a.dim);
  const RatMatrix m_b = kron(need(a.mult, "mult"), ib);
  const RatMatrix d_b = kron(need(a.comult, "comult"), ib);
  const RatMatrix& rho = bm.action;
  const RatMatrix& omega = bm.coaction;
  const RatMatrix f_rho = kron(in, rho);
  const RatMatrix f_omega = kron(in, omega);
  const RatMatrix omega_rho = omega * rho;
  return {compare("square-I", rho * f_rho, rho * m_b),
          compare("square-II", omega_rho, m_b * f_omega),
          compare("square-III", omega_rho, f_rho * d_b),
          compare("square-IV", f_omega * omega, d_b * omega)};
}

BimoduleSpec canonical_bimodule(const AlgebraSpec& a, std::size_t b) {
  if (!check_frobenius_property(a).holds())
    throw FrobeniusRequired("canonical_bimodule: the Frobenius property fails");
  return free_bimodule(a, b);
}

SeparabilityReport separability_report(const AlgebraSpec& a, const std::optional<BimoduleSpec>& bm) {
  a.validate();
  need_all(a);
  const RatMatrix& m = *a.mult;
  const RatMatrix& d = *a.comult;
  const RatMatrix id = eye(a.dim);
  SeparabilityReport rep{m * d, (*a.counit * *a.unit)(0, 0), false, {}, false, false, {}};
  const RatMatrix& theta = rep.theta;
  rep.separable = theta == id;

  const RatMatrix d_theta = d * theta;
  const RatMatrix theta_m = theta * m;
  rep.theta_identities = {
      compare("delta-theta-F-theta", d_theta, kron(id, theta) * d),
      compare("delta-theta-theta-F", d_theta, kron(theta, id) * d),
      compare("theta-m-m-theta-F", theta_m, m * kron(theta, id)),
      compare("theta-m-m-F-theta", theta_m, m * kron(id, theta)),
  };
  rep.delta_absorbs_theta = d_theta == d;
  rep.theta_absorbs_mult = theta_m == m;

  if (bm) {
    validate(a, *bm);
    const RatMatrix& rho = bm->action;
    const RatMatrix& omega = bm->coaction;
    const RatMatrix theta_b = kron(theta, eye(bm->dim));
    const RatMatrix ror = rho * omega * rho;
    const RatMatrix oro = omega * rho * omega;
    rep.bimodule_checks.push_back(compare("rho-omega-rho", ror, rho * theta_b));
    rep.bimodule_checks.push_back(compare("omega-rho-omega", oro, theta_b * omega));
    if (rep.separable) {
      rep.bimodule_checks.push_back(compare("rho-omega-rho-separable", ror, rho));
      rep.bimodule_checks.push_back(compare("omega-rho-omega-separable", oro, omega));
    }
    if (rep.delta_absorbs_theta || rep.theta_absorbs_mult) {
      const RatMatrix e = omega * rho;
      rep.bimodule_checks.push_back(compare("omega-rho-idempotent", e * e, e));
    }
  }
  return rep;
}

CompletionResult complete_comodule(const AlgebraSpec& a, const ComoduleSpec& c) {
  a.validate();
  std::vector<std::string> failures;
  if (!a.mult) failures.push_back("mult absent");
  if (!a.comult || !a.counit) failures.push_back("comult or counit absent");
  if (!failures.empty()) throw PreconditionFailed(failures);
  validate(a, c);

  if (!classify_comonad(a).is_weak_comonad()) failures.push_back("not a weak comonad");
  if (!check_frobenius_property(a).holds()) failures.push_back("Frobenius property fails");
  const RatMatrix gamma = gamma_matrix(a);
  if (gamma * *a.mult != *a.mult) failures.push_back("m differs from gamma·m");
  const ComoduleReport cr = check_comodule(a, c);
  if (!cr.law.holds()) failures.push_back("not a comodule");
  if (!cr.compatible.holds()) failures.push_back("comodule not compatible");
  if (!failures.empty()) throw PreconditionFailed(failures);

  const std::size_t n = a.dim, b = c.dim;
  const RatMatrix ib = eye(b);
  const RatMatrix& omega = c.coaction;
  const RatMatrix m_b = kron(*a.mult, ib);
  const RatMatrix d_b = kron(*a.comult, ib);
  const RatMatrix rho = kron(*a.counit, ib) * m_b * kron(eye(n), omega);
  const RatMatrix proj = kron(*a.counit, ib) * omega;

  CompletionResult out{{b, rho, omega}, {}, compare("gamma-compatible", proj * rho, rho),
                       FactorResult::Kind::no_solution, false};
  out.squares = check_frobenius_bimodule(a, out.bimodule);

  LinearConstraints lc(b, n * b);
  constrain_comodule_morphism(lc, n, d_b, omega);
  constrain_class(lc, proj);
  const FactorResult f = factor_through_left(omega, m_b * kron(eye(n), omega), lc);
  out.uniqueness = f.kind;
  out.matches_solution = f.kind == FactorResult::Kind::unique && f.q == rho;
  return out;
}

CompletionResult complete_module(const AlgebraSpec& a, const ModuleSpec& m) {
  a.validate();
  std::vector<std::string> failures;
  if (!a.mult || !a.unit) failures.push_back("mult or unit absent");
  if (!a.comult) failures.push_back("comult absent");
  if (!failures.empty()) throw PreconditionFailed(failures);
  validate(a, m);

  if (!classify_monad(a).is_weak_monad()) failures.push_back("not a weak monad");
  if (!check_frobenius_property(a).holds()) failures.push_back("Frobenius property fails");
  const RatMatrix vartheta = vartheta_matrix(a);
  if (*a.comult * vartheta != *a.comult) failures.push_back("delta differs from delta·vartheta");
  const ModuleReport mr = check_module(a, m);
  if (!mr.law.holds()) failures.push_back("not a module");
  if (!mr.compatible.holds()) failures.push_back("module not compatible");
  if (!failures.empty()) throw PreconditionFailed(failures);

  const std::size_t n = a.dim, b = m.dim;
  const RatMatrix ib = eye(b);
  const RatMatrix& rho = m.action;
  const RatMatrix m_b = kron(*a.mult, ib);
  const RatMatrix d_b = kron(*a.comult, ib);
  const RatMatrix f_rho = kron(eye(n), rho);
  const RatMatrix omega = f_rho * d_b * kron(*a.unit, ib);
  const RatMatrix proj = m_b * kron(*a.unit, eye(n * b));

  CompletionResult out{{b, rho, omega}, {}, compare("vartheta-compatible", proj * omega, omega),
                       FactorResult::Kind::no_solution, false};
  out.squares = check_frobenius_bimodule(a, out.bimodule);

  LinearConstraints lc(n * b, b);
  constrain_module_morphism(lc, n, rho, m_b);
  constrain_class(lc, proj);
  const FactorResult f = factor_through(rho, f_rho * d_b, lc);
  out.uniqueness = f.kind;
  out.matches_solution = f.kind == FactorResult::Kind::unique && f.q == omega;
  return out;
}

WeakFrobeniusReport check_weak_frobenius(const AlgebraSpec& a) {
  a.validate();
  need_all(a);
  WeakFrobeniusReport rep{classify(a), check_frobenius_property(a), absent_check("vartheta-gamma")};
  rep.vartheta_gamma = compare("vartheta-gamma", vartheta_matrix(a), gamma_matrix(a));
  return rep;
}

WeakFrobeniusSpec WeakFrobeniusSpec::make(AlgebraSpec a) {
  std::vector<std::string> failures;
  try {
    const WeakFrobeniusReport rep = check_weak_frobenius(a);
    if (!rep.structure.is_weak_monad()) failures.push_back("not a weak monad");
    if (!rep.structure.is_weak_comonad()) failures.push_back("not a weak comonad");
    if (!rep.frobenius.holds()) failures.push_back("Frobenius property fails");
    if (!rep.vartheta_gamma.holds()) failures.push_back("vartheta differs from gamma");
  } catch (const MissingData& e) {
    failures.push_back(e.what());
  }
  if (!failures.empty()) throw PreconditionFailed(failures);
  return WeakFrobeniusSpec(std::move(a));
}

AlgebraSpec split_weak_frobenius(const WeakFrobeniusSpec& wf) {
  const AlgebraSpec& a = wf.alg();
  const SplitPair s = split_idempotent(vartheta_matrix(a));
  AlgebraSpec out;
  out.dim = s.rank;
  out.mult = s.p * *a.mult * kron(s.i, s.i);
  out.unit = s.p * *a.unit;
  out.comult = kron(s.p, s.p) * *a.comult * s.i;
  out.counit = *a.counit * s.i;
  return out;
}

bool RoundtripReport::ok() const {
  for (const auto& item : items)
    if (!item.returned_exactly) return false;
  return morphism_failures.empty();
}

RoundtripReport roundtrip_isomorphism(const WeakFrobeniusSpec& wf,
                                      const std::vector<ModuleSpec>& modules,
                                      const std::vector<ComoduleSpec>& comodules) {
  const AlgebraSpec& a = wf.alg();
  RoundtripReport rep;
  std::vector<std::optional<BimoduleSpec>> from_modules, from_comodules;

  for (std::size_t k = 0; k < modules.size(); ++k) {
    RoundtripItem item{"module[" + std::to_string(k) + "]", false, {}};
    try {
      const CompletionResult there = complete_module(a, modules[k]);
      const CompletionResult back = complete_comodule(a, there.bimodule.comodule_part());
      item.returned_exactly = back.bimodule.action == modules[k].action;
      from_modules.push_back(there.bimodule);
    } catch (const PreconditionFailed& e) {
      item.error = e.what();
      from_modules.push_back(std::nullopt);
    }
    rep.items.push_back(std::move(item));
  }
  for (std::size_t k = 0; k < comodules.size(); ++k) {
    RoundtripItem item{"comodule[" + std::to_string(k) + "]", false, {}};
    try {
      const CompletionResult there = complete_comodule(a, comodules[k]);
      const CompletionResult back = complete_module(a, there.bimodule.module_part());
      item.returned_exactly = back.bimodule.coaction == comodules[k].coaction;
      from_comodules.push_back(there.bimodule);
    } catch (const PreconditionFailed& e) {
      item.error = e.what();
      from_comodules.push_back(std::nullopt);
    }
    rep.items.push_back(std::move(item));
  }

  for (std::size_t i = 0; i < modules.size(); ++i) {
    for (std::size_t j = 0; j < modules.size(); ++j) {
      if (!from_modules[i] || !from_modules[j]) continue;
      const auto basis = module_hom_basis(a, modules[i], modules[j]);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        ++rep.morphisms_checked;
        if (!check_bimodule_morphism(a, *from_modules[i], *from_modules[j], basis[k]).morphism.holds())
          rep.morphism_failures.push_back("module[" + std::to_string(i) + "]->module[" +
                                          std::to_string(j) + "] basis " + std::to_string(k));
      }
    }
  }
  for (std::size_t i = 0; i < comodules.size(); ++i) {
    for (std::size_t j = 0; j < comodules.size(); ++j) {
      if (!from_comodules[i] || !from_comodules[j]) continue;
      const auto basis = comodule_hom_basis(a, comodules[i], comodules[j]);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        ++rep.morphisms_checked;
        if (!check_bimodule_morphism(a, *from_comodules[i], *from_comodules[j], basis[k])
                 .morphism.holds())
          rep.morphism_failures.push_back("comodule[" + std::to_string(i) + "]->comodule[" +
                                          std::to_string(j) + "] basis " + std::to_string(k));
      }
    }
  }
  return rep;
}

bool CorollaryReport::ok() const {
  for (const auto& item : items)
    if (item.status == Status::fails) return false;
  return true;
}

namespace {

CorollaryItem item(std::string id, bool ok, std::string detail = {}) {
  return {std::move(id), ok ? Status::holds : Status::fails, std::move(detail)};
}

CorollaryItem not_applicable(std::string id, std::string why) {
  return {std::move(id), Status::absent, std::move(why)};
}

}  // namespace

CorollaryReport corollary_checks(const AlgebraSpec& a, const std::vector<ModuleSpec>& modules,
                                 const std::vector<ComoduleSpec>& comodules) {
  a.validate();
  CorollaryReport rep;
  const StructureReport st = classify(a);
  const bool frob = a.mult && a.comult && check_frobenius_property(a).holds();
  const bool comonad = a.comult && a.counit && st.is_comonad();
  const bool monad = a.mult && a.unit && st.is_monad();
  const bool separable = a.mult && a.comult && theta_matrix(a) == eye(a.dim);

  for (std::size_t k = 0; k < comodules.size(); ++k) {
    const std::string tag = "[comodule " + std::to_string(k) + "]";
    if (!frob || !comonad) {
      rep.items.push_back(not_applicable("counital-completion" + tag,
                                         "needs the Frobenius property and a comonad"));
      continue;
    }
    if (!check_comodule(a, comodules[k]).counital.holds()) {
      rep.items.push_back(not_applicable("counital-completion" + tag, "sample not counital"));
      continue;
    }
    const CompletionResult done = complete_comodule(a, comodules[k]);
    rep.items.push_back(item("counital-completion" + tag, done.squares.holds()));
    if (monad)
      rep.items.push_back(item("completion-unital" + tag,
                               check_module(a, done.bimodule.module_part()).unital.holds()));
    else
      rep.items.push_back(not_applicable("completion-unital" + tag, "no unit"));
    if (separable)
      rep.items.push_back(
          item("completion-firm" + tag,
               verify_firm(a, done.bimodule.module_part(), ClassKind::all).firm()));
    else
      rep.items.push_back(not_applicable("completion-firm" + tag, "m·delta is not the identity"));
  }

  for (std::size_t k = 0; k < modules.size(); ++k) {
    const std::string tag = "[module " + std::to_string(k) + "]";
    if (!frob || !monad) {
      rep.items.push_back(not_applicable("unital-completion" + tag,
                                         "needs the Frobenius property and a monad"));
      continue;
    }
    if (!check_module(a, modules[k]).unital.holds()) {
      rep.items.push_back(not_applicable("unital-completion" + tag, "sample not unital"));
      continue;
    }
    const CompletionResult done = complete_module(a, modules[k]);
    rep.items.push_back(item("unital-completion" + tag, done.squares.holds()));
    if (comonad)
      rep.items.push_back(item("completion-counital" + tag,
                               check_comodule(a, done.bimodule.comodule_part()).counital.holds()));
    else
      rep.items.push_back(not_applicable("completion-counital" + tag, "no counit"));
    if (separable)
      rep.items.push_back(
          item("completion-cofirm" + tag,
               verify_cofirm(a, done.bimodule.comodule_part(), ClassKind::all).firm()));
    else
      rep.items.push_back(
          not_applicable("completion-cofirm" + tag, "m·delta is not the identity"));
  }

  if (frob && monad && comonad) {
    std::vector<ModuleSpec> unital;
    std::vector<ComoduleSpec> counital;
    for (const auto& m : modules)
      if (check_module(a, m).unital.holds()) unital.push_back(m);
    for (const auto& c : comodules)
      if (check_comodule(a, c).counital.holds()) counital.push_back(c);
    const RoundtripReport rt = roundtrip_isomorphism(WeakFrobeniusSpec::make(a), unital, counital);
    rep.items.push_back(item("frobenius-roundtrip", rt.ok(),
                             std::to_string(rt.items.size()) + " samples, " +
                                 std::to_string(rt.morphisms_checked) + " morphisms"));
  } else {
    rep.items.push_back(not_applicable("frobenius-roundtrip", "not a Frobenius monad"));
  }
  return rep;
}

}  // namespace wfm
