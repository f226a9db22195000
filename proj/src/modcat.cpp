#include "wfm/modcat.hpp"

#include <optional>

#include "wfm/errors.hpp"
#include "wfm/linear_system.hpp"

namespace wfm {

namespace {

const RatMatrix& need(const std::optional<RatMatrix>& m, const char* what) {
  if (!m) throw MissingData(std::string(what) + " is absent");
  return *m;
}

RatMatrix eye(std::size_t n) { return RatMatrix::identity(n); }

// An object with whatever structure it carries.
struct Structured {
  std::size_t dim = 0;
  std::optional<RatMatrix> action;
  std::optional<RatMatrix> coaction;
  std::string label;
};

Structured of(const ModuleSpec& m, std::string label = {}) {
  return {m.dim, m.action, std::nullopt, std::move(label)};
}
Structured of(const ComoduleSpec& c, std::string label = {}) {
  return {c.dim, std::nullopt, c.coaction, std::move(label)};
}
Structured of(const BimoduleSpec& bm, std::string label = {}) {
  return {bm.dim, bm.action, bm.coaction, std::move(label)};
}

RatMatrix projector(const AlgebraSpec& a, ClassKind k, const Structured& s) {
  const RatMatrix id = eye(s.dim);
  switch (k) {
    case ClassKind::all:
      return id;
    case ClassKind::vartheta:
      return need(s.action, "action") * kron(need(a.unit, "unit"), id);
    case ClassKind::gamma:
      return kron(need(a.counit, "counit"), id) * need(s.coaction, "coaction");
    case ClassKind::theta:
      return need(s.action, "action") * need(s.coaction, "coaction");
  }
  return id;
}

}  // namespace

// h : src → dst with h·ρ_src = ρ_dst·(I_n ⊗ h); unknown shaped dst.dim × src.dim.
void constrain_module_morphism(LinearConstraints& lc, std::size_t n, const RatMatrix& src_action,
                               const RatMatrix& dst_action) {
  lc.add_homogeneous({{eye(dst_action.rows()), src_action},
                      {-dst_action, eye(src_action.cols()), Placement::left_identity, n}});
}

// (I_n ⊗ h)·ω_src = ω_dst·h.
void constrain_comodule_morphism(LinearConstraints& lc, std::size_t n,
                                 const RatMatrix& src_coaction, const RatMatrix& dst_coaction) {
  lc.add_homogeneous({{eye(dst_coaction.rows()), src_coaction, Placement::left_identity, n},
                      {-dst_coaction, eye(src_coaction.cols())}});
}

void constrain_class(LinearConstraints& lc, const RatMatrix& projector) {
  lc.add_homogeneous({{projector - eye(projector.rows()), eye(lc.cols())}});
}

namespace {

void check_module_shape(const AlgebraSpec& a, const RatMatrix& action, std::size_t b) {
  if (action.rows() != b || action.cols() != a.dim * b)
    throw ShapeMismatch("action is " + std::to_string(action.rows()) + "x" +
                        std::to_string(action.cols()) + ", expected " + std::to_string(b) + "x" +
                        std::to_string(a.dim * b));
}

void check_comodule_shape(const AlgebraSpec& a, const RatMatrix& coaction, std::size_t b) {
  if (coaction.rows() != a.dim * b || coaction.cols() != b)
    throw ShapeMismatch("coaction is " + std::to_string(coaction.rows()) + "x" +
                        std::to_string(coaction.cols()) + ", expected " +
                        std::to_string(a.dim * b) + "x" + std::to_string(b));
}

FirmMember firm_member(const AlgebraSpec& a, ClassKind cls, const Structured& b,
                       const Structured& q) {
  const std::size_t n = a.dim;
  const RatMatrix& rho = *b.action;
  const RatMatrix& rho_q = need(q.action, "action");
  const RatMatrix m_b = kron(need(a.mult, "mult"), eye(b.dim));
  const RatMatrix p_q = projector(a, cls, q);

  LinearConstraints forks(q.dim, n * b.dim);
  constrain_module_morphism(forks, n, m_b, rho_q);
  forks.add_homogeneous({{eye(q.dim), m_b - kron(eye(n), rho)}});
  if (cls != ClassKind::all) constrain_class(forks, p_q);

  LinearConstraints lifts(q.dim, b.dim);
  constrain_module_morphism(lifts, n, rho, rho_q);
  if (cls != ClassKind::all) constrain_class(lifts, p_q);

  const std::vector<RatMatrix> hs = solution_space(forks);
  const std::vector<RatMatrix> qs = solution_space(lifts);

  FirmMember out{q.label, q.dim, hs.size(), qs.size(), true, true};
  RowReducer image(q.dim * n * b.dim);
  for (const auto& x : qs) out.unique = image.insert(to_sparse(x * rho)) && out.unique;
  for (const auto& h : hs) out.factors = image.contains(to_sparse(h)) && out.factors;
  return out;
}

FirmMember cofirm_member(const AlgebraSpec& a, ClassKind cls, const Structured& b,
                         const Structured& gb, const Structured& q) {
  const std::size_t n = a.dim;
  const RatMatrix& omega = *b.coaction;
  const RatMatrix& omega_q = need(q.coaction, "coaction");
  const RatMatrix& d_b = *gb.coaction;

  LinearConstraints forks(n * b.dim, q.dim);
  constrain_comodule_morphism(forks, n, omega_q, d_b);
  forks.add_homogeneous({{kron(eye(n), omega) - d_b, eye(q.dim)}});
  if (cls != ClassKind::all) constrain_class(forks, projector(a, cls, gb));

  LinearConstraints lifts(b.dim, q.dim);
  constrain_comodule_morphism(lifts, n, omega_q, omega);
  if (cls != ClassKind::all) constrain_class(lifts, projector(a, cls, b));

  const std::vector<RatMatrix> hs = solution_space(forks);
  const std::vector<RatMatrix> qs = solution_space(lifts);

  FirmMember out{q.label, q.dim, hs.size(), qs.size(), true, true};
  RowReducer image(n * b.dim * q.dim);
  for (const auto& x : qs) out.unique = image.insert(to_sparse(omega * x)) && out.unique;
  for (const auto& h : hs) out.factors = image.contains(to_sparse(h)) && out.factors;
  return out;
}

Structured free_structured(const AlgebraSpec& a, std::size_t b, bool with_action,
                           bool with_coaction, std::string label) {
  Structured s{a.dim * b, std::nullopt, std::nullopt, std::move(label)};
  if (with_action) s.action = kron(need(a.mult, "mult"), eye(b));
  if (with_coaction) s.coaction = kron(need(a.comult, "comult"), eye(b));
  return s;
}

FirmReport firm_impl(const AlgebraSpec& a, ClassKind cls, Structured b,
                     std::vector<Structured> extra) {
  a.validate();
  FirmReport rep;
  rep.cls = cls;
  const bool bimodule = b.coaction.has_value();
  const RatMatrix& rho = *b.action;
  rep.structure_in_class = projector(a, cls, b) * rho == rho;
  rep.epi = surjective(rho);

  std::vector<Structured> family;
  b.label = "B";
  family.push_back(b);
  family.push_back(free_structured(a, b.dim, true, bimodule, "F(B)"));
  for (std::size_t k = 0; k < extra.size(); ++k) {
    if (extra[k].label.empty()) extra[k].label = "family[" + std::to_string(k) + "]";
    family.push_back(std::move(extra[k]));
  }
  for (const auto& q : family) rep.members.push_back(firm_member(a, cls, b, q));
  return rep;
}

FirmReport cofirm_impl(const AlgebraSpec& a, ClassKind cls, Structured b,
                       std::vector<Structured> extra) {
  a.validate();
  FirmReport rep;
  rep.cls = cls;
  const bool bimodule = b.action.has_value();
  const Structured gb = free_structured(a, b.dim, bimodule, true, "F(B)");
  const RatMatrix& omega = *b.coaction;
  rep.structure_in_class = projector(a, cls, gb) * omega == omega;
  rep.epi = injective(omega);

  std::vector<Structured> family;
  b.label = "B";
  family.push_back(b);
  family.push_back(gb);
  for (std::size_t k = 0; k < extra.size(); ++k) {
    if (extra[k].label.empty()) extra[k].label = "family[" + std::to_string(k) + "]";
    family.push_back(std::move(extra[k]));
  }
  for (const auto& q : family) rep.members.push_back(cofirm_member(a, cls, b, gb, q));
  return rep;
}

}  // namespace

const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::all:
      return "all";
    case ClassKind::vartheta:
      return "vartheta";
    case ClassKind::gamma:
      return "gamma";
    case ClassKind::theta:
      return "theta";
  }
  return "?";
}

void validate(const AlgebraSpec& a, const ModuleSpec& m) {
  a.validate();
  check_module_shape(a, m.action, m.dim);
}

void validate(const AlgebraSpec& a, const ComoduleSpec& c) {
  a.validate();
  check_comodule_shape(a, c.coaction, c.dim);
}

void validate(const AlgebraSpec& a, const BimoduleSpec& bm) {
  a.validate();
  check_module_shape(a, bm.action, bm.dim);
  check_comodule_shape(a, bm.coaction, bm.dim);
}

RatMatrix vartheta_matrix(const AlgebraSpec& a) {
  return need(a.mult, "mult") * kron(eye(a.dim), need(a.unit, "unit"));
}

RatMatrix gamma_matrix(const AlgebraSpec& a) {
  return kron(eye(a.dim), need(a.counit, "counit")) * need(a.comult, "comult");
}

RatMatrix theta_matrix(const AlgebraSpec& a) {
  return need(a.mult, "mult") * need(a.comult, "comult");
}

RatMatrix class_projector(const AlgebraSpec& a, ClassKind k, const ModuleSpec& m) {
  return projector(a, k, of(m));
}
RatMatrix class_projector(const AlgebraSpec& a, ClassKind k, const ComoduleSpec& c) {
  return projector(a, k, of(c));
}
RatMatrix class_projector(const AlgebraSpec& a, ClassKind k, const BimoduleSpec& bm) {
  return projector(a, k, of(bm));
}

ModuleReport check_module(const AlgebraSpec& a, const ModuleSpec& m) {
  validate(a, m);
  const RatMatrix& rho = m.action;
  const RatMatrix id = eye(m.dim);
  ModuleReport rep{compare("module-law", rho * kron(eye(a.dim), rho),
                           rho * kron(need(a.mult, "mult"), id)),
                   absent_check("compatible"), absent_check("unital")};
  if (a.unit) {
    rep.compatible = compare("compatible", rho * kron(vartheta_matrix(a), id), rho);
    rep.unital = compare("unital", rho * kron(*a.unit, id), id);
  }
  return rep;
}

ComoduleReport check_comodule(const AlgebraSpec& a, const ComoduleSpec& c) {
  validate(a, c);
  const RatMatrix& omega = c.coaction;
  const RatMatrix id = eye(c.dim);
  ComoduleReport rep{compare("comodule-law", kron(eye(a.dim), omega) * omega,
                             kron(need(a.comult, "comult"), id) * omega),
                     absent_check("compatible"), absent_check("counital")};
  if (a.counit) {
    rep.compatible = compare("compatible", kron(gamma_matrix(a), id) * omega, omega);
    rep.counital = compare("counital", kron(*a.counit, id) * omega, id);
  }
  return rep;
}

namespace {

AxiomCheck class_check(const AlgebraSpec& a, std::optional<ClassKind> cls, const Structured& dst,
                       const RatMatrix& h) {
  if (!cls) return absent_check("in-class");
  return compare(std::string("in-class-") + to_string(*cls), projector(a, *cls, dst) * h, h);
}

void check_morphism_shape(const RatMatrix& h, std::size_t src, std::size_t dst) {
  if (h.rows() != dst || h.cols() != src)
    throw ShapeMismatch("morphism is " + std::to_string(h.rows()) + "x" +
                        std::to_string(h.cols()) + ", expected " + std::to_string(dst) + "x" +
                        std::to_string(src));
}

}  // namespace

MorphismReport check_module_morphism(const AlgebraSpec& a, const ModuleSpec& src,
                                     const ModuleSpec& dst, const RatMatrix& h,
                                     std::optional<ClassKind> cls) {
  validate(a, src);
  validate(a, dst);
  check_morphism_shape(h, src.dim, dst.dim);
  return {compare("module-morphism", h * src.action, dst.action * kron(eye(a.dim), h)),
          class_check(a, cls, of(dst), h)};
}

MorphismReport check_comodule_morphism(const AlgebraSpec& a, const ComoduleSpec& src,
                                       const ComoduleSpec& dst, const RatMatrix& h,
                                       std::optional<ClassKind> cls) {
  validate(a, src);
  validate(a, dst);
  check_morphism_shape(h, src.dim, dst.dim);
  return {compare("comodule-morphism", kron(eye(a.dim), h) * src.coaction, dst.coaction * h),
          class_check(a, cls, of(dst), h)};
}

MorphismReport check_bimodule_morphism(const AlgebraSpec& a, const BimoduleSpec& src,
                                       const BimoduleSpec& dst, const RatMatrix& h,
                                       std::optional<ClassKind> cls) {
  MorphismReport mod = check_module_morphism(a, src.module_part(), dst.module_part(), h);
  MorphismReport com = check_comodule_morphism(a, src.comodule_part(), dst.comodule_part(), h);
  MorphismReport out{mod.morphism.holds() ? com.morphism : mod.morphism,
                     class_check(a, cls, of(dst), h)};
  return out;
}

std::vector<RatMatrix> module_hom_basis(const AlgebraSpec& a, const ModuleSpec& src,
                                        const ModuleSpec& dst, ClassKind cls) {
  validate(a, src);
  validate(a, dst);
  LinearConstraints lc(dst.dim, src.dim);
  constrain_module_morphism(lc, a.dim, src.action, dst.action);
  if (cls != ClassKind::all) constrain_class(lc, class_projector(a, cls, dst));
  return solution_space(lc);
}

std::vector<RatMatrix> comodule_hom_basis(const AlgebraSpec& a, const ComoduleSpec& src,
                                          const ComoduleSpec& dst, ClassKind cls) {
  validate(a, src);
  validate(a, dst);
  LinearConstraints lc(dst.dim, src.dim);
  constrain_comodule_morphism(lc, a.dim, src.coaction, dst.coaction);
  if (cls != ClassKind::all) constrain_class(lc, class_projector(a, cls, dst));
  return solution_space(lc);
}

ModuleSpec free_module(const AlgebraSpec& a, std::size_t b) {
  return {a.dim * b, kron(need(a.mult, "mult"), eye(b))};
}

ComoduleSpec cofree_comodule(const AlgebraSpec& a, std::size_t b) {
  return {a.dim * b, kron(need(a.comult, "comult"), eye(b))};
}

BimoduleSpec free_bimodule(const AlgebraSpec& a, std::size_t b) {
  return {a.dim * b, kron(need(a.mult, "mult"), eye(b)), kron(need(a.comult, "comult"), eye(b))};
}

ModuleSpec iterated_free_module(const AlgebraSpec& a, std::size_t b, std::size_t k) {
  ModuleSpec m = free_module(a, b);
  for (std::size_t i = 1; i < k; ++i) m = free_module(a, m.dim);
  return m;
}

ComoduleSpec iterated_cofree_comodule(const AlgebraSpec& a, std::size_t b, std::size_t k) {
  ComoduleSpec c = cofree_comodule(a, b);
  for (std::size_t i = 1; i < k; ++i) c = cofree_comodule(a, c.dim);
  return c;
}

BimoduleSpec iterated_free_bimodule(const AlgebraSpec& a, std::size_t b, std::size_t k) {
  BimoduleSpec bm = free_bimodule(a, b);
  for (std::size_t i = 1; i < k; ++i) bm = free_bimodule(a, bm.dim);
  return bm;
}

bool surjective(const RatMatrix& m) { return rank(m) == m.rows(); }
bool injective(const RatMatrix& m) { return rank(m) == m.cols(); }

bool FirmReport::k_firm() const {
  if (!structure_in_class) return false;
  for (const auto& member : members)
    if (!member.ok()) return false;
  return true;
}

FirmReport verify_firm(const AlgebraSpec& a, const ModuleSpec& m, ClassKind cls,
                       const std::vector<ModuleSpec>& extra) {
  validate(a, m);
  std::vector<Structured> family;
  for (const auto& q : extra) {
    validate(a, q);
    family.push_back(of(q));
  }
  return firm_impl(a, cls, of(m), std::move(family));
}

FirmReport verify_firm(const AlgebraSpec& a, const BimoduleSpec& bm, ClassKind cls,
                       const std::vector<BimoduleSpec>& extra) {
  validate(a, bm);
  std::vector<Structured> family;
  for (const auto& q : extra) {
    validate(a, q);
    family.push_back(of(q));
  }
  return firm_impl(a, cls, of(bm), std::move(family));
}

FirmReport verify_cofirm(const AlgebraSpec& a, const ComoduleSpec& c, ClassKind cls,
                         const std::vector<ComoduleSpec>& extra) {
  validate(a, c);
  std::vector<Structured> family;
  for (const auto& q : extra) {
    validate(a, q);
    family.push_back(of(q));
  }
  return cofirm_impl(a, cls, of(c), std::move(family));
}

FirmReport verify_cofirm(const AlgebraSpec& a, const BimoduleSpec& bm, ClassKind cls,
                         const std::vector<BimoduleSpec>& extra) {
  validate(a, bm);
  std::vector<Structured> family;
  for (const auto& q : extra) {
    validate(a, q);
    family.push_back(of(q));
  }
  return cofirm_impl(a, cls, of(bm), std::move(family));
}

}  // namespace wfm
