#include "wfm/pairings.hpp"

#include <string>

#include "wfm/errors.hpp"

namespace wfm {

namespace {

RatMatrix eye(std::size_t n) { return RatMatrix::identity(n); }

void require_shape(const RatMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeMismatch(std::string(name) + " is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                        std::to_string(cols));
}

const RatMatrix& need(const std::optional<RatMatrix>& m, const char* what) {
  if (!m) throw MissingData(std::string(what) + " is absent");
  return *m;
}

TensorFunctor lr(const PairingSpec& p) { return compose(p.L, p.R); }
TensorFunctor rl(const PairingSpec& p) { return compose(p.R, p.L); }

CarrierNat eta_nat(const PairingSpec& p) { return {TensorFunctor{}, rl(p), p.eta}; }
CarrierNat eps_nat(const PairingSpec& p) { return {lr(p), TensorFunctor{}, p.eps}; }

// ℓ ⊗ r on LR and r ⊗ ℓ on RL.
RatMatrix ell_r(const DerivedTransforms& d) { return kron(d.ell.mat(), d.r.mat()); }
RatMatrix r_ell(const DerivedTransforms& d) { return kron(d.r.mat(), d.ell.mat()); }

void require_regular(const PairingSpec& p, const char* op) {
  if (!check_regular(p).regular())
    throw RegularityRequired(std::string(op) + ": pairing is not regular");
}

}  // namespace

void PairingSpec::validate() const {
  const std::size_t vv = v(), ww = w();
  require_shape(eta, ww * vv, 1, "eta");
  require_shape(eps, 1, vv * ww, "eps");
  if (eta_t) require_shape(*eta_t, vv * ww, 1, "eta_t");
  if (eps_t) require_shape(*eps_t, 1, ww * vv, "eps_t");
}

DerivedTransforms derived_transforms(const PairingSpec& p) {
  p.validate();
  const CarrierNat eta = eta_nat(p);
  const CarrierNat eps = eps_nat(p);
  DerivedTransforms d{whisker_right(eps, p.L) * whisker_left(p.L, eta),
                      whisker_left(p.R, eps) * whisker_right(eta, p.R),
                      std::nullopt, std::nullopt, std::nullopt};
  if (p.eps_t) {
    const CarrierNat eps_t{rl(p), TensorFunctor{}, *p.eps_t};
    d.theta = whisker_right(whisker_left(p.L, eps_t), p.R) *
              whisker_right(whisker_left(p.L, eta), p.R);
    if (p.eta_t) {
      const CarrierNat eta_t{TensorFunctor{}, lr(p), *p.eta_t};
      d.ell_t = whisker_left(p.L, eps_t) * whisker_right(eta_t, p.L);
      d.r_t = whisker_right(eps_t, p.R) * whisker_left(p.R, eta_t);
    }
  }
  return d;
}

RegularityReport check_regular(const PairingSpec& p) {
  const DerivedTransforms d = derived_transforms(p);
  return {compare("regular-unit", kron(d.r.mat(), eye(p.v())) * p.eta, p.eta),
          compare("regular-counit", p.eps * kron(d.ell.mat(), eye(p.w())), p.eps)};
}

std::vector<AxiomCheck> check_consequences(const PairingSpec& p) {
  require_regular(p, "check_consequences");
  const DerivedTransforms d = derived_transforms(p);
  const RatMatrix& l = d.ell.mat();
  const RatMatrix& r = d.r.mat();
  const RatMatrix iv = eye(p.v()), iw = eye(p.w());
  return {
      compare("eps-ell-r", p.eps * kron(l, r), p.eps),
      compare("eps-ell-R", p.eps * kron(l, iw), p.eps),
      compare("eps-L-r", p.eps * kron(iv, r), p.eps),
      compare("r-ell-eta", kron(r, l) * p.eta, p.eta),
      compare("R-ell-eta", kron(iw, l) * p.eta, p.eta),
      compare("r-L-eta", kron(r, iv) * p.eta, p.eta),
      compare("ell-idempotent", l * l, l),
      compare("r-idempotent", r * r, r),
  };
}

SymmetryReport check_symmetry(const PairingSpec& p) {
  const DerivedTransforms d = derived_transforms(p);
  return {compare("beta-symmetric", kron(eye(p.v()), d.r.mat()), kron(d.ell.mat(), eye(p.w()))),
          compare("alpha-symmetric", kron(eye(p.w()), d.ell.mat()),
                  kron(d.r.mat(), eye(p.v())))};
}

AlgebraSpec induced_weak_comonad(const PairingSpec& p) {
  require_regular(p, "induced_weak_comonad");
  const DerivedTransforms d = derived_transforms(p);
  const std::size_t v = p.v(), w = p.w();
  AlgebraSpec out;
  out.dim = v * w;
  out.comult = kron({d.ell.mat(), eye(w), eye(v), d.r.mat()}) * kron({eye(v), p.eta, eye(w)});
  out.counit = p.eps;
  return out;
}

AlgebraSpec induced_weak_monad(const PairingSpec& p) {
  require_regular(p, "induced_weak_monad");
  const DerivedTransforms d = derived_transforms(p);
  const std::size_t v = p.v(), w = p.w();
  AlgebraSpec out;
  out.dim = w * v;
  out.mult = kron({eye(w), p.eps, eye(v)}) * kron({d.r.mat(), eye(v), eye(w), d.ell.mat()});
  out.unit = p.eta;
  return out;
}

std::vector<AxiomCheck> check_induced_identities(const PairingSpec& p) {
  const DerivedTransforms d = derived_transforms(p);
  const AlgebraSpec co = induced_weak_comonad(p);
  const AlgebraSpec mo = induced_weak_monad(p);
  const std::size_t n = p.v() * p.w();
  const RatMatrix& delta = *co.comult;
  const RatMatrix& m = *mo.mult;
  return {
      compare("epsLR-delta", kron(p.eps, eye(n)) * delta, ell_r(d)),
      compare("LReps-delta", kron(eye(n), p.eps) * delta, ell_r(d)),
      compare("m-etaRL", m * kron(p.eta, eye(n)), r_ell(d)),
      compare("m-RLeta", m * kron(eye(n), p.eta), r_ell(d)),
  };
}

std::vector<AxiomCheck> check_triangles(const PairingSpec& p) {
  const DerivedTransforms d = derived_transforms(p);
  return {compare("triangle-L", d.ell.mat(), eye(p.v())),
          compare("triangle-R", d.r.mat(), eye(p.w()))};
}

AdjunctionSplit adjunction_split(const PairingSpec& p) {
  require_regular(p, "split_to_adjunction");
  const DerivedTransforms d = derived_transforms(p);
  return {split_idempotent(d.ell.mat()), split_idempotent(d.r.mat())};
}

PairingSpec split_to_adjunction(const PairingSpec& p) {
  const AdjunctionSplit s = adjunction_split(p);
  PairingSpec out;
  out.L = {s.ell.rank};
  out.R = {s.r.rank};
  out.eta = kron(s.r.p, s.ell.p) * p.eta;
  out.eps = p.eps * kron(s.ell.i, s.r.i);
  return out;
}

PairingSpec pairing_from_retract(const PairingSpec& adj, const RatMatrix& iL, const RatMatrix& pL,
                                 const RatMatrix& iR, const RatMatrix& pR) {
  adj.validate();
  for (const auto& c : check_triangles(adj))
    if (!c.holds()) throw NotAdjunction("pairing_from_retract: " + describe(c));
  if (iL.cols() != adj.v() || pL.rows() != adj.v() || iR.cols() != adj.w() ||
      pR.rows() != adj.w() || pL.cols() != iL.rows() || pR.cols() != iR.rows())
    throw ShapeMismatch("pairing_from_retract: retraction shapes do not fit the carriers");
  if (pL * iL != eye(adj.v())) throw NotRetraction("pairing_from_retract: pL·iL is not the identity");
  if (pR * iR != eye(adj.w())) throw NotRetraction("pairing_from_retract: pR·iR is not the identity");
  PairingSpec out;
  out.L = {iL.rows()};
  out.R = {iR.rows()};
  out.eta = kron(iR, iL) * adj.eta;
  out.eps = adj.eps * kron(pL, pR);
  return out;
}

PairingSpec tilde_pairing(const PairingSpec& p) {
  p.validate();
  PairingSpec out;
  out.L = p.R;
  out.R = p.L;
  out.eta = need(p.eta_t, "eta_t");
  out.eps = need(p.eps_t, "eps_t");
  out.eta_t = p.eta;
  out.eps_t = p.eps;
  return out;
}

bool FrobeniusPairReport::ok() const {
  for (const auto& c : checks)
    if (!c.holds()) return false;
  return true;
}

FrobeniusPairReport check_frobenius_pair(const PairingSpec& p) {
  const PairingSpec t = tilde_pairing(p);
  const DerivedTransforms d = derived_transforms(p);
  FrobeniusPairReport rep;
  const RegularityReport reg = check_regular(p);
  const RegularityReport reg_t = check_regular(t);
  rep.checks.push_back(verdict("regular", reg.regular()));
  rep.checks.push_back(verdict("tilde-regular", reg_t.regular()));
  rep.checks.push_back(compare("ell-equals-ell-tilde", d.ell.mat(), d.ell_t->mat()));
  rep.checks.push_back(compare("r-equals-r-tilde", d.r.mat(), d.r_t->mat()));
  auto triangles = [&](const PairingSpec& q, const RegularityReport& rr, const std::string& tag) {
    if (!rr.regular()) {
      rep.checks.push_back(verdict(tag + "split-triangles", false));
      return;
    }
    for (auto c : check_triangles(split_to_adjunction(q))) {
      c.id = tag + "split-" + c.id;
      rep.checks.push_back(std::move(c));
    }
  };
  triangles(p, reg, "");
  triangles(t, reg_t, "tilde-");
  return rep;
}

StructureMorphismReport check_structure_morphism(StructureKind kind, const AlgebraSpec& src,
                                                 const AlgebraSpec& dst, const RatMatrix& nu) {
  src.validate();
  dst.validate();
  require_shape(nu, dst.dim, src.dim, "nu");
  StructureMorphismReport rep{absent_check("structure"), absent_check("unit")};
  if (kind == StructureKind::monad) {
    rep.structure = compare("monad-morphism", nu * need(src.mult, "mult"),
                            need(dst.mult, "mult") * kron(nu, nu));
    if (src.unit && dst.unit) rep.unit = compare("unit-morphism", nu * *src.unit, *dst.unit);
  } else {
    rep.structure = compare("comonad-morphism", need(dst.comult, "comult") * nu,
                            kron(nu, nu) * need(src.comult, "comult"));
    if (src.counit && dst.counit)
      rep.unit = compare("counit-morphism", *dst.counit * nu, *src.counit);
  }
  return rep;
}

ComoduleSpec transport_comodule(const AlgebraSpec& src, const AlgebraSpec& dst,
                                const RatMatrix& nu, const ComoduleSpec& c) {
  validate(src, c);
  if (!check_structure_morphism(StructureKind::comonad, src, dst, nu).ok())
    throw NotMorphism("transport_comodule: nu is not a comonad morphism");
  return {c.dim, kron(nu, eye(c.dim)) * c.coaction};
}

ThetaLemmaReport check_theta_lemma(const PairingSpec& p) {
  const DerivedTransforms d = derived_transforms(p);
  const RatMatrix& eps_t = need(p.eps_t, "eps_t");
  const RatMatrix scalar = eps_t * p.eta;  // ε̃·η, 1×1
  ThetaLemmaReport rep{false, absent_check("ell-r-theta"), false, absent_check("theta-ell-r-tilde")};
  const RatMatrix& theta = d.theta->mat();

  rep.unit_hypothesis = p.eta * scalar == p.eta;
  if (rep.unit_hypothesis) rep.unit_conclusion = compare("ell-r-theta", ell_r(d) * theta, ell_r(d));

  need(p.eta_t, "eta_t");
  rep.counit_hypothesis = scalar * eps_t == eps_t;
  if (rep.counit_hypothesis) {
    const RatMatrix lr_t = kron(d.ell_t->mat(), d.r_t->mat());
    rep.counit_conclusion = compare("theta-ell-r-tilde", theta * lr_t, lr_t);
  }
  return rep;
}

AlgebraSpec lr_algebra_counit_form(const PairingSpec& p) {
  std::vector<std::string> failures;
  if (!p.eps_t) failures.push_back("eps_t absent");
  if (!check_regular(p).regular()) failures.push_back("pairing not regular");
  else if (!check_symmetry(p).beta_symmetric()) failures.push_back("beta not symmetric");
  if (!failures.empty()) throw PreconditionFailed(failures);

  const DerivedTransforms d = derived_transforms(p);
  const std::size_t v = p.v(), w = p.w();
  const RatMatrix eps_hat = *p.eps_t * r_ell(d);
  AlgebraSpec out;
  out.dim = v * w;
  out.mult = kron({eye(v), eps_hat, eye(w)});
  out.comult = kron({eye(v), p.eta, eye(w)});
  out.counit = p.eps;
  return out;
}

AlgebraSpec lr_algebra_unit_form(const PairingSpec& p) {
  std::vector<std::string> failures;
  if (!p.eps_t || !p.eta_t) {
    failures.push_back("eta_t or eps_t absent");
    throw PreconditionFailed(failures);
  }
  const PairingSpec t = tilde_pairing(p);
  if (!check_regular(t).regular()) failures.push_back("tilde pairing not regular");
  else if (!check_symmetry(t).alpha_symmetric()) failures.push_back("tilde alpha not symmetric");
  if (!failures.empty()) throw PreconditionFailed(failures);

  const DerivedTransforms d = derived_transforms(p);
  const std::size_t v = p.v(), w = p.w();
  const RatMatrix eta_hat = kron(d.r_t->mat(), d.ell_t->mat()) * p.eta;
  AlgebraSpec out;
  out.dim = v * w;
  out.mult = kron({eye(v), *p.eps_t, eye(w)});
  out.unit = *p.eta_t;
  out.comult = kron({eye(v), eta_hat, eye(w)});
  return out;
}

}  // namespace wfm
