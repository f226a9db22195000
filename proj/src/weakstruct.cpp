#include "wfm/weakstruct.hpp"

#include "wfm/errors.hpp"

namespace wfm {

namespace {

void require_shape(const std::optional<RatMatrix>& m, std::size_t rows, std::size_t cols,
                   const char* name) {
  if (m && (m->rows() != rows || m->cols() != cols))
    throw ShapeMismatch(std::string(name) + " is " + std::to_string(m->rows()) + "x" +
                        std::to_string(m->cols()) + ", expected " + std::to_string(rows) + "x" +
                        std::to_string(cols));
}

const RatMatrix& require(const std::optional<RatMatrix>& m, const char* name) {
  if (!m) throw MissingData(std::string(name) + " is absent");
  return *m;
}

}  // namespace

void AlgebraSpec::validate() const {
  const std::size_t n = dim;
  require_shape(mult, n, n * n, "mult");
  require_shape(unit, n, 1, "unit");
  require_shape(comult, n * n, n, "comult");
  require_shape(counit, 1, n, "counit");
}

CarrierNat AlgebraSpec::mult_nat() const {
  return {compose(functor(), functor()), functor(), require(mult, "mult")};
}
CarrierNat AlgebraSpec::unit_nat() const { return {TensorFunctor{}, functor(), require(unit, "unit")}; }
CarrierNat AlgebraSpec::comult_nat() const {
  return {functor(), compose(functor(), functor()), require(comult, "comult")};
}
CarrierNat AlgebraSpec::counit_nat() const {
  return {functor(), TensorFunctor{}, require(counit, "counit")};
}

bool StructureReport::is_weak_monad() const {
  return assoc.holds() && weak_unit.holds() && weak_mult.holds() && weak_balance.holds();
}
bool StructureReport::is_monad() const {
  return is_weak_monad() && unit_left.holds() && unit_right.holds();
}
bool StructureReport::is_weak_comonad() const {
  return coassoc.holds() && weak_counit.holds() && weak_comult.holds() && weak_cobalance.holds();
}
bool StructureReport::is_comonad() const {
  return is_weak_comonad() && counit_left.holds() && counit_right.holds();
}

std::vector<AxiomCheck> StructureReport::monad_checks() const {
  return {assoc, weak_unit, weak_mult, weak_balance, unit_left, unit_right};
}
std::vector<AxiomCheck> StructureReport::comonad_checks() const {
  return {coassoc, weak_counit, weak_comult, weak_cobalance, counit_left, counit_right};
}

namespace {

void fill_monad(const AlgebraSpec& a, StructureReport& rep) {
  const TensorFunctor f = a.functor();
  const CarrierNat m = a.mult_nat();
  rep.assoc = compare("assoc", (m * whisker_left(f, m)).mat(), (m * whisker_right(m, f)).mat());
  if (!a.unit) return;

  const CarrierNat eta = a.unit_nat();
  const CarrierNat f_eta = whisker_left(f, eta);
  const CarrierNat eta_f = whisker_right(eta, f);
  const CarrierNat f_eta_f = whisker_right(f_eta, f);
  const CarrierNat vartheta = m * f_eta;
  const CarrierNat id = CarrierNat::identity(f);

  rep.weak_unit = compare("weak-unit", eta.mat(), (vartheta * eta).mat());
  rep.weak_mult = compare("weak-mult", m.mat(), (m * whisker_right(m, f) * f_eta_f).mat());
  rep.weak_balance = compare("weak-balance", vartheta.mat(), (m * eta_f).mat());
  rep.unit_left = compare("unit-left", (m * eta_f).mat(), id.mat());
  rep.unit_right = compare("unit-right", vartheta.mat(), id.mat());
  rep.vartheta_idempotent = (vartheta * vartheta) == vartheta;
  rep.vartheta = vartheta;
}

void fill_comonad(const AlgebraSpec& a, StructureReport& rep) {
  const TensorFunctor f = a.functor();
  const CarrierNat d = a.comult_nat();
  rep.coassoc =
      compare("coassoc", (whisker_left(f, d) * d).mat(), (whisker_right(d, f) * d).mat());
  if (!a.counit) return;

  const CarrierNat eps = a.counit_nat();
  const CarrierNat f_eps = whisker_left(f, eps);
  const CarrierNat eps_f = whisker_right(eps, f);
  const CarrierNat f_eps_f = whisker_right(f_eps, f);
  const CarrierNat gamma = f_eps * d;
  const CarrierNat id = CarrierNat::identity(f);

  rep.weak_counit = compare("weak-counit", eps.mat(), (eps * gamma).mat());
  rep.weak_comult = compare("weak-comult", d.mat(), (f_eps_f * whisker_left(f, d) * d).mat());
  rep.weak_cobalance = compare("weak-cobalance", gamma.mat(), (eps_f * d).mat());
  rep.counit_left = compare("counit-left", (eps_f * d).mat(), id.mat());
  rep.counit_right = compare("counit-right", gamma.mat(), id.mat());
  rep.gamma_idempotent = (gamma * gamma) == gamma;
  rep.gamma = gamma;
}

}  // namespace

StructureReport classify_monad(const AlgebraSpec& a) {
  a.validate();
  StructureReport rep;
  rep.dim = a.dim;
  fill_monad(a, rep);
  return rep;
}

StructureReport classify_comonad(const AlgebraSpec& a) {
  a.validate();
  StructureReport rep;
  rep.dim = a.dim;
  fill_comonad(a, rep);
  return rep;
}

StructureReport classify(const AlgebraSpec& a) {
  a.validate();
  StructureReport rep;
  rep.dim = a.dim;
  if (a.mult) fill_monad(a, rep);
  if (a.comult) fill_comonad(a, rep);
  return rep;
}

AlgebraSpec split_weak_monad(const AlgebraSpec& a) {
  const StructureReport rep = classify_monad(a);
  if (!rep.is_weak_monad()) throw NotWeakMonad("split_weak_monad: input is not a weak monad");
  const SplitPair s = split_idempotent(rep.vartheta->mat());
  AlgebraSpec out;
  out.dim = s.rank;
  out.mult = s.p * *a.mult * kron(s.i, s.i);
  out.unit = s.p * *a.unit;
  return out;
}

AlgebraSpec split_weak_comonad(const AlgebraSpec& a) {
  const StructureReport rep = classify_comonad(a);
  if (!rep.is_weak_comonad())
    throw NotWeakComonad("split_weak_comonad: input is not a weak comonad");
  const SplitPair s = split_idempotent(rep.gamma->mat());
  AlgebraSpec out;
  out.dim = s.rank;
  out.comult = kron(s.p, s.p) * *a.comult * s.i;
  out.counit = *a.counit * s.i;
  return out;
}

}  // namespace wfm
