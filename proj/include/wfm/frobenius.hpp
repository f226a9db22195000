#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wfm/check.hpp"
#include "wfm/linear_system.hpp"
#include "wfm/modcat.hpp"
#include "wfm/weakstruct.hpp"

namespace wfm {

struct FrobeniusPropertyReport {
  AxiomCheck left;   // δ·m = Fm·δF
  AxiomCheck right;  // δ·m = mF·Fδ
  bool holds() const { return left.holds() && right.holds(); }
};

/// Requires mult and comult; throws MissingData otherwise.
FrobeniusPropertyReport check_frobenius_property(const AlgebraSpec& a);

/// The four squares with m_B = m̂⊗I, δ_B = δ̂⊗I:
///   (I) module law, (II) ω·ρ = m_B·F(ω), (III) ω·ρ = F(ρ)·δ_B, (IV) comodule law.
struct BimoduleReport {
  AxiomCheck module_law;
  AxiomCheck frobenius_mult;
  AxiomCheck frobenius_comult;
  AxiomCheck comodule_law;
  bool holds() const;
  std::vector<AxiomCheck> squares() const;
};

BimoduleReport check_frobenius_bimodule(const AlgebraSpec& a, const BimoduleSpec& bm);

/// (F(B), m_B, δ_B). Throws FrobeniusRequired.
BimoduleSpec canonical_bimodule(const AlgebraSpec& a, std::size_t b);

struct SeparabilityReport {
  RatMatrix theta;           // m·δ
  Rational counit_unit;      // ε·η
  bool separable = false;    // θ = I
  std::vector<AxiomCheck> theta_identities;
  bool delta_absorbs_theta = false;  // δ·θ = δ
  bool theta_absorbs_mult = false;   // θ·m = m
  // Filled when a bimodule is supplied.
  std::vector<AxiomCheck> bimodule_checks;
};

/// Requires all four maps. The bimodule checks are ρωρ = ρθ_B and
/// ωρω = θ_Bω, the collapsed forms when θ = I, and idempotency of ωρ when
/// δθ = δ or θm = m.
SeparabilityReport separability_report(const AlgebraSpec& a,
                                       const std::optional<BimoduleSpec>& bm = std::nullopt);

struct CompletionResult {
  BimoduleSpec bimodule;
  BimoduleReport squares;
  AxiomCheck in_class;            // completed map lies in its compatibility class
  FactorResult::Kind uniqueness;  // unique expected
  bool matches_solution = false;  // the unique solution equals the formula
  bool ok() const {
    return squares.holds() && in_class.holds() && uniqueness == FactorResult::Kind::unique &&
           matches_solution;
  }
};

/// ρ := ε_B·m_B·F(ω). Preconditions: weak comonad, Frobenius property, m = γ·m,
/// c a γ-compatible comodule. Throws PreconditionFailed listing each failure.
CompletionResult complete_comodule(const AlgebraSpec& a, const ComoduleSpec& c);
/// ω := F(ρ)·δ_B·η_B. Preconditions: weak monad, Frobenius property, δ = δ·ϑ,
/// m a ϑ-compatible module.
CompletionResult complete_module(const AlgebraSpec& a, const ModuleSpec& m);

struct WeakFrobeniusReport {
  StructureReport structure;
  FrobeniusPropertyReport frobenius;
  AxiomCheck vartheta_gamma;  // ϑ = γ
  bool holds() const {
    return structure.is_weak_monad() && structure.is_weak_comonad() && frobenius.holds() &&
           vartheta_gamma.holds();
  }
  bool proper() const { return holds() && structure.is_monad() && structure.is_comonad(); }
};

/// Throws MissingData unless all four maps are present.
WeakFrobeniusReport check_weak_frobenius(const AlgebraSpec& a);

/// Validated weak Frobenius monad.
class WeakFrobeniusSpec {
 public:
  /// Throws PreconditionFailed.
  static WeakFrobeniusSpec make(AlgebraSpec a);
  const AlgebraSpec& alg() const { return alg_; }

 private:
  explicit WeakFrobeniusSpec(AlgebraSpec a) : alg_(std::move(a)) {}
  AlgebraSpec alg_;
};

/// Splits ϑ = γ once and restricts all four maps to its image.
AlgebraSpec split_weak_frobenius(const WeakFrobeniusSpec& a);

struct RoundtripItem {
  std::string label;
  bool returned_exactly = false;
  std::string error;  // precondition failure, empty otherwise
};

struct RoundtripReport {
  std::vector<RoundtripItem> items;
  std::size_t morphisms_checked = 0;
  std::vector<std::string> morphism_failures;
  bool ok() const;
};

/// Module → bimodule → comodule → bimodule → module and the dual trip, plus
/// transport of every basis morphism between samples to a bimodule morphism
/// of the completions.
RoundtripReport roundtrip_isomorphism(const WeakFrobeniusSpec& a,
                                      const std::vector<ModuleSpec>& modules,
                                      const std::vector<ComoduleSpec>& comodules);

struct CorollaryItem {
  std::string id;
  Status status = Status::absent;  // absent: hypothesis not met
  std::string detail;
};

struct CorollaryReport {
  std::vector<CorollaryItem> items;
  bool ok() const;  // nothing fails
};

/// Completion corollaries for proper (co)monads: counital comodules complete
/// to unital modules and dually; with m·δ = I the completed parts are firm and
/// cofirm; for Frobenius monads the round trips on unital and counital samples.
CorollaryReport corollary_checks(const AlgebraSpec& a, const std::vector<ModuleSpec>& modules,
                                 const std::vector<ComoduleSpec>& comodules);

}  // namespace wfm
