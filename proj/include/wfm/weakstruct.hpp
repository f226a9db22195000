#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wfm/check.hpp"
#include "wfm/vectcat.hpp"

namespace wfm {

/// Structure constants for F = A ⊗ − on an n-dimensional carrier A.
///
/// Matrix conventions (basis e_0..e_{n-1}, A⊗A indexed by i·n + j):
///   mult    n × n²   column i·n+j holds e_i·e_j
///   unit    n × 1    the quasi-unit
///   comult  n² × n   column i holds δ(e_i)
///   counit  1 × n    the quasi-counit
/// Any of the four maps may be absent.
struct AlgebraSpec {
  std::size_t dim = 0;
  std::optional<RatMatrix> mult;
  std::optional<RatMatrix> unit;
  std::optional<RatMatrix> comult;
  std::optional<RatMatrix> counit;

  TensorFunctor functor() const { return {dim}; }
  /// Throws ShapeMismatch naming the first map with the wrong shape.
  void validate() const;

  /// The maps as natural transformations; throw MissingData when absent.
  CarrierNat mult_nat() const;
  CarrierNat unit_nat() const;
  CarrierNat comult_nat() const;
  CarrierNat counit_nat() const;

  bool has_monad_data() const { return mult && unit; }
  bool has_comonad_data() const { return comult && counit; }
  bool complete() const { return mult && unit && comult && counit; }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Which axioms hold. Checks that need absent data have Status::absent.
struct StructureReport {
  std::size_t dim = 0;

  AxiomCheck assoc = absent_check("assoc");                // m·Fm = m·mF
  AxiomCheck weak_unit = absent_check("weak-unit");        // η = m·Fη·η
  AxiomCheck weak_mult = absent_check("weak-mult");        // m = m·mF·FηF
  AxiomCheck weak_balance = absent_check("weak-balance");  // m·Fη = m·ηF
  AxiomCheck unit_left = absent_check("unit-left");        // m·ηF = I
  AxiomCheck unit_right = absent_check("unit-right");      // m·Fη = I
  std::optional<CarrierNat> vartheta;                      // m·Fη
  std::optional<bool> vartheta_idempotent;

  AxiomCheck coassoc = absent_check("coassoc");                  // Fδ·δ = δF·δ
  AxiomCheck weak_counit = absent_check("weak-counit");          // ε = ε·Fε·δ
  AxiomCheck weak_comult = absent_check("weak-comult");          // δ = FεF·Fδ·δ
  AxiomCheck weak_cobalance = absent_check("weak-cobalance");    // Fε·δ = εF·δ
  AxiomCheck counit_left = absent_check("counit-left");          // εF·δ = I
  AxiomCheck counit_right = absent_check("counit-right");        // Fε·δ = I
  std::optional<CarrierNat> gamma;                               // Fε·δ
  std::optional<bool> gamma_idempotent;

  bool is_associative() const { return assoc.holds(); }
  bool is_weak_monad() const;
  bool is_monad() const;
  bool is_coassociative() const { return coassoc.holds(); }
  bool is_weak_comonad() const;
  bool is_comonad() const;

  std::vector<AxiomCheck> monad_checks() const;
  std::vector<AxiomCheck> comonad_checks() const;

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

/// Requires mult; the quasi-unit is optional.
StructureReport classify_monad(const AlgebraSpec& a);
/// Requires comult; the quasi-counit is optional.
StructureReport classify_comonad(const AlgebraSpec& a);
/// Both sides, skipping any side whose product/coproduct is absent.
StructureReport classify(const AlgebraSpec& a);

/// Splits ϑ = m·Fη and returns the monad (p·m·(i⊗i), p·η) on its image.
AlgebraSpec split_weak_monad(const AlgebraSpec& a);
/// Splits γ = Fε·δ and returns the comonad ((p⊗p)·δ·i, ε·i) on its image.
AlgebraSpec split_weak_comonad(const AlgebraSpec& a);

}  // namespace wfm
