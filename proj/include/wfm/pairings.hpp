#pragma once

#include <optional>
#include <vector>

#include "wfm/check.hpp"
#include "wfm/modcat.hpp"
#include "wfm/vectcat.hpp"
#include "wfm/weakstruct.hpp"

namespace wfm {

/// A pairing of L = V⊗− and R = W⊗− given by its four determining
/// transformations. Composites follow the outer-factor-first convention, so
/// RL has carrier W⊗V and LR has carrier V⊗W.
///   eta    (w·v) × 1   η : I → RL
///   eps    1 × (v·w)   ε : LR → I
///   eta_t  (v·w) × 1   η̃ : I → LR
///   eps_t  1 × (w·v)   ε̃ : RL → I
struct PairingSpec {
  TensorFunctor L;
  TensorFunctor R;
  RatMatrix eta;
  RatMatrix eps;
  std::optional<RatMatrix> eta_t;
  std::optional<RatMatrix> eps_t;

  std::size_t v() const { return L.carrier_dim; }
  std::size_t w() const { return R.carrier_dim; }
  void validate() const;

  friend bool operator==(const PairingSpec&, const PairingSpec&) = default;
};

struct DerivedTransforms {
  CarrierNat ell;                    // ℓ = εL·Lη on L
  CarrierNat r;                      // r = Rε·ηR on R
  std::optional<CarrierNat> ell_t;   // ℓ̃ = Lε̃·η̃L
  std::optional<CarrierNat> r_t;     // r̃ = ε̃R·Rη̃
  std::optional<CarrierNat> theta;   // θ = Lε̃R·LηR on LR
};

DerivedTransforms derived_transforms(const PairingSpec& p);

struct RegularityReport {
  AxiomCheck unit_side;    // rL·η = η
  AxiomCheck counit_side;  // ε·ℓR = ε
  bool regular() const { return unit_side.holds() && counit_side.holds(); }
};

RegularityReport check_regular(const PairingSpec& p);

/// The identities a regular pairing satisfies, plus idempotency of ℓ and r.
/// Throws RegularityRequired.
std::vector<AxiomCheck> check_consequences(const PairingSpec& p);

struct SymmetryReport {
  AxiomCheck beta;   // Lr = ℓR
  AxiomCheck alpha;  // Rℓ = rL
  bool beta_symmetric() const { return beta.holds(); }
  bool alpha_symmetric() const { return alpha.holds(); }
};

SymmetryReport check_symmetry(const PairingSpec& p);

/// (LR, δ = ℓRLr·LηR, ε) on carrier V⊗W. Throws RegularityRequired.
AlgebraSpec induced_weak_comonad(const PairingSpec& p);
/// (RL, m = RεL·rLRℓ, η) on carrier W⊗V. Throws RegularityRequired.
AlgebraSpec induced_weak_monad(const PairingSpec& p);

/// εLR·δ = ℓr = LRε·δ for the induced coproduct and m·ηRL = rℓ = m·RLη for
/// the induced product.
std::vector<AxiomCheck> check_induced_identities(const PairingSpec& p);

/// εL·Lη = I and Rε·ηR = I.
std::vector<AxiomCheck> check_triangles(const PairingSpec& p);

/// Splits ℓ and r and restricts η, ε to the images: η̲ = (p_R ⊗ p_L)·η,
/// ε̲ = ε·(i_L ⊗ i_R). The tilde data is dropped. Throws RegularityRequired.
PairingSpec split_to_adjunction(const PairingSpec& p);

/// Idempotent splittings used by split_to_adjunction.
struct AdjunctionSplit {
  SplitPair ell;
  SplitPair r;
};
AdjunctionSplit adjunction_split(const PairingSpec& p);

/// Enlarges an adjunction along retractions p_L·i_L = I, p_R·i_R = I:
/// η' = (i_R ⊗ i_L)·η, ε' = ε·(p_L ⊗ p_R). Throws NotAdjunction, NotRetraction.
PairingSpec pairing_from_retract(const PairingSpec& adj, const RatMatrix& iL, const RatMatrix& pL,
                                 const RatMatrix& iR, const RatMatrix& pR);

/// (R, L, η̃, ε̃, η, ε). Throws MissingData.
PairingSpec tilde_pairing(const PairingSpec& p);

struct FrobeniusPairReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
};

/// Both pairings regular, ℓ = ℓ̃, r = r̃, and both split adjunctions satisfy
/// the triangle identities. Throws MissingData without η̃, ε̃.
FrobeniusPairReport check_frobenius_pair(const PairingSpec& p);

enum class StructureKind { monad, comonad };

struct StructureMorphismReport {
  AxiomCheck structure;  // ν·m = m'·(ν⊗ν)  or  δ'·ν = (ν⊗ν)·δ
  AxiomCheck unit;       // ν·η = η'  or  ε'·ν = ε; absent if either side lacks it
  bool ok() const { return structure.holds() && !unit.fails(); }
};

/// nu : dst.dim × src.dim.
StructureMorphismReport check_structure_morphism(StructureKind kind, const AlgebraSpec& src,
                                                 const AlgebraSpec& dst, const RatMatrix& nu);

/// ω' = (ν ⊗ I_B)·ω. Throws NotMorphism unless ν is a comonad morphism.
ComoduleSpec transport_comodule(const AlgebraSpec& src, const AlgebraSpec& dst,
                                const RatMatrix& nu, const ComoduleSpec& c);

struct ThetaLemmaReport {
  bool unit_hypothesis = false;    // η·ε̃·η = η
  AxiomCheck unit_conclusion;      // ℓr·θ = ℓr
  bool counit_hypothesis = false;  // ε̃·η·ε̃ = ε̃
  AxiomCheck counit_conclusion;    // θ·ℓ̃r̃ = ℓ̃r̃
};

/// Conclusions are absent when their hypothesis fails. Throws MissingData
/// without ε̃ (and η̃ for the second part).
ThetaLemmaReport check_theta_lemma(const PairingSpec& p);

/// The LR algebra of a regular pairing with β symmetric: product Lε̂R for
/// ε̂ = ε̃·rℓ, coproduct LηR, counit ε. Throws PreconditionFailed.
AlgebraSpec lr_algebra_counit_form(const PairingSpec& p);
/// The LR algebra when the tilde pairing is regular with α̃ symmetric:
/// product Lε̃R, unit η̃, coproduct Lη̂R for η̂ = r̃ℓ̃·η. Throws PreconditionFailed.
AlgebraSpec lr_algebra_unit_form(const PairingSpec& p);

}  // namespace wfm
