#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wfm/check.hpp"
#include "wfm/linear_system.hpp"
#include "wfm/weakstruct.hpp"

namespace wfm {

/// (B, ρ) with ρ̂ of shape b × (n·b).
struct ModuleSpec {
  std::size_t dim = 0;
  RatMatrix action;
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

/// (B, ω) with ω̂ of shape (n·b) × b.
struct ComoduleSpec {
  std::size_t dim = 0;
  RatMatrix coaction;
  friend bool operator==(const ComoduleSpec&, const ComoduleSpec&) = default;
};

struct BimoduleSpec {
  std::size_t dim = 0;
  RatMatrix action;
  RatMatrix coaction;

  ModuleSpec module_part() const { return {dim, action}; }
  ComoduleSpec comodule_part() const { return {dim, coaction}; }
  friend bool operator==(const BimoduleSpec&, const BimoduleSpec&) = default;
};

/// Ideal classes of morphisms. `all` is every morphism; the others are the
/// morphisms h with P·h = h for the projector P of the target (see
/// class_projector).
enum class ClassKind { all, vartheta, gamma, theta };

const char* to_string(ClassKind k);

void validate(const AlgebraSpec& a, const ModuleSpec& m);
void validate(const AlgebraSpec& a, const ComoduleSpec& c);
void validate(const AlgebraSpec& a, const BimoduleSpec& bm);

/// Idempotents on F itself: ϑ = m·Fη, γ = Fε·δ, θ = m·δ.
RatMatrix vartheta_matrix(const AlgebraSpec& a);
RatMatrix gamma_matrix(const AlgebraSpec& a);
RatMatrix theta_matrix(const AlgebraSpec& a);

/// Target-side triangle of a class:
///   ϑ: ρ·η_B    γ: ε_B·ω    θ: ρ·ω    all: identity.
/// Throws MissingData when the object lacks the structure the class needs.
RatMatrix class_projector(const AlgebraSpec& a, ClassKind k, const ModuleSpec& m);
RatMatrix class_projector(const AlgebraSpec& a, ClassKind k, const ComoduleSpec& c);
RatMatrix class_projector(const AlgebraSpec& a, ClassKind k, const BimoduleSpec& bm);

struct ModuleReport {
  AxiomCheck law;         // ρ·Fρ = ρ·m_B
  AxiomCheck compatible;  // ρ·ϑ_B = ρ
  AxiomCheck unital;      // ρ·η_B = I
};

struct ComoduleReport {
  AxiomCheck law;         // Fω·ω = δ_B·ω
  AxiomCheck compatible;  // γ_B·ω = ω
  AxiomCheck counital;    // ε_B·ω = I
};

ModuleReport check_module(const AlgebraSpec& a, const ModuleSpec& m);
ComoduleReport check_comodule(const AlgebraSpec& a, const ComoduleSpec& c);

struct MorphismReport {
  AxiomCheck morphism;
  AxiomCheck in_class;  // absent when no class was requested
};

MorphismReport check_module_morphism(const AlgebraSpec& a, const ModuleSpec& src,
                                     const ModuleSpec& dst, const RatMatrix& h,
                                     std::optional<ClassKind> cls = std::nullopt);
MorphismReport check_comodule_morphism(const AlgebraSpec& a, const ComoduleSpec& src,
                                       const ComoduleSpec& dst, const RatMatrix& h,
                                       std::optional<ClassKind> cls = std::nullopt);
/// Both intertwining identities; the class is taken with respect to dst.
MorphismReport check_bimodule_morphism(const AlgebraSpec& a, const BimoduleSpec& src,
                                       const BimoduleSpec& dst, const RatMatrix& h,
                                       std::optional<ClassKind> cls = std::nullopt);

/// Bases of hom-spaces, optionally restricted to a class.
std::vector<RatMatrix> module_hom_basis(const AlgebraSpec& a, const ModuleSpec& src,
                                        const ModuleSpec& dst, ClassKind cls = ClassKind::all);
std::vector<RatMatrix> comodule_hom_basis(const AlgebraSpec& a, const ComoduleSpec& src,
                                          const ComoduleSpec& dst,
                                          ClassKind cls = ClassKind::all);

/// (F(B), m_B), (F(B), δ_B) and (F(B), m_B, δ_B) on an object of dimension b.
ModuleSpec free_module(const AlgebraSpec& a, std::size_t b);
ComoduleSpec cofree_comodule(const AlgebraSpec& a, std::size_t b);
BimoduleSpec free_bimodule(const AlgebraSpec& a, std::size_t b);

/// Linear conditions on an unknown morphism h (shaped dst × src):
///   module morphism    h·ρ_src = ρ_dst·(I_n ⊗ h)
///   comodule morphism  (I_n ⊗ h)·ω_src = ω_dst·h
///   class              P·h = h
void constrain_module_morphism(LinearConstraints& lc, std::size_t n, const RatMatrix& src_action,
                               const RatMatrix& dst_action);
void constrain_comodule_morphism(LinearConstraints& lc, std::size_t n,
                                 const RatMatrix& src_coaction, const RatMatrix& dst_coaction);
void constrain_class(LinearConstraints& lc, const RatMatrix& projector);

bool surjective(const RatMatrix& m);
bool injective(const RatMatrix& m);

/// One test object of a firmness check.
struct FirmMember {
  std::string label;
  std::size_t dim = 0;
  std::size_t forks = 0;    // dimension of the space of equalising class morphisms
  std::size_t liftable = 0; // dimension of the class hom-space out of (into) B
  bool factors = false;     // every fork factors through the structure map
  bool unique = false;      // the factorisation is unique in the class
  bool ok() const { return factors && unique; }
};

struct FirmReport {
  ClassKind cls = ClassKind::all;
  bool structure_in_class = false;  // ρ (resp. ω) itself lies in the class
  bool epi = false;                 // ρ surjective (resp. ω injective: mono)
  std::vector<FirmMember> members;

  /// K-(co)firm relative to the tested family.
  bool k_firm() const;
  /// Classical firmness: all-class K-firm plus ρ epi (resp. ω mono).
  bool firm() const { return k_firm() && epi; }
  /// The verdict for the class: over all morphisms firmness also needs ρ (ω)
  /// to be surjective (injective), within a restricted class it does not.
  bool passes() const { return cls == ClassKind::all ? firm() : k_firm(); }
};

/// Decides whether the fork FF(B) ⇉ F(B) → B is a K-coequaliser relative to
/// the family {B, F(B)} ∪ extra. Class membership of morphisms into Q uses Q's
/// projector, so ϑ and all need module structure only.
FirmReport verify_firm(const AlgebraSpec& a, const ModuleSpec& m, ClassKind cls,
                       const std::vector<ModuleSpec>& extra = {});
/// θ-class variant; every test object must carry a coaction as well.
FirmReport verify_firm(const AlgebraSpec& a, const BimoduleSpec& bm, ClassKind cls,
                       const std::vector<BimoduleSpec>& extra = {});

FirmReport verify_cofirm(const AlgebraSpec& a, const ComoduleSpec& c, ClassKind cls,
                         const std::vector<ComoduleSpec>& extra = {});
FirmReport verify_cofirm(const AlgebraSpec& a, const BimoduleSpec& bm, ClassKind cls,
                         const std::vector<BimoduleSpec>& extra = {});

/// F^k(B) as a free module / cofree comodule / free bimodule, k ≥ 1.
ModuleSpec iterated_free_module(const AlgebraSpec& a, std::size_t b, std::size_t k);
ComoduleSpec iterated_cofree_comodule(const AlgebraSpec& a, std::size_t b, std::size_t k);
BimoduleSpec iterated_free_bimodule(const AlgebraSpec& a, std::size_t b, std::size_t k);

}  // namespace wfm
