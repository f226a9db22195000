#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wfm/modcat.hpp"
#include "wfm/pairings.hpp"
#include "wfm/weakstruct.hpp"

namespace wfm {

enum class EntryKind { algebra, pairing, module, comodule, bimodule };

const char* to_string(EntryKind k);

using Payload = std::variant<AlgebraSpec, PairingSpec, ModuleSpec, ComoduleSpec, BimoduleSpec>;

struct CatalogEntry {
  std::string name;
  Payload payload;
  std::string provenance;
  std::string algebra;  // name of the governing algebra for (co/bi)module entries, may be empty

  EntryKind kind() const { return static_cast<EntryKind>(payload.index()); }

  /// Typed access; throws SchemaError naming the expected kind.
  const AlgebraSpec& as_algebra() const;
  const PairingSpec& as_pairing() const;
  const ModuleSpec& as_module() const;
  const ComoduleSpec& as_comodule() const;
  const BimoduleSpec& as_bimodule() const;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Names accepted by builtin():
///   C2  C2n  Dual  Mat2  Mat2n  SelfC2  Zero(n)  Infl<X>_<k>
///   RegMod(X)  CoregComod(X)  RegBimod(X)  ZeroMod(X,b)  ZeroComod(X,b)
///   InflRegMod(X,k)  InflCoregComod(X,k)  Scalar(c,d)
/// where X is any algebra name and c, d are canonical rationals.
CatalogEntry builtin(std::string_view name);
bool is_builtin(std::string_view name);

/// The fixed set of names emitted by `catalog list`.
std::vector<std::string> builtin_names();

/// Embeds a into n+k dimensions along the first-n-coordinates inclusion i and
/// projection p: m' = i·m·(p⊗p), η' = i·η, δ' = (i⊗i)·δ·p, ε' = ε·p.
AlgebraSpec inflate(const AlgebraSpec& a, std::size_t k);
CatalogEntry inflate(const CatalogEntry& entry, std::size_t k);

/// Pads a module over an n-dimensional carrier by k coordinates on which the
/// action vanishes: ρ' = i·ρ·(I_n ⊗ p). Dually ω' = (I_n ⊗ i)·ω·p.
ModuleSpec inflate_module(const ModuleSpec& m, std::size_t n, std::size_t k);
ComoduleSpec inflate_comodule(const ComoduleSpec& c, std::size_t n, std::size_t k);

/// Canonical JSON text: sorted keys, two-space indent, trailing newline.
std::string serialize(const CatalogEntry& entry);
/// Throws ParseError, SchemaError or NonCanonicalRational.
CatalogEntry parse_entry(std::string_view text);

CatalogEntry load(const std::filesystem::path& path);
void save(const CatalogEntry& entry, const std::filesystem::path& path);

}  // namespace wfm
