#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "wfm/ratmat.hpp"

namespace wfm {

enum class Status { holds, fails, absent };

const char* to_string(Status s);

/// First entry where two composites differ.
struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational lhs;
  Rational rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of one exact identity between two matrices.
struct AxiomCheck {
  std::string id;
  Status status = Status::absent;
  std::optional<Witness> witness;
  // Both sides, kept for verbose reporting of failures.
  std::optional<RatMatrix> lhs;
  std::optional<RatMatrix> rhs;

  bool holds() const { return status == Status::holds; }
  bool fails() const { return status == Status::fails; }
  bool absent() const { return status == Status::absent; }

  friend bool operator==(const AxiomCheck&, const AxiomCheck&) = default;
};

/// Compares lhs and rhs exactly. Throws ShapeMismatch if shapes differ.
AxiomCheck compare(std::string id, const RatMatrix& lhs, const RatMatrix& rhs);
AxiomCheck absent_check(std::string id);
/// A verdict that is not a matrix identity.
AxiomCheck verdict(std::string id, bool ok);

std::string describe(const AxiomCheck& check);

}  // namespace wfm
