#include "wfm/check.hpp"

#include <sstream>

#include "wfm/errors.hpp"

namespace wfm {

const char* to_string(Status s) {
  switch (s) {
    case Status::holds:
      return "holds";
    case Status::fails:
      return "fails";
    case Status::absent:
      return "n/a";
  }
  return "?";
}

AxiomCheck compare(std::string id, const RatMatrix& lhs, const RatMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw ShapeMismatch(id + ": composites have different shapes");
  AxiomCheck check{std::move(id), Status::holds, std::nullopt, std::nullopt, std::nullopt};
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      if (lhs(r, c) != rhs(r, c)) {
        check.status = Status::fails;
        check.witness = Witness{r, c, lhs(r, c), rhs(r, c)};
        check.lhs = lhs;
        check.rhs = rhs;
        return check;
      }
    }
  }
  return check;
}

AxiomCheck absent_check(std::string id) { return {std::move(id), Status::absent, {}, {}, {}}; }

AxiomCheck verdict(std::string id, bool ok) {
  return {std::move(id), ok ? Status::holds : Status::fails, {}, {}, {}};
}

std::string describe(const AxiomCheck& check) {
  std::ostringstream os;
  os << check.id << ": " << to_string(check.status);
  if (check.witness)
    os << " (entry (" << check.witness->row << "," << check.witness->col << "): "
       << to_string(check.witness->lhs) << " vs " << to_string(check.witness->rhs) << ")";
  return os.str();
}

}  // namespace wfm
