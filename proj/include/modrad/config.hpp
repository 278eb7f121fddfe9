#pragma once

#include <stdexcept>
#include <string>

namespace modrad {

enum class Errc {
  BadModulus,
  CapExceeded,
  AxiomViolation,
  BadTable,
  IntegerAdapter,   // operation undefined on the symbolic integer ring
  RingMismatch,
  BadElement,
  EmptyScalarSet,
  PairIdealIllegal,
  NonMultiplication,
  ZeroModule,
  DegenerateLocalization,
  UnknownClaim,
  UnknownPredicate,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct Caps {
  int carrier = 4096;      // max carrier size for rings/modules (MODRAD_CAP overrides)
  int ideals = 10000;      // max enumerated ideals per ring
  int submodules = 20000;  // max enumerated submodules per module
};

// process-wide caps; carrier is seeded from MODRAD_CAP if set
Caps& caps();

}  // namespace modrad
