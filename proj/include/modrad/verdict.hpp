#pragma once

#include <string>
#include <vector>

namespace modrad {

struct WitnessPart {
  std::string role;
  long index = -1;  // element index where applicable, -1 otherwise
  std::string text;
};

// Result of a predicate check. witness is nonempty exactly when holds is
// false; flag marks labeled non-error outcomes ("improper", "degenerate").
struct Verdict {
  bool holds = true;
  std::vector<WitnessPart> witness;
  std::string flag;

  static Verdict yes() { return {}; }
  static Verdict no(std::vector<WitnessPart> w, std::string flag = "") {
    return Verdict{false, std::move(w), std::move(flag)};
  }
  static Verdict improper(std::string what) {
    return Verdict{false, {{"improper", -1, std::move(what)}}, "improper"};
  }
};

}  // namespace modrad
