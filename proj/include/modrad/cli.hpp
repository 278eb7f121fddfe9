#pragma once

#include <iosfwd>

namespace modrad {
namespace cli {

// exit status: 0 success / predicate true / all PASS,
//              1 predicate false / any FAIL, 2 usage or parse error
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace modrad
