#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppi {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;

// Command-line entry point. args excludes the program name; "-" or a missing
// --in reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ppi
