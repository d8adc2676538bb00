#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affine {

inline constexpr const char* kLibraryVersion = "0.1.0";

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit status: 0 for success/pass, 1 for a falsified check or a
// negative query, 2 for usage or internal errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affine
