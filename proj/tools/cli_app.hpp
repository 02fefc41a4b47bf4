#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ward::cli {

// Whole program logic, argv-style arguments without the program name.
// Exit codes: 0 success (including checks that report ok=false), 1 domain
// error (error JSON on out), 2 usage or input-parse error (text on err).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ward::cli
