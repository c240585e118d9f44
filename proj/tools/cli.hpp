#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathhom::cli {

// args excludes the program name. Returns the process exit code: 0 on
// success, 2 on bad input or usage, 3 when a resource limit is hit.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pathhom::cli
