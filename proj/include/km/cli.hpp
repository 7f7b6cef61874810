#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace km {

/// Runs one `km` request. JSON goes to `out`; `in` feeds verify-witness
/// when no --file is given. Returns 0 (decided), 2 (unknown within depth)
/// or 1 (usage or parse error).
int run(const std::vector<std::string>& argv, std::ostream& out, std::istream& in);

int run(int argc, const char* const* argv);

}  // namespace km
