#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "castella/error.hpp"

namespace castella {

/// Reads CASTELLA_NODE_CAP when set.  Throws DomainError on a malformed value.
Limits limits_from_env();

/// args excludes the program name.  Exit codes: 0 ok, 1 domain or parse error,
/// 2 resource cap, 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace castella
