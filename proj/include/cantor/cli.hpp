#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cantor::cli {

/// Runs the cantor-kit command line. args excludes the program name.
/// Returns 0 on success, 1 on bad input or a failed check, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
