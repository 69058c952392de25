#pragma once

#include <ostream>
#include <span>
#include <string>

namespace analog {

/// Command-line entry point; args excludes the program name.
/// Returns 0 on success, 2 on usage errors, 1 on computation errors.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace analog
