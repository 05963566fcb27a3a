#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetcube {

/// Command dispatch for the posetcube tool; args excludes the program name.
/// Returns 0 on success, 1 on domain failures (including an infeasible
/// `embed` and an invalid `verify`), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetcube
