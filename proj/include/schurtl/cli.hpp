#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurtl::cli {

/// Dispatches one invocation. Exit codes: 0 success / no violations,
/// 1 violation or counterexample found, 2 usage error, 3 internal
/// consistency failure (including arithmetic overflow).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurtl::cli
