#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cvm::cli {

// args excludes the program name. Exit codes: 0 success, 1 validation or
// usage error, 2 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cvm::cli
