#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace g1::cli {

enum ExitCode { ok = 0, math_error = 1, usage_error = 2 };

// args excludes the program name. Payload goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g1::cli
