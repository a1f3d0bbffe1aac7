#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dlrev {

// Runs the command line given without the program name. Returns 0 on
// success, 2 on parse or validation errors (error JSON on err), 1 on
// internal errors or a failing verification suite.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace dlrev
