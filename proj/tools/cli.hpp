#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace extquot {

/// Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extquot
