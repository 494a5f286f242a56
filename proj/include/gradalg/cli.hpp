#pragma once

#include "gradalg/scalar.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gradalg::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { Ok = 0, PropertyFalse = 1, BadInput = 2, OutOfBudget = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "Q", "GF:p" or "GF(p)".
Field parse_field_spec(const std::string& text);

}  // namespace gradalg::cli
