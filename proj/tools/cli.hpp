#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace evoalg::cli {

/// Runs one command line (without the program name). Exit status: 0 on
/// success, 1 on domain errors (and failed census/selftest runs), 2 on parse
/// errors, 3 on internal errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace evoalg::cli
