#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lsb::cli {

/// Entry point of the lsb tool. Exit codes: 0 success/Holds/Agree,
/// 1 Fails/Disagree/axiom violation, 2 usage or precondition error,
/// 3 unsupported method for the field.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsb::cli
