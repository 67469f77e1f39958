#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cepd {

/// Command-line front end. args excludes the program name. Reports go to
/// out, diagnostics to err. Returns the process exit status: 0 on success,
/// 1 on mathematical refusals, 2 on usage/parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cepd
