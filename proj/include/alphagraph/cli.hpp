#ifndef ALPHAGRAPH_CLI_HPP
#define ALPHAGRAPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace alphagraph::cli {

// Exit codes: 0 success, 2 verification-suite violation, 3 classification
// violation inside a guaranteed algorithm, 64 bad flags, 66 unreadable or
// malformed input. A JSON report goes to `out` in every case except --help.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alphagraph::cli

#endif
