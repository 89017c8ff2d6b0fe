#pragma once

#include <string>
#include <vector>

namespace mmas {

// Full command-line front end. Exit codes: 0 success (censored runs
// included), 1 usage error, 2 verification or oracle failure, 3 I/O error.
int cli_main(int argc, const char* const* argv);
// Same, argv[0] omitted.
int cli_main(const std::vector<std::string>& args);

}  // namespace mmas
