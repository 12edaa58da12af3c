#ifndef FIDRES_CLI_APP_HPP
#define FIDRES_CLI_APP_HPP

// Command-line front end. run() is the whole program: exit 0 with a JSON
// result on `out`, exit 2 on usage errors, exit 1 on domain/numeric/file
// errors with a machine-readable error JSON on `err`. Every subcommand is
// deterministic given its inputs and --seed (FIDRES_SEED is the fallback;
// the default seed is 0).

#include <iosfwd>
#include <string>
#include <vector>

namespace fidres::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fidres::cli

#endif
