#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey {

// Runs one CLI invocation. Deterministic results go to `out`; diagnostics
// and timings go to `err`. Exit codes: 0 arrows / success, 1 witness
// colouring found (arrows subcommand), 2 parse, guard, or integrity errors.
int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace ramsey
