#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qalink {

// Runs one CLI command (args exclude the program name). Streams are injected
// so tests can drive the full command surface in-process. Exit codes: 0
// success, 1 failed check (inconclusive certificate, failing report), 2
// usage error or malformed input.
int cmd_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                 std::ostream& err);

}  // namespace qalink
