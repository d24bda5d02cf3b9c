#pragma once

#include <iosfwd>

namespace qcoh::cli {

// Exit codes: 0 success / suite passed, 1 suite failure, 2 bad flags,
// 3 malformed or invalid input file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qcoh::cli
