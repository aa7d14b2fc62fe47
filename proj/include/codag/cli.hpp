#pragma once

#include <iosfwd>

namespace codag {

// Exit codes: 0 success, 1 check failed, 2 usage or parse error, 3 a
// construction's precondition does not hold for the input.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace codag
