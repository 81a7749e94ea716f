#pragma once

namespace gftv {

// Full command-line driver.  Exit codes: 0 success, 1 oracle/check
// failure, 2 violation found, 64 usage or input error.
int run_cli(int argc, const char* const* argv);

} // namespace gftv
