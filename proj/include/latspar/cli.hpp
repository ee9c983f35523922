#pragma once

namespace latspar {

// Exit codes: 0 success, 1 usage error / malformed file, 2 infeasible or
// invalid input (including failed verify checks), 3 internal assertion.
int run_cli(int argc, const char* const* argv);

}  // namespace latspar
