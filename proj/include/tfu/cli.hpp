#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tfu {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitNumerical = 2;

/// Runs one `tfu` command. Reports go to `out`; failures print a single line
/// `error code=<CODE> message="<text>"` to `err`. Returns 0 on success, 1 on
/// invalid input or a failed verify-all, 2 on numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace tfu
