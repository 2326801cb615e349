#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace valleyscape::cli {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `valleyscape` invocation. `args` excludes the program name.
/// Results go to files named by --out/--svg/--summary, or to `out`;
/// diagnostics go to `err`. Returns 0 on success, 1 on runtime errors and
/// 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace valleyscape::cli
