#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace oraclebench::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr int kSchemaVersion = 1;

// Runs the command line `args` (args[0] is the program name). Reports go to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oraclebench::cli
