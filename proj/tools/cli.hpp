#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3chambers::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInfeasible = 3;

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out` as JSON, diagnostics to `err`.
///
/// A model argument is a file path, "-" for standard input, or
/// "gallery:<id>" for a built-in example.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3chambers::cli
