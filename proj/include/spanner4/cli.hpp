#pragma once

#include <string>
#include <vector>

namespace spanner4 {

/// Command-line entry point (gen / build / verify / stretch / svg / bench).
/// Returns the process exit code: 0 all certifications pass, 1 violation
/// found, 2 input or degeneracy error.
int run_cli(const std::vector<std::string>& args);

} // namespace spanner4
