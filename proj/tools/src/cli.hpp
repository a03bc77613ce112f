#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace toric::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitBudget = 3,
  kExitInternal = 4,
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the process environment.
std::optional<std::string> process_env(const std::string& name);

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`; the return value is an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env = process_env);

}  // namespace toric::cli
