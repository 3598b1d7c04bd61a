// runner: subcommand dispatch shared by the C API and the CLI. Each
// subcommand validates its key=value config (unknown keys rejected), writes
// CSV/JSON artifacts into the output root, and returns a JSON summary.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace qs {

struct RunOutcome {
  int status = 0;           // 0 ok, 1 property failure, 2 usage
  std::string summary_json; // always set on status 0/1
  std::string message;      // human-readable; error text on failure
};

RunOutcome run_subcommand(const std::string& name,
                          const std::map<std::string, std::string>& config);

std::vector<std::string> subcommand_names();
// per-subcommand help: accepted keys and emitted CSV columns
std::string subcommand_help(const std::string& name);

}  // namespace qs
