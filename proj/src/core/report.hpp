// report: deterministic CSV/JSON plumbing — manifest headers, %.17g number
// formatting, and output-path resolution.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace qs {

inline constexpr const char* kVersion = "0.1.0";

std::string fmt17(double v);

struct Manifest {
  std::string subcommand;
  std::map<std::string, std::string> params;  // resolved config, echoed verbatim
};

// "# qsieve <version>" then "# subcommand=..." then one "# key=value" per
// parameter in sorted key order
std::string manifest_header(const Manifest& m);

struct Csv {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Manifest& m, const Csv& table);

void write_text_file(const std::string& path, const std::string& content);

// config["out"] beats QS_OUTPUT_ROOT beats "."
std::string output_root(const std::map<std::string, std::string>& config);

}  // namespace qs
