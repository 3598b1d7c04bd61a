#include "core/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qs {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string manifest_header(const Manifest& m) {
  std::ostringstream os;
  os << "# qsieve " << kVersion << "\n# subcommand=" << m.subcommand << '\n';
  for (const auto& [k, v] : m.params) os << "# " << k << '=' << v << '\n';
  return os.str();
}

std::string render_csv(const Manifest& m, const Csv& table) {
  std::ostringstream os;
  os << manifest_header(m);
  for (size_t i = 0; i < table.columns.size(); i++)
    os << table.columns[i] << (i + 1 < table.columns.size() ? ',' : '\n');
  if (table.columns.empty()) os << '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); i++) os << row[i] << (i + 1 < row.size() ? ',' : '\n');
    if (row.empty()) os << '\n';
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("short write: " + path);
}

std::string output_root(const std::map<std::string, std::string>& config) {
  auto it = config.find("out");
  if (it != config.end() && !it->second.empty()) return it->second;
  const char* env = std::getenv("QS_OUTPUT_ROOT");
  if (env && *env) return env;
  return ".";
}

}  // namespace qs
