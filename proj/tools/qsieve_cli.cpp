// qsieve command-line front end. Talks to the core exclusively through the
// shared-library C API. Usage:
//   qsieve <subcommand> [--config FILE] [--key value]...
// Config files hold one key=value per line ('#' comments); flags win over
// file entries. Exit codes: 0 ok, 1 property failure, 2 usage error.
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "qsieve/qsieve.h"

namespace {

int usage(const char* msg) {
  if (msg) std::fprintf(stderr, "error: %s\n", msg);
  std::fprintf(stderr,
               "usage: qsieve <subcommand> [--config FILE] [--key value]...\n"
               "       qsieve --list | --help | <subcommand> --help\n"
               "Artifacts go to --out DIR (else $QS_OUTPUT_ROOT, else .).\n");
  return 2;
}

int list_subcommands() {
  char* names = qs_subcommands();
  std::printf("%s\n", names);
  qs_free(names);
  return 0;
}

int help_for(const std::string& name) {
  char* h = qs_help(name.c_str());
  if (!h) {
    std::fprintf(stderr, "error: unknown subcommand '%s'\n", name.c_str());
    return 2;
  }
  std::printf("qsieve %s\n  %s\n", name.c_str(), h);
  qs_free(h);
  return 0;
}

bool load_config_file(const std::string& path, std::map<std::string, std::string>& config) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) return false;
    // flags win: only take file entries for keys not already set
    config.emplace(line.substr(0, eq), line.substr(eq + 1));
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) return usage(nullptr);
  std::string first = argv[1];
  if (first == "--list") return list_subcommands();
  if (first == "--help" || first == "-h") {
    usage(nullptr);
    std::fprintf(stderr, "\nsubcommands (see '<subcommand> --help'):\n");
    char* names = qs_subcommands();
    std::fprintf(stderr, "%s\n", names);
    qs_free(names);
    return 0;
  }
  if (first == "--version") {
    std::printf("qsieve %s\n", qs_version());
    return 0;
  }

  std::map<std::string, std::string> config;
  std::string config_file;
  for (int i = 2; i < argc; i++) {
    std::string arg = argv[i];
    if (arg == "--help" || arg == "-h") return help_for(first);
    if (arg.rfind("--", 0) != 0) return usage(("unexpected argument '" + arg + "'").c_str());
    std::string key = arg.substr(2);
    if (i + 1 >= argc) return usage(("flag --" + key + " needs a value").c_str());
    std::string val = argv[++i];
    if (key == "config") {
      config_file = val;
    } else if (!config.emplace(key, val).second) {
      return usage(("duplicate flag --" + key).c_str());
    }
  }
  if (!config_file.empty() && !load_config_file(config_file, config))
    return usage(("cannot parse config file '" + config_file + "'").c_str());

  std::vector<const char*> keys, vals;
  for (const auto& [k, v] : config) {
    keys.push_back(k.c_str());
    vals.push_back(v.c_str());
  }
  char* json = nullptr;
  int status = qs_run(first.c_str(), keys.data(), vals.data(), keys.size(), &json);
  if (status == 0) {
    std::printf("%s\n", json ? json : "{}");
  } else {
    std::fprintf(stderr, "qsieve %s: %s\n", first.c_str(), qs_last_error());
  }
  qs_free(json);
  return status;
}
