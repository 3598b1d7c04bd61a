#include "qsieve/qsieve.h"

#include <cstring>
#include <map>
#include <string>

#include "core/analytic.hpp"
#include "core/arith.hpp"
#include "core/forms.hpp"
#include "core/report.hpp"
#include "core/runner.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& ex) {
    g_last_error = ex.what();
    return QS_FAIL;
  } catch (...) {
    g_last_error = "unknown error";
    return QS_FAIL;
  }
}

}  // namespace

extern "C" {

struct qs_prime_table {
  qs::PrimeTable table;
};

const char* qs_version(void) { return qs::kVersion; }

const char* qs_last_error(void) { return g_last_error.c_str(); }

void qs_free(char* s) { delete[] s; }

qs_prime_table* qs_prime_table_create(uint64_t limit) {
  qs_prime_table* pt = nullptr;
  guarded([&] {
    pt = new qs_prime_table{qs::PrimeTable(limit)};
    return QS_OK;
  });
  return pt;
}

void qs_prime_table_destroy(qs_prime_table* pt) { delete pt; }

uint64_t qs_prime_table_count(const qs_prime_table* pt) { return pt ? pt->table.count() : 0; }

int qs_prime_table_is_prime(const qs_prime_table* pt, uint64_t n) {
  return pt && pt->table.is_prime(n) ? 1 : 0;
}

int qs_in_p(uint64_t p) { return qs::in_P(p) ? 1 : 0; }

int qs_in_pstar(uint64_t p) { return qs::in_Pstar(p) ? 1 : 0; }

int qs_is_amenable(int64_t K, int64_t b) {
  int amenable = 0;
  guarded([&] {
    amenable = qs::is_amenable({K, b}).amenable ? 1 : 0;
    return QS_OK;
  });
  return amenable;
}

int qs_check_h(double rho1, double rho2, double sigma, double* margin) {
  return guarded([&] {
    if (!(rho2 > 0) || !(rho1 > 0) || !(sigma > 1)) {
      g_last_error = "qs_check_h: need rho1 > 0, rho2 > 0, sigma > 1";
      return QS_USAGE;
    }
    auto r = qs::check_H({rho1, rho2, sigma}, 1e-9);
    if (margin) *margin = r.margin;
    if (!r.holds) g_last_error = "H fails: margin=" + qs::fmt17(r.margin);
    return r.holds ? QS_OK : QS_FAIL;
  });
}

int qs_run(const char* subcommand, const char* const* keys, const char* const* vals, size_t n,
           char** json_out) {
  if (json_out) *json_out = nullptr;
  if (!subcommand || (n > 0 && (!keys || !vals))) {
    g_last_error = "qs_run: NULL argument";
    return QS_USAGE;
  }
  return guarded([&] {
    std::map<std::string, std::string> config;
    for (size_t i = 0; i < n; i++) {
      if (!keys[i] || !vals[i]) {
        g_last_error = "qs_run: NULL key or value";
        return QS_USAGE;
      }
      config[keys[i]] = vals[i];
    }
    auto out = qs::run_subcommand(subcommand, config);
    if (out.status != 0) g_last_error = out.message;
    if (json_out)
      *json_out = dup_string(out.status == 0 ? out.summary_json : out.message);
    return out.status;
  });
}

char* qs_subcommands(void) {
  std::string joined;
  for (const auto& name : qs::subcommand_names()) {
    if (!joined.empty()) joined += "\n";
    joined += name;
  }
  return dup_string(joined);
}

char* qs_help(const char* subcommand) {
  if (!subcommand) return nullptr;
  std::string h = qs::subcommand_help(subcommand);
  return h.empty() ? nullptr : dup_string(h);
}

}  // extern "C"
