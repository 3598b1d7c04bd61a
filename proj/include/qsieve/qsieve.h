/* qsieve C API: opaque handles, integer status codes, caller-freed strings.
 * All functions are thread-compatible; qs_last_error is thread-local. */
#ifndef QSIEVE_H
#define QSIEVE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define QS_OK 0    /* success */
#define QS_FAIL 1  /* property failure or runtime error */
#define QS_USAGE 2 /* bad subcommand, key, or value */

/* library version string, static storage (do not free) */
const char* qs_version(void);

/* message for the last failing call on this thread, static storage */
const char* qs_last_error(void);

/* frees a string returned through an out-parameter */
void qs_free(char* s);

/* ------------------------------------------------------------ prime table */

typedef struct qs_prime_table qs_prime_table;

/* NULL on failure (see qs_last_error) */
qs_prime_table* qs_prime_table_create(uint64_t limit);
void qs_prime_table_destroy(qs_prime_table* pt);
uint64_t qs_prime_table_count(const qs_prime_table* pt);
int qs_prime_table_is_prime(const qs_prime_table* pt, uint64_t n);

/* ------------------------------------------------------- direct predicates */

int qs_in_p(uint64_t p);     /* 1/0 */
int qs_in_pstar(uint64_t p); /* 1/0 */

/* 1 when Kn+b is amenable; 0 otherwise */
int qs_is_amenable(int64_t K, int64_t b);

/* evaluates H(rho1, rho2, sigma); returns QS_OK when it holds, QS_FAIL when
 * it fails, QS_USAGE on invalid parameters. *margin receives I1 - I2 - 1e-10
 * when non-NULL. */
int qs_check_h(double rho1, double rho2, double sigma, double* margin);

/* --------------------------------------------------------- generic runner */

/* Runs a subcommand with n key/value config pairs. Artifacts are written to
 * the output root (config key "out", else QS_OUTPUT_ROOT, else "."). On
 * QS_OK/QS_FAIL, *json_out (when non-NULL) receives the JSON summary or the
 * failure message; free it with qs_free. */
int qs_run(const char* subcommand, const char* const* keys, const char* const* vals, size_t n,
           char** json_out);

/* newline-joined subcommand names; free with qs_free */
char* qs_subcommands(void);

/* help text for one subcommand, or NULL if unknown; free with qs_free */
char* qs_help(const char* subcommand);

#ifdef __cplusplus
}
#endif

#endif /* QSIEVE_H */
