#ifndef BOOKRAMSEY_BOOKRAMSEY_H
#define BOOKRAMSEY_BOOKRAMSEY_H

/*
 * C interface to the book Ramsey toolkit.
 *
 * Every fallible call returns a br_status; on failure br_last_error() holds a
 * message for the calling thread until its next call. Strings returned
 * through char** are heap-allocated and released with br_string_free.
 * Reports are JSON objects.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BR_API __declspec(dllexport)
#else
#define BR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum br_status {
  BR_OK = 0,
  BR_ERR_ARGUMENT = 1,
  BR_ERR_PARSE = 2,
  BR_ERR_VALIDATION = 3,
  BR_ERR_BUDGET = 4,       /* search stopped at its wall-clock budget */
  BR_ERR_INCONCLUSIVE = 5, /* search finished without an answer */
  BR_ERR_IO = 6,
  BR_ERR_INTERNAL = 7
} br_status;

typedef struct br_graph br_graph;
typedef struct br_spec br_spec;
typedef struct br_enumeration br_enumeration;
typedef struct br_registry br_registry;

BR_API const char* br_version(void);
BR_API const char* br_last_error(void);
BR_API void br_string_free(char* s);

/* Graphs. */
BR_API br_status br_graph_from_graph6(const char* text, br_graph** out);
BR_API br_status br_graph_from_matrix(const char* text, br_graph** out);
/* graph6 when the text is a single token, otherwise 0/1 matrix rows. */
BR_API br_status br_graph_parse(const char* text, br_graph** out);
BR_API br_status br_graph_complete_bipartite(uint32_t a, uint32_t b, br_graph** out);
BR_API void br_graph_free(br_graph* g);
BR_API size_t br_graph_order(const br_graph* g);
BR_API br_status br_graph_has_edge(const br_graph* g, uint32_t u, uint32_t v, int* out);
BR_API br_status br_graph_to_graph6(const br_graph* g, char** out);
BR_API br_status br_graph_to_matrix(const br_graph* g, char** out);
BR_API br_status br_graph_canonical_form(const br_graph* g, char** out);
/* pass = no edge with >= r common neighbors and no non-edge with >= s
 * common non-neighbors. */
BR_API br_status br_graph_check(const br_graph* g, uint32_t r, uint32_t s, int* pass, char** report);

/* Γ(Q,Q,N) over F_q, q = 1 (mod 4). */
BR_API br_status br_paley_book_graph(uint64_t q, br_graph** out);
/* Graph verdict, difference-condition verdict and residue counts. */
BR_API br_status br_paley_report(uint64_t q, int* pass, char** report);

/* Two-block circulant specs: "m; D11={..}; D12={..}[; D22={..}]". */
BR_API br_status br_spec_parse(const char* text, br_spec** out);
BR_API void br_spec_free(br_spec* spec);
BR_API br_status br_spec_format(const br_spec* spec, char** out);
BR_API br_status br_spec_expand(const br_spec* spec, br_graph** out);
BR_API br_status br_spec_check(const br_spec* spec, uint32_t r, uint32_t s, int* pass, char** report);

/* DIMACS CNF whose models are Ramsey (B_r, B_s, n) graphs. var_map may be
 * NULL. */
BR_API br_status br_encode_sat(uint32_t n, uint32_t r, uint32_t s, int symmetry, char** dimacs, char** var_map);

/* LP feasibility model over 2-block circulant specs on Z_m. */
BR_API br_status br_encode_ip(uint32_t m, uint32_t r, uint32_t s, int complement_ansatz, int d11_eq_d12,
                              const uint32_t* pinned, size_t pinned_count, char** lp);
/* Reads "name value" lines of a solver solution. */
BR_API br_status br_decode_ip(uint32_t m, const char* solution, int complement_ansatz, br_spec** out);

/* Isomorph-free enumeration. budget_seconds 0 means unlimited. On
 * BR_ERR_BUDGET *out still receives a result with the completed levels and
 * no graphs. */
BR_API br_status br_enumerate(uint32_t n, uint32_t r, uint32_t s, double budget_seconds, unsigned workers,
                              br_enumeration** out);
BR_API void br_enumeration_free(br_enumeration* e);
BR_API size_t br_enumeration_count(const br_enumeration* e);
/* Borrowed pointer, valid until br_enumeration_free. */
BR_API const char* br_enumeration_graph(const br_enumeration* e, size_t i);
BR_API br_status br_enumeration_summary(const br_enumeration* e, char** report);
/* Least n <= n_cap with no Ramsey (B_r, B_s, n) graph. */
BR_API br_status br_ramsey_number(uint32_t r, uint32_t s, uint32_t n_cap, double budget_seconds, unsigned workers,
                                  char** report);

/* Bundled witnesses. */
BR_API br_status br_appendix_verify(int* all_pass, char** report);

/* Bounds registry (JSON lines). */
BR_API br_status br_registry_seeded(br_registry** out);
BR_API br_status br_registry_load(const char* path, br_registry** out);
BR_API br_status br_registry_save(const br_registry* reg, const char* path);
BR_API void br_registry_free(br_registry* reg);
BR_API size_t br_registry_size(const br_registry* reg);
BR_API br_status br_registry_put(br_registry* reg, const char* record_json);
BR_API br_status br_registry_query(const br_registry* reg, uint32_t r, uint32_t s, char** report);
BR_API br_status br_registry_verify_all(const br_registry* reg, int* all_pass, char** report);
BR_API br_status br_registry_to_jsonl(const br_registry* reg, char** out);

#ifdef __cplusplus
}
#endif

#endif
