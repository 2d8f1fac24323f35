/* C interface to the prodspec library.
 *
 * Graphs are opaque handles owned by the caller and released with
 * ps_graph_free. Every call that can fail returns a ps_status; on failure the
 * message is available from ps_last_error() on the same thread until the next
 * failing call. Strings returned through char** out-parameters are
 * heap-allocated by the library and released with ps_string_free.
 */
#ifndef PRODSPEC_H
#define PRODSPEC_H

#include <stddef.h>

#if defined(PRODSPEC_BUILDING_LIBRARY)
#define PS_API __attribute__((visibility("default")))
#else
#define PS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as the command-line exit codes. */
typedef enum ps_status {
  PS_OK = 0,
  PS_VERIFICATION_FAILED = 1,
  PS_PRECONDITION = 2,
  PS_DISCONNECTED = 3,
  PS_PARSE_ERROR = 4,
  PS_INTERNAL_ERROR = 5,
  PS_INVALID_ARGUMENT = 6
} ps_status;

typedef enum ps_kind { PS_KIND_L = 0, PS_KIND_Q = 1 } ps_kind;

typedef enum ps_format { PS_FORMAT_JSON = 0, PS_FORMAT_CSV = 1, PS_FORMAT_PLAIN = 2 } ps_format;

typedef enum ps_graph_encoding { PS_ENCODING_GRAPH6 = 0, PS_ENCODING_EDGE_LIST = 1 } ps_graph_encoding;

typedef struct ps_graph ps_graph;

typedef struct ps_sweep_options {
  size_t max_order;     /* bound on 2*n1*n2; 0 selects the default of 60 */
  unsigned jobs;        /* worker threads; 0 means 1 */
  double tolerance;     /* relative eigenvalue tolerance; <= 0 selects 1e-9 */
  int include_verbatim; /* nonzero: list mismatches of the printed formulas */
} ps_sweep_options;

PS_API const char* ps_version(void);
PS_API const char* ps_last_error(void);
PS_API void ps_string_free(char* s);

/* Family names (K4, C5, P4, S4, K3,3, Q3, petersen) or @path. */
PS_API ps_status ps_graph_from_spec(const char* spec, ps_graph** out);
PS_API ps_status ps_graph_from_edge_list(const char* text, ps_graph** out);
PS_API ps_status ps_graph_from_graph6(const char* text, ps_graph** out);
PS_API ps_status ps_graph_family(const char* name, const long* params, size_t param_count, ps_graph** out);
PS_API void ps_graph_free(ps_graph* g);

PS_API size_t ps_graph_order(const ps_graph* g);
PS_API size_t ps_graph_size(const ps_graph* g);
/* Common degree, or -1 when the graph is irregular. */
PS_API long ps_graph_regularity(const ps_graph* g);
PS_API int ps_graph_is_connected(const ps_graph* g);
PS_API ps_status ps_graph_encode(const ps_graph* g, ps_graph_encoding encoding, char** out);

/* Explicit product graph as a new handle. */
PS_API ps_status ps_product(const ps_graph* first, const ps_graph* second, ps_graph** out);
PS_API ps_status ps_corona(const ps_graph* first, const ps_graph* second, ps_graph** out);
/* JSON array of {"index","block","i","k"} records. */
PS_API ps_status ps_product_labeling(const ps_graph* first, const ps_graph* second, char** out);
PS_API ps_status ps_product_report(const ps_graph* first, const ps_graph* second, ps_format format,
                                   char** out);

/* JSON array of ascending decimal coefficient strings. */
PS_API ps_status ps_char_poly(const ps_graph* g, ps_kind kind, char** out);
PS_API ps_status ps_closed_char_poly(const ps_graph* first, const ps_graph* second, ps_kind kind,
                                     char** out);
PS_API ps_status ps_closed_form_report(const ps_graph* first, const ps_graph* second, ps_kind kind,
                                       ps_format format, double tolerance, char** out);

/* Decimal strings ("p" or "p/q"). */
PS_API ps_status ps_kirchhoff(const ps_graph* g, char** out);
PS_API ps_status ps_spanning_trees(const ps_graph* g, char** out);
PS_API ps_status ps_wiener(const ps_graph* g, char** out);
PS_API ps_status ps_invariants_report(const ps_graph* first, const ps_graph* second, ps_format format,
                                      char** out);

PS_API ps_status ps_is_integral(const ps_graph* g, ps_kind kind, int* integral);
PS_API ps_status ps_integrality_report(const ps_graph* first, const ps_graph* second, ps_kind kind,
                                       ps_format format, char** out);

/* Runs the verification sweep over every ordered pair of `graphs` (the
 * default set when count is 0). Returns PS_VERIFICATION_FAILED, with both
 * outputs filled in, when any check fails. `timings_csv` may be NULL. */
PS_API ps_status ps_verify(const ps_graph* const* graphs, const char* const* names, size_t count,
                           const ps_sweep_options* options, ps_format format, char** report,
                           char** timings_csv);

#ifdef __cplusplus
}
#endif

#endif /* PRODSPEC_H */
