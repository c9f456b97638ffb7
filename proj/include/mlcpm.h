/* mlcpm: overlapping community detection in edge-labeled multigraphs.
 *
 * C interface. All functions are thread-compatible; the last-error string
 * is thread-local. Handles own their data and may be freed in any order.
 */
#ifndef MLCPM_H
#define MLCPM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MLCPM_API __declspec(dllexport)
#else
#define MLCPM_API __attribute__((visibility("default")))
#endif

/* Status codes. Zero is success; nonzero values match the CLI exit codes. */
#define MLCPM_OK 0
#define MLCPM_ERR_INTERNAL 1
#define MLCPM_ERR_USAGE 2
#define MLCPM_ERR_PARSE 3
#define MLCPM_ERR_CAPACITY 4
#define MLCPM_ERR_IO 5

typedef struct mlcpm_network mlcpm_network; /* immutable parsed network */
typedef struct mlcpm_result mlcpm_result;   /* one detection or enumeration run */

/* --- diagnostics --------------------------------------------------------- */

/* Message for the most recent failing call on this thread ("" if none).
 * Valid until the next failing call on the same thread. */
MLCPM_API const char* mlcpm_last_error(void);

MLCPM_API const char* mlcpm_version(void);

/* "ok", "usage", "parse", ... for a status code; "unknown" otherwise. */
MLCPM_API const char* mlcpm_status_name(int status);

/* --- networks ------------------------------------------------------------ */

/* Parse a sectioned multiplex edge list from a file or a buffer. `name`
 * labels the source in reports; NULL means the file path / "<string>". */
MLCPM_API int mlcpm_network_read_file(const char* path, mlcpm_network** out);
MLCPM_API int mlcpm_network_read_string(const char* text, const char* name,
                                        mlcpm_network** out);
MLCPM_API void mlcpm_network_free(mlcpm_network* net);

MLCPM_API size_t mlcpm_network_node_count(const mlcpm_network* net);
MLCPM_API size_t mlcpm_network_layer_count(const mlcpm_network* net);
MLCPM_API size_t mlcpm_network_edge_count(const mlcpm_network* net);

/* Summary text (layer table, totals, digest). Free with mlcpm_free_string. */
MLCPM_API int mlcpm_network_render_stats(const mlcpm_network* net, char** out);

/* Serialized network, parseable by mlcpm_network_read_string. */
MLCPM_API int mlcpm_network_write_string(const mlcpm_network* net, char** out);

/* --- detection ----------------------------------------------------------- */

/* overlap_rule: "k-1" (default when NULL) or "k".
 * k must be >= 2, m >= 1; violations return MLCPM_ERR_USAGE. */
MLCPM_API int mlcpm_detect(const mlcpm_network* net, int k, int m,
                           const char* overlap_rule, mlcpm_result** out);

/* Same contract, brute-force reference implementation. Subject to small
 * size caps; exceeding them returns MLCPM_ERR_CAPACITY. */
MLCPM_API int mlcpm_detect_oracle(const mlcpm_network* net, int k, int m,
                                  const char* overlap_rule, mlcpm_result** out);

/* Maximal clique enumeration only; the result has zero communities. */
MLCPM_API int mlcpm_enumerate_cliques(const mlcpm_network* net, int k, int m,
                                      mlcpm_result** out);

MLCPM_API void mlcpm_result_free(mlcpm_result* result);

MLCPM_API size_t mlcpm_result_community_count(const mlcpm_result* result);
MLCPM_API size_t mlcpm_result_clique_count(const mlcpm_result* result);

/* format: "plain", "structured" (JSON), or "dot".
 * Free *out with mlcpm_free_string. */
MLCPM_API int mlcpm_result_render(const mlcpm_result* result, const char* format,
                                  char** out);

MLCPM_API void mlcpm_free_string(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MLCPM_H */
