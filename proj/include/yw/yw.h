/* C interface to the two-colored partition library. All functions return a
 * yw_status; on failure yw_last_error() describes the problem (thread-local).
 * Strings returned through char** are owned by the caller: release them with
 * yw_string_free. */
#ifndef YW_H
#define YW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define YW_API __declspec(dllexport)
#else
#define YW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  YW_OK = 0,
  YW_E_INVALID = 1,   /* bad argument or configuration */
  YW_E_DOMAIN = 2,    /* input outside the operation's domain */
  YW_E_RESOURCE = 3,  /* enumeration budget exceeded */
  YW_E_OVERFLOW = 4,
  YW_E_INTERNAL = 5
} yw_status;

typedef struct yw_config yw_config;
typedef struct yw_partition yw_partition;
typedef struct yw_list yw_list;

YW_API const char* yw_last_error(void);
YW_API const char* yw_version(void);
YW_API void yw_string_free(char* s);

/* family: A2even A2odd B1 D1 D2; weight: L0 L1 Ln-1 Ln. For D2 rank is n+1. */
YW_API yw_status yw_config_new(const char* family, int rank, const char* weight, yw_config** out);
YW_API void yw_config_free(yw_config* c);
YW_API yw_status yw_config_json(const yw_config* c, char** json);

/* Text form "33,31,28~,28~": "~" marks a bar. */
YW_API yw_status yw_partition_parse(const char* text, yw_partition** out);
YW_API void yw_partition_free(yw_partition* p);
YW_API size_t yw_partition_length(const yw_partition* p);
YW_API int yw_partition_size(const yw_partition* p);
YW_API yw_status yw_partition_part(const yw_partition* p, size_t i, int* value, int* barred);
YW_API yw_status yw_partition_to_string(const yw_partition* p, char** out);

/* kind: z ao1 ao2 ao1-restricted ao2-restricted ao1-classical .. ao5-classical
 * strict strict-avoiding odd overpartitions pt. cfg may be NULL for kinds
 * that do not need one. N is the classical modulus (or U for strict-avoiding). */
YW_API yw_status yw_enumerate(const char* kind, const yw_config* cfg, const int* X, size_t nx, int N,
                              int m, yw_list** out);
YW_API yw_status yw_count(const char* kind, const yw_config* cfg, const int* X, size_t nx, int N, int m,
                          int64_t* out);
YW_API size_t yw_list_size(const yw_list* l);
YW_API yw_status yw_list_get(const yw_list* l, size_t i, yw_partition** out);
YW_API yw_status yw_list_json(const yw_list* l, char** json);
YW_API void yw_list_free(yw_list* l);

YW_API yw_status yw_contains(const char* kind, const yw_config* cfg, const int* X, size_t nx, int N,
                             const yw_partition* p, int* result);

YW_API yw_status yw_theta(const yw_config* c, const yw_partition* in, yw_partition** out);
YW_API yw_status yw_theta_inv(const yw_config* c, const yw_partition* in, yw_partition** out);

/* Runs one algorithm and returns a JSON object {algorithm, direction, input,
 * output, extracted, trace}. algo: theta A B C D E F Dprime po ps. For the
 * backward direction of a reduction, extra carries the extracted partition. */
YW_API yw_status yw_bijection_json(const yw_config* c, const char* algo, int forward, const char* input,
                                   const char* extra, int trace, char** json);

/* Coefficients 0..M of prod (1+t^i)^kappa_i into out[0..M]. */
YW_API yw_status yw_product_series(const yw_config* c, int M, int64_t* out, size_t n);

/* identity: ao fock euler restricted classical theta. cfg may be NULL for
 * euler and classical. Writes the JSON report and pass flag. */
YW_API yw_status yw_verify(const char* identity, const yw_config* c, int max_size, int jobs, char** json,
                           int* pass);

/* Replays every worked example; JSON report of named checks. */
YW_API yw_status yw_selfcheck(char** json, int* pass);

#ifdef __cplusplus
}
#endif

#endif
