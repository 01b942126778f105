#ifndef OG10_OG10_H
#define OG10_OG10_H

/* C interface to the og10 lattice library.
 *
 * Every function returns an og10_status. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Strings handed
 * out by the library are released with og10_string_free. Integers that can
 * exceed 64 bits are exchanged as decimal strings. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(OG10_BUILDING_LIBRARY)
#    define OG10_API __declspec(dllexport)
#  else
#    define OG10_API __declspec(dllimport)
#  endif
#else
#  define OG10_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum og10_status {
  OG10_OK = 0,
  OG10_ERR_INVALID_ARGUMENT,
  OG10_ERR_DIMENSION_MISMATCH,
  OG10_ERR_NOT_SYMMETRIC,
  OG10_ERR_NOT_EVEN,
  OG10_ERR_DEGENERATE,
  OG10_ERR_ZERO_VECTOR,
  OG10_ERR_NOT_PRIMITIVE,
  OG10_ERR_NON_NEGATIVE_SQUARE,
  OG10_ERR_NO_U2_WITNESS,
  OG10_ERR_RANK_TOO_LARGE,
  OG10_ERR_NOT_APPLICABLE,
  OG10_ERR_NO_AMBIENT_EMBEDDING,
  OG10_ERR_NOT_HALF_INTEGRAL,
  OG10_ERR_NOT_OG10_VECTOR,
  OG10_ERR_INCONSISTENT,
  OG10_ERR_NOT_PROPORTIONAL_TO_WALL,
  OG10_ERR_EMBEDDING_NOT_FOUND,
  OG10_ERR_ON_WALL,
  OG10_ERR_NOT_CUBIC_GRAM,
  OG10_ERR_PARSE,
  OG10_ERR_UNKNOWN_COMMAND,
  OG10_ERR_UNKNOWN_PRESET,
  OG10_ERR_INTERNAL
} og10_status;

/* Wall and prime exceptional types; -1 means "not a wall" / "not pex". */
enum {
  OG10_WALL_NEG2_DIV1 = 0,
  OG10_WALL_NEG4_DIV1 = 1,
  OG10_WALL_NEG6_DIV3 = 2,
  OG10_WALL_NEG24_DIV3 = 3,
  OG10_NOT_A_WALL = -1
};

typedef struct og10_lattice og10_lattice;

OG10_API const char* og10_status_name(og10_status status);
/* 0 for OK, 2 for input validation failures, 1 for everything else. */
OG10_API int og10_status_exit_code(og10_status status);
/* Detail of the last failure on the calling thread. Never NULL. */
OG10_API const char* og10_last_error(void);
OG10_API void og10_string_free(char* s);

/* entries: rank*rank Gram entries in row-major order. */
OG10_API og10_status og10_lattice_from_gram(const long long* entries, size_t rank,
                                            og10_lattice** out);
/* "og10", "U", "A2", "E8", "P_V", "P_V^t". */
OG10_API og10_status og10_lattice_named(const char* name, og10_lattice** out);
OG10_API og10_status og10_lattice_from_json(const char* json, og10_lattice** out);
OG10_API void og10_lattice_free(og10_lattice* lattice);

OG10_API size_t og10_lattice_rank(const og10_lattice* lattice);
OG10_API og10_status og10_lattice_signature(const og10_lattice* lattice, size_t* positive,
                                            size_t* negative);
OG10_API og10_status og10_lattice_pair(const og10_lattice* lattice, const long long* u,
                                       const long long* v, size_t n, char** out_decimal);
OG10_API og10_status og10_lattice_divisibility(const og10_lattice* lattice, const long long* v,
                                               size_t n, char** out_decimal);
OG10_API og10_status og10_lattice_discriminant_order(const og10_lattice* lattice,
                                                     char** out_decimal);

/* Divisibility is taken in the OG10 lattice, so the lattice must be og10 or
 * carry an embedding into it. */
OG10_API og10_status og10_wall_type(const og10_lattice* lattice, const long long* v, size_t n,
                                    int* out_type);
OG10_API og10_status og10_pex_type(const og10_lattice* lattice, const long long* v, size_t n,
                                   int* out_type);

/* Runs one CLI command. request_json is the command's JSON request and
 * format one of "json", "svg", "csv" (NULL means json). On success *output
 * holds the rendered result; on failure *error_json holds
 * {"error": code, "detail": text}. Either out pointer may be NULL. */
OG10_API og10_status og10_run(const char* command, const char* request_json, const char* format,
                              char** output, char** error_json);

#ifdef __cplusplus
}
#endif

#endif
