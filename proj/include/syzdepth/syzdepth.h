#ifndef SYZDEPTH_H
#define SYZDEPTH_H

#include <stddef.h>

#if defined(_WIN32)
#define SYZD_API __declspec(dllexport)
#else
#define SYZD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SYZD_OK = 0,
  SYZD_DISAGREEMENT = 1, /* a check or an oracle comparison failed */
  SYZD_INPUT_ERROR = 2,
  SYZD_LIMIT_ERROR = 3,  /* instance exceeds a size guard */
  SYZD_INTERNAL_ERROR = 4
} syzd_status;

typedef struct syzd_ideal syzd_ideal;
typedef struct syzd_complex syzd_complex;

SYZD_API const char* syzd_version(void);

/* Message for the last non-OK status on the calling thread; "" if none. */
SYZD_API const char* syzd_last_error(void);

/* Every char** output is heap-allocated JSON text owned by the caller. */
SYZD_API void syzd_string_free(char* s);

/* {"n": 3, "generators": [[1,1,0], ...]} */
SYZD_API syzd_status syzd_ideal_parse(const char* json, syzd_ideal** out);
SYZD_API syzd_status syzd_ideal_read(const char* path, syzd_ideal** out);
SYZD_API void syzd_ideal_free(syzd_ideal* ideal);
SYZD_API size_t syzd_ideal_nvars(const syzd_ideal* ideal);
SYZD_API size_t syzd_ideal_ngens(const syzd_ideal* ideal);
SYZD_API int syzd_ideal_is_stable(const syzd_ideal* ideal);
SYZD_API syzd_status syzd_ideal_to_json(const syzd_ideal* ideal, char** out);

/* method: "taylor", "koszul" or "ek" (stable ideals only). */
SYZD_API syzd_status syzd_resolve(const syzd_ideal* ideal, const char* method, int minimize, syzd_complex** out);
SYZD_API void syzd_complex_free(syzd_complex* c);
SYZD_API size_t syzd_complex_length(const syzd_complex* c);
SYZD_API size_t syzd_complex_rank(const syzd_complex* c, size_t p);
SYZD_API syzd_status syzd_complex_to_json(const syzd_complex* c, char** out);

/* d o d = 0 and exactness on the box [0, g+1]^n for the resolved ideal.
   Returns SYZD_DISAGREEMENT with a report when a check fails. */
SYZD_API syzd_status syzd_complex_check(const syzd_complex* c, const syzd_ideal* ideal, char** report);

/* Minimal generators of ini(Z_p) per basis position. basis: "boundary" keeps
   the complex's own order, "lex" re-sorts it lex-refined. With oracle set the
   Buchberger result is included; a mismatch gives SYZD_DISAGREEMENT. */
SYZD_API syzd_status syzd_initial(const syzd_complex* c, size_t p, const char* basis, int oracle, char** out);

/* Exact Stanley depth of I (or S/I when quotient is set) with an interval
   certificate. box may be NULL for the default cap. */
SYZD_API syzd_status syzd_sdepth_exact(const syzd_ideal* ideal, int quotient, const long* box, size_t box_len,
                                       char** out);

/* Filtration lower bound for Z_p of the lex-refined complex. */
SYZD_API syzd_status syzd_sdepth_filtration(const syzd_complex* c, size_t p, char** out);

/* Block construction for a squarefree ideal. */
SYZD_API syzd_status syzd_sdepth_sqfree(const syzd_ideal* ideal, char** out);

/* Interval partition of the characteristic poset with value at least d;
   "exists" is false when there is none. */
SYZD_API syzd_status syzd_partition(const syzd_ideal* ideal, int quotient, size_t d, const long* box, size_t box_len,
                                    char** out);

/* Circular block structure of A in [n] with density num/den. */
SYZD_API syzd_status syzd_block_structure(size_t n, const size_t* a, size_t a_len, long num, long den, char** out);

/* job: {"theorem", "trials", "seed", "caps": {"n","m","exp"}, "exhaustive",
   "trial", "instance", "threads"}. out receives one report per line.
   Returns SYZD_DISAGREEMENT if any report fails. */
SYZD_API syzd_status syzd_verify(const char* job, char** out);

#ifdef __cplusplus
}
#endif

#endif
