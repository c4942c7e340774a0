#ifndef SL2Q_H
#define SL2Q_H

/* C interface to the SL2(F_q) character/multiplicity engine.
 *
 * All functions returning char* allocate the string with malloc; release it
 * with sl2q_string_free. On failure they return NULL and set a thread-local
 * error message retrievable via sl2q_last_error.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sl2q_context sl2q_context;

typedef enum {
  SL2Q_OK = 0,
  SL2Q_ERR_USAGE = 2,        /* bad parameter / malformed input */
  SL2Q_ERR_VERIFICATION = 1, /* a checked identity failed */
} sl2q_status;

/* output formats */
#define SL2Q_FORMAT_JSON 0
#define SL2Q_FORMAT_CSV 1
#define SL2Q_FORMAT_PRETTY 2

/* evaluation contexts */
#define SL2Q_EVAL_COMPLEX 0
#define SL2Q_EVAL_MODP 1

/* validation levels */
#define SL2Q_VALIDATE_STRUCTURAL 0
#define SL2Q_VALIDATE_PHYSICAL 1

/* multiplicity modes */
#define SL2Q_MODE_RAW 0
#define SL2Q_MODE_PHYSICAL 1

/* methods */
#define SL2Q_METHOD_BOTH 0
#define SL2Q_METHOD_INNER 1
#define SL2Q_METHOD_THEOREM 2

/* q must be an odd prime >= 5; returns NULL on failure */
sl2q_context* sl2q_context_new(int64_t q);
void sl2q_context_free(sl2q_context* ctx);

int64_t sl2q_context_q(const sl2q_context* ctx);
int64_t sl2q_context_delta(const sl2q_context* ctx);

/* conjugacy classes (label, size, representative) */
char* sl2q_classes_render(const sl2q_context* ctx, int format);

/* full character table; p = 0 selects the smallest admissible prime and is
 * ignored for the complex evaluation */
char* sl2q_chartable_render(const sl2q_context* ctx, int eval_kind, int64_t p, int format);

/* Gauss sum S and S^2 in both contexts plus the twisted-sum law (JSON) */
char* sl2q_gauss_render(const sl2q_context* ctx, int64_t p);

/* closed-form cusp dimensions for weight k (JSON); no context needed */
char* sl2q_closed_forms_render(int64_t q, int64_t k);

/* validate a profile given as JSON text; *ok receives 1/0 */
char* sl2q_profile_validate(const sl2q_context* ctx, const char* profile_json, int level,
                            int* ok);

/* multiplicity report for a profile (JSON text in, JSON report out);
 * *all_match receives 1 iff every cross-check in the report passed */
char* sl2q_dims_report(const sl2q_context* ctx, const char* profile_json, int mode, int method,
                       int* all_match);

/* randomized self-verification; *ok receives 1/0 */
char* sl2q_verify(const sl2q_context* ctx, int64_t trials, uint64_t seed, int* ok);

void sl2q_string_free(char* s);

/* message for the most recent failure on this thread ("" if none) */
const char* sl2q_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* SL2Q_H */
