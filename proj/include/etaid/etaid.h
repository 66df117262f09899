/* etaid: proofs and searches for identities between generalized eta-products. */
#ifndef ETAID_ETAID_H
#define ETAID_ETAID_H

#include <stdint.h>

#if defined(_WIN32)
#define ETAID_API __declspec(dllexport)
#else
#define ETAID_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum etaid_status {
    ETAID_OK = 0,
    ETAID_ERR_PARSE = 1,    /* malformed identity, expression or config */
    ETAID_ERR_INVALID = 2,  /* well-formed but unusable input, bad option */
    ETAID_ERR_INTERNAL = 3
} etaid_status;

/* Proof verdicts; the values double as CLI exit codes. */
typedef enum etaid_verdict {
    ETAID_PROVED = 0,
    ETAID_FAILED = 1,
    ETAID_NOT_MODULAR = 3
} etaid_verdict;

typedef struct etaid_ctx etaid_ctx;
typedef struct etaid_cert etaid_cert;

ETAID_API const char* etaid_version(void);

/* A context holds options and the last error message. Not shared between threads. */
ETAID_API etaid_ctx* etaid_ctx_new(void);
ETAID_API void etaid_ctx_free(etaid_ctx* ctx);
ETAID_API const char* etaid_last_error(const etaid_ctx* ctx);

/* Keys: "safety", "qthreshold", "order" (least checked order for proofs),
   "acc", "jobs", "normalize" (0/1), "verbose" (0/1). */
ETAID_API etaid_status etaid_set_option(etaid_ctx* ctx, const char* key, int64_t value);
ETAID_API etaid_status etaid_get_option(const etaid_ctx* ctx, const char* key, int64_t* value);

/* Proves an identity document. On ETAID_OK *out owns a certificate. */
ETAID_API etaid_status etaid_prove_text(etaid_ctx* ctx, const char* text, etaid_cert** out);
ETAID_API etaid_verdict etaid_cert_verdict(const etaid_cert* c);
ETAID_API int64_t etaid_cert_level(const etaid_cert* c);
/* B as a reduced fraction. */
ETAID_API void etaid_cert_bound(const etaid_cert* c, int64_t* num, int64_t* den);
ETAID_API int64_t etaid_cert_checked_order(const etaid_cert* c);
ETAID_API int64_t etaid_cert_failed_exponent(const etaid_cert* c);
ETAID_API const char* etaid_cert_json(const etaid_cert* c);
/* Cusp-by-cusp ORD table; latex != 0 selects LaTeX. */
ETAID_API const char* etaid_cert_table(const etaid_cert* c, int latex);
ETAID_API const char* etaid_cert_summary(const etaid_cert* c);
/* Step-by-step account of the proof. */
ETAID_API const char* etaid_cert_log(const etaid_cert* c);
ETAID_API void etaid_cert_free(etaid_cert* c);

/* String results below are owned by the caller and released with etaid_string_free.
   Formats: "text", "json", "md", "latex". */
ETAID_API etaid_status etaid_cusps(etaid_ctx* ctx, int64_t level, const char* format, char** out);
ETAID_API etaid_status etaid_expand_text(etaid_ctx* ctx, const char* expr, int64_t order, const char* format, char** out);
/* Runs the searches described by a JSON config document. */
ETAID_API etaid_status etaid_search(etaid_ctx* ctx, const char* config_json, const char* format, char** out);
/* Identity document with one factor exponent moved by one. */
ETAID_API etaid_status etaid_mutate_text(etaid_ctx* ctx, const char* text, uint64_t seed, char** out);
ETAID_API void etaid_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
