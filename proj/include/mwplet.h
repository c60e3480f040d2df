/*
 * mwplet - exact Mordell-Weil arithmetic on rational elliptic surfaces,
 * bisection conic families with prescribed Abel-Jacobi image, and
 * certification of tacnodal conic arrangements.
 *
 * C interface: opaque handles, status codes, JSON/canonical-text output.
 * All strings returned through char** are heap-allocated; release them with
 * mwp_string_free. Handles are released with the matching *_free call.
 * Errors leave a thread-local message readable through mwp_last_error.
 */

#ifndef MWPLET_H
#define MWPLET_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mwp_status {
    MWP_OK = 0,
    MWP_ERR_PARSE = 1,             /* malformed input text */
    MWP_ERR_DOMAIN = 2,            /* precondition violated */
    MWP_ERR_TOWER = 3,             /* more than two quadratic radicals needed */
    MWP_ERR_UNSUPPORTED_PLACE = 4, /* residue degree out of scope */
    MWP_ERR_UNSUPPORTED_FIBER = 5, /* additive fiber or undecidable component */
    MWP_ERR_NODE_MEETING = 6,      /* sections meet at a fiber node */
    MWP_ERR_DEGENERATE = 7,        /* degenerate member or shared component */
    MWP_ERR_SCAN_EXHAUSTED = 8,    /* parameter scan ran out of candidates */
    MWP_ERR_VERIFY = 9,            /* internal consistency check failed */
    MWP_ERR_INTERNAL = 10
} mwp_status;

typedef struct mwp_model mwp_model;     /* Weierstrass model over Q(t) */
typedef struct mwp_section mwp_section; /* rational point of the generic fiber */

unsigned int mwp_abi_version(void);
const char* mwp_last_error(void);
void mwp_string_free(char* s);

/* ---- models ---------------------------------------------------------- */

/* the built-in reference curve y^2 = (x - t^2 + 2)(x^2 - 2x + t^2 - 4) */
mwp_status mwp_model_default(mwp_model** out);
/* a factored right-hand side, e.g. "(x-t^2+2)*(x^2-2*x+t^2-4)" */
mwp_status mwp_model_from_factored(const char* text, mwp_model** out);
void mwp_model_free(mwp_model* m);

/* I_n classification as JSON (array of {place,type,degree,node}) */
mwp_status mwp_model_fibers_json(const mwp_model* m, char** json_out);

/* ---- sections -------------------------------------------------------- */

/* named section ("sL1".."sL3", "s1".."s3", "st", "O"; names exist on the
 * default curve) or a coordinate pair "(x(t), y(t))" */
mwp_status mwp_section_parse(const mwp_model* m, const char* text, mwp_section** out);
void mwp_section_free(mwp_section* s);
mwp_status mwp_section_json(const mwp_section* s, char** json_out);

/* op: "add" (needs q), "neg", "mul" (needs multiplier) */
mwp_status mwp_section_group(const mwp_model* m, const char* op, const mwp_section* p,
                             const mwp_section* q, long multiplier, mwp_section** out);

/* Shioda height pairing report as JSON */
mwp_status mwp_height_json(const mwp_model* m, const mwp_section* p, const mwp_section* q,
                           char** json_out);

/* ---- bisections and conics ------------------------------------------- */

/* family member g_{family,a}: canonical conic text, verified image, JSON */
mwp_status mwp_bisection_json(int family, const char* parameter, char** json_out);

/* conic of the graph x = x(t), deg <= 2; canonical text output */
mwp_status mwp_implicitize(const char* x_of_t, char** conic_out);

/* ---- arrangements and certificates ------------------------------------ */

/* kind: "weak" or "full" */
mwp_status mwp_arrange_json(long k, long k1, long k2, long k3, const char* kind,
                            char** json_out);
mwp_status mwp_plet_json(long k, long prime, char** json_out);

/* number of Young diagrams with k boxes and at most 3 rows */
mwp_status mwp_young_count(long k, long* out);

/* the full reference verification; all_pass set to 1 iff every check passed */
mwp_status mwp_verify_reference_json(char** json_out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* MWPLET_H */
