/*
 * C interface to the Lie theory library. All objects are opaque handles;
 * every call reports success through an lt_status and leaves a readable
 * message for the last failure on the calling thread.
 *
 * Status values coincide with the CLI exit codes:
 *   0 ok, 2 argument, 3 unsupported structure, 4 bad mathematical input,
 *   5 numeric (tolerance or convergence) failure.
 */
#ifndef LIETHEORY_H
#define LIETHEORY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lt_status {
  LT_OK = 0,
  LT_ERROR_ARGUMENT = 2,
  LT_ERROR_UNSUPPORTED = 3,
  LT_ERROR_BAD_INPUT = 4,
  LT_ERROR_NUMERIC = 5
} lt_status;

typedef struct lt_algebra lt_algebra;
typedef struct lt_root_system lt_root_system;
typedef struct lt_weyl_group lt_weyl_group;

/* Message describing the most recent failure on this thread. Never NULL. */
const char* lt_last_error(void);

/* Frees a string returned through a char** out parameter. */
void lt_string_free(char* s);

/* ---- algebra construction and queries ---------------------------------- */

/* Builds a classical algebra from a label like "su3", "so7", "sp2",
 * "sl2_r", "gl3_c", "u2". */
lt_status lt_algebra_create(const char* spec, lt_algebra** out);
void lt_algebra_destroy(lt_algebra* a);

lt_status lt_algebra_dim(const lt_algebra* a, size_t* out);
lt_status lt_algebra_ambient_size(const lt_algebra* a, size_t* out);
lt_status lt_algebra_is_semisimple(const lt_algebra* a, int* out);
/* Fails with LT_ERROR_UNSUPPORTED when the algebra is not semisimple. */
lt_status lt_algebra_is_compact_type(const lt_algebra* a, int* out);
/* out = {positive, zero, negative} inertia of the Killing form. */
lt_status lt_algebra_killing_signature(const lt_algebra* a, int out[3]);
lt_status lt_algebra_center_dim(const lt_algebra* a, size_t* out);
/* Rank of the standard Cartan subalgebra (classical families). */
lt_status lt_algebra_rank(const lt_algebra* a, size_t* out);
/* Full JSON serialization plus summary flags. */
lt_status lt_algebra_info_json(const lt_algebra* a, char** out);

/* ---- root system -------------------------------------------------------- */

/* Runs the root pipeline on the standard Cartan subalgebra. Requires a
 * compact semisimple algebra. tol <= 0 selects the default weight
 * clustering tolerance (1e-7). */
lt_status lt_root_system_create(const lt_algebra* a, uint64_t seed, double tol,
                                lt_root_system** out);
void lt_root_system_destroy(lt_root_system* rs);

lt_status lt_root_system_rank(const lt_root_system* rs, size_t* out);
lt_status lt_root_system_root_count(const lt_root_system* rs, size_t* out);
lt_status lt_root_system_positive_count(const lt_root_system* rs, size_t* out);
lt_status lt_root_system_simple_count(const lt_root_system* rs, size_t* out);
lt_status lt_root_system_json(const lt_root_system* rs, char** out);

/* ---- Dynkin diagram ----------------------------------------------------- */

lt_status lt_dynkin_json(const lt_root_system* rs, char** out);
lt_status lt_dynkin_ascii(const lt_root_system* rs, char** out);
/* Comma-separated classification labels, one per connected component. */
lt_status lt_dynkin_labels(const lt_root_system* rs, char** out);

/* ---- Weyl group --------------------------------------------------------- */

lt_status lt_weyl_create(const lt_root_system* rs, lt_weyl_group** out);
void lt_weyl_destroy(lt_weyl_group* w);
lt_status lt_weyl_order(const lt_weyl_group* w, size_t* out);
lt_status lt_weyl_json(const lt_weyl_group* w, char** out);

/* ---- adjoint orbit geometry --------------------------------------------- */

/* Shape-operator spectrum and the parallel-orbit check for the orbit
 * through z with equivariant normal n; both arrays have rank entries in
 * the Cartan coordinates of the root system. Fails with
 * LT_ERROR_BAD_INPUT when z is singular. */
lt_status lt_orbit_report_json(const lt_root_system* rs, const lt_weyl_group* w,
                               const double* z, const double* n, size_t rank,
                               int samples, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LIETHEORY_H */
