/* C API for the Lemoine-circle geometry kernel.
 *
 * All entry points are exported from the shared library with C linkage.
 * Objects are handled through the opaque lemoine_ctx pointer; functions
 * return LEMOINE_OK or an error code, and string-producing commands return
 * malloc'd buffers owned by the caller (release with lemoine_free).
 */
#ifndef LEMOINE_H
#define LEMOINE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lemoine_status {
  LEMOINE_OK = 0,
  LEMOINE_E_DEGENERATE_INPUT = 1,
  LEMOINE_E_PARALLEL_LINES = 2,
  LEMOINE_E_COLLINEAR_POINTS = 3,
  LEMOINE_E_NOT_CONCYCLIC = 4,
  LEMOINE_E_COINCIDENT_POINTS = 5,
  LEMOINE_E_POINT_NOT_ON_CIRCLE = 6,
  LEMOINE_E_DEGENERATE_TANGENCY = 7,
  LEMOINE_E_ANTIPODAL_CHORD = 8,
  LEMOINE_E_DEGENERATE_BASE = 9,
  LEMOINE_E_NOT_COLLINEAR = 10,
  LEMOINE_E_POINT_OUTSIDE_CIRCLE = 11,
  LEMOINE_E_POINT_AT_VERTEX = 12,
  LEMOINE_E_POLE_AT_INFINITY = 13,
  LEMOINE_E_EQUILATERAL_DEGENERATE = 14,
  LEMOINE_E_DEGENERATE_PIVOT = 15,
  LEMOINE_E_TANGENTIAL_DEGENERACY = 16,
  LEMOINE_E_NO_REAL_INTERSECTION = 17,
  LEMOINE_E_DEGENERATE_STEP = 18,
  LEMOINE_E_TARGET_OUT_OF_RANGE = 19,
  LEMOINE_E_NON_FINITE = 20,
  LEMOINE_E_INVALID_ARGUMENT = 21,
  LEMOINE_E_INTERNAL = 22
} lemoine_status;

typedef enum lemoine_circle_kind {
  LEMOINE_CIRCLE_FIRST = 1,
  LEMOINE_CIRCLE_SECOND = 2,
  LEMOINE_CIRCLE_THIRD = 3,
  LEMOINE_CIRCLE_BUI = 4,
  LEMOINE_CIRCLE_NEW = 5
} lemoine_circle_kind;

/* Opaque handle: a triangle plus its tolerance context. */
typedef struct lemoine_ctx lemoine_ctx;

/* Constructors return NULL only on allocation failure; check
 * lemoine_ctx_status for geometric validity (collinear input, ...). */
lemoine_ctx* lemoine_ctx_new(double ax, double ay, double bx, double by, double cx, double cy);
lemoine_ctx* lemoine_ctx_new_random(uint64_t seed);
void lemoine_ctx_free(lemoine_ctx* ctx);

lemoine_status lemoine_ctx_status(const lemoine_ctx* ctx);
const char* lemoine_ctx_error(const lemoine_ctx* ctx); /* empty string when OK */
lemoine_status lemoine_ctx_set_eps(lemoine_ctx* ctx, double eps_rel);
/* prec_bits = 0 selects binary64; otherwise a >= 64 bit float backend is used
 * for the construction commands. */
lemoine_status lemoine_ctx_set_backend(lemoine_ctx* ctx, unsigned prec_bits);
lemoine_status lemoine_ctx_triangle(const lemoine_ctx* ctx, double out_xy[6]);

typedef struct lemoine_centers {
  double ox, oy;          /* circumcenter */
  double r2;              /* squared circumradius */
  double lx, ly;          /* symmedian point */
  double gx, gy;          /* centroid */
  int axis_defined;       /* 0 when O = L */
  double axis_nx, axis_ny, axis_c; /* unit-normal line form, valid when defined */
} lemoine_centers;

lemoine_status lemoine_get_centers(lemoine_ctx* ctx, lemoine_centers* out);

typedef struct lemoine_sixpoint {
  double px[6], py[6];    /* A_b, A_c, B_c, B_a, C_a, C_b */
  double cx, cy, r2;      /* fitted circle */
  double residual;        /* max radial deviation / R */
  int has_ratio;
  double ratio;           /* center along L -> O */
} lemoine_sixpoint;

/* pivot_xy may be NULL to use the symmedian point. */
lemoine_status lemoine_get_circle(lemoine_ctx* ctx, lemoine_circle_kind kind,
                                  const double* pivot_xy, lemoine_sixpoint* out);

typedef struct lemoine_tucker_sample {
  double vx[6], vy[6];    /* B_a, C_a, C_b, A_b, A_c, B_c chain order */
  double closure_residual;
  double cx, cy, r2;
  double radius;
  int has_t;
  double t;
} lemoine_tucker_sample;

lemoine_status lemoine_get_tucker(lemoine_ctx* ctx, double s, lemoine_tucker_sample* out);

/* ratios: first, second, third, bui, new, open slot */
lemoine_status lemoine_get_spectrum(lemoine_ctx* ctx, double out_ratios[6]);

typedef struct lemoine_tucker_match {
  double s, t, radius;
} lemoine_tucker_match;

/* Writes up to cap matches; *count receives the number found. */
lemoine_status lemoine_tucker_radius_at(lemoine_ctx* ctx, double t_target,
                                        lemoine_tucker_match* out, size_t cap, size_t* count);

/* *verdict: 1 = member of the Tucker family, 0 = not. *margin: off-axis
 * distance or radius gap, normalized by the circumradius. */
lemoine_status lemoine_is_tucker(lemoine_ctx* ctx, double cx, double cy, double r2, int* verdict,
                                 double* margin);

/* ---- command layer: strings are malloc'd, NUL-terminated, caller frees ---- */

char* lemoine_cmd_centers(lemoine_ctx* ctx, int as_json, lemoine_status* st);
/* kind: "first"|"second"|"third"|"bui"|"new"|"tucker" (tucker uses tucker_s);
 * pivot_xy may be NULL. */
char* lemoine_cmd_circle(lemoine_ctx* ctx, const char* kind, const double* pivot_xy,
                         double tucker_s, int as_json, lemoine_status* st);
/* which: "all"|"thm-new"|"lemma"|"scaffold"|"converse"|"uniqueness"|"tucker"|
 * "spectrum"|"precision". Negative trials/grid_n select defaults. *all_pass
 * is 1 when every checked claim passed. */
char* lemoine_cmd_verify(lemoine_ctx* ctx, const char* which, int trials, int grid_n,
                         uint64_t seed, unsigned prec_bits, int as_json, int* all_pass,
                         lemoine_status* st);
char* lemoine_cmd_hunt(lemoine_ctx* ctx, int as_json, lemoine_status* st);
/* fig_id in 1..8; returns SVG. */
char* lemoine_cmd_figure(lemoine_ctx* ctx, int fig_id, lemoine_status* st);

void lemoine_free(char* str);
const char* lemoine_status_name(lemoine_status st);
int lemoine_abi_version(void);

#ifdef __cplusplus
}
#endif

#endif /* LEMOINE_H */
