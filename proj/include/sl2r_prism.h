/* C interface of the sl2rprism shared library.
 *
 * The library computes regular p-gonal prism tilings of the twisted line
 * bundle over the hyperbolic plane in its projective model: the base
 * circumradius coordinate x3 solving the side-valence condition, vertex and
 * side-surface data of the fundamental prism, invariant cover planes, mesh
 * export, and built-in verification suites.
 *
 * Conventions: every function returns an slr_status; outputs go through
 * pointers.  Objects are opaque handles released with the matching _destroy
 * (or slr_string_free for returned strings).  On failure the handle/output is
 * untouched and slr_last_error() describes the fault for the calling thread.
 */
#ifndef SL2R_PRISM_H
#define SL2R_PRISM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SLR_API __declspec(dllexport)
#else
#define SLR_API __attribute__((visibility("default")))
#endif

typedef enum slr_status {
  SLR_OK = 0,
  SLR_INVALID_ARGUMENT = 1,
  SLR_INADMISSIBLE = 2,      /* q (p - 2) <= 2 p: no such tiling */
  SLR_NON_INTERIOR = 3,      /* point outside the model solid */
  SLR_AT_INFINITY = 4,       /* x0 = 0: no inhomogeneous image */
  SLR_NO_CONVERGENCE = 5,
  SLR_DEGENERATE = 6,        /* collapsed plane or equivalent */
  SLR_IO_ERROR = 7,
  SLR_VERIFY_FAILED = 8
} slr_status;

SLR_API const char* slr_status_name(slr_status status);

/* Message for the most recent failure on the calling thread. */
SLR_API const char* slr_last_error(void);

SLR_API const char* slr_version(void);

SLR_API void slr_string_free(char* s);

/* ---- solving ---------------------------------------------------------- */

/* 1 when q (p - 2) > 2 p (and p >= 3, q >= 3), else 0. */
SLR_API int slr_admissible(int p, int q);

/* Closed-form x3 of the triangle-based tilings, p = 3, q >= 6. */
SLR_API slr_status slr_closed_form_x3_p3(int q, double* x3);

/* Side-valence defect at a trial x3 in (0, 1); zero at the tiling. */
SLR_API slr_status slr_vertex_angle_residual(int p, int q, double x3,
                                             double* residual);

/* Bisection solve of the side-valence condition.  tol <= 0 selects the
 * default 1e-12; residual_out may be NULL. */
SLR_API slr_status slr_solve_x3(int p, int q, double tol, double* x3,
                                double* residual_out);

/* ---- prism handle ------------------------------------------------------ */

typedef struct slr_prism slr_prism;

/* Solves (p, q) and builds the fundamental prism.  phi_tau > 0 selects the
 * bounded prism of that fibre thickness; phi_tau = 0 the infinite prism.
 * Requires phi_tau in [0, pi). */
SLR_API slr_status slr_prism_create(int p, int q, double phi_tau,
                                    slr_prism** out);
SLR_API void slr_prism_destroy(slr_prism* prism);

SLR_API slr_status slr_prism_p(const slr_prism* prism, int* p);
SLR_API slr_status slr_prism_q(const slr_prism* prism, int* q);
SLR_API slr_status slr_prism_x3(const slr_prism* prism, double* x3);
SLR_API slr_status slr_prism_phi_tau(const slr_prism* prism, double* phi_tau);

/* Homogeneous row (x0; x1; x2; x3) of base vertex A_index, index 1..p. */
SLR_API slr_status slr_prism_vertex(const slr_prism* prism, int index,
                                    double out[4]);

/* Side-1 anchors on fibre f_2: the rotated far vertex r_1(A_p), the fibre
 * midpoint (far endpoint of the straight generator segment from A_1), and
 * the fibre height of the rotated vertex. */
SLR_API slr_status slr_prism_rotated_vertex(const slr_prism* prism,
                                            double out[4]);
SLR_API slr_status slr_prism_fibre_midpoint(const slr_prism* prism,
                                            double out[4]);
SLR_API slr_status slr_prism_fibre_height(const slr_prism* prism,
                                          double* phi_star);

/* Unsigned angle between trace rays of the two rotated far vertices seen
 * from vertex 2, minus 2 pi / q; the solver cross-check. */
SLR_API slr_status slr_prism_trace_angle_residual(const slr_prism* prism,
                                                  double* residual);

/* Matrix of generator r_index (rotation by 2 pi / q about fibre f_index),
 * row major, index 1..p. */
SLR_API slr_status slr_prism_generator(const slr_prism* prism, int index,
                                       double out[16]);

/* Plane a x + b y + c z + d = 0 containing the r_2-orbit of A_1, plus its
 * invariant-plane parameter k. */
SLR_API slr_status slr_prism_cover_plane(const slr_prism* prism,
                                         double coeffs[4], double* k);

/* face_to_face = 0 with the proportionality defect between the orbit plane
 * and the base plane (> 0: the tiling is never face-to-face). */
SLR_API slr_status slr_prism_face_to_face(const slr_prism* prism,
                                          int* face_to_face, double* defect);

/* JSON report with parameters, vertices, anchors, cover plane, generators
 * and residual diagnostics.  Free with slr_string_free. */
SLR_API slr_status slr_prism_report_json(const slr_prism* prism, char** out);

/* ---- mesh export ------------------------------------------------------- */

typedef struct slr_mesh slr_mesh;

typedef struct slr_mesh_options {
  int depth;          /* word length of the tiling patch */
  int resolution;     /* samples per surface direction, >= 2 */
  double phi_min;     /* fibre clip range, infinite prisms only */
  double phi_max;
} slr_mesh_options;

SLR_API void slr_mesh_options_default(slr_mesh_options* opts);

SLR_API slr_status slr_mesh_build(const slr_prism* prism,
                                  const slr_mesh_options* opts,
                                  slr_mesh** out);
SLR_API void slr_mesh_destroy(slr_mesh* mesh);

SLR_API slr_status slr_mesh_counts(const slr_mesh* mesh, size_t* vertices,
                                   size_t* faces, size_t* tiles);

/* Wavefront OBJ text; free with slr_string_free. */
SLR_API slr_status slr_mesh_obj(const slr_mesh* mesh, char** out);
SLR_API slr_status slr_mesh_write_obj(const slr_mesh* mesh, const char* path);

/* ---- verification ------------------------------------------------------ */

/* level: "quick" or "full".  tol_scale multiplies the suite tolerances
 * (pass 1.0 normally; < 1 tightens the gates).  Returns SLR_VERIFY_FAILED
 * when a suite fails; *report_out (optional) receives the formatted report
 * either way, *all_passed (optional) the verdict. */
SLR_API slr_status slr_verify(const char* level, double tol_scale,
                              char** report_out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* SL2R_PRISM_H */
