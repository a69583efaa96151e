#include "sl2r_prism.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "sl2r/error.hpp"
#include "sl2r/mesh.hpp"
#include "sl2r/report.hpp"
#include "sl2r/tiling.hpp"
#include "sl2r/verify.hpp"

struct slr_prism {
  sl2r::PrismSpec spec;
  sl2r::SideAnchors anchors;
};

struct slr_mesh {
  sl2r::Mesh mesh;
};

namespace {

thread_local std::string g_last_error;

slr_status status_of(sl2r::Errc code) {
  switch (code) {
    case sl2r::Errc::invalid_argument: return SLR_INVALID_ARGUMENT;
    case sl2r::Errc::non_interior_point: return SLR_NON_INTERIOR;
    case sl2r::Errc::at_infinity: return SLR_AT_INFINITY;
    case sl2r::Errc::inadmissible_q: return SLR_INADMISSIBLE;
    case sl2r::Errc::no_convergence: return SLR_NO_CONVERGENCE;
    case sl2r::Errc::degenerate_plane: return SLR_DEGENERATE;
    case sl2r::Errc::not_rescalable: return SLR_INVALID_ARGUMENT;
    case sl2r::Errc::io_error: return SLR_IO_ERROR;
  }
  return SLR_INVALID_ARGUMENT;
}

template <typename Fn>
slr_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const sl2r::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SLR_INVALID_ARGUMENT;
  }
}

slr_status arg_error(const char* message) {
  g_last_error = message;
  return SLR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* slr_status_name(slr_status status) {
  switch (status) {
    case SLR_OK: return "ok";
    case SLR_INVALID_ARGUMENT: return "invalid argument";
    case SLR_INADMISSIBLE: return "inadmissible parameters";
    case SLR_NON_INTERIOR: return "point not interior";
    case SLR_AT_INFINITY: return "point at infinity";
    case SLR_NO_CONVERGENCE: return "no convergence";
    case SLR_DEGENERATE: return "degenerate configuration";
    case SLR_IO_ERROR: return "I/O error";
    case SLR_VERIFY_FAILED: return "verification failed";
  }
  return "unknown status";
}

const char* slr_last_error(void) { return g_last_error.c_str(); }

const char* slr_version(void) { return "1.0.0"; }

void slr_string_free(char* s) { std::free(s); }

int slr_admissible(int p, int q) { return sl2r::is_admissible(p, q) ? 1 : 0; }

slr_status slr_closed_form_x3_p3(int q, double* x3) {
  if (!x3) return arg_error("slr_closed_form_x3_p3: null output");
  return guarded([&] {
    *x3 = sl2r::closed_form_x3_p3(q);
    return SLR_OK;
  });
}

slr_status slr_vertex_angle_residual(int p, int q, double x3, double* residual) {
  if (!residual) return arg_error("slr_vertex_angle_residual: null output");
  return guarded([&] {
    *residual = sl2r::vertex_angle_residual(p, q, x3);
    return SLR_OK;
  });
}

slr_status slr_solve_x3(int p, int q, double tol, double* x3, double* residual_out) {
  if (!x3) return arg_error("slr_solve_x3: null output");
  return guarded([&] {
    sl2r::SolveOptions opts;
    if (tol > 0.0) opts.tol = tol;
    double root = sl2r::solve_x3(p, q, opts);
    *x3 = root;
    if (residual_out) *residual_out = sl2r::vertex_angle_residual(p, q, root);
    return SLR_OK;
  });
}

slr_status slr_prism_create(int p, int q, double phi_tau, slr_prism** out) {
  if (!out) return arg_error("slr_prism_create: null output");
  if (!(phi_tau >= 0.0) || !(phi_tau < M_PI))
    return arg_error("slr_prism_create: phi_tau must lie in [0, pi)");
  return guarded([&] {
    std::optional<double> tau;
    if (phi_tau > 0.0) tau = phi_tau;
    sl2r::PrismSpec spec = sl2r::make_spec(p, q, tau);
    *out = new slr_prism{spec, sl2r::side_anchors(spec)};
    return SLR_OK;
  });
}

void slr_prism_destroy(slr_prism* prism) { delete prism; }

slr_status slr_prism_p(const slr_prism* prism, int* p) {
  if (!prism || !p) return arg_error("slr_prism_p: null argument");
  *p = prism->spec.p;
  return SLR_OK;
}

slr_status slr_prism_q(const slr_prism* prism, int* q) {
  if (!prism || !q) return arg_error("slr_prism_q: null argument");
  *q = prism->spec.q;
  return SLR_OK;
}

slr_status slr_prism_x3(const slr_prism* prism, double* x3) {
  if (!prism || !x3) return arg_error("slr_prism_x3: null argument");
  *x3 = prism->spec.x3;
  return SLR_OK;
}

slr_status slr_prism_phi_tau(const slr_prism* prism, double* phi_tau) {
  if (!prism || !phi_tau) return arg_error("slr_prism_phi_tau: null argument");
  *phi_tau = prism->spec.phi_tau.value_or(0.0);
  return SLR_OK;
}

slr_status slr_prism_vertex(const slr_prism* prism, int index, double out[4]) {
  if (!prism || !out) return arg_error("slr_prism_vertex: null argument");
  if (index < 1 || index > prism->spec.p)
    return arg_error("slr_prism_vertex: index must be in 1..p");
  return guarded([&] {
    std::vector<sl2r::HPoint> ring = sl2r::vertex_ring(prism->spec.p, prism->spec.x3);
    for (int i = 0; i < 4; ++i) out[i] = ring[static_cast<std::size_t>(index - 1)][i];
    return SLR_OK;
  });
}

slr_status slr_prism_rotated_vertex(const slr_prism* prism, double out[4]) {
  if (!prism || !out) return arg_error("slr_prism_rotated_vertex: null argument");
  for (int i = 0; i < 4; ++i) out[i] = prism->anchors.rotated_vertex[i];
  return SLR_OK;
}

slr_status slr_prism_fibre_midpoint(const slr_prism* prism, double out[4]) {
  if (!prism || !out) return arg_error("slr_prism_fibre_midpoint: null argument");
  for (int i = 0; i < 4; ++i) out[i] = prism->anchors.fibre_midpoint[i];
  return SLR_OK;
}

slr_status slr_prism_fibre_height(const slr_prism* prism, double* phi_star) {
  if (!prism || !phi_star) return arg_error("slr_prism_fibre_height: null argument");
  *phi_star = prism->anchors.fibre_height;
  return SLR_OK;
}

slr_status slr_prism_trace_angle_residual(const slr_prism* prism, double* residual) {
  if (!prism || !residual) return arg_error("slr_prism_trace_angle_residual: null argument");
  return guarded([&] {
    *residual =
        sl2r::vertex_angle_residual(prism->spec.p, prism->spec.q, prism->spec.x3);
    return SLR_OK;
  });
}

slr_status slr_prism_generator(const slr_prism* prism, int index, double out[16]) {
  if (!prism || !out) return arg_error("slr_prism_generator: null argument");
  return guarded([&] {
    sl2r::Isometry gen = sl2r::side_rotation(prism->spec, index);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        out[r * 4 + c] = gen.matrix().at(static_cast<std::size_t>(r),
                                         static_cast<std::size_t>(c));
    return SLR_OK;
  });
}

slr_status slr_prism_cover_plane(const slr_prism* prism, double coeffs[4], double* k) {
  if (!prism || !coeffs || !k) return arg_error("slr_prism_cover_plane: null argument");
  return guarded([&] {
    sl2r::Plane plane = sl2r::cover_plane(prism->spec);
    coeffs[0] = plane.a;
    coeffs[1] = plane.b;
    coeffs[2] = plane.c;
    coeffs[3] = plane.d;
    *k = sl2r::cover_plane_k(prism->spec);
    return SLR_OK;
  });
}

slr_status slr_prism_face_to_face(const slr_prism* prism, int* face_to_face, double* defect) {
  if (!prism || !face_to_face || !defect)
    return arg_error("slr_prism_face_to_face: null argument");
  return guarded([&] {
    sl2r::PrismSpec spec = prism->spec;
    if (!spec.phi_tau) spec.phi_tau = 0.5;  // verdict is thickness independent
    sl2r::FaceToFaceReport rep = sl2r::face_to_face_check(spec);
    *face_to_face = rep.verdict == sl2r::Adjacency::face_to_face ? 1 : 0;
    *defect = rep.defect;
    return SLR_OK;
  });
}

slr_status slr_prism_report_json(const slr_prism* prism, char** out) {
  if (!prism || !out) return arg_error("slr_prism_report_json: null argument");
  return guarded([&] {
    char* s = copy_string(sl2r::tiling_report_json(prism->spec));
    if (!s) return arg_error("slr_prism_report_json: allocation failed");
    *out = s;
    return SLR_OK;
  });
}

void slr_mesh_options_default(slr_mesh_options* opts) {
  if (!opts) return;
  opts->depth = 0;
  opts->resolution = 16;
  opts->phi_min = -1.2;
  opts->phi_max = 1.2;
}

slr_status slr_mesh_build(const slr_prism* prism, const slr_mesh_options* opts,
                          slr_mesh** out) {
  if (!prism || !out) return arg_error("slr_mesh_build: null argument");
  return guarded([&] {
    sl2r::MeshOptions mo;
    if (opts) {
      mo.depth = opts->depth;
      mo.resolution = opts->resolution;
      mo.phi_min = opts->phi_min;
      mo.phi_max = opts->phi_max;
    }
    if (mo.depth < 0) return arg_error("slr_mesh_build: negative depth");
    *out = new slr_mesh{sl2r::build_mesh(prism->spec, mo)};
    return SLR_OK;
  });
}

void slr_mesh_destroy(slr_mesh* mesh) { delete mesh; }

slr_status slr_mesh_counts(const slr_mesh* mesh, size_t* vertices, size_t* faces,
                           size_t* tiles) {
  if (!mesh) return arg_error("slr_mesh_counts: null mesh");
  if (vertices) *vertices = mesh->mesh.vertices.size();
  if (faces) *faces = mesh->mesh.faces.size();
  if (tiles) *tiles = mesh->mesh.tile_count;
  return SLR_OK;
}

slr_status slr_mesh_obj(const slr_mesh* mesh, char** out) {
  if (!mesh || !out) return arg_error("slr_mesh_obj: null argument");
  return guarded([&] {
    char* s = copy_string(sl2r::obj_string(mesh->mesh));
    if (!s) return arg_error("slr_mesh_obj: allocation failed");
    *out = s;
    return SLR_OK;
  });
}

slr_status slr_mesh_write_obj(const slr_mesh* mesh, const char* path) {
  if (!mesh || !path) return arg_error("slr_mesh_write_obj: null argument");
  return guarded([&] {
    sl2r::write_obj_file(mesh->mesh, path);
    return SLR_OK;
  });
}

slr_status slr_verify(const char* level, double tol_scale, char** report_out,
                      int* all_passed) {
  if (!level) return arg_error("slr_verify: null level");
  sl2r::VerifyLevel lvl;
  if (std::strcmp(level, "quick") == 0)
    lvl = sl2r::VerifyLevel::quick;
  else if (std::strcmp(level, "full") == 0)
    lvl = sl2r::VerifyLevel::full;
  else
    return arg_error("slr_verify: level must be \"quick\" or \"full\"");
  return guarded([&]() -> slr_status {
    sl2r::VerificationReport report = sl2r::run_verification(lvl, tol_scale);
    if (report_out) {
      char* s = copy_string(sl2r::format_verification(report));
      if (!s) return arg_error("slr_verify: allocation failed");
      *report_out = s;
    }
    if (all_passed) *all_passed = report.all_passed ? 1 : 0;
    if (!report.all_passed) {
      g_last_error = "verification failed";
      return SLR_VERIFY_FAILED;
    }
    return SLR_OK;
  });
}

}  // extern "C"
