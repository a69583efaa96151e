#include "sl2r/tiling.hpp"

#include <cmath>

#include "sl2r/error.hpp"

namespace sl2r {

// Construction notes.
//
// The base figure is the regular p-gon with vertices A_k = (1; 0; x3 s_k;
// x3 c_k) on the base plane, circumradius coordinate x3 in (0, 1).  The
// prism's side k is not a plane: it is the ruled surface swept by the fibre
// lines over the base trace of the straight segment from A_k to the fibre
// midpoint above A_(k+1).  The midpoint sits at half the fibre height phi*
// that the side rotation r_k gives the far vertex; this makes r_k carry side
// k onto side k+1 exactly, so a tile and its r_k-neighbours share whole side
// surfaces.  The side-valence condition fixing x3 asks that the q images of
// a side around its fibre close up, which reduces to the base angle between
// the neighbour traces seen from a vertex being exactly 2 pi / q.
//
// Fibre heights add up around a vertex: the rotated far vertex lands at
// phi* = pi - 2 pi / p - 2 pi / q, the angular defect of the base p-gon, so
// consecutive neighbours around a fibre climb a helix instead of staying in
// a horizontal plane.  Their cover-face vertices sweep the invariant plane
// of the shared fibre with parameter k = tan(phi* / 2), never the base
// plane; that plane mismatch is the non-face-to-face verdict.

bool is_admissible(int p, int q) {
  return p >= 3 && q >= 3 && static_cast<long long>(q) * (p - 2) > 2LL * p;
}

double closed_form_x3_p3(int q) {
  if (q < 6)
    fail(Errc::inadmissible_q, "closed_form_x3_p3: q must be at least 6");
  double a = 2.0 * M_PI / q;
  double s3 = std::sqrt(3.0);
  double num = s3 * std::cos(a) - std::sin(a);
  double den = 2.0 * std::sin(a) + s3;
  return std::sqrt(num / den);
}

std::vector<HPoint> vertex_ring(int p, double x3) {
  if (p < 3) fail(Errc::invalid_argument, "vertex_ring: p must be at least 3");
  if (!(x3 > 0.0 && x3 < 1.0)) fail(Errc::invalid_argument, "vertex_ring: x3 outside (0, 1)");
  std::vector<HPoint> ring;
  ring.reserve(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) {
    double ang = 2.0 * M_PI * k / p;
    ring.push_back(HPoint(1.0, 0.0, x3 * std::sin(ang), x3 * std::cos(ang)));
  }
  return ring;
}

Isometry ring_rotation(int p) {
  if (p < 3) fail(Errc::invalid_argument, "ring_rotation: p must be at least 3");
  return rotation_about_origin_fibre(-2.0 * M_PI / p);
}

double vertex_angle_residual(int p, int q, double x3) {
  if (q < 3) fail(Errc::invalid_argument, "vertex_angle_residual: q must be at least 3");
  std::vector<HPoint> ring = vertex_ring(p, x3);  // validates p, x3
  TranslationPair to2 = translation_to(ring[1]);
  HPoint t1 = trace_point(to2.from.apply(ring[0]));
  HPoint t3 = trace_point(to2.from.apply(ring[2]));
  double ux = t1[2], uy = t1[3];
  double vx = t3[2], vy = t3[3];
  double cross = ux * vy - uy * vx;
  double dot = ux * vx + uy * vy;
  return std::atan2(std::abs(cross), dot) - 2.0 * M_PI / q;
}

double solve_x3(int p, int q, const SolveOptions& opts) {
  if (!is_admissible(p, q))
    fail(Errc::inadmissible_q, "solve_x3: q (p - 2) must exceed 2 p");
  double lo = 1e-9, hi = 1.0 - 1e-9;
  double rlo = vertex_angle_residual(p, q, lo);
  double rhi = vertex_angle_residual(p, q, hi);
  if (!(rlo > 0.0) || !(rhi < 0.0))
    fail(Errc::no_convergence, "solve_x3: residual does not bracket a root");
  for (int i = 0; i < opts.max_iter; ++i) {
    double mid = 0.5 * (lo + hi);
    double rm = vertex_angle_residual(p, q, mid);
    if (std::abs(rm) <= opts.tol) return mid;
    if (rm > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  fail(Errc::no_convergence, "solve_x3: iteration budget exhausted");
}

PrismSpec make_spec(int p, int q, std::optional<double> phi_tau, const SolveOptions& opts) {
  if (phi_tau && !(*phi_tau > 0.0 && *phi_tau < M_PI))
    fail(Errc::invalid_argument, "make_spec: phi_tau must lie in (0, pi)");
  PrismSpec spec;
  spec.p = p;
  spec.q = q;
  spec.x3 = solve_x3(p, q, opts);
  spec.phi_tau = phi_tau;
  return spec;
}

Isometry side_rotation(const PrismSpec& spec, int index) {
  if (index < 1 || index > spec.p)
    fail(Errc::invalid_argument, "side_rotation: index must be in 1..p");
  std::vector<HPoint> ring = vertex_ring(spec.p, spec.x3);
  return rotation_about_fibre(ring[static_cast<std::size_t>(index - 1)], 2.0 * M_PI / spec.q);
}

SideAnchors side_anchors(const PrismSpec& spec) {
  std::vector<HPoint> ring = vertex_ring(spec.p, spec.x3);
  Isometry r1 = side_rotation(spec, 1);
  HPoint rotated = r1.apply(ring[static_cast<std::size_t>(spec.p - 1)]);
  // fibre_coordinate names the angle mod pi, but the side rotation climbs a
  // height in (0, pi); lift the principal value onto that branch, otherwise
  // every pair with height above pi/2 gets the wrong midpoint.
  double phi_star = fibre_coordinate(rotated);
  if (phi_star <= 0.0) phi_star += M_PI;
  HPoint midpoint = fibre_translation(phi_star / 2.0).apply(ring[1]);
  return SideAnchors{rotated, midpoint, phi_star};
}

namespace {

// Inhomogeneous endpoints of side k's generator segment: A_k on the base
// plane and the fibre midpoint above A_(k+1).
struct Segment {
  ModelPoint begin;
  ModelPoint end;
};

Segment side_segment(const PrismSpec& spec, int index) {
  if (index < 1 || index > spec.p)
    fail(Errc::invalid_argument, "side index must be in 1..p");
  std::vector<HPoint> ring = vertex_ring(spec.p, spec.x3);
  SideAnchors anchors = side_anchors(spec);
  const HPoint& a = ring[static_cast<std::size_t>(index - 1)];
  HPoint f = fibre_translation(anchors.fibre_height / 2.0)
                 .apply(ring[static_cast<std::size_t>(index % spec.p)]);
  return Segment{to_inhomogeneous(a), to_inhomogeneous(f)};
}

}  // namespace

std::vector<ModelPoint> base_side_curve(const PrismSpec& spec, int index, int n) {
  if (n < 2) fail(Errc::invalid_argument, "base_side_curve: need at least 2 samples");
  Segment seg = side_segment(spec, index);
  std::vector<ModelPoint> curve;
  curve.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / (n - 1);
    ModelPoint m{seg.begin.x + t * (seg.end.x - seg.begin.x),
                 seg.begin.y + t * (seg.end.y - seg.begin.y),
                 seg.begin.z + t * (seg.end.z - seg.begin.z)};
    curve.push_back(to_inhomogeneous(trace_point(from_inhomogeneous(m))));
  }
  return curve;
}

SideSurface side_surface(const PrismSpec& spec, int index, int resolution, double phi_min,
                         double phi_max) {
  if (resolution < 2) fail(Errc::invalid_argument, "side_surface: resolution must be >= 2");
  if (!(phi_min < phi_max))
    fail(Errc::invalid_argument, "side_surface: empty fibre range");
  Segment seg = side_segment(spec, index);
  std::vector<ModelPoint> curve = base_side_curve(spec, index, resolution);

  SideSurface surf;
  surf.index = index;
  surf.seg_begin = seg.begin;
  surf.seg_end = seg.end;
  surf.rows = resolution;
  surf.cols = resolution;
  surf.samples.reserve(static_cast<std::size_t>(resolution) * resolution);
  for (int i = 0; i < resolution; ++i) {
    HPoint base = from_inhomogeneous(curve[static_cast<std::size_t>(i)]);
    for (int j = 0; j < resolution; ++j) {
      double phi = phi_min + (phi_max - phi_min) * j / (resolution - 1);
      surf.samples.push_back(fibre_translation(phi).apply(base));
    }
  }
  return surf;
}

ModelPoint fibre_direction(const ModelPoint& m) {
  return ModelPoint{1.0 + m.x * m.x, m.z + m.x * m.y, -m.y + m.x * m.z};
}

namespace {

struct V3 {
  double x, y, z;
};
V3 sub(const ModelPoint& a, const ModelPoint& b) { return V3{a.x - b.x, a.y - b.y, a.z - b.z}; }
V3 cross(const V3& a, const V3& b) {
  return V3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot(const V3& a, const V3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const V3& a) { return std::sqrt(dot(a, a)); }

}  // namespace

SurfaceFit side_surface_fit(const PrismSpec& spec, int index, const HPoint& point) {
  Segment seg = side_segment(spec, index);
  ModelPoint pm = to_inhomogeneous(point);
  ModelPoint fd = fibre_direction(pm);
  V3 v{fd.x, fd.y, fd.z};
  V3 d = sub(seg.end, seg.begin);
  V3 w = sub(pm, seg.begin);

  double a = dot(v, v), b = dot(v, d), c = dot(d, d);
  double dd = dot(v, w), e = dot(d, w);
  double denom = a * c - b * b;
  SurfaceFit fit;
  if (denom <= 1e-14 * a * c) {
    // Fibre line parallel to the segment: distance of w from the segment line.
    V3 n = cross(w, d);
    fit.line_distance = norm(n) / std::sqrt(c);
    fit.segment_param = e / c;
    return fit;
  }
  double t_seg = (a * e - b * dd) / denom;
  double s_fib = (b * e - c * dd) / denom;
  V3 diff{w.x + s_fib * v.x - t_seg * d.x, w.y + s_fib * v.y - t_seg * d.y,
          w.z + s_fib * v.z - t_seg * d.z};
  fit.line_distance = norm(diff);
  fit.segment_param = t_seg;
  return fit;
}

ClosureReport side_closure(const PrismSpec& spec, int index, int samples) {
  if (samples < 2) fail(Errc::invalid_argument, "side_closure: need at least 2 samples");
  int next = index % spec.p + 1;
  Isometry shared = side_rotation(spec, next);
  SideSurface surf = side_surface(spec, index, samples, -0.5, 0.5);
  ClosureReport rep;
  rep.min_param = 1.0;
  rep.max_param = 0.0;
  for (const HPoint& s : surf.samples) {
    SurfaceFit fit = side_surface_fit(spec, next, shared.apply(s));
    rep.max_line_distance = std::max(rep.max_line_distance, fit.line_distance);
    rep.min_param = std::min(rep.min_param, fit.segment_param);
    rep.max_param = std::max(rep.max_param, fit.segment_param);
  }
  return rep;
}

double cover_plane_k(const PrismSpec& spec) {
  double a = 2.0 * M_PI / spec.p;
  double num = spec.x3 * spec.x3 * std::sin(a);
  double den = 1.0 - spec.x3 * spec.x3 * std::cos(a);
  if (den == 0.0) fail(Errc::degenerate_plane, "cover_plane_k: degenerate denominator");
  return num / den;
}

Plane cover_plane(const PrismSpec& spec) {
  std::vector<HPoint> ring = vertex_ring(spec.p, spec.x3);
  return invariant_plane(ring[1], cover_plane_k(spec));
}

FaceToFaceReport face_to_face_check(const PrismSpec& spec) {
  if (!spec.phi_tau)
    fail(Errc::invalid_argument, "face_to_face_check: spec must carry a cover thickness");
  FaceToFaceReport rep;
  rep.orbit_plane = cover_plane(spec);
  rep.base_plane = Plane{1.0, 0.0, 0.0, 0.0};
  rep.defect = plane_defect(rep.orbit_plane, rep.base_plane);

  std::vector<HPoint> ring = vertex_ring(spec.p, spec.x3);
  Isometry r2 = side_rotation(spec, 2);
  HPoint x = ring[0];
  double worst = 0.0;
  for (int j = 0; j < spec.q; ++j) {
    worst = std::max(worst, std::abs(plane_residual(rep.orbit_plane, to_inhomogeneous(x))));
    x = r2.apply(x);
  }
  rep.orbit_residual = worst;
  rep.verdict = rep.defect > 1e-9 ? Adjacency::non_face_to_face : Adjacency::face_to_face;
  return rep;
}

Prism build_prism(const PrismSpec& spec, int resolution, double phi_min, double phi_max) {
  if (resolution < 2) fail(Errc::invalid_argument, "build_prism: resolution must be >= 2");
  double lo = phi_min, hi = phi_max;
  if (spec.phi_tau) {
    lo = 0.0;
    hi = *spec.phi_tau;
  }
  if (!(lo < hi) || !(std::abs(lo) < M_PI / 2.0) || !(std::abs(hi) < M_PI / 2.0))
    fail(Errc::invalid_argument, "build_prism: fibre range must stay within one chart");

  Prism prism;
  prism.spec = spec;
  prism.base.vertices = vertex_ring(spec.p, spec.x3);
  for (int k = 1; k <= spec.p; ++k) {
    prism.base.side_curves.push_back(base_side_curve(spec, k, resolution));
    prism.sides.push_back(side_surface(spec, k, resolution, lo, hi));
  }
  if (spec.phi_tau) {
    Isometry tau = fibre_translation(*spec.phi_tau);
    prism.cover_translation = tau;
    for (const HPoint& v : prism.base.vertices) prism.top_vertices.push_back(tau.apply(v));
  }
  return prism;
}

TilingPatch tiling_patch(const PrismSpec& spec, int depth) {
  if (depth < 0) fail(Errc::invalid_argument, "tiling_patch: negative depth");
  std::vector<std::pair<std::string, Isometry>> gens;
  for (int k = 1; k <= spec.p; ++k)
    gens.emplace_back("r" + std::to_string(k), side_rotation(spec, k));
  if (spec.phi_tau) {
    gens.emplace_back("t", fibre_translation(*spec.phi_tau));
    gens.emplace_back("ti", fibre_translation(-*spec.phi_tau));
  }

  TilingPatch patch;
  patch.depth = depth;
  patch.tiles.push_back(TileWord{Isometry::identity(), "e"});
  std::size_t frontier_begin = 0;
  for (int d = 0; d < depth; ++d) {
    std::size_t frontier_end = patch.tiles.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& [name, gen] : gens) {
        Isometry cand = compose(patch.tiles[i].transform, gen);
        bool known = false;
        for (const TileWord& tw : patch.tiles)
          if (isometry_equal(tw.transform, cand, 1e-8)) {
            known = true;
            break;
          }
        if (known) continue;
        std::string word =
            patch.tiles[i].word == "e" ? name : patch.tiles[i].word + "." + name;
        patch.tiles.push_back(TileWord{cand, word});
      }
    }
    frontier_begin = frontier_end;
  }
  return patch;
}

}  // namespace sl2r
