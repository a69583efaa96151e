#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2r/isometry.hpp"

namespace sl2r {

// Parameters of a regular p-gonal prism tiling: base valence p >= 3, side
// valence q with q (p - 2) > 2 p, solved base circumradius coordinate
// x3 in (0, 1).  phi_tau set selects the bounded prism of fibre thickness
// phi_tau per tile; empty selects the infinite prism.
struct PrismSpec {
  int p{};
  int q{};
  double x3{};
  std::optional<double> phi_tau{};
};

bool is_admissible(int p, int q);

// Closed-form x3 for triangular bases (p = 3), valid for q >= 7;
// q = 6 gives the flat limit 0 up to roundoff.
double closed_form_x3_p3(int q);

// Defect of the side-valence condition at circumradius coordinate x3: the
// base angle under which vertex 1's neighbours are seen from vertex 2,
// measured between the base traces of the two rotated far vertices, minus
// 2 pi / q.  Strictly decreasing in x3 on (0, 1); its root is the tiling.
// At x3 -> 0+ it approaches the flat p-gon value pi - 2 pi / p - 2 pi / q.
double vertex_angle_residual(int p, int q, double x3);

struct SolveOptions {
  double tol = 1e-12;  // on the residual
  int max_iter = 200;
};

// Bisection root of vertex_angle_residual.  Errors when (p, q) is
// inadmissible or the iteration budget is exhausted.
double solve_x3(int p, int q, const SolveOptions& opts = {});

PrismSpec make_spec(int p, int q, std::optional<double> phi_tau = {},
                    const SolveOptions& opts = {});

// Base vertices A_1..A_p on the base plane, A_k at angle 2 pi (k - 1) / p
// measured clockwise from the +z axis: A_1 = (1; 0; 0; x3),
// A_2 = (1; 0; x3 sin(2 pi / p); x3 cos(2 pi / p)), ...
std::vector<HPoint> vertex_ring(int p, double x3);

// Rotation about the origin fibre carrying A_k to A_(k+1) (indices mod p).
Isometry ring_rotation(int p);

// Generator r_k of the prism group: rotation by 2 pi / q about the fibre
// f_k through A_k, oriented so r_k carries the side at f_(k-1) to the side
// at f_(k+1).  index is 1-based.
Isometry side_rotation(const PrismSpec& spec, int index);

// Data of side 1 (between fibres f_1 and f_2) pinned to fibre f_2:
// rotated_vertex is r_1(A_p), the image of the far vertex, at fibre height
// fibre_height above A_2; fibre_midpoint is the half-height point, the far
// endpoint of the side's straight generator segment from A_1.
struct SideAnchors {
  HPoint rotated_vertex;
  HPoint fibre_midpoint;
  double fibre_height{};
};
SideAnchors side_anchors(const PrismSpec& spec);

// n samples of the base curve of side k: the trace of the straight segment
// from A_k to the fibre midpoint on f_(k+1).  Runs from A_k (t = 0) to
// A_(k+1) (t = 1).
std::vector<ModelPoint> base_side_curve(const PrismSpec& spec, int index, int n);

// Ruled side surface k, sampled as fibre coordinates phi over the base
// curve: sample(i, j) = C_k(t_i) * S(phi_j) with t_i uniform in [0, 1] and
// phi_j uniform in [phi_min, phi_max].  seg_begin/seg_end are the endpoints
// of the generator segment at fibre height 0..fibre_height/2.
struct SideSurface {
  int index{};
  ModelPoint seg_begin;
  ModelPoint seg_end;
  int rows{};  // t samples
  int cols{};  // phi samples
  std::vector<HPoint> samples;  // row-major

  const HPoint& at(int i, int j) const {
    return samples[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(j)];
  }
};
SideSurface side_surface(const PrismSpec& spec, int index, int resolution,
                         double phi_min, double phi_max);

// Distance diagnostics of a point against side surface k: the surface is the
// union of fibre lines through the generator segment, so membership is the
// distance between the point's fibre line and the segment's line, plus the
// segment parameter of the nearest point (inside [0, 1] when the foot is on
// the segment).
struct SurfaceFit {
  double line_distance{};
  double segment_param{};
};
SurfaceFit side_surface_fit(const PrismSpec& spec, int index, const HPoint& point);

// Euclidean direction of the fibre line through an inhomogeneous point.
// Fibres are straight lines of the model in inhomogeneous coordinates.
ModelPoint fibre_direction(const ModelPoint& m);

// Maps an n x n sample grid of side `index` by the rotation about the shared
// fibre f_(index+1) and fits every image against side index+1.  The two
// surfaces coincide, so max_line_distance stays at roundoff and the foot
// parameters stay inside [0, 1].
struct ClosureReport {
  double max_line_distance{};
  double min_param{};
  double max_param{};
};
ClosureReport side_closure(const PrismSpec& spec, int index, int samples);

// Plane containing the whole r_2-orbit of vertex A_1 (and the fibre
// midpoints of the sides at f_2).  This is the invariant plane of f_2 with
// k = x3^2 sin(2 pi / p) / (1 - x3^2 cos(2 pi / p)); the same k equals
// tan(fibre_height / 2).
double cover_plane_k(const PrismSpec& spec);
Plane cover_plane(const PrismSpec& spec);

enum class Adjacency {
  face_to_face,
  non_face_to_face,
};

// Whether neighbour prisms across a side surface meet the tile stack's cover
// faces plane-to-plane.  The orbit plane of A_1 under r_2 is compared with
// the base plane x = 0: a nonzero defect means the neighbours' cover-face
// vertices climb the shared fibre instead of staying in any horizontal cover
// plane, so the tiling is not face-to-face.
struct FaceToFaceReport {
  Adjacency verdict{};
  Plane orbit_plane;       // plane of the r_2-orbit of A_1
  Plane base_plane;        // the base plane x = 0
  double defect{};         // plane_defect(orbit_plane, base_plane)
  double orbit_residual{}; // max |plane_residual| over the sampled orbit
};
FaceToFaceReport face_to_face_check(const PrismSpec& spec);

// Fundamental prism: base figure, side surfaces, and for bounded prisms the
// cover translation and top vertices.
struct BaseFigure {
  std::vector<HPoint> vertices;
  std::vector<std::vector<ModelPoint>> side_curves;
};

struct Prism {
  PrismSpec spec;
  BaseFigure base;
  std::vector<SideSurface> sides;
  std::optional<Isometry> cover_translation;
  std::vector<HPoint> top_vertices;
};

Prism build_prism(const PrismSpec& spec, int resolution, double phi_min,
                  double phi_max);

// Patch of the tiling: words of length <= depth in the side rotations (and,
// for bounded prisms, the cover translation and its inverse), deduplicated
// as projective maps.  Words list applications left to right; "e" is the
// identity.
struct TileWord {
  Isometry transform;
  std::string word;
};
struct TilingPatch {
  int depth{};
  std::vector<TileWord> tiles;
};
TilingPatch tiling_patch(const PrismSpec& spec, int depth);

}  // namespace sl2r
