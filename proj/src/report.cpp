#include "sl2r/report.hpp"

#include <cmath>

#include <json.hpp>

#include "sl2r/error.hpp"

namespace sl2r {

namespace {

using nlohmann::json;

json coords_json(const HPoint& p) {
  return json::array({p[0], p[1], p[2], p[3]});
}

json matrix_json(const Mat4& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < 4; ++r)
    rows.push_back(json::array({m[r][0], m[r][1], m[r][2], m[r][3]}));
  return rows;
}

HPoint coords_from_json(const json& j) {
  return HPoint(j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(),
                j.at(3).get<double>());
}

Mat4 matrix_from_json(const json& j) {
  Mat4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m[r][c] = j.at(r).at(c).get<double>();
  return m;
}

struct Diagnostics {
  double solve_residual{};
  double rotated_vertex_trace_angle{};
  double midpoint_trace_angle{};
  double fibre_height_defect{};
  double isometry_constraint_max{};
  double form_preservation_max{};
  double cover_plane_orbit_max{};
  double closure_max_distance{};
  double face_to_face_defect{};
};

// The recomputation below intentionally starts from stored values (x3, vertex
// coordinates, generator matrices, plane coefficients), not from a fresh
// solve, so the self check validates the report rather than the solver.
Diagnostics compute_diagnostics(const PrismSpec& spec, const std::vector<HPoint>& vertices,
                                const HPoint& rotated, const HPoint& midpoint,
                                double fibre_height, const Plane& plane,
                                const std::vector<Isometry>& gens) {
  Diagnostics d;
  d.solve_residual = vertex_angle_residual(spec.p, spec.q, spec.x3);
  d.rotated_vertex_trace_angle = projective_angle(trace_point(rotated), vertices[1]);
  d.midpoint_trace_angle = projective_angle(trace_point(midpoint), vertices[1]);
  double defect_angle = M_PI - 2.0 * M_PI / spec.p - 2.0 * M_PI / spec.q;
  d.fibre_height_defect = std::abs(fibre_height - defect_angle);

  for (const Isometry& g : gens) {
    d.isometry_constraint_max =
        std::max(d.isometry_constraint_max, validate_isometry(g).max_residual);
    d.form_preservation_max = std::max(d.form_preservation_max, form_preservation(g).deviation);
  }

  HPoint x = vertices[0];
  for (int j = 0; j < spec.q; ++j) {
    d.cover_plane_orbit_max =
        std::max(d.cover_plane_orbit_max, std::abs(plane_residual(plane, to_inhomogeneous(x))));
    x = gens[1].apply(x);
  }

  for (int k = 1; k <= spec.p; ++k)
    d.closure_max_distance =
        std::max(d.closure_max_distance, side_closure(spec, k, 8).max_line_distance);

  d.face_to_face_defect = plane_defect(plane, Plane{1.0, 0.0, 0.0, 0.0});
  return d;
}

json diagnostics_json(const Diagnostics& d) {
  return json{{"solve_residual", d.solve_residual},
              {"rotated_vertex_trace_angle", d.rotated_vertex_trace_angle},
              {"midpoint_trace_angle", d.midpoint_trace_angle},
              {"fibre_height_defect", d.fibre_height_defect},
              {"isometry_constraint_max", d.isometry_constraint_max},
              {"form_preservation_max", d.form_preservation_max},
              {"cover_plane_orbit_max", d.cover_plane_orbit_max},
              {"closure_max_distance", d.closure_max_distance},
              {"face_to_face_defect", d.face_to_face_defect}};
}

}  // namespace

std::string tiling_report_json(const PrismSpec& spec) {
  std::vector<HPoint> vertices = vertex_ring(spec.p, spec.x3);
  SideAnchors anchors = side_anchors(spec);
  Plane plane = cover_plane(spec);
  double k = cover_plane_k(spec);
  std::vector<Isometry> gens;
  for (int i = 1; i <= spec.p; ++i) gens.push_back(side_rotation(spec, i));

  Diagnostics d = compute_diagnostics(spec, vertices, anchors.rotated_vertex,
                                      anchors.fibre_midpoint, anchors.fibre_height, plane, gens);

  json report;
  report["p"] = spec.p;
  report["q"] = spec.q;
  report["x3"] = spec.x3;
  report["phi_tau"] = spec.phi_tau ? json(*spec.phi_tau) : json(nullptr);
  json verts = json::array();
  for (const HPoint& v : vertices) verts.push_back(coords_json(v));
  report["vertices"] = verts;
  report["rotated_vertex"] = coords_json(anchors.rotated_vertex);
  report["fibre_midpoint"] = coords_json(anchors.fibre_midpoint);
  report["fibre_height"] = anchors.fibre_height;
  report["cover_plane"] =
      json{{"a", plane.a}, {"b", plane.b}, {"c", plane.c}, {"d", plane.d}, {"k", k}};
  json gj = json::array();
  for (const Isometry& g : gens) gj.push_back(matrix_json(g.matrix()));
  report["generators"] = gj;
  report["face_to_face"] =
      d.face_to_face_defect > 1e-9 ? "non_face_to_face" : "face_to_face";
  report["diagnostics"] = diagnostics_json(d);
  return report.dump(2) + "\n";
}

double report_self_check(const std::string& report_json) {
  json report;
  try {
    report = json::parse(report_json);
  } catch (const std::exception& e) {
    fail(Errc::invalid_argument, std::string("report_self_check: ") + e.what());
  }

  PrismSpec spec;
  spec.p = report.at("p").get<int>();
  spec.q = report.at("q").get<int>();
  spec.x3 = report.at("x3").get<double>();
  if (!report.at("phi_tau").is_null()) spec.phi_tau = report.at("phi_tau").get<double>();

  std::vector<HPoint> vertices;
  for (const json& v : report.at("vertices")) vertices.push_back(coords_from_json(v));
  HPoint rotated = coords_from_json(report.at("rotated_vertex"));
  HPoint midpoint = coords_from_json(report.at("fibre_midpoint"));
  double fibre_height = report.at("fibre_height").get<double>();
  const json& pj = report.at("cover_plane");
  Plane plane{pj.at("a").get<double>(), pj.at("b").get<double>(), pj.at("c").get<double>(),
              pj.at("d").get<double>()};
  std::vector<Isometry> gens;
  for (const json& g : report.at("generators")) gens.push_back(Isometry(matrix_from_json(g)));

  Diagnostics d =
      compute_diagnostics(spec, vertices, rotated, midpoint, fibre_height, plane, gens);
  const json& dj = report.at("diagnostics");
  double dev = 0.0;
  auto cmp = [&](const char* key, double fresh) {
    dev = std::max(dev, std::abs(dj.at(key).get<double>() - fresh));
  };
  cmp("solve_residual", d.solve_residual);
  cmp("rotated_vertex_trace_angle", d.rotated_vertex_trace_angle);
  cmp("midpoint_trace_angle", d.midpoint_trace_angle);
  cmp("fibre_height_defect", d.fibre_height_defect);
  cmp("isometry_constraint_max", d.isometry_constraint_max);
  cmp("form_preservation_max", d.form_preservation_max);
  cmp("cover_plane_orbit_max", d.cover_plane_orbit_max);
  cmp("closure_max_distance", d.closure_max_distance);
  cmp("face_to_face_defect", d.face_to_face_defect);
  return dev;
}

}  // namespace sl2r
