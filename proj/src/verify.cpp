#include "sl2r/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "sl2r/error.hpp"
#include "sl2r/tiling.hpp"

namespace sl2r {

namespace {

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return std::string(buf);
}

HPoint random_interior(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.0, 2.5);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> fibre(-1.3, 1.3);
  return from_hyperboloid(HyperboloidParam{radius(rng), angle(rng), fibre(rng)});
}

SuiteResult isometry_constraints_suite(int iterations, double tol) {
  SuiteResult suite{"isometry-constraints", "max residual", 0.0, tol, false, {}};
  std::mt19937_64 rng(0x5eed0001);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::uniform_real_distribution<double> near_radius(0.0, 1.2);
  std::uniform_real_distribution<double> base_angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> fibre(-1.3, 1.3);
  auto near_interior = [&] {
    return from_hyperboloid(HyperboloidParam{near_radius(rng), base_angle(rng), fibre(rng)});
  };
  double worst_constraint = 0.0, worst_form = 0.0;
  for (int i = 0; i < iterations; ++i) {
    // Cycle the four constructors; every fourth draw stresses a short word.
    Isometry word;
    switch (i % 4) {
      case 0: word = fibre_translation(angle(rng)); break;
      case 1: word = rotation_about_origin_fibre(angle(rng)); break;
      case 2: {
        TranslationPair pair = translation_to(random_interior(rng));
        word = (i % 8 == 2) ? pair.to : pair.from;
        break;
      }
      default:
        word = compose(rotation_about_fibre(near_interior(), angle(rng)),
                       compose(fibre_translation(angle(rng)),
                               rotation_about_fibre(near_interior(), angle(rng))));
        break;
    }
    ConstraintReport rep = validate_isometry(word, tol);
    FormPreservation fp = form_preservation(word);
    worst_constraint = std::max(worst_constraint, rep.max_residual);
    worst_form = std::max(worst_form, fp.lambda > 0.0 ? fp.deviation : 1.0);
  }
  suite.value = std::max(worst_constraint, worst_form);
  suite.lines.push_back(fmt("constraint residual %.3e, form deviation %.3e over random words",
                            worst_constraint, worst_form));
  suite.passed = suite.value <= suite.threshold;
  return suite;
}

SuiteResult invariant_plane_suite(int iterations, double tol) {
  SuiteResult suite{"invariant-planes", "max residual", 0.0, tol, false, {}};
  std::mt19937_64 rng(0x5eed0002);
  std::uniform_real_distribution<double> kdist(-2.0, 2.0);
  std::uniform_real_distribution<double> disc(-0.7, 0.7);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int i = 0; i < iterations; ++i) {
    HPoint axis = random_interior(rng);
    double k = kdist(rng);
    Plane plane = invariant_plane(axis, k);
    Isometry to_axis = translation_to(axis).to;
    Isometry rot = rotation_about_fibre(axis, angle(rng));
    for (int s = 0; s < 8; ++s) {
      HPoint on_plane = to_axis.apply(HPoint(1.0, k, disc(rng), disc(rng)));
      suite.value =
          std::max(suite.value, std::abs(plane_residual(plane, to_inhomogeneous(on_plane))));
      HPoint rotated = rot.apply(on_plane);
      suite.value =
          std::max(suite.value, std::abs(plane_residual(plane, to_inhomogeneous(rotated))));
    }
  }
  suite.lines.push_back(fmt("membership residual before/after rotation %.3e", suite.value));
  suite.passed = suite.value <= suite.threshold;
  return suite;
}

SuiteResult regression_table_suite(double tol) {
  SuiteResult suite{"regression-table", "max residual", 0.0, tol, false, {}};
  const int qs[] = {7, 8, 9, 10, 50, 1000};
  for (int q : qs) {
    double solved = solve_x3(3, q);
    double closed = closed_form_x3_p3(q);
    double diff = std::abs(solved - closed);
    suite.value = std::max(suite.value, diff);
    suite.lines.push_back(
        fmt("q=%4.0f  solve=%.8f  closed-form=%.8f", static_cast<double>(q), solved, closed));
  }
  double quad = std::abs(solve_x3(4, 6) - (std::sqrt(6.0) - std::sqrt(2.0)) / 2.0);
  suite.value = std::max(suite.value, quad);
  suite.lines.push_back(fmt("(4,6) vs (sqrt6-sqrt2)/2: diff %.3e", quad));
  suite.passed = suite.value <= suite.threshold;
  return suite;
}

SuiteResult cross_check_suite(bool full, double tol) {
  SuiteResult suite{"solver-cross-check", "max residual", 0.0, tol, false, {}};
  std::vector<std::pair<int, int>> cases = {{3, 7}, {4, 6}, {5, 4}, {8, 3}};
  if (full) {
    cases.push_back({3, 50});
    cases.push_back({6, 20});
    cases.push_back({10, 3});
  }
  for (auto [p, q] : cases) {
    PrismSpec spec = make_spec(p, q);
    std::vector<HPoint> ring = vertex_ring(p, spec.x3);
    HPoint image = side_rotation(spec, 2).apply(ring[0]);
    double trace_angle = projective_angle(trace_point(image), ring[2]);
    // Compare fibre angles mod pi: the principal value sits below pi/2 even
    // when the climbed height does not.
    double height_defect = std::abs(std::remainder(
        fibre_coordinate(image) - (M_PI - 2.0 * M_PI / p - 2.0 * M_PI / q), M_PI));
    suite.value = std::max({suite.value, trace_angle, height_defect});
    suite.lines.push_back(fmt("(%1.0f,%1.0f): rotated vertex lands on the far fibre to %.3e",
                              static_cast<double>(p), static_cast<double>(q),
                              std::max(trace_angle, height_defect)));
  }
  suite.passed = suite.value <= suite.threshold;
  return suite;
}

SuiteResult closure_suite(bool full, double tol) {
  SuiteResult suite{"tiling-closure", "max residual", 0.0, tol, false, {}};
  std::vector<std::pair<int, int>> cases = {{3, 7}, {4, 6}};
  if (full) {
    cases.push_back({3, 8});
    cases.push_back({5, 4});
    cases.push_back({7, 3});
  }
  for (auto [p, q] : cases) {
    PrismSpec spec = make_spec(p, q);
    double worst = 0.0;
    for (int k = 1; k <= p; ++k) {
      ClosureReport rep = side_closure(spec, k, full ? 16 : 8);
      worst = std::max({worst, rep.max_line_distance, std::max(0.0, -rep.min_param),
                        std::max(0.0, rep.max_param - 1.0)});
    }
    suite.value = std::max(suite.value, worst);
    suite.lines.push_back(fmt("(%1.0f,%1.0f): side image residual %.3e",
                              static_cast<double>(p), static_cast<double>(q), worst));
  }
  suite.passed = suite.value <= suite.threshold;
  return suite;
}

SuiteResult face_to_face_suite(bool full, double floor_defect) {
  SuiteResult suite{"non-face-to-face", "min defect", 1.0, floor_defect, false, {}};
  int count = 0;
  int pmax = full ? 8 : 5;
  int qmax = full ? 20 : 9;
  for (int p = 3; p <= pmax; ++p)
    for (int q = 3; q <= qmax; ++q) {
      if (!is_admissible(p, q)) continue;
      PrismSpec spec = make_spec(p, q, 0.3);
      FaceToFaceReport rep = face_to_face_check(spec);
      if (rep.verdict != Adjacency::non_face_to_face) suite.value = 0.0;
      suite.value = std::min(suite.value, rep.defect);
      ++count;
    }
  suite.lines.push_back(
      fmt("%3.0f admissible (p,q) all non-face-to-face, smallest plane defect %.3e",
          static_cast<double>(count), suite.value));
  suite.passed = suite.value >= suite.threshold;
  return suite;
}

}  // namespace

VerificationReport run_verification(VerifyLevel level, double tol_scale) {
  if (!(tol_scale > 0.0) || !std::isfinite(tol_scale))
    fail(Errc::invalid_argument, "run_verification: tol_scale must be positive");
  bool full = level == VerifyLevel::full;
  VerificationReport report;
  report.suites.push_back(isometry_constraints_suite(full ? 400 : 60, 1e-8 * tol_scale));
  report.suites.push_back(invariant_plane_suite(full ? 200 : 40, 1e-9 * tol_scale));
  report.suites.push_back(regression_table_suite(1e-9 * tol_scale));
  report.suites.push_back(cross_check_suite(full, 1e-8 * tol_scale));
  report.suites.push_back(closure_suite(full, 1e-8 * tol_scale));
  // Lower-bound suite: shrinking tol_scale raises the floor.
  report.suites.push_back(face_to_face_suite(full, 1e-6 / tol_scale));
  report.all_passed = true;
  for (const SuiteResult& s : report.suites) report.all_passed = report.all_passed && s.passed;
  return report;
}

std::string format_verification(const VerificationReport& report) {
  std::ostringstream os;
  for (const SuiteResult& s : report.suites) {
    char head[160];
    std::snprintf(head, sizeof head, "suite %-22s %s %.3e (threshold %.3e)  %s\n",
                  s.name.c_str(), s.metric.c_str(), s.value, s.threshold,
                  s.passed ? "PASS" : "FAIL");
    os << head;
    for (const std::string& line : s.lines) os << "  " << line << "\n";
  }
  os << (report.all_passed ? "all suites passed" : "verification FAILED") << "\n";
  return os.str();
}

}  // namespace sl2r
