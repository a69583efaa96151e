#include "sl2r/hpoint.hpp"

#include <cmath>

#include "sl2r/error.hpp"

namespace sl2r {

HPoint::HPoint(double x0, double x1, double x2, double x3) : c_{{x0, x1, x2, x3}} {
  if (x0 == 0.0 && x1 == 0.0 && x2 == 0.0 && x3 == 0.0)
    fail(Errc::invalid_argument, "HPoint: zero coordinate row");
  if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(x3))
    fail(Errc::invalid_argument, "HPoint: non-finite coordinate");
}

HPoint::HPoint(const Vec4& coords) : HPoint(coords[0], coords[1], coords[2], coords[3]) {}

HPoint HPoint::canonical() const {
  if (at_infinity()) fail(Errc::at_infinity, "HPoint::canonical: x0 = 0");
  double inv = 1.0 / c_[0];
  return HPoint(1.0, c_[1] * inv, c_[2] * inv, c_[3] * inv);
}

double form_product(const Vec4& a, const Vec4& b) {
  return -a[0] * b[0] - a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

double form_value(const HPoint& p) { return form_product(p.coords(), p.coords()); }

bool is_interior(const HPoint& p) { return form_value(p) < 0.0; }

Sl2Chart sl2_chart(const HPoint& p) {
  return Sl2Chart{p[0] + p[3], p[1] + p[2], -p[1] + p[2], p[0] - p[3]};
}

HPoint trace_point(const HPoint& p) {
  double z0 = p[0] * p[0] + p[1] * p[1];
  if (z0 == 0.0) fail(Errc::at_infinity, "trace_point: fibre has no base-plane foot");
  double inv = 1.0 / z0;
  return HPoint(1.0, 0.0, (p[0] * p[2] - p[1] * p[3]) * inv, (p[0] * p[3] + p[1] * p[2]) * inv);
}

HPoint from_hyperboloid(const HyperboloidParam& hp) {
  if (!(hp.r >= 0.0)) fail(Errc::invalid_argument, "from_hyperboloid: negative radius");
  if (!std::isfinite(hp.theta) || !std::isfinite(hp.phi))
    fail(Errc::invalid_argument, "from_hyperboloid: non-finite angle");
  // phi is unbounded (the lift); the representative lands in the model with
  // fibre coordinate phi mod pi.
  double chr = std::cosh(hp.r), shr = std::sinh(hp.r);
  return HPoint(chr * std::cos(hp.phi), chr * std::sin(hp.phi),
                shr * std::cos(hp.theta - hp.phi), shr * std::sin(hp.theta - hp.phi));
}

double fibre_coordinate(const HPoint& p) {
  if (p[0] == 0.0 && p[1] == 0.0)
    fail(Errc::invalid_argument, "fibre_coordinate: no base-plane foot");
  // arctan of the ratio is representative independent and stays in one
  // pi-period of the fibre.
  return std::atan(p[1] / p[0]);
}

ModelPoint to_inhomogeneous(const HPoint& p) {
  if (p.at_infinity()) fail(Errc::at_infinity, "to_inhomogeneous: x0 = 0");
  double inv = 1.0 / p[0];
  return ModelPoint{p[1] * inv, p[2] * inv, p[3] * inv};
}

HPoint from_inhomogeneous(const ModelPoint& m) { return HPoint(1.0, m.x, m.y, m.z); }

double projective_angle(const HPoint& a, const HPoint& b) {
  Vec4 u = a.coords() * (1.0 / a.coords().norm());
  Vec4 v = b.coords() * (1.0 / b.coords().norm());
  // Chord formulas stay accurate at both ends of [0, pi], unlike acos of the
  // dot product: the short chord resolves angles near 0, the antipodal chord
  // angles near pi.
  double chord = (u - v).norm();
  if (chord <= M_SQRT2) return 2.0 * std::asin(chord / 2.0);
  double antipodal = (u + v).norm();
  return M_PI - 2.0 * std::asin(antipodal / 2.0);
}

bool projectively_equal(const HPoint& a, const HPoint& b, double tol) {
  return projective_angle(a, b) <= tol;
}

}  // namespace sl2r
