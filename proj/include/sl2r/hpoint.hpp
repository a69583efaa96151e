#pragma once

#include "sl2r/mat4.hpp"

namespace sl2r {

// Homogeneous coordinate row (x0; x1; x2; x3) in the projective model of the
// twisted line bundle over the hyperbolic plane.  Points are identified up to
// a positive scalar factor.  The stored representative is whatever the
// producing operation yields; quantities that depend on the representative
// (form_value, sl2_chart) say so explicitly.
class HPoint {
 public:
  HPoint(double x0, double x1, double x2, double x3);
  explicit HPoint(const Vec4& coords);

  static HPoint origin() { return HPoint(1.0, 0.0, 0.0, 0.0); }

  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const Vec4& coords() const { return c_; }

  bool at_infinity() const { return c_[0] == 0.0; }

  // Representative rescaled to x0 = 1.  Errors when x0 = 0.
  HPoint canonical() const;

 private:
  Vec4 c_;
};

// Inhomogeneous coordinates (x, y, z) = (x1/x0, x2/x0, x3/x0).
struct ModelPoint {
  double x{};
  double y{};
  double z{};
};

// Hyperboloid parameters: base-plane polar radius r, base angle theta, fibre
// angle phi.  phi ranges over all of R; the projective representative only
// sees it mod pi, so an unbounded phi is how a point of the universal cover
// is named.
struct HyperboloidParam {
  double r{};
  double theta{};
  double phi{};
};

// Quadratic form -x0^2 - x1^2 + x2^2 + x3^2 at the stored representative.
// Not scale invariant; only its sign is projective.  Interior points of the
// model solid have negative form value.
double form_value(const HPoint& p);
double form_product(const Vec4& a, const Vec4& b);

bool is_interior(const HPoint& p);

// 2x2 chart (a b; c d) of the point, with a d - b c = -form_value.
struct Sl2Chart {
  double a{};
  double b{};
  double c{};
  double d{};
};
Sl2Chart sl2_chart(const HPoint& p);

// Foot of the fibre through p on the base plane x1 = 0, as the canonical
// x0 = 1 representative of (x0^2 + x1^2; 0; x0 x2 - x1 x3; x0 x3 + x1 x2).
HPoint trace_point(const HPoint& p);

// Point with given hyperboloid parameters; the returned representative has
// form value exactly -1.
HPoint from_hyperboloid(const HyperboloidParam& hp);

// Fibre coordinate arctan(x1/x0), in (-pi/2, pi/2).
double fibre_coordinate(const HPoint& p);

ModelPoint to_inhomogeneous(const HPoint& p);
HPoint from_inhomogeneous(const ModelPoint& m);

// Angle between the rays spanned by a and b after positive rescaling, in
// [0, pi].  Zero iff the points are equal as projective points with the
// positive-factor identification; negated representatives give pi.
double projective_angle(const HPoint& a, const HPoint& b);
bool projectively_equal(const HPoint& a, const HPoint& b, double tol = 1e-10);

}  // namespace sl2r
