#pragma once

#include "sl2r/hpoint.hpp"
#include "sl2r/mat4.hpp"

namespace sl2r {

// Orientation-preserving isometry of the model, represented by a 4x4 matrix
// acting on coordinate rows from the right: P' = P * M.  Matrices that differ
// by a positive scalar factor describe the same isometry.
class Isometry {
 public:
  Isometry() : m_(Mat4::identity()) {}
  explicit Isometry(const Mat4& m) : m_(m) {}

  static Isometry identity() { return Isometry(); }

  const Mat4& matrix() const { return m_; }

  // Frobenius-normalized representative with the first nonzero entry (in row
  // scan order) positive.  Matrices differing by any real factor, including
  // the sign flip that adds a half-turn of the fibre period, normalize to the
  // same representative.
  Mat4 canonical_matrix() const;

  HPoint apply(const HPoint& p) const;
  Isometry inverse() const;

 private:
  Mat4 m_;
};

// apply(compose(a, b), p) = apply(b, apply(a, p)): a acts first.
Isometry compose(const Isometry& first, const Isometry& then);

bool isometry_equal(const Isometry& a, const Isometry& b, double tol = 1e-10);

// Translation along the origin fibre by phi.  phi and phi + pi give the same
// projective map.
Isometry fibre_translation(double phi);

// Rotation by omega about the origin fibre, fixing it pointwise.  omega is
// reduced to (-pi, pi].
Isometry rotation_about_origin_fibre(double omega);

// Pair carrying the origin fibre to the fibre through a given interior point
// and back.  `to` maps the origin to the point; `from` is its inverse.
struct TranslationPair {
  Isometry to;
  Isometry from;
};
TranslationPair translation_to(const HPoint& target);

// Rotation by omega about the fibre through an interior point, conjugated
// from the origin-fibre rotation.
Isometry rotation_about_fibre(const HPoint& axis_point, double omega);

// Residuals of the defining constraints of an isometry matrix, evaluated on
// the representative rescaled so the row-0 form value is -1.  Rows 0 and 2
// must be unit rows of opposite sign, orthogonal in both the plain and the
// twisted pairing, and rows 1 and 3 must follow one of the two sign patterns
// determined by rows 0 and 2; the two patterns differ by an overall sign of
// rows 1 and 3.
struct ConstraintReport {
  double row0_form{};             // |form(row0) + 1|
  double row2_form{};             // |form(row2) - 1|
  double orthogonality{};         // |<row0, row2>|
  double twisted_orthogonality{}; // |twisted pairing of rows 0 and 2|
  double upper_pattern_dev{};     // pattern deviation of rows 1 and 3, plus sign
  double lower_pattern_dev{};     // same, minus sign
  bool upper_pattern{};           // which sign pattern fit best
  double max_residual{};          // worst constraint with the best pattern
  double tolerance{};
  bool passed{};
};
ConstraintReport validate_isometry(const Isometry& iso, double tol = 1e-10);

// Best-fit lambda and deviation max|M Q M^T - lambda Q| for the invariance of
// the model form Q = diag(-1,-1,1,1).  Isometries give a small deviation and
// lambda > 0.
struct FormPreservation {
  double lambda{};
  double deviation{};
};
FormPreservation form_preservation(const Isometry& iso);

// Plane a x + b y + c z + d = 0 in inhomogeneous coordinates.
struct Plane {
  double a{};
  double b{};
  double c{};
  double d{};
};

// Plane through the fibre of `axis_point` that a rotation about that fibre
// maps to itself as a set: the image of x = k under the translation carrying
// the origin to the axis point.  Errors when the axis lies on the origin
// fibre and k equals its inhomogeneous x, which collapses the plane.
Plane invariant_plane(const HPoint& axis_point, double k);

// Signed evaluation of the plane equation at a point, normalized by the
// coefficient norm sqrt(a^2 + b^2 + c^2 + d^2).
double plane_residual(const Plane& pl, const ModelPoint& m);

// sin of the angle between the coefficient 4-vectors, 0 iff the planes are
// proportional (equal as projective planes).
double plane_defect(const Plane& u, const Plane& v);

}  // namespace sl2r
