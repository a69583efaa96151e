#include "sl2r/isometry.hpp"

#include <cmath>

#include "sl2r/error.hpp"

namespace sl2r {

namespace {

// Representative of an interior point rescaled to form value -1, with the
// leading fibre pair (x0, x1) oriented positively.
Vec4 unit_interior(const HPoint& p, const char* who) {
  double f = form_value(p);
  if (!(f < 0.0)) fail(Errc::non_interior_point, std::string(who) + ": point not interior");
  double s = 1.0 / std::sqrt(-f);
  Vec4 x = p.coords() * s;
  if (x[0] < 0.0 || (x[0] == 0.0 && x[1] < 0.0)) x = x * -1.0;
  return x;
}

Mat4 translation_matrix(const Vec4& x) {
  Mat4 t;
  t[0] = {{x[0], x[1], x[2], x[3]}};
  t[1] = {{-x[1], x[0], x[3], -x[2]}};
  t[2] = {{x[2], x[3], x[0], x[1]}};
  t[3] = {{x[3], -x[2], -x[1], x[0]}};
  return t;
}

Mat4 translation_inverse_matrix(const Vec4& x) {
  Mat4 t;
  t[0] = {{x[0], -x[1], -x[2], -x[3]}};
  t[1] = {{x[1], x[0], -x[3], x[2]}};
  t[2] = {{-x[2], -x[3], x[0], -x[1]}};
  t[3] = {{-x[3], x[2], x[1], x[0]}};
  return t;
}

Mat4 gauss_inverse(const Mat4& m) {
  Mat4 a = m;
  Mat4 inv = Mat4::identity();
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) fail(Errc::degenerate_plane, "Isometry::inverse: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    double s = 1.0 / a[col][col];
    a[col] = a[col] * s;
    inv[col] = inv[col] * s;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col) continue;
      double f = a[r][col];
      if (f == 0.0) continue;
      a[r] = a[r] - a[col] * f;
      inv[r] = inv[r] - inv[col] * f;
    }
  }
  return inv;
}

double twisted_pairing(const Vec4& a, const Vec4& b) {
  return -a[0] * b[1] + a[1] * b[0] - a[2] * b[3] + a[3] * b[2];
}

}  // namespace

Mat4 Isometry::canonical_matrix() const {
  double n = m_.frobenius_norm();
  if (n == 0.0) fail(Errc::invalid_argument, "Isometry: zero matrix");
  Mat4 c = m_ * (1.0 / n);
  double lead = 0.0;
  for (std::size_t r = 0; r < 4 && lead == 0.0; ++r)
    for (std::size_t col = 0; col < 4; ++col)
      if (std::abs(c[r][col]) > 1e-9) {
        lead = c[r][col];
        break;
      }
  if (lead < 0.0) c = c * -1.0;
  return c;
}

HPoint Isometry::apply(const HPoint& p) const {
  Vec4 y = p.coords() * m_;
  if (y[0] == 0.0) {
    if (y[1] == 0.0 && y[2] == 0.0 && y[3] == 0.0)
      fail(Errc::invalid_argument, "Isometry::apply: zero image");
    fail(Errc::at_infinity, "Isometry::apply: image at infinity");
  }
  double inv = 1.0 / y[0];
  return HPoint(1.0, y[1] * inv, y[2] * inv, y[3] * inv);
}

Isometry Isometry::inverse() const { return Isometry(gauss_inverse(m_)); }

Isometry compose(const Isometry& first, const Isometry& then) {
  return Isometry(first.matrix() * then.matrix());
}

bool isometry_equal(const Isometry& a, const Isometry& b, double tol) {
  return (a.canonical_matrix() - b.canonical_matrix()).max_abs() <= tol;
}

Isometry fibre_translation(double phi) {
  double c = std::cos(phi), s = std::sin(phi);
  Mat4 m;
  m[0] = {{c, s, 0, 0}};
  m[1] = {{-s, c, 0, 0}};
  m[2] = {{0, 0, c, -s}};
  m[3] = {{0, 0, s, c}};
  return Isometry(m);
}

Isometry rotation_about_origin_fibre(double omega) {
  double w = std::remainder(omega, 2.0 * M_PI);
  if (w <= -M_PI) w += 2.0 * M_PI;
  double c = std::cos(w), s = std::sin(w);
  Mat4 m = Mat4::identity();
  m[2] = {{0, 0, c, s}};
  m[3] = {{0, 0, -s, c}};
  return Isometry(m);
}

TranslationPair translation_to(const HPoint& target) {
  Vec4 x = unit_interior(target, "translation_to");
  return TranslationPair{Isometry(translation_matrix(x)),
                         Isometry(translation_inverse_matrix(x))};
}

Isometry rotation_about_fibre(const HPoint& axis_point, double omega) {
  TranslationPair t = translation_to(axis_point);
  return compose(compose(t.from, rotation_about_origin_fibre(omega)), t.to);
}

ConstraintReport validate_isometry(const Isometry& iso, double tol) {
  const Mat4& m = iso.matrix();
  double f00 = form_product(m[0], m[0]);
  if (!(f00 < 0.0))
    fail(Errc::not_rescalable, "validate_isometry: row 0 has non-negative form value");
  double s = 1.0 / std::sqrt(-f00);
  Mat4 n = m * s;

  ConstraintReport rep;
  rep.tolerance = tol;
  rep.row0_form = std::abs(form_product(n[0], n[0]) + 1.0);
  rep.row2_form = std::abs(form_product(n[2], n[2]) - 1.0);
  rep.orthogonality = std::abs(form_product(n[0], n[2]));
  rep.twisted_orthogonality = std::abs(twisted_pairing(n[0], n[2]));

  // Rows 1 and 3 are determined by rows 0 and 2 up to a common sign.
  Vec4 row1 = {{-n[0][1], n[0][0], n[0][3], -n[0][2]}};
  Vec4 row3 = {{n[2][1], -n[2][0], -n[2][3], n[2][2]}};
  auto fit = [&](double sign) {
    double d = 0.0;
    for (std::size_t c = 0; c < 4; ++c) {
      d = std::max(d, std::abs(n[1][c] - sign * row1[c]));
      d = std::max(d, std::abs(n[3][c] - sign * row3[c]));
    }
    return d;
  };
  rep.upper_pattern_dev = fit(1.0);
  rep.lower_pattern_dev = fit(-1.0);
  rep.upper_pattern = rep.upper_pattern_dev <= rep.lower_pattern_dev;

  rep.max_residual = std::max({rep.row0_form, rep.row2_form, rep.orthogonality,
                               rep.twisted_orthogonality,
                               std::min(rep.upper_pattern_dev, rep.lower_pattern_dev)});
  rep.passed = rep.max_residual <= tol;
  return rep;
}

FormPreservation form_preservation(const Isometry& iso) {
  Mat4 q = Mat4::diagonal(-1.0, -1.0, 1.0, 1.0);
  Mat4 n = iso.matrix() * q * iso.matrix().transposed();
  double lambda = (-n[0][0] - n[1][1] + n[2][2] + n[3][3]) / 4.0;
  double dev = (n - q * lambda).max_abs();
  return FormPreservation{lambda, dev};
}

Plane invariant_plane(const HPoint& axis_point, double k) {
  Vec4 x = unit_interior(axis_point, "invariant_plane");
  // Covector of the plane x = k pushed forward by the translation carrying
  // the origin to the axis point.
  double u0 = -k * x[0] - x[1];
  double u1 = x[0] - k * x[1];
  double u2 = k * x[2] - x[3];
  double u3 = x[2] + k * x[3];
  double lead = std::max({std::abs(u1), std::abs(u2), std::abs(u3)});
  if (lead <= 1e-12 * std::abs(u0))
    fail(Errc::degenerate_plane, "invariant_plane: plane collapses to infinity");
  return Plane{u1, u2, u3, u0};
}

double plane_residual(const Plane& pl, const ModelPoint& m) {
  double n = std::sqrt(pl.a * pl.a + pl.b * pl.b + pl.c * pl.c + pl.d * pl.d);
  return (pl.a * m.x + pl.b * m.y + pl.c * m.z + pl.d) / n;
}

double plane_defect(const Plane& u, const Plane& v) {
  double nu = std::sqrt(u.a * u.a + u.b * u.b + u.c * u.c + u.d * u.d);
  double nv = std::sqrt(v.a * v.a + v.b * v.b + v.c * v.c + v.d * v.d);
  if (nu == 0.0 || nv == 0.0) fail(Errc::invalid_argument, "plane_defect: zero plane");
  double dot = (u.a * v.a + u.b * v.b + u.c * v.c + u.d * v.d) / (nu * nv);
  double clamped = std::min(1.0, std::abs(dot));
  return std::sqrt(std::max(0.0, 1.0 - clamped * clamped));
}

}  // namespace sl2r
