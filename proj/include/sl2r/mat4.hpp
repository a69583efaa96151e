#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace sl2r {

struct Vec4 {
  std::array<double, 4> v{};

  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }

  Vec4 operator*(double s) const { return {{v[0] * s, v[1] * s, v[2] * s, v[3] * s}}; }
  Vec4 operator+(const Vec4& o) const {
    return {{v[0] + o[0], v[1] + o[1], v[2] + o[2], v[3] + o[3]}};
  }
  Vec4 operator-(const Vec4& o) const {
    return {{v[0] - o[0], v[1] - o[1], v[2] - o[2], v[3] - o[3]}};
  }

  double dot(const Vec4& o) const { return v[0] * o[0] + v[1] * o[1] + v[2] * o[2] + v[3] * o[3]; }
  double norm() const { return std::sqrt(dot(*this)); }
};

// Row-major 4x4 matrix. Vectors are rows and act from the left: y = x * M.
struct Mat4 {
  std::array<Vec4, 4> m{};

  Vec4& operator[](std::size_t r) { return m[r]; }
  const Vec4& operator[](std::size_t r) const { return m[r]; }

  double& at(std::size_t r, std::size_t c) { return m[r][c]; }
  double at(std::size_t r, std::size_t c) const { return m[r][c]; }

  static Mat4 identity() {
    Mat4 e;
    for (std::size_t i = 0; i < 4; ++i) e.m[i][i] = 1.0;
    return e;
  }

  static Mat4 diagonal(double d0, double d1, double d2, double d3) {
    Mat4 d;
    d.m[0][0] = d0;
    d.m[1][1] = d1;
    d.m[2][2] = d2;
    d.m[3][3] = d3;
    return d;
  }

  Mat4 transposed() const {
    Mat4 t;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) t.m[c][r] = m[r][c];
    return t;
  }

  Mat4 operator*(const Mat4& o) const {
    Mat4 p;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        double s = 0.0;
        for (std::size_t k = 0; k < 4; ++k) s += m[r][k] * o.m[k][c];
        p.m[r][c] = s;
      }
    return p;
  }

  Mat4 operator*(double s) const {
    Mat4 p = *this;
    for (auto& row : p.m)
      for (std::size_t c = 0; c < 4; ++c) row[c] *= s;
    return p;
  }

  Mat4 operator-(const Mat4& o) const {
    Mat4 p;
    for (std::size_t r = 0; r < 4; ++r) p.m[r] = m[r] - o.m[r];
    return p;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& row : m) s += row.dot(row);
    return std::sqrt(s);
  }

  double max_abs() const {
    double s = 0.0;
    for (const auto& row : m)
      for (std::size_t c = 0; c < 4; ++c) s = std::max(s, std::abs(row[c]));
    return s;
  }
};

inline Vec4 operator*(const Vec4& x, const Mat4& a) {
  Vec4 y;
  for (std::size_t c = 0; c < 4; ++c)
    y[c] = x[0] * a.at(0, c) + x[1] * a.at(1, c) + x[2] * a.at(2, c) + x[3] * a.at(3, c);
  return y;
}

}  // namespace sl2r
