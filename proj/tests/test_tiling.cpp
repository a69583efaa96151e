#include <cmath>

#include <doctest.h>

#include "sl2r/error.hpp"
#include "sl2r/tiling.hpp"

using namespace sl2r;

namespace {

const double kX37 = 0.30074261874637870;

PrismSpec spec37() { return make_spec(3, 7); }

}  // namespace

TEST_CASE("vertex ring layout") {
  std::vector<HPoint> ring = vertex_ring(3, kX37);
  REQUIRE(ring.size() == 3);
  CHECK(ring[0][0] == 1.0);
  CHECK(ring[0][1] == 0.0);
  CHECK(ring[0][2] == 0.0);
  CHECK(ring[0][3] == kX37);
  CHECK(ring[1][2] == doctest::Approx(kX37 * std::sqrt(3.0) / 2.0).epsilon(1e-14));
  CHECK(ring[1][3] == doctest::Approx(-kX37 / 2.0).epsilon(1e-14));

  // Square bases put the second vertex on the +z axis image at angle pi/2.
  std::vector<HPoint> square = vertex_ring(4, 0.5);
  CHECK(square[1][2] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(square[1][3]) <= 1e-16);

  // Consecutive vertices are equidistant: the pairing of neighbours is the
  // same for every edge.
  std::vector<HPoint> ring5 = vertex_ring(5, 0.397975426784792);
  double reference = form_product(ring5[0].coords(), ring5[1].coords());
  for (std::size_t k = 1; k < 5; ++k) {
    double pairing = form_product(ring5[k].coords(), ring5[(k + 1) % 5].coords());
    CHECK(pairing == doctest::Approx(reference).epsilon(1e-13));
  }

  CHECK_THROWS_AS(vertex_ring(2, 0.5), Error);
  CHECK_THROWS_AS(vertex_ring(3, 0.0), Error);
  CHECK_THROWS_AS(vertex_ring(3, 1.0), Error);
}

TEST_CASE("ring rotation permutes the vertices") {
  for (int p : {3, 4, 5, 8}) {
    CAPTURE(p);
    std::vector<HPoint> ring = vertex_ring(p, 0.4);
    Isometry rho = ring_rotation(p);
    for (int k = 0; k < p; ++k)
      CHECK(projectively_equal(rho.apply(ring[static_cast<std::size_t>(k)]),
                               ring[static_cast<std::size_t>((k + 1) % p)], 1e-13));
    // p-fold turn closes.
    Isometry acc = Isometry::identity();
    for (int k = 0; k < p; ++k) acc = compose(acc, rho);
    CHECK(isometry_equal(acc, Isometry::identity(), 1e-13));
  }
}

TEST_CASE("side rotations generate the vertex stabilizers") {
  for (auto [p, q] : {std::pair{3, 7}, {4, 6}, {5, 4}}) {
    CAPTURE(p);
    CAPTURE(q);
    PrismSpec spec = make_spec(p, q);
    std::vector<HPoint> ring = vertex_ring(p, spec.x3);
    for (int k = 1; k <= p; ++k) {
      Isometry r = side_rotation(spec, k);
      const HPoint& axis = ring[static_cast<std::size_t>(k - 1)];
      CHECK(projectively_equal(r.apply(axis), axis, 1e-11));
      HPoint lifted = fibre_translation(0.25).apply(axis);
      CHECK(projectively_equal(r.apply(lifted), lifted, 1e-11));

      ConstraintReport rep = validate_isometry(r);
      CHECK(rep.passed);
      CHECK(rep.max_residual <= 1e-12);

      Isometry acc = Isometry::identity();
      for (int j = 0; j < q; ++j) acc = compose(acc, r);
      CHECK(isometry_equal(acc, Isometry::identity(), 1e-10));
    }
  }
  CHECK_THROWS_AS(side_rotation(spec37(), 0), Error);
  CHECK_THROWS_AS(side_rotation(spec37(), 4), Error);
}

TEST_CASE("side anchors of the triangle tiling with q = 7") {
  PrismSpec spec = spec37();
  SideAnchors anchors = side_anchors(spec);

  HPoint rotated = anchors.rotated_vertex.canonical();
  CHECK(std::abs(rotated[1] - 0.15072575) <= 1e-6);
  CHECK(std::abs(rotated[2] - 0.23778592) <= 1e-6);
  CHECK(std::abs(rotated[3] - -0.18962794) <= 1e-6);

  HPoint mid = anchors.fibre_midpoint.canonical();
  CHECK(std::abs(mid[1] - 0.07493964) <= 1e-6);
  CHECK(std::abs(mid[2] - 0.24918198) <= 1e-6);
  CHECK(std::abs(mid[3] - -0.16988939) <= 1e-6);

  CHECK(anchors.fibre_height == doctest::Approx(0.14959965017094259).epsilon(1e-12));

  // Both anchors sit on the fibre through the second vertex.
  std::vector<HPoint> ring = vertex_ring(spec.p, spec.x3);
  CHECK(projectively_equal(trace_point(anchors.rotated_vertex), ring[1], 1e-11));
  CHECK(projectively_equal(trace_point(anchors.fibre_midpoint), ring[1], 1e-11));
  CHECK(fibre_coordinate(anchors.fibre_midpoint) ==
        doctest::Approx(anchors.fibre_height / 2.0).epsilon(1e-13));
}

TEST_CASE("fibre height equals the angular defect of the base polygon") {
  // The last three pairs climb at least pi/2, past the principal branch of
  // the fibre coordinate.
  for (auto [p, q] :
       {std::pair{3, 7}, {3, 8}, {4, 6}, {5, 4}, {8, 3}, {8, 8}, {6, 20}, {10, 10}}) {
    CAPTURE(p);
    CAPTURE(q);
    PrismSpec spec = make_spec(p, q);
    double defect = M_PI - 2.0 * M_PI / p - 2.0 * M_PI / q;
    CHECK(side_anchors(spec).fibre_height == doctest::Approx(defect).epsilon(1e-11));
  }
}

TEST_CASE("tall prism anchors stay consistent above the pi/2 height") {
  for (auto [p, q] : {std::pair{6, 20}, {10, 10}}) {
    CAPTURE(p);
    CAPTURE(q);
    PrismSpec spec = make_spec(p, q);
    SideAnchors anchors = side_anchors(spec);
    REQUIRE(anchors.fibre_height > M_PI / 2.0);
    CHECK(fibre_coordinate(anchors.fibre_midpoint) ==
          doctest::Approx(anchors.fibre_height / 2.0).epsilon(1e-12));
    CHECK(cover_plane_k(spec) ==
          doctest::Approx(std::tan(anchors.fibre_height / 2.0)).epsilon(1e-10));
    CHECK(std::abs(plane_residual(cover_plane(spec), to_inhomogeneous(anchors.fibre_midpoint))) <=
          1e-11);
  }
  // Height exactly pi/2: the cover plane slope tan(height / 2) is 1.
  CHECK(cover_plane_k(make_spec(8, 8)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(side_anchors(make_spec(8, 8)).fibre_height == doctest::Approx(M_PI / 2.0).epsilon(1e-10));
}

TEST_CASE("base side curve runs between consecutive vertex traces") {
  PrismSpec spec = spec37();
  std::vector<HPoint> ring = vertex_ring(spec.p, spec.x3);
  for (int k = 1; k <= spec.p; ++k) {
    std::vector<ModelPoint> curve = base_side_curve(spec, k, 9);
    REQUIRE(curve.size() == 9);
    ModelPoint a = to_inhomogeneous(ring[static_cast<std::size_t>(k - 1)]);
    ModelPoint b = to_inhomogeneous(ring[static_cast<std::size_t>(k % spec.p)]);
    CHECK(std::abs(curve.front().y - a.y) <= 1e-12);
    CHECK(std::abs(curve.front().z - a.z) <= 1e-12);
    CHECK(std::abs(curve.back().y - b.y) <= 1e-11);
    CHECK(std::abs(curve.back().z - b.z) <= 1e-11);
    for (const ModelPoint& m : curve) {
      CHECK(m.x == 0.0);  // traces lie on the base plane
      CHECK(m.y * m.y + m.z * m.z < 1.0);
    }
  }
  CHECK_THROWS_AS(base_side_curve(spec, 1, 1), Error);
}

TEST_CASE("side surface is ruled by fibres over the base curve") {
  PrismSpec spec = spec37();
  SideSurface surf = side_surface(spec, 1, 6, 0.0, 0.4);
  REQUIRE(surf.rows == 6);
  REQUIRE(surf.cols == 6);
  std::vector<ModelPoint> curve = base_side_curve(spec, 1, 6);
  for (int i = 0; i < 6; ++i) {
    // phi = 0 column reproduces the base curve.
    ModelPoint m = to_inhomogeneous(surf.at(i, 0));
    CHECK(std::abs(m.x - curve[static_cast<std::size_t>(i)].x) <= 1e-13);
    CHECK(std::abs(m.y - curve[static_cast<std::size_t>(i)].y) <= 1e-13);
    CHECK(std::abs(m.z - curve[static_cast<std::size_t>(i)].z) <= 1e-13);
    for (int j = 0; j < 6; ++j) {
      // All samples of a row share the base point.
      HPoint t = trace_point(surf.at(i, j));
      CHECK(std::abs(to_inhomogeneous(t).y - curve[static_cast<std::size_t>(i)].y) <= 1e-12);
      CHECK(std::abs(to_inhomogeneous(t).z - curve[static_cast<std::size_t>(i)].z) <= 1e-12);
      // And sit on the surface by the line-distance criterion.
      SurfaceFit fit = side_surface_fit(spec, 1, surf.at(i, j));
      CHECK(fit.line_distance <= 1e-12);
      CHECK(fit.segment_param >= -1e-9);
      CHECK(fit.segment_param <= 1.0 + 1e-9);
    }
  }
  // A point on a different fibre is far from the surface.
  SurfaceFit off = side_surface_fit(spec, 1, HPoint::origin());
  CHECK(off.line_distance > 0.01);

  CHECK_THROWS_AS(side_surface(spec, 1, 1, 0.0, 0.4), Error);
  CHECK_THROWS_AS(side_surface(spec, 1, 6, 0.4, 0.4), Error);
}

TEST_CASE("ring rotation carries side surface k to side surface k + 1") {
  PrismSpec spec = make_spec(4, 6);
  Isometry rho = ring_rotation(spec.p);
  for (int k = 1; k <= spec.p; ++k) {
    SideSurface a = side_surface(spec, k, 5, -0.3, 0.3);
    SideSurface b = side_surface(spec, k % spec.p + 1, 5, -0.3, 0.3);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        CHECK(projectively_equal(rho.apply(a.at(i, j)), b.at(i, j), 1e-11));
  }
}

TEST_CASE("neighbour prisms share whole side surfaces") {
  for (auto [p, q] : {std::pair{3, 7}, {3, 8}, {4, 6}, {5, 4}, {6, 20}}) {
    CAPTURE(p);
    CAPTURE(q);
    PrismSpec spec = make_spec(p, q);
    for (int k = 1; k <= p; ++k) {
      ClosureReport rep = side_closure(spec, k, 7);
      CHECK(rep.max_line_distance <= 1e-10);
      CHECK(rep.min_param >= -1e-9);
      CHECK(rep.max_param <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("cover plane carries the whole rotation orbit") {
  PrismSpec spec = spec37();
  double k = cover_plane_k(spec);
  CHECK(k == doctest::Approx(0.07493964001908698).epsilon(1e-12));
  CHECK(k == doctest::Approx(std::tan(side_anchors(spec).fibre_height / 2.0)).epsilon(1e-12));

  Plane plane = cover_plane(spec);
  std::vector<HPoint> ring = vertex_ring(spec.p, spec.x3);
  HPoint x = ring[0];
  Isometry r2 = side_rotation(spec, 2);
  for (int j = 0; j < spec.q; ++j) {
    CHECK(std::abs(plane_residual(plane, to_inhomogeneous(x))) <= 1e-12);
    x = r2.apply(x);
  }
  CHECK(std::abs(plane_residual(plane, to_inhomogeneous(side_anchors(spec).fibre_midpoint))) <=
        1e-12);

  // The orbit plane is far from the base plane.
  CHECK(plane_defect(plane, Plane{1, 0, 0, 0}) >= 1e-2);
}

TEST_CASE("adjacency verdict") {
  for (auto [p, q] : {std::pair{3, 7}, {4, 6}}) {
    CAPTURE(p);
    CAPTURE(q);
    FaceToFaceReport rep = face_to_face_check(make_spec(p, q, 0.3));
    CHECK(rep.verdict == Adjacency::non_face_to_face);
    CHECK(rep.defect >= 1e-2);
    CHECK(rep.orbit_residual <= 1e-10);
    CHECK(rep.base_plane.a == 1.0);
    CHECK(rep.base_plane.d == 0.0);
  }
  CHECK_THROWS_AS(face_to_face_check(spec37()), Error);
}

TEST_CASE("prism assembly") {
  PrismSpec inf = spec37();
  Prism prism = build_prism(inf, 4, -0.5, 0.5);
  CHECK(prism.base.vertices.size() == 3);
  CHECK(prism.base.side_curves.size() == 3);
  CHECK(prism.sides.size() == 3);
  CHECK_FALSE(prism.cover_translation.has_value());
  CHECK(prism.top_vertices.empty());
  CHECK(prism.sides[0].rows == 4);

  PrismSpec bounded = make_spec(3, 7, 0.4);
  Prism stack = build_prism(bounded, 4, -9.0, 9.0);  // range is ignored when bounded
  REQUIRE(stack.cover_translation.has_value());
  REQUIRE(stack.top_vertices.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(fibre_coordinate(stack.top_vertices[k]) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(to_inhomogeneous(stack.top_vertices[k]).x ==
          doctest::Approx(std::tan(0.4)).epsilon(1e-12));
    CHECK(projectively_equal(trace_point(stack.top_vertices[k]), prism.base.vertices[k], 1e-12));
  }

  CHECK_THROWS_AS(build_prism(inf, 1, -0.5, 0.5), Error);
  CHECK_THROWS_AS(build_prism(inf, 4, 0.5, 0.5), Error);
  CHECK_THROWS_AS(build_prism(inf, 4, -2.0, 2.0), Error);
}

TEST_CASE("tiling patch enumeration") {
  PrismSpec inf = spec37();
  TilingPatch root = tiling_patch(inf, 0);
  REQUIRE(root.tiles.size() == 1);
  CHECK(root.tiles[0].word == "e");
  CHECK(isometry_equal(root.tiles[0].transform, Isometry::identity(), 1e-15));

  TilingPatch one = tiling_patch(inf, 1);
  CHECK(one.tiles.size() == 4);  // identity and one neighbour per side
  CHECK(one.tiles[1].word == "r1");
  CHECK(one.tiles[2].word == "r2");
  CHECK(one.tiles[3].word == "r3");

  PrismSpec bounded = make_spec(3, 7, 0.4);
  TilingPatch stack = tiling_patch(bounded, 1);
  CHECK(stack.tiles.size() == 6);  // three sides plus the two cover neighbours

  TilingPatch two = tiling_patch(inf, 2);
  CHECK(two.tiles.size() > one.tiles.size());
  // Words are unique and the transforms are pairwise distinct isometries.
  for (std::size_t i = 0; i < two.tiles.size(); ++i)
    for (std::size_t j = i + 1; j < two.tiles.size(); ++j) {
      CHECK(two.tiles[i].word != two.tiles[j].word);
      CHECK_FALSE(isometry_equal(two.tiles[i].transform, two.tiles[j].transform, 1e-8));
    }
  for (const TileWord& tw : two.tiles) CHECK(validate_isometry(tw.transform).passed);

  // Deterministic enumeration.
  TilingPatch again = tiling_patch(inf, 2);
  REQUIRE(again.tiles.size() == two.tiles.size());
  for (std::size_t i = 0; i < two.tiles.size(); ++i) {
    CHECK(again.tiles[i].word == two.tiles[i].word);
    CHECK((again.tiles[i].transform.matrix() - two.tiles[i].transform.matrix()).max_abs() ==
          0.0);
  }

  CHECK_THROWS_AS(tiling_patch(inf, -1), Error);
}
