#include "sl2r/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sl2r/error.hpp"

namespace sl2r {

namespace {

struct TemplatePart {
  std::string material;
  std::vector<HPoint> verts;
  std::vector<std::array<std::uint32_t, 3>> faces;
};

std::vector<TemplatePart> template_parts(const Prism& prism, int res) {
  std::vector<TemplatePart> parts;
  int p = prism.spec.p;
  std::uint32_t ures = static_cast<std::uint32_t>(res);

  for (int k = 0; k < p; ++k) {
    TemplatePart part;
    part.material = "side_" + std::to_string(k + 1);
    part.verts = prism.sides[static_cast<std::size_t>(k)].samples;
    for (std::uint32_t i = 0; i + 1 < ures; ++i)
      for (std::uint32_t j = 0; j + 1 < ures; ++j) {
        std::uint32_t v00 = i * ures + j;
        std::uint32_t v01 = v00 + 1;
        std::uint32_t v10 = v00 + ures;
        std::uint32_t v11 = v10 + 1;
        part.faces.push_back({v00, v01, v11});
        part.faces.push_back({v00, v11, v10});
      }
    parts.push_back(std::move(part));
  }

  // Cover faces: boundary walk over the p base curves (dropping each curve's
  // last sample, which the next curve repeats) plus a centre fan point.
  std::vector<HPoint> boundary;
  for (int k = 0; k < p; ++k)
    for (int i = 0; i + 1 < res; ++i)
      boundary.push_back(
          from_inhomogeneous(prism.base.side_curves[static_cast<std::size_t>(k)]
                                                   [static_cast<std::size_t>(i)]));
  std::uint32_t nb = static_cast<std::uint32_t>(boundary.size());

  TemplatePart base;
  base.material = "base_figure";
  base.verts = boundary;
  base.verts.push_back(HPoint::origin());
  for (std::uint32_t b = 0; b < nb; ++b) base.faces.push_back({nb, b, (b + 1) % nb});
  parts.push_back(std::move(base));

  if (prism.cover_translation) {
    TemplatePart top;
    top.material = "cover_face";
    for (const HPoint& hp : boundary) top.verts.push_back(prism.cover_translation->apply(hp));
    top.verts.push_back(prism.cover_translation->apply(HPoint::origin()));
    for (std::uint32_t b = 0; b < nb; ++b) top.faces.push_back({nb, b, (b + 1) % nb});
    parts.push_back(std::move(top));
  }
  return parts;
}

}  // namespace

Mesh build_mesh(const PrismSpec& spec, const MeshOptions& opts) {
  Prism prism = build_prism(spec, opts.resolution, opts.phi_min, opts.phi_max);
  TilingPatch patch = tiling_patch(spec, opts.depth);
  std::vector<TemplatePart> parts = template_parts(prism, opts.resolution);

  Mesh mesh;
  mesh.tile_count = static_cast<std::uint32_t>(patch.tiles.size());
  for (std::size_t t = 0; t < patch.tiles.size(); ++t) {
    const TileWord& tile = patch.tiles[t];
    std::string object = "tile" + std::to_string(t) + "_" + tile.word;
    for (const TemplatePart& part : parts) {
      MeshPart mp;
      mp.object = object;
      mp.material = part.material;
      mp.first_vertex = static_cast<std::uint32_t>(mesh.vertices.size());
      mp.vertex_count = static_cast<std::uint32_t>(part.verts.size());
      mp.first_face = static_cast<std::uint32_t>(mesh.faces.size());
      mp.face_count = static_cast<std::uint32_t>(part.faces.size());
      for (const HPoint& hp : part.verts) {
        ModelPoint m = to_inhomogeneous(tile.transform.apply(hp));
        if (!std::isfinite(m.x) || !std::isfinite(m.y) || !std::isfinite(m.z))
          fail(Errc::invalid_argument, "build_mesh: non-finite vertex; shrink the fibre range");
        if (!(form_value(from_inhomogeneous(m)) < 0.0))
          fail(Errc::invalid_argument, "build_mesh: vertex left the model solid");
        mesh.vertices.push_back(m);
      }
      for (const auto& f : part.faces)
        mesh.faces.push_back({f[0] + mp.first_vertex, f[1] + mp.first_vertex,
                              f[2] + mp.first_vertex});
      mesh.parts.push_back(std::move(mp));
    }
  }
  return mesh;
}

void write_obj(const Mesh& mesh, std::ostream& os) {
  os << "# prism tiling patch\n";
  os << "# vertices " << mesh.vertices.size() << " faces " << mesh.faces.size() << " tiles "
     << mesh.tile_count << "\n";
  char buf[96];
  std::string current_object;
  for (const MeshPart& part : mesh.parts) {
    if (part.object != current_object) {
      os << "o " << part.object << "\n";
      current_object = part.object;
    }
    os << "usemtl " << part.material << "\n";
    for (std::uint32_t i = 0; i < part.vertex_count; ++i) {
      const ModelPoint& v = mesh.vertices[part.first_vertex + i];
      std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
      os << buf;
    }
    for (std::uint32_t i = 0; i < part.face_count; ++i) {
      const auto& f = mesh.faces[part.first_face + i];
      os << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
    }
  }
}

std::string obj_string(const Mesh& mesh) {
  std::ostringstream oss;
  write_obj(mesh, oss);
  return oss.str();
}

void write_obj_file(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "write_obj_file: cannot open " + path);
  write_obj(mesh, out);
  out.flush();
  if (!out) fail(Errc::io_error, "write_obj_file: write failed for " + path);
}

}  // namespace sl2r
