#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sl2r/tiling.hpp"

namespace sl2r {

struct MeshPart {
  std::string object;    // one object per tile, named by its word
  std::string material;  // side-k / cover-face / base-figure label
  std::uint32_t first_vertex{};
  std::uint32_t vertex_count{};
  std::uint32_t first_face{};
  std::uint32_t face_count{};
};

struct Mesh {
  std::vector<ModelPoint> vertices;
  std::vector<std::array<std::uint32_t, 3>> faces;  // 0-based indices
  std::vector<MeshPart> parts;
  std::uint32_t tile_count{};
};

struct MeshOptions {
  int depth = 0;
  int resolution = 16;
  // Fibre-coordinate clip range for infinite prisms; bounded prisms use
  // [0, phi_tau] per stack level instead.
  double phi_min = -1.2;
  double phi_max = 1.2;
};

// Triangulated patch of the tiling: per tile, p side-surface grids plus the
// sampled cover faces (base figure only for infinite prisms, base and top
// for bounded ones).
Mesh build_mesh(const PrismSpec& spec, const MeshOptions& opts);

void write_obj(const Mesh& mesh, std::ostream& os);
std::string obj_string(const Mesh& mesh);
void write_obj_file(const Mesh& mesh, const std::string& path);

}  // namespace sl2r
