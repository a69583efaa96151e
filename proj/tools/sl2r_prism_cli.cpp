// Command-line front end for the sl2rprism shared library.  Only the C API
// from sl2r_prism.h is used here; everything numeric happens in the library.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2r_prism.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInadmissible = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerify = 4;

int exit_code_of(slr_status status) {
  switch (status) {
    case SLR_OK: return kExitOk;
    case SLR_INVALID_ARGUMENT: return kExitUsage;
    case SLR_INADMISSIBLE: return kExitInadmissible;
    case SLR_IO_ERROR: return kExitIo;
    case SLR_VERIFY_FAILED: return kExitVerify;
    default: return kExitIo;
  }
}

int report_failure(slr_status status) {
  std::cerr << "error: " << slr_last_error() << "\n";
  return exit_code_of(status);
}

std::string admissibility_hint(int p) {
  char buf[96];
  if (p > 2)
    std::snprintf(buf, sizeof buf, "q must exceed %g for p = %d", 2.0 * p / (p - 2), p);
  else
    std::snprintf(buf, sizeof buf, "p must be at least 3");
  return std::string(buf);
}

int cmd_solve(int p, int q, double tol) {
  double x3 = 0.0, residual = 0.0;
  slr_status status = slr_solve_x3(p, q, tol, &x3, &residual);
  if (status == SLR_INADMISSIBLE) {
    std::cerr << "error: inadmissible (p, q): " << admissibility_hint(p) << "\n";
    return kExitInadmissible;
  }
  if (status != SLR_OK) return report_failure(status);
  std::printf("x3 = %.8f\n", x3);
  std::printf("residual = %.3e\n", residual);
  return kExitOk;
}

int cmd_table(int p, const std::vector<int>& qs, const std::string& json_path) {
  nlohmann::json rows = nlohmann::json::array();
  int successes = 0;
  std::printf("%4s %6s %12s %12s\n", "p", "q", "x3", "residual");
  for (int q : qs) {
    double x3 = 0.0, residual = 0.0;
    slr_status status = slr_solve_x3(p, q, 0.0, &x3, &residual);
    if (status == SLR_OK) {
      ++successes;
      std::printf("%4d %6d %12.8f %12.3e\n", p, q, x3, residual);
      rows.push_back({{"p", p}, {"q", q}, {"x3", x3}, {"residual", residual},
                      {"status", "ok"}});
    } else {
      const char* label = status == SLR_INADMISSIBLE ? "inadmissible" : "error";
      std::printf("%4d %6d %12s %12s\n", p, q, label, "-");
      rows.push_back({{"p", p}, {"q", q}, {"status", label}});
    }
  }
  if (!json_path.empty()) {
    nlohmann::json doc{{"p", p}, {"rows", rows}};
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << json_path << "\n";
      return kExitIo;
    }
    out << doc.dump(2) << "\n";
    if (!out.flush()) {
      std::cerr << "error: write failed for " << json_path << "\n";
      return kExitIo;
    }
  }
  if (successes == 0) {
    std::cerr << "error: no admissible q in the list; " << admissibility_hint(p) << "\n";
    return kExitInadmissible;
  }
  return kExitOk;
}

std::string sidecar_path(const std::string& obj_path) {
  std::string::size_type dot = obj_path.find_last_of('.');
  std::string::size_type slash = obj_path.find_last_of("/\\");
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
    return obj_path.substr(0, dot) + ".json";
  return obj_path + ".json";
}

int cmd_mesh(int p, int q, double phi_tau, int depth, int resolution, double phi_range,
             const std::string& out_path) {
  slr_prism* prism = nullptr;
  slr_status status = slr_prism_create(p, q, phi_tau, &prism);
  if (status == SLR_INADMISSIBLE) {
    std::cerr << "error: inadmissible (p, q): " << admissibility_hint(p) << "\n";
    return kExitInadmissible;
  }
  if (status != SLR_OK) return report_failure(status);

  slr_mesh_options opts;
  slr_mesh_options_default(&opts);
  opts.depth = depth;
  opts.resolution = resolution;
  opts.phi_min = -phi_range;
  opts.phi_max = phi_range;

  slr_mesh* mesh = nullptr;
  status = slr_mesh_build(prism, &opts, &mesh);
  if (status != SLR_OK) {
    slr_prism_destroy(prism);
    return report_failure(status);
  }

  int rc = kExitOk;
  size_t vertices = 0, faces = 0, tiles = 0;
  slr_mesh_counts(mesh, &vertices, &faces, &tiles);
  status = slr_mesh_write_obj(mesh, out_path.c_str());
  if (status != SLR_OK) {
    rc = report_failure(status);
  } else {
    std::printf("wrote %s (%zu vertices, %zu faces, %zu tiles)\n", out_path.c_str(),
                vertices, faces, tiles);
    char* report = nullptr;
    status = slr_prism_report_json(prism, &report);
    if (status != SLR_OK) {
      rc = report_failure(status);
    } else {
      std::string path = sidecar_path(out_path);
      std::ofstream out(path, std::ios::binary);
      if (out) out << report;
      if (!out || !out.flush()) {
        std::cerr << "error: cannot write " << path << "\n";
        rc = kExitIo;
      } else {
        std::printf("wrote %s\n", path.c_str());
      }
      slr_string_free(report);
    }
  }
  slr_mesh_destroy(mesh);
  slr_prism_destroy(prism);
  return rc;
}

int cmd_verify(const std::string& level, double tol_scale) {
  char* report = nullptr;
  int all_passed = 0;
  slr_status status = slr_verify(level.c_str(), tol_scale, &report, &all_passed);
  if (report) {
    std::fputs(report, stdout);
    slr_string_free(report);
  }
  if (status == SLR_OK && all_passed) return kExitOk;
  if (status == SLR_VERIFY_FAILED) return kExitVerify;
  return report_failure(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular prism tilings of the twisted hyperbolic-plane line bundle"};
  app.require_subcommand(1);

  int p = 3, q = 7, depth = 0, resolution = 16;
  double tol = 0.0, phi_tau = 0.0, phi_range = 1.2, tol_scale = 1.0;
  std::vector<int> qs;
  std::string json_path, out_path, level = "quick";

  CLI::App* solve = app.add_subcommand("solve", "Solve the vertex parameter x3 for (p, q)");
  solve->add_option("-p", p, "Base polygon sides (>= 3)")->required();
  solve->add_option("-q", q, "Side rotation order")->required();
  solve->add_option("--tol", tol, "Residual tolerance (default 1e-12)");

  CLI::App* table = app.add_subcommand("table", "Tabulate x3 over a list of q values");
  table->add_option("-p", p, "Base polygon sides (>= 3)")->required();
  table->add_option("-q", qs, "q values")->required()->expected(-1);
  table->add_option("--json", json_path, "Also write the table as JSON");

  CLI::App* mesh = app.add_subcommand("mesh", "Export a tiling patch as OBJ + JSON report");
  mesh->add_option("-p", p, "Base polygon sides (>= 3)")->required();
  mesh->add_option("-q", q, "Side rotation order")->required();
  mesh->add_option("--phi-tau", phi_tau, "Bounded-prism thickness (0 = infinite prism)");
  mesh->add_option("--depth", depth, "Tiling word depth (default 0)");
  mesh->add_option("--resolution", resolution, "Samples per surface direction (default 16)");
  mesh->add_option("--phi-range", phi_range,
                   "Fibre clip half-range for infinite prisms (default 1.2)");
  mesh->add_option("--out", out_path, "Output OBJ path")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the built-in verification suites");
  verify->add_option("--level", level, "quick or full (default quick)");
  verify->add_option("--tol-scale", tol_scale,
                     "Scale factor on suite tolerances (testing hook)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (solve->parsed()) return cmd_solve(p, q, tol);
  if (table->parsed()) return cmd_table(p, qs, json_path);
  if (mesh->parsed()) return cmd_mesh(p, q, phi_tau, depth, resolution, phi_range, out_path);
  if (verify->parsed()) return cmd_verify(level, tol_scale);
  return kExitUsage;
}
