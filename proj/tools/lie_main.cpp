// Command-line front end. Links only the C API of the library.
#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "lietheory.h"

namespace {

struct AlgebraHandle {
  lt_algebra* ptr = nullptr;
  ~AlgebraHandle() { lt_algebra_destroy(ptr); }
};

struct RootSystemHandle {
  lt_root_system* ptr = nullptr;
  ~RootSystemHandle() { lt_root_system_destroy(ptr); }
};

struct WeylHandle {
  lt_weyl_group* ptr = nullptr;
  ~WeylHandle() { lt_weyl_destroy(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { lt_string_free(ptr); }
};

int report_failure(lt_status status) {
  std::fprintf(stderr, "error: %s\n", lt_last_error());
  return static_cast<int>(status);
}

int cmd_algebra(const std::string& spec, bool json) {
  AlgebraHandle algebra;
  if (lt_status s = lt_algebra_create(spec.c_str(), &algebra.ptr))
    return report_failure(s);

  if (json) {
    OwnedString text;
    if (lt_status s = lt_algebra_info_json(algebra.ptr, &text.ptr))
      return report_failure(s);
    std::printf("%s\n", text.ptr);
    return 0;
  }

  size_t dim = 0;
  int signature[3] = {0, 0, 0};
  int semisimple = 0;
  if (lt_status s = lt_algebra_dim(algebra.ptr, &dim)) return report_failure(s);
  if (lt_status s = lt_algebra_killing_signature(algebra.ptr, signature))
    return report_failure(s);
  if (lt_status s = lt_algebra_is_semisimple(algebra.ptr, &semisimple))
    return report_failure(s);
  int compact = 0;
  if (semisimple) {
    if (lt_status s = lt_algebra_is_compact_type(algebra.ptr, &compact))
      return report_failure(s);
  }

  std::printf("name: %s\n", spec.c_str());
  std::printf("dim: %zu\n", dim);
  std::printf("killing_signature: (%d, %d, %d)\n", signature[0], signature[1],
              signature[2]);
  std::printf("semisimple: %s\n", semisimple ? "true" : "false");
  std::printf("compact_type: %s\n", compact ? "true" : "false");
  if (semisimple && compact) {
    size_t rank = 0;
    if (lt_status s = lt_algebra_rank(algebra.ptr, &rank))
      return report_failure(s);
    std::printf("rank: %zu\n", rank);
  }
  return 0;
}

int open_root_system(const std::string& spec, uint64_t seed, double tol,
                     AlgebraHandle& algebra, RootSystemHandle& roots,
                     int* failed_status) {
  if (lt_status s = lt_algebra_create(spec.c_str(), &algebra.ptr)) {
    *failed_status = report_failure(s);
    return 1;
  }
  if (lt_status s = lt_root_system_create(algebra.ptr, seed, tol, &roots.ptr)) {
    *failed_status = report_failure(s);
    return 1;
  }
  return 0;
}

int cmd_roots(const std::string& spec, uint64_t seed, double tol, bool json) {
  AlgebraHandle algebra;
  RootSystemHandle roots;
  int failed = 0;
  if (open_root_system(spec, seed, tol, algebra, roots, &failed)) return failed;

  if (json) {
    OwnedString text;
    if (lt_status s = lt_root_system_json(roots.ptr, &text.ptr))
      return report_failure(s);
    std::printf("%s\n", text.ptr);
    return 0;
  }
  size_t rank = 0, count = 0, positive = 0, simple = 0;
  lt_root_system_rank(roots.ptr, &rank);
  lt_root_system_root_count(roots.ptr, &count);
  lt_root_system_positive_count(roots.ptr, &positive);
  lt_root_system_simple_count(roots.ptr, &simple);
  std::printf("rank: %zu\nroots: %zu\npositive: %zu\nsimple: %zu\n", rank,
              count, positive, simple);
  return 0;
}

int cmd_dynkin(const std::string& spec, uint64_t seed, double tol, bool ascii,
               bool json) {
  AlgebraHandle algebra;
  RootSystemHandle roots;
  int failed = 0;
  if (open_root_system(spec, seed, tol, algebra, roots, &failed)) return failed;

  if (json) {
    OwnedString text;
    if (lt_status s = lt_dynkin_json(roots.ptr, &text.ptr))
      return report_failure(s);
    std::printf("%s\n", text.ptr);
    if (!ascii) return 0;
  }
  OwnedString diagram;
  if (lt_status s = lt_dynkin_ascii(roots.ptr, &diagram.ptr))
    return report_failure(s);
  OwnedString labels;
  if (lt_status s = lt_dynkin_labels(roots.ptr, &labels.ptr))
    return report_failure(s);
  std::printf("%s\nlabels: %s\n", diagram.ptr, labels.ptr);
  return 0;
}

int cmd_weyl(const std::string& spec, uint64_t seed, double tol,
             bool order_only, bool json) {
  AlgebraHandle algebra;
  RootSystemHandle roots;
  int failed = 0;
  if (open_root_system(spec, seed, tol, algebra, roots, &failed)) return failed;

  WeylHandle weyl;
  if (lt_status s = lt_weyl_create(roots.ptr, &weyl.ptr))
    return report_failure(s);
  if (json && !order_only) {
    OwnedString text;
    if (lt_status s = lt_weyl_json(weyl.ptr, &text.ptr))
      return report_failure(s);
    std::printf("%s\n", text.ptr);
    return 0;
  }
  size_t order = 0;
  if (lt_status s = lt_weyl_order(weyl.ptr, &order)) return report_failure(s);
  std::printf("%zu\n", order);
  return 0;
}

int cmd_orbit(const std::string& spec, uint64_t seed, double tol,
              const std::vector<double>& z, const std::vector<double>& n,
              int samples) {
  AlgebraHandle algebra;
  RootSystemHandle roots;
  int failed = 0;
  if (open_root_system(spec, seed, tol, algebra, roots, &failed)) return failed;

  size_t rank = 0;
  lt_root_system_rank(roots.ptr, &rank);
  if (z.size() != rank || n.size() != rank) {
    std::fprintf(stderr, "error: --z and --n need %zu coordinates for %s\n",
                 rank, spec.c_str());
    return 2;
  }
  WeylHandle weyl;
  if (lt_status s = lt_weyl_create(roots.ptr, &weyl.ptr))
    return report_failure(s);
  OwnedString text;
  if (lt_status s = lt_orbit_report_json(roots.ptr, weyl.ptr, z.data(),
                                         n.data(), rank, samples, seed,
                                         &text.ptr))
    return report_failure(s);
  std::printf("%s\n", text.ptr);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie theory toolkit: root systems, Weyl groups, Dynkin "
               "diagrams and adjoint-orbit geometry of the classical "
               "compact groups"};
  app.require_subcommand(1);
  app.fallthrough();

  uint64_t seed = 1;
  double tol = 0.0;
  bool json = false;
  app.add_option("--seed", seed, "random seed for the pipeline")
      ->capture_default_str();
  app.add_option("--tol", tol, "weight clustering tolerance override");
  app.add_flag("--json", json, "emit JSON");

  std::string spec;
  auto add_spec = [&spec](CLI::App* cmd) {
    cmd->add_option("spec", spec, "group label, e.g. su3, so7, sp2, sl2_r")
        ->required();
  };

  CLI::App* algebra = app.add_subcommand("algebra", "algebra summary");
  add_spec(algebra);

  CLI::App* roots_cmd = app.add_subcommand("roots", "root system dump");
  add_spec(roots_cmd);

  CLI::App* dynkin = app.add_subcommand("dynkin", "Dynkin diagram");
  add_spec(dynkin);
  bool ascii = false;
  dynkin->add_flag("--ascii", ascii, "render the ASCII diagram");

  CLI::App* weyl = app.add_subcommand("weyl", "Weyl group");
  add_spec(weyl);
  bool order_only = false;
  weyl->add_flag("--order-only", order_only, "print only the group order");

  CLI::App* orbit = app.add_subcommand("orbit", "adjoint orbit report");
  add_spec(orbit);
  std::vector<double> z_coords, n_coords;
  int samples = 8;
  orbit->add_option("--z", z_coords, "base point in Cartan coordinates")
      ->required()
      ->expected(-1);
  orbit->add_option("--n", n_coords, "normal direction in Cartan coordinates")
      ->required()
      ->expected(-1);
  orbit->add_option("--samples", samples, "parallel-orbit sample count")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (algebra->parsed()) return cmd_algebra(spec, json);
  if (roots_cmd->parsed()) return cmd_roots(spec, seed, tol, json);
  if (dynkin->parsed()) return cmd_dynkin(spec, seed, tol, ascii, json);
  if (weyl->parsed()) return cmd_weyl(spec, seed, tol, order_only, json);
  if (orbit->parsed()) return cmd_orbit(spec, seed, tol, z_coords, n_coords, samples);
  return 2;
}
