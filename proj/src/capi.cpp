#include "lietheory.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "lie/algebra.hpp"
#include "lie/cartan.hpp"
#include "lie/dynkin.hpp"
#include "lie/error.hpp"
#include "lie/geometry.hpp"
#include "lie/json_io.hpp"
#include "lie/weyl.hpp"

struct lt_algebra {
  lie::LieAlgebra value;
};

struct lt_root_system {
  lie::RootSystem value;
};

struct lt_weyl_group {
  lie::WeylGroup value;
};

namespace {

thread_local std::string g_last_error = "no error";

lt_status status_of(const lie::Error& e) {
  switch (e.code()) {
    case lie::ErrorCode::argument: return LT_ERROR_ARGUMENT;
    case lie::ErrorCode::unsupported: return LT_ERROR_UNSUPPORTED;
    case lie::ErrorCode::bad_input: return LT_ERROR_BAD_INPUT;
    case lie::ErrorCode::numeric: return LT_ERROR_NUMERIC;
  }
  return LT_ERROR_NUMERIC;
}

template <typename F>
lt_status guarded(F&& f) {
  try {
    f();
    return LT_OK;
  } catch (const lie::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LT_ERROR_NUMERIC;
  } catch (...) {
    g_last_error = "unknown failure";
    return LT_ERROR_NUMERIC;
  }
}

lt_status require(bool ok, const char* message) {
  if (ok) return LT_OK;
  g_last_error = message;
  return LT_ERROR_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* lt_last_error(void) { return g_last_error.c_str(); }

void lt_string_free(char* s) { std::free(s); }

lt_status lt_algebra_create(const char* spec, lt_algebra** out) {
  if (lt_status s = require(spec && out, "null argument")) return s;
  return guarded([&] {
    lie::GroupSpec parsed = lie::GroupSpec::parse(spec);
    *out = new lt_algebra{lie::LieAlgebra::classical(parsed)};
  });
}

void lt_algebra_destroy(lt_algebra* a) { delete a; }

lt_status lt_algebra_dim(const lt_algebra* a, size_t* out) {
  if (lt_status s = require(a && out, "null argument")) return s;
  return guarded([&] { *out = a->value.dim(); });
}

lt_status lt_algebra_ambient_size(const lt_algebra* a, size_t* out) {
  if (lt_status s = require(a && out, "null argument")) return s;
  return guarded([&] { *out = a->value.ambient_size(); });
}

lt_status lt_algebra_is_semisimple(const lt_algebra* a, int* out) {
  if (lt_status s = require(a && out, "null argument")) return s;
  return guarded([&] { *out = a->value.is_semisimple() ? 1 : 0; });
}

lt_status lt_algebra_is_compact_type(const lt_algebra* a, int* out) {
  if (lt_status s = require(a && out, "null argument")) return s;
  return guarded([&] { *out = a->value.is_compact_type() ? 1 : 0; });
}

lt_status lt_algebra_killing_signature(const lt_algebra* a, int out[3]) {
  if (lt_status s = require(a && out, "null argument")) return s;
  return guarded([&] {
    lie::BilinearForm f = a->value.killing_form();
    out[0] = f.n_pos;
    out[1] = f.n_zero;
    out[2] = f.n_neg;
  });
}

lt_status lt_algebra_center_dim(const lt_algebra* a, size_t* out) {
  if (lt_status s = require(a && out, "null argument")) return s;
  return guarded([&] { *out = a->value.center().size(); });
}

lt_status lt_algebra_rank(const lt_algebra* a, size_t* out) {
  if (lt_status s = require(a && out, "null argument")) return s;
  return guarded([&] {
    *out = lie::CartanSubalgebra::standard(a->value).rank();
  });
}

lt_status lt_algebra_info_json(const lt_algebra* a, char** out) {
  if (lt_status s = require(a && out, "null argument")) return s;
  return guarded([&] { *out = copy_string(lie::dump(lie::algebra_info_json(a->value))); });
}

lt_status lt_root_system_create(const lt_algebra* a, uint64_t seed, double tol,
                                lt_root_system** out) {
  if (lt_status s = require(a && out, "null argument")) return s;
  return guarded([&] {
    double cluster = tol > 0.0 ? tol : 1e-7;
    *out = new lt_root_system{
        lie::standard_root_system(a->value, seed, cluster)};
  });
}

void lt_root_system_destroy(lt_root_system* rs) { delete rs; }

lt_status lt_root_system_rank(const lt_root_system* rs, size_t* out) {
  if (lt_status s = require(rs && out, "null argument")) return s;
  return guarded([&] { *out = rs->value.rank(); });
}

lt_status lt_root_system_root_count(const lt_root_system* rs, size_t* out) {
  if (lt_status s = require(rs && out, "null argument")) return s;
  return guarded([&] { *out = rs->value.roots.size(); });
}

lt_status lt_root_system_positive_count(const lt_root_system* rs, size_t* out) {
  if (lt_status s = require(rs && out, "null argument")) return s;
  return guarded([&] { *out = rs->value.positive.size(); });
}

lt_status lt_root_system_simple_count(const lt_root_system* rs, size_t* out) {
  if (lt_status s = require(rs && out, "null argument")) return s;
  return guarded([&] { *out = rs->value.simple.size(); });
}

lt_status lt_root_system_json(const lt_root_system* rs, char** out) {
  if (lt_status s = require(rs && out, "null argument")) return s;
  return guarded([&] { *out = copy_string(lie::dump(lie::root_system_json(rs->value))); });
}

lt_status lt_dynkin_json(const lt_root_system* rs, char** out) {
  if (lt_status s = require(rs && out, "null argument")) return s;
  return guarded([&] {
    lie::DynkinDiagram dg = lie::dynkin_diagram(rs->value);
    *out = copy_string(lie::dump(lie::dynkin_json(dg)));
  });
}

lt_status lt_dynkin_ascii(const lt_root_system* rs, char** out) {
  if (lt_status s = require(rs && out, "null argument")) return s;
  return guarded([&] {
    lie::DynkinDiagram dg = lie::dynkin_diagram(rs->value);
    *out = copy_string(lie::render_ascii(dg));
  });
}

lt_status lt_dynkin_labels(const lt_root_system* rs, char** out) {
  if (lt_status s = require(rs && out, "null argument")) return s;
  return guarded([&] {
    lie::DynkinDiagram dg = lie::dynkin_diagram(rs->value);
    std::string labels;
    for (std::size_t c = 0; c < dg.components.size(); ++c) {
      if (c) labels += ",";
      labels += dg.components[c].label;
    }
    *out = copy_string(labels);
  });
}

lt_status lt_weyl_create(const lt_root_system* rs, lt_weyl_group** out) {
  if (lt_status s = require(rs && out, "null argument")) return s;
  return guarded([&] { *out = new lt_weyl_group{lie::generate(rs->value)}; });
}

void lt_weyl_destroy(lt_weyl_group* w) { delete w; }

lt_status lt_weyl_order(const lt_weyl_group* w, size_t* out) {
  if (lt_status s = require(w && out, "null argument")) return s;
  return guarded([&] { *out = w->value.order(); });
}

lt_status lt_weyl_json(const lt_weyl_group* w, char** out) {
  if (lt_status s = require(w && out, "null argument")) return s;
  return guarded([&] { *out = copy_string(lie::dump(lie::weyl_json(w->value))); });
}

lt_status lt_orbit_report_json(const lt_root_system* rs, const lt_weyl_group* w,
                               const double* z, const double* n, size_t rank,
                               int samples, uint64_t seed, char** out) {
  if (lt_status s = require(rs && w && z && n && out, "null argument")) return s;
  if (lt_status s = require(rank == rs->value.rank(),
                            "coordinate arrays must have rank entries"))
    return s;
  if (lt_status s = require(samples >= 0, "samples must be nonnegative")) return s;
  return guarded([&] {
    std::vector<double> zv(z, z + rank), nv(n, n + rank);
    lie::BiInvariantMetric metric =
        lie::BiInvariantMetric::trace_form(rs->value.cartan.algebra());
    lie::OrbitShape shape = lie::orbit_shape_operator(rs->value, metric, zv, nv);
    lie::ParallelOrbitReport report =
        lie::parallel_orbit_check(rs->value, w->value, zv, nv, samples, seed);
    *out = copy_string(
        lie::dump(lie::orbit_report_json(rs->value, shape, report)));
  });
}

}  // extern "C"
