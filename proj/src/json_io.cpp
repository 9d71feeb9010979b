#include "lie/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace lie {

double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

namespace {

ordered_json vec_json(const std::vector<double>& v) {
  ordered_json out = ordered_json::array();
  for (double x : v) out.push_back(round12(x));
  return out;
}

ordered_json matrix_json(const RealMatrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(round12(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

ordered_json algebra_json(const LieAlgebra& L) {
  ordered_json j;
  j["name"] = L.name();
  j["ambient_size"] = L.ambient_size();
  j["dim"] = L.dim();
  ordered_json basis = ordered_json::array();
  for (const ComplexMatrix& x : L.basis()) {
    ordered_json entries = ordered_json::array();
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c)
        entries.push_back(
            ordered_json::array({round12(x(r, c).real()), round12(x(r, c).imag())}));
    basis.push_back(std::move(entries));
  }
  j["basis"] = std::move(basis);
  ordered_json triplets = ordered_json::array();
  const std::size_t d = L.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t jj = i + 1; jj < d; ++jj)
      for (std::size_t k = 0; k < d; ++k) {
        double c = L.structure_constant(i, jj, k);
        if (std::abs(c) > 1e-12)
          triplets.push_back(ordered_json::array({i, jj, k, round12(c)}));
      }
  j["structure_constants"] = std::move(triplets);
  BilinearForm f = L.killing_form();
  j["killing_signature"] = ordered_json::array({f.n_pos, f.n_zero, f.n_neg});
  return j;
}

ordered_json algebra_info_json(const LieAlgebra& L) {
  ordered_json j = algebra_json(L);
  bool semisimple = L.is_semisimple();
  j["semisimple"] = semisimple;
  bool compact = semisimple && L.is_compact_type();
  j["compact_type"] = compact;
  if (compact && L.family()) {
    j["rank"] = CartanSubalgebra::standard(L).rank();
  } else {
    j["rank"] = nullptr;
  }
  j["center_dim"] = L.center().size();
  return j;
}

ordered_json root_system_json(const RootSystem& rs) {
  ordered_json j;
  j["rank"] = rs.rank();
  j["metric"] = "trace";
  ordered_json roots = ordered_json::array();
  for (const Root& root : rs.roots) roots.push_back(vec_json(root.coords));
  j["roots"] = std::move(roots);
  j["positive"] = rs.positive;
  j["simple"] = rs.simple;
  ordered_json coroots = ordered_json::array();
  for (const auto& cv : rs.coroots) coroots.push_back(vec_json(cv));
  j["coroots"] = std::move(coroots);
  j["regular_element"] = vec_json(rs.regular_element);
  return j;
}

ordered_json weyl_json(const WeylGroup& w) {
  ordered_json j;
  j["order"] = w.order();
  j["generators"] = w.generators;
  ordered_json elements = ordered_json::array();
  for (const WeylElement& e : w.elements) {
    ordered_json el;
    el["matrix"] = matrix_json(e.matrix);
    el["word"] = e.word;
    elements.push_back(std::move(el));
  }
  j["elements"] = std::move(elements);
  return j;
}

ordered_json dynkin_json(const DynkinDiagram& dg) {
  ordered_json j;
  ordered_json nodes = ordered_json::array();
  for (const DynkinNode& n : dg.nodes) {
    ordered_json node;
    node["label"] = n.label;
    node["length_sq"] = round12(n.length_sq);
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const DynkinEdge& e : dg.edges) {
    ordered_json edge;
    edge["i"] = e.i;
    edge["j"] = e.j;
    edge["multiplicity"] = e.multiplicity;
    if (e.arrow_to >= 0)
      edge["arrow_to"] = e.arrow_to;
    else
      edge["arrow_to"] = nullptr;
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  ordered_json components = ordered_json::array();
  for (const DynkinComponent& c : dg.components) {
    ordered_json comp;
    comp["nodes"] = c.nodes;
    comp["label"] = c.label;
    components.push_back(std::move(comp));
  }
  j["components"] = std::move(components);
  return j;
}

ordered_json orbit_report_json(const RootSystem& rs, const OrbitShape& shape,
                               const ParallelOrbitReport& report) {
  ordered_json j;
  j["Z"] = vec_json(shape.base);
  j["N"] = vec_json(shape.normal);
  j["canonical_Z_plus_N"] = vec_json(report.canonical);
  j["orbit_dim"] = report.orbit_dim;
  j["endpoint_orbit_dim"] = report.endpoint_orbit_dim;
  j["endpoint_vanishing_roots"] = report.endpoint_vanishing;
  ordered_json curvatures = ordered_json::array();
  for (const auto& pair : shape.eigenpairs) {
    ordered_json c;
    c["root"] = vec_json(rs.roots[rs.positive[pair.positive_index]].coords);
    c["value"] = round12(pair.value);
    c["multiplicity"] = 2;
    curvatures.push_back(std::move(c));
  }
  j["principal_curvatures"] = std::move(curvatures);
  j["parallel_check"] = report.pass ? "PASS" : "FAIL";
  j["parallel_samples"] = report.samples;
  j["parallel_max_deviation"] = round12(report.max_deviation);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2); }

}  // namespace lie
