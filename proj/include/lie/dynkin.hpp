#pragma once

#include <string>
#include <vector>

#include "lie/cartan.hpp"

namespace lie {

/// Integer Cartan matrix n_ij = round(2 <a_i, a_j> / <a_j, a_j>) over the
/// simple roots.
struct CartanMatrix {
  std::vector<std::vector<int>> entries;
  std::size_t rank() const { return entries.size(); }
};

struct DynkinNode {
  std::string label;
  double length_sq = 0.0;
};

struct DynkinEdge {
  int i = 0, j = 0;
  int multiplicity = 1;
  int arrow_to = -1;  // index of the strictly shorter root, -1 for none
};

struct DynkinComponent {
  std::vector<int> nodes;
  std::string label;  // A1..G2, or "unknown"
};

struct DynkinDiagram {
  std::vector<DynkinNode> nodes;
  std::vector<DynkinEdge> edges;
  std::vector<DynkinComponent> components;
};

CartanMatrix cartan_matrix(const RootSystem& rs);

/// Assembles the labeled graph from an integer Cartan matrix and the
/// squared simple-root lengths.
DynkinDiagram build_diagram(const CartanMatrix& cm,
                            const std::vector<double>& lengths_sq);

/// Labels every connected component against the simple catalog.
/// "unknown" is a value, not an error.
std::vector<std::string> classify(DynkinDiagram& dg);

/// One line per chain with o, -, =>, and triple-edge tokens; branch nodes
/// carry a vertical drop line.
std::string render_ascii(const DynkinDiagram& dg);

/// Pipeline convenience: Cartan matrix, diagram, classification.
DynkinDiagram dynkin_diagram(const RootSystem& rs);

}  // namespace lie
