#include "lie/dynkin.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "lie/error.hpp"

namespace lie {

CartanMatrix cartan_matrix(const RootSystem& rs) {
  if (rs.simple.empty() && !rs.roots.empty())
    fail(ErrorCode::bad_input, "cartan_matrix: simple roots not extracted");
  const std::size_t r = rs.simple.size();
  CartanMatrix cm;
  cm.entries.assign(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    const std::vector<double>& ai = rs.roots[rs.simple[i]].coords;
    for (std::size_t j = 0; j < r; ++j) {
      const std::vector<double>& aj = rs.roots[rs.simple[j]].coords;
      double v = 2.0 * dot(ai, aj) / dot(aj, aj);
      double nearest = std::round(v);
      if (std::abs(v - nearest) > 1e-6)
        fail(ErrorCode::numeric,
             "cartan_matrix: non-crystallographic entry " + std::to_string(v));
      cm.entries[i][j] = static_cast<int>(nearest);
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (cm.entries[i][i] != 2)
      fail(ErrorCode::numeric, "cartan_matrix: diagonal entry is not 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      int v = cm.entries[i][j];
      if (v > 0 || v < -3)
        fail(ErrorCode::numeric, "cartan_matrix: off-diagonal entry out of range");
      if ((v == 0) != (cm.entries[j][i] == 0))
        fail(ErrorCode::numeric, "cartan_matrix: zero pattern is not symmetric");
    }
  }
  return cm;
}

DynkinDiagram build_diagram(const CartanMatrix& cm,
                            const std::vector<double>& lengths_sq) {
  const std::size_t r = cm.rank();
  if (lengths_sq.size() != r)
    fail(ErrorCode::bad_input, "build_diagram: lengths do not match the rank");
  DynkinDiagram dg;
  for (std::size_t i = 0; i < r; ++i)
    dg.nodes.push_back({"a" + std::to_string(i + 1), lengths_sq[i]});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      int mult = cm.entries[i][j] * cm.entries[j][i];
      if (mult == 0) continue;
      if (mult < 0 || mult > 3)
        fail(ErrorCode::numeric,
             "build_diagram: edge multiplicity " + std::to_string(mult) +
                 " violates crystallography");
      DynkinEdge e;
      e.i = static_cast<int>(i);
      e.j = static_cast<int>(j);
      e.multiplicity = mult;
      if (mult > 1) {
        double li = lengths_sq[i], lj = lengths_sq[j];
        if (std::abs(li - lj) <= 1e-8 * std::max(li, lj))
          fail(ErrorCode::numeric,
               "build_diagram: multiple edge between roots of equal length");
        e.arrow_to = li < lj ? e.i : e.j;
      }
      dg.edges.push_back(e);
    }
  classify(dg);
  return dg;
}

namespace {

struct ComponentView {
  std::vector<int> nodes;
  std::vector<const DynkinEdge*> edges;
  std::map<int, std::vector<int>> adjacency;  // neighbors per node
};

std::vector<ComponentView> split_components(const DynkinDiagram& dg) {
  const std::size_t r = dg.nodes.size();
  std::vector<int> comp(r, -1);
  int n_comp = 0;
  for (std::size_t start = 0; start < r; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<std::size_t> stack{start};
    comp[start] = n_comp;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      for (const DynkinEdge& e : dg.edges) {
        int other = -1;
        if (e.i == static_cast<int>(cur)) other = e.j;
        if (e.j == static_cast<int>(cur)) other = e.i;
        if (other >= 0 && comp[other] < 0) {
          comp[other] = n_comp;
          stack.push_back(static_cast<std::size_t>(other));
        }
      }
    }
    ++n_comp;
  }
  std::vector<ComponentView> views(n_comp);
  for (std::size_t i = 0; i < r; ++i) views[comp[i]].nodes.push_back(static_cast<int>(i));
  for (const DynkinEdge& e : dg.edges) {
    ComponentView& v = views[comp[e.i]];
    v.edges.push_back(&e);
    v.adjacency[e.i].push_back(e.j);
    v.adjacency[e.j].push_back(e.i);
  }
  return views;
}

int degree(const ComponentView& v, int node) {
  auto it = v.adjacency.find(node);
  return it == v.adjacency.end() ? 0 : static_cast<int>(it->second.size());
}

// length of the arm from `branch` entered through `first`
int arm_length(const ComponentView& v, int branch, int first) {
  int length = 1;
  int prev = branch, cur = first;
  while (degree(v, cur) == 2) {
    int next = -1;
    for (int nb : v.adjacency.at(cur))
      if (nb != prev) next = nb;
    if (next < 0) break;
    prev = cur;
    cur = next;
    ++length;
  }
  return length;
}

std::string classify_component(const ComponentView& v) {
  const std::size_t k = v.nodes.size();
  if (k == 1) return "A1";

  int max_degree = 0, branch = -1, n_branch = 0;
  for (int node : v.nodes) {
    int deg = degree(v, node);
    if (deg > max_degree) max_degree = deg;
    if (deg >= 3) {
      branch = node;
      ++n_branch;
    }
  }
  int doubles = 0, triples = 0;
  const DynkinEdge* multi = nullptr;
  for (const DynkinEdge* e : v.edges) {
    if (e->multiplicity == 2) {
      ++doubles;
      multi = e;
    }
    if (e->multiplicity == 3) {
      ++triples;
      multi = e;
    }
  }

  if (triples > 0)
    return (k == 2 && triples == 1 && doubles == 0) ? "G2" : "unknown";

  if (doubles == 0) {
    if (max_degree <= 2) return "A" + std::to_string(k);
    if (n_branch == 1 && max_degree == 3) {
      std::vector<int> arms;
      for (int nb : v.adjacency.at(branch)) arms.push_back(arm_length(v, branch, nb));
      std::sort(arms.begin(), arms.end());
      if (arms.size() != 3) return "unknown";
      if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(k);
      if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return "E6";
      if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return "E7";
      if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return "E8";
    }
    return "unknown";
  }

  if (doubles == 1 && max_degree <= 2) {
    // a chain with one double edge
    if (k == 2) return "B2";
    const bool i_leaf = degree(v, multi->i) == 1;
    const bool j_leaf = degree(v, multi->j) == 1;
    if (!i_leaf && !j_leaf) return k == 4 ? "F4" : "unknown";
    int leaf = i_leaf ? multi->i : multi->j;
    int inner = i_leaf ? multi->j : multi->i;
    if (i_leaf && j_leaf) return "unknown";  // disconnected pair cannot happen here
    if (multi->arrow_to == leaf) return "B" + std::to_string(k);
    if (multi->arrow_to == inner && k >= 3) return "C" + std::to_string(k);
  }
  return "unknown";
}

}  // namespace

std::vector<std::string> classify(DynkinDiagram& dg) {
  dg.components.clear();
  std::vector<std::string> labels;
  for (const ComponentView& v : split_components(dg)) {
    DynkinComponent comp;
    comp.nodes = v.nodes;
    comp.label = classify_component(v);
    labels.push_back(comp.label);
    dg.components.push_back(std::move(comp));
  }
  return labels;
}

namespace {

std::string edge_token(int multiplicity, bool forward) {
  switch (multiplicity) {
    case 1: return " - ";
    case 2: return forward ? " => " : " <= ";
    default: return forward ? " ≡> " : " <≡ ";
  }
}

const DynkinEdge* edge_between(const ComponentView& v, int a, int b) {
  for (const DynkinEdge* e : v.edges)
    if ((e->i == a && e->j == b) || (e->i == b && e->j == a)) return e;
  return nullptr;
}

// renders a chain starting from `start`, following the unique path
std::string render_chain(const ComponentView& v, int start) {
  std::ostringstream os;
  os << "o";
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int nb : v.adjacency.at(cur))
      if (nb != prev) next = nb;
    if (next < 0) break;
    const DynkinEdge* e = edge_between(v, cur, next);
    os << edge_token(e->multiplicity, e->arrow_to != cur) << "o";
    prev = cur;
    cur = next;
    if (degree(v, cur) == 1) break;
  }
  return os.str();
}

std::string render_component(const ComponentView& v) {
  if (v.nodes.size() == 1) return "o";

  int branch = -1;
  for (int node : v.nodes)
    if (degree(v, node) >= 3) branch = node;

  if (branch < 0) {
    // plain chain; orient a multiple edge to point rightward, otherwise
    // start from the smaller endpoint index
    std::vector<int> ends;
    for (int node : v.nodes)
      if (degree(v, node) == 1) ends.push_back(node);
    const DynkinEdge* multi = nullptr;
    for (const DynkinEdge* e : v.edges)
      if (e->multiplicity > 1) multi = e;
    int start = *std::min_element(ends.begin(), ends.end());
    if (multi && multi->arrow_to >= 0) {
      // pick the end whose walk reaches the arrow source before the target
      for (int cand : ends) {
        int prev = -1, cur = cand;
        bool source_first = false;
        while (true) {
          int src = multi->arrow_to == multi->i ? multi->j : multi->i;
          if (cur == src) {
            source_first = true;
            break;
          }
          if (cur == multi->arrow_to) break;
          int next = -1;
          for (int nb : v.adjacency.at(cur))
            if (nb != prev) next = nb;
          if (next < 0) break;
          prev = cur;
          cur = next;
        }
        if (source_first) {
          start = cand;
          break;
        }
      }
    }
    return render_chain(v, start);
  }

  // branched diagram: the two longest arms form the main line, remaining
  // arms drop below the branch node
  struct Arm {
    int first;
    int length;
  };
  std::vector<Arm> arms;
  for (int nb : v.adjacency.at(branch))
    arms.push_back({nb, arm_length(v, branch, nb)});
  std::sort(arms.begin(), arms.end(), [](const Arm& a, const Arm& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.first < b.first;
  });

  // walk out to the far end of the longest arm, then render the chain
  // from there through the branch into the second arm
  auto walk_to_end = [&](int first) {
    int prev = branch, cur = first;
    while (true) {
      int next = -1;
      for (int nb : v.adjacency.at(cur))
        if (nb != prev) next = nb;
      if (next < 0) return cur;
      prev = cur;
      cur = next;
    }
  };
  int start = walk_to_end(arms[0].first);

  // render main line, recording the branch column
  std::ostringstream main_line;
  main_line << "o";
  int column = 0, branch_column = branch == start ? 0 : -1;
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int nb : v.adjacency.at(cur)) {
      if (nb == prev) continue;
      // stay on the main line: at the branch, continue into the second arm
      if (cur == branch && nb != arms[1].first) continue;
      next = nb;
    }
    if (next < 0) break;
    const DynkinEdge* e = edge_between(v, cur, next);
    main_line << edge_token(e->multiplicity, e->arrow_to != cur) << "o";
    column += 4;
    prev = cur;
    cur = next;
    if (cur == branch) branch_column = column;
  }

  std::ostringstream out;
  out << main_line.str();
  // remaining arms below the branch node
  for (std::size_t a = 2; a < arms.size(); ++a) {
    int node = arms[a].first;
    int hang = branch;
    while (node >= 0) {
      out << "\n" << std::string(branch_column, ' ') << "|";
      out << "\n" << std::string(branch_column, ' ') << "o";
      int next = -1;
      for (int nb : v.adjacency.at(node))
        if (nb != hang) next = nb;
      hang = node;
      node = next;
    }
  }
  return out.str();
}

}  // namespace

std::string render_ascii(const DynkinDiagram& dg) {
  std::vector<ComponentView> views = split_components(dg);
  std::sort(views.begin(), views.end(),
            [](const ComponentView& a, const ComponentView& b) {
              return a.nodes.front() < b.nodes.front();
            });
  std::ostringstream os;
  for (std::size_t c = 0; c < views.size(); ++c) {
    if (c > 0) os << "\n";
    os << render_component(views[c]);
  }
  return os.str();
}

DynkinDiagram dynkin_diagram(const RootSystem& rs) {
  CartanMatrix cm = cartan_matrix(rs);
  std::vector<double> lengths;
  for (int idx : rs.simple)
    lengths.push_back(dot(rs.roots[idx].coords, rs.roots[idx].coords));
  return build_diagram(cm, lengths);
}

}  // namespace lie
