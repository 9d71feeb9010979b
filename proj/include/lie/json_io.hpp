#pragma once

#include <json.hpp>
#include <string>

#include "lie/algebra.hpp"
#include "lie/cartan.hpp"
#include "lie/dynkin.hpp"
#include "lie/geometry.hpp"
#include "lie/weyl.hpp"

namespace lie {

using ordered_json = nlohmann::ordered_json;

/// Doubles rounded to 12 significant digits before serialization, so that
/// printed output is stable and deterministic.
double round12(double v);

/// {name, ambient_size, dim, basis, structure_constants, killing_signature}
ordered_json algebra_json(const LieAlgebra& L);

/// algebra_json plus the summary flags the CLI prints.
ordered_json algebra_info_json(const LieAlgebra& L);

/// {rank, metric, roots, positive, simple, coroots, regular_element}
ordered_json root_system_json(const RootSystem& rs);

/// {order, generators, elements: [{matrix, word}]}
ordered_json weyl_json(const WeylGroup& w);

/// {nodes, edges, components}
ordered_json dynkin_json(const DynkinDiagram& dg);

/// {Z, N, canonical_Z_plus_N, orbit_dim, principal_curvatures, ...}
ordered_json orbit_report_json(const RootSystem& rs, const OrbitShape& shape,
                               const ParallelOrbitReport& report);

std::string dump(const ordered_json& j);

}  // namespace lie
