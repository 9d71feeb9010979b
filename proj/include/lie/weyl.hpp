#pragma once

#include <cstdint>
#include <vector>

#include "lie/cartan.hpp"
#include "lie/real_linalg.hpp"

namespace lie {

/// An orthogonal action on Cartan coordinates together with one shortest
/// word in the simple reflections that produces it.
struct WeylElement {
  RealMatrix matrix;
  std::vector<int> word;  // indices into the simple-root list
};

/// The finite group generated by the simple reflections, enumerated by
/// breadth-first closure.
struct WeylGroup {
  std::vector<WeylElement> elements;  // identity first
  std::size_t generators = 0;
  std::size_t order() const { return elements.size(); }
};

/// Reflection across ker(alpha): Z -> Z - alpha(Z) alpha^vee.
WeylElement reflection(const RootSystem& rs, int root_index);

/// Generates the full group from the simple reflections. Deduplication
/// rounds matrix entries to a 1e-7 grid; generation aborts past 2e6
/// elements.
WeylGroup generate(const RootSystem& rs);

/// Signs of the simple roots on a regular element.
std::vector<int> chamber_of(const RootSystem& rs, const std::vector<double>& x);

/// Walks x into the closed fundamental chamber by descending simple
/// reflections. Returns the canonical point and the element applied to
/// reach it.
struct CanonicalPoint {
  std::vector<double> point;
  WeylElement applied;
};

CanonicalPoint to_fundamental_domain(const RootSystem& rs, const WeylGroup& w,
                                     const std::vector<double>& x);

/// Deduplicated orbit {w x}.
std::vector<std::vector<double>> weyl_orbit(const WeylGroup& w,
                                            const std::vector<double>& x);

}  // namespace lie
