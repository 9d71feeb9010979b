#include "lie/weyl.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <map>

#include "lie/error.hpp"

namespace lie {

namespace {

std::vector<std::int64_t> dedup_key(const RealMatrix& m) {
  std::vector<std::int64_t> key;
  key.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      key.push_back(llround(m(i, j) * 1e7));
  return key;
}

}  // namespace

WeylElement reflection(const RootSystem& rs, int root_index) {
  const std::size_t r = rs.rank();
  const std::vector<double>& alpha = rs.roots[root_index].coords;
  std::vector<double> cv = coroot(rs, root_index);
  WeylElement w;
  w.matrix = RealMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) w.matrix(i, j) -= cv[i] * alpha[j];
  return w;
}

WeylGroup generate(const RootSystem& rs) {
  if (rs.simple.empty() && !rs.roots.empty())
    fail(ErrorCode::bad_input, "Weyl generation needs the simple roots");
  const std::size_t r = rs.rank();
  std::vector<WeylElement> gens;
  for (std::size_t s = 0; s < rs.simple.size(); ++s) {
    WeylElement g = reflection(rs, rs.simple[s]);
    g.word = {static_cast<int>(s)};
    gens.push_back(std::move(g));
  }

  WeylGroup group;
  group.generators = gens.size();
  WeylElement id;
  id.matrix = RealMatrix::identity(r);
  std::map<std::vector<std::int64_t>, std::size_t> seen;
  seen[dedup_key(id.matrix)] = 0;
  group.elements.push_back(std::move(id));

  std::deque<std::size_t> frontier{0};
  constexpr std::size_t kCap = 2'000'000;
  while (!frontier.empty()) {
    std::size_t cur = frontier.front();
    frontier.pop_front();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      WeylElement next;
      next.matrix = gens[s].matrix * group.elements[cur].matrix;
      next.word = group.elements[cur].word;
      next.word.insert(next.word.begin(), static_cast<int>(s));
      auto key = dedup_key(next.matrix);
      if (seen.count(key)) continue;
      if (group.elements.size() >= kCap)
        fail(ErrorCode::numeric,
             "Weyl generation exceeded the element cap (broken root system)");
      seen[key] = group.elements.size();
      frontier.push_back(group.elements.size());
      group.elements.push_back(std::move(next));
    }
  }
  return group;
}

std::vector<int> chamber_of(const RootSystem& rs, const std::vector<double>& x) {
  if (!is_regular(rs, x))
    fail(ErrorCode::bad_input, "chamber_of: element lies on a wall");
  std::vector<int> signs;
  for (int idx : rs.simple)
    signs.push_back(dot(rs.roots[idx].coords, x) > 0.0 ? 1 : -1);
  return signs;
}

CanonicalPoint to_fundamental_domain(const RootSystem& rs, const WeylGroup& w,
                                     const std::vector<double>& x) {
  const std::size_t r = rs.rank();
  CanonicalPoint out;
  out.point = x;
  out.applied.matrix = RealMatrix::identity(r);

  const std::size_t max_steps = w.order() + 1;
  std::size_t steps = 0;
  while (true) {
    int descent = -1;
    for (std::size_t s = 0; s < rs.simple.size(); ++s) {
      if (dot(rs.roots[rs.simple[s]].coords, out.point) < -1e-10) {
        descent = static_cast<int>(s);
        break;
      }
    }
    if (descent < 0) break;
    if (++steps > max_steps)
      fail(ErrorCode::numeric,
           "fundamental-domain walk did not terminate");
    WeylElement refl = reflection(rs, rs.simple[descent]);
    out.point = refl.matrix * out.point;
    out.applied.matrix = refl.matrix * out.applied.matrix;
    out.applied.word.insert(out.applied.word.begin(), descent);
  }
  return out;
}

std::vector<std::vector<double>> weyl_orbit(const WeylGroup& w,
                                            const std::vector<double>& x) {
  std::vector<std::vector<double>> orbit;
  std::map<std::vector<std::int64_t>, bool> seen;
  const double scale = std::max(norm(x), 1.0);
  for (const WeylElement& e : w.elements) {
    std::vector<double> y = e.matrix * x;
    std::vector<std::int64_t> key(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
      key[i] = llround(y[i] / scale * 1e8);
    if (seen.count(key)) continue;
    seen[key] = true;
    orbit.push_back(std::move(y));
  }
  return orbit;
}

}  // namespace lie
