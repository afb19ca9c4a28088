#pragma once

// Enumeration of all d-simplices of given normalized volume up to
// unimodular equivalence.
//
// Recursion on dimension: any volume-V simplex has a representative
// conv(0, columns of an upper-triangular Hermite matrix), so it is
// conv(F x {0}, (p_1,...,p_{d-1}, p_d)) for a (d-1)-simplex facet F with
// Vol(F) = v, a divisor of V, apex height p_d = V/v and apex offsets
// 0 <= p_i < p_d.  Candidates are deduplicated by canonical key.

#include "latpoly/canonical.hpp"
#include "latpoly/parallel.hpp"

#include <map>

namespace latpoly {

struct SimplexClassSet {
  int dim = 0;
  i64 volume = 0;
  std::map<CanonicalKey, Polytope64> members;
};

// Classes of d-simplices of volume exactly V for every V = 1..K; the
// returned vector is indexed by volume (index 0 unused).
inline std::vector<SimplexClassSet> enumerate_simplices_upto(int d, i64 max_volume,
                                                             int jobs = 1) {
  if (d < 1 || max_volume < 1) throw PreconditionViolated("need d >= 1 and K >= 1");
  std::vector<SimplexClassSet> level(static_cast<std::size_t>(max_volume) + 1);
  for (i64 v = 1; v <= max_volume; ++v) {
    level[static_cast<std::size_t>(v)].dim = 1;
    level[static_cast<std::size_t>(v)].volume = v;
    Polytope64 seg = make_simplex<i64>({{0}, {v}});
    level[static_cast<std::size_t>(v)].members.emplace(canonical_key(seg), std::move(seg));
  }
  for (int r = 2; r <= d; ++r) {
    std::vector<SimplexClassSet> next(static_cast<std::size_t>(max_volume) + 1);
    parallel_for(static_cast<std::size_t>(max_volume), jobs, [&](std::size_t vi) {
      const i64 V = static_cast<i64>(vi) + 1;
      SimplexClassSet out;
      out.dim = r;
      out.volume = V;
      std::vector<Point64> verts(static_cast<std::size_t>(r) + 1,
                                 Point64(static_cast<std::size_t>(r), 0));
      for (i64 v = 1; v <= V; ++v) {
        if (V % v != 0) continue;
        const i64 pd = V / v;
        for (const auto& [fkey, facet] : level[static_cast<std::size_t>(v)].members) {
          for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r - 1; ++j)
              verts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                  facet.verts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            verts[static_cast<std::size_t>(i)][static_cast<std::size_t>(r - 1)] = 0;
          }
          Point64& apex = verts[static_cast<std::size_t>(r)];
          apex.assign(static_cast<std::size_t>(r), 0);
          apex[static_cast<std::size_t>(r - 1)] = pd;
          // odometer over apex offsets in [0, pd)^{r-1}
          while (true) {
            Polytope64 s = make_simplex(verts);
            CanonicalKey key = canonical_key(s);
            out.members.emplace(std::move(key), std::move(s));
            int j = 0;
            for (; j < r - 1; ++j) {
              if (++apex[static_cast<std::size_t>(j)] < pd) break;
              apex[static_cast<std::size_t>(j)] = 0;
            }
            if (j == r - 1) break;
          }
        }
      }
      next[static_cast<std::size_t>(V)] = std::move(out);
    });
    level = std::move(next);
  }
  return level;
}

// Classes of d-simplices of volume exactly V.
inline SimplexClassSet enumerate_simplices(int d, i64 volume, int jobs = 1) {
  auto table = enumerate_simplices_upto(d, volume, jobs);
  return std::move(table[static_cast<std::size_t>(volume)]);
}

}  // namespace latpoly
