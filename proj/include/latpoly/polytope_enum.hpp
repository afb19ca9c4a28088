#pragma once

// Complete enumeration of d-dimensional lattice polytopes of normalized
// volume at most K, up to unimodular equivalence.
//
// Every class of volume <= K is reached by growing a seed simplex: the
// candidate growth points of a seed S are the lattice points p whose
// corank-one configuration (S, p) has a volume vector in W_K^d with last
// entry Vol(S), and polytopes are grown one point at a time ordered by
// lattice point count.  By default only volume vectors whose entries are
// bounded by Vol(S) are used (every polytope is then built from a
// maximum-volume vertex simplex it contains); the filter can be disabled
// for cross-checks.  Lawrence prisms are unioned in as a final step.
//
// Workers own one seed at a time; the global class set is a key-addressed
// map, so results are independent of scheduling and the output is sorted
// by (volume, key).

#include "latpoly/families.hpp"
#include "latpoly/parallel.hpp"
#include "latpoly/simplex_enum.hpp"
#include "latpoly/volume_vectors.hpp"

#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace latpoly {

struct ClassRecord {
  int dim = 0;
  i64 vol = 0;
  CanonicalKey key;
  std::vector<Point64> verts;  // canonical representative, first vertex 0
  long long n_points = 0;

  bool operator==(const ClassRecord& o) const {
    return dim == o.dim && vol == o.vol && key == o.key && verts == o.verts &&
           n_points == o.n_points;
  }
};

struct EnumOptions {
  int jobs = 1;
  bool biggest_simplex_filter = true;
  bool lawrence_completion = true;
  // Resume support: seeds whose growth already completed, and previously
  // written records to preload into the class set.
  std::set<std::string> completed_seeds;
  std::vector<ClassRecord> preloaded;
  // Called after each seed completes with the seed key and every class the
  // seed produced (idempotent under replay).
  std::function<void(const std::string&, const std::vector<ClassRecord>&)> on_seed_done;
  std::function<void(std::size_t, std::size_t)> progress;
};

namespace detail {

inline ClassRecord record_of(const Polytope64& p) {
  auto [key, verts] = canonical_key_and_vertices(p);
  ClassRecord r;
  r.dim = p.dim;
  r.vol = p.vol;
  r.key = std::move(key);
  r.verts = std::move(verts);
  r.n_points = p.count_points(false);
  return r;
}

}  // namespace detail

inline std::vector<ClassRecord> enumerate_polytopes(int d, i64 max_volume,
                                                    const EnumOptions& opts = {}) {
  if (d < 2 || max_volume < 1) throw PreconditionViolated("need d >= 2 and K >= 1");
  const i64 K = max_volume;

  auto simplex_table = enumerate_simplices_upto(d, K, opts.jobs);
  std::vector<std::pair<CanonicalKey, Polytope64>> seeds;
  for (i64 v = 1; v <= K; ++v)
    for (auto& [key, s] : simplex_table[static_cast<std::size_t>(v)].members)
      seeds.push_back({key, std::move(s)});

  // Growth vectors grouped by seed volume.
  std::vector<std::vector<VolumeVector<i64>>> bucket(static_cast<std::size_t>(K) + 1);
  parallel_for(static_cast<std::size_t>(K), opts.jobs, [&](std::size_t vi) {
    i64 v = static_cast<i64>(vi) + 1;
    bucket[static_cast<std::size_t>(v)] =
        volume_vector_bucket<i64>(d, K, v, opts.biggest_simplex_filter);
  });

  std::mutex mx;
  std::map<std::string, ClassRecord> classes;
  for (const auto& r : opts.preloaded) classes.emplace(r.key.bytes, r);
  std::atomic<std::size_t> done{0};

  parallel_for(seeds.size(), opts.jobs, [&](std::size_t si) {
    const auto& [seed_key, seed] = seeds[si];
    if (opts.completed_seeds.count(seed_key.bytes)) return;

    std::vector<ClassRecord> found;
    found.push_back(detail::record_of(seed));

    // Candidate growth points of this seed.
    std::set<Point64> xs;
    for (const auto& w : bucket[static_cast<std::size_t>(seed.vol)]) {
      if (auto p = apex_point<i64>(seed.verts, w, seed.vol)) xs.insert(std::move(*p));
    }

    // Per-seed frontier keyed by lattice point count.
    std::vector<std::vector<Polytope64>> frontier(static_cast<std::size_t>(K + d) + 1);
    std::unordered_set<std::string> seen_keys;
    std::unordered_set<std::vector<Point64>, PointListHash> seen_embedded;
    seen_keys.insert(seed_key.bytes);
    {
      long long s0 = found[0].n_points;
      frontier[static_cast<std::size_t>(s0)].push_back(seed);
    }

    for (long long s = d + 1; s <= K + d - 1; ++s) {
      auto& level = frontier[static_cast<std::size_t>(s)];
      for (std::size_t pi = 0; pi < level.size(); ++pi) {
        if (level[pi].vol == K) continue;  // any growth would exceed K
        for (const auto& p : xs) {
          auto grown = extend(level[pi], p, &K);
          if (!grown) continue;
          std::vector<Point64> emb = grown->verts;
          std::sort(emb.begin(), emb.end());
          if (!seen_embedded.insert(std::move(emb)).second) continue;
          ClassRecord rec = detail::record_of(*grown);
          if (!seen_keys.insert(rec.key.bytes).second) continue;
          if (rec.n_points <= K + d)
            frontier[static_cast<std::size_t>(rec.n_points)].push_back(std::move(*grown));
          found.push_back(std::move(rec));
        }
      }
      level.clear();
    }

    if (opts.on_seed_done) opts.on_seed_done(seed_key.bytes, found);
    {
      std::lock_guard<std::mutex> lk(mx);
      for (auto& r : found) classes.emplace(r.key.bytes, std::move(r));
    }
    if (opts.progress) opts.progress(done.fetch_add(1) + 1, seeds.size());
  });

  if (opts.lawrence_completion) {
    // All height multisets a_1 >= ... >= a_d >= 0 with positive sum <= K.
    std::vector<i64> h(static_cast<std::size_t>(d), 0);
    std::vector<ClassRecord> prisms;
    auto rec = [&](auto&& self, int pos, i64 left, i64 cap) -> void {
      if (pos == d) {
        if (h[0] == 0) return;
        ClassRecord r = detail::record_of(lawrence_prism(h));
        prisms.push_back(std::move(r));
        return;
      }
      for (i64 a = std::min(cap, left); a >= 0; --a) {
        h[static_cast<std::size_t>(pos)] = a;
        self(self, pos + 1, left - a, a);
      }
    };
    rec(rec, 0, K, K);
    std::lock_guard<std::mutex> lk(mx);
    for (auto& r : prisms) classes.emplace(r.key.bytes, std::move(r));
  }

  std::vector<ClassRecord> out;
  out.reserve(classes.size());
  for (auto& [k, r] : classes) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const ClassRecord& a, const ClassRecord& b) {
    if (a.vol != b.vol) return a.vol < b.vol;
    return a.key.bytes < b.key.bytes;
  });
  return out;
}

}  // namespace latpoly
