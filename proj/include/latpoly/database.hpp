#pragma once

// Flat-file database of canonical representatives, stats tables in the
// shape of the published ones, and the verification harness.
//
// Format: '#'-prefixed header (format tag, run manifest, record count and
// body hash), then one record per line, `d;V;x,y,..|x,y,..` with vertices
// '|'-separated and coordinates comma-separated, base 10, sorted by
// (volume, key).  The first vertex of a canonical representative is the
// origin, so keys are recovered from the stored matrix without
// recanonicalization.

#include "latpoly/fixtures.hpp"
#include "latpoly/parallel.hpp"
#include "latpoly/polytope_enum.hpp"
#include "latpoly/properties.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace latpoly {

// Key of a record whose vertices are already canonical (origin first,
// Hermite columns after).
inline CanonicalKey key_of_canonical_verts(int dim, i64 vol, const std::vector<Point64>& verts) {
  std::ostringstream os;
  os << dim << ';' << vol;
  for (int i = 0; i < dim; ++i)
    for (std::size_t j = 1; j < verts.size(); ++j) os << ';' << verts[j][static_cast<std::size_t>(i)];
  return {os.str()};
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

inline std::string format_record_line(const ClassRecord& r) {
  std::ostringstream os;
  os << r.dim << ';' << r.vol << ';';
  for (std::size_t v = 0; v < r.verts.size(); ++v) {
    if (v) os << '|';
    for (std::size_t c = 0; c < r.verts[v].size(); ++c) {
      if (c) os << ',';
      os << r.verts[v][c];
    }
  }
  return os.str();
}

inline void write_db(const std::vector<ClassRecord>& records, const std::string& path,
                     const std::vector<std::string>& manifest = {}) {
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto &a = records[i - 1], &b = records[i];
    if (std::make_pair(a.vol, a.key.bytes) > std::make_pair(b.vol, b.key.bytes))
      throw PreconditionViolated("records must be sorted by (volume, key)");
  }
  std::string body;
  for (const auto& r : records) {
    body += format_record_line(r);
    body += '\n';
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "# latpoly-db 1\n";
  for (const auto& m : manifest) out << "# " << m << '\n';
  out << "# records=" << records.size() << " hash=" << std::hex << fnv1a(body) << std::dec << '\n';
  out << body;
}

inline std::vector<ClassRecord> read_db(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<ClassRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    ClassRecord r;
    std::size_t p1 = line.find(';');
    std::size_t p2 = p1 == std::string::npos ? std::string::npos : line.find(';', p1 + 1);
    if (p2 == std::string::npos) throw FormatError(lineno, "expected d;V;vertices");
    try {
      r.dim = std::stoi(line.substr(0, p1));
      r.vol = std::stoll(line.substr(p1 + 1, p2 - p1 - 1));
    } catch (const std::exception&) {
      throw FormatError(lineno, "bad dimension or volume");
    }
    if (r.dim < 1 || r.vol < 1) throw FormatError(lineno, "bad dimension or volume");
    std::string rest = line.substr(p2 + 1);
    std::stringstream vs(rest);
    std::string vtx;
    while (std::getline(vs, vtx, '|')) {
      Point64 pt;
      std::stringstream cs(vtx);
      std::string coord;
      while (std::getline(cs, coord, ',')) {
        try {
          pt.push_back(std::stoll(coord));
        } catch (const std::exception&) {
          throw FormatError(lineno, "bad coordinate '" + coord + "'");
        }
      }
      if (static_cast<int>(pt.size()) != r.dim)
        throw FormatError(lineno, "vertex arity does not match dimension");
      r.verts.push_back(std::move(pt));
    }
    if (r.verts.size() < static_cast<std::size_t>(r.dim) + 1)
      throw FormatError(lineno, "too few vertices");
    if (!is_zero(r.verts[0])) throw FormatError(lineno, "first vertex must be the origin");
    r.key = key_of_canonical_verts(r.dim, r.vol, r.verts);
    r.n_points = -1;  // computed on demand
    out.push_back(std::move(r));
  }
  return out;
}

// ------------------------------------------------------------------ stats --

struct StatsRow {
  i64 volume = 0;
  long long tot = 0;
  // spanning, very ample, IDP, unimodular cover, unimodular triangulation;
  // nullopt renders blank (some class at this volume was not computed)
  std::array<std::optional<long long>, 5> props;
};

struct StatsTable {
  std::vector<StatsRow> rows;
};

inline StatsTable stats_table(const std::vector<ClassRecord>& records,
                              const std::vector<PropertyRecord>* props = nullptr) {
  std::map<i64, std::vector<std::size_t>> by_volume;
  for (std::size_t i = 0; i < records.size(); ++i) by_volume[records[i].vol].push_back(i);
  StatsTable t;
  for (const auto& [vol, ids] : by_volume) {
    StatsRow row;
    row.volume = vol;
    row.tot = static_cast<long long>(ids.size());
    if (props) {
      for (int c = 0; c < 5; ++c) {
        long long count = 0;
        bool complete = true;
        for (std::size_t i : ids) {
          const PropertyRecord& pr = (*props)[i];
          const TriState vals[5] = {pr.spanning, pr.very_ample, pr.idp, pr.unimodular_cover,
                                    pr.unimodular_triangulation};
          if (vals[c] == TriState::NotComputed) {
            complete = false;
            break;
          }
          if (vals[c] == TriState::True) ++count;
        }
        if (complete) row.props[static_cast<std::size_t>(c)] = count;
      }
    }
    t.rows.push_back(std::move(row));
  }
  // hierarchy sanity when fully computed: TOT >= SP >= VA >= IDP >= UC >= UT
  for (const auto& r : t.rows) {
    long long prev = r.tot;
    for (const auto& c : r.props) {
      if (!c) break;
      if (*c > prev) throw PreconditionViolated("stats table violates the property hierarchy");
      prev = *c;
    }
  }
  return t;
}

inline std::string render_stats(const StatsTable& t) {
  std::ostringstream os;
  os << "Volume\tTOT\tSP\tVA\tIDP\tUC\tUT\n";
  for (const auto& r : t.rows) {
    os << r.volume << '\t' << r.tot;
    for (const auto& c : r.props) {
      os << '\t';
      if (c) os << *c;
    }
    os << '\n';
  }
  return os.str();
}

// ----------------------------------------------------------------- verify --

struct DiffEntry {
  std::string where;
  long long expected = 0;
  long long actual = 0;
};

// Compare a stats table against the published per-volume reference counts
// for this dimension; empty result means exact agreement on the covered
// volume range and columns.
inline std::vector<DiffEntry> verify_against_fixture(int dim, const StatsTable& t,
                                                     i64 max_volume, int max_prop_cols = 5) {
  std::vector<DiffEntry> diffs;
  const auto& fix = fixtures::volume_table(dim);
  auto row_of = [&](i64 v) -> const StatsRow* {
    for (const auto& r : t.rows)
      if (r.volume == v) return &r;
    return nullptr;
  };
  for (const auto& f : fix) {
    if (f.volume > max_volume) break;
    const StatsRow* r = row_of(f.volume);
    long long actual_tot = r ? r->tot : 0;
    if (actual_tot != f.tot)
      diffs.push_back({"d=" + std::to_string(dim) + " V=" + std::to_string(f.volume) + " TOT",
                       f.tot, actual_tot});
    if (!r) continue;
    const long long want[5] = {f.sp, f.va, f.idp, f.uc, f.ut};
    const char* names[5] = {"SP", "VA", "IDP", "UC", "UT"};
    for (int c = 0; c < std::min(5, max_prop_cols); ++c) {
      if (want[c] < 0) continue;
      if (!r->props[static_cast<std::size_t>(c)]) continue;  // blank: not computed
      if (*r->props[static_cast<std::size_t>(c)] != want[c])
        diffs.push_back({"d=" + std::to_string(dim) + " V=" + std::to_string(f.volume) + " " +
                             names[c],
                         want[c], *r->props[static_cast<std::size_t>(c)]});
    }
  }
  return diffs;
}

// ---------------------------------------------------------------- analyze --

struct AnalyzeOptions {
  bool spanning = true, smooth = true, va = true, idp = true, uc = true, ut = true;
  long long budget = 5000000;
  int idp_max_degree = 0;
  int jobs = 1;
};

inline std::vector<PropertyRecord> analyze_records(const std::vector<ClassRecord>& records,
                                                   const AnalyzeOptions& o = {}) {
  std::vector<PropertyRecord> out(records.size());
  parallel_for(records.size(), o.jobs, [&](std::size_t i) {
    Polytope64 p = convex_hull(records[i].verts);
    out[i] = analyze_polytope(p, o.spanning, o.smooth, o.va, o.idp, o.uc, o.ut, o.budget,
                              o.idp_max_degree);
  });
  return out;
}

}  // namespace latpoly
