// latpoly — enumerate lattice polytopes by normalized volume up to
// unimodular equivalence, and analyze the resulting database.
//
// Exit codes: 0 success, 1 verification/diff mismatch, 2 usage error.

#include "latpoly/database.hpp"
#include "latpoly/ehrhart.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iostream>

using namespace latpoly;

namespace {

std::string now_string() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[64];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

constexpr const char* kAlgorithmVersion = "latpoly-enum-1";

struct ManifestData {
  int dim = 0;
  long long max_volume = 0;
  std::set<std::string> completed;
};

ManifestData read_manifest(const std::string& path) {
  ManifestData m;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("dim=", 0) == 0) m.dim = std::stoi(line.substr(4));
    if (line.rfind("max_volume=", 0) == 0) m.max_volume = std::stoll(line.substr(11));
    if (line.rfind("seed ", 0) == 0) m.completed.insert(line.substr(5));
  }
  return m;
}

void run_enumerate(int dim, long long max_volume, const std::string& out, int jobs, bool resume,
                   bool biggest_filter, bool quiet) {
  const std::string manifest_path = out + ".manifest";
  const std::string partial_path = out + ".partial";

  EnumOptions opts;
  opts.jobs = jobs;
  opts.biggest_simplex_filter = biggest_filter;
  if (resume) {
    ManifestData m = read_manifest(manifest_path);
    if (m.dim == dim && m.max_volume == max_volume && !m.completed.empty()) {
      opts.completed_seeds = std::move(m.completed);
      try {
        opts.preloaded = read_db(partial_path);
      } catch (const std::exception&) {
        opts.preloaded.clear();
      }
      if (!quiet)
        std::cerr << "resuming: " << opts.completed_seeds.size() << " seeds done, "
                  << opts.preloaded.size() << " classes preloaded\n";
    }
  }
  {
    bool fresh = opts.completed_seeds.empty();
    std::ofstream mf(manifest_path, fresh ? std::ios::trunc : std::ios::app);
    if (fresh) {
      mf << "# latpoly-manifest 1\n";
      mf << "dim=" << dim << "\nmax_volume=" << max_volume << "\n";
      mf << "algorithm=" << kAlgorithmVersion << "\nworkers=" << jobs << "\n";
      mf << "started=" << now_string() << "\n";
    } else {
      mf << "resumed=" << now_string() << " workers=" << jobs << "\n";
    }
  }
  std::mutex sink_mx;
  std::ofstream partial(partial_path, std::ios::app);
  std::ofstream manifest(manifest_path, std::ios::app);
  opts.on_seed_done = [&](const std::string& seed, const std::vector<ClassRecord>& recs) {
    std::lock_guard<std::mutex> lk(sink_mx);
    for (const auto& r : recs) partial << format_record_line(r) << '\n';
    partial.flush();
    manifest << "seed " << seed << '\n';
    manifest.flush();
  };
  if (!quiet) {
    opts.progress = [&](std::size_t done, std::size_t total) {
      if (done % 50 == 0 || done == total)
        std::cerr << "\rseeds " << done << "/" << total << std::flush;
    };
  }
  auto recs = enumerate_polytopes(dim, max_volume, opts);
  if (!quiet) std::cerr << '\n';
  write_db(recs, out,
           {"dim=" + std::to_string(dim), "max_volume=" + std::to_string(max_volume),
            "algorithm=" + std::string(kAlgorithmVersion)});
  partial.close();
  manifest.close();
  std::remove(partial_path.c_str());
  std::remove(manifest_path.c_str());
  if (!quiet) std::cerr << recs.size() << " classes -> " << out << '\n';
}

std::vector<PropertyRecord> read_props_csv(const std::string& path,
                                           const std::vector<ClassRecord>& recs) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::map<std::string, PropertyRecord> by_key;
  std::string line;
  std::getline(in, line);  // header
  auto tri = [](const std::string& s) {
    if (s == "true" || s == "1") return TriState::True;
    if (s == "false" || s == "0") return TriState::False;
    return TriState::NotComputed;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string key, vol, pts, f[6];
    std::getline(ss, key, ',');
    std::getline(ss, vol, ',');
    std::getline(ss, pts, ',');
    for (auto& x : f) std::getline(ss, x, ',');
    PropertyRecord p;
    p.spanning = tri(f[0]);
    p.smooth = tri(f[1]);
    p.very_ample = tri(f[2]);
    p.idp = tri(f[3]);
    p.unimodular_cover = tri(f[4]);
    p.unimodular_triangulation = tri(f[5]);
    by_key[key] = p;
  }
  std::vector<PropertyRecord> out(recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    auto it = by_key.find(recs[i].key.bytes);
    if (it != by_key.end()) out[i] = it->second;
  }
  return out;
}

const char* tri_str(TriState t) {
  switch (t) {
    case TriState::True: return "true";
    case TriState::False: return "false";
    default: return "";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration and analysis of lattice polytopes by volume"};
  app.require_subcommand(1);

  auto* enumc = app.add_subcommand("enumerate", "enumerate all classes up to a volume bound");
  int e_dim = 3;
  long long e_k = 4;
  std::string e_out;
  int e_jobs = 1;
  bool e_resume = false, e_nofilter = false, e_quiet = false;
  enumc->add_option("--dim", e_dim, "dimension")->required();
  enumc->add_option("--max-volume", e_k, "volume bound K")->required();
  enumc->add_option("--out", e_out, "output database path")->required();
  enumc->add_option("--jobs", e_jobs, "worker threads");
  enumc->add_flag("--resume", e_resume, "resume from checkpoint files");
  enumc->add_flag("--no-biggest-filter", e_nofilter, "disable the biggest-simplex pruning");
  enumc->add_flag("--quiet", e_quiet, "suppress progress output");

  auto* simc = app.add_subcommand("simplices", "enumerate simplex classes only");
  int s_dim = 3;
  long long s_k = 4, s_exact = 0;
  std::string s_out;
  int s_jobs = 1;
  simc->add_option("--dim", s_dim, "dimension")->required();
  simc->add_option("--max-volume", s_k, "volume bound K")->required();
  simc->add_option("--exact-volume", s_exact, "keep only this exact volume");
  simc->add_option("--out", s_out, "output database path")->required();
  simc->add_option("--jobs", s_jobs, "worker threads");

  auto* anac = app.add_subcommand("analyze", "compute property flags for a database");
  std::string a_in, a_out, a_props = "spanning,smooth,va,idp,uc,ut";
  long long a_budget = 5000000;
  int a_jobs = 1, a_idp_deg = 0;
  anac->add_option("--in", a_in, "input database")->required();
  anac->add_option("--out", a_out, "output CSV")->required();
  anac->add_option("--props", a_props, "comma list: spanning,smooth,va,idp,uc,ut");
  anac->add_option("--budget", a_budget, "search node budget for uc/ut");
  anac->add_option("--idp-max-degree", a_idp_deg, "override the IDP check depth");
  anac->add_option("--jobs", a_jobs, "worker threads");

  auto* hc = app.add_subcommand("hstar", "h*-vectors of a database");
  std::string h_in, h_out;
  hc->add_option("--in", h_in, "input database")->required();
  hc->add_option("--out", h_out, "output CSV")->required();

  auto* cc = app.add_subcommand("conjectures", "inequality report over a database");
  std::string c_in, c_out;
  cc->add_option("--in", c_in, "input database")->required();
  cc->add_option("--out", c_out, "output report path")->required();

  auto* stc = app.add_subcommand("stats", "per-volume counts table");
  std::string st_in, st_props;
  bool st_smooth = false;
  stc->add_option("--in", st_in, "input database")->required();
  stc->add_option("--props", st_props, "analyze CSV to fill the property columns");
  stc->add_flag("--smooth-only", st_smooth, "restrict to smooth classes");

  auto* vc = app.add_subcommand("verify", "compare a database against the bundled tables");
  std::string v_in, v_props, v_table = "volume";
  vc->add_option("--in", v_in, "input database")->required();
  vc->add_option("--table", v_table, "fixture: volume | smooth");
  vc->add_option("--props", v_props, "analyze CSV (enables the property columns)");

  auto* dc = app.add_subcommand("diff", "compare two databases by canonical key");
  std::string d_a, d_b;
  dc->add_option("first", d_a, "database A")->required();
  dc->add_option("second", d_b, "database B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumc) {
      run_enumerate(e_dim, e_k, e_out, e_jobs, e_resume, !e_nofilter, e_quiet);
      return 0;
    }
    if (*simc) {
      auto table = enumerate_simplices_upto(s_dim, s_k, s_jobs);
      std::vector<ClassRecord> recs;
      for (long long v = 1; v <= s_k; ++v) {
        if (s_exact > 0 && v != s_exact) continue;
        for (const auto& [key, s] : table[static_cast<std::size_t>(v)].members) {
          ClassRecord r;
          r.dim = s_dim;
          r.vol = v;
          std::tie(r.key, r.verts) = canonical_key_and_vertices(s);
          r.n_points = s.count_points(false);
          recs.push_back(std::move(r));
        }
      }
      std::sort(recs.begin(), recs.end(), [](const ClassRecord& a, const ClassRecord& b) {
        return std::make_pair(a.vol, a.key.bytes) < std::make_pair(b.vol, b.key.bytes);
      });
      write_db(recs, s_out,
               {"dim=" + std::to_string(s_dim), "max_volume=" + std::to_string(s_k),
                "simplices_only=1", "algorithm=" + std::string(kAlgorithmVersion)});
      std::cerr << recs.size() << " simplex classes -> " << s_out << '\n';
      return 0;
    }
    if (*anac) {
      auto recs = read_db(a_in);
      AnalyzeOptions o;
      o.spanning = a_props.find("spanning") != std::string::npos;
      o.smooth = a_props.find("smooth") != std::string::npos;
      o.va = a_props.find("va") != std::string::npos;
      o.idp = a_props.find("idp") != std::string::npos;
      o.uc = a_props.find("uc") != std::string::npos;
      o.ut = a_props.find("ut") != std::string::npos;
      o.budget = a_budget;
      o.idp_max_degree = a_idp_deg;
      o.jobs = a_jobs;
      auto props = analyze_records(recs, o);
      std::ofstream out(a_out);
      out << "key,volume,points,spanning,smooth,va,idp,uc,ut\n";
      for (std::size_t i = 0; i < recs.size(); ++i) {
        Polytope64 p = convex_hull(recs[i].verts);
        out << recs[i].key.bytes << ',' << recs[i].vol << ',' << p.count_points(false) << ','
            << tri_str(props[i].spanning) << ',' << tri_str(props[i].smooth) << ','
            << tri_str(props[i].very_ample) << ',' << tri_str(props[i].idp) << ','
            << tri_str(props[i].unimodular_cover) << ','
            << tri_str(props[i].unimodular_triangulation) << '\n';
      }
      return 0;
    }
    if (*hc) {
      auto recs = read_db(h_in);
      std::ofstream out(h_out);
      bool header = false;
      for (const auto& r : recs) {
        Polytope64 p = convex_hull(r.verts);
        auto hs = h_star(p);
        if (!header) {
          out << "key,volume,points,interior";
          for (std::size_t i = 0; i < hs.h.size(); ++i) out << ",h" << i;
          out << ",degree\n";
          header = true;
        }
        out << r.key.bytes << ',' << r.vol << ',' << p.count_points(false) << ','
            << p.count_points(true);
        for (const auto& c : hs.h) out << ',' << c;
        out << ',' << hs.degree << '\n';
      }
      return 0;
    }
    if (*cc) {
      auto recs = read_db(c_in);
      std::ofstream out(c_out);
      long long with_interior = 0;
      long long pass[6] = {0, 0, 0, 0, 0, 0};
      std::vector<std::string> star_violations;
      std::map<std::string, std::string> exception_keys;
      long long kmax = 1;
      for (const auto& r : recs) kmax = std::max(kmax, static_cast<long long>((r.vol - 15) / 18 + 1));
      for (const auto& w : conj_main_exceptions(kmax)) {
        auto key = canonical_key(w.poly);
        std::ostringstream hs;
        for (const auto& c : w.expected_h) hs << c << ' ';
        exception_keys[key.bytes] = hs.str();
      }
      for (const auto& r : recs) {
        if (r.dim != 3) continue;
        Polytope64 p = convex_hull(r.verts);
        auto h = h_star(p).h;
        if (h[3] < 1) continue;
        ++with_interior;
        auto rep = check_conj_main(h);
        const bool vals[6] = {rep.i1, rep.i2, rep.i3, rep.i4, rep.i5, rep.i4star};
        for (int i = 0; i < 6; ++i)
          if (vals[i]) ++pass[i];
        if (!rep.i4star) {
          bool known = exception_keys.count(r.key.bytes) > 0;
          star_violations.push_back(r.key.bytes + (known ? " (listed exception)" : " (UNLISTED)"));
        }
      }
      out << "polytopes with interior points: " << with_interior << '\n';
      const char* names[6] = {"(1)", "(2)", "(3)", "(4)", "(5)", "(4*)"};
      for (int i = 0; i < 6; ++i)
        out << names[i] << " pass " << pass[i] << " fail " << (with_interior - pass[i]) << '\n';
      out << "(4*) violations: " << star_violations.size() << '\n';
      for (const auto& s : star_violations) out << "  " << s << '\n';
      return 0;
    }
    if (*stc) {
      auto recs = read_db(st_in);
      std::optional<std::vector<PropertyRecord>> props;
      if (!st_props.empty()) props = read_props_csv(st_props, recs);
      if (st_smooth) {
        std::vector<ClassRecord> filtered;
        std::vector<PropertyRecord> fprops;
        for (std::size_t i = 0; i < recs.size(); ++i) {
          Polytope64 p = convex_hull(recs[i].verts);
          if (!is_smooth(p)) continue;
          filtered.push_back(recs[i]);
          if (props) fprops.push_back((*props)[i]);
        }
        recs = std::move(filtered);
        if (props) *props = std::move(fprops);
      }
      auto t = stats_table(recs, props ? &*props : nullptr);
      std::cout << render_stats(t);
      return 0;
    }
    if (*vc) {
      auto recs = read_db(v_in);
      if (recs.empty()) {
        std::cerr << "empty database\n";
        return 1;
      }
      int dim = recs[0].dim;
      i64 maxv = 0;
      for (const auto& r : recs) maxv = std::max(maxv, r.vol);
      std::vector<DiffEntry> diffs;
      if (v_table == "volume") {
        std::optional<std::vector<PropertyRecord>> props;
        if (!v_props.empty()) props = read_props_csv(v_props, recs);
        auto t = stats_table(recs, props ? &*props : nullptr);
        diffs = verify_against_fixture(dim, t, maxv, props ? 5 : 0);
      } else if (v_table == "smooth") {
        const auto& want = fixtures::smooth_counts(dim);
        std::map<i64, long long> got;
        for (const auto& r : recs)
          if (is_smooth(convex_hull(r.verts))) ++got[r.vol];
        for (std::size_t i = 0; i < want.size() && static_cast<i64>(i) < maxv; ++i) {
          long long g = got.count(static_cast<i64>(i) + 1) ? got[static_cast<i64>(i) + 1] : 0;
          if (g != want[i])
            diffs.push_back(
                {"d=" + std::to_string(dim) + " V=" + std::to_string(i + 1) + " smooth", want[i],
                 g});
        }
      } else {
        std::cerr << "unknown fixture table '" << v_table << "'\n";
        return 2;
      }
      if (diffs.empty()) {
        std::cout << "verify: OK (" << recs.size() << " classes)\n";
        return 0;
      }
      for (const auto& d : diffs)
        std::cout << "MISMATCH " << d.where << ": expected " << d.expected << ", got " << d.actual
                  << '\n';
      return 1;
    }
    if (*dc) {
      auto a = read_db(d_a);
      auto b = read_db(d_b);
      std::set<std::string> ka, kb;
      for (const auto& r : a) ka.insert(r.key.bytes);
      for (const auto& r : b) kb.insert(r.key.bytes);
      std::vector<std::string> only_a, only_b;
      std::set_difference(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(only_a));
      std::set_difference(kb.begin(), kb.end(), ka.begin(), ka.end(), std::back_inserter(only_b));
      std::cout << "A: " << ka.size() << " classes, B: " << kb.size() << " classes\n";
      std::cout << "only in A: " << only_a.size() << ", only in B: " << only_b.size() << '\n';
      for (std::size_t i = 0; i < only_a.size() && i < 5; ++i)
        std::cout << "  A " << only_a[i] << '\n';
      for (std::size_t i = 0; i < only_b.size() && i < 5; ++i)
        std::cout << "  B " << only_b[i] << '\n';
      return only_a.empty() && only_b.empty() ? 0 : 1;
    }
  } catch (const CLI::Error&) {
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
