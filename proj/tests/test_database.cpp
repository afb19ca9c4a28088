#include <catch2/catch_amalgamated.hpp>

#include "latpoly/database.hpp"
#include "test_util.hpp"

#include <cstdio>
#include <fstream>

using namespace latpoly;
using namespace latpoly::testutil;

namespace {
std::string tmpfile_path(const char* tag) {
  return std::string("/tmp/latpoly_test_") + tag + "_" + std::to_string(::getpid()) + ".db";
}
}  // namespace

TEST_CASE("database round trip") {
  auto recs = enumerate_polytopes(3, 2, {});
  REQUIRE(recs.size() == 4);
  auto path = tmpfile_path("roundtrip");
  write_db(recs, path, {"dim=3", "max_volume=2"});
  auto back = read_db(path);
  REQUIRE(back.size() == recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    REQUIRE(back[i].dim == recs[i].dim);
    REQUIRE(back[i].vol == recs[i].vol);
    REQUIRE(back[i].verts == recs[i].verts);
    REQUIRE(back[i].key == recs[i].key);
  }
  // writing the same records twice is byte-identical
  auto path2 = tmpfile_path("roundtrip2");
  write_db(back, path2, {"dim=3", "max_volume=2"});
  std::ifstream a(path), b(path2);
  std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  REQUIRE(sa == sb);
  std::remove(path.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("empty database round trips") {
  auto path = tmpfile_path("empty");
  write_db({}, path);
  REQUIRE(read_db(path).empty());
  std::remove(path.c_str());
}

TEST_CASE("corrupted line reports its number") {
  auto path = tmpfile_path("corrupt");
  {
    std::ofstream out(path);
    out << "# latpoly-db 1\n";
    out << "2;1;0,0|1,0|0,1\n";
    out << "2;x;0,0|1,0|0,1\n";
  }
  try {
    read_db(path);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    REQUIRE(e.line == 3);
  }
  std::remove(path.c_str());
}

TEST_CASE("stats table matches the published d=3 K=5 rows") {
  auto recs = enumerate_polytopes(3, 5, {});
  AnalyzeOptions o;
  o.jobs = 2;
  auto props = analyze_records(recs, o);
  auto t = stats_table(recs, &props);
  REQUIRE(verify_against_fixture(3, t, 5).empty());
  // explicit row check: volume 4 -> 17, 15, 14, 14, 14, 14
  REQUIRE(t.rows[3].volume == 4);
  REQUIRE(t.rows[3].tot == 17);
  REQUIRE(*t.rows[3].props[0] == 15);
  for (int c = 1; c < 5; ++c) REQUIRE(*t.rows[3].props[static_cast<std::size_t>(c)] == 14);
}

TEST_CASE("not-computed cells render blank") {
  auto recs = enumerate_polytopes(3, 3, {});
  AnalyzeOptions o;
  o.uc = false;
  o.ut = false;
  auto props = analyze_records(recs, o);
  auto t = stats_table(recs, &props);
  for (const auto& r : t.rows) {
    REQUIRE(r.props[0].has_value());
    REQUIRE_FALSE(r.props[3].has_value());
    REQUIRE_FALSE(r.props[4].has_value());
  }
  auto rendered = render_stats(t);
  REQUIRE(rendered.find("Volume\tTOT") == 0);
}

TEST_CASE("verify reports mismatches as data") {
  auto recs = enumerate_polytopes(3, 3, {});
  recs.pop_back();  // deliberately drop a class
  auto t = stats_table(recs, nullptr);
  auto diffs = verify_against_fixture(3, t, 3);
  REQUIRE_FALSE(diffs.empty());
  REQUIRE(diffs[0].where.find("V=3 TOT") != std::string::npos);
  REQUIRE(diffs[0].expected == 6);
  REQUIRE(diffs[0].actual == 5);
}
