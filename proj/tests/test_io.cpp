#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "graphbench/datagen.hpp"
#include "graphbench/io.hpp"

using namespace graphbench;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
  fs::path p = fs::temp_directory_path() / ("graphbench-io-" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse snap basics") {
  std::istringstream in("# comment\n0 1\n1 2\n");
  EdgeList e = parse_snap(in);
  CHECK(e.num_vertices == 3);
  REQUIRE(e.num_edges() == 2);
  CHECK(e.edges[0] == std::pair<VertexId, VertexId>{0, 1});
  CHECK(e.edges[1] == std::pair<VertexId, VertexId>{1, 2});
}

TEST_CASE("max-id rule leaves gaps isolated") {
  std::istringstream in("0\t5\n");
  EdgeList e = parse_snap(in);
  CHECK(e.num_vertices == 6);
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream bad_tok("0 1\nx 2\n");
  CHECK_THROWS_WITH_AS(parse_snap(bad_tok), doctest::Contains("line 2"),
                       ParseError);
  std::istringstream neg("0 -1\n");
  CHECK_THROWS_AS(parse_snap(neg), ParseError);
  std::istringstream wtok("0 1 0.5\n");
  CHECK_THROWS_WITH_AS(parse_snap(wtok, /*weighted=*/false),
                       doctest::Contains("weight"), ParseError);
  std::istringstream missing_w("0 1\n");
  CHECK_THROWS_AS(parse_snap(missing_w, /*weighted=*/true), ParseError);
}

TEST_CASE("snap round trip, unweighted and weighted") {
  EdgeList e;
  e.num_vertices = 3;
  e.directed = true;
  e.edges = {{0, 1}, {1, 2}, {2, 0}};

  std::stringstream s1;
  write_snap(e, s1);
  EdgeList back = parse_snap(s1);
  CHECK(back.edges == e.edges);
  CHECK(back.num_vertices == e.num_vertices);

  e.weights = {0.5, 0.125, 1.0 / 3.0};
  std::stringstream s2;
  write_snap(e, s2);
  EdgeList wback = parse_snap(s2, /*weighted=*/true);
  CHECK(wback.edges == e.edges);
  CHECK(wback.weights == e.weights);  // shortest round-trip decimals
}

TEST_CASE("binary round trip is exact") {
  EdgeList e;
  e.num_vertices = 4;
  e.edges = {{0, 1}, {2, 3}, {1, 1}};
  e.weights = {0.25, 1e-300, 0.6180339887498949};
  std::stringstream s(std::ios::in | std::ios::out | std::ios::binary);
  write_binary(e, s);
  EdgeList back = read_binary(s);
  CHECK(back.edges == e.edges);
  CHECK(back.weights == e.weights);
  CHECK(back.num_vertices == e.num_vertices);
  CHECK(back.directed == e.directed);
}

TEST_CASE("binary format rejects corruption") {
  EdgeList e;
  e.num_vertices = 2;
  e.edges = {{0, 1}};
  std::stringstream s(std::ios::in | std::ios::out | std::ios::binary);
  write_binary(e, s);
  std::string bytes = s.str();

  {
    std::istringstream bad(bytes.substr(0, bytes.size() - 3));
    CHECK_THROWS_AS(read_binary(bad), FormatError);
  }
  {
    std::string magic = bytes;
    magic[0] = 'X';
    std::istringstream bad(magic);
    CHECK_THROWS_WITH_AS(read_binary(bad), doctest::Contains("magic"),
                         FormatError);
  }
  {
    std::string ver = bytes;
    ver[3] = '2';
    std::istringstream bad(ver);
    CHECK_THROWS_WITH_AS(read_binary(bad), doctest::Contains("version"),
                         FormatError);
  }
  {
    std::string extra = bytes + "zz";
    std::istringstream bad(extra);
    CHECK_THROWS_WITH_AS(read_binary(bad), doctest::Contains("trailing"),
                         FormatError);
  }
}

TEST_CASE("kronecker round trip through both formats keeps arc multiset") {
  KroneckerSpec spec;
  spec.scale = 12;
  spec.seed = 8;
  EdgeList e = generate_kronecker(spec);

  std::stringstream txt;
  write_snap(e, txt);
  EdgeList via_text = parse_snap(txt, false, e.directed);
  std::stringstream bin(std::ios::in | std::ios::out | std::ios::binary);
  write_binary(e, bin);
  EdgeList via_bin = read_binary(bin);

  std::multiset<std::pair<VertexId, VertexId>> m0(e.edges.begin(),
                                                  e.edges.end());
  std::multiset<std::pair<VertexId, VertexId>> m1(via_text.edges.begin(),
                                                  via_text.edges.end());
  std::multiset<std::pair<VertexId, VertexId>> m2(via_bin.edges.begin(),
                                                  via_bin.edges.end());
  CHECK(m0 == m1);
  CHECK(m0 == m2);
}

TEST_CASE("homogenize writes a complete, reproducible bundle") {
  KroneckerSpec spec;
  spec.scale = 10;
  spec.seed = 4;
  fs::path dir = temp_dir("bundle");
  DatasetBundle b = homogenize(spec, dir);

  CHECK(fs::exists(b.snap_text));
  CHECK(fs::exists(b.weighted_text));
  CHECK(fs::exists(b.binary_edges));
  CHECK(fs::exists(b.roots_file));
  CHECK(read_roots_file(b.roots_file).size() == 32);

  auto before = slurp(b.binary_edges) + slurp(b.weighted_text) +
                slurp(b.snap_text) + slurp(b.roots_file);
  DatasetBundle b2 = homogenize(spec, dir);  // idempotent rewrite
  auto after = slurp(b2.binary_edges) + slurp(b2.weighted_text) +
               slurp(b2.snap_text) + slurp(b2.roots_file);
  CHECK(before == after);

  DatasetBundle loaded = load_bundle(dir);
  CHECK(loaded.num_vertices == 1024);
  CHECK(loaded.base_name == b.base_name);
}

TEST_CASE("homogenize propagates infeasible root selection") {
  fs::path dir = temp_dir("empty");
  fs::path src = dir / "empty.snap";
  std::ofstream(src) << "# nothing\n";
  CHECK_THROWS(homogenize(src, dir / "out"));
}

TEST_CASE("homogenized snap source gets reproducible weights") {
  fs::path dir = temp_dir("snap-src");
  fs::path src = dir / "toy.snap";
  std::ofstream(src) << "0 1\n1 2\n2 0\n0 2\n1 0\n2 1\n";
  DatasetBundle a = homogenize(src, dir / "a", {.root_count = 3});
  DatasetBundle b = homogenize(src, dir / "b", {.root_count = 3});
  CHECK(slurp(a.weighted_text) == slurp(b.weighted_text));
  EdgeList w = parse_snap_file(a.weighted_text, true);
  CHECK(w.num_edges() == 6);
}
