#include "graphbench/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace graphbench {

namespace {

constexpr char kMagic[4] = {'G', 'B', 'E', '1'};

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::uint64_t parse_id(const std::string& tok, std::size_t line_no) {
  if (!tok.empty() && tok[0] == '-')
    parse_fail(line_no, "negative vertex id '" + tok + "'");
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    parse_fail(line_no, "non-integer token '" + tok + "'");
  return v;
}

template <typename T>
void put_le(std::ostream& out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.write(buf, sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  char buf[sizeof(T)];
  in.read(buf, sizeof(T));
  if (in.gcount() != sizeof(T)) throw FormatError("truncated binary stream");
  T v;
  std::memcpy(&v, buf, sizeof(T));
  return v;
}

std::ofstream open_out(const std::filesystem::path& path, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return in;
}

}  // namespace

EdgeList parse_snap(std::istream& in, bool weighted, bool directed) {
  EdgeList out;
  out.directed = directed;
  std::uint64_t max_id = 0;
  bool any = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string a, b, c, extra;
    ls >> a >> b;
    if (b.empty()) parse_fail(line_no, "expected two vertex ids");
    std::uint64_t u = parse_id(a, line_no);
    std::uint64_t v = parse_id(b, line_no);
    if (u > std::numeric_limits<VertexId>::max() ||
        v > std::numeric_limits<VertexId>::max())
      parse_fail(line_no, "vertex id exceeds supported range");
    if (ls >> c) {
      if (!weighted)
        parse_fail(line_no, "unexpected weight token '" + c + "'");
      double w = 0.0;
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), w);
      if (ec != std::errc{} || ptr != c.data() + c.size() || !(w >= 0.0))
        parse_fail(line_no, "bad weight token '" + c + "'");
      out.weights.push_back(w);
    } else if (weighted) {
      parse_fail(line_no, "missing weight column");
    }
    out.edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    max_id = std::max({max_id, u, v});
    any = true;
  }
  out.num_vertices = any ? max_id + 1 : 0;
  return out;
}

EdgeList parse_snap_file(const std::filesystem::path& path, bool weighted,
                         bool directed) {
  auto in = open_in(path, false);
  return parse_snap(in, weighted, directed);
}

void write_snap(const EdgeList& edges, std::ostream& out,
                const std::string& provenance) {
  out << "# " << (provenance.empty() ? "graphbench edge list" : provenance)
      << "\n";
  out << "# vertices " << edges.num_vertices << " edges " << edges.num_edges()
      << (edges.directed ? " directed" : " undirected") << "\n";
  for (std::size_t i = 0; i < edges.edges.size(); ++i) {
    out << edges.edges[i].first << ' ' << edges.edges[i].second;
    if (edges.weighted()) out << ' ' << format_double(edges.weights[i]);
    out << '\n';
  }
}

void write_snap_file(const EdgeList& edges, const std::filesystem::path& path,
                     const std::string& provenance) {
  auto out = open_out(path, false);
  write_snap(edges, out, provenance);
}

void write_binary(const EdgeList& edges, std::ostream& out) {
  out.write(kMagic, 4);
  std::uint8_t flags = (edges.weighted() ? 1 : 0) | (edges.directed ? 2 : 0);
  put_le(out, flags);
  put_le<std::uint64_t>(out, edges.num_vertices);
  put_le<std::uint64_t>(out, edges.num_edges());
  for (auto [u, v] : edges.edges) {
    put_le<std::uint64_t>(out, u);
    put_le<std::uint64_t>(out, v);
  }
  if (edges.weighted())
    for (double w : edges.weights) put_le(out, w);
}

void write_binary_file(const EdgeList& edges,
                       const std::filesystem::path& path) {
  auto out = open_out(path, true);
  write_binary(edges, out);
}

EdgeList read_binary(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (in.gcount() != 4 || std::memcmp(magic, kMagic, 3) != 0)
    throw FormatError("bad magic");
  if (magic[3] != kMagic[3])
    throw FormatError("unsupported format version");
  auto flags = get_le<std::uint8_t>(in);
  if (flags & ~0x3u) throw FormatError("unknown flag bits");
  EdgeList out;
  out.directed = (flags & 2) != 0;
  out.num_vertices = get_le<std::uint64_t>(in);
  std::uint64_t m = get_le<std::uint64_t>(in);
  out.edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    auto u = get_le<std::uint64_t>(in);
    auto v = get_le<std::uint64_t>(in);
    if (u > std::numeric_limits<VertexId>::max() ||
        v > std::numeric_limits<VertexId>::max())
      throw FormatError("vertex id exceeds supported range");
    out.edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (flags & 1) {
    out.weights.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i)
      out.weights.push_back(get_le<double>(in));
  }
  // declared edge count must exhaust the payload
  in.peek();
  if (!in.eof()) throw FormatError("trailing bytes after declared edge count");
  return out;
}

EdgeList read_binary_file(const std::filesystem::path& path) {
  auto in = open_in(path, true);
  return read_binary(in);
}

void write_roots_file(const RootSet& roots, const std::filesystem::path& path) {
  auto out = open_out(path, false);
  for (VertexId r : roots.roots) out << r << '\n';
}

std::vector<VertexId> read_roots_file(const std::filesystem::path& path) {
  auto in = open_in(path, false);
  std::vector<VertexId> roots;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    roots.push_back(static_cast<VertexId>(parse_id(line, line_no)));
  }
  return roots;
}

namespace {

DatasetBundle write_bundle(EdgeList edges, const std::string& base_name,
                           const std::string& provenance,
                           const std::filesystem::path& out_dir,
                           const HomogenizeOptions& opts) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  DatasetBundle b;
  b.base_name = base_name;
  b.provenance = provenance;
  b.snap_text = out_dir / (base_name + ".snap");
  b.weighted_text = out_dir / (base_name + ".wsnap");
  b.binary_edges = out_dir / (base_name + ".gbe");
  b.roots_file = out_dir / (base_name + ".roots");
  b.num_vertices = edges.num_vertices;
  b.num_edges = edges.num_edges();
  b.directed = edges.directed;

  EdgeList unweighted = edges;
  unweighted.weights.clear();
  write_snap_file(unweighted, b.snap_text, provenance);

  if (!edges.weighted()) assign_weights(edges, opts.weight_seed);
  write_snap_file(edges, b.weighted_text, provenance + " weighted");
  write_binary_file(edges, b.binary_edges);

  CsrGraph g = build_csr(edges, /*dedupe=*/true, /*drop_self_loops=*/true);
  RootSet roots = select_roots(g, opts.root_count, opts.root_seed);
  write_roots_file(roots, b.roots_file);

  nlohmann::json manifest = {
      {"base_name", b.base_name},
      {"provenance", b.provenance},
      {"num_vertices", b.num_vertices},
      {"num_edges", b.num_edges},
      {"directed", edges.directed},
      {"root_count", roots.roots.size()},
      {"weight_seed", opts.weight_seed},
      {"root_seed", opts.root_seed},
      {"files",
       {{"snap", b.snap_text.filename().string()},
        {"weighted", b.weighted_text.filename().string()},
        {"binary", b.binary_edges.filename().string()},
        {"roots", b.roots_file.filename().string()}}},
  };
  std::ofstream mf(out_dir / "manifest.json");
  mf << manifest.dump(2) << '\n';
  return b;
}

}  // namespace

DatasetBundle homogenize(const KroneckerSpec& spec,
                         const std::filesystem::path& out_dir,
                         const HomogenizeOptions& opts) {
  EdgeList edges = generate_kronecker(spec);
  std::string base = "kron-s" + std::to_string(spec.scale) + "-e" +
                     std::to_string(spec.edge_factor) + "-seed" +
                     std::to_string(spec.seed);
  std::string prov = "synthetic kronecker scale=" + std::to_string(spec.scale) +
                     " edge_factor=" + std::to_string(spec.edge_factor) +
                     " seed=" + std::to_string(spec.seed);
  return write_bundle(std::move(edges), base, prov, out_dir, opts);
}

DatasetBundle homogenize(const std::filesystem::path& snap_file,
                         const std::filesystem::path& out_dir,
                         const HomogenizeOptions& opts) {
  EdgeList edges = parse_snap_file(snap_file, /*weighted=*/false,
                                   /*directed=*/true);
  std::string base = snap_file.stem().string();
  std::string prov = "converted from " + snap_file.filename().string();
  return write_bundle(std::move(edges), base, prov, out_dir, opts);
}

DatasetBundle load_bundle(const std::filesystem::path& dir) {
  std::ifstream mf(dir / "manifest.json");
  if (!mf)
    throw std::runtime_error("no manifest.json in " + dir.string());
  nlohmann::json manifest = nlohmann::json::parse(mf);
  DatasetBundle b;
  b.base_name = manifest.at("base_name");
  b.provenance = manifest.at("provenance");
  b.num_vertices = manifest.at("num_vertices");
  b.num_edges = manifest.at("num_edges");
  b.directed = manifest.at("directed");
  const auto& files = manifest.at("files");
  b.snap_text = dir / files.at("snap").get<std::string>();
  b.weighted_text = dir / files.at("weighted").get<std::string>();
  b.binary_edges = dir / files.at("binary").get<std::string>();
  b.roots_file = dir / files.at("roots").get<std::string>();
  return b;
}

}  // namespace graphbench
