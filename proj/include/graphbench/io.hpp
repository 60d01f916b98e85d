#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphbench/datagen.hpp"
#include "graphbench/edge_list.hpp"

namespace graphbench {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// SNAP text: '#' comment lines, whitespace-separated ids, optional third
/// weight column when `weighted` is requested. num_vertices = max id + 1.
EdgeList parse_snap(std::istream& in, bool weighted = false,
                    bool directed = true);
EdgeList parse_snap_file(const std::filesystem::path& path,
                         bool weighted = false, bool directed = true);

void write_snap(const EdgeList& edges, std::ostream& out,
                const std::string& provenance = "");
void write_snap_file(const EdgeList& edges, const std::filesystem::path& path,
                     const std::string& provenance = "");

/// Binary edge list: magic "GBE1", u8 flags (bit0 weighted, bit1 directed),
/// u64le num_vertices, u64le num_edges, num_edges x (u64le src, u64le dst),
/// then num_edges x f64le weights when weighted.
void write_binary(const EdgeList& edges, std::ostream& out);
void write_binary_file(const EdgeList& edges,
                       const std::filesystem::path& path);
EdgeList read_binary(std::istream& in);
EdgeList read_binary_file(const std::filesystem::path& path);

void write_roots_file(const RootSet& roots, const std::filesystem::path& path);
std::vector<VertexId> read_roots_file(const std::filesystem::path& path);

/// One homogenized dataset on disk: every format variant plus roots,
/// describing the same graph.
struct DatasetBundle {
  std::string base_name;
  std::filesystem::path snap_text;
  std::filesystem::path weighted_text;
  std::filesystem::path binary_edges;
  std::filesystem::path roots_file;
  std::uint64_t num_vertices = 0;
  std::uint64_t num_edges = 0;
  bool directed = false;
  std::string provenance;
};

struct HomogenizeOptions {
  std::size_t root_count = 32;
  std::uint64_t weight_seed = 1;
  std::uint64_t root_seed = 1;
};

DatasetBundle homogenize(const KroneckerSpec& spec,
                         const std::filesystem::path& out_dir,
                         const HomogenizeOptions& opts = {});
DatasetBundle homogenize(const std::filesystem::path& snap_file,
                         const std::filesystem::path& out_dir,
                         const HomogenizeOptions& opts = {});

/// Reads a bundle previously written by homogenize (via its manifest).
DatasetBundle load_bundle(const std::filesystem::path& dir);

}  // namespace graphbench
