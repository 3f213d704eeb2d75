#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

struct Edge {
  std::string id;
  int src = -1;
  int dst = -1;
};

/// Finite directed graph (V, E, s, r). Vertices and edges are stored sorted
/// by id, so index order coincides with lexicographic id order; everything
/// downstream (path enumeration, term ordering, witness reporting) relies on
/// that. Immutable after construction.
class Graph {
 public:
  /// Parses the JSON document schema:
  ///   {"vertices": ["v", ...], "edges": [{"id","src","dst"}, ...]}
  /// Ids must be unique, identifier-shaped, and edge endpoints must exist.
  static Graph from_json_text(const std::string& text);

  /// Programmatic construction; edges given as (id, src, dst) triples.
  static Graph make(std::vector<std::string> vertices,
                    std::vector<std::array<std::string, 3>> edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_id(int v) const { return vertices_.at(v); }
  const Edge& edge(int e) const { return edges_.at(e); }
  std::optional<int> vertex_index(std::string_view id) const;
  std::optional<int> edge_index(std::string_view id) const;

  /// Out-edges of v in edge-id order.
  const std::vector<int>& out_edges(int v) const { return out_.at(v); }
  int out_degree(int v) const { return static_cast<int>(out_.at(v).size()); }
  bool is_sink(int v) const { return out_.at(v).empty(); }
  bool is_acyclic() const { return acyclic_; }

  std::string to_json_text() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
  bool acyclic_ = true;

  void finish();  // sorts, indexes, validates, computes acyclicity
};

using GraphPtr = std::shared_ptr<const Graph>;

/// A_n: v1 -> v2 -> ... -> vn.
GraphPtr make_line_graph(int n);
/// Rose with n petal loops at a single vertex.
GraphPtr make_rose(int n);
/// Single vertex with a single loop.
GraphPtr make_loop();

/// A path: a start vertex plus a composable (possibly empty) edge sequence.
/// The empty sequence is the length-0 path at `start`.
struct Path {
  int start = -1;
  std::vector<int> edges;

  int length() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const Path& a, const Path& b) = default;
};

inline Path vertex_path(int v) { return Path{v, {}}; }

bool path_valid(const Graph& g, const Path& p);
int path_source(const Graph& g, const Path& p);
int path_range(const Graph& g, const Path& p);
std::string path_to_string(const Graph& g, const Path& p);

/// Lexicographic order: start id first, then the edge-id sequence
/// (a proper prefix precedes its extensions).
int compare_paths(const Graph& g, const Path& a, const Path& b);

/// Defined iff r(p) = s(q); the undefined case is distinct from a zero
/// element and is reported as nullopt.
std::optional<Path> concat(const Graph& g, const Path& p, const Path& q);

/// True iff `pre` is a prefix of `p` (same start, initial edge segment).
bool path_is_prefix(const Path& pre, const Path& p);

enum class VertexKind { sink, regular };

/// Finite graphs have no infinite emitters, so every vertex is a sink or
/// regular.
std::vector<VertexKind> classify_vertices(const Graph& g);

/// All paths of length <= max_len in the deterministic global order.
std::vector<Path> paths_up_to(const Graph& g, int max_len);

/// Closed path whose source vertices are pairwise distinct, identified up to
/// rotation; `base` is the least vertex id in the rotation and edges start
/// there.
struct Cycle {
  int base = -1;
  std::vector<int> edges;

  friend bool operator==(const Cycle& a, const Cycle& b) = default;
};

bool cycle_valid(const Graph& g, const Cycle& c);

}  // namespace lpa
