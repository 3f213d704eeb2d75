#include "lpa/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "json.hpp"

namespace lpa {

namespace {

bool identifier_shaped(std::string_view id) {
  if (id.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(id[0])) && id[0] != '_') return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Graph Graph::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph document: ") + e.what(),
                     static_cast<int>(e.byte));
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw ValidationError("graph document must be an object with 'vertices' and 'edges'");
  if (!doc["vertices"].is_array() || !doc["edges"].is_array())
    throw ValidationError("'vertices' and 'edges' must be arrays");

  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw ValidationError("vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::array<std::string, 3>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("src") || !e.contains("dst"))
      throw ValidationError("each edge must be an object {id, src, dst}");
    edges.push_back({e["id"].get<std::string>(), e["src"].get<std::string>(),
                     e["dst"].get<std::string>()});
  }
  return make(std::move(vertices), std::move(edges));
}

Graph Graph::make(std::vector<std::string> vertices,
                  std::vector<std::array<std::string, 3>> edges) {
  Graph g;
  std::sort(vertices.begin(), vertices.end());
  for (size_t i = 0; i < vertices.size(); ++i) {
    const auto& id = vertices[i];
    if (!identifier_shaped(id))
      throw ValidationError("vertex id '" + id + "' is not identifier-shaped");
    if (i > 0 && vertices[i - 1] == id)
      throw ValidationError("duplicate vertex id '" + id + "'");
  }
  g.vertices_ = std::move(vertices);
  for (size_t i = 0; i < g.vertices_.size(); ++i)
    g.vertex_index_[g.vertices_[i]] = static_cast<int>(i);

  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (size_t i = 0; i < edges.size(); ++i) {
    const auto& [id, src, dst] = edges[i];
    if (!identifier_shaped(id))
      throw ValidationError("edge id '" + id + "' is not identifier-shaped");
    if (i > 0 && edges[i - 1][0] == id)
      throw ValidationError("duplicate edge id '" + id + "'");
    if (g.vertex_index_.count(id))
      throw ValidationError("edge id '" + id + "' collides with a vertex id");
    auto s = g.vertex_index_.find(src);
    if (s == g.vertex_index_.end())
      throw ValidationError("edge '" + id + "' has dangling source '" + src + "'");
    auto r = g.vertex_index_.find(dst);
    if (r == g.vertex_index_.end())
      throw ValidationError("edge '" + id + "' has dangling destination '" + dst + "'");
    g.edges_.push_back(Edge{id, s->second, r->second});
    g.edge_index_[id] = static_cast<int>(i);
  }
  g.finish();
  return g;
}

void Graph::finish() {
  out_.assign(vertices_.size(), {});
  for (size_t i = 0; i < edges_.size(); ++i)
    out_[edges_[i].src].push_back(static_cast<int>(i));  // edges_ sorted by id

  // Kahn on vertices; a leftover vertex lies on a cycle.
  std::vector<int> indeg(vertices_.size(), 0);
  for (const auto& e : edges_) ++indeg[e.dst];
  std::vector<int> stack;
  for (size_t v = 0; v < vertices_.size(); ++v)
    if (indeg[v] == 0) stack.push_back(static_cast<int>(v));
  size_t seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int e : out_[v])
      if (--indeg[edges_[e].dst] == 0) stack.push_back(edges_[e].dst);
  }
  acyclic_ = seen == vertices_.size();
}

std::optional<int> Graph::vertex_index(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  return it == vertex_index_.end() ? std::nullopt : std::optional<int>(it->second);
}

std::optional<int> Graph::edge_index(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  return it == edge_index_.end() ? std::nullopt : std::optional<int>(it->second);
}

std::string Graph::to_json_text() const {
  nlohmann::json doc;
  doc["vertices"] = vertices_;
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : edges_)
    doc["edges"].push_back({{"id", e.id}, {"src", vertices_[e.src]}, {"dst", vertices_[e.dst]}});
  return doc.dump();
}

namespace {

std::string padded(const char* prefix, int i, int n) {
  std::string num = std::to_string(i);
  std::string width = std::to_string(n);
  std::string out = prefix;
  out.append(width.size() - num.size(), '0');
  return out + num;
}

}  // namespace

GraphPtr make_line_graph(int n) {
  if (n < 1) throw UsageError("line graph needs at least one vertex");
  std::vector<std::string> vs;
  std::vector<std::array<std::string, 3>> es;
  for (int i = 1; i <= n; ++i) vs.push_back(padded("v", i, n));
  for (int i = 1; i < n; ++i)
    es.push_back({padded("e", i, n), padded("v", i, n), padded("v", i + 1, n)});
  return std::make_shared<Graph>(Graph::make(std::move(vs), std::move(es)));
}

GraphPtr make_rose(int n) {
  if (n < 1) throw UsageError("rose graph needs at least one petal");
  std::vector<std::array<std::string, 3>> es;
  for (int i = 1; i <= n; ++i) es.push_back({padded("e", i, n), "v", "v"});
  return std::make_shared<Graph>(Graph::make({"v"}, std::move(es)));
}

GraphPtr make_loop() { return make_rose(1); }

bool path_valid(const Graph& g, const Path& p) {
  if (p.start < 0 || p.start >= g.vertex_count()) return false;
  int at = p.start;
  for (int e : p.edges) {
    if (e < 0 || e >= g.edge_count() || g.edge(e).src != at) return false;
    at = g.edge(e).dst;
  }
  return true;
}

int path_source(const Graph&, const Path& p) { return p.start; }

int path_range(const Graph& g, const Path& p) {
  return p.edges.empty() ? p.start : g.edge(p.edges.back()).dst;
}

std::string path_to_string(const Graph& g, const Path& p) {
  if (p.edges.empty()) return g.vertex_id(p.start);
  std::string out;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ' ';
    out += g.edge(p.edges[i]).id;
  }
  return out;
}

int compare_paths(const Graph&, const Path& a, const Path& b) {
  if (a.start != b.start) return a.start < b.start ? -1 : 1;
  if (a.edges != b.edges)
    return std::lexicographical_compare(a.edges.begin(), a.edges.end(),
                                        b.edges.begin(), b.edges.end())
               ? -1
               : 1;
  return 0;
}

std::optional<Path> concat(const Graph& g, const Path& p, const Path& q) {
  if (path_range(g, p) != q.start) return std::nullopt;
  Path out = p;
  out.edges.insert(out.edges.end(), q.edges.begin(), q.edges.end());
  return out;
}

bool path_is_prefix(const Path& pre, const Path& p) {
  if (pre.start != p.start || pre.edges.size() > p.edges.size()) return false;
  return std::equal(pre.edges.begin(), pre.edges.end(), p.edges.begin());
}

std::vector<VertexKind> classify_vertices(const Graph& g) {
  std::vector<VertexKind> out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    out[v] = g.is_sink(v) ? VertexKind::sink : VertexKind::regular;
  return out;
}

namespace {

void extend_paths(const Graph& g, Path& p, int max_len, std::vector<Path>& out) {
  out.push_back(p);
  if (p.length() >= max_len) return;
  for (int e : g.out_edges(path_range(g, p))) {
    p.edges.push_back(e);
    extend_paths(g, p, max_len, out);
    p.edges.pop_back();
  }
}

}  // namespace

std::vector<Path> paths_up_to(const Graph& g, int max_len) {
  if (max_len < 0) throw UsageError("paths_up_to requires max_len >= 0");
  std::vector<Path> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    Path p = vertex_path(v);
    extend_paths(g, p, max_len, out);
  }
  return out;
}

bool cycle_valid(const Graph& g, const Cycle& c) {
  if (c.edges.empty()) return false;
  Path p{c.base, c.edges};
  if (!path_valid(g, p)) return false;
  if (path_range(g, p) != c.base) return false;
  std::set<int> sources;
  for (int e : c.edges) {
    if (!sources.insert(g.edge(e).src).second) return false;
    if (g.edge(e).src < c.base) return false;  // base is the least vertex
  }
  return true;
}

}  // namespace lpa
