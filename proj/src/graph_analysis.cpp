#include "lpa/graph_analysis.hpp"

#include <algorithm>

namespace lpa {

bool is_hereditary(const Graph& g, const VertexSet& h) {
  for (int e = 0; e < g.edge_count(); ++e)
    if (h.count(g.edge(e).src) && !h.count(g.edge(e).dst)) return false;
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& h) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v) || h.count(v)) continue;
    bool all_in = true;
    for (int e : g.out_edges(v))
      if (!h.count(g.edge(e).dst)) {
        all_in = false;
        break;
      }
    if (all_in) return false;
  }
  return true;
}

VertexSet hs_closure(const Graph& g, VertexSet x) {
  for (int v : x)
    if (v < 0 || v >= g.vertex_count()) throw UsageError("subset member out of range");
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < g.edge_count(); ++e)
      if (x.count(g.edge(e).src) && x.insert(g.edge(e).dst).second) changed = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.is_sink(v) || x.count(v)) continue;
      bool all_in = true;
      for (int e : g.out_edges(v))
        if (!x.count(g.edge(e).dst)) {
          all_in = false;
          break;
        }
      if (all_in) {
        x.insert(v);
        changed = true;
      }
    }
  }
  return x;
}

std::vector<VertexSet> enumerate_hs_subsets(const Graph& g, HsEnumOptions opts) {
  int n = g.vertex_count();
  if (n > opts.max_vertices && !opts.force)
    throw CapError("subset enumeration refused for |V| = " + std::to_string(n) +
                   " > " + std::to_string(opts.max_vertices) + "; pass --force to override");
  std::vector<VertexSet> out;
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    VertexSet h;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) h.insert(v);
    if (is_hereditary(g, h) && is_saturated(g, h)) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

bool only_trivial_hs(const Graph& g) {
  if (g.vertex_count() == 0) throw UsageError("only_trivial_hs requires a nonempty graph");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (static_cast<int>(hs_closure(g, {v}).size()) != g.vertex_count()) return false;
  return true;
}

namespace {

// DFS from the base, visiting only vertices >= base, each source at most
// once; an edge closing back to the base completes a cycle.
void cycles_from(const Graph& g, int base, std::vector<int>& path,
                 std::vector<char>& on_path, std::vector<Cycle>& out,
                 long long cap) {
  int at = path.empty() ? base : g.edge(path.back()).dst;
  for (int e : g.out_edges(at)) {
    int to = g.edge(e).dst;
    if (to == base) {
      path.push_back(e);
      out.push_back(Cycle{base, path});
      if (static_cast<long long>(out.size()) > cap)
        throw CapError("cycle enumeration exceeded the cap of " + std::to_string(cap));
      path.pop_back();
    } else if (to > base && !on_path[to]) {
      on_path[to] = 1;
      path.push_back(e);
      cycles_from(g, base, path, on_path, out, cap);
      path.pop_back();
      on_path[to] = 0;
    }
  }
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, CycleEnumOptions opts) {
  std::vector<Cycle> out;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<int> path;
  for (int base = 0; base < g.vertex_count(); ++base) {
    on_path.assign(g.vertex_count(), 0);
    cycles_from(g, base, path, on_path, out, opts.max_cycles);
  }
  return out;
}

std::optional<int> cycle_has_exit(const Graph& g, const Cycle& c) {
  if (!cycle_valid(g, c)) throw UsageError("not a valid cycle of this graph");
  for (int ce : c.edges)
    for (int f : g.out_edges(g.edge(ce).src))
      if (f != ce) return f;
  return std::nullopt;
}

std::vector<Cycle> exitless_cycles(const Graph& g) {
  // Follow the unique out-edges through out-degree-1 vertices; each such
  // functional cycle, rooted at its least vertex, has no exit.
  std::vector<Cycle> out;
  std::vector<char> done(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (done[v] || g.out_degree(v) != 1) continue;
    std::vector<int> trail;
    std::vector<int> visited_at(g.vertex_count(), -1);
    int at = v;
    while (g.out_degree(at) == 1 && visited_at[at] < 0) {
      visited_at[at] = static_cast<int>(trail.size());
      int e = g.out_edges(at)[0];
      trail.push_back(e);
      at = g.edge(e).dst;
    }
    if (g.out_degree(at) == 1 && visited_at[at] >= 0) {
      std::vector<int> loop(trail.begin() + visited_at[at], trail.end());
      int base_pos = 0;
      for (size_t i = 1; i < loop.size(); ++i)
        if (g.edge(loop[i]).src < g.edge(loop[base_pos]).src) base_pos = static_cast<int>(i);
      std::rotate(loop.begin(), loop.begin() + base_pos, loop.end());
      Cycle c{g.edge(loop[0]).src, loop};
      bool fresh = !done[c.base];
      for (int e : c.edges) done[g.edge(e).src] = 1;
      if (fresh) out.push_back(std::move(c));
    }
    for (int e : trail) done[g.edge(e).src] = 1;
  }
  std::sort(out.begin(), out.end(),
            [](const Cycle& a, const Cycle& b) { return a.base < b.base; });
  return out;
}

ExitCheck every_cycle_has_exit(const Graph& g) {
  auto bad = exitless_cycles(g);
  if (bad.empty()) return {true, std::nullopt};
  return {false, bad.front()};
}

ExitCheck every_cycle_has_exit_enumerative(const Graph& g, CycleEnumOptions opts) {
  for (const Cycle& c : enumerate_cycles(g, opts))
    if (!cycle_has_exit(g, c)) return {false, c};
  return {true, std::nullopt};
}

namespace {

void csp_extend(const Graph& g, int base, Path& p, int max_len, std::vector<Path>& out) {
  int at = path_range(g, p);
  for (int e : g.out_edges(at)) {
    if (p.length() >= max_len) return;
    int to = g.edge(e).dst;
    p.edges.push_back(e);
    if (to == base)
      out.push_back(p);  // closed; extending further would revisit the base
    else
      csp_extend(g, base, p, max_len, out);
    p.edges.pop_back();
  }
}

}  // namespace

std::vector<Path> closed_simple_paths(const Graph& g, int v, int max_len) {
  if (v < 0 || v >= g.vertex_count()) throw UsageError("vertex out of range");
  std::vector<Path> out;
  Path p = vertex_path(v);
  csp_extend(g, v, p, max_len, out);
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
    return compare_paths(g, a, b) < 0;
  });
  return out;
}

}  // namespace lpa
