#include "lpa/equality.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "lpa/graph_analysis.hpp"

namespace lpa {

Element ck2_expand(const Element& x, int v) {
  if (!x.has_context()) throw UsageError("ck2_expand on an element without context");
  const Graph& g = *x.graph();
  if (v < 0 || v >= g.vertex_count()) throw UsageError("ck2_expand: vertex out of range");
  if (g.is_sink(v)) throw UsageError("ck2_expand: '" + g.vertex_id(v) + "' is a sink");
  std::vector<Monomial> out;
  for (const Monomial& m : x.terms()) {
    if (path_range(g, m.real) != v) {
      out.push_back(m);
      continue;
    }
    for (int e : g.out_edges(v)) {
      Monomial ext = m;
      ext.real.edges.push_back(e);
      ext.ghost.edges.push_back(e);
      out.push_back(std::move(ext));
    }
  }
  return Element::sum(x.graph(), x.semiring(), std::move(out));
}

Element ck2_expand_term(const Element& x, const Path& real, const Path& ghost) {
  if (!x.has_context()) throw UsageError("ck2_expand_term on an element without context");
  const Graph& g = *x.graph();
  std::vector<Monomial> out;
  bool found = false;
  for (const Monomial& m : x.terms()) {
    if (!found && m.real == real && m.ghost == ghost) {
      found = true;
      int v = path_range(g, m.real);
      if (g.is_sink(v))
        throw UsageError("ck2_expand_term: term ranges at a sink");
      for (int e : g.out_edges(v)) {
        Monomial ext = m;
        ext.real.edges.push_back(e);
        ext.ghost.edges.push_back(e);
        out.push_back(std::move(ext));
      }
      continue;
    }
    out.push_back(m);
  }
  if (!found) throw UsageError("ck2_expand_term: no term with the given key");
  return Element::sum(x.graph(), x.semiring(), std::move(out));
}

Element apply_expansion(const Element& x, const ExpansionStep& step) {
  if (step.term_key) return ck2_expand_term(x, step.term_key->first, step.term_key->second);
  return ck2_expand(x, step.vertex);
}

SinkNf sink_normal_form(const Element& x) {
  if (!x.has_context()) throw UsageError("sink_normal_form on an element without context");
  const Graph& g = *x.graph();
  if (!g.is_acyclic())
    throw UsageError("sink_normal_form requires an acyclic graph; use eq with a budget");
  SinkNf out{x, {}};
  for (;;) {
    int expand_at = -1;
    for (const Monomial& m : out.normal_form.terms()) {
      int r = path_range(g, m.real);
      if (!g.is_sink(r) && (expand_at < 0 || r < expand_at)) expand_at = r;
    }
    if (expand_at < 0) return out;
    out.normal_form = ck2_expand(out.normal_form, expand_at);
    out.steps.push_back(ExpansionStep{expand_at, std::nullopt});
  }
}

// ---------------------------------------------------------------------------
// Representation.

namespace {

// Per-graph data for the chosen representation: the resolution edge of each
// regular vertex (its least out-edge) and the designated shift edges, one per
// exitless cycle (the edge leaving the cycle's base). Following the
// resolution edge of every vertex of an exitless cycle walks the cycle, and
// folding a full traversal into the abstract index adds the base edge's
// shift, which realizes the integer orbit.
struct RepInfo {
  std::vector<int> resolution_edge;  // -1 for sinks
  std::vector<char> shift_edge;      // 1 for designated edges
};

RepInfo make_rep_info(const Graph& g) {
  RepInfo info;
  info.resolution_edge.assign(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!g.is_sink(v)) info.resolution_edge[v] = g.out_edges(v)[0];
  info.shift_edge.assign(g.edge_count(), 0);
  for (const Cycle& c : exitless_cycles(g)) info.shift_edge[c.edges[0]] = 1;
  return info;
}

// Folds trailing resolution edges into the abstract index.
void canonicalize(const RepInfo& info, const Graph& g, BasisVector& b) {
  while (!b.chain.empty()) {
    int last = b.chain.back();
    if (info.resolution_edge[g.edge(last).src] != last) break;
    b.chain.pop_back();
    if (info.shift_edge[last]) ++b.shift;
  }
}

// One resolution step: rewrites an abstract vector into its slot coordinates.
// The root stays put; the abstract index now refers to the slot's range.
// Precondition: b.chain is empty and b.vertex is regular.
void resolve_once(const RepInfo& info, BasisVector& b) {
  int e = info.resolution_edge[b.vertex];
  if (info.shift_edge[e]) --b.shift;
  b.chain.push_back(e);
}

// T_e: zero unless the vector is rooted at r(e); injects into the e-slot.
std::optional<BasisVector> apply_edge(const RepInfo& info, const Graph& g, int e,
                                      BasisVector b) {
  if (b.vertex != g.edge(e).dst) return std::nullopt;
  b.chain.insert(b.chain.begin(), e);
  b.vertex = g.edge(e).src;
  canonicalize(info, g, b);
  return b;
}

// T_{e*}: kills everything outside the e-slot, strips e otherwise.
std::optional<BasisVector> apply_ghost(const RepInfo& info, const Graph& g, int e,
                                       BasisVector b) {
  if (b.vertex != g.edge(e).src) return std::nullopt;  // s(e) is never a sink
  if (b.chain.empty()) resolve_once(info, b);
  if (b.chain.front() != e) return std::nullopt;
  b.chain.erase(b.chain.begin());
  b.vertex = g.edge(e).dst;
  canonicalize(info, g, b);
  return b;
}

// Operator word of one monomial applied to a vector: first the ghost word
// (strips the ghost path front to back), then the real word (prepends the
// real path back to front), with the vertex projections implied by the path
// endpoints.
std::optional<BasisVector> apply_monomial_word(const RepInfo& info, const Graph& g,
                                               const Monomial& m, BasisVector b) {
  if (b.vertex != path_source(g, m.ghost)) return std::nullopt;
  for (int e : m.ghost.edges) {
    auto next = apply_ghost(info, g, e, std::move(b));
    if (!next) return std::nullopt;
    b = std::move(*next);
  }
  for (auto it = m.real.edges.rbegin(); it != m.real.edges.rend(); ++it) {
    auto next = apply_edge(info, g, *it, std::move(b));
    if (!next) return std::nullopt;
    b = std::move(*next);
  }
  return b;
}

VectorCombo apply_element(const RepInfo& info, const Element& x, const BasisVector& b) {
  const Graph& g = *x.graph();
  const Semiring& s = *x.semiring();
  std::map<BasisVector, Scalar> acc;
  for (const Monomial& m : x.terms()) {
    auto v = apply_monomial_word(info, g, m, b);
    if (!v) continue;
    auto [it, fresh] = acc.emplace(std::move(*v), m.coeff);
    if (!fresh) it->second = s.add(it->second, m.coeff);
  }
  VectorCombo out;
  for (auto& [vec, c] : acc)
    if (!s.is_zero(c)) out.parts.emplace_back(vec, c);
  return out;
}

}  // namespace

std::string basis_vector_to_string(const Graph& g, const BasisVector& b) {
  std::string out = "(" + g.vertex_id(b.vertex) + "; slot [";
  for (size_t i = 0; i < b.chain.size(); ++i) {
    if (i) out += ' ';
    out += g.edge(b.chain[i]).id;
  }
  out += "]; index (" + std::to_string(b.shift) + ", " + g.vertex_id(b.tag) + "))";
  return out;
}

bool combo_equal(const Semiring& s, const VectorCombo& a, const VectorCombo& b) {
  if (a.parts.size() != b.parts.size()) return false;
  for (size_t i = 0; i < a.parts.size(); ++i) {
    if (a.parts[i].first != b.parts[i].first) return false;
    if (!s.eq(a.parts[i].second, b.parts[i].second)) return false;
  }
  return true;
}

VectorCombo rep_apply(const Element& x, const BasisVector& b) {
  if (!x.has_context()) throw UsageError("rep_apply on an element without context");
  const Graph& g = *x.graph();
  if (b.vertex < 0 || b.vertex >= g.vertex_count() || b.tag < 0 ||
      b.tag >= g.vertex_count() || !path_valid(g, Path{b.vertex, b.chain}))
    throw UsageError("malformed basis vector for this graph");
  return apply_element(make_rep_info(g), x, b);
}

std::vector<BasisVector> seed_vectors(const Graph& g) {
  std::vector<BasisVector> out;
  for (int v = 0; v < g.vertex_count(); ++v) out.push_back(BasisVector{v, {}, 0, v});
  return out;
}

std::optional<BasisVector> separate(const Element& x, const Element& y, int depth) {
  require_same_context(x, y);
  const Graph& g = *x.graph();
  RepInfo info = make_rep_info(g);

  std::set<int> op_edges;
  for (const Element* el : {&x, &y})
    for (const Monomial& m : el->terms()) {
      op_edges.insert(m.real.edges.begin(), m.real.edges.end());
      op_edges.insert(m.ghost.edges.begin(), m.ghost.edges.end());
    }

  std::set<BasisVector> seen;
  std::deque<BasisVector> frontier;
  auto differs = [&](const BasisVector& b) {
    return !combo_equal(*x.semiring(), apply_element(info, x, b),
                        apply_element(info, y, b));
  };
  for (const BasisVector& b : seed_vectors(g)) {
    if (differs(b)) return b;
    seen.insert(b);
    frontier.push_back(b);
  }
  constexpr size_t kVectorCap = 4096;
  for (int round = 0; round < depth && !frontier.empty(); ++round) {
    std::deque<BasisVector> next;
    for (const BasisVector& b : frontier) {
      for (int e : op_edges) {
        for (int dir = 0; dir < 2; ++dir) {
          auto img = dir == 0 ? apply_edge(info, g, e, b) : apply_ghost(info, g, e, b);
          if (!img || !seen.insert(*img).second) continue;
          if (differs(*img)) return *img;
          if (seen.size() <= kVectorCap) next.push_back(std::move(*img));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Decision procedure.

namespace {

struct ClosureNode {
  Element elem;
  int parent = -1;
  ExpansionStep step;
};

std::vector<ExpansionStep> trace_steps(const std::vector<ClosureNode>& nodes, int idx) {
  std::vector<ExpansionStep> steps;
  for (int at = idx; nodes[at].parent >= 0; at = nodes[at].parent)
    steps.push_back(nodes[at].step);
  std::reverse(steps.begin(), steps.end());
  return steps;
}

// Congruence-sound one-step expansions of an element: per term occurrence
// (the one-step context of a CK2 pair) and per vertex across all its terms
// (a composite that keeps round counts small).
std::vector<ExpansionStep> expansion_steps(const Element& x) {
  const Graph& g = *x.graph();
  std::vector<ExpansionStep> out;
  std::set<int> vertices;
  for (const Monomial& m : x.terms()) {
    int r = path_range(g, m.real);
    if (g.is_sink(r)) continue;
    out.push_back(ExpansionStep{r, std::make_pair(m.real, m.ghost)});
    vertices.insert(r);
  }
  for (int v : vertices)
    out.push_back(ExpansionStep{v, std::nullopt});
  return out;
}

// Deterministic alignment step: expand the expandable term with the
// shortest ghost part (first in term order on ties). Iterating this levels
// the ghost depths, which is a complete strategy on the single loop and a
// cheap accelerator elsewhere.
std::optional<ExpansionStep> greedy_alignment_step(const Element& x) {
  const Graph& g = *x.graph();
  const Monomial* best = nullptr;
  for (const Monomial& m : x.terms()) {
    if (g.is_sink(path_range(g, m.real))) continue;
    if (!best || m.ghost.length() < best->ghost.length()) best = &m;
  }
  if (!best) return std::nullopt;
  return ExpansionStep{path_range(g, best->real),
                       std::make_pair(best->real, best->ghost)};
}

}  // namespace

EqVerdict eq(const Element& x, const Element& y, int budget) {
  require_same_context(x, y);
  const Graph& g = *x.graph();
  const SemiringPtr s = x.semiring();

  if (g.is_acyclic()) {
    SinkNf nx = sink_normal_form(x);
    SinkNf ny = sink_normal_form(y);
    if (nx.normal_form.identical(ny.normal_form)) {
      EqVerdict v;
      v.tag = EqVerdict::Tag::equal;
      v.equal_evidence =
          EqualEvidence{nx.steps, ny.steps, nx.normal_form.to_string()};
      v.budget = budget;
      return v;
    }
    // Distinct sink normal forms separate on a vector reached through the
    // deepest ghost path of the normal forms, whose actions coincide with
    // the originals', so search from them with enough depth.
    int max_len = 1;
    for (const Element* el : {&nx.normal_form, &ny.normal_form})
      for (const Monomial& m : el->terms())
        max_len = std::max({max_len, m.real.length(), m.ghost.length()});
    auto sep = separate(nx.normal_form, ny.normal_form,
                        std::max(kDefaultSeparationDepth, max_len + 1));
    if (!sep)
      throw InternalError("eq: acyclic elements with distinct normal forms did not separate");
    EqVerdict v;
    v.tag = EqVerdict::Tag::distinct;
    v.separator = *sep;
    v.budget = budget;
    return v;
  }

  // Cyclic: bidirectional breadth-first CK2 closure, then separation.
  constexpr size_t kClosureCap = 4000;
  std::vector<ClosureNode> nodes[2];
  std::unordered_map<std::string, int> seen[2];
  std::deque<int> frontier[2];
  nodes[0].push_back({x, -1, {}});
  nodes[1].push_back({y, -1, {}});
  for (int side = 0; side < 2; ++side) {
    seen[side].emplace(nodes[side][0].elem.to_string(), 0);
    frontier[side].push_back(0);
  }
  auto meet = [&](int side, const std::string& key, int idx) -> std::optional<EqVerdict> {
    auto hit = seen[1 - side].find(key);
    if (hit == seen[1 - side].end()) return std::nullopt;
    EqVerdict v;
    v.tag = EqVerdict::Tag::equal;
    auto mine = trace_steps(nodes[side], idx);
    auto theirs = trace_steps(nodes[1 - side], hit->second);
    v.equal_evidence = side == 0 ? EqualEvidence{mine, theirs, key}
                                 : EqualEvidence{theirs, mine, key};
    v.budget = budget;
    return v;
  };
  if (auto v = meet(0, nodes[0][0].elem.to_string(), 0)) return *v;

  // Greedy alignment chains first: cheap, deterministic, and complete for
  // single-loop elements; their nodes seed the breadth-first closure.
  int chain_len = budget > 0 ? 8 * budget + 8 : 0;
  for (int side = 0; side < 2; ++side) {
    int at = 0;
    for (int i = 0; i < chain_len; ++i) {
      auto step = greedy_alignment_step(nodes[side][at].elem);
      if (!step || nodes[side].size() >= kClosureCap) break;
      Element ex = apply_expansion(nodes[side][at].elem, *step);
      std::string key = ex.to_string();
      auto it = seen[side].find(key);
      if (it != seen[side].end()) {
        at = it->second;
        continue;
      }
      nodes[side].push_back({std::move(ex), at, *step});
      at = static_cast<int>(nodes[side].size() - 1);
      seen[side].emplace(key, at);
      if (auto verdict = meet(side, key, at)) return *verdict;
      frontier[side].push_back(at);
    }
  }

  for (int round = 0; round < budget; ++round) {
    for (int side = 0; side < 2; ++side) {
      std::deque<int> next;
      for (int idx : frontier[side]) {
        for (const ExpansionStep& step : expansion_steps(nodes[side][idx].elem)) {
          Element ex = apply_expansion(nodes[side][idx].elem, step);
          std::string key = ex.to_string();
          if (seen[side].count(key) || nodes[side].size() >= kClosureCap) continue;
          nodes[side].push_back({std::move(ex), idx, step});
          int ni = static_cast<int>(nodes[side].size() - 1);
          seen[side].emplace(key, ni);
          if (auto verdict = meet(side, key, ni)) return *verdict;
          next.push_back(ni);
        }
      }
      frontier[side] = std::move(next);
    }
  }

  if (auto sep = separate(x, y)) {
    EqVerdict v;
    v.tag = EqVerdict::Tag::distinct;
    v.separator = *sep;
    v.budget = budget;
    return v;
  }
  EqVerdict v;
  v.tag = EqVerdict::Tag::unknown;
  v.budget = budget;
  return v;
}

std::vector<Element> ck2_closure(const Element& x, int budget, size_t cap) {
  if (!x.has_context()) throw UsageError("ck2_closure on an element without context");
  std::vector<Element> out{x};
  std::set<std::string> seen{x.to_string()};
  size_t frontier_begin = 0;
  for (int round = 0; round < budget; ++round) {
    size_t frontier_end = out.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const ExpansionStep& step : expansion_steps(out[i])) {
        if (out.size() >= cap) return out;
        Element ex = apply_expansion(out[i], step);
        if (seen.insert(ex.to_string()).second) out.push_back(std::move(ex));
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

bool replay_equal_evidence(const Element& x, const Element& y,
                           const EqualEvidence& ev) {
  Element lx = x, ly = y;
  for (const ExpansionStep& s : ev.left_steps) lx = apply_expansion(lx, s);
  for (const ExpansionStep& s : ev.right_steps) ly = apply_expansion(ly, s);
  return lx.identical(ly) && lx.to_string() == ev.common_form;
}

bool replay_separator(const Element& x, const Element& y, const BasisVector& b) {
  return !combo_equal(*x.semiring(), rep_apply(x, b), rep_apply(y, b));
}

}  // namespace lpa
