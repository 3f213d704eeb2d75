#pragma once

#include <optional>
#include <set>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// Vertex subsets are sets of vertex indices of one fixed graph.
using VertexSet = std::set<int>;

/// True iff s(e) in H implies r(e) in H for every edge.
bool is_hereditary(const Graph& g, const VertexSet& h);

/// True iff every regular vertex whose out-edge ranges all lie in H is in H.
/// Sinks impose no constraint.
bool is_saturated(const Graph& g, const VertexSet& h);

/// Least hereditary and saturated superset: alternates forward edge closure
/// and saturation sweeps to the fixed point.
VertexSet hs_closure(const Graph& g, VertexSet x);

struct HsEnumOptions {
  int max_vertices = 20;
  bool force = false;
};

/// All hereditary and saturated subsets, in subset-size-then-lexicographic
/// order. Brute force over 2^|V| subsets; refuses above the vertex bound
/// unless forced.
std::vector<VertexSet> enumerate_hs_subsets(const Graph& g, HsEnumOptions opts = {});

/// True iff the only hereditary saturated subsets are {} and V, decided via
/// singleton closures: hs_closure({v}) = V for every v.
bool only_trivial_hs(const Graph& g);

struct CycleEnumOptions {
  long long max_cycles = 100000;
};

/// All cycles up to rotation, each with base = least vertex in the rotation.
/// Parallel edges yield distinct cycles. Throws CapError past max_cycles.
std::vector<Cycle> enumerate_cycles(const Graph& g, CycleEnumOptions opts = {});

/// An exit edge for the cycle: some f with s(f) on the cycle and f distinct
/// from the cycle edge at that vertex.
std::optional<int> cycle_has_exit(const Graph& g, const Cycle& c);

struct ExitCheck {
  bool all_have_exits = true;
  std::optional<Cycle> counterexample;
};

/// Fast route: a cycle has no exit iff every vertex on it has out-degree
/// exactly 1, so exitless cycles are exactly the cycles of the out-degree-1
/// subgraph.
ExitCheck every_cycle_has_exit(const Graph& g);

/// Oracle route via full cycle enumeration; cross-validated against the fast
/// route in tests.
ExitCheck every_cycle_has_exit_enumerative(const Graph& g, CycleEnumOptions opts = {});

/// All exitless cycles (pairwise vertex-disjoint).
std::vector<Cycle> exitless_cycles(const Graph& g);

/// Closed paths based at v of length <= max_len that do not revisit v
/// internally (CSP(v) up to the length bound).
std::vector<Path> closed_simple_paths(const Graph& g, int v, int max_len);

}  // namespace lpa
