#pragma once

// Shared fixtures and generators for the test suites: canonical graphs,
// seeded random graphs and elements, and small independent oracles.

#include <random>
#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"
#include "lpa/graph_analysis.hpp"
#include "lpa/semiring.hpp"

namespace lpa::testing {

inline GraphPtr two_isolated_vertices() {
  return std::make_shared<Graph>(Graph::make({"u", "w"}, {}));
}

// Cycle u -> w -> u with an exit w -> x.
inline GraphPtr cycle_with_exit_graph() {
  return std::make_shared<Graph>(Graph::make(
      {"u", "w", "x"},
      {{"c1", "u", "w"}, {"c2", "w", "u"}, {"f", "w", "x"}}));
}

inline GraphPtr random_graph(std::mt19937& rng, int max_v, int max_e) {
  int nv = std::uniform_int_distribution<int>(1, max_v)(rng);
  int ne = std::uniform_int_distribution<int>(0, max_e)(rng);
  std::vector<std::string> vs;
  for (int i = 1; i <= nv; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<std::array<std::string, 3>> es;
  std::uniform_int_distribution<int> pick(0, nv - 1);
  for (int i = 1; i <= ne; ++i)
    es.push_back({"e" + std::to_string(i), vs[pick(rng)], vs[pick(rng)]});
  return std::make_shared<Graph>(Graph::make(std::move(vs), std::move(es)));
}

inline VertexSet random_subset(std::mt19937& rng, const Graph& g) {
  VertexSet s;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (std::uniform_int_distribution<int>(0, 1)(rng)) s.insert(v);
  return s;
}

// Nonzero coefficients for element generators. `positive` restricts to a
// zerosumfree subset so random elements stay outside the zero class.
inline Scalar random_coeff(std::mt19937& rng, const Semiring& s, bool positive) {
  std::vector<Scalar> pool;
  for (const auto& c : s.samples)
    if (!s.is_zero(c)) pool.push_back(c);
  if (positive) {
    std::vector<Scalar> pos;
    for (const auto& c : pool)
      if (!c.neg_inf && !(c.value < Rat::of(0))) pos.push_back(c);
    if (!pos.empty()) pool = std::move(pos);
  }
  return pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
}

inline Element random_element(std::mt19937& rng, GraphPtr g, SemiringPtr s,
                              int max_terms, int max_len, bool real_only,
                              bool positive_coeffs = true) {
  auto paths = paths_up_to(*g, max_len);
  std::vector<Monomial> terms;
  int want = std::uniform_int_distribution<int>(1, max_terms)(rng);
  std::uniform_int_distribution<size_t> pick(0, paths.size() - 1);
  for (int i = 0; i < want; ++i) {
    const Path& real = paths[pick(rng)];
    Path ghost = vertex_path(path_range(*g, real));
    if (!real_only) {
      std::vector<Path> ghosts;
      for (const Path& q : paths)
        if (path_range(*g, q) == path_range(*g, real)) ghosts.push_back(q);
      ghost = ghosts[std::uniform_int_distribution<size_t>(0, ghosts.size() - 1)(rng)];
    }
    terms.push_back({random_coeff(rng, *s, positive_coeffs), real, ghost});
  }
  return Element::sum(g, s, std::move(terms));
}

inline Element nonzero_random_element(std::mt19937& rng, GraphPtr g, SemiringPtr s,
                                      int max_terms, int max_len, bool real_only,
                                      bool positive_coeffs = true) {
  for (;;) {
    Element e = random_element(rng, g, s, max_terms, max_len, real_only, positive_coeffs);
    if (!e.is_zero()) return e;
  }
}

}  // namespace lpa::testing
