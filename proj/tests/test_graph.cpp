#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>

#include "lpa/graph.hpp"

using namespace lpa;

TEST_CASE("loading the single-loop document") {
  auto g = Graph::from_json_text(
      R"({"vertices":["v"],"edges":[{"id":"e","src":"v","dst":"v"}]})");
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 1);
  CHECK(!g.is_acyclic());
  CHECK(g.out_degree(0) == 1);
}

TEST_CASE("loading a single sink vertex") {
  auto g = Graph::from_json_text(R"({"vertices":["v"],"edges":[]})");
  CHECK(g.vertex_count() == 1);
  CHECK(g.is_sink(0));
  CHECK(g.is_acyclic());
}

TEST_CASE("dangling endpoints and duplicate ids are rejected") {
  CHECK_THROWS_AS(Graph::from_json_text(
                      R"({"vertices":["v"],"edges":[{"id":"e","src":"w","dst":"v"}]})"),
                  ValidationError);
  CHECK_THROWS_AS(Graph::from_json_text(R"({"vertices":["v","v"],"edges":[]})"),
                  ValidationError);
  CHECK_THROWS_AS(Graph::from_json_text(
                      R"({"vertices":["u","w"],"edges":[
                          {"id":"e","src":"u","dst":"w"},
                          {"id":"e","src":"w","dst":"u"}]})"),
                  ValidationError);
  CHECK_THROWS_AS(Graph::from_json_text("{"), ParseError);
}

TEST_CASE("vertex classification on the line graph") {
  auto g = make_line_graph(3);
  auto kinds = classify_vertices(*g);
  CHECK(kinds[*g->vertex_index("v1")] == VertexKind::regular);
  CHECK(kinds[*g->vertex_index("v2")] == VertexKind::regular);
  CHECK(kinds[*g->vertex_index("v3")] == VertexKind::sink);
}

TEST_CASE("a loop vertex is regular, an isolated vertex is a sink") {
  auto loop = make_loop();
  CHECK(classify_vertices(*loop)[0] == VertexKind::regular);
  auto isolated = Graph::make({"v"}, {});
  CHECK(classify_vertices(isolated)[0] == VertexKind::sink);
}

TEST_CASE("concat composes exactly when ranges meet") {
  auto g = make_line_graph(3);
  int e1 = *g->edge_index("e1"), e2 = *g->edge_index("e2");
  Path p1{*g->vertex_index("v1"), {e1}};
  Path p2{*g->vertex_index("v2"), {e2}};
  auto pq = concat(*g, p1, p2);
  REQUIRE(pq.has_value());
  CHECK(pq->edges == std::vector<int>{e1, e2});
  CHECK(!concat(*g, p1, p1).has_value());

  // Length-0 identities where composable.
  Path v2 = vertex_path(*g->vertex_index("v2"));
  CHECK(concat(*g, p1, v2) == p1);
  CHECK(concat(*g, v2, p2) == p2);
}

TEST_CASE("path enumeration is ordered and matches brute force") {
  auto a2 = make_line_graph(2);
  auto got = paths_up_to(*a2, 1);
  REQUIRE(got.size() == 3);
  CHECK(got[0] == vertex_path(*a2->vertex_index("v1")));
  CHECK(got[1] == Path{*a2->vertex_index("v1"), {*a2->edge_index("e1")}});
  CHECK(got[2] == vertex_path(*a2->vertex_index("v2")));

  auto loop = make_loop();
  auto lp = paths_up_to(*loop, 3);
  REQUIRE(lp.size() == 4);
  for (int len = 0; len <= 3; ++len) CHECK(lp[len].length() == len);

  // Oracle: independent recursive count of composable edge sequences.
  auto g = make_line_graph(4);
  std::function<long long(int, int)> count_from = [&](int v, int budget) {
    long long c = 1;
    if (budget == 0) return c;
    for (int e : g->out_edges(v)) c += count_from(g->edge(e).dst, budget - 1);
    return c;
  };
  long long expected = 0;
  for (int v = 0; v < g->vertex_count(); ++v) expected += count_from(v, 3);
  CHECK(static_cast<long long>(paths_up_to(*g, 3).size()) == expected);
}

TEST_CASE("every enumerated path is independently valid") {
  auto g = make_rose(2);
  for (const Path& p : paths_up_to(*g, 4)) CHECK(path_valid(*g, p));
}

TEST_CASE("path count is monotone in the bound and stabilizes when acyclic") {
  auto g = make_line_graph(4);
  size_t prev = 0;
  for (int n = 0; n <= 6; ++n) {
    size_t now = paths_up_to(*g, n).size();
    CHECK(now >= prev);
    prev = now;
  }
  CHECK(paths_up_to(*g, 3).size() == paths_up_to(*g, 6).size());
}

TEST_CASE("concat is associative where defined") {
  auto g = make_rose(2);
  auto paths = paths_up_to(*g, 2);
  for (const auto& a : paths)
    for (const auto& b : paths)
      for (const auto& c : paths) {
        auto ab = concat(*g, a, b);
        auto bc = concat(*g, b, c);
        if (ab && bc) {
          auto left = concat(*g, *ab, c);
          auto right = concat(*g, a, *bc);
          REQUIRE(left.has_value());
          REQUIRE(right.has_value());
          CHECK(*left == *right);
        }
      }
}

TEST_CASE("builders produce the expected shapes") {
  auto a4 = make_line_graph(4);
  CHECK(a4->vertex_count() == 4);
  CHECK(a4->edge_count() == 3);
  CHECK(a4->is_acyclic());
  auto rose = make_rose(3);
  CHECK(rose->vertex_count() == 1);
  CHECK(rose->edge_count() == 3);
  CHECK(!rose->is_acyclic());
}

TEST_CASE("graph json round-trips") {
  auto g = make_line_graph(3);
  auto g2 = Graph::from_json_text(g->to_json_text());
  CHECK(g2.vertex_count() == g->vertex_count());
  CHECK(g2.edge_count() == g->edge_count());
  CHECK(g2.to_json_text() == g->to_json_text());
}
