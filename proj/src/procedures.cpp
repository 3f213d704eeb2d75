#include "lpa/procedures.hpp"

#include <algorithm>
#include <random>

#include "lpa/graph_analysis.hpp"

namespace lpa {

bool verify_certificate(const ReductionCertificate& c, int budget) {
  Element product = elem_mul(elem_mul(c.left, c.input), c.right);
  Element target = Element::vertex(c.input.graph(), c.input.semiring(), c.target_vertex);
  return eq(product, target, budget).is_equal();
}

namespace {

Element path_star(const GraphPtr& g, const SemiringPtr& s, const Path& p) {
  return involute(Element::path(g, s, p));
}

// Power of a closed path as a single monomial element.
Element closed_path_power(const GraphPtr& g, const SemiringPtr& s, const Path& c, int n) {
  Path acc = vertex_path(c.start);
  for (int i = 0; i < n; ++i) {
    auto next = concat(*g, acc, c);
    if (!next) throw InternalError("closed path power failed to compose");
    acc = *next;
  }
  return Element::path(g, s, acc);
}

// Largest n with c^n a prefix of p.
int leading_power(const Path& c, const Path& p) {
  int n = 0;
  size_t at = 0;
  while (at + c.edges.size() <= p.edges.size() &&
         std::equal(c.edges.begin(), c.edges.end(), p.edges.begin() + at)) {
    ++n;
    at += c.edges.size();
  }
  return n;
}

// Shortest-then-lexicographic representative of CSP(v); the bound |V| covers
// the shortest closed simple path whenever one exists.
std::optional<Path> least_csp(const Graph& g, int v) {
  for (int len = 1; len <= g.vertex_count(); ++len) {
    auto csps = closed_simple_paths(g, v, len);
    if (!csps.empty()) return csps.front();
  }
  return std::nullopt;
}

// First exit along a closed path: edges e_1..e_{j-1} of c followed by an
// edge f != e_j with the same source.
std::optional<Path> exit_path(const Graph& g, const Path& c) {
  for (size_t j = 0; j < c.edges.size(); ++j) {
    int ej = c.edges[j];
    for (int f : g.out_edges(g.edge(ej).src)) {
      if (f == ej) continue;
      Path z{c.start, {c.edges.begin(), c.edges.begin() + j}};
      z.edges.push_back(f);
      return z;
    }
  }
  return std::nullopt;
}

}  // namespace

ReductionCertificate real_to_vertex(const Element& alpha) {
  if (!alpha.has_context()) throw UsageError("real_to_vertex: element without context");
  const GraphPtr& g = alpha.graph();
  const SemiringPtr& s = alpha.semiring();
  if (alpha.is_zero()) throw UsageError("real_to_vertex requires a nonzero element");
  if (!is_real(alpha)) throw UsageError("real_to_vertex requires a real element");
  if (classify(*s) == Classification::general)
    throw UsageError("real_to_vertex requires semifield coefficients");
  if (auto check = every_cycle_has_exit(*g); !check.all_have_exits)
    throw UsageError("real_to_vertex requires every cycle to have an exit; cycle at '" +
                     g->vertex_id(check.counterexample->base) + "' has none");

  ReductionCertificate cert;
  cert.input = alpha;

  // Phase 1: a term path with no proper prefix among the term paths
  // (shortest first, then lexicographic, so prefixes precede extensions and
  // the first minimal path qualifies).
  std::vector<Path> term_paths;
  for (const Monomial& m : alpha.terms()) term_paths.push_back(m.real);
  std::sort(term_paths.begin(), term_paths.end(), [&](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return compare_paths(*g, a, b) < 0;
  });
  Path p = term_paths.front();
  for (const Path& cand : term_paths) {
    bool has_proper_prefix = false;
    for (const Path& other : term_paths)
      if (other.length() < cand.length() && path_is_prefix(other, cand)) {
        has_proper_prefix = true;
        break;
      }
    if (!has_proper_prefix) {
      p = cand;
      break;
    }
  }
  cert.trace.push_back("prefix-selection");
  int v = path_range(*g, p);
  Element v_elem = Element::vertex(g, s, v);

  Element left = path_star(g, s, p);
  Element right = v_elem;
  Element reduced = elem_mul(elem_mul(left, alpha), right);

  // reduced = lambda v + closed-path terms based at v.
  Scalar lambda = s->zero;
  bool residue = false;
  for (const Monomial& m : reduced.terms()) {
    if (m.real.length() == 0)
      lambda = m.coeff;
    else
      residue = true;
  }
  if (s->is_zero(lambda))
    throw InternalError("real_to_vertex: vertex coefficient vanished");

  if (residue) {
    // Phase 2: conjugate with a high power of the least closed simple path;
    // mixed closed paths die, pure powers survive.
    auto c = least_csp(*g, v);
    if (!c) throw InternalError("real_to_vertex: closed-path terms without a CSP");
    int max_power = 0;
    for (const Monomial& m : reduced.terms())
      if (m.real.length() > 0) max_power = std::max(max_power, leading_power(*c, m.real));
    int n = max_power + 1;
    Element c_n = closed_path_power(g, s, *c, n);
    Element c_star_n = involute(c_n);
    left = elem_mul(c_star_n, left);
    right = elem_mul(right, c_n);
    reduced = elem_mul(elem_mul(c_star_n, reduced), c_n);
    cert.trace.push_back("csp-power");

    residue = false;
    for (const Monomial& m : reduced.terms())
      if (m.real.length() > 0) residue = true;

    if (residue) {
      // Phase 3: leave through an exit of c; the exit path kills every
      // remaining power of c.
      auto z = exit_path(*g, *c);
      if (!z) throw InternalError("real_to_vertex: closed simple path has no exit");
      Element z_elem = Element::path(g, s, *z);
      left = elem_mul(path_star(g, s, *z), left);
      right = elem_mul(right, z_elem);
      cert.trace.push_back("exit-path");
      cert.target_vertex = path_range(*g, *z);
    } else {
      cert.target_vertex = v;
    }
  } else {
    cert.target_vertex = v;
  }

  cert.left = scale(s->invert(lambda), left);
  cert.right = right;
  return cert;
}

ExtractionResult extract_real(const Element& alpha) {
  if (!alpha.has_context()) throw UsageError("extract_real: element without context");
  if (alpha.is_zero()) throw UsageError("extract_real requires a nonzero element");
  const GraphPtr& g = alpha.graph();
  const SemiringPtr& s = alpha.semiring();

  ExtractionResult out;
  out.real_part = alpha;

  auto measure = [&](const Element& x) {
    std::vector<int> ghosts;
    for (const Monomial& m : x.terms()) ghosts.push_back(m.ghost.length());
    std::sort(ghosts.rbegin(), ghosts.rend());
    return ghosts;  // (term count, descending ghost lengths) under lex compare
  };

  while (!is_real(out.real_part)) {
    std::vector<int> before = measure(out.real_part);

    // The first ghost-bearing term names the working vertex.
    int w = -1;
    for (const Monomial& m : out.real_part.terms())
      if (m.ghost.length() > 0) {
        w = path_source(*g, m.ghost);
        break;
      }
    Element w_elem = Element::vertex(g, s, w);
    Element at_w = elem_mul(out.real_part, w_elem);
    if (!at_w.identical(out.real_part)) {
      out.real_part = at_w;
      out.trail.push_back(Monomial{s->one, vertex_path(w), vertex_path(w)});
      continue;  // term count strictly dropped
    }

    // All ghost sources sit at w now; multiply by the first out-edge that
    // keeps the element nonzero. Every surviving positive ghost shrinks.
    bool advanced = false;
    for (int e : g->out_edges(w)) {
      Element next = elem_mul(out.real_part, Element::edge(g, s, e));
      if (next.is_zero()) continue;
      out.real_part = std::move(next);
      out.trail.push_back(Monomial{s->one, Path{w, {e}},
                                   vertex_path(g->edge(e).dst)});
      advanced = true;
      break;
    }
    if (!advanced)
      throw UsageError(
          "extract_real: every edge multiple vanished; the element is congruent "
          "to zero and has no real extraction");

    std::vector<int> after = measure(out.real_part);
    if (after.size() == before.size() && !(after < before))
      throw InternalError("extract_real: measure failed to decrease");
  }
  return out;
}

MatrixIsoReport line_graph_matrix_iso(int n, const SemiringPtr& s, int cap) {
  if (n < 1) throw UsageError("matrix dimension must be at least 1");
  if (n > cap)
    throw CapError("matrix-iso refused for n = " + std::to_string(n) + " > cap " +
                   std::to_string(cap));
  MatrixIsoReport report;
  report.n = n;
  GraphPtr g = make_line_graph(n);

  // Unique path from each vertex into the sink; the canonical sink monomials
  // p_i p_j^* play the elementary matrices E_{i,j}.
  std::vector<Path> to_sink(n);
  for (int v = 0; v < n; ++v) {
    Path p = vertex_path(v);
    while (!g->is_sink(path_range(*g, p))) p.edges.push_back(g->out_edges(path_range(*g, p))[0]);
    to_sink[v] = p;
  }
  auto unit = [&](int i, int j) {
    return Element::monomial(g, s, s->one, to_sink[i], to_sink[j]);
  };

  report.basis_count = n * n;

  // Generators land on the elementary matrices.
  for (int v = 0; v < n; ++v) {
    auto nf = sink_normal_form(Element::vertex(g, s, v));
    if (!nf.normal_form.identical(unit(v, v)))
      report.failures.push_back("vertex " + g->vertex_id(v) + " does not map to E_{" +
                                std::to_string(v + 1) + "," + std::to_string(v + 1) + "}");
    report.generator_map.push_back(g->vertex_id(v) + " -> E_{" + std::to_string(v + 1) +
                                   "," + std::to_string(v + 1) + "}");
  }
  for (int e = 0; e < g->edge_count(); ++e) {
    int i = g->edge(e).src, j = g->edge(e).dst;
    auto nf = sink_normal_form(Element::edge(g, s, e));
    if (!nf.normal_form.identical(unit(i, j)))
      report.failures.push_back("edge " + g->edge(e).id + " does not map to E_{" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + "}");
    auto nf_star = sink_normal_form(Element::ghost_edge(g, s, e));
    if (!nf_star.normal_form.identical(unit(j, i)))
      report.failures.push_back("ghost edge " + g->edge(e).id +
                                "^* does not map to E_{" + std::to_string(j + 1) + "," +
                                std::to_string(i + 1) + "}");
    report.generator_map.push_back(g->edge(e).id + " -> E_{" + std::to_string(i + 1) +
                                   "," + std::to_string(j + 1) + "}");
  }

  // Full product table: E_{i,j} E_{k,l} = [j == k] E_{i,l}, checked at the
  // canonical-form level.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Element prod = elem_mul(unit(i, j), unit(k, l));
          Element want = j == k ? unit(i, l) : Element::zero(g, s);
          Element prod_nf = sink_normal_form(prod).normal_form;
          if (!prod_nf.identical(want))
            report.failures.push_back(
                "E_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "} E_{" +
                std::to_string(k + 1) + "," + std::to_string(l + 1) + "} mismatch");
          ++report.products_checked;
        }

  report.ok = report.failures.empty();
  return report;
}

RoseLeavittReport rose_leavitt_check(int n, const SemiringPtr& s) {
  if (n < 1) throw UsageError("rose check requires at least one petal");
  RoseLeavittReport report;
  report.n = n;
  GraphPtr g = make_rose(n);
  Element v = Element::vertex(g, s, 0);

  // x_i = e_i^*, y_i = e_i; x_i y_j = [i == j] v by monomial arithmetic.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element prod = elem_mul(Element::ghost_edge(g, s, i), Element::edge(g, s, j));
      Element want = i == j ? v : Element::zero(g, s);
      if (!prod.identical(want))
        report.failures.push_back("x_" + std::to_string(i + 1) + " y_" +
                                  std::to_string(j + 1) + " != delta");
      ++report.delta_relations_checked;
    }

  // sum y_i x_i = v through one CK2 expansion.
  Element sum = Element::zero(g, s);
  for (int i = 0; i < n; ++i)
    sum = elem_add(sum, elem_mul(Element::edge(g, s, i), Element::ghost_edge(g, s, i)));
  report.unit_relation_ok = eq(sum, v, 1).is_equal();
  if (!report.unit_relation_ok)
    report.failures.push_back("sum y_i x_i != 1 within budget 1");

  report.ok = report.failures.empty();
  return report;
}

Element loop_laurent_eval(const LaurentPoly& f, const GraphPtr& loop,
                          const SemiringPtr& s) {
  if (loop->vertex_count() != 1 || loop->edge_count() != 1)
    throw UsageError("loop_laurent_eval expects the single-loop graph");
  std::vector<Monomial> terms;
  for (const auto& [k, coeff] : f) {
    if (s->is_zero(coeff)) continue;
    Path real = vertex_path(0), ghost = vertex_path(0);
    for (long long i = 0; i < k; ++i) real.edges.push_back(0);
    for (long long i = 0; i < -k; ++i) ghost.edges.push_back(0);
    terms.push_back(Monomial{coeff, std::move(real), std::move(ghost)});
  }
  return Element::sum(loop, s, std::move(terms));
}

LaurentReport laurent_demo(const SemiringPtr& s, std::uint64_t seed, int pairs,
                           int eq_budget) {
  LaurentReport report;
  GraphPtr loop = make_loop();
  std::mt19937_64 rng(seed);

  std::vector<Scalar> nonzero;
  for (const auto& c : s->samples)
    if (!s->is_zero(c)) nonzero.push_back(c);

  auto random_poly = [&]() {
    LaurentPoly f;
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<size_t> pick(0, nonzero.size() - 1);
    for (long long k = -3; k <= 3; ++k)
      if (coin(rng) == 0) f[k] = nonzero[pick(rng)];
    return f;
  };
  auto poly_add = [&](const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly h = f;
    for (const auto& [k, c] : g) {
      auto it = h.find(k);
      if (it == h.end())
        h[k] = c;
      else
        it->second = s->add(it->second, c);
    }
    return h;
  };
  auto poly_mul = [&](const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly h;
    for (const auto& [k, c] : f)
      for (const auto& [l, d] : g) {
        Scalar prod = s->mul(c, d);
        auto it = h.find(k + l);
        if (it == h.end())
          h[k + l] = prod;
        else
          it->second = s->add(it->second, prod);
      }
    return h;
  };

  for (int i = 0; i < pairs; ++i) {
    LaurentPoly f = random_poly(), g = random_poly();
    Element ef = loop_laurent_eval(f, loop, s);
    Element eg = loop_laurent_eval(g, loop, s);
    auto add_verdict = eq(elem_add(ef, eg), loop_laurent_eval(poly_add(f, g), loop, s),
                          eq_budget);
    if (!add_verdict.is_equal())
      report.failures.push_back("additivity failed on pair " + std::to_string(i) +
                                (add_verdict.is_unknown() ? " (unknown verdict)" : ""));
    auto mul_verdict = eq(elem_mul(ef, eg), loop_laurent_eval(poly_mul(f, g), loop, s),
                          eq_budget);
    if (!mul_verdict.is_equal())
      report.failures.push_back("multiplicativity failed on pair " + std::to_string(i) +
                                (mul_verdict.is_unknown() ? " (unknown verdict)" : ""));
    ++report.pairs_checked;
  }
  report.ok = report.failures.empty();
  return report;
}

}  // namespace lpa
