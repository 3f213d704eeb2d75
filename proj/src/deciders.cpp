#include "lpa/deciders.hpp"

#include <algorithm>

#include "lpa/equality.hpp"

namespace lpa {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::out_of_scope: return "out_of_scope";
  }
  return "?";
}

namespace {

// All witnesses of both graph kinds: the closure of every vertex whose
// singleton closure is proper, plus every exitless cycle.
std::vector<Witness> graph_witnesses(const Graph& g) {
  std::vector<Witness> out;
  std::vector<VertexSet> subsets;
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet cl = hs_closure(g, {v});
    if (static_cast<int>(cl.size()) == g.vertex_count()) continue;
    if (std::find(subsets.begin(), subsets.end(), cl) == subsets.end())
      subsets.push_back(std::move(cl));
  }
  for (auto& s : subsets) {
    Witness w{Witness::Kind::nontrivial_hereditary_saturated, std::move(s), {}, {}};
    out.push_back(std::move(w));
  }
  for (const Cycle& c : exitless_cycles(g)) {
    Witness w{Witness::Kind::cycle_without_exit, {}, c, {}};
    out.push_back(std::move(w));
  }
  return out;
}

void require_decider_inputs(const GraphPtr& g, const SemiringPtr& s) {
  if (!g || !s) throw UsageError("decider requires a graph and a semiring");
  if (g->vertex_count() == 0) throw UsageError("decider requires a nonempty vertex set");
}

}  // namespace

SimplenessVerdict decide_ideal_simple(const GraphPtr& g, const SemiringPtr& s) {
  require_decider_inputs(g, s);
  SimplenessVerdict v;
  v.question = "ideal";
  if (classify(*s) == Classification::general) {
    v.answer = Answer::out_of_scope;
    v.notes = "coefficient semiring '" + s->name +
              "' is not a semifield; ideal-simpleness is characterized only over "
              "semifields and the general commutative case is open";
    return v;
  }
  v.witnesses = graph_witnesses(*g);
  v.answer = v.witnesses.empty() ? Answer::yes : Answer::no;
  return v;
}

SimplenessVerdict decide_congruence_simple(const GraphPtr& g, const SemiringPtr& s) {
  require_decider_inputs(g, s);
  SimplenessVerdict v;
  v.question = "congruence";
  Classification c = classify(*s);
  if (c != Classification::field && c != Classification::boolean) {
    Witness w{Witness::Kind::coefficient_obstruction, {}, {}, c};
    v.witnesses.push_back(std::move(w));
    v.notes = "coefficients must be a field or the Boolean semifield; '" + s->name +
              "' is " + to_string(c);
  }
  for (auto& w : graph_witnesses(*g)) v.witnesses.push_back(std::move(w));
  v.answer = v.witnesses.empty() ? Answer::yes : Answer::no;
  return v;
}

bool verify_witness(const Graph& g, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::nontrivial_hereditary_saturated:
      return !w.subset.empty() &&
             static_cast<int>(w.subset.size()) < g.vertex_count() &&
             is_hereditary(g, w.subset) && is_saturated(g, w.subset);
    case Witness::Kind::cycle_without_exit:
      return w.cycle.has_value() && cycle_valid(g, *w.cycle) &&
             !cycle_has_exit(g, *w.cycle).has_value();
    case Witness::Kind::coefficient_obstruction:
      return w.classification.has_value() &&
             *w.classification != Classification::field &&
             *w.classification != Classification::boolean;
  }
  return false;
}

IdealProbeReport check_ideal_meets_vertices(const GraphPtr& g, const SemiringPtr& s,
                                            const std::vector<Element>& generators,
                                            IdealProbeOptions opts) {
  if (generators.empty())
    throw UsageError("check_ideal_meets_vertices requires at least one generator");
  for (const auto& gen : generators)
    if (gen.is_zero()) throw UsageError("generators must be nonzero");

  IdealProbeReport report;
  // Monomial multipliers with coefficient 1 over bounded paths.
  auto paths = paths_up_to(*g, opts.path_bound);
  std::vector<Element> multipliers;
  for (const Path& p : paths)
    for (const Path& q : paths)
      if (path_range(*g, p) == path_range(*g, q))
        multipliers.push_back(Element::monomial(g, s, s->one, p, q));

  // Equality against a vertex only ever needs the Equal direction, so probe
  // with closure intersection against precomputed vertex closures.
  std::vector<std::set<std::string>> vertex_closures(g->vertex_count());
  for (int v = 0; v < g->vertex_count(); ++v)
    for (const Element& e : ck2_closure(Element::vertex(g, s, v), opts.eq_budget))
      vertex_closures[v].insert(e.to_string());

  std::set<int> found;
  long long budget = opts.product_cap;
  auto all_found = [&] { return static_cast<int>(found.size()) == g->vertex_count(); };
  for (const Element& gen : generators) {
    for (const Element& a : multipliers) {
      Element ag = elem_mul(a, gen);
      if (ag.is_zero()) continue;
      for (const Element& b : multipliers) {
        if (--budget < 0) {
          report.capped = true;
          break;
        }
        Element agb = elem_mul(ag, b);
        if (agb.is_zero()) continue;
        for (const Element& ex : ck2_closure(agb, opts.eq_budget))
          for (int v = 0; v < g->vertex_count(); ++v)
            if (!found.count(v) && vertex_closures[v].count(ex.to_string()))
              found.insert(v);
        if (all_found()) break;
      }
      if (report.capped || all_found()) break;
    }
    if (report.capped || all_found()) break;
  }
  report.found_vertices.assign(found.begin(), found.end());
  if (!found.empty()) {
    report.closure = hs_closure(*g, VertexSet(found.begin(), found.end()));
    report.closure_hereditary_saturated =
        is_hereditary(*g, report.closure) && is_saturated(*g, report.closure);
  }
  if (report.capped)
    report.notes.push_back("product search capped at " +
                           std::to_string(opts.product_cap) + " products");
  return report;
}

}  // namespace lpa
