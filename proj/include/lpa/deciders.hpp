#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph_analysis.hpp"
#include "lpa/semiring.hpp"

namespace lpa {

enum class Answer { yes, no, out_of_scope };

std::string to_string(Answer a);

/// Typed, replayable refutation of simpleness.
struct Witness {
  enum class Kind {
    nontrivial_hereditary_saturated,
    cycle_without_exit,
    coefficient_obstruction,
  };
  Kind kind;
  VertexSet subset;                // nontrivial_hereditary_saturated
  std::optional<Cycle> cycle;      // cycle_without_exit
  std::optional<Classification> classification;  // coefficient_obstruction
};

/// Verdict invariants: no => witnesses nonempty; yes => witnesses empty;
/// out_of_scope carries a note naming the unmet precondition.
struct SimplenessVerdict {
  std::string question;  // "ideal" | "congruence"
  Answer answer = Answer::out_of_scope;
  std::vector<Witness> witnesses;
  std::string notes;
};

/// Ideal-simpleness over a semifield: yes iff the only hereditary saturated
/// subsets are trivial and every cycle has an exit. For coefficient
/// semirings that are not semifields the question is out of scope (open
/// problem); the note says so.
SimplenessVerdict decide_ideal_simple(const GraphPtr& g, const SemiringPtr& s);

/// Congruence-simpleness over any commutative semiring and row-finite graph
/// (finiteness gives row-finiteness): yes iff the coefficients are a field
/// or the Boolean semifield, and the same two graph conditions hold.
SimplenessVerdict decide_congruence_simple(const GraphPtr& g, const SemiringPtr& s);

/// Re-verifies every witness from scratch against its own invariants.
bool verify_witness(const Graph& g, const Witness& w);

struct IdealProbeOptions {
  int path_bound = 2;
  int eq_budget = 3;
  long long product_cap = 2000;
};

/// Desk-scale probe of the two-sided ideal generated by the given elements:
/// searches bounded monomial products a g b for results equal to a vertex,
/// then closes the found vertices hereditarily and saturatedly.
struct IdealProbeReport {
  std::vector<int> found_vertices;
  VertexSet closure;
  bool closure_hereditary_saturated = false;
  bool capped = false;
  std::vector<std::string> notes;
};

IdealProbeReport check_ideal_meets_vertices(const GraphPtr& g, const SemiringPtr& s,
                                            const std::vector<Element>& generators,
                                            IdealProbeOptions opts = {});

}  // namespace lpa
