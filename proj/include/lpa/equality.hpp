#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/element.hpp"

namespace lpa {

/// A basis vector of the separating representation. The representation
/// realizes each vertex module A_v as a direct sum of edge slots
/// A_v = (+)_{s(e)=v} A_e with A_e identified with A_{r(e)}; a vector is
/// addressed by its root vertex, the chain of slot edges followed into the
/// nesting, and an abstract index (shift, tag) of the free module at the end
/// of the chain. Tags are per-vertex seed symbols; the shift supports the
/// integer orbit on exitless cycles.
///
/// Stored canonically: trailing chain edges that coincide with the
/// designated resolution edge of their source are folded into the index
/// (picking up the cycle shift), so equal vectors compare equal
/// componentwise.
struct BasisVector {
  int vertex = -1;
  std::vector<int> chain;
  long long shift = 0;
  int tag = -1;  // seed vertex

  friend bool operator==(const BasisVector& a, const BasisVector& b) = default;
  friend auto operator<=>(const BasisVector& a, const BasisVector& b) = default;
};

std::string basis_vector_to_string(const Graph& g, const BasisVector& b);

/// Finite S-combination of basis vectors; sorted, merged, zero-pruned.
struct VectorCombo {
  std::vector<std::pair<BasisVector, Scalar>> parts;
};

bool combo_equal(const Semiring& s, const VectorCombo& a, const VectorCombo& b);

/// Replaces every term whose range is the regular vertex v by its CK2
/// expansion over the out-edges of v; other terms are unchanged. The result
/// is congruent to the input by construction. UsageError if v is a sink.
Element ck2_expand(const Element& x, int v);

/// Expands one single term occurrence (identified by its key) at its range
/// vertex, leaving all other terms alone. This is the one-step context form
/// of the CK2 congruence pair. UsageError if the key is absent or ranges at
/// a sink.
Element ck2_expand_term(const Element& x, const Path& real, const Path& ghost);

/// One replayable expansion: whole-vertex (no key) or single-term (key set).
struct ExpansionStep {
  int vertex = -1;
  std::optional<std::pair<Path, Path>> term_key;
};

Element apply_expansion(const Element& x, const ExpansionStep& step);

struct SinkNf {
  Element normal_form;
  std::vector<ExpansionStep> steps;
};

/// Canonical form on acyclic graphs: expands at regular range vertices until
/// every term ends at a sink. UsageError on cyclic graphs (use eq with a
/// budget there).
SinkNf sink_normal_form(const Element& x);

struct EqualEvidence {
  std::vector<ExpansionStep> left_steps;
  std::vector<ExpansionStep> right_steps;
  std::string common_form;
};

/// Three-valued comparison verdict. Equal and Distinct carry independently
/// replayable evidence; Unknown records the exhausted budget.
struct EqVerdict {
  enum class Tag { equal, distinct, unknown };
  Tag tag = Tag::unknown;
  std::optional<EqualEvidence> equal_evidence;
  std::optional<BasisVector> separator;
  int budget = 0;

  bool is_equal() const { return tag == Tag::equal; }
  bool is_distinct() const { return tag == Tag::distinct; }
  bool is_unknown() const { return tag == Tag::unknown; }
};

inline constexpr int kDefaultEqBudget = 6;
inline constexpr int kDefaultSeparationDepth = 8;

/// Decides x = y modulo the full defining congruence (CK2 included).
/// Acyclic graphs: exact via sink normal forms, never Unknown. Cyclic
/// graphs: bidirectional breadth-first CK2 closure up to `budget` rounds,
/// then the separation oracle; Unknown when both are exhausted.
EqVerdict eq(const Element& x, const Element& y, int budget = kDefaultEqBudget);

/// Applies the element's operator (sum of monomial operator words) to a
/// basis vector. Sound for all defining relations: congruent elements act
/// identically, so differing actions prove distinctness.
VectorCombo rep_apply(const Element& x, const BasisVector& b);

/// Seed basis vectors, one per vertex: (v, [], 0, tag v).
std::vector<BasisVector> seed_vectors(const Graph& g);

/// Searches vectors generated from the seeds by the edge operators occurring
/// in x and y, up to `depth` applications, for one on which the two actions
/// differ. A hit proves x != y; absence proves nothing.
std::optional<BasisVector> separate(const Element& x, const Element& y,
                                    int depth = kDefaultSeparationDepth);

/// Breadth-first CK2 closure of one element: everything reachable by
/// expansion steps within `budget` rounds, capped. Element zero of the list
/// is the input itself.
std::vector<Element> ck2_closure(const Element& x, int budget, size_t cap = 512);

/// Replays Equal evidence: applies the recorded expansions to both sides and
/// checks that the results coincide syntactically.
bool replay_equal_evidence(const Element& x, const Element& y,
                           const EqualEvidence& ev);

/// Replays Distinct evidence: re-evaluates both actions on the vector.
bool replay_separator(const Element& x, const Element& y, const BasisVector& b);

}  // namespace lpa
