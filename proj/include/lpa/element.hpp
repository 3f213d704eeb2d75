#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/semiring.hpp"

namespace lpa {

/// One normal-form monomial coeff * real * ghost^*. The ghost path is stored
/// unreversed; it contributes its reverse-starred word. Invariants:
/// r(real) = r(ghost) and coeff != 0 (zero monomials are pruned away).
struct Monomial {
  Scalar coeff;
  Path real;
  Path ghost;
};

/// Finite formal S-combination of monomials over one graph and one
/// coefficient semiring. Terms are keyed by (real, ghost), kept sorted by
/// (|real|, real lex, |ghost|, ghost lex), coefficient-merged and
/// zero-pruned. The empty term list is the zero element.
///
/// This normal form covers relations vv' = dvv' v, s(e)e = e = e r(e) and
/// e* f = de,f r(e) only; the CK2 relation v = sum e e* is handled by the
/// equality engine. Elements are immutable values.
class Element {
 public:
  Element() = default;

  static Element zero(GraphPtr g, SemiringPtr s);
  /// Single monomial; validates both paths and r(real) = r(ghost).
  static Element monomial(GraphPtr g, SemiringPtr s, const Scalar& coeff,
                          Path real, Path ghost);
  static Element vertex(GraphPtr g, SemiringPtr s, int v);
  static Element edge(GraphPtr g, SemiringPtr s, int e);
  static Element ghost_edge(GraphPtr g, SemiringPtr s, int e);
  static Element path(GraphPtr g, SemiringPtr s, const Path& p);
  /// Sum of all vertices (the multiplicative identity; V is finite).
  static Element identity(GraphPtr g, SemiringPtr s);
  /// Builds an element from arbitrary monomials, merging and pruning.
  static Element sum(GraphPtr g, SemiringPtr s, std::vector<Monomial> terms);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const GraphPtr& graph() const { return graph_; }
  const SemiringPtr& semiring() const { return semiring_; }
  bool has_context() const { return graph_ != nullptr; }

  /// Syntactic identity: same term keys with equal coefficients.
  bool identical(const Element& other) const;

  /// Canonical, re-parseable rendering in the expression grammar.
  std::string to_string() const;

 private:
  GraphPtr graph_;
  SemiringPtr semiring_;
  std::vector<Monomial> terms_;

  friend Element elem_add(const Element&, const Element&);
  friend Element elem_mul(const Element&, const Element&);
  friend Element involute(const Element&);
  friend Element scale(const Scalar&, const Element&);
};

/// Requires operands over the same graph and semiring; UsageError otherwise.
void require_same_context(const Element& x, const Element& y);

/// Product of two monomials: resolves ghost1^* real2 through the four prefix
/// cases (extension, equality, reverse extension, orthogonal) and reassembles
/// a single normal-form monomial, or nullopt for zero.
std::optional<Monomial> mono_mul(const Graph& g, const Semiring& s,
                                 const Monomial& a, const Monomial& b);

Element elem_add(const Element& x, const Element& y);
Element elem_mul(const Element& x, const Element& y);
/// Swaps real and ghost parts of every term; coefficients fixed.
Element involute(const Element& x);
Element scale(const Scalar& c, const Element& x);

/// Sum of the distinct vertices appearing as sources and ranges of terms of
/// xs; acts as a two-sided identity on every member of xs.
Element local_unit(const std::vector<Element>& xs);

/// True iff every term has a length-0 ghost part.
bool is_real(const Element& x);

/// Term key order used everywhere: (|real|, real lex, |ghost|, ghost lex).
int compare_term_keys(const Graph& g, const Monomial& a, const Monomial& b);

}  // namespace lpa
