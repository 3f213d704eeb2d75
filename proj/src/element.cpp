#include "lpa/element.hpp"

#include <algorithm>
#include <set>

namespace lpa {

int compare_term_keys(const Graph& g, const Monomial& a, const Monomial& b) {
  if (a.real.length() != b.real.length())
    return a.real.length() < b.real.length() ? -1 : 1;
  if (int c = compare_paths(g, a.real, b.real)) return c;
  if (a.ghost.length() != b.ghost.length())
    return a.ghost.length() < b.ghost.length() ? -1 : 1;
  return compare_paths(g, a.ghost, b.ghost);
}

void require_same_context(const Element& x, const Element& y) {
  if (!x.has_context() || !y.has_context())
    throw UsageError("operation on an element without graph context");
  if (x.graph() != y.graph())
    throw UsageError("operands live over different graphs");
  if (x.semiring() != y.semiring())
    throw UsageError("operands live over different coefficient semirings");
}

Element Element::zero(GraphPtr g, SemiringPtr s) {
  Element e;
  e.graph_ = std::move(g);
  e.semiring_ = std::move(s);
  return e;
}

Element Element::sum(GraphPtr g, SemiringPtr s, std::vector<Monomial> terms) {
  if (!g || !s) throw UsageError("element requires a graph and a semiring");
  for (const auto& m : terms) {
    if (!path_valid(*g, m.real) || !path_valid(*g, m.ghost))
      throw UsageError("monomial path is not a valid path of the graph");
    if (path_range(*g, m.real) != path_range(*g, m.ghost))
      throw UsageError("monomial real and ghost parts must share their range");
  }
  std::sort(terms.begin(), terms.end(), [&](const Monomial& a, const Monomial& b) {
    return compare_term_keys(*g, a, b) < 0;
  });
  Element e;
  e.graph_ = std::move(g);
  e.semiring_ = std::move(s);
  const Semiring& sr = *e.semiring_;
  for (auto& m : terms) {
    if (!e.terms_.empty() &&
        compare_term_keys(*e.graph_, e.terms_.back(), m) == 0) {
      e.terms_.back().coeff = sr.add(e.terms_.back().coeff, m.coeff);
    } else {
      e.terms_.push_back(std::move(m));
    }
  }
  std::erase_if(e.terms_, [&](const Monomial& m) { return sr.is_zero(m.coeff); });
  return e;
}

Element Element::monomial(GraphPtr g, SemiringPtr s, const Scalar& coeff,
                          Path real, Path ghost) {
  return sum(std::move(g), std::move(s),
             {Monomial{coeff, std::move(real), std::move(ghost)}});
}

Element Element::vertex(GraphPtr g, SemiringPtr s, int v) {
  if (v < 0 || v >= g->vertex_count()) throw UsageError("vertex index out of range");
  Scalar one = s->one;
  return monomial(std::move(g), std::move(s), one, vertex_path(v), vertex_path(v));
}

Element Element::edge(GraphPtr g, SemiringPtr s, int e) {
  if (e < 0 || e >= g->edge_count()) throw UsageError("edge index out of range");
  int r = g->edge(e).dst;
  Scalar one = s->one;
  return monomial(std::move(g), std::move(s), one, Path{g->edge(e).src, {e}},
                  vertex_path(r));
}

Element Element::ghost_edge(GraphPtr g, SemiringPtr s, int e) {
  if (e < 0 || e >= g->edge_count()) throw UsageError("edge index out of range");
  int r = g->edge(e).dst;
  Scalar one = s->one;
  return monomial(std::move(g), std::move(s), one, vertex_path(r),
                  Path{g->edge(e).src, {e}});
}

Element Element::path(GraphPtr g, SemiringPtr s, const Path& p) {
  if (!path_valid(*g, p)) throw UsageError("not a valid path of this graph");
  int r = path_range(*g, p);
  Scalar one = s->one;
  return monomial(std::move(g), std::move(s), one, p, vertex_path(r));
}

Element Element::identity(GraphPtr g, SemiringPtr s) {
  std::vector<Monomial> ts;
  for (int v = 0; v < g->vertex_count(); ++v)
    ts.push_back({s->one, vertex_path(v), vertex_path(v)});
  return sum(std::move(g), std::move(s), std::move(ts));
}

bool Element::identical(const Element& other) const {
  require_same_context(*this, other);
  if (terms_.size() != other.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (compare_term_keys(*graph_, terms_[i], other.terms_[i]) != 0) return false;
    if (!semiring_->eq(terms_[i].coeff, other.terms_[i].coeff)) return false;
  }
  return true;
}

std::optional<Monomial> mono_mul(const Graph& g, const Semiring& s,
                                 const Monomial& a, const Monomial& b) {
  // Resolve q1^* p2 (q1 = a.ghost, p2 = b.real). The prefix tests include
  // the start vertices, so vertex-path operands fall out of the same cases.
  const Path& q1 = a.ghost;
  const Path& p2 = b.real;
  Scalar coeff = s.mul(a.coeff, b.coeff);
  if (s.is_zero(coeff)) return std::nullopt;
  if (path_is_prefix(q1, p2)) {
    // p2 = q1 q': result real = a.real q', ghost = b.ghost.
    Path mid{path_range(g, q1),
             {p2.edges.begin() + q1.length(), p2.edges.end()}};
    auto real = concat(g, a.real, mid);
    if (!real) throw InternalError("mono_mul: broken composability in prefix case");
    return Monomial{coeff, *real, b.ghost};
  }
  if (path_is_prefix(p2, q1)) {
    // q1 = p2 p': result ghost = b.ghost p', real = a.real.
    Path rem{path_range(g, p2),
             {q1.edges.begin() + p2.length(), q1.edges.end()}};
    auto ghost = concat(g, b.ghost, rem);
    if (!ghost) throw InternalError("mono_mul: broken composability in suffix case");
    return Monomial{coeff, a.real, *ghost};
  }
  return std::nullopt;
}

Element elem_add(const Element& x, const Element& y) {
  require_same_context(x, y);
  std::vector<Monomial> ts = x.terms_;
  ts.insert(ts.end(), y.terms_.begin(), y.terms_.end());
  return Element::sum(x.graph_, x.semiring_, std::move(ts));
}

Element elem_mul(const Element& x, const Element& y) {
  require_same_context(x, y);
  std::vector<Monomial> ts;
  for (const auto& a : x.terms_)
    for (const auto& b : y.terms_)
      if (auto m = mono_mul(*x.graph_, *x.semiring_, a, b)) ts.push_back(std::move(*m));
  return Element::sum(x.graph_, x.semiring_, std::move(ts));
}

Element involute(const Element& x) {
  if (!x.has_context()) throw UsageError("involute on an element without context");
  std::vector<Monomial> ts;
  ts.reserve(x.terms_.size());
  for (const auto& m : x.terms_) ts.push_back({m.coeff, m.ghost, m.real});
  return Element::sum(x.graph_, x.semiring_, std::move(ts));
}

Element scale(const Scalar& c, const Element& x) {
  if (!x.has_context()) throw UsageError("scale on an element without context");
  std::vector<Monomial> ts;
  for (const auto& m : x.terms_) {
    Scalar sc = x.semiring_->mul(c, m.coeff);
    if (!x.semiring_->is_zero(sc)) ts.push_back({sc, m.real, m.ghost});
  }
  return Element::sum(x.graph_, x.semiring_, std::move(ts));
}

Element local_unit(const std::vector<Element>& xs) {
  if (xs.empty()) throw UsageError("local_unit requires a nonempty element list");
  for (size_t i = 1; i < xs.size(); ++i) require_same_context(xs[0], xs[i]);
  const Graph& g = *xs[0].graph();
  std::set<int> vs;
  for (const auto& x : xs)
    for (const auto& m : x.terms()) {
      vs.insert(path_source(g, m.real));
      vs.insert(path_source(g, m.ghost));
      vs.insert(path_range(g, m.real));
    }
  std::vector<Monomial> ts;
  for (int v : vs)
    ts.push_back({xs[0].semiring()->one, vertex_path(v), vertex_path(v)});
  return Element::sum(xs[0].graph(), xs[0].semiring(), std::move(ts));
}

bool is_real(const Element& x) {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [](const Monomial& m) { return m.ghost.length() == 0; });
}

std::string Element::to_string() const {
  if (!has_context()) return "<no context>";
  if (terms_.empty()) return "0";
  const Graph& g = *graph_;
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    const Monomial& m = terms_[i];
    if (!semiring_->is_one(m.coeff)) {
      out += semiring_->format(m.coeff);
      out += " . ";
    }
    if (m.real.length() == 0 && m.ghost.length() == 0) {
      out += g.vertex_id(m.real.start);
      continue;
    }
    bool first = true;
    for (int e : m.real.edges) {
      if (!first) out += ' ';
      out += g.edge(e).id;
      first = false;
    }
    for (auto it = m.ghost.edges.rbegin(); it != m.ghost.edges.rend(); ++it) {
      if (!first) out += ' ';
      out += g.edge(*it).id;
      out += "^*";
      first = false;
    }
  }
  return out;
}

}  // namespace lpa
