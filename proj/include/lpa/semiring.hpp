#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

/// Exact fraction over 64-bit integers, always normalized (gcd 1, den > 0).
/// Arithmetic throws std::overflow_error instead of wrapping.
struct Rat {
  long long num = 0;
  long long den = 1;

  static Rat of(long long n, long long d = 1);

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  Rat reciprocal() const;  // throws UsageError on zero
  Rat negated() const;

  friend bool operator==(const Rat& a, const Rat& b) = default;
  friend bool operator<(const Rat& a, const Rat& b);

  bool is_integer() const { return den == 1; }
  std::string to_fraction_string() const;          // "n" or "n/d"
  std::optional<std::string> to_decimal_string() const;  // exact, if den = 2^a 5^b
};

/// One value of a coefficient carrier. All builtin carriers embed into
/// exact rationals; `neg_inf` is used only by the tropical semifield.
struct Scalar {
  bool neg_inf = false;
  Rat value{};

  static Scalar rational(const Rat& q) { return Scalar{false, q}; }
  static Scalar integer(long long n) { return Scalar{false, Rat::of(n)}; }
  static Scalar minus_infinity() { return Scalar{true, {}}; }

  friend bool operator==(const Scalar& a, const Scalar& b) = default;
};

struct SemiringFlags {
  bool additively_idempotent = false;
  bool semifield = false;
  bool field = false;
  bool boolean = false;
};

/// Descriptor of a commutative semiring: the arithmetic as closures plus
/// declared classification flags. Classification is declared, not inferred;
/// check_axioms validates the declaration on the sampler. Descriptors are
/// immutable after construction and safe to share across threads.
struct Semiring {
  std::string name;
  Scalar zero;
  Scalar one;
  std::function<Scalar(const Scalar&, const Scalar&)> add;
  std::function<Scalar(const Scalar&, const Scalar&)> mul;
  std::function<bool(const Scalar&, const Scalar&)> eq;
  /// Multiplicative inverse on nonzero elements; null when absent.
  std::function<Scalar(const Scalar&)> inv;
  SemiringFlags flags;
  /// Finitely many distinct test elements, used by check_axioms.
  std::vector<Scalar> samples;
  std::function<std::optional<Scalar>(std::string_view)> parse_literal;
  std::function<std::string(const Scalar&)> format;

  bool is_zero(const Scalar& s) const { return eq(s, zero); }
  bool is_one(const Scalar& s) const { return eq(s, one); }
  /// Inverse of a nonzero element; UsageError on zero or if no inverse exists.
  Scalar invert(const Scalar& s) const;
};

using SemiringPtr = std::shared_ptr<const Semiring>;

/// The Boolean semifield B = {0,1} with 1+1=1.
SemiringPtr boolean_semiring();
/// Natural numbers with 0; no nonzero inverses, no flags.
SemiringPtr natural_semiring();
/// Rationals as a field.
SemiringPtr rational_semiring();
/// Integers mod p; p is checked for primality eagerly (ConfigError otherwise).
SemiringPtr gf_semiring(long long p);
/// Max-plus over exact rationals extended by -inf.
SemiringPtr tropical_semiring();

/// Resolves a CLI-style selector: boolean|nat|rational|tropical|gf:<p>.
SemiringPtr semiring_by_name(std::string_view selector);

/// One violated law instance with the witnessing tuple.
struct LawViolation {
  std::string law;
  std::vector<Scalar> witnesses;
  std::string detail;
};

/// Exhaustively tests the semiring laws (and the declared flags) over the
/// sample set. A failing law is a report entry, not an error.
std::vector<LawViolation> check_axioms(const Semiring& s,
                                       const std::vector<Scalar>& samples);

enum class Classification { field, boolean, other_semifield, general };

/// Folds the declared flags to the four-way tag used by the congruence
/// decider. Throws ConfigError on inconsistent flags.
Classification classify(const Semiring& s);

std::string to_string(Classification c);

}  // namespace lpa
