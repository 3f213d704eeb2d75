#include "lpa/semiring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace lpa {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("scalar overflow in +");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("scalar overflow in *");
  return r;
}

}  // namespace

Rat Rat::of(long long n, long long d) {
  if (d == 0) throw UsageError("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rat{n, d};
}

Rat operator+(const Rat& a, const Rat& b) {
  long long g = std::gcd(a.den, b.den);
  long long bd = b.den / g;
  long long n = checked_add(checked_mul(a.num, bd), checked_mul(b.num, a.den / g));
  return Rat::of(n, checked_mul(a.den, bd));
}

Rat operator-(const Rat& a, const Rat& b) { return a + b.negated(); }

Rat operator*(const Rat& a, const Rat& b) {
  long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
  long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
  return Rat::of(checked_mul(a.num / g1, b.num / g2),
                 checked_mul(a.den / g2, b.den / g1));
}

Rat Rat::reciprocal() const {
  if (num == 0) throw UsageError("no inverse of zero");
  return Rat::of(den, num);
}

Rat Rat::negated() const { return Rat{-num, den}; }

bool operator<(const Rat& a, const Rat& b) {
  return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
}

std::string Rat::to_fraction_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<std::string> Rat::to_decimal_string() const {
  if (den == 1) return std::to_string(num);
  long long d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::nullopt;
  int digits = std::max(twos, fives);
  long long scale = 1;
  for (int i = 0; i < digits; ++i) scale = checked_mul(scale, 10);
  long long scaled = checked_mul(num, scale) / den;
  bool neg = scaled < 0;
  std::string body = std::to_string(neg ? -scaled : scaled);
  if (static_cast<int>(body.size()) <= digits)
    body.insert(body.begin(), digits + 1 - body.size(), '0');
  body.insert(body.end() - digits, '.');
  return (neg ? "-" : "") + body;
}

Scalar Semiring::invert(const Scalar& s) const {
  if (!inv) throw UsageError("semiring '" + name + "' has no multiplicative inverses");
  if (is_zero(s)) throw UsageError("cannot invert zero in '" + name + "'");
  return inv(s);
}

namespace {

bool default_eq(const Scalar& a, const Scalar& b) { return a == b; }

std::optional<long long> parse_ll(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// Accepts "n", "n/d", and exact decimals like "-2.5".
std::optional<Rat> parse_rat(std::string_view s) {
  if (auto n = parse_ll(s)) return Rat::of(*n);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto n = parse_ll(s.substr(0, slash));
    auto d = parse_ll(s.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rat::of(*n, *d);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (fp.empty() || !std::all_of(fp.begin(), fp.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return std::nullopt;
    bool neg = !ip.empty() && ip.front() == '-';
    if (neg || (!ip.empty() && ip.front() == '+')) ip.remove_prefix(1);
    long long whole = 0;
    if (!ip.empty()) {
      auto w = parse_ll(ip);
      if (!w) return std::nullopt;
      whole = *w;
    }
    long long den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den = checked_mul(den, 10);
    auto frac = parse_ll(fp);
    if (!frac) return std::nullopt;
    long long num = checked_add(checked_mul(whole, den), *frac);
    if (neg) num = -num;
    return Rat::of(num, den);
  }
  return std::nullopt;
}

SemiringPtr make_boolean() {
  auto s = std::make_shared<Semiring>();
  s->name = "boolean";
  s->zero = Scalar::integer(0);
  s->one = Scalar::integer(1);
  s->add = [](const Scalar& a, const Scalar& b) {
    return Scalar::integer(a.value.num != 0 || b.value.num != 0 ? 1 : 0);
  };
  s->mul = [](const Scalar& a, const Scalar& b) {
    return Scalar::integer(a.value.num != 0 && b.value.num != 0 ? 1 : 0);
  };
  s->eq = default_eq;
  s->inv = [](const Scalar&) { return Scalar::integer(1); };
  s->flags = {true, true, false, true};
  s->samples = {Scalar::integer(0), Scalar::integer(1)};
  s->parse_literal = [](std::string_view t) -> std::optional<Scalar> {
    if (t == "0") return Scalar::integer(0);
    if (t == "1") return Scalar::integer(1);
    return std::nullopt;
  };
  s->format = [](const Scalar& a) { return std::to_string(a.value.num); };
  return s;
}

SemiringPtr make_naturals() {
  auto s = std::make_shared<Semiring>();
  s->name = "nat";
  s->zero = Scalar::integer(0);
  s->one = Scalar::integer(1);
  s->add = [](const Scalar& a, const Scalar& b) {
    return Scalar::rational(a.value + b.value);
  };
  s->mul = [](const Scalar& a, const Scalar& b) {
    return Scalar::rational(a.value * b.value);
  };
  s->eq = default_eq;
  s->inv = nullptr;
  s->flags = {};
  s->samples = {Scalar::integer(0), Scalar::integer(1), Scalar::integer(2),
                Scalar::integer(3), Scalar::integer(7)};
  s->parse_literal = [](std::string_view t) -> std::optional<Scalar> {
    auto n = parse_ll(t);
    if (!n || *n < 0) return std::nullopt;
    return Scalar::integer(*n);
  };
  s->format = [](const Scalar& a) { return std::to_string(a.value.num); };
  return s;
}

SemiringPtr make_rationals() {
  auto s = std::make_shared<Semiring>();
  s->name = "rational";
  s->zero = Scalar::integer(0);
  s->one = Scalar::integer(1);
  s->add = [](const Scalar& a, const Scalar& b) {
    return Scalar::rational(a.value + b.value);
  };
  s->mul = [](const Scalar& a, const Scalar& b) {
    return Scalar::rational(a.value * b.value);
  };
  s->eq = default_eq;
  s->inv = [](const Scalar& a) { return Scalar::rational(a.value.reciprocal()); };
  s->flags = {false, true, true, false};
  s->samples = {Scalar::integer(0),          Scalar::integer(1),
                Scalar::integer(-1),         Scalar::integer(2),
                Scalar::rational(Rat::of(1, 2)), Scalar::rational(Rat::of(-2, 3))};
  s->parse_literal = [](std::string_view t) -> std::optional<Scalar> {
    auto q = parse_rat(t);
    if (!q) return std::nullopt;
    return Scalar::rational(*q);
  };
  s->format = [](const Scalar& a) { return a.value.to_fraction_string(); };
  return s;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long pow_mod(long long base, long long exp, long long mod) {
  long long r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = static_cast<long long>(static_cast<__int128>(r) * base % mod);
    base = static_cast<long long>(static_cast<__int128>(base) * base % mod);
    exp >>= 1;
  }
  return r;
}

SemiringPtr make_gf(long long p) {
  if (!is_prime(p)) throw ConfigError("gf:" + std::to_string(p) + " requires a prime modulus");
  auto s = std::make_shared<Semiring>();
  s->name = "gf:" + std::to_string(p);
  s->zero = Scalar::integer(0);
  s->one = Scalar::integer(1 % p);
  s->add = [p](const Scalar& a, const Scalar& b) {
    return Scalar::integer((a.value.num + b.value.num) % p);
  };
  s->mul = [p](const Scalar& a, const Scalar& b) {
    return Scalar::integer(
        static_cast<long long>(static_cast<__int128>(a.value.num) * b.value.num % p));
  };
  s->eq = default_eq;
  s->inv = [p](const Scalar& a) { return Scalar::integer(pow_mod(a.value.num, p - 2, p)); };
  s->flags = {false, true, true, false};
  for (long long r = 0; r < std::min<long long>(p, 5); ++r)
    s->samples.push_back(Scalar::integer(r));
  if (p > 5) s->samples.push_back(Scalar::integer(p - 1));
  s->parse_literal = [p](std::string_view t) -> std::optional<Scalar> {
    auto n = parse_ll(t);
    if (!n) return std::nullopt;
    long long r = *n % p;
    if (r < 0) r += p;
    return Scalar::integer(r);
  };
  s->format = [](const Scalar& a) { return std::to_string(a.value.num); };
  return s;
}

SemiringPtr make_tropical() {
  auto s = std::make_shared<Semiring>();
  s->name = "tropical";
  s->zero = Scalar::minus_infinity();
  s->one = Scalar::integer(0);
  s->add = [](const Scalar& a, const Scalar& b) {
    if (a.neg_inf) return b;
    if (b.neg_inf) return a;
    return a.value < b.value ? b : a;
  };
  s->mul = [](const Scalar& a, const Scalar& b) {
    if (a.neg_inf || b.neg_inf) return Scalar::minus_infinity();
    return Scalar::rational(a.value + b.value);
  };
  s->eq = default_eq;
  s->inv = [](const Scalar& a) { return Scalar::rational(a.value.negated()); };
  s->flags = {true, true, false, false};
  s->samples = {Scalar::minus_infinity(), Scalar::integer(0), Scalar::integer(1),
                Scalar::rational(Rat::of(5, 2)), Scalar::integer(-3)};
  s->parse_literal = [](std::string_view t) -> std::optional<Scalar> {
    if (t == "-inf") return Scalar::minus_infinity();
    auto q = parse_rat(t);
    if (!q) return std::nullopt;
    return Scalar::rational(*q);
  };
  s->format = [](const Scalar& a) -> std::string {
    if (a.neg_inf) return "-inf";
    if (auto d = a.value.to_decimal_string()) return *d;
    return a.value.to_fraction_string();
  };
  return s;
}

}  // namespace

SemiringPtr boolean_semiring() {
  static SemiringPtr s = make_boolean();
  return s;
}

SemiringPtr natural_semiring() {
  static SemiringPtr s = make_naturals();
  return s;
}

SemiringPtr rational_semiring() {
  static SemiringPtr s = make_rationals();
  return s;
}

SemiringPtr gf_semiring(long long p) { return make_gf(p); }

SemiringPtr tropical_semiring() {
  static SemiringPtr s = make_tropical();
  return s;
}

SemiringPtr semiring_by_name(std::string_view selector) {
  if (selector == "boolean") return boolean_semiring();
  if (selector == "nat") return natural_semiring();
  if (selector == "rational") return rational_semiring();
  if (selector == "tropical") return tropical_semiring();
  if (selector.substr(0, 3) == "gf:") {
    auto p = parse_ll(selector.substr(3));
    if (!p) throw ConfigError("bad gf modulus in '" + std::string(selector) + "'");
    return gf_semiring(*p);
  }
  throw ConfigError("unknown semiring '" + std::string(selector) +
                    "' (expected boolean|nat|rational|tropical|gf:<p>)");
}

std::vector<LawViolation> check_axioms(const Semiring& s,
                                       const std::vector<Scalar>& samples) {
  if (samples.empty()) throw UsageError("check_axioms requires a nonempty sample set");
  std::vector<LawViolation> out;
  auto report = [&](const std::string& law, std::vector<Scalar> w, const std::string& d) {
    out.push_back({law, std::move(w), d});
  };
  auto show = [&](const Scalar& x) { return s.format(x); };

  for (const auto& x : samples) {
    if (!s.eq(s.add(s.zero, x), x) || !s.eq(s.add(x, s.zero), x))
      report("additive-identity", {x}, "0 + " + show(x) + " != " + show(x));
    if (!s.eq(s.mul(s.one, x), x) || !s.eq(s.mul(x, s.one), x))
      report("multiplicative-identity", {x}, "1 * " + show(x) + " != " + show(x));
    if (!s.eq(s.mul(s.zero, x), s.zero) || !s.eq(s.mul(x, s.zero), s.zero))
      report("zero-annihilation", {x}, "0 * " + show(x) + " != 0");
    bool idem = s.eq(s.add(x, x), x);
    if (s.flags.additively_idempotent && !idem)
      report("additive-idempotency", {x}, show(x) + " + " + show(x) + " != " + show(x));
    if (s.flags.semifield && !s.is_zero(x)) {
      if (!s.inv)
        report("semifield-inverse", {x}, "no inverse operation declared");
      else if (!s.eq(s.mul(x, s.inv(x)), s.one))
        report("semifield-inverse", {x}, show(x) + " * inv != 1");
    }
  }
  if (!s.flags.additively_idempotent) {
    bool all_idem = std::all_of(samples.begin(), samples.end(), [&](const Scalar& x) {
      return s.eq(s.add(x, x), x);
    });
    if (all_idem)
      report("additive-idempotency-flag", {},
             "all samples satisfy x + x = x but the flag is not declared");
  }
  for (const auto& x : samples)
    for (const auto& y : samples) {
      if (!s.eq(s.add(x, y), s.add(y, x)))
        report("additive-commutativity", {x, y},
               show(x) + " + " + show(y) + " != " + show(y) + " + " + show(x));
      if (!s.eq(s.mul(x, y), s.mul(y, x)))
        report("multiplicative-commutativity", {x, y},
               show(x) + " * " + show(y) + " != " + show(y) + " * " + show(x));
    }
  for (const auto& x : samples)
    for (const auto& y : samples)
      for (const auto& z : samples) {
        if (!s.eq(s.add(s.add(x, y), z), s.add(x, s.add(y, z))))
          report("additive-associativity", {x, y, z}, "");
        if (!s.eq(s.mul(s.mul(x, y), z), s.mul(x, s.mul(y, z))))
          report("multiplicative-associativity", {x, y, z}, "");
        if (!s.eq(s.mul(x, s.add(y, z)), s.add(s.mul(x, y), s.mul(x, z))))
          report("left-distributivity", {x, y, z}, "");
        if (!s.eq(s.mul(s.add(y, z), x), s.add(s.mul(y, x), s.mul(z, x))))
          report("right-distributivity", {x, y, z}, "");
      }
  if (s.flags.boolean) {
    // The boolean flag additionally pins the carrier to {0,1}.
    bool sampler_ok = s.samples.size() == 2 &&
                      ((s.eq(s.samples[0], s.zero) && s.eq(s.samples[1], s.one)) ||
                       (s.eq(s.samples[0], s.one) && s.eq(s.samples[1], s.zero)));
    if (!sampler_ok)
      report("boolean-carrier", {}, "boolean flag requires the sampler to yield exactly {0,1}");
  }
  return out;
}

Classification classify(const Semiring& s) {
  const auto& f = s.flags;
  if (f.field && !f.semifield)
    throw ConfigError("inconsistent flags on '" + s.name + "': is_field requires is_semifield");
  if (f.boolean && !(f.semifield && f.additively_idempotent))
    throw ConfigError("inconsistent flags on '" + s.name +
                      "': is_boolean requires is_semifield and additive idempotency");
  if (f.boolean && f.field)
    throw ConfigError("inconsistent flags on '" + s.name + "': boolean excludes field");
  if (f.boolean) return Classification::boolean;
  if (f.field) return Classification::field;
  if (f.semifield) return Classification::other_semifield;
  return Classification::general;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::field: return "field";
    case Classification::boolean: return "boolean";
    case Classification::other_semifield: return "other_semifield";
    case Classification::general: return "general";
  }
  return "?";
}

}  // namespace lpa
