#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lpa/semiring.hpp"

using namespace lpa;

TEST_CASE("rational arithmetic is exact and normalized") {
  Rat a = Rat::of(1, 2), b = Rat::of(1, 3);
  CHECK((a + b) == Rat::of(5, 6));
  CHECK((a * b) == Rat::of(1, 6));
  CHECK((a - b) == Rat::of(1, 6));
  CHECK(Rat::of(2, 4) == Rat::of(1, 2));
  CHECK(Rat::of(-2, -4) == Rat::of(1, 2));
  CHECK(Rat::of(2, -4) == Rat::of(-1, 2));
  CHECK(Rat::of(3, 4).reciprocal() == Rat::of(4, 3));
  CHECK_THROWS_AS(Rat::of(1, 0), UsageError);
  CHECK_THROWS_AS(Rat::of(0, 5).reciprocal(), UsageError);
}

TEST_CASE("exact decimal rendering") {
  CHECK(Rat::of(5, 2).to_decimal_string() == std::string("2.5"));
  CHECK(Rat::of(-5, 2).to_decimal_string() == std::string("-2.5"));
  CHECK(Rat::of(1, 8).to_decimal_string() == std::string("0.125"));
  CHECK(Rat::of(7, 1).to_decimal_string() == std::string("7"));
  CHECK(!Rat::of(1, 3).to_decimal_string().has_value());
}

TEST_CASE("builtin descriptors pass all axioms on their samplers") {
  for (SemiringPtr s : {boolean_semiring(), natural_semiring(), rational_semiring(),
                        gf_semiring(2), gf_semiring(5), tropical_semiring()}) {
    auto violations = check_axioms(*s, s->samples);
    CAPTURE(s->name);
    CHECK(violations.empty());
  }
}

TEST_CASE("boolean semifield over {0,1} satisfies all laws") {
  auto b = boolean_semiring();
  CHECK(check_axioms(*b, {Scalar::integer(0), Scalar::integer(1)}).empty());
  CHECK(b->eq(b->add(b->one, b->one), b->one));  // 1 + 1 = 1
}

TEST_CASE("tropical max-plus sample from the definition") {
  auto t = tropical_semiring();
  std::vector<Scalar> samples = {Scalar::minus_infinity(), Scalar::integer(0),
                                 Scalar::integer(1), Scalar::rational(Rat::of(5, 2))};
  CHECK(check_axioms(*t, samples).empty());
  CHECK(t->eq(t->add(Scalar::integer(1), Scalar::integer(0)), Scalar::integer(1)));
  CHECK(t->eq(t->mul(Scalar::integer(1), Scalar::integer(1)), Scalar::integer(2)));
  CHECK(t->eq(t->mul(Scalar::minus_infinity(), Scalar::integer(7)), t->zero));
  CHECK(t->format(Scalar::rational(Rat::of(5, 2))) == "2.5");
  CHECK(t->format(t->zero) == "-inf");
}

TEST_CASE("a broken descriptor is reported with witnessing tuples") {
  auto q = rational_semiring();
  Semiring broken = *q;
  broken.name = "subtraction";
  broken.flags = {};
  broken.add = [](const Scalar& a, const Scalar& b) {
    return Scalar::rational(a.value - b.value);
  };
  auto violations = check_axioms(
      broken, {Scalar::integer(0), Scalar::integer(1), Scalar::integer(2)});
  bool found_comm = false;
  for (const auto& v : violations)
    if (v.law == "additive-commutativity") found_comm = true;
  CHECK(found_comm);
}

TEST_CASE("flag mismatches are report entries") {
  auto n = natural_semiring();
  Semiring liar = *n;
  liar.flags.additively_idempotent = true;
  auto violations = check_axioms(liar, liar.samples);
  CHECK(!violations.empty());
  CHECK(violations.front().law == "additive-idempotency");

  Semiring fake_semifield = *n;
  fake_semifield.flags.semifield = true;
  auto v2 = check_axioms(fake_semifield, fake_semifield.samples);
  bool found = false;
  for (const auto& v : v2)
    if (v.law == "semifield-inverse") found = true;
  CHECK(found);
}

TEST_CASE("classification folds flags") {
  CHECK(classify(*boolean_semiring()) == Classification::boolean);
  CHECK(classify(*tropical_semiring()) == Classification::other_semifield);
  CHECK(classify(*natural_semiring()) == Classification::general);
  CHECK(classify(*rational_semiring()) == Classification::field);
  CHECK(classify(*gf_semiring(7)) == Classification::field);
}

TEST_CASE("inconsistent flags are a configuration error") {
  Semiring bad = *natural_semiring();
  bad.flags.field = true;  // field without semifield
  CHECK_THROWS_AS(classify(bad), ConfigError);

  Semiring bad2 = *boolean_semiring();
  bad2.flags.additively_idempotent = false;
  CHECK_THROWS_AS(classify(bad2), ConfigError);
}

TEST_CASE("gf requires a prime modulus, verified eagerly") {
  CHECK_THROWS_AS(gf_semiring(6), ConfigError);
  CHECK_THROWS_AS(gf_semiring(1), ConfigError);
  auto g7 = gf_semiring(7);
  CHECK(g7->eq(g7->mul(Scalar::integer(3), Scalar::integer(5)), Scalar::integer(1)));
  CHECK(g7->eq(g7->invert(Scalar::integer(3)), Scalar::integer(5)));
}

TEST_CASE("semiring selectors") {
  CHECK(semiring_by_name("boolean")->name == "boolean");
  CHECK(semiring_by_name("gf:11")->name == "gf:11");
  CHECK_THROWS_AS(semiring_by_name("integers"), ConfigError);
  CHECK_THROWS_AS(semiring_by_name("gf:x"), ConfigError);
}

TEST_CASE("literal parsing per descriptor") {
  auto q = rational_semiring();
  CHECK(q->eq(*q->parse_literal("2/3"), Scalar::rational(Rat::of(2, 3))));
  CHECK(q->eq(*q->parse_literal("-4"), Scalar::integer(-4)));
  auto t = tropical_semiring();
  CHECK(t->eq(*t->parse_literal("-inf"), t->zero));
  CHECK(t->eq(*t->parse_literal("2.5"), Scalar::rational(Rat::of(5, 2))));
  auto n = natural_semiring();
  CHECK(!n->parse_literal("-3").has_value());
  CHECK(!n->parse_literal("1/2").has_value());
  auto g5 = gf_semiring(5);
  CHECK(g5->eq(*g5->parse_literal("7"), Scalar::integer(2)));
  CHECK(g5->eq(*g5->parse_literal("-1"), Scalar::integer(4)));
}

TEST_CASE("additive idempotency flag matches sampled behavior") {
  for (SemiringPtr s : {boolean_semiring(), tropical_semiring()}) {
    for (const auto& x : s->samples) CHECK(s->eq(s->add(x, x), x));
    CHECK(s->flags.additively_idempotent);
  }
  auto n = natural_semiring();
  bool all_idem = true;
  for (const auto& x : n->samples)
    if (!n->eq(n->add(x, x), x)) all_idem = false;
  CHECK(!all_idem);
  CHECK(!n->flags.additively_idempotent);
}
