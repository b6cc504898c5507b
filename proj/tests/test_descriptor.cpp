#include <random>

#include "doctest.h"
#include "lendepth/descriptor.hpp"
#include "lendepth/errors.hpp"

using namespace lendepth;

TEST_CASE("parse and render round trip") {
  for (const char* s : {"1", "A1", "U6 A2 A1 T1", "A1^3", "A1^3 T2", "U10", "G2 E8", "B2^2", "D4 A3 T5"}) {
    CAPTURE(s);
    CHECK(parse_descriptor(s).render() == s);
  }
}

TEST_CASE("aliases canonicalize") {
  CHECK(parse_descriptor("C2").render() == "B2");
  CHECK(parse_descriptor("D3").render() == "A3");
  CHECK(parse_descriptor("D2").render() == "A1^2");
  CHECK(parse_descriptor("B1*C1").render() == "A1^2");
  CHECK(parse_descriptor("T1 U2 A1").render() == "U2 A1 T1");
  CHECK(parse_descriptor("A1 U0").render() == "A1");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_descriptor(""), ParseError);
  CHECK_THROWS_AS(parse_descriptor("E9"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("A"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("A1^"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("X3"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("A1 1"), ParseError);
  try {
    parse_descriptor("A1 Q2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("dimension and structure") {
  auto g = parse_descriptor("U6 A2 A1 T1");
  CHECK(g.dim() == 6 + 8 + 3 + 1);
  CHECK(g.factor_count() == 2);
  CHECK(g.semisimple_rank() == 3);
  CHECK_FALSE(g.is_reductive());
  CHECK(g.reductive_quotient().render() == "A2 A1 T1");
  CHECK(g.semisimple_quotient().render() == "A2 A1");
  CHECK(parse_descriptor("A1^3").as_pure_power()->count == 3);
  CHECK_FALSE(parse_descriptor("A1^3").as_simple());
  CHECK(GroupDescriptor::trivial().dim() == 0);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(GroupDescriptor(kMaxSolubleDim + 1, 0), ValidationError);
  CHECK_THROWS_AS(GroupDescriptor::power({Family::A, 1}, kMaxMultiplicity).plus_factor({Family::A, 1}),
                  ValidationError);
}

TEST_CASE("characteristic validation") {
  CHECK(Characteristic::from_value(0).is_zero());
  CHECK(Characteristic::prime(1000000007).value() == 1000000007);
  CHECK_THROWS_AS(Characteristic::prime(1), ValidationError);
  CHECK_THROWS_AS(Characteristic::prime(91), ValidationError);
  // trial division oracle
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) prime &= n % d != 0;
    CHECK(is_prime(n) == prime);
  }
  CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("sum of random descriptors adds dimensions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(0, 20), fam(0, 6), rk(1, 8);
  for (int i = 0; i < 500; ++i) {
    auto make = [&] {
      GroupDescriptor g(small(rng), small(rng));
      for (int k = small(rng) % 4; k > 0; --k) {
        auto f = static_cast<Family>(fam(rng));
        std::uint32_t r = rk(rng);
        SimpleType t{f, r};
        if (is_canonical(t)) g = g.plus_factor(t);
      }
      return g;
    };
    auto a = make(), b = make();
    CHECK((a + b).dim() == a.dim() + b.dim());
    CHECK(parse_descriptor((a + b).render()) == a + b);
  }
}
