#include <random>

#include "doctest.h"
#include "lendepth/chaincert.hpp"
#include "lendepth/depth.hpp"
#include "lendepth/errors.hpp"
#include "lendepth/length.hpp"

using namespace lendepth;

namespace {
const MaxSubgroupDatabase& db() { return MaxSubgroupDatabase::builtin(); }

// Positive-root counts from closed forms.
std::uint64_t roots(SimpleType t) {
  const std::uint64_t r = t.rank;
  switch (t.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

SimpleType random_type(std::mt19937_64& rng, std::uint32_t max_rank) {
  for (;;) {
    std::uniform_int_distribution<int> fam(0, 6);
    std::uniform_int_distribution<std::uint32_t> rk(1, max_rank);
    SimpleType t{static_cast<Family>(fam(rng)), rk(rng)};
    if (is_canonical(t)) return t;
  }
}
}  // namespace

TEST_CASE("length spot values") {
  CHECK(length(GroupDescriptor::simple({Family::A, 1})) == 3);
  CHECK(length(GroupDescriptor::simple({Family::A, 2})) == 7);
  CHECK(length(GroupDescriptor::simple({Family::E, 8})) == 136);
  CHECK(length(parse_descriptor("U6 A2 A1 T1")) == 17);
  CHECK(length(GroupDescriptor::trivial()) == 0);
  CHECK(length(GroupDescriptor::soluble(9, 4)) == 13);
}

TEST_CASE("half dimension and equality criteria") {
  auto c3 = length_exceeds_half_dim(GroupDescriptor::simple({Family::C, 3}));
  CHECK(c3.length == 15);
  CHECK(c3.dim == 21);
  CHECK(c3.exceeds);
  CHECK(length_exceeds_half_dim(GroupDescriptor::soluble(10, 0)).exceeds);
  CHECK_THROWS_AS(length_exceeds_half_dim(GroupDescriptor::trivial()), DomainError);
  CHECK(length_equals_dim(GroupDescriptor(0, 2, {{Family::A, 1}, {Family::A, 1}, {Family::A, 1}})));
  CHECK_FALSE(length_equals_dim(GroupDescriptor::simple({Family::A, 2})));
  CHECK(length_equals_dim(GroupDescriptor::soluble(7, 0)));
}

TEST_CASE("randomised sweep of 10^4 descriptors") {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<std::uint64_t> small(0, 50);
  std::uniform_int_distribution<int> nf(0, 6);
  int violations = 0, mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    std::vector<SimpleType> fs;
    const int n = nf(rng);
    for (int j = 0; j < n; ++j) fs.push_back(random_type(rng, 12));
    GroupDescriptor g(small(rng), small(rng), fs);
    if (g.is_trivial()) continue;

    std::uint64_t l = g.unipotent_dim() + g.torus_dim(), dim = l;
    bool all_a1 = true;
    for (auto t : fs) {
      l += 2 * roots(t) + t.rank - roots(t) + t.rank;  // dim B + r = N + 2r
      dim += 2 * roots(t) + t.rank;
      all_a1 = all_a1 && t == SimpleType{Family::A, 1};
    }
    auto h = length_exceeds_half_dim(g);
    CHECK(h.length == l);
    CHECK(h.dim == dim);
    if (!h.exceeds || 2 * h.length <= h.dim) ++violations;
    if (length_equals_dim(g) != all_a1 || (l == dim) != all_a1) ++mismatches;
  }
  CHECK(violations == 0);
  CHECK(mismatches == 0);
}

TEST_CASE("additivity and soluble length") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    GroupDescriptor a(rng() % 20, rng() % 5, {random_type(rng, 10)});
    GroupDescriptor b(rng() % 20, rng() % 5, {random_type(rng, 10), random_type(rng, 6)});
    CHECK(length(a + b) == length(a) + length(b));
    auto s = GroupDescriptor::soluble(rng() % 100, rng() % 100);
    CHECK(length(s) == s.dim());
  }
}

TEST_CASE("depth never exceeds length") {
  for (auto t : canonical_types_up_to(8))
    for (std::uint64_t p : {0, 2, 3, 5, 7, 11}) {
      auto g = GroupDescriptor::simple(t);
      auto d = depth(g, Characteristic::from_value(p), db());
      CHECK(d.lower <= d.upper);
      CHECK(d.upper <= length(g));
    }
}

TEST_CASE("maximum length chains") {
  auto a1 = max_length_chain({Family::A, 1}, Characteristic::zero(), db());
  CHECK(render_chain(a1) == "A1 > U1 T1 > T1 > 1");
  auto a2 = max_length_chain({Family::A, 2}, Characteristic::zero(), db());
  CHECK(a2.length() == 7);
  CHECK(a2.nodes[1] == parse_descriptor("U2 A1 T1"));
  CHECK(max_length_chain({Family::B, 2}, Characteristic::zero(), db()).length() == 8);

  for (auto t : canonical_types_up_to(25))
    for (std::uint64_t p : {0, 2, 3, 5, 7}) {
      INFO(t.name() << " p=" << p);
      auto cert = max_length_chain(t, Characteristic::from_value(p), db());
      REQUIRE_NOTHROW(check_structure(cert));
      CHECK(cert.length() == roots(t) + 2 * t.rank);
      CHECK(verify(cert, db()).overall == Verdict::Certified);
    }
}
