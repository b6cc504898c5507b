#include <numeric>

#include "cartan_oracle.hpp"
#include "doctest.h"
#include "lendepth/errors.hpp"
#include "lendepth/rootdata.hpp"

using namespace lendepth;

TEST_CASE("positive root counts agree with reflection closure") {
  for (SimpleType t : canonical_types_up_to(9)) {
    CAPTURE(t.name());
    CHECK(num_positive_roots(t) == oracle::positive_roots(oracle::cartan(t)));
    CHECK(dim_simple(t) == t.rank + 2 * num_positive_roots(t));
    CHECK(borel_dim(t) == t.rank + num_positive_roots(t));
  }
}

TEST_CASE("known dimensions") {
  CHECK(dim_simple({Family::A, 1}) == 3);
  CHECK(dim_simple({Family::G, 2}) == 14);
  CHECK(dim_simple({Family::F, 4}) == 52);
  CHECK(dim_simple({Family::E, 6}) == 78);
  CHECK(dim_simple({Family::E, 7}) == 133);
  CHECK(dim_simple({Family::E, 8}) == 248);
  CHECK(dim_simple({Family::C, 5}) == 55);
  CHECK(borel_dim({Family::E, 8}) == 128);
}

TEST_CASE("closed forms stay exact at the rank cap") {
  SimpleType a{Family::A, kMaxRank};
  CHECK(num_positive_roots(a) == std::uint64_t{kMaxRank} * (kMaxRank + 1) / 2);
  CHECK_THROWS_AS(require_canonical({Family::A, kMaxRank + 1}), ValidationError);
}

TEST_CASE("canonical spellings") {
  CHECK(canonicalize(Family::B, 1) == std::vector<SimpleType>{{Family::A, 1}});
  CHECK(canonicalize(Family::C, 2) == std::vector<SimpleType>{{Family::B, 2}});
  CHECK(canonicalize(Family::D, 3) == std::vector<SimpleType>{{Family::A, 3}});
  CHECK(canonicalize(Family::D, 2) == std::vector<SimpleType>{{Family::A, 1}, {Family::A, 1}});
  CHECK_THROWS_AS(canonicalize(Family::E, 9), UnknownTypeError);
  CHECK_THROWS_AS(canonicalize(Family::F, 3), UnknownTypeError);
  CHECK_THROWS_AS(canonicalize(Family::A, 0), UnknownTypeError);
  CHECK_FALSE(is_canonical({Family::C, 2}));
  CHECK_FALSE(is_canonical({Family::D, 3}));
}

TEST_CASE("Levi factors match the diagram with one node deleted") {
  for (SimpleType t : canonical_types_up_to(9)) {
    auto a = oracle::cartan(t);
    for (std::uint32_t i = 1; i <= t.rank; ++i) {
      CAPTURE(t.name());
      CAPTURE(i);
      auto levi = levi_factors(t, i);
      std::uint64_t n = 0, rank = 0;
      for (SimpleType s : levi) {
        n += num_positive_roots(s);
        rank += s.rank;
      }
      CHECK(rank + 1 == t.rank);
      CHECK(n == oracle::positive_roots(oracle::delete_node(a, static_cast<int>(i) - 1)));
    }
  }
}

TEST_CASE("last node Levi has semisimple rank r-1 and one component") {
  CHECK(levi_factors({Family::E, 8}, last_node({Family::E, 8})) == std::vector<SimpleType>{{Family::E, 7}});
  CHECK(levi_factors({Family::E, 7}, last_node({Family::E, 7})) == std::vector<SimpleType>{{Family::E, 6}});
  CHECK(levi_factors({Family::E, 6}, last_node({Family::E, 6})) == std::vector<SimpleType>{{Family::D, 5}});
  CHECK(levi_factors({Family::F, 4}, last_node({Family::F, 4})) == std::vector<SimpleType>{{Family::B, 3}});
  CHECK(levi_factors({Family::G, 2}, last_node({Family::G, 2})) == std::vector<SimpleType>{{Family::A, 1}});
}

TEST_CASE("canonical type listing") {
  auto all = canonical_types_up_to(4);
  // A1-A4, B2-B4, C3-C4, D4, F4, G2
  CHECK(all.size() == 12);
  auto sum = std::accumulate(all.begin(), all.end(), std::uint64_t{0},
                             [](std::uint64_t s, SimpleType t) { return s + dim_simple(t); });
  CHECK(sum == 3 + 8 + 15 + 24 + 10 + 21 + 36 + 21 + 36 + 28 + 52 + 14);
}
