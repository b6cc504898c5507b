#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "lendepth/descriptor.hpp"
#include "lendepth/maxsubdb.hpp"

namespace lendepth {

using Rational = boost::rational<std::int64_t>;

struct IntInterval {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact() const noexcept { return lower == upper; }
};

struct RationalInterval {
  Rational lower;
  Rational upper;
  bool exact() const noexcept { return lower == upper; }
};

/// cd = l - depth, as the interval [l - depth_upper, l - depth_lower].
IntInterval chain_difference(const GroupDescriptor& g, Characteristic c, const MaxSubgroupDatabase& db);

/// cr = l / depth, as [l / depth_upper, l / depth_lower]. Throws DomainError for the trivial group.
RationalInterval chain_ratio(const GroupDescriptor& g, Characteristic c, const MaxSubgroupDatabase& db);

enum class CheckVerdict { Holds, Violated, Inconclusive };
std::string to_string(CheckVerdict v);

struct CheckReport {
  CheckVerdict verdict = CheckVerdict::Inconclusive;
  std::string bound;   // the inequality being tested, in words
  std::string detail;  // the numbers that decided it
};

/// dim(G/R(G)) <= 2 cd + 40 sqrt(400 + 2 cd) + 800, compared in squared form.
CheckReport check_cd_bound(const GroupDescriptor& g, Characteristic c, const MaxSubgroupDatabase& db);

/// dim S <= 2 cd + 3 in characteristic 0, dim S <= 2 cd + 40 otherwise.
CheckReport check_simple_cd_bound(SimpleType t, Characteristic c, const MaxSubgroupDatabase& db);

/// dim S^k <= 2 cd + 2 in characteristic 0, dim S^k <= 2 cd + 28 otherwise.
/// Throws DomainError for k < 2.
CheckReport check_ss_cd_bound(SimpleType t, std::uint32_t k, Characteristic c, const MaxSubgroupDatabase& db);

/// dim S < 12 cr in characteristic 0; dim S < ((log2 dim S)^2 + 24) cr otherwise.
CheckReport check_cr_bound(SimpleType t, Characteristic c, const MaxSubgroupDatabase& db);

/// Sum of dims of n pairwise distinct simple types is at least n^2.
/// Throws ValidationError on repeated types or when n != types.size().
CheckReport sum_dims_floor(std::size_t n, const std::vector<SimpleType>& types);

enum class LengthDepthClass { Soluble, QuotientA1Candidate, Impossible };
std::string to_string(LengthDepthClass k);

/// Necessary condition for depth = length: G soluble or G/R(G) = A1.
LengthDepthClass depth_equals_length_classifier(const GroupDescriptor& g);

}  // namespace lendepth
