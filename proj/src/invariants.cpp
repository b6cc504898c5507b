#include "lendepth/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lendepth/depth.hpp"
#include "lendepth/errors.hpp"
#include "lendepth/length.hpp"

namespace lendepth {

namespace {

std::int64_t to_i64(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) throw DomainError("value exceeds the rational range");
  return static_cast<std::int64_t>(v);
}

std::string interval_text(std::uint64_t lo, std::uint64_t hi) {
  if (lo == hi) return std::to_string(lo);
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

// floor(log2 d) and ceil(log2 d) for d >= 1.
std::uint64_t floor_log2(std::uint64_t d) {
  std::uint64_t k = 0;
  while (d >>= 1) ++k;
  return k;
}

std::uint64_t ceil_log2(std::uint64_t d) {
  const auto f = floor_log2(d);
  return (std::uint64_t{1} << f) == d ? f : f + 1;
}

// Verdict for "lhs <= rhs(cd)" where rhs grows with cd and cd lies in [lo, hi].
template <typename Holds>
CheckVerdict monotone_verdict(std::uint64_t cd_lo, std::uint64_t cd_hi, Holds holds) {
  if (holds(cd_lo)) return CheckVerdict::Holds;
  if (cd_lo == cd_hi) return CheckVerdict::Violated;
  return CheckVerdict::Inconclusive;
}

}  // namespace

std::string to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::Holds: return "Holds";
    case CheckVerdict::Violated: return "Violated";
    case CheckVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(LengthDepthClass k) {
  switch (k) {
    case LengthDepthClass::Soluble: return "Soluble";
    case LengthDepthClass::QuotientA1Candidate: return "QuotientA1Candidate";
    case LengthDepthClass::Impossible: return "Impossible";
  }
  return "?";
}

IntInterval chain_difference(const GroupDescriptor& g, Characteristic c, const MaxSubgroupDatabase& db) {
  const auto l = length(g);
  const auto d = depth(g, c, db);
  return {l - d.upper, l - d.lower};
}

RationalInterval chain_ratio(const GroupDescriptor& g, Characteristic c, const MaxSubgroupDatabase& db) {
  if (g.is_trivial()) throw DomainError("chain ratio of the trivial group is undefined");
  const auto l = to_i64(length(g));
  const auto d = depth(g, c, db);
  return {Rational(l, to_i64(d.upper)), Rational(l, to_i64(d.lower))};
}

CheckReport check_cd_bound(const GroupDescriptor& g, Characteristic c, const MaxSubgroupDatabase& db) {
  CheckReport rep;
  rep.bound = "dim(G/R(G)) <= 2 cd + 40 sqrt(400 + 2 cd) + 800";
  std::uint64_t dim_bar = 0;
  for (const auto& f : g.factors()) dim_bar += f.count * dim_simple(f.type);
  if (dim_bar == 0) {
    rep.verdict = CheckVerdict::Holds;
    rep.detail = "soluble: dim(G/R(G)) = 0";
    return rep;
  }
  const auto cd = chain_difference(g, c, db);
  auto holds = [&](std::uint64_t x) {
    const BigInt e = BigInt(dim_bar) - 2 * BigInt(x) - 800;
    if (e <= 0) return true;
    return e * e <= 1600 * (400 + 2 * BigInt(x));
  };
  rep.verdict = monotone_verdict(cd.lower, cd.upper, holds);
  rep.detail = "dim(G/R(G)) = " + std::to_string(dim_bar) + ", cd = " + interval_text(cd.lower, cd.upper);
  return rep;
}

CheckReport check_simple_cd_bound(SimpleType t, Characteristic c, const MaxSubgroupDatabase& db) {
  require_canonical(t);
  CheckReport rep;
  const std::uint64_t slack = c.is_zero() ? 3 : 40;
  rep.bound = "dim S <= 2 cd + " + std::to_string(slack);
  const auto dim = dim_simple(t);
  const auto cd = chain_difference(GroupDescriptor::simple(t), c, db);
  rep.verdict = monotone_verdict(cd.lower, cd.upper, [&](std::uint64_t x) { return dim <= 2 * x + slack; });
  rep.detail = "dim = " + std::to_string(dim) + ", cd = " + interval_text(cd.lower, cd.upper) +
               ", 2 cd + " + std::to_string(slack) + " = " + interval_text(2 * cd.lower + slack, 2 * cd.upper + slack);
  return rep;
}

CheckReport check_ss_cd_bound(SimpleType t, std::uint32_t k, Characteristic c, const MaxSubgroupDatabase& db) {
  require_canonical(t);
  if (k < 2) throw DomainError("S^k bound needs k >= 2");
  CheckReport rep;
  const std::uint64_t slack = c.is_zero() ? 2 : 28;
  rep.bound = "dim S^k <= 2 cd + " + std::to_string(slack);
  const auto dim = std::uint64_t{k} * dim_simple(t);
  const auto cd = chain_difference(GroupDescriptor::power(t, k), c, db);
  rep.verdict = monotone_verdict(cd.lower, cd.upper, [&](std::uint64_t x) { return dim <= 2 * x + slack; });
  rep.detail = "dim = " + std::to_string(dim) + ", cd = " + interval_text(cd.lower, cd.upper);
  return rep;
}

CheckReport check_cr_bound(SimpleType t, Characteristic c, const MaxSubgroupDatabase& db) {
  require_canonical(t);
  CheckReport rep;
  const auto g = GroupDescriptor::simple(t);
  const BigInt dim = dim_simple(t);
  const BigInt l = length(g);
  const auto d = depth(g, c, db);
  rep.detail = "dim = " + dim.str() + ", l = " + l.str() + ", depth = " + interval_text(d.lower, d.upper);
  // cr is smallest at the upper end of the depth interval, so test dim * depth_upper.
  if (c.is_zero()) {
    rep.bound = "dim S < 12 cr";
    if (dim * d.upper < 12 * l)
      rep.verdict = CheckVerdict::Holds;
    else
      rep.verdict = d.exact ? CheckVerdict::Violated : CheckVerdict::Inconclusive;
    return rep;
  }
  rep.bound = "dim S < ((log2 dim S)^2 + 24) cr";
  const auto dd = dim_simple(t);
  const auto lo = floor_log2(dd), hi = ceil_log2(dd);
  if (dim * d.upper < BigInt(lo * lo + 24) * l)
    rep.verdict = CheckVerdict::Holds;
  else if (d.exact && dim * d.upper >= BigInt(hi * hi + 24) * l)
    rep.verdict = CheckVerdict::Violated;
  else
    rep.verdict = CheckVerdict::Inconclusive;
  rep.detail += ", log2 dim in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
  return rep;
}

CheckReport sum_dims_floor(std::size_t n, const std::vector<SimpleType>& types) {
  if (n != types.size()) throw ValidationError("sum_dims_floor: n does not match the number of types");
  std::set<SimpleType> seen;
  BigInt sum = 0;
  for (auto t : types) {
    require_canonical(t);
    if (!seen.insert(t).second) throw ValidationError("sum_dims_floor: repeated type " + t.name());
    sum += dim_simple(t);
  }
  CheckReport rep;
  rep.bound = "sum of dim S_i >= n^2";
  const BigInt n2 = BigInt(n) * n;
  rep.verdict = sum >= n2 ? CheckVerdict::Holds : CheckVerdict::Violated;
  rep.detail = "sum = " + sum.str() + ", n^2 = " + n2.str();
  return rep;
}

LengthDepthClass depth_equals_length_classifier(const GroupDescriptor& g) {
  if (g.is_soluble()) return LengthDepthClass::Soluble;
  const auto& f = g.factors();
  if (f.size() == 1 && f[0].count == 1 && f[0].type == SimpleType{Family::A, 1})
    return LengthDepthClass::QuotientA1Candidate;
  return LengthDepthClass::Impossible;
}

}  // namespace lendepth
