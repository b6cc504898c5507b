#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lendepth/chaincert.hpp"
#include "lendepth/descriptor.hpp"
#include "lendepth/maxsubdb.hpp"

namespace lendepth {

using BigInt = boost::multiprecision::cpp_int;

struct DepthResult {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact = false;
  std::vector<std::string> provenance;
};

/// Depth in characteristic 0.
std::uint64_t depth_char0(SimpleType t);

/// Exact depth in characteristic p from the low-rank and exceptional tables
/// (rank <= 4 and all exceptional types, A1 for every p). Values hold from
/// their row down to the next listed row.
std::optional<std::uint64_t> depth_table_p(SimpleType t, std::uint64_t p);

/// Exact depth where known: characteristic 0 or a table entry.
std::optional<std::uint64_t> depth_exact(SimpleType t, Characteristic c);

/// min { l : e_l(p) >= x } for e_1 = p, e_(l+1) = p^(e_l^2). Throws DomainError for x = 0 or p < 2.
std::uint64_t psi(std::uint64_t p, const BigInt& x);

/// Lower bound: exact value when known, else max(psi_p(rank), 4).
std::uint64_t depth_lower(SimpleType t, Characteristic c);
/// Same bound for a classical rank too large to instantiate as a SimpleType.
std::uint64_t depth_lower_for_rank(Family f, const BigInt& rank, Characteristic c);

/// Upper bounds from the recursive classical constructions, memoised per
/// characteristic. Values are lengths of chains that build_chain returns.
class ClassicalBuilder {
 public:
  ClassicalBuilder(std::uint64_t p, const MaxSubgroupDatabase& db);

  /// Length of the built chain. Throws DomainError unless t is classical of rank >= 2.
  std::uint64_t value(SimpleType t);
  /// Which construction produced value(t).
  std::string construction(SimpleType t);
  /// Node list of the built chain, ending at the trivial group.
  std::vector<GroupDescriptor> chain(SimpleType t);

 private:
  struct Entry {
    std::uint64_t value = 0;
    int how = 0;
    std::uint32_t aux = 0;
  };
  Entry& entry(Family f, std::uint32_t r);
  Entry compute(Family f, std::uint32_t r);
  std::uint64_t v(Family f, std::uint32_t r) { return entry(f, r).value; }
  void emit(SimpleType t, std::vector<GroupDescriptor>& out);
  void emit_into(const GroupDescriptor& carried, SimpleType t, std::vector<GroupDescriptor>& out);

  std::uint64_t p_;
  const MaxSubgroupDatabase& db_;
  std::vector<Entry> memo_[4];  // A, B, C, D indexed by rank; value 0 marks an empty slot
  std::map<SimpleType, std::vector<GroupDescriptor>> table_chains_;
};

struct ClassicalBound {
  std::uint64_t length = 0;
  ChainCertificate chain;
  std::string construction;
};

/// Builds the classical recursive chain for t at prime p. Throws DomainError
/// for exceptional types or rank < 2.
ClassicalBound depth_upper_classical(SimpleType t, std::uint64_t p, const MaxSubgroupDatabase& db);

/// Interval for an arbitrary descriptor.
DepthResult depth(const GroupDescriptor& g, Characteristic c, const MaxSubgroupDatabase& db);

/// Shortest chain reachable through the database's known steps, with at most
/// `max_length` steps. Empty when none is found.
std::vector<GroupDescriptor> shortest_known_chain(const GroupDescriptor& g, Characteristic c,
                                                  const MaxSubgroupDatabase& db, std::uint64_t max_length);

struct ShortestChain {
  ChainCertificate chain;
  bool known_optimal = false;
  std::string construction;
};

/// Shortest chain the engine can build: table and characteristic-0 types via
/// the database, classical types via ClassicalBuilder. Throws DomainError
/// when nothing applies.
ShortestChain shortest_chain(SimpleType t, Characteristic c, const MaxSubgroupDatabase& db);

struct SteinbergTower {
  std::vector<std::string> ranks;  // decimal, or symbolic "(p^(x^2)-1)/2" beyond the digit cap
  std::vector<bool> exact;
  std::uint64_t bound = 0;         // depth of B_(r_k) is at most k + 3
};

/// r_0 = 1, r_1 = (p-1)/2, r_(l+1) = (p^(r_l^2) - 1)/2. Throws DomainError for p < 5.
SteinbergTower steinberg_tower(std::uint64_t p, std::uint32_t k, std::size_t digit_cap = 4096);

}  // namespace lendepth
