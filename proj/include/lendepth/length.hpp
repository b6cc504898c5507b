#pragma once

#include <cstdint>

#include "lendepth/chaincert.hpp"
#include "lendepth/descriptor.hpp"
#include "lendepth/maxsubdb.hpp"

namespace lendepth {

/// Maximal length of an unrefinable chain: u + z + sum of (dim B + rank) over simple factors.
std::uint64_t length(const GroupDescriptor& g);

struct HalfDimCheck {
  std::uint64_t length = 0;
  std::uint64_t dim = 0;
  bool exceeds = false;  // 2 l > dim
};

/// Throws DomainError for the trivial group.
HalfDimCheck length_exceeds_half_dim(const GroupDescriptor& g);

/// True iff every simple factor is A1.
bool length_equals_dim(const GroupDescriptor& g);

/// A chain of length l(t): maximal parabolics at the last node, one Levi rank
/// at a time, then the soluble residue (unipotent part first, then the torus).
ChainCertificate max_length_chain(SimpleType t, Characteristic c, const MaxSubgroupDatabase& db);

}  // namespace lendepth
