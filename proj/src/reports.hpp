#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "lendepth/chaincert.hpp"
#include "lendepth/descriptor.hpp"
#include "lendepth/maxsubdb.hpp"

namespace lendepth::report {

using Json = nlohmann::ordered_json;

Json invariants(const MaxSubgroupDatabase& db, const GroupDescriptor& g, Characteristic c);

/// Throws ValidationError for an unknown name and std::logic_error when the
/// brute-force cross-check disagrees with a table value.
Json table(const MaxSubgroupDatabase& db, const std::string& name);

struct Chain {
  ChainCertificate certificate;
  Json summary;
};
Chain chain(const MaxSubgroupDatabase& db, const GroupDescriptor& g, Characteristic c, bool shortest);

Json verification(const MaxSubgroupDatabase& db, const ChainCertificate& cert);

struct SweepRange {
  std::uint32_t max_rank = 8;
  std::uint64_t max_p = 23;
  std::uint32_t max_k = 6;
};
Json sweep(const MaxSubgroupDatabase& db, const std::string& bound, const SweepRange& range);

}  // namespace lendepth::report
