#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lendepth/descriptor.hpp"
#include "lendepth/maxsubdb.hpp"

namespace lendepth {

/// What a certificate says about one step; verification re-derives the witness.
struct StepClaim {
  StepKind kind = StepKind::TableCited;
  std::string citation;
};

/// G = G_0 > G_1 > ... > G_t = 1 in a fixed characteristic.
struct ChainCertificate {
  Characteristic characteristic = Characteristic::zero();
  std::vector<GroupDescriptor> nodes;
  std::vector<StepClaim> steps;  // one per adjacent pair, or empty when unannotated

  std::size_t length() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }
};

enum class Verdict { Certified, Uncertifiable, Refuted };
std::string to_string(Verdict v);

struct StepReport {
  std::size_t index = 0;  // step i joins nodes[i] and nodes[i+1]
  GroupDescriptor parent;
  GroupDescriptor child;
  Verdict verdict = Verdict::Uncertifiable;
  std::optional<MaxStepWitness> witness;
  std::string reason;
};

struct VerificationReport {
  Verdict overall = Verdict::Uncertifiable;
  std::size_t length = 0;
  std::vector<StepReport> steps;
};

/// Throws StructuralError when the dimensions do not strictly decrease, the
/// last node is not trivial, or the step count is wrong.
void check_structure(const ChainCertificate& cert);

/// Per-step verdicts; overall is Refuted if any step is, Certified if all are.
VerificationReport verify(const ChainCertificate& cert, const MaxSubgroupDatabase& db);

std::size_t length_of(const ChainCertificate& cert);

/// Certificate whose steps carry the witnesses found in `db`; steps without a
/// witness get an empty TableCited claim.
ChainCertificate annotate(Characteristic c, std::vector<GroupDescriptor> nodes, const MaxSubgroupDatabase& db);

/// Canonical text form (LF line endings, byte-deterministic).
std::string serialize(const ChainCertificate& cert);
/// Inverse of serialize(). Throws ParseError.
ChainCertificate parse_certificate(std::string_view text);

/// "A6 > B3 > G2 > A1 > U1 T1 > T1 > 1"
std::string render_chain(const ChainCertificate& cert);
/// Parses the ' > ' separated form above. Throws ParseError.
std::vector<GroupDescriptor> parse_chain(std::string_view text);

}  // namespace lendepth
