#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lendepth/descriptor.hpp"

namespace lendepth {

enum class StepKind { Parabolic, LeviDrop, SubspaceStabilizer, TensorOrDiagonal, TableCited, BorelDescent };

std::string to_string(StepKind k);
/// Throws ValidationError for unknown names.
StepKind step_kind_from_string(std::string_view s);

/// Predicate on the characteristic, written as a comma-separated union of
/// atoms: `all`, `p=N` (N = 0 allowed), `p>=N`, `p>0`, `p!=N`. `p>=N` and
/// `p>0` only match primes.
class CharCondition {
 public:
  CharCondition() = default;
  static CharCondition parse(std::string_view text);
  static CharCondition all() { return parse("all"); }

  bool matches(Characteristic c) const;
  const std::string& text() const noexcept { return text_; }

 private:
  enum class Op { All, Eq, Ge, Ne, Positive };
  struct Atom {
    Op op;
    std::uint64_t value;
  };
  std::vector<Atom> atoms_;
  std::string text_;
};

struct MaxStepWitness {
  GroupDescriptor parent;
  GroupDescriptor child;
  CharCondition condition;
  StepKind kind = StepKind::TableCited;
  std::string citation;
};

enum class Completeness { Complete, WitnessesOnly };

struct CompletenessTag {
  GroupDescriptor group;
  CharCondition condition;
  Completeness status = Completeness::WitnessesOnly;
  std::string citation;
};

/// λ(group) >= value whenever the condition holds.
struct LowerBoundFact {
  GroupDescriptor group;
  CharCondition condition;
  std::uint64_t value = 0;
  std::string citation;
};

/// `child` is never a maximal connected subgroup of `parent` under the condition.
struct NonMaximalFact {
  GroupDescriptor parent;
  GroupDescriptor child;
  CharCondition condition;
  std::string citation;
};

struct MaximalList {
  std::vector<MaxStepWitness> subgroups;
  CompletenessTag tag;
};

struct Refutation {
  std::string citation;
};

/// Curated maximal-connected-subgroup facts plus the parametric subgroup
/// families (subspace stabilisers, parabolics, diagonals, products) that the
/// unrefinable chains use. Immutable after loading.
class MaxSubgroupDatabase {
 public:
  /// The data file compiled into the library.
  static const MaxSubgroupDatabase& builtin();
  /// Builtin data, or the file named by LENDEPTH_MAXSUBDB when that is set.
  static MaxSubgroupDatabase load_default();
  static MaxSubgroupDatabase from_file(const std::string& path);
  static MaxSubgroupDatabase from_text(std::string_view text, std::string source = "<memory>");

  const std::string& version() const noexcept { return version_; }
  const std::string& source() const noexcept { return source_; }
  const std::vector<MaxStepWitness>& facts() const noexcept { return facts_; }
  const std::vector<CompletenessTag>& completeness() const noexcept { return complete_; }
  const std::vector<LowerBoundFact>& lower_bounds() const noexcept { return lower_; }

  /// A witness when `child` is certifiably maximal connected in `parent`.
  /// Absence means "not certifiable", not "not maximal".
  std::optional<MaxStepWitness> is_maximal_step(const GroupDescriptor& parent, const GroupDescriptor& child,
                                                Characteristic c) const;

  /// Stored and pattern-generated maximal connected subgroups of `g`. Throws
  /// NotCuratedError when the data file holds nothing about (g, c).
  MaximalList maximal_connected(SimpleType g, Characteristic c) const;

  /// Known maximal connected subgroups of an arbitrary descriptor, and
  /// whether the list is provably complete.
  std::vector<MaxStepWitness> known_children(const GroupDescriptor& node, Characteristic c, bool& complete) const;
  bool is_complete(const GroupDescriptor& node, Characteristic c) const;

  /// Depth lower bound from curated facts and elementary rules: soluble
  /// groups, dimension <= 3, missing maximal A1 subgroups in char 0, S^k >= k+2,
  /// and quotient monotonicity.
  std::uint64_t lower_bound(const GroupDescriptor& node, Characteristic c, std::string* why = nullptr) const;

  /// Non-empty when stored facts show `child` cannot be maximal in `parent`.
  std::optional<Refutation> refutes(const GroupDescriptor& parent, const GroupDescriptor& child,
                                    Characteristic c) const;

  /// Length of a shortest unrefinable chain from `g` to 1 in the step graph.
  /// Best-first search, pruned by proven depth lower bounds. Throws
  /// IncompleteError when a node whose subgroup list is incomplete could
  /// still lie on a shorter chain.
  std::uint64_t depth_bruteforce(SimpleType g, Characteristic c) const;

 private:
  std::optional<MaxStepWitness> simple_step(SimpleType s, const GroupDescriptor& child, Characteristic c,
                                            bool allow_swap) const;
  std::optional<MaxStepWitness> carried_step(const GroupDescriptor& parent, const GroupDescriptor& child,
                                             Characteristic c) const;
  std::vector<MaxStepWitness> simple_children(SimpleType s, Characteristic c) const;
  const std::vector<std::size_t>* rows_for(const GroupDescriptor& parent) const;
  bool has_curated_data(SimpleType g, Characteristic c) const;

  std::string version_;
  std::string source_;
  std::vector<MaxStepWitness> facts_;
  std::vector<CompletenessTag> complete_;
  std::vector<LowerBoundFact> lower_;
  std::vector<NonMaximalFact> nonmax_;
  std::map<std::string, std::vector<std::size_t>> by_parent_;
};

}  // namespace lendepth
