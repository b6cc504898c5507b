#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lendepth {

enum class Family : std::uint8_t { A, B, C, D, E, F, G };

char family_letter(Family f) noexcept;
std::optional<Family> family_from_letter(char c) noexcept;

/// Ranks above this are rejected; every closed form stays well inside 64 bits.
inline constexpr std::uint32_t kMaxRank = 1u << 20;

/// A simple-group type X_r. Only canonical spellings are valid inputs to the
/// counting functions; use canonicalize() for the low-rank aliases.
struct SimpleType {
  Family family = Family::A;
  std::uint32_t rank = 1;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend std::strong_ordering operator<=>(const SimpleType&, const SimpleType&) = default;

  std::string name() const;  // "A2", "E8"
};

bool is_canonical(SimpleType t) noexcept;

/// Throws ValidationError unless `t` is canonical and within the rank cap.
void require_canonical(SimpleType t);

/// Resolves B1, C1 -> A1; D2 -> A1 A1; D3 -> A3; C2 -> B2. Unknown types
/// (E5, F3, D1, rank 0, ...) throw UnknownTypeError.
std::vector<SimpleType> canonicalize(Family family, std::uint32_t rank);

std::uint64_t num_positive_roots(SimpleType t);
std::uint64_t dim_simple(SimpleType t);
std::uint64_t borel_dim(SimpleType t);

bool is_classical(SimpleType t) noexcept;
bool is_exceptional(SimpleType t) noexcept;

/// Number of nodes of the Dynkin diagram (equals the rank).
std::uint32_t node_count(SimpleType t) noexcept;

/// Canonical simple factors of the derived Levi subgroup of the maximal
/// parabolic obtained by deleting Dynkin node `node` (1-based, Bourbaki labels).
std::vector<SimpleType> levi_factors(SimpleType t, std::uint32_t node);

/// Node whose maximal parabolic the length chains use: the last node in
/// Bourbaki labelling (A_r: r, B_r/C_r: r, D_r: r, E_n: n, F4: 4, G2: 2).
std::uint32_t last_node(SimpleType t) noexcept;

/// True when the parabolic at `node` has abelian unipotent radical, so its
/// Levi subgroup is maximal in it.
bool is_cominuscule(SimpleType t, std::uint32_t node) noexcept;

/// Alternative spellings of a canonical type that the subgroup patterns
/// should also try: B2 is also C2, A3 is D3, A1 is B1/C1.
std::vector<SimpleType> alias_spellings(SimpleType t);

/// Every canonical simple type of rank <= max_rank, ordered by family then rank.
std::vector<SimpleType> canonical_types_up_to(std::uint32_t max_rank);

}  // namespace lendepth
