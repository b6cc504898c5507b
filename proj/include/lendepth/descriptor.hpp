#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lendepth/rootdata.hpp"

namespace lendepth {

/// Field characteristic: zero or a prime.
class Characteristic {
 public:
  static Characteristic zero() noexcept { return Characteristic(0); }
  /// Throws ValidationError unless `p` is prime.
  static Characteristic prime(std::uint64_t p);
  /// 0 for characteristic zero, otherwise a prime.
  static Characteristic from_value(std::uint64_t v) { return v == 0 ? zero() : prime(v); }

  bool is_zero() const noexcept { return value_ == 0; }
  std::uint64_t value() const noexcept { return value_; }
  std::string to_string() const { return std::to_string(value_); }

  friend bool operator==(Characteristic, Characteristic) = default;

 private:
  explicit Characteristic(std::uint64_t v) : value_(v) {}
  std::uint64_t value_;
};

bool is_prime(std::uint64_t n) noexcept;

/// `count` copies of one simple factor.
struct FactorPower {
  SimpleType type;
  std::uint32_t count = 1;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

inline constexpr std::uint64_t kMaxSolubleDim = std::uint64_t{1} << 40;
inline constexpr std::uint32_t kMaxMultiplicity = 1u << 20;

/// A connected group reduced to what the length and depth formulas read:
/// dim R_u(G), the dimension of the central torus of G/R_u(G), and the simple
/// factors of its semisimple part. Extension data is forgotten, so two
/// non-isomorphic groups can share a descriptor.
class GroupDescriptor {
 public:
  GroupDescriptor() = default;
  GroupDescriptor(std::uint64_t u, std::uint64_t z, const std::vector<SimpleType>& factors = {});

  static GroupDescriptor trivial() { return {}; }
  static GroupDescriptor simple(SimpleType t) { return GroupDescriptor(0, 0, {t}); }
  static GroupDescriptor power(SimpleType t, std::uint32_t k);
  static GroupDescriptor soluble(std::uint64_t u, std::uint64_t z) { return GroupDescriptor(u, z); }

  std::uint64_t unipotent_dim() const noexcept { return u_; }
  std::uint64_t torus_dim() const noexcept { return z_; }
  /// Distinct factor types with multiplicities, sorted by (family, rank) descending.
  const std::vector<FactorPower>& factors() const noexcept { return factors_; }

  std::uint64_t dim() const;
  std::uint64_t radical_dim() const noexcept { return u_ + z_; }
  const std::vector<FactorPower>& semisimple_part() const noexcept { return factors_; }
  /// Total number of simple factors counted with multiplicity.
  std::uint64_t factor_count() const noexcept;
  std::uint64_t semisimple_rank() const noexcept;

  bool is_trivial() const noexcept { return u_ == 0 && z_ == 0 && factors_.empty(); }
  bool is_soluble() const noexcept { return factors_.empty(); }
  bool is_reductive() const noexcept { return u_ == 0; }
  /// u = z = 0 and exactly one simple factor.
  std::optional<SimpleType> as_simple() const;
  /// u = z = 0 and a single isotypic power S^k (k >= 1).
  std::optional<FactorPower> as_pure_power() const;
  std::uint32_t multiplicity(SimpleType t) const noexcept;

  GroupDescriptor with_unipotent(std::uint64_t u) const;
  GroupDescriptor with_torus(std::uint64_t z) const;
  GroupDescriptor plus_factor(SimpleType t, std::uint32_t count = 1) const;
  /// Throws ValidationError if `t` does not occur.
  GroupDescriptor minus_factor(SimpleType t) const;
  /// Semisimple and toral part only (u dropped).
  GroupDescriptor reductive_quotient() const { return with_unipotent(0); }
  GroupDescriptor semisimple_quotient() const;

  /// Direct-product style concatenation: dimensions and factor multisets add.
  friend GroupDescriptor operator+(const GroupDescriptor& a, const GroupDescriptor& b);
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

  /// Inverse of parse(): "U6 A2 A1 T1", "A1^3 T2", "1".
  std::string render() const;

 private:
  void add(SimpleType t, std::uint64_t count);
  std::uint64_t u_ = 0;
  std::uint64_t z_ = 0;
  std::vector<FactorPower> factors_;
};

/// Ordering used for containers keyed by descriptors.
bool descriptor_less(const GroupDescriptor& a, const GroupDescriptor& b);

/// Parses the descriptor grammar. Terms are separated by whitespace or '*':
///   U<n>            unipotent radical dimension n
///   T<n>            central torus dimension n
///   A<r> ... G2     simple factor, canonicalized (D3 -> A3, C2 -> B2, ...)
///   <term>^<k>      k copies of a simple factor
/// The literal `1` is the trivial group. Throws ParseError or UnknownTypeError.
GroupDescriptor parse_descriptor(std::string_view text);

}  // namespace lendepth
