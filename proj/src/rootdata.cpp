#include "lendepth/rootdata.hpp"

#include <array>

#include "lendepth/errors.hpp"

namespace lendepth {

namespace {

// Like canonicalize() but rank 0 of a classical family is the empty group.
void append_canonical(std::vector<SimpleType>& out, Family f, std::uint32_t rank) {
  if (rank == 0 && f <= Family::D) return;
  for (SimpleType t : canonicalize(f, rank)) out.push_back(t);
}

}  // namespace

char family_letter(Family f) noexcept { return static_cast<char>('A' + static_cast<int>(f)); }

std::optional<Family> family_from_letter(char c) noexcept {
  if (c < 'A' || c > 'G') return std::nullopt;
  return static_cast<Family>(c - 'A');
}

std::string SimpleType::name() const { return family_letter(family) + std::to_string(rank); }

bool is_canonical(SimpleType t) noexcept {
  if (t.rank > kMaxRank) return false;
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 3;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

void require_canonical(SimpleType t) {
  if (t.rank > kMaxRank) throw ValidationError("rank of " + t.name() + " exceeds the cap 2^20");
  if (!is_canonical(t)) throw ValidationError(t.name() + " is not a canonical simple type");
}

std::vector<SimpleType> canonicalize(Family family, std::uint32_t rank) {
  const SimpleType t{family, rank};
  if (rank > kMaxRank) throw ValidationError("rank of " + t.name() + " exceeds the cap 2^20");
  switch (family) {
    case Family::A:
      if (rank >= 1) return {t};
      break;
    case Family::B:
      if (rank == 1) return {{Family::A, 1}};
      if (rank >= 2) return {t};
      break;
    case Family::C:
      if (rank == 1) return {{Family::A, 1}};
      if (rank == 2) return {{Family::B, 2}};
      if (rank >= 3) return {t};
      break;
    case Family::D:
      if (rank == 2) return {{Family::A, 1}, {Family::A, 1}};
      if (rank == 3) return {{Family::A, 3}};
      if (rank >= 4) return {t};
      break;
    case Family::E:
      if (rank >= 6 && rank <= 8) return {t};
      break;
    case Family::F:
      if (rank == 4) return {t};
      break;
    case Family::G:
      if (rank == 2) return {t};
      break;
  }
  throw UnknownTypeError("unknown simple type " + t.name());
}

std::uint64_t num_positive_roots(SimpleType t) {
  require_canonical(t);
  const std::uint64_t r = t.rank;
  switch (t.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

std::uint64_t dim_simple(SimpleType t) { return t.rank + 2 * num_positive_roots(t); }

std::uint64_t borel_dim(SimpleType t) { return num_positive_roots(t) + t.rank; }

bool is_classical(SimpleType t) noexcept { return t.family <= Family::D; }
bool is_exceptional(SimpleType t) noexcept { return t.family >= Family::E; }

std::uint32_t node_count(SimpleType t) noexcept { return t.rank; }

std::vector<SimpleType> levi_factors(SimpleType t, std::uint32_t node) {
  require_canonical(t);
  if (node < 1 || node > t.rank) throw ValidationError("node out of range for " + t.name());
  const std::uint32_t r = t.rank;
  const std::uint32_t i = node;
  std::vector<SimpleType> out;
  auto a = [&](std::uint32_t k) { append_canonical(out, Family::A, k); };
  switch (t.family) {
    case Family::A:
      a(i - 1);
      a(r - i);
      break;
    case Family::B:
      a(i - 1);
      append_canonical(out, Family::B, r - i);
      break;
    case Family::C:
      a(i - 1);
      append_canonical(out, Family::C, r - i);
      break;
    case Family::D:
      if (i + 2 <= r) {
        a(i - 1);
        append_canonical(out, Family::D, r - i);
      } else {
        a(r - 1);
      }
      break;
    case Family::E: {
      // Bourbaki: chain 1-3-4-5-...-r with node 2 attached to node 4.
      using L = std::vector<SimpleType>;
      static const std::array<L, 6> e6 = {
          L{{Family::D, 5}}, L{{Family::A, 5}}, L{{Family::A, 4}, {Family::A, 1}},
          L{{Family::A, 2}, {Family::A, 2}, {Family::A, 1}}, L{{Family::A, 4}, {Family::A, 1}},
          L{{Family::D, 5}}};
      static const std::array<L, 7> e7 = {
          L{{Family::D, 6}}, L{{Family::A, 6}}, L{{Family::A, 5}, {Family::A, 1}},
          L{{Family::A, 3}, {Family::A, 2}, {Family::A, 1}}, L{{Family::A, 4}, {Family::A, 2}},
          L{{Family::D, 5}, {Family::A, 1}}, L{{Family::E, 6}}};
      static const std::array<L, 8> e8 = {
          L{{Family::D, 7}}, L{{Family::A, 7}}, L{{Family::A, 6}, {Family::A, 1}},
          L{{Family::A, 4}, {Family::A, 2}, {Family::A, 1}}, L{{Family::A, 4}, {Family::A, 3}},
          L{{Family::D, 5}, {Family::A, 2}}, L{{Family::E, 6}, {Family::A, 1}},
          L{{Family::E, 7}}};
      out = r == 6 ? e6[i - 1] : r == 7 ? e7[i - 1] : e8[i - 1];
      break;
    }
    case Family::F: {
      // 1 - 2 => 3 - 4 with nodes 1, 2 long.
      using L = std::vector<SimpleType>;
      static const std::array<L, 4> f4 = {L{{Family::C, 3}}, L{{Family::A, 2}, {Family::A, 1}},
                                          L{{Family::A, 2}, {Family::A, 1}}, L{{Family::B, 3}}};
      out = f4[i - 1];
      break;
    }
    case Family::G:
      out = {{Family::A, 1}};
      break;
  }
  return out;
}

std::uint32_t last_node(SimpleType t) noexcept { return t.rank; }

bool is_cominuscule(SimpleType t, std::uint32_t node) noexcept {
  switch (t.family) {
    case Family::A: return node >= 1 && node <= t.rank;
    case Family::B: return node == 1;
    case Family::C: return node == t.rank;
    case Family::D: return node == 1 || node + 1 == t.rank || node == t.rank;
    case Family::E: return (t.rank == 6 && (node == 1 || node == 6)) || (t.rank == 7 && node == 7);
    case Family::F:
    case Family::G: return false;
  }
  return false;
}

std::vector<SimpleType> alias_spellings(SimpleType t) {
  std::vector<SimpleType> out{t};
  if (t == SimpleType{Family::B, 2}) out.push_back({Family::C, 2});
  if (t == SimpleType{Family::A, 3}) out.push_back({Family::D, 3});
  if (t == SimpleType{Family::A, 1}) {
    out.push_back({Family::B, 1});
    out.push_back({Family::C, 1});
  }
  return out;
}

std::vector<SimpleType> canonical_types_up_to(std::uint32_t max_rank) {
  std::vector<SimpleType> out;
  for (int f = 0; f <= static_cast<int>(Family::G); ++f) {
    for (std::uint32_t r = 1; r <= max_rank; ++r) {
      SimpleType t{static_cast<Family>(f), r};
      if (is_canonical(t)) out.push_back(t);
    }
  }
  return out;
}

}  // namespace lendepth
