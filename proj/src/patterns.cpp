#include <algorithm>

#include "internal.hpp"
#include "lendepth/errors.hpp"

namespace lendepth::detail {

namespace {

CharCondition cond(Characteristic c) { return CharCondition::parse("p=" + c.to_string()); }

MaxStepWitness make(SimpleType parent, GroupDescriptor child, CharCondition cc, StepKind kind, std::string cite) {
  return MaxStepWitness{GroupDescriptor::simple(parent), std::move(child), std::move(cc), kind, std::move(cite)};
}

GroupDescriptor product(const std::vector<std::vector<SimpleType>>& parts) {
  GroupDescriptor g;
  for (const auto& p : parts)
    for (SimpleType t : p) g = g.plus_factor(t);
  return g;
}

bool wants(const GroupDescriptor* target, const GroupDescriptor& child) { return !target || *target == child; }

// C-rank of a factor when it is a symplectic group: A1 = C1, B2 = C2.
std::uint32_t c_rank(SimpleType t) {
  if (t == SimpleType{Family::A, 1}) return 1;
  if (t == SimpleType{Family::B, 2}) return 2;
  return t.family == Family::C ? t.rank : 0;
}

// D-rank of a factor when it is an orthogonal group of even degree: A3 = D3.
std::uint32_t d_rank(SimpleType t) {
  if (t == SimpleType{Family::A, 3}) return 3;
  return t.family == Family::D ? t.rank : 0;
}

// Candidate split points read off the target, so verification never scans all a.
std::vector<std::uint32_t> split_candidates(const GroupDescriptor* target, std::uint32_t r,
                                            std::uint32_t (*rank_of)(SimpleType), std::uint32_t lo) {
  std::vector<std::uint32_t> out;
  if (target) {
    if (target->unipotent_dim() || target->torus_dim()) return out;
    for (const auto& f : target->factors()) {
      std::uint32_t a = rank_of(f.type);
      if (a) out.push_back(a);
    }
    if (target->multiplicity({Family::A, 1}) >= 2) out.push_back(2);  // D2 = A1 A1
  } else {
    for (std::uint32_t a = lo; a <= r / 2; ++a) out.push_back(a);
  }
  std::vector<std::uint32_t> norm;
  for (std::uint32_t a : out) {
    if (a >= r) continue;
    if (a > r / 2) a = r - a;
    if (a >= lo && a < r && std::find(norm.begin(), norm.end(), a) == norm.end()) norm.push_back(a);
  }
  return norm;
}

}  // namespace

SimpleType swap_bc(SimpleType t) noexcept {
  if (t.rank >= 3 && t.family == Family::B) return {Family::C, t.rank};
  if (t.rank >= 3 && t.family == Family::C) return {Family::B, t.rank};
  return t;
}

GroupDescriptor swap_bc(const GroupDescriptor& g) {
  GroupDescriptor out(g.unipotent_dim(), g.torus_dim());
  for (const auto& f : g.factors()) out = out.plus_factor(swap_bc(f.type), f.count);
  return out;
}

std::vector<MaxStepWitness> parabolic_children(SimpleType t) {
  std::vector<MaxStepWitness> out;
  const std::uint64_t n = num_positive_roots(t);
  for (std::uint32_t i = 1; i <= t.rank; ++i) {
    auto levi = levi_factors(t, i);
    std::uint64_t nl = 0;
    for (SimpleType s : levi) nl += num_positive_roots(s);
    GroupDescriptor child(n - nl, 1, levi);
    if (std::any_of(out.begin(), out.end(), [&](const MaxStepWitness& w) { return w.child == child; })) continue;
    out.push_back(make(t, child, CharCondition::all(), StepKind::Parabolic, "maximal parabolic subgroup"));
  }
  return out;
}

std::vector<MaxStepWitness> pattern_children(SimpleType t, Characteristic c, const GroupDescriptor* target) {
  std::vector<MaxStepWitness> out;
  const std::uint32_t r = t.rank;
  auto push = [&](GroupDescriptor child, CharCondition cc, StepKind kind, const char* cite) {
    if (!wants(target, child)) return;
    for (const auto& w : out)
      if (w.child == child) return;
    out.push_back(make(t, std::move(child), std::move(cc), kind, cite));
  };

  if (!target || (target->torus_dim() == 1 && target->unipotent_dim() > 0)) {
    if (target && t.rank > 64) {
      // Large rank: derive candidate nodes from the target's factor ranks instead of scanning.
      std::vector<std::uint32_t> nodes{1, 2, r - 1, r};
      for (const auto& f : target->factors()) {
        nodes.push_back(f.type.rank + 1);
        if (f.type.rank < r) nodes.push_back(r - f.type.rank);
      }
      const std::uint64_t n = num_positive_roots(t);
      for (std::uint32_t i : nodes) {
        if (i < 1 || i > r) continue;
        auto levi = levi_factors(t, i);
        std::uint64_t nl = 0;
        for (SimpleType s : levi) nl += num_positive_roots(s);
        push(GroupDescriptor(n - nl, 1, levi), CharCondition::all(), StepKind::Parabolic, "maximal parabolic subgroup");
      }
    } else {
      for (auto& w : parabolic_children(t)) push(w.child, w.condition, w.kind, "maximal parabolic subgroup");
    }
  }

  const std::uint32_t cr = c_rank(t);
  if (cr >= 2) {
    for (std::uint32_t a : split_candidates(target, cr, c_rank, 1))
      push(product({canonicalize(Family::C, a), canonicalize(Family::C, cr - a)}), CharCondition::all(),
           StepKind::SubspaceStabilizer, "stabiliser of a non-degenerate subspace: C_r > C_a C_(r-a)");
  }
  const std::uint32_t dr = d_rank(t);
  if (dr >= 3) {
    for (std::uint32_t a : split_candidates(target, dr, d_rank, 2))
      push(product({canonicalize(Family::D, a), canonicalize(Family::D, dr - a)}), CharCondition::all(),
           StepKind::SubspaceStabilizer, "stabiliser of a non-degenerate subspace: D_r > D_a D_(r-a)");
    push(product({canonicalize(Family::B, dr - 1)}), CharCondition::all(), StepKind::SubspaceStabilizer,
         "stabiliser of a non-singular vector: D_r > B_(r-1)");
  }
  if (t.family == Family::B) {
    push(product({canonicalize(Family::D, r)}), CharCondition::all(), StepKind::SubspaceStabilizer,
         "stabiliser of a hyperplane: B_r > D_r");
  }
  if (t.family == Family::A && r >= 3 && r % 2 == 1) {
    push(product({canonicalize(Family::C, (r + 1) / 2)}), CharCondition::all(), StepKind::TableCited,
         "stabiliser of a symplectic form: A_r > C_((r+1)/2)");
  }
  if (t.family == Family::A && r >= 2 && r % 2 == 0 && c.value() != 2) {
    push(product({canonicalize(Family::B, r / 2)}), CharCondition::parse("p=0,p>=3"), StepKind::TableCited,
         "stabiliser of an orthogonal form: A_r > B_(r/2), p != 2");
  }
  if (c.is_zero() && ((t.family == Family::B && r != 3) || (t.family == Family::C && r >= 3))) {
    push(GroupDescriptor::simple({Family::A, 1}), cond(c), StepKind::TableCited,
         "principal A1 is maximal in B_r (r != 3) and C_r in characteristic 0");
  }
  return out;
}

}  // namespace lendepth::detail
