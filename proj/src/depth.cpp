#include "lendepth/depth.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "internal.hpp"
#include "lendepth/errors.hpp"

namespace lendepth {

namespace {

struct TableColumn {
  SimpleType type;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> breakpoints;  // (first prime, value)
};

const std::vector<TableColumn>& table() {
  static const std::vector<TableColumn> cols = {
      {{Family::A, 2}, {{2, 6}, {3, 4}}},
      {{Family::B, 2}, {{2, 5}, {5, 4}}},
      {{Family::G, 2}, {{2, 5}, {7, 4}}},
      {{Family::A, 3}, {{2, 6}, {3, 5}}},
      {{Family::B, 3}, {{2, 6}, {7, 5}}},
      {{Family::C, 3}, {{2, 6}, {3, 5}, {7, 4}}},
      {{Family::A, 4}, {{2, 9}, {3, 6}, {5, 5}}},
      {{Family::B, 4}, {{2, 7}, {3, 5}, {11, 4}}},
      {{Family::C, 4}, {{2, 7}, {3, 6}, {11, 4}}},
      {{Family::D, 4}, {{2, 7}, {5, 5}}},
      {{Family::F, 4}, {{2, 8}, {3, 6}, {7, 5}, {13, 4}}},
      {{Family::E, 6}, {{2, 6}, {5, 5}}},
      {{Family::E, 7}, {{2, 8}, {3, 7}, {5, 5}, {17, 4}}},
      {{Family::E, 8}, {{2, 9}, {3, 7}, {5, 5}, {23, 4}}},
  };
  return cols;
}

std::uint64_t isqrt_ceil(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;  // n is a logarithm here, so this stays small
  return r * r == n ? r : r + 1;
}

GroupDescriptor canon(Family f, std::uint32_t r) { return GroupDescriptor(0, 0, canonicalize(f, r)); }

std::vector<GroupDescriptor> a1_tail() {
  return {GroupDescriptor::simple({Family::A, 1}), GroupDescriptor::soluble(1, 1), GroupDescriptor::soluble(0, 1),
          GroupDescriptor::trivial()};
}

std::vector<GroupDescriptor> prefix(std::initializer_list<GroupDescriptor> head, std::vector<GroupDescriptor> tail) {
  std::vector<GroupDescriptor> out(head);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::vector<GroupDescriptor> char0_chain(SimpleType t) {
  const std::uint32_t r = t.rank;
  auto s = [](Family f, std::uint32_t k) { return GroupDescriptor::simple({f, k}); };
  const auto g = GroupDescriptor::simple(t);
  const auto g2_tail = prefix({s(Family::G, 2)}, a1_tail());
  switch (t.family) {
    case Family::A:
      if (r == 1) return a1_tail();
      if (r == 2) return prefix({g}, a1_tail());
      if (r == 6) return prefix({g, s(Family::B, 3)}, g2_tail);
      if (r % 2 == 1) return prefix({g, canon(Family::C, (r + 1) / 2)}, a1_tail());
      return prefix({g, canon(Family::B, r / 2)}, a1_tail());
    case Family::B:
      if (r == 3) return prefix({g}, g2_tail);
      return prefix({g}, a1_tail());
    case Family::C: return prefix({g}, a1_tail());
    case Family::D:
      if (r == 4) return prefix({g, s(Family::A, 2)}, a1_tail());
      return prefix({g, canon(Family::B, r - 1)}, a1_tail());
    case Family::E:
      if (r == 6) return prefix({g}, g2_tail);
      return prefix({g}, a1_tail());
    case Family::F:
    case Family::G: return prefix({g}, a1_tail());
  }
  return {};
}

enum How : int {
  kTable,
  kHalve,     // X_r > X_(r/2)^2 > X_(r/2)
  kSplit,     // X_r > X_a X_(r-a), aux = a
  kViaD,      // C_r > D_r (p = 2) or B_r > D_r
  kViaB,      // D_r > B_(r-1)
  kViaB2,     // D5 > B2
  kSwapC,     // B_r chain read from C_r through the special isogeny (p = 2)
  kViaC,      // A_r > C_((r+1)/2)
  kParabolic  // A_r > U_r A_(r-1) T1 > A_(r-1) T1 > A_(r-1) > C_(r/2)
};

constexpr const char* kHowNames[] = {
    "table value",
    "subspace split and diagonal halving",
    "non-degenerate subspace split",
    "orthogonal subgroup D_r",
    "stabiliser of a non-singular vector: B_(r-1)",
    "maximal B2 in D5",
    "special isogeny B_r <-> C_r in characteristic 2",
    "symplectic subgroup C_((r+1)/2)",
    "parabolic descent A_r > U_r A_(r-1) T1 > A_(r-1) T1 > A_(r-1) > C_(r/2)",
};

std::uint32_t top_power(std::uint32_t r) {
  std::uint32_t b = 1;
  while (b * 2 <= r) b *= 2;
  return b;
}

}  // namespace

std::uint64_t depth_char0(SimpleType t) {
  require_canonical(t);
  switch (t.family) {
    case Family::A:
      if (t.rank == 1) return 3;
      if (t.rank == 2) return 4;
      return t.rank == 6 ? 6 : 5;
    case Family::B: return t.rank == 3 ? 5 : 4;
    case Family::D: return 5;
    case Family::E: return t.rank == 6 ? 5 : 4;
    default: return 4;
  }
}

std::optional<std::uint64_t> depth_table_p(SimpleType t, std::uint64_t p) {
  require_canonical(t);
  if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not a prime");
  if (t == SimpleType{Family::A, 1}) return 3;
  for (const auto& col : table()) {
    if (col.type != t) continue;
    std::uint64_t v = 0;
    for (auto [pmin, val] : col.breakpoints)
      if (p >= pmin) v = val;
    return v;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> depth_exact(SimpleType t, Characteristic c) {
  if (c.is_zero()) return depth_char0(t);
  return depth_table_p(t, c.value());
}

std::uint64_t psi(std::uint64_t p, const BigInt& x) {
  if (p < 2) throw DomainError("psi needs p >= 2");
  if (x < 1) throw DomainError("psi needs x >= 1");
  std::uint64_t count = 1;
  BigInt cur = x;
  while (cur > p) {
    // e_(l+1) >= cur  <=>  e_l^2 >= ceil(log_p cur)  <=>  e_l >= ceil(sqrt(ceil(log_p cur)))
    std::uint64_t log = 0;
    BigInt power = 1;
    while (power < cur) {
      power *= p;
      ++log;
    }
    cur = isqrt_ceil(log);
    ++count;
  }
  return count;
}

std::uint64_t depth_lower(SimpleType t, Characteristic c) {
  if (auto e = depth_exact(t, c)) return *e;
  return std::max<std::uint64_t>(4, psi(c.value(), t.rank));
}

std::uint64_t depth_lower_for_rank(Family f, const BigInt& rank, Characteristic c) {
  if (rank < 1) throw ValidationError("rank must be positive");
  if (rank <= kMaxRank) {
    auto types = canonicalize(f, static_cast<std::uint32_t>(rank));
    if (types.size() == 1) return depth_lower(types.front(), c);
    return 4;  // D2 = A1 A1
  }
  if (f != Family::A && f != Family::B && f != Family::C && f != Family::D)
    throw UnknownTypeError(std::string("unknown simple type of family ") + family_letter(f));
  if (c.is_zero()) return f == Family::A || f == Family::D ? 5 : 4;
  return std::max<std::uint64_t>(4, psi(c.value(), rank));
}

ClassicalBuilder::ClassicalBuilder(std::uint64_t p, const MaxSubgroupDatabase& db) : p_(p), db_(db) {
  if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not a prime");
}

ClassicalBuilder::Entry& ClassicalBuilder::entry(Family f, std::uint32_t r) {
  auto& col = memo_[static_cast<int>(f)];
  if (r < col.size() && col[r].value) return col[r];
  // Fill all four families rank by rank so recursion never runs deep.
  const std::size_t start = std::max<std::size_t>(1, memo_[0].size());
  for (auto& m : memo_) m.resize(std::max<std::size_t>(m.size(), std::size_t{r} + 1));
  for (std::uint32_t k = static_cast<std::uint32_t>(start); k <= r; ++k)
    for (Family g : {Family::D, Family::C, Family::B, Family::A})
      if (g != Family::D || k >= 2) memo_[static_cast<int>(g)][k] = compute(g, k);
  return col[r];
}

ClassicalBuilder::Entry ClassicalBuilder::compute(Family f, std::uint32_t r) {
  auto lookup = [&](Family g, std::uint32_t k) { return memo_[static_cast<int>(g)][k].value; };
  auto table_value = [&](Family g, std::uint32_t k) -> std::optional<std::uint64_t> {
    auto types = canonicalize(g, k);
    if (types.size() == 2) return 4;  // D2 = A1 A1: A1 A1 > A1 > U1T1 > T1 > 1
    return depth_table_p(types.front(), p_);
  };
  if (r <= 4) {
    if (auto v = table_value(f, r)) return {*v, kTable, 0};
  }
  Entry best{~std::uint64_t{0}, kTable, 0};
  auto offer = [&](std::uint64_t v, int how, std::uint32_t aux = 0) {
    if (v < best.value) best = {v, how, aux};
  };
  const std::uint32_t b = top_power(r);
  switch (f) {
    case Family::C:
      if (b == r) offer(2 + lookup(Family::C, r / 2), kHalve);
      else offer(1 + lookup(Family::C, b) + lookup(Family::C, r - b), kSplit, b);
      if (p_ == 2) offer(1 + lookup(Family::D, r), kViaD);
      break;
    case Family::D:
      if (p_ == 2) {
        offer(1 + lookup(Family::B, r - 1), kViaB);
        break;
      }
      if (r % 2 == 0) {
        if (b == r) offer(2 + lookup(Family::D, r / 2), kHalve);
        else offer(1 + lookup(Family::D, b) + lookup(Family::D, r - b), kSplit, b);
      } else if (r == 5) {
        offer(1 + lookup(Family::B, 2), kViaB2);
      } else {
        offer(1 + lookup(Family::D, 3) + lookup(Family::D, r - 3), kSplit, 3);
      }
      offer(1 + lookup(Family::B, r - 1), kViaB);
      break;
    case Family::B:
      offer(1 + lookup(Family::D, r), kViaD);
      if (p_ == 2) offer(lookup(Family::C, r), kSwapC);
      break;
    case Family::A:
      if (r % 2 == 1) offer(1 + lookup(Family::C, (r + 1) / 2), kViaC);
      else offer(4 + lookup(Family::C, r / 2), kParabolic);
      break;
    default: break;
  }
  return best;
}

std::uint64_t ClassicalBuilder::value(SimpleType t) {
  require_canonical(t);
  if (!is_classical(t) || t.rank < 2) throw DomainError("classical builder needs a classical type of rank >= 2");
  return v(t.family, t.rank);
}

std::string ClassicalBuilder::construction(SimpleType t) {
  value(t);
  return kHowNames[entry(t.family, t.rank).how];
}

std::vector<GroupDescriptor> ClassicalBuilder::chain(SimpleType t) {
  value(t);
  std::vector<GroupDescriptor> out;
  emit(t, out);
  return out;
}

void ClassicalBuilder::emit(SimpleType t, std::vector<GroupDescriptor>& out) {
  emit_into(GroupDescriptor::trivial(), t, out);
}

// Appends the chain of X_r (t may be a non-canonical spelling such as C2 or D3)
// with `carried` attached to every node.
void ClassicalBuilder::emit_into(const GroupDescriptor& carried, SimpleType t, std::vector<GroupDescriptor>& out) {
  const Family f = t.family;
  const std::uint32_t r = t.rank;
  const Entry e = entry(f, r);
  auto push = [&](const GroupDescriptor& g) { out.push_back(g + carried); };
  auto sub = [&](Family g, std::uint32_t k) { return SimpleType{g, k}; };
  switch (e.how) {
    case kTable: {
      const auto top = canon(f, r);
      std::vector<GroupDescriptor> c;
      if (auto s = top.as_simple()) {
        auto it = table_chains_.find(*s);
        if (it == table_chains_.end()) {
          c = shortest_known_chain(top, Characteristic::prime(p_), db_, e.value);
          if (c.empty()) throw Error("no chain of length " + std::to_string(e.value) + " for " + top.render());
          it = table_chains_.emplace(*s, c).first;
        }
        c = it->second;
      } else {
        c = shortest_known_chain(top, Characteristic::prime(p_), db_, e.value);
        if (c.empty()) throw Error("no chain of length " + std::to_string(e.value) + " for " + top.render());
      }
      for (const auto& n : c) push(n);
      return;
    }
    case kHalve:
      push(canon(f, r));
      push(canon(f, r / 2) + canon(f, r / 2));
      emit_into(carried, sub(f, r / 2), out);
      return;
    case kSplit: {
      const std::uint32_t a = e.aux;
      push(canon(f, r));
      std::vector<GroupDescriptor> first;
      emit_into(canon(f, r - a) + carried, sub(f, a), first);
      out.insert(out.end(), first.begin(), first.end() - 1);
      emit_into(carried, sub(f, r - a), out);
      return;
    }
    case kViaD:
      push(canon(f, r));
      emit_into(carried, sub(Family::D, r), out);
      return;
    case kViaB:
      push(canon(f, r));
      emit_into(carried, sub(Family::B, r - 1), out);
      return;
    case kViaB2:
      push(canon(f, r));
      emit_into(carried, sub(Family::B, 2), out);
      return;
    case kSwapC: {
      std::vector<GroupDescriptor> c;
      emit(sub(Family::C, r), c);
      for (const auto& n : c) push(detail::swap_bc(n));
      return;
    }
    case kViaC:
      push(canon(f, r));
      emit_into(carried, sub(Family::C, (r + 1) / 2), out);
      return;
    case kParabolic:
      push(canon(f, r));
      push(GroupDescriptor(r, 1, {SimpleType{Family::A, r - 1}}));
      push(GroupDescriptor(0, 1, {SimpleType{Family::A, r - 1}}));
      push(GroupDescriptor::simple({Family::A, r - 1}));
      emit_into(carried, sub(Family::C, r / 2), out);
      return;
  }
}

ClassicalBound depth_upper_classical(SimpleType t, std::uint64_t p, const MaxSubgroupDatabase& db) {
  require_canonical(t);
  if (!is_classical(t) || t.rank < 2) throw DomainError("classical builder needs a classical type of rank >= 2");
  ClassicalBuilder b(p, db);
  ClassicalBound out;
  out.length = b.value(t);
  out.construction = b.construction(t);
  out.chain = annotate(Characteristic::prime(p), b.chain(t), db);
  return out;
}

std::vector<GroupDescriptor> shortest_known_chain(const GroupDescriptor& g, Characteristic c,
                                                  const MaxSubgroupDatabase& db, std::uint64_t max_length) {
  using Entry = std::tuple<std::uint64_t, std::int64_t, std::string>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  std::map<std::string, std::uint64_t> best_g;
  std::map<std::string, GroupDescriptor> nodes;
  std::map<std::string, std::string> parent;
  const auto rk = g.render();
  nodes.emplace(rk, g);
  best_g[rk] = 0;
  open.emplace(db.lower_bound(g, c), 0, rk);
  std::size_t expansions = 0;
  while (!open.empty() && expansions < 100000) {
    auto [f, neg, key] = open.top();
    open.pop();
    const auto dist = static_cast<std::uint64_t>(-neg);
    if (dist > best_g[key] || f > max_length) continue;
    const GroupDescriptor node = nodes.at(key);
    if (node.is_trivial()) {
      std::vector<GroupDescriptor> path{node};
      for (std::string k = key; k != rk;) {
        k = parent.at(k);
        path.push_back(nodes.at(k));
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    ++expansions;
    bool complete = false;
    for (const auto& w : db.known_children(node, c, complete)) {
      const auto ck = w.child.render();
      auto it = best_g.find(ck);
      if (it != best_g.end() && it->second <= dist + 1) continue;
      best_g[ck] = dist + 1;
      nodes.insert_or_assign(ck, w.child);
      parent[ck] = key;
      const std::uint64_t fc = dist + 1 + db.lower_bound(w.child, c);
      if (fc <= max_length) open.emplace(fc, -static_cast<std::int64_t>(dist + 1), ck);
    }
  }
  return {};
}

ShortestChain shortest_chain(SimpleType t, Characteristic c, const MaxSubgroupDatabase& db) {
  require_canonical(t);
  ShortestChain out;
  if (c.is_zero()) {
    out.chain = annotate(c, char0_chain(t), db);
    out.known_optimal = true;
    out.construction = "characteristic 0 construction";
    return out;
  }
  if (auto e = depth_table_p(t, c.value())) {
    auto nodes = shortest_known_chain(GroupDescriptor::simple(t), c, db, *e);
    if (nodes.empty()) throw Error("no chain of length " + std::to_string(*e) + " for " + t.name() + " found");
    out.chain = annotate(c, std::move(nodes), db);
    out.known_optimal = true;
    out.construction = "table value";
    return out;
  }
  if (!is_classical(t)) throw DomainError("no construction available for " + t.name());
  auto b = depth_upper_classical(t, c.value(), db);
  out.chain = std::move(b.chain);
  out.known_optimal = out.chain.length() == depth_lower(t, c);
  out.construction = b.construction;
  return out;
}

DepthResult depth(const GroupDescriptor& g, Characteristic c, const MaxSubgroupDatabase& db) {
  DepthResult res;
  if (g.is_soluble()) {
    res.lower = res.upper = g.dim();
    res.exact = true;
    res.provenance.push_back("soluble: depth equals dimension");
    return res;
  }
  struct Bound {
    std::uint64_t lo, hi;
    std::string why;
  };
  auto simple_bound = [&](SimpleType s) -> Bound {
    if (auto e = depth_exact(s, c))
      return {*e, *e, s.name() + ": " + (c.is_zero() ? "characteristic 0 value" : "table value")};
    ClassicalBuilder b(c.value(), db);
    auto hi = b.value(s);
    return {depth_lower(s, c), hi,
            s.name() + ": lower bound max(4, psi_p(r)); upper bound from " + b.construction(s)};
  };
  std::uint64_t lo = 0;
  std::uint64_t hi = g.unipotent_dim() + g.torus_dim();
  for (const auto& f : g.factors()) {
    auto b = simple_bound(f.type);
    lo = std::max(lo, b.lo);
    hi += (f.count - 1) + b.hi;
    res.provenance.push_back(b.why);
  }
  if (g.factors().size() == 1 && g.factors()[0].count >= 2) {
    lo = std::max<std::uint64_t>(lo, g.factors()[0].count + 2);
    res.provenance.push_back("S^k has depth at least k+2");
  }
  if (g.unipotent_dim() + g.torus_dim() + g.factor_count() > 1)
    res.provenance.push_back("upper bound: depth of N plus depth of G/N, diagonal chain S^k > S^(k-1)");
  res.lower = lo;
  res.upper = std::max(hi, lo);
  res.exact = res.lower == res.upper;
  return res;
}

SteinbergTower steinberg_tower(std::uint64_t p, std::uint32_t k, std::size_t digit_cap) {
  if (p < 5 || !is_prime(p)) throw DomainError("the Steinberg tower needs a prime p >= 5");
  SteinbergTower t;
  t.bound = std::uint64_t{k} + 3;
  BigInt cur = 1;
  bool exact = true;
  std::string text = "1";
  t.ranks.push_back(text);
  t.exact.push_back(true);
  const double log10p = std::log10(static_cast<double>(p));
  for (std::uint32_t l = 1; l <= k; ++l) {
    if (l == 1) {
      cur = (p - 1) / 2;
      text = cur.str();
    } else if (exact && static_cast<double>(cur) * static_cast<double>(cur) * log10p <= static_cast<double>(digit_cap)) {
      const auto e = static_cast<unsigned>(cur * cur);
      cur = (boost::multiprecision::pow(BigInt(p), e) - 1) / 2;
      text = cur.str();
    } else {
      exact = false;
      text = "(" + std::to_string(p) + "^((" + text + ")^2)-1)/2";
    }
    t.ranks.push_back(text);
    t.exact.push_back(exact);
  }
  return t;
}

}  // namespace lendepth
