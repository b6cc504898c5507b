#include <functional>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "internal.hpp"
#include "lendepth/errors.hpp"

namespace lendepth {

namespace {

using Lambda = std::function<std::uint64_t(SimpleType, std::string*)>;

std::uint64_t char0_simple_lower(SimpleType s) {
  switch (s.family) {
    case Family::A: return s.rank >= 3 ? 5 : 0;
    case Family::D: return 5;
    case Family::B: return s.rank == 3 ? 5 : 0;
    case Family::E: return s.rank == 6 ? 5 : 0;
    default: return 0;
  }
}

void raise(std::uint64_t& best, std::uint64_t v, std::string* why, const std::string& reason) {
  if (v > best) {
    best = v;
    if (why) *why = reason;
  }
}

// Lower bound for any descriptor given lower bounds for simple groups:
// dim <= 3 forces depth = dim; a normal subgroup U with complement L gives
// depth >= 1 + depth(L); S^k has depth >= k + 2.
std::uint64_t structural_lower(const GroupDescriptor& g, const std::vector<LowerBoundFact>& rows, Characteristic c,
                               const Lambda& lam, std::string* why) {
  if (g.is_soluble()) {
    if (why) *why = "soluble: depth equals dimension";
    return g.dim();
  }
  std::uint64_t best = 0;
  raise(best, std::min<std::uint64_t>(g.dim(), 4), why, "depth m <= 3 only for dimension m");
  for (const auto& l : rows)
    if (l.group == g && l.condition.matches(c)) raise(best, l.value, why, l.citation);
  if (auto s = g.as_simple()) {
    std::string w;
    raise(best, lam(*s, why ? &w : nullptr), why, w);
    return best;
  }
  if (g.unipotent_dim() > 0) {
    std::string w;
    auto v = 1 + structural_lower(g.reductive_quotient(), rows, c, lam, why ? &w : nullptr);
    raise(best, v, why, "normal unipotent radical adds one to the depth of a complement; " + w);
    return best;
  }
  if (g.torus_dim() > 0) {
    std::string w;
    auto v = 1 + structural_lower(g.semisimple_quotient(), rows, c, lam, why ? &w : nullptr);
    raise(best, v, why, "normal central torus adds one to the depth of a complement; " + w);
    return best;
  }
  std::uint64_t m = 0;
  std::string mw;
  for (const auto& f : g.factors()) {
    std::string w;
    auto v = lam(f.type, why ? &w : nullptr);
    if (v > m) {
      m = v;
      mw = w;
    }
  }
  if (g.factor_count() >= 2) raise(best, m + 1, why, "normal simple factor adds one to the depth of the rest; " + mw);
  if (auto pp = g.as_pure_power(); pp && pp->count >= 2)
    raise(best, std::uint64_t{pp->count} + 2, why, "S^k has depth at least k+2");
  return best;
}

class BruteForce {
 public:
  BruteForce(const MaxSubgroupDatabase& db, Characteristic c) : db_(db), c_(c) {}

  std::uint64_t run(SimpleType root) {
    if (auto it = memo_.find(root); it != memo_.end()) {
      if (!it->second) throw IncompleteError("depth of " + root.name() + " is not determined by the database");
      return *it->second;
    }
    memo_[root] = std::nullopt;  // cycles never occur, but a failed attempt stays failed
    auto v = search(GroupDescriptor::simple(root));
    memo_[root] = v;
    return v;
  }

 private:
  std::uint64_t lam(SimpleType s) {
    if (auto it = memo_.find(s); it != memo_.end() && it->second) return *it->second;
    if (!memo_.count(s) && db_.is_complete(GroupDescriptor::simple(s), c_)) {
      try {
        return run(s);
      } catch (const IncompleteError&) {
      }
    }
    return db_.lower_bound(GroupDescriptor::simple(s), c_);
  }

  std::uint64_t h(const GroupDescriptor& g, bool is_root) {
    Lambda l = [&](SimpleType s, std::string*) -> std::uint64_t {
      if (is_root) return db_.lower_bound(GroupDescriptor::simple(s), c_);
      return lam(s);
    };
    return structural_lower(g, db_.lower_bounds(), c_, l, nullptr);
  }

  std::uint64_t search(const GroupDescriptor& root) {
    using Entry = std::tuple<std::uint64_t, std::int64_t, std::string>;  // f, -g, key
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    std::map<std::string, std::uint64_t> best_g;
    std::map<std::string, GroupDescriptor> nodes;
    const std::string rk = root.render();
    nodes.emplace(rk, root);
    best_g[rk] = 0;
    open.emplace(h(root, true), 0, rk);
    std::size_t expansions = 0;
    while (!open.empty()) {
      auto [f, neg_g, key] = open.top();
      open.pop();
      const auto g = static_cast<std::uint64_t>(-neg_g);
      if (g > best_g[key]) continue;
      const GroupDescriptor node = nodes.at(key);
      if (node.is_trivial()) {
        prove_no_shorter(root, g);
        return g;
      }
      if (++expansions > kMaxExpansions)
        throw IncompleteError("search budget exhausted below " + root.render());
      bool complete = false;
      auto children = db_.known_children(node, c_, complete);
      for (const auto& w : children) {
        const std::string ck = w.child.render();
        auto it = best_g.find(ck);
        if (it != best_g.end() && it->second <= g + 1) continue;
        best_g[ck] = g + 1;
        nodes.emplace(ck, w.child);
        open.emplace(g + 1 + h(w.child, false), -static_cast<std::int64_t>(g + 1), ck);
      }
    }
    throw IncompleteError("no chain to the trivial group found below " + root.render());
  }

  // Every node at chain position j of a chain shorter than `best` satisfies
  // j + h(node) < best. Visit all such (node, j) reachable through known
  // steps; each must have a complete list of maximal connected subgroups.
  void prove_no_shorter(const GroupDescriptor& root, std::uint64_t best) {
    std::map<std::string, std::uint64_t> seen;
    std::vector<GroupDescriptor> layer{root};
    seen[root.render()] = 0;
    std::size_t visits = 0;
    for (std::uint64_t j = 0; !layer.empty(); ++j) {
      std::vector<GroupDescriptor> next;
      for (const auto& node : layer) {
        if (j + h(node, j == 0) >= best) continue;
        if (++visits > kMaxExpansions) throw IncompleteError("search budget exhausted below " + root.render());
        bool complete = false;
        auto children = db_.known_children(node, c_, complete);
        if (!complete)
          throw IncompleteError("maximal connected subgroups of " + node.render() + " in characteristic " +
                                c_.to_string() + " are not fully curated and could lie on a shorter chain");
        for (const auto& w : children) {
          auto [it, fresh] = seen.emplace(w.child.render(), j + 1);
          if (fresh) next.push_back(w.child);
        }
      }
      layer = std::move(next);
    }
  }

  static constexpr std::size_t kMaxExpansions = 200000;
  const MaxSubgroupDatabase& db_;
  Characteristic c_;
  std::map<SimpleType, std::optional<std::uint64_t>> memo_;
};

}  // namespace

std::uint64_t MaxSubgroupDatabase::lower_bound(const GroupDescriptor& node, Characteristic c, std::string* why) const {
  Lambda lam = [&](SimpleType s, std::string* w) -> std::uint64_t {
    std::uint64_t best = 0;
    const auto sg = GroupDescriptor::simple(s);
    raise(best, std::min<std::uint64_t>(sg.dim(), 4), w, "depth m <= 3 only for dimension m");
    for (const auto& l : lower_)
      if (l.group == sg && l.condition.matches(c)) raise(best, l.value, w, l.citation);
    if (c.is_zero())
      raise(best, char0_simple_lower(s), w, "no maximal A1 subgroup and no maximal subgroup of dimension 3");
    return best;
  };
  return structural_lower(node, lower_, c, lam, why);
}

std::uint64_t MaxSubgroupDatabase::depth_bruteforce(SimpleType g, Characteristic c) const {
  require_canonical(g);
  BruteForce bf(*this, c);
  return bf.run(g);
}

}  // namespace lendepth
