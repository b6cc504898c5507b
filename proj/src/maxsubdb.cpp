#include "lendepth/maxsubdb.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "internal.hpp"
#include "lendepth/errors.hpp"

namespace lendepth {

namespace {

constexpr std::pair<StepKind, std::string_view> kKindNames[] = {
    {StepKind::Parabolic, "Parabolic"},
    {StepKind::LeviDrop, "LeviDrop"},
    {StepKind::SubspaceStabilizer, "SubspaceStabilizer"},
    {StepKind::TensorOrDiagonal, "TensorOrDiagonal"},
    {StepKind::TableCited, "TableCited"},
    {StepKind::BorelDescent, "BorelDescent"},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ValidationError("expected an unsigned integer, got `" + std::string(s) + "`");
  return v;
}

MaxStepWitness relabel(MaxStepWitness w, const GroupDescriptor& parent, const GroupDescriptor& child,
                       const std::string& prefix) {
  w.parent = parent;
  w.child = child;
  w.citation = prefix + w.citation;
  return w;
}

std::optional<MaxStepWitness> soluble_drop(const GroupDescriptor& p, const GroupDescriptor& c) {
  if (!p.is_soluble() || !c.is_soluble()) return std::nullopt;
  bool u_drop = p.unipotent_dim() == c.unipotent_dim() + 1 && p.torus_dim() == c.torus_dim();
  bool z_drop = p.torus_dim() == c.torus_dim() + 1 && p.unipotent_dim() == c.unipotent_dim();
  if (!u_drop && !z_drop) return std::nullopt;
  return MaxStepWitness{p, c, CharCondition::all(), StepKind::BorelDescent,
                        "soluble codim-1: every maximal connected subgroup of a connected soluble group has "
                        "codimension 1"};
}

// Removes the factors of `rest` from `c`; nullopt when `rest` is not contained in `c`.
std::optional<GroupDescriptor> subtract(const GroupDescriptor& c, const GroupDescriptor& rest) {
  if (c.unipotent_dim() < rest.unipotent_dim() || c.torus_dim() < rest.torus_dim()) return std::nullopt;
  GroupDescriptor m(c.unipotent_dim() - rest.unipotent_dim(), c.torus_dim() - rest.torus_dim());
  m = m + c.semisimple_quotient();
  for (const auto& f : rest.factors()) {
    if (m.multiplicity(f.type) < f.count) return std::nullopt;
    for (std::uint32_t i = 0; i < f.count; ++i) m = m.minus_factor(f.type);
  }
  return m;
}

std::uint64_t dim_sum_roots(const GroupDescriptor& g) {
  std::uint64_t n = 0;
  for (const auto& f : g.factors()) n += f.count * num_positive_roots(f.type);
  return n;
}

// Levi factor L of a parabolic P = QL with abelian Q, found from the descriptor alone.
std::optional<MaxStepWitness> levi_drop(const GroupDescriptor& p, const GroupDescriptor& c) {
  if (p.unipotent_dim() == 0 || p.torus_dim() != 1 || c != p.with_unipotent(0)) return std::nullopt;
  const std::uint64_t ss = p.semisimple_rank() + 1;
  if (ss > kMaxRank) return std::nullopt;
  const auto r = static_cast<std::uint32_t>(ss);
  const std::uint64_t n_target = p.unipotent_dim() + dim_sum_roots(p);
  for (int f = 0; f <= static_cast<int>(Family::G); ++f) {
    SimpleType s{static_cast<Family>(f), r};
    if (!is_canonical(s) || num_positive_roots(s) != n_target) continue;
    std::vector<std::uint32_t> nodes{1, r};
    if (r > 1) nodes.push_back(r - 1);
    for (const auto& fp : p.factors()) {
      if (fp.type.rank + 1 <= r) nodes.push_back(fp.type.rank + 1);
      if (fp.type.rank < r) nodes.push_back(r - fp.type.rank);
    }
    for (std::uint32_t i : nodes) {
      if (!is_cominuscule(s, i)) continue;
      if (GroupDescriptor(0, 1, levi_factors(s, i)) == c)
        return MaxStepWitness{p, c, CharCondition::all(), StepKind::LeviDrop,
                              "Levi subgroup of a parabolic of " + s.name() + " with abelian unipotent radical"};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(StepKind k) {
  for (auto [kind, name] : kKindNames)
    if (kind == k) return std::string(name);
  return "TableCited";
}

StepKind step_kind_from_string(std::string_view s) {
  for (auto [kind, name] : kKindNames)
    if (name == s) return kind;
  throw ValidationError("unknown step kind `" + std::string(s) + "`");
}

CharCondition CharCondition::parse(std::string_view text) {
  CharCondition cc;
  cc.text_ = std::string(trim(text));
  if (cc.text_.empty()) throw ValidationError("empty characteristic condition");
  for (std::string_view part : split(text, ',')) {
    if (part == "all") {
      cc.atoms_.push_back({Op::All, 0});
    } else if (part == "p>0") {
      cc.atoms_.push_back({Op::Positive, 0});
    } else if (part.starts_with("p>=")) {
      cc.atoms_.push_back({Op::Ge, parse_uint(trim(part.substr(3)))});
    } else if (part.starts_with("p!=")) {
      cc.atoms_.push_back({Op::Ne, parse_uint(trim(part.substr(3)))});
    } else if (part.starts_with("p=")) {
      cc.atoms_.push_back({Op::Eq, parse_uint(trim(part.substr(2)))});
    } else {
      throw ValidationError("bad characteristic condition `" + std::string(part) + "`");
    }
  }
  return cc;
}

bool CharCondition::matches(Characteristic c) const {
  const std::uint64_t p = c.value();
  for (const auto& a : atoms_) {
    switch (a.op) {
      case Op::All: return true;
      case Op::Eq:
        if (p == a.value) return true;
        break;
      case Op::Ge:
        if (p != 0 && p >= a.value) return true;
        break;
      case Op::Ne:
        if (p != a.value) return true;
        break;
      case Op::Positive:
        if (p != 0) return true;
        break;
    }
  }
  return false;
}

const MaxSubgroupDatabase& MaxSubgroupDatabase::builtin() {
  static const MaxSubgroupDatabase db = from_text(detail::kBuiltinMaxsubdb, "<builtin>");
  return db;
}

MaxSubgroupDatabase MaxSubgroupDatabase::load_default() {
  if (const char* path = std::getenv("LENDEPTH_MAXSUBDB"); path && *path) return from_file(path);
  return builtin();
}

MaxSubgroupDatabase MaxSubgroupDatabase::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open maxsubdb file `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str(), path);
}

MaxSubgroupDatabase MaxSubgroupDatabase::from_text(std::string_view text, std::string source) {
  MaxSubgroupDatabase db;
  db.source_ = std::move(source);
  bool have_format = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      auto fields = split(line, '|');
      if (fields[0].starts_with("@format")) {
        auto words = split(trim(fields[0].substr(7)), ' ');
        if (words.size() != 2 || words[0] != "maxsubdb" || words[1] != "1")
          throw ValidationError("unsupported format declaration");
        have_format = true;
        continue;
      }
      if (!have_format) throw ValidationError("missing `@format maxsubdb 1` header");
      if (fields[0] == "@version") {
        if (fields.size() != 2) throw ValidationError("@version takes one field");
        db.version_ = std::string(fields[1]);
      } else if (fields[0] == "@complete") {
        if (fields.size() != 4) throw ValidationError("@complete needs group | condition | citation");
        db.complete_.push_back({parse_descriptor(fields[1]), CharCondition::parse(fields[2]),
                                Completeness::Complete, std::string(fields[3])});
      } else if (fields[0] == "@lower") {
        if (fields.size() != 5) throw ValidationError("@lower needs group | condition | value | citation");
        db.lower_.push_back({parse_descriptor(fields[1]), CharCondition::parse(fields[2]), parse_uint(fields[3]),
                             std::string(fields[4])});
      } else if (fields[0] == "@nonmax") {
        if (fields.size() != 5) throw ValidationError("@nonmax needs parent | child | condition | citation");
        db.nonmax_.push_back({parse_descriptor(fields[1]), parse_descriptor(fields[2]),
                              CharCondition::parse(fields[3]), std::string(fields[4])});
      } else if (fields[0].starts_with("@")) {
        throw ValidationError("unknown directive `" + std::string(fields[0]) + "`");
      } else {
        if (fields.size() != 5) throw ValidationError("fact rows need parent | child | condition | kind | citation");
        MaxStepWitness w{parse_descriptor(fields[0]), parse_descriptor(fields[1]), CharCondition::parse(fields[2]),
                         step_kind_from_string(fields[3]), std::string(fields[4])};
        if (w.child.dim() >= w.parent.dim()) throw ValidationError("child dimension must be below parent dimension");
        if (w.citation.empty()) throw ValidationError("missing citation");
        db.by_parent_[w.parent.render()].push_back(db.facts_.size());
        db.facts_.push_back(std::move(w));
      }
    } catch (const DatabaseFormatError&) {
      throw;
    } catch (const Error& e) {
      throw DatabaseFormatError(e.what(), line_no);
    }
  }
  if (!have_format) throw DatabaseFormatError("missing `@format maxsubdb 1` header", 1);
  if (db.version_.empty()) db.version_ = "1";
  return db;
}

const std::vector<std::size_t>* MaxSubgroupDatabase::rows_for(const GroupDescriptor& parent) const {
  auto it = by_parent_.find(parent.render());
  return it == by_parent_.end() ? nullptr : &it->second;
}

bool MaxSubgroupDatabase::has_curated_data(SimpleType g, Characteristic c) const {
  const auto node = GroupDescriptor::simple(g);
  if (const auto* rows = rows_for(node))
    for (std::size_t i : *rows)
      if (facts_[i].condition.matches(c)) return true;
  for (const auto& t : complete_)
    if (t.group == node && t.condition.matches(c)) return true;
  for (const auto& l : lower_)
    if (l.group == node && l.condition.matches(c)) return true;
  return false;
}

std::optional<MaxStepWitness> MaxSubgroupDatabase::simple_step(SimpleType s, const GroupDescriptor& child,
                                                              Characteristic c, bool allow_swap) const {
  const auto parent = GroupDescriptor::simple(s);
  if (const auto* rows = rows_for(parent))
    for (std::size_t i : *rows)
      if (facts_[i].child == child && facts_[i].condition.matches(c)) return facts_[i];
  auto pat = detail::pattern_children(s, c, &child);
  if (!pat.empty()) return pat.front();
  if (allow_swap && c.value() == 2 && detail::swap_bc(s) != s) {
    if (auto w = simple_step(detail::swap_bc(s), detail::swap_bc(child), c, false))
      return relabel(*w, parent, child, "special isogeny B_r <-> C_r in characteristic 2; ");
  }
  return std::nullopt;
}

std::vector<MaxStepWitness> MaxSubgroupDatabase::simple_children(SimpleType s, Characteristic c) const {
  std::vector<MaxStepWitness> out;
  const auto parent = GroupDescriptor::simple(s);
  auto add = [&](MaxStepWitness w) {
    for (const auto& o : out)
      if (o.child == w.child) return;
    out.push_back(std::move(w));
  };
  if (const auto* rows = rows_for(parent))
    for (std::size_t i : *rows)
      if (facts_[i].condition.matches(c)) add(facts_[i]);
  for (auto& w : detail::pattern_children(s, c, nullptr)) add(std::move(w));
  if (c.value() == 2 && detail::swap_bc(s) != s) {
    const SimpleType t = detail::swap_bc(s);
    const auto tp = GroupDescriptor::simple(t);
    std::vector<MaxStepWitness> other;
    if (const auto* rows = rows_for(tp))
      for (std::size_t i : *rows)
        if (facts_[i].condition.matches(c)) other.push_back(facts_[i]);
    for (auto& w : detail::pattern_children(t, c, nullptr)) other.push_back(std::move(w));
    for (auto& w : other)
      add(relabel(w, parent, detail::swap_bc(w.child), "special isogeny B_r <-> C_r in characteristic 2; "));
  }
  return out;
}

std::optional<MaxStepWitness> MaxSubgroupDatabase::is_maximal_step(const GroupDescriptor& p,
                                                                  const GroupDescriptor& ch,
                                                                  Characteristic c) const {
  if (ch.dim() >= p.dim()) return std::nullopt;
  if (const auto* rows = rows_for(p))
    for (std::size_t i : *rows)
      if (facts_[i].child == ch && facts_[i].condition.matches(c)) return facts_[i];
  if (p.is_soluble()) return soluble_drop(p, ch);
  if (auto s = p.as_simple()) return simple_step(*s, ch, c, true);

  if (p.unipotent_dim() > 0) {
    if (auto w = levi_drop(p, ch)) return w;
    if (ch.unipotent_dim() >= p.unipotent_dim()) {
      auto q = p.reductive_quotient();
      auto qc = ch.with_unipotent(ch.unipotent_dim() - p.unipotent_dim());
      if (auto w = is_maximal_step(q, qc, c))
        return relabel(*w, p, ch, "contains the unipotent radical; ");
    }
    return carried_step(p, ch, c);
  }

  // Reductive with at least one simple factor and something else.
  if (ch.unipotent_dim() == 0 && ch.torus_dim() + 1 == p.torus_dim() &&
      ch.semisimple_quotient() == p.semisimple_quotient())
    return MaxStepWitness{p, ch, CharCondition::all(), StepKind::BorelDescent,
                          "codimension-1 subtorus of the central torus times the derived subgroup"};
  for (const auto& f : p.factors()) {
    if (f.count >= 2 && p.minus_factor(f.type) == ch)
      return MaxStepWitness{p, ch, CharCondition::all(), StepKind::TensorOrDiagonal,
                            "diagonal subgroup: S x S > diag(S), maximality of diag(S^2) x S^(k-2) in S^k"};
    if (c.value() == 2 && detail::swap_bc(f.type) != f.type && p.multiplicity(detail::swap_bc(f.type)) > 0 &&
        f.type.family == Family::C && p.minus_factor(f.type) == ch)
      return MaxStepWitness{p, ch, CharCondition::parse("p=2"), StepKind::TensorOrDiagonal,
                            "diagonal subgroup of B_r C_r through the special isogeny in characteristic 2"};
  }
  for (const auto& f : p.factors()) {
    auto rest = p.minus_factor(f.type);
    auto m = subtract(ch, rest);
    if (!m) continue;
    if (auto w = simple_step(f.type, *m, c, true)) return relabel(*w, p, ch, "product descent: ");
  }
  return carried_step(p, ch, c);
}

std::optional<MaxStepWitness> MaxSubgroupDatabase::carried_step(const GroupDescriptor& p, const GroupDescriptor& ch,
                                                               Characteristic c) const {
  // Read p as H x K with K a set of simple factors shared with ch, and look
  // for a certified step H > H'. Multiplicities are tried largest first.
  std::vector<FactorPower> shared;
  std::size_t combos = 1;
  for (const auto& f : p.factors()) {
    std::uint32_t k = std::min(f.count, ch.multiplicity(f.type));
    if (k == 0) continue;
    shared.push_back({f.type, k});
    combos *= k + 1;
    if (combos > 4096) return std::nullopt;
  }
  if (shared.empty()) return std::nullopt;
  std::vector<std::uint32_t> take(shared.size(), 0);
  for (std::size_t i = 0; i < shared.size(); ++i) take[i] = shared[i].count;
  while (true) {
    GroupDescriptor k;
    for (std::size_t i = 0; i < shared.size(); ++i) k = k.plus_factor(shared[i].type, take[i]);
    if (!k.is_trivial()) {
      auto h = subtract(p, k);
      auto h2 = subtract(ch, k);
      if (h && h2 && !h->is_trivial() && h->dim() < p.dim()) {
        if (auto w = is_maximal_step(*h, *h2, c)) return relabel(*w, p, ch, "product with " + k.render() + ": ");
      }
    }
    std::size_t i = 0;
    while (i < take.size() && take[i] == 0) {
      take[i] = shared[i].count;
      ++i;
    }
    if (i == take.size()) break;
    --take[i];
  }
  return std::nullopt;
}

bool MaxSubgroupDatabase::is_complete(const GroupDescriptor& node, Characteristic c) const {
  if (node.is_soluble()) return true;
  for (const auto& t : complete_)
    if (t.group == node && t.condition.matches(c)) return true;
  if (node.unipotent_dim() > 0 || node.as_simple()) return false;
  for (const auto& f : node.factors())
    if (!is_complete(GroupDescriptor::simple(f.type), c)) return false;
  return true;
}

std::vector<MaxStepWitness> MaxSubgroupDatabase::known_children(const GroupDescriptor& node, Characteristic c,
                                                               bool& complete) const {
  complete = is_complete(node, c);
  std::vector<MaxStepWitness> out;
  auto add = [&](MaxStepWitness w) {
    for (const auto& o : out)
      if (o.child == w.child) return;
    out.push_back(std::move(w));
  };
  if (node.is_trivial()) return out;
  if (node.is_soluble()) {
    const auto u = node.unipotent_dim(), z = node.torus_dim();
    if (u > 0) add(*soluble_drop(node, GroupDescriptor::soluble(u - 1, z)));
    if (z > 0) add(*soluble_drop(node, GroupDescriptor::soluble(u, z - 1)));
    return out;
  }
  if (const auto* rows = rows_for(node))
    for (std::size_t i : *rows)
      if (facts_[i].condition.matches(c)) add(facts_[i]);
  if (auto s = node.as_simple()) {
    for (auto& w : simple_children(*s, c)) add(std::move(w));
    return out;
  }
  if (node.unipotent_dim() > 0) {
    bool ignored = false;
    for (const auto& w : known_children(node.reductive_quotient(), c, ignored)) {
      auto lifted = w.child.with_unipotent(w.child.unipotent_dim() + node.unipotent_dim());
      add(relabel(w, node, lifted, "contains the unipotent radical; "));
    }
    if (auto w = levi_drop(node, node.reductive_quotient())) add(*w);
    return out;
  }
  if (node.torus_dim() > 0) {
    auto ch = node.with_torus(node.torus_dim() - 1);
    add(*is_maximal_step(node, ch, c));
  }
  for (const auto& f : node.factors()) {
    auto rest = node.minus_factor(f.type);
    if (f.count >= 2 || (c.value() == 2 && f.type.family == Family::C && detail::swap_bc(f.type) != f.type &&
                         node.multiplicity(detail::swap_bc(f.type)) > 0))
      add(*is_maximal_step(node, rest, c));
    for (const auto& w : simple_children(f.type, c))
      add(relabel(w, node, rest + w.child, "product descent: "));
  }
  return out;
}

MaximalList MaxSubgroupDatabase::maximal_connected(SimpleType g, Characteristic c) const {
  require_canonical(g);
  if (!has_curated_data(g, c))
    throw NotCuratedError("no curated maximal-subgroup data for " + g.name() + " in characteristic " +
                          c.to_string());
  MaximalList list;
  list.subgroups = simple_children(g, c);
  const auto node = GroupDescriptor::simple(g);
  list.tag.group = node;
  list.tag.condition = CharCondition::parse("p=" + c.to_string());
  for (const auto& t : complete_) {
    if (t.group == node && t.condition.matches(c)) {
      list.tag = t;
      break;
    }
  }
  return list;
}

std::optional<Refutation> MaxSubgroupDatabase::refutes(const GroupDescriptor& parent, const GroupDescriptor& child,
                                                      Characteristic c) const {
  for (const auto& n : nonmax_)
    if (n.parent == parent && n.child == child && n.condition.matches(c)) return Refutation{n.citation};
  std::optional<std::uint64_t> known;
  if (child.is_soluble()) known = child.dim();
  else if (child.as_simple() == SimpleType{Family::A, 1}) known = 3;
  if (!known) return std::nullopt;
  std::string why;
  const std::uint64_t lb = lower_bound(parent, c, &why);
  if (lb > *known + 1)
    return Refutation{"depth of " + parent.render() + " is at least " + std::to_string(lb) + " (" + why +
                      ") but " + child.render() + " has depth " + std::to_string(*known)};
  return std::nullopt;
}

}  // namespace lendepth
