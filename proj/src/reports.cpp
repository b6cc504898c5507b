#include "reports.hpp"

#include <algorithm>
#include <stdexcept>

#include "lendepth/depth.hpp"
#include "lendepth/errors.hpp"
#include "lendepth/invariants.hpp"
#include "lendepth/length.hpp"

namespace lendepth::report {

namespace {

std::string rational_text(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Json schema(const char* kind) { return Json{{"schema", std::string("lendepth.") + kind + "/1"}}; }

struct TableLayout {
  std::vector<SimpleType> columns;
  std::vector<std::uint64_t> rows;  // primes; the last row stands for every larger prime
};

TableLayout lowrank_layout() {
  using F = Family;
  return {{{F::A, 1}, {F::A, 2}, {F::B, 2}, {F::G, 2}, {F::A, 3}, {F::B, 3}, {F::C, 3}, {F::A, 4}, {F::B, 4},
           {F::C, 4}, {F::D, 4}, {F::F, 4}},
          {2, 3, 5, 7, 11, 13}};
}

TableLayout exceptional_layout() {
  using F = Family;
  return {{{F::G, 2}, {F::F, 4}, {F::E, 6}, {F::E, 7}, {F::E, 8}}, {2, 3, 5, 7, 11, 13, 17, 19, 23}};
}

// Brute-force value when the database's subgroup list for t is complete.
Json crosscheck(const MaxSubgroupDatabase& db, SimpleType t, Characteristic c, std::uint64_t expected) {
  if (!db.is_complete(GroupDescriptor::simple(t), c)) return nullptr;
  std::uint64_t bf = 0;
  try {
    bf = db.depth_bruteforce(t, c);
  } catch (const IncompleteError&) {
    return nullptr;
  }
  if (bf != expected)
    throw std::logic_error("brute force gives " + std::to_string(bf) + " for " + t.name() + " at p=" + c.to_string() +
                           ", table gives " + std::to_string(expected));
  return Json{{"type", t.name()}, {"p", c.value()}, {"bruteforce", bf}};
}

Json prime_table(const MaxSubgroupDatabase& db, const std::string& name, const TableLayout& lay) {
  Json out = schema("table");
  out["name"] = name;
  Json cols = Json::array();
  for (auto t : lay.columns) cols.push_back(t.name());
  out["columns"] = cols;
  // A cell is printed until its column has settled on the value it keeps for all larger primes.
  std::vector<std::vector<std::uint64_t>> grid;
  for (auto p : lay.rows) {
    std::vector<std::uint64_t> row;
    for (auto t : lay.columns) {
      const auto v = depth_table_p(t, p);
      if (!v) throw std::logic_error("no table value for " + t.name());
      row.push_back(*v);
    }
    grid.push_back(std::move(row));
  }
  const auto& settled = grid.back();
  Json rows = Json::array(), checks = Json::array();
  std::size_t populated = 0;
  for (std::size_t i = 0; i < lay.rows.size(); ++i) {
    const auto p = lay.rows[i];
    Json cells = Json::array();
    for (std::size_t j = 0; j < lay.columns.size(); ++j) {
      const auto v = grid[i][j];
      if (i == 0 || grid[i - 1][j] != settled[j]) {
        cells.push_back(v);
        ++populated;
      } else {
        cells.push_back(nullptr);
      }
      if (auto chk = crosscheck(db, lay.columns[j], Characteristic::prime(p), v); !chk.is_null())
        checks.push_back(chk);
    }
    const bool last = i + 1 == lay.rows.size();
    rows.push_back({{"p", last ? ">" + std::to_string(lay.rows[i - 1]) : std::to_string(p)},
                    {"evaluated_at", p},
                    {"cells", cells},
                    {"values", grid[i]}});
  }
  out["rows"] = rows;
  out["populated_cells"] = populated;
  out["crosscheck"] = checks;
  return out;
}

Json char0_table(const MaxSubgroupDatabase& db) {
  Json out = schema("table");
  out["name"] = "depth-char0";
  out["max_rank"] = 100;
  Json cases = Json::array(), checks = Json::array();
  const auto c = Characteristic::zero();
  auto add_case = [&](Family f, std::uint32_t lo, std::uint32_t hi, std::uint64_t v) {
    SimpleType first{f, lo};
    std::string ranks = lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
    auto sc = shortest_chain(first, c, db);
    cases.push_back({{"family", std::string(1, family_letter(f))},
                     {"ranks", ranks},
                     {"depth", v},
                     {"example_chain", render_chain(sc.chain)}});
  };
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    std::uint32_t start = 0;
    std::uint64_t cur = 0;
    for (std::uint32_t r = 1; r <= 100; ++r) {
      SimpleType t{f, r};
      if (!is_canonical(t)) continue;
      const auto v = depth_char0(t);
      if (auto chk = crosscheck(db, t, c, v); !chk.is_null()) checks.push_back(chk);
      if (start == 0) {
        start = r;
        cur = v;
      } else if (v != cur) {
        add_case(f, start, r - 1, cur);
        start = r;
        cur = v;
      }
    }
    add_case(f, start, 100, cur);
  }
  for (SimpleType t : {SimpleType{Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}}) {
    const auto v = depth_char0(t);
    if (auto chk = crosscheck(db, t, c, v); !chk.is_null()) checks.push_back(chk);
    add_case(t.family, t.rank, t.rank, v);
  }
  out["cases"] = cases;
  out["crosscheck"] = checks;
  return out;
}

std::vector<Characteristic> characteristics_up_to(std::uint64_t max_p) {
  std::vector<Characteristic> out{Characteristic::zero()};
  for (std::uint64_t p = 2; p <= max_p; ++p)
    if (is_prime(p)) out.push_back(Characteristic::prime(p));
  return out;
}

}  // namespace

Json invariants(const MaxSubgroupDatabase& db, const GroupDescriptor& g, Characteristic c) {
  Json out = schema("invariants");
  out["group"] = g.render();
  out["char"] = c.value();
  out["dim"] = g.dim();
  out["length"] = length(g);
  const auto d = depth(g, c, db);
  out["depth"] = {{"lower", d.lower}, {"upper", d.upper}, {"exact", d.exact}, {"provenance", d.provenance}};
  const auto cd = chain_difference(g, c, db);
  out["cd"] = {{"lower", cd.lower}, {"upper", cd.upper}};
  if (g.is_trivial()) {
    out["cr"] = nullptr;
  } else {
    const auto cr = chain_ratio(g, c, db);
    out["cr"] = {{"lower", rational_text(cr.lower)}, {"upper", rational_text(cr.upper)}};
  }
  out["depth_equals_length"] = to_string(depth_equals_length_classifier(g));
  return out;
}

Json table(const MaxSubgroupDatabase& db, const std::string& name) {
  if (name == "depth-lowrank") return prime_table(db, name, lowrank_layout());
  if (name == "depth-exceptional") return prime_table(db, name, exceptional_layout());
  if (name == "depth-char0") return char0_table(db);
  throw ValidationError("unknown table `" + name + "`");
}

Chain chain(const MaxSubgroupDatabase& db, const GroupDescriptor& g, Characteristic c, bool shortest) {
  auto t = g.as_simple();
  if (!t) throw DomainError("chain needs a single simple type, got `" + g.render() + "`");
  Chain out;
  out.summary = schema("chain");
  out.summary["group"] = t->name();
  out.summary["char"] = c.value();
  out.summary["mode"] = shortest ? "shortest" : "longest";
  if (shortest) {
    auto sc = shortest_chain(*t, c, db);
    out.certificate = std::move(sc.chain);
    out.summary["known_optimal"] = sc.known_optimal;
    out.summary["construction"] = sc.construction;
  } else {
    out.certificate = max_length_chain(*t, c, db);
    out.summary["known_optimal"] = true;
    out.summary["construction"] = "maximal parabolics, then the soluble residue";
  }
  out.summary["length"] = out.certificate.length();
  out.summary["chain"] = render_chain(out.certificate);
  out.summary["verdict"] = to_string(verify(out.certificate, db).overall);
  return out;
}

Json verification(const MaxSubgroupDatabase& db, const ChainCertificate& cert) {
  const auto rep = verify(cert, db);
  Json out = schema("verify");
  out["char"] = cert.characteristic.value();
  out["length"] = rep.length;
  out["chain"] = render_chain(cert);
  out["overall"] = to_string(rep.overall);
  Json steps = Json::array();
  for (const auto& s : rep.steps) {
    Json j = {{"index", s.index}, {"parent", s.parent.render()}, {"child", s.child.render()},
              {"verdict", to_string(s.verdict)}};
    j["kind"] = s.witness ? Json(to_string(s.witness->kind)) : Json(nullptr);
    j["reason"] = s.reason;
    steps.push_back(j);
  }
  out["steps"] = steps;
  return out;
}

Json sweep(const MaxSubgroupDatabase& db, const std::string& bound, const SweepRange& range) {
  if (range.max_rank < 1 || range.max_rank > 64) throw ValidationError("sweep rank range must be 1..64");
  if (range.max_p > 1000) throw ValidationError("sweep prime range must be at most 1000");
  if (range.max_k > 64) throw ValidationError("sweep power range must be at most 64");
  Json out = schema("sweep");
  out["bound"] = bound;
  out["range"] = {{"max_rank", range.max_rank}, {"max_p", range.max_p}, {"max_k", range.max_k}};
  std::uint64_t holds = 0, inconclusive = 0, violated = 0;
  Json violations = Json::array();
  auto record = [&](const std::string& subject, std::uint64_t p, const CheckReport& r) {
    switch (r.verdict) {
      case CheckVerdict::Holds: ++holds; break;
      case CheckVerdict::Inconclusive: ++inconclusive; break;
      case CheckVerdict::Violated:
        ++violated;
        violations.push_back({{"subject", subject}, {"char", p}, {"bound", r.bound}, {"detail", r.detail}});
        break;
    }
  };
  const auto types = canonical_types_up_to(range.max_rank);
  const auto chars = characteristics_up_to(range.max_p);
  if (bound == "cd-bound" || bound == "simple-cd" || bound == "cr-bound") {
    for (auto c : chars)
      for (auto t : types) {
        CheckReport r = bound == "cd-bound"    ? check_cd_bound(GroupDescriptor::simple(t), c, db)
                        : bound == "simple-cd" ? check_simple_cd_bound(t, c, db)
                                               : check_cr_bound(t, c, db);
        record(t.name(), c.value(), r);
      }
  } else if (bound == "ss-cd") {
    for (auto c : chars)
      for (auto t : types)
        for (std::uint32_t k = 2; k <= range.max_k; ++k)
          record(t.name() + "^" + std::to_string(k), c.value(), check_ss_cd_bound(t, k, c, db));
  } else if (bound == "summ") {
    auto sorted = types;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](SimpleType a, SimpleType b) { return dim_simple(a) < dim_simple(b); });
    for (std::size_t n = 1; n <= sorted.size(); ++n) {
      std::vector<SimpleType> pick(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(n));
      record("n=" + std::to_string(n), 0, sum_dims_floor(n, pick));
    }
  } else if (bound == "half-dim") {
    for (auto t : types)
      for (std::uint32_t k = 1; k <= std::max<std::uint32_t>(range.max_k, 1); ++k) {
        const auto g = GroupDescriptor::power(t, k);
        const auto h = length_exceeds_half_dim(g);
        CheckReport r{h.exceeds ? CheckVerdict::Holds : CheckVerdict::Violated, "l(G) > dim(G)/2",
                      "l = " + std::to_string(h.length) + ", dim = " + std::to_string(h.dim)};
        record(g.render(), 0, r);
      }
  } else {
    throw ValidationError("unknown bound `" + bound + "`");
  }
  out["checked"] = holds + inconclusive + violated;
  out["holds"] = holds;
  out["inconclusive"] = inconclusive;
  out["violated"] = violated;
  out["violations"] = violations;
  return out;
}

}  // namespace lendepth::report
