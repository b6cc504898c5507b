// Command-line front end. Talks to the engine only through lendepth.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lendepth/lendepth.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 2, kInternal = 3, kUnsupported = 4, kUncertifiable = 5, kRefuted = 6, kViolated = 7 };

int exit_code(ld_status st) {
  switch (st) {
    case LD_OK: return kOk;
    case LD_INVALID_ARGUMENT:
    case LD_PARSE_ERROR:
    case LD_IO_ERROR: return kUsage;
    case LD_INTERNAL_ERROR: return kInternal;
    case LD_UNSUPPORTED: return kUnsupported;
    case LD_UNCERTIFIABLE: return kUncertifiable;
    case LD_REFUTED: return kRefuted;
    case LD_VIOLATED: return kViolated;
  }
  return kInternal;
}

struct Owned {
  char* p = nullptr;
  ~Owned() { ld_free_string(p); }
  std::string str() const { return p ? p : ""; }
};

struct Options {
  bool json = false;
  std::string expr;
  std::uint64_t ch = 0;
  std::string table;
  bool longest = false, shortest = false;
  std::string out;
  std::string path;
  std::string bound;
  ld_sweep_range range{8, 23, 6};
};

// Prints the error and returns the matching exit code.
int report_error(ld_context* ctx, ld_status st, const Options& o, const std::string& input = {}) {
  const std::string msg = ld_last_error(ctx);
  const auto pos = ld_last_error_position(ctx);
  if (o.json) {
    Json j{{"schema", "lendepth.error/1"}, {"status", ld_status_name(st)}, {"exit_code", exit_code(st)},
           {"message", msg}};
    j["position"] = pos == SIZE_MAX ? Json(nullptr) : Json(pos);
    std::cout << j.dump() << "\n";
  }
  std::cerr << "error (" << ld_status_name(st) << "): " << msg << "\n";
  if (pos != SIZE_MAX && !input.empty() && pos <= input.size())
    std::cerr << "  " << input << "\n  " << std::string(pos, ' ') << "^\n";
  return exit_code(st);
}

std::string num_or_interval(const Json& lo, const Json& hi) {
  auto a = lo.is_string() ? lo.get<std::string>() : lo.dump();
  auto b = hi.is_string() ? hi.get<std::string>() : hi.dump();
  return a == b ? a : "[" + a + ", " + b + "]";
}

void print_invariants(const Json& j) {
  const auto& d = j["depth"];
  std::cout << "group   " << j["group"].get<std::string>() << "\n"
            << "char    " << j["char"] << "\n"
            << "dim     " << j["dim"] << "\n"
            << "l       " << j["length"] << "\n"
            << "depth   " << num_or_interval(d["lower"], d["upper"]) << (d["exact"].get<bool>() ? " (exact)" : "")
            << "\n";
  for (const auto& why : d["provenance"]) std::cout << "        " << why.get<std::string>() << "\n";
  std::cout << "cd      " << num_or_interval(j["cd"]["lower"], j["cd"]["upper"]) << "\n";
  if (j["cr"].is_null())
    std::cout << "cr      undefined\n";
  else
    std::cout << "cr      " << num_or_interval(j["cr"]["lower"], j["cr"]["upper"]) << "\n";
  std::cout << "depth = length: " << j["depth_equals_length"].get<std::string>() << "\n";
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

void print_table(const Json& j) {
  if (j.contains("cases")) {
    std::cout << "depth in characteristic 0, ranks up to " << j["max_rank"] << "\n";
    for (const auto& c : j["cases"]) {
      std::string label = c["family"].get<std::string>() + " r=" + c["ranks"].get<std::string>();
      std::cout << pad(label, 14) << pad(c["depth"].dump(), 4) << c["example_chain"].get<std::string>() << "\n";
    }
  } else {
    std::cout << pad("p", 6);
    for (const auto& c : j["columns"]) std::cout << pad(c.get<std::string>(), 4);
    std::cout << "\n";
    for (const auto& r : j["rows"]) {
      std::cout << pad(r["p"].get<std::string>(), 6);
      for (const auto& v : r["cells"]) std::cout << pad(v.is_null() ? "" : v.dump(), 4);
      std::cout << "\n";
    }
    std::cout << "populated cells: " << j["populated_cells"] << "\n";
  }
  std::cout << "brute-force cross-check:";
  if (j["crosscheck"].empty()) std::cout << " none";
  for (const auto& c : j["crosscheck"])
    std::cout << " " << c["type"].get<std::string>() << "@" << c["p"] << "=" << c["bruteforce"];
  std::cout << "\n";
}

void print_verify(const Json& j) {
  for (const auto& s : j["steps"]) {
    std::cout << pad(s["index"].dump(), 4) << pad(s["parent"].get<std::string>() + " > " + s["child"].get<std::string>(), 28)
              << pad(s["verdict"].get<std::string>(), 15) << s["reason"].get<std::string>() << "\n";
  }
  std::cout << "length " << j["length"] << ", overall " << j["overall"].get<std::string>() << "\n";
}

int run(const Options& o, const std::string& cmd) {
  ld_context* raw = nullptr;
  if (auto st = ld_context_create(nullptr, &raw); st != LD_OK) {
    std::cerr << "error: cannot load the maximal subgroup database (" << ld_status_name(st) << ")\n";
    return exit_code(st);
  }
  std::unique_ptr<ld_context, decltype(&ld_context_destroy)> ctx(raw, &ld_context_destroy);

  if (cmd == "invariants") {
    Owned js;
    auto st = ld_invariants_json(ctx.get(), o.expr.c_str(), o.ch, &js.p);
    if (st != LD_OK) return report_error(ctx.get(), st, o, o.expr);
    auto j = Json::parse(js.str());
    if (o.json)
      std::cout << j.dump() << "\n";
    else
      print_invariants(j);
    return kOk;
  }
  if (cmd == "table") {
    Owned js;
    auto st = ld_table_json(ctx.get(), o.table.c_str(), &js.p);
    if (st != LD_OK) return report_error(ctx.get(), st, o);
    auto j = Json::parse(js.str());
    if (o.json)
      std::cout << j.dump() << "\n";
    else
      print_table(j);
    return kOk;
  }
  if (cmd == "chain") {
    Owned cert, js;
    auto mode = o.shortest ? LD_CHAIN_SHORTEST : LD_CHAIN_LONGEST;
    auto st = ld_chain(ctx.get(), o.expr.c_str(), o.ch, mode, &cert.p, &js.p);
    if (st != LD_OK) return report_error(ctx.get(), st, o, o.expr);
    auto j = Json::parse(js.str());
    if (!o.out.empty()) {
      std::ofstream f(o.out, std::ios::binary);
      f << cert.str();
      if (!f) {
        std::cerr << "error: cannot write " << o.out << "\n";
        return kUsage;
      }
      j["output"] = o.out;
    } else {
      j["certificate"] = cert.str();
    }
    if (o.json) {
      std::cout << j.dump() << "\n";
      return kOk;
    }
    std::cout << j["group"].get<std::string>() << " p=" << j["char"] << " " << j["mode"].get<std::string>()
              << ": length " << j["length"] << ", "
              << (j["known_optimal"].get<bool>() ? "known-optimal" : "upper bound") << "\n"
              << "chain: " << j["chain"].get<std::string>() << "\n"
              << "construction: " << j["construction"].get<std::string>() << "\n"
              << "verifier: " << j["verdict"].get<std::string>() << "\n";
    if (o.out.empty())
      std::cout << "\n" << cert.str();
    else
      std::cout << "written to " << o.out << "\n";
    return kOk;
  }
  if (cmd == "verify") {
    std::ifstream f(o.path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot read " << o.path << "\n";
      return kUsage;
    }
    std::stringstream ss;
    ss << f.rdbuf();
    Owned js;
    auto st = ld_verify(ctx.get(), ss.str().c_str(), &js.p);
    if (st != LD_OK && st != LD_UNCERTIFIABLE && st != LD_REFUTED) return report_error(ctx.get(), st, o);
    auto j = Json::parse(js.str());
    if (o.json)
      std::cout << j.dump() << "\n";
    else
      print_verify(j);
    return exit_code(st);
  }
  if (cmd == "sweep") {
    Owned js;
    auto st = ld_sweep_json(ctx.get(), o.bound.c_str(), &o.range, &js.p);
    if (st != LD_OK && st != LD_VIOLATED) return report_error(ctx.get(), st, o);
    auto j = Json::parse(js.str());
    if (o.json) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << j["bound"].get<std::string>() << ": checked " << j["checked"] << ", holds " << j["holds"]
                << ", inconclusive " << j["inconclusive"] << ", violated " << j["violated"] << "\n";
      for (const auto& v : j["violations"])
        std::cout << "  VIOLATED " << v["subject"].get<std::string>() << " p=" << v["char"] << ": "
                  << v["detail"].get<std::string>() << "\n";
    }
    return exit_code(st);
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Length and depth of connected algebraic groups"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.set_version_flag("--version", std::string("lendepth ") + ld_version());

  auto char_opt = [&](CLI::App* sub) {
    sub->add_option("--char", o.ch, "characteristic: 0 or a prime")->required();
  };

  auto* inv = app.add_subcommand("invariants", "dim, length, depth, chain difference and ratio");
  inv->add_option("expr", o.expr, "group descriptor, e.g. \"U6 A2 A1 T1\"")->required();
  char_opt(inv);

  auto* tab = app.add_subcommand("table", "regenerate a depth table from the engine");
  tab->add_option("name", o.table, "depth-lowrank, depth-exceptional or depth-char0")
      ->required()
      ->check(CLI::IsMember({"depth-lowrank", "depth-exceptional", "depth-char0"}));

  auto* ch = app.add_subcommand("chain", "emit a chain certificate");
  ch->add_option("expr", o.expr, "simple type")->required();
  char_opt(ch);
  auto* lo = ch->add_flag("--longest", o.longest, "maximum-length chain");
  auto* sh = ch->add_flag("--shortest", o.shortest, "shortest chain the engine can build");
  lo->excludes(sh);
  ch->add_option("-o,--output", o.out, "certificate file to write");

  auto* ver = app.add_subcommand("verify", "verify a chain certificate file");
  ver->add_option("path", o.path, "certificate file")->required();

  auto* sw = app.add_subcommand("sweep", "check a bound over a range of groups");
  sw->add_option("bound", o.bound, "cd-bound, simple-cd, ss-cd, cr-bound, summ or half-dim")
      ->required()
      ->check(CLI::IsMember({"cd-bound", "simple-cd", "ss-cd", "cr-bound", "summ", "half-dim"}));
  sw->add_option("--max-rank", o.range.max_rank, "largest rank (default 8)");
  sw->add_option("--max-p", o.range.max_p, "largest prime (default 23)");
  sw->add_option("--max-k", o.range.max_k, "largest power for ss-cd (default 6)");

  for (auto* sub : {inv, tab, ch, ver, sw}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (*ch && !o.longest && !o.shortest) {
    std::cerr << "error: chain needs --longest or --shortest\n";
    return kUsage;
  }
  try {
    return run(o, app.get_subcommands().front()->get_name());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
