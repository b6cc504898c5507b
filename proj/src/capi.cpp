#include "lendepth/lendepth.h"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "lendepth/chaincert.hpp"
#include "lendepth/depth.hpp"
#include "lendepth/errors.hpp"
#include "lendepth/length.hpp"
#include "lendepth/maxsubdb.hpp"
#include "reports.hpp"

using namespace lendepth;

struct ld_context {
  MaxSubgroupDatabase db;
  std::string error;
  std::size_t position = SIZE_MAX;
};

namespace {

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

ld_status fail(ld_context* ctx, ld_status st, const std::string& msg, std::size_t pos = SIZE_MAX) {
  if (ctx) {
    ctx->error = msg;
    ctx->position = pos;
  }
  return st;
}

// Runs `body` and translates engine exceptions into status codes.
template <typename F>
ld_status guarded(ld_context* ctx, F&& body) {
  if (!ctx) return LD_INVALID_ARGUMENT;
  ctx->error.clear();
  ctx->position = SIZE_MAX;
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(ctx, LD_PARSE_ERROR, e.what(), e.position());
  } catch (const StructuralError& e) {
    std::string msg = e.what();
    if (!e.indices().empty()) {
      msg += " (nodes";
      for (auto i : e.indices()) msg += " " + std::to_string(i);
      msg += ")";
    }
    return fail(ctx, LD_PARSE_ERROR, msg);
  } catch (const ValidationError& e) {
    return fail(ctx, LD_PARSE_ERROR, e.what());
  } catch (const DomainError& e) {
    return fail(ctx, LD_UNSUPPORTED, e.what());
  } catch (const NotCuratedError& e) {
    return fail(ctx, LD_UNSUPPORTED, e.what());
  } catch (const IncompleteError& e) {
    return fail(ctx, LD_UNSUPPORTED, e.what());
  } catch (const DatabaseFormatError& e) {
    return fail(ctx, LD_IO_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ctx, LD_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(ctx, LD_INTERNAL_ERROR, e.what());
  }
}

Characteristic to_char(std::uint64_t v) { return Characteristic::from_value(v); }

GroupDescriptor parse_expr(const char* expr) {
  if (!expr) throw ValidationError("missing descriptor");
  return parse_descriptor(expr);
}

}  // namespace

extern "C" {

const char* ld_version(void) { return "1.0.0"; }

const char* ld_status_name(ld_status status) {
  switch (status) {
    case LD_OK: return "ok";
    case LD_INVALID_ARGUMENT: return "invalid argument";
    case LD_PARSE_ERROR: return "parse error";
    case LD_INTERNAL_ERROR: return "internal error";
    case LD_UNSUPPORTED: return "unsupported";
    case LD_UNCERTIFIABLE: return "uncertifiable";
    case LD_REFUTED: return "refuted";
    case LD_VIOLATED: return "violated";
    case LD_IO_ERROR: return "i/o error";
  }
  return "unknown status";
}

ld_status ld_context_create(const char* db_path, ld_context** out) {
  if (!out) return LD_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    auto db = db_path ? MaxSubgroupDatabase::from_file(db_path) : MaxSubgroupDatabase::load_default();
    *out = new ld_context{std::move(db), {}, SIZE_MAX};
    return LD_OK;
  } catch (const DatabaseFormatError&) {
    return LD_IO_ERROR;
  } catch (const std::exception&) {
    return LD_IO_ERROR;
  }
}

void ld_context_destroy(ld_context* ctx) { delete ctx; }

const char* ld_last_error(const ld_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

size_t ld_last_error_position(const ld_context* ctx) { return ctx ? ctx->position : SIZE_MAX; }

const char* ld_database_version(const ld_context* ctx) { return ctx ? ctx->db.version().c_str() : ""; }

ld_status ld_length(ld_context* ctx, const char* expr, uint64_t* out) {
  return guarded(ctx, [&] {
    if (!out) return fail(ctx, LD_INVALID_ARGUMENT, "null output");
    *out = length(parse_expr(expr));
    return LD_OK;
  });
}

ld_status ld_depth(ld_context* ctx, const char* expr, uint64_t characteristic, uint64_t* lower, uint64_t* upper) {
  return guarded(ctx, [&] {
    if (!lower || !upper) return fail(ctx, LD_INVALID_ARGUMENT, "null output");
    const auto g = parse_expr(expr);
    const auto d = depth(g, to_char(characteristic), ctx->db);
    *lower = d.lower;
    *upper = d.upper;
    return LD_OK;
  });
}

ld_status ld_invariants_json(ld_context* ctx, const char* expr, uint64_t characteristic, char** out_json) {
  return guarded(ctx, [&] {
    if (!out_json) return fail(ctx, LD_INVALID_ARGUMENT, "null output");
    const auto g = parse_expr(expr);
    auto j = report::invariants(ctx->db, g, to_char(characteristic));
    *out_json = dup(j.dump());
    return LD_OK;
  });
}

ld_status ld_table_json(ld_context* ctx, const char* name, char** out_json) {
  return guarded(ctx, [&] {
    if (!out_json || !name) return fail(ctx, LD_INVALID_ARGUMENT, "null argument");
    std::string n = name;
    if (n != "depth-lowrank" && n != "depth-exceptional" && n != "depth-char0")
      return fail(ctx, LD_INVALID_ARGUMENT, "unknown table `" + n + "`");
    *out_json = dup(report::table(ctx->db, n).dump());
    return LD_OK;
  });
}

ld_status ld_chain(ld_context* ctx, const char* expr, uint64_t characteristic, ld_chain_mode mode,
                   char** out_certificate, char** out_json) {
  return guarded(ctx, [&] {
    if (mode != LD_CHAIN_LONGEST && mode != LD_CHAIN_SHORTEST) return fail(ctx, LD_INVALID_ARGUMENT, "bad chain mode");
    const auto g = parse_expr(expr);
    auto c = report::chain(ctx->db, g, to_char(characteristic), mode == LD_CHAIN_SHORTEST);
    std::string cert = serialize(c.certificate);
    std::string json = c.summary.dump();
    char* a = out_certificate ? dup(cert) : nullptr;
    try {
      if (out_json) *out_json = dup(json);
    } catch (...) {
      std::free(a);
      throw;
    }
    if (out_certificate) *out_certificate = a;
    return LD_OK;
  });
}

ld_status ld_verify(ld_context* ctx, const char* certificate_text, char** out_json) {
  return guarded(ctx, [&] {
    if (!certificate_text) return fail(ctx, LD_INVALID_ARGUMENT, "null certificate");
    const auto cert = parse_certificate(certificate_text);
    auto j = report::verification(ctx->db, cert);
    if (out_json) *out_json = dup(j.dump());
    const auto overall = j["overall"].get<std::string>();
    if (overall == "Certified") return LD_OK;
    return overall == "Refuted" ? LD_REFUTED : LD_UNCERTIFIABLE;
  });
}

ld_status ld_sweep_json(ld_context* ctx, const char* bound, const ld_sweep_range* range, char** out_json) {
  return guarded(ctx, [&] {
    if (!bound) return fail(ctx, LD_INVALID_ARGUMENT, "null bound name");
    report::SweepRange r;
    if (range) r = {range->max_rank, range->max_p, range->max_k};
    auto j = report::sweep(ctx->db, bound, r);
    if (out_json) *out_json = dup(j.dump());
    return j["violated"].get<std::uint64_t>() == 0 ? LD_OK : LD_VIOLATED;
  });
}

void ld_free_string(char* s) { std::free(s); }

}  // extern "C"
