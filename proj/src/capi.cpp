#include "intervallabel/intervallabel.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "intervallabel/error.hpp"
#include "intervallabel/labeling.hpp"
#include "intervallabel/reports.hpp"
#include "intervallabel/representation.hpp"
#include "intervallabel/verification.hpp"

struct il_instance {
  intervallabel::Representation rep;
};

struct il_labeling {
  intervallabel::Labeling lab;
};

namespace {

thread_local std::string g_last_error;

il_status fail(il_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

il_status from_code(intervallabel::ErrorCode code) {
  using intervallabel::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return IL_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return IL_ERR_PARSE;
    case ErrorCode::kTooLarge: return IL_ERR_TOO_LARGE;
    case ErrorCode::kNotApplicable: return IL_ERR_NOT_APPLICABLE;
    case ErrorCode::kIo: return IL_ERR_IO;
  }
  return IL_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
il_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return IL_OK;
  } catch (const intervallabel::Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(IL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(IL_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

#define IL_REQUIRE(ptr)                                              \
  do {                                                               \
    if (!(ptr)) return fail(IL_ERR_NULL_POINTER, #ptr " is null");  \
  } while (0)

extern "C" {

const char* il_version(void) { return "1.0.0"; }

const char* il_status_name(il_status status) {
  switch (status) {
    case IL_OK: return "ok";
    case IL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case IL_ERR_PARSE: return "parse error";
    case IL_ERR_TOO_LARGE: return "instance too large";
    case IL_ERR_NOT_APPLICABLE: return "not applicable";
    case IL_ERR_IO: return "i/o error";
    case IL_ERR_NULL_POINTER: return "null pointer";
    case IL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* il_last_error(void) { return g_last_error.c_str(); }

void il_string_free(char* s) { std::free(s); }

void il_gen_params_default(il_gen_params* params) {
  if (!params) return;
  intervallabel::GenParams d;
  params->range_lo = d.range_lo;
  params->range_hi = d.range_hi;
  params->k = d.k;
  params->circumference = d.circumference;
  params->max_length = d.max_length;
}

il_status il_instance_parse(const char* json, il_instance** out) {
  IL_REQUIRE(json);
  IL_REQUIRE(out);
  return guarded([&] { *out = new il_instance{intervallabel::parse_instance(json)}; });
}

il_status il_instance_generate(const char* class_name, int n, uint64_t seed,
                               const il_gen_params* params, il_instance** out) {
  IL_REQUIRE(class_name);
  IL_REQUIRE(out);
  return guarded([&] {
    intervallabel::GenParams gp;
    if (params) {
      gp.range_lo = params->range_lo;
      gp.range_hi = params->range_hi;
      gp.k = params->k;
      gp.circumference = params->circumference;
      gp.max_length = params->max_length;
    }
    auto cls = intervallabel::parse_class_name(class_name);
    *out = new il_instance{intervallabel::gen_instance(cls, n, seed, gp)};
  });
}

il_status il_instance_serialize(const il_instance* inst, char** out_json) {
  IL_REQUIRE(inst);
  IL_REQUIRE(out_json);
  return guarded([&] { *out_json = dup_string(intervallabel::serialize_instance(inst->rep)); });
}

il_status il_instance_class(const il_instance* inst, const char** out_name) {
  IL_REQUIRE(inst);
  IL_REQUIRE(out_name);
  // class_name returns views of string literals, so data() is terminated.
  *out_name = intervallabel::class_name(intervallabel::rep_class(inst->rep)).data();
  return IL_OK;
}

il_status il_instance_vertex_count(const il_instance* inst, int* out) {
  IL_REQUIRE(inst);
  IL_REQUIRE(out);
  *out = intervallabel::vertex_count(inst->rep);
  return IL_OK;
}

il_status il_instance_stats(const il_instance* inst, int omega_cap, char** out_json) {
  IL_REQUIRE(inst);
  IL_REQUIRE(out_json);
  return guarded([&] {
    auto g = intervallabel::derive_graph(inst->rep);
    *out_json = dup_string(intervallabel::stats_json(intervallabel::compute_stats(g, omega_cap)));
  });
}

void il_instance_free(il_instance* inst) { delete inst; }

il_status il_label(const il_instance* inst, int p, int q, il_labeling** out) {
  IL_REQUIRE(inst);
  IL_REQUIRE(out);
  return guarded([&] {
    *out = new il_labeling{intervallabel::label_instance(inst->rep, {p, q})};
  });
}

il_status il_labeling_parse(const char* json, il_labeling** out) {
  IL_REQUIRE(json);
  IL_REQUIRE(out);
  return guarded([&] { *out = new il_labeling{intervallabel::parse_labeling(json)}; });
}

il_status il_labeling_serialize(const il_labeling* lab, char** out_json) {
  IL_REQUIRE(lab);
  IL_REQUIRE(out_json);
  return guarded([&] { *out_json = dup_string(intervallabel::serialize_labeling(lab->lab)); });
}

il_status il_labeling_span(const il_labeling* lab, int64_t* out) {
  IL_REQUIRE(lab);
  IL_REQUIRE(out);
  *out = lab->lab.span();
  return IL_OK;
}

void il_labeling_free(il_labeling* lab) { delete lab; }

il_status il_validate(const il_instance* inst, const il_labeling* lab, const char* variant,
                      size_t* out_count, char** out_json) {
  IL_REQUIRE(inst);
  IL_REQUIRE(lab);
  IL_REQUIRE(out_count);
  return guarded([&] {
    auto v = intervallabel::parse_variant(variant ? variant : "L1");
    auto g = intervallabel::derive_graph(inst->rep);
    auto violations = intervallabel::validate(g, lab->lab, lab->lab.params, v);
    *out_count = violations.size();
    if (out_json) *out_json = dup_string(intervallabel::violations_json(violations));
  });
}

il_status il_bound_report(const il_instance* inst, const il_labeling* lab, int omega_cap,
                          char** out_json, int* out_hard_failure) {
  IL_REQUIRE(inst);
  IL_REQUIRE(lab);
  IL_REQUIRE(out_json);
  return guarded([&] {
    auto report = intervallabel::bound_report(inst->rep, lab->lab, omega_cap);
    *out_json = dup_string(intervallabel::bound_report_json(report));
    if (out_hard_failure) *out_hard_failure = intervallabel::is_hard_failure(report) ? 1 : 0;
  });
}

il_status il_exact_lambda(const il_instance* inst, int p, int q, int n_cap, int64_t* out) {
  IL_REQUIRE(inst);
  IL_REQUIRE(out);
  return guarded([&] {
    *out = intervallabel::exact_lambda(intervallabel::derive_graph(inst->rep), {p, q}, n_cap);
  });
}

il_status il_chi_square_exact(const il_instance* inst, int n_cap, int64_t* out) {
  IL_REQUIRE(inst);
  IL_REQUIRE(out);
  return guarded([&] {
    *out = intervallabel::chi_square_exact(intervallabel::derive_graph(inst->rep), n_cap);
  });
}

il_status il_check_claim(const il_instance* inst, const char* claim, char** out_json) {
  IL_REQUIRE(inst);
  IL_REQUIRE(claim);
  IL_REQUIRE(out_json);
  return guarded([&] {
    auto c = intervallabel::parse_claim(claim);
    *out_json = dup_string(intervallabel::claim_check_json(c, intervallabel::check_claim(c, inst->rep)));
  });
}

}  // extern "C"
