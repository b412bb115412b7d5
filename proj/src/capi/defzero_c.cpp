#include "defzero.h"

#include <string>

#include "defzero/error.hpp"
#include "defzero/report.hpp"

struct dz_group {
  defzero::report::GroupSource source;
};

namespace {

using defzero::Error;
using defzero::ErrorCode;

thread_local std::string last_error;

dz_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return DZ_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return DZ_DIMENSION_MISMATCH;
    case ErrorCode::DeskScaleExceeded: return DZ_DESK_SCALE_EXCEEDED;
    case ErrorCode::NotNormal: return DZ_NOT_NORMAL;
    case ErrorCode::NotNormalPSubgroup: return DZ_NOT_NORMAL_P_SUBGROUP;
    case ErrorCode::NotYFixed: return DZ_NOT_Y_FIXED;
    case ErrorCode::NotCommutative: return DZ_NOT_COMMUTATIVE;
    case ErrorCode::CrossCheckFailed: return DZ_CROSS_CHECK_FAILED;
    case ErrorCode::VerificationFailed: return DZ_VERIFICATION_FAILED;
    case ErrorCode::SpanMismatch: return DZ_SPAN_MISMATCH;
    case ErrorCode::NotSymmetricQuotient: return DZ_NOT_SYMMETRIC_QUOTIENT;
    case ErrorCode::NotAnIdeal: return DZ_NOT_AN_IDEAL;
    case ErrorCode::RadicalMismatch: return DZ_RADICAL_MISMATCH;
    case ErrorCode::FieldNotSplitting: return DZ_FIELD_NOT_SPLITTING;
    case ErrorCode::SplitFailure: return DZ_SPLIT_FAILURE;
    case ErrorCode::DegreeRecoveryFailed: return DZ_DEGREE_RECOVERY_FAILED;
    case ErrorCode::Parse: return DZ_PARSE;
    case ErrorCode::Io: return DZ_IO;
  }
  return DZ_INTERNAL;
}

template <class Fn>
dz_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return DZ_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return DZ_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return DZ_INTERNAL;
  }
}

defzero::report::Options convert(const dz_options* o) {
  defzero::report::Options out;
  if (o == nullptr) return out;
  out.prime = o->prime;
  if (o->q_selector != nullptr) out.q_selector = o->q_selector;
  out.field_degree = o->field_degree;
  out.seed = o->seed;
  out.jobs = o->jobs == 0 ? 1 : o->jobs;
  if (o->max_order != 0) out.max_order = static_cast<std::size_t>(o->max_order);
  out.dump_bases = o->dump_bases != 0;
  out.timings = o->timings != 0;
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* dz_version(void) { return "0.1.0"; }

const char* dz_status_name(dz_status status) {
  if (status == DZ_OK) return "Ok";
  if (status == DZ_INTERNAL) return "Internal";
  const int index = static_cast<int>(status) - 1;
  if (index < 0 || index > static_cast<int>(ErrorCode::Io)) return "Unknown";
  return defzero::error_code_name(static_cast<ErrorCode>(index)).data();
}

const char* dz_last_error(void) { return last_error.c_str(); }

void dz_options_init(dz_options* options) {
  if (options == nullptr) return;
  const defzero::report::Options d;
  options->prime = d.prime;
  options->q_selector = nullptr;
  options->field_degree = d.field_degree;
  options->seed = d.seed;
  options->jobs = d.jobs;
  options->max_order = d.max_order;
  options->dump_bases = 0;
  options->timings = 0;
}

dz_status dz_group_load(const char* spec, uint64_t max_order, dz_group** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const std::size_t limit = max_order == 0 ? defzero::groups::kDefaultMaxOrder : static_cast<std::size_t>(max_order);
    *out = new dz_group{defzero::report::load_group(spec, limit)};
  });
}

void dz_group_free(dz_group* group) { delete group; }

uint64_t dz_group_order(const dz_group* group) { return group == nullptr ? 0 : group->source.group->order(); }

dz_status dz_verify(const dz_group* group, const dz_options* options, dz_line_fn sink, void* user, int* all_ok) {
  return guarded([&] {
    require(group != nullptr && sink != nullptr, "null argument");
    const auto reports = defzero::report::verify(group->source, convert(options));
    bool ok = true;
    for (const auto& r : reports) {
      ok = ok && r.verdicts.ok();
      sink(r.json.c_str(), user);
    }
    if (all_ok != nullptr) *all_ok = ok ? 1 : 0;
  });
}

dz_status dz_inspect(const dz_group* group, const dz_options* options, dz_line_fn sink, void* user) {
  return guarded([&] {
    require(group != nullptr && sink != nullptr, "null argument");
    for (const auto& line : defzero::report::inspect(group->source, convert(options))) sink(line.c_str(), user);
  });
}

dz_status dz_corpus_run(const char* path, const dz_options* options, dz_line_fn sink, void* user,
                        dz_corpus_summary* summary) {
  return guarded([&] {
    require(path != nullptr && sink != nullptr, "null argument");
    const auto entries = defzero::report::load_corpus(path);
    const auto s = defzero::report::run_corpus(entries, convert(options),
                                               [&](const std::string& line) { sink(line.c_str(), user); });
    if (summary != nullptr) *summary = {s.entries, s.triples, s.passed, s.failed, s.errors};
  });
}

}  // extern "C"
