#include "stacksort/stacksort.h"

#include "cache.hpp"
#include "report.hpp"

#include <memory>
#include <new>
#include <sstream>

using namespace stacksort;

struct ss_context {
  int workers = 1;
  int length_cap = kDefaultLengthCap;
  std::unique_ptr<ResultCache> cache;
  std::ostringstream warnings;
  std::string warnings_snapshot;
};

struct ss_perm {
  Permutation value;
};

struct ss_text {
  std::string value;
};

namespace {

thread_local std::string last_error;

ss_status fail(ss_status status, std::string message)
{
  last_error = std::move(message);
  return status;
}

// Runs body, mapping library exceptions onto status codes.
template <class Body>
ss_status guarded(Body&& body) noexcept
{
  try {
    body();
    return SS_OK;
  } catch (const Error& e) {
    return fail(static_cast<ss_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SS_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what)
{
  if (!p)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

std::string_view opt(const char* s) { return s ? std::string_view(s) : std::string_view(); }

Machine make_machine(const char* sigma, const char* tau)
{
  require(sigma, "sigma");
  return Machine::parse(sigma, opt(tau));
}

Format to_format(ss_format f)
{
  switch (f) {
  case SS_FORMAT_TEXT:
    return Format::Text;
  case SS_FORMAT_JSON:
    return Format::Json;
  case SS_FORMAT_CSV:
    return Format::Csv;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown format");
}

WestDirection to_direction(ss_west_direction d)
{
  switch (d) {
  case SS_WEST_132_TO_123:
    return WestDirection::From132To123;
  case SS_WEST_123_TO_132:
    return WestDirection::From123To132;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown direction");
}

void emit(ss_text** out, std::string value)
{
  *out = new ss_text{std::move(value)};
}

void emit(ss_perm** out, Permutation value)
{
  *out = new ss_perm{std::move(value)};
}

EnumerationResult enumerate(ss_context* ctx, const char* sigma, const char* tau, int n, int witnesses)
{
  const Machine machine = make_machine(sigma, tau);
  EnumerationOptions options;
  options.workers = ctx->workers;
  options.length_cap = ctx->length_cap;
  if (witnesses >= 0)
    options.keep_witnesses = witnesses != 0;
  const bool keep = options.keep_witnesses.value_or(n <= kWitnessDefaultMaxLength);

  if (!ctx->cache)
    return enumerate_machine(n, machine, options);

  const CacheKey key{machine.sigma().name(), machine.tau() ? machine.tau()->name() : "", n, keep};
  if (auto hit = ctx->cache->load(key))
    return *hit;
  EnumerationResult result = enumerate_machine(n, machine, options);
  ctx->cache->store(key, result);
  return result;
}

std::vector<SequenceTable> sequence_tables(std::string_view name, int n_max)
{
  static constexpr std::string_view all[] = {"g",        "f",          "gf", "catalan", "schroder", "binomial-catalan",
                                             "powers-of-two", "sort-123-321"};
  if (name == "all") {
    std::vector<SequenceTable> out;
    for (const auto n : all)
      out.push_back(sequence_tables(n, n_max).front());
    return out;
  }
  if (name == "g")
    return {g_sequence(n_max)};
  if (name == "f")
    return {f_sequence(n_max)};
  if (name == "gf")
    return {gf_coefficients(n_max)};
  if (name == "catalan")
    return {catalan(n_max)};
  if (name == "schroder")
    return {schroder_large(n_max)};
  if (name == "binomial-catalan")
    return {binomial_transform_catalan(n_max)};
  if (name == "powers-of-two")
    return {powers_2_shifted(n_max)};
  if (name == "sort-123-321")
    return {sort_123_321_table(n_max)};
  throw Error(ErrorCode::InvalidArgument, "unknown sequence '" + std::string(name) + "'");
}

} // namespace

extern "C" {

const char* ss_status_name(ss_status status)
{
  if (status == SS_OK)
    return "Ok";
  return to_string(static_cast<ErrorCode>(status));
}

const char* ss_last_error_message(void) { return last_error.c_str(); }

const char* ss_version(void) { return "1.0.0"; }

ss_status ss_context_new(ss_context** out)
{
  return guarded([&] {
    require(out, "out");
    *out = new ss_context;
  });
}

void ss_context_free(ss_context* ctx) { delete ctx; }

ss_status ss_context_set_workers(ss_context* ctx, int workers)
{
  return guarded([&] {
    require(ctx, "ctx");
    if (workers < 1)
      throw Error(ErrorCode::InvalidArgument, "workers must be at least 1");
    ctx->workers = workers;
  });
}

ss_status ss_context_set_length_cap(ss_context* ctx, int cap)
{
  return guarded([&] {
    require(ctx, "ctx");
    if (cap < 0)
      throw Error(ErrorCode::InvalidArgument, "length cap must be non-negative");
    ctx->length_cap = cap;
  });
}

ss_status ss_context_set_cache_dir(ss_context* ctx, const char* dir)
{
  return guarded([&] {
    require(ctx, "ctx");
    if (!dir || !*dir)
      ctx->cache.reset();
    else
      ctx->cache = std::make_unique<ResultCache>(dir, std::string(kCacheVersion), &ctx->warnings);
  });
}

const char* ss_context_warnings(const ss_context* ctx)
{
  if (!ctx)
    return "";
  auto* mutable_ctx = const_cast<ss_context*>(ctx);
  mutable_ctx->warnings_snapshot = ctx->warnings.str();
  return mutable_ctx->warnings_snapshot.c_str();
}

const char* ss_text_data(const ss_text* text) { return text ? text->value.c_str() : ""; }

size_t ss_text_size(const ss_text* text) { return text ? text->value.size() : 0; }

void ss_text_free(ss_text* text) { delete text; }

ss_status ss_perm_parse(const char* text, ss_perm** out)
{
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    emit(out, parse_permutation(text));
  });
}

ss_status ss_perm_from_values(const int* values, size_t length, ss_perm** out)
{
  return guarded([&] {
    require(out, "out");
    if (length > 0)
      require(values, "values");
    emit(out, Permutation(std::vector<Value>(values, values + length)));
  });
}

size_t ss_perm_size(const ss_perm* perm) { return perm ? static_cast<size_t>(perm->value.size()) : 0; }

ss_status ss_perm_values(const ss_perm* perm, int* values, size_t capacity, size_t* length)
{
  return guarded([&] {
    require(perm, "perm");
    const auto e = perm->value.entries();
    if (capacity > 0)
      require(values, "values");
    for (size_t i = 0; i < e.size() && i < capacity; ++i)
      values[i] = e[i];
    if (length)
      *length = e.size();
  });
}

ss_status ss_perm_to_text(const ss_perm* perm, ss_text** out)
{
  return guarded([&] {
    require(perm, "perm");
    require(out, "out");
    emit(out, perm->value.to_string());
  });
}

void ss_perm_free(ss_perm* perm) { delete perm; }

ss_status ss_pattern_stack_pass(const ss_perm* x, const char* patterns, ss_perm** out)
{
  return guarded([&] {
    require(x, "x");
    require(patterns, "patterns");
    require(out, "out");
    emit(out, pattern_stack_pass(x->value, PatternSet::parse(patterns)));
  });
}

ss_status ss_west_pass(const ss_perm* x, ss_perm** out)
{
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    emit(out, west_pass(x->value));
  });
}

ss_status ss_machine_run(const ss_perm* x, const char* sigma, const char* tau, ss_perm** out)
{
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    emit(out, make_machine(sigma, tau).run(x->value));
  });
}

ss_status ss_is_sortable(const ss_perm* x, const char* sigma, const char* tau, int* sortable)
{
  return guarded([&] {
    require(x, "x");
    require(sortable, "sortable");
    *sortable = make_machine(sigma, tau).sorts(x->value) ? 1 : 0;
  });
}

ss_status ss_contains(const ss_perm* x, const char* patterns, int* contains)
{
  return guarded([&] {
    require(x, "x");
    require(patterns, "patterns");
    require(contains, "contains");
    *contains = avoids(x->value, PatternSet::parse(patterns)) ? 0 : 1;
  });
}

ss_status ss_signature(const ss_perm* x, const char* pattern, ss_text** out)
{
  return guarded([&] {
    require(x, "x");
    require(pattern, "pattern");
    require(out, "out");
    emit(out, signature(x->value, ClassicalPattern::parse(pattern)).to_string());
  });
}

ss_status ss_west_map(const ss_perm* x, ss_west_direction direction, ss_perm** out)
{
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    emit(out, west_map(x->value, to_direction(direction)));
  });
}

ss_status ss_rotem_map(const ss_perm* x, ss_text** dyck_word)
{
  return guarded([&] {
    require(x, "x");
    require(dyck_word, "dyck_word");
    emit(dyck_word, rotem_map(x->value).word());
  });
}

ss_status ss_count_sortable(ss_context* ctx, const char* sigma, const char* tau, int n, uint64_t* count)
{
  return guarded([&] {
    require(ctx, "ctx");
    require(count, "count");
    *count = enumerate(ctx, sigma, tau, n, 0).count;
  });
}

ss_status ss_render_trace(const ss_perm* x, const char* sigma, const char* tau, ss_format format, ss_text** out)
{
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    emit(out, render_trace(make_machine(sigma, tau), x->value, to_format(format)));
  });
}

ss_status ss_render_enumeration(ss_context* ctx, const char* sigma, const char* tau, int n, int witnesses,
                                ss_format format, ss_text** out)
{
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    const Format f = to_format(format);
    emit(out, render_enumeration(enumerate(ctx, sigma, tau, n, witnesses), f));
  });
}

ss_status ss_render_verify(ss_context* ctx, const char* suite, int n_max, ss_format format, int* all_pass,
                           ss_text** out)
{
  return guarded([&] {
    require(ctx, "ctx");
    require(suite, "suite");
    require(out, "out");
    const Format f = to_format(format);
    const auto results = run_suite(suite, n_max, ctx->workers);
    bool pass = true;
    for (const auto& r : results)
      pass = pass && r.all_pass();
    emit(out, render_suites(results, f));
    if (all_pass)
      *all_pass = pass ? 1 : 0;
  });
}

ss_status ss_render_signature(const ss_perm* x, const char* pattern, ss_format format, ss_text** out)
{
  return guarded([&] {
    require(x, "x");
    require(pattern, "pattern");
    require(out, "out");
    emit(out, render_signature(x->value, ClassicalPattern::parse(pattern), to_format(format)));
  });
}

ss_status ss_render_west_map(const ss_perm* x, ss_west_direction direction, ss_format format, ss_text** out)
{
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    emit(out, render_west_map(x->value, to_direction(direction), to_format(format)));
  });
}

ss_status ss_render_dyck(const ss_perm* x, ss_format format, ss_text** out)
{
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    emit(out, render_dyck(x->value, to_format(format)));
  });
}

ss_status ss_render_sequences(const char* name, int n_max, ss_format format, ss_text** out)
{
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const Format f = to_format(format);
    emit(out, render_sequences(sequence_tables(name, n_max), f));
  });
}

ss_status ss_render_conjecture(ss_context* ctx, int n, ss_format format, int* agree, ss_text** out)
{
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    const Format f = to_format(format);
    if (n < 1)
      throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    const auto result = conjecture_tables(n, Machine::parse("132", "213"), Machine::parse("213", "312"), ctx->workers);
    emit(out, render_conjecture(result, f));
    if (agree)
      *agree = result.report.pass ? 1 : 0;
  });
}

} // extern "C"
