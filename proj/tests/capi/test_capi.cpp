#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stacksort/stacksort.h"

#include <filesystem>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

std::string take(ss_text* t)
{
  std::string s(ss_text_data(t), ss_text_size(t));
  ss_text_free(t);
  return s;
}

std::vector<int> values(const ss_perm* p)
{
  std::vector<int> v(ss_perm_size(p));
  size_t len = 0;
  REQUIRE(ss_perm_values(p, v.data(), v.size(), &len) == SS_OK);
  CHECK(len == v.size());
  return v;
}

} // namespace

TEST_CASE("machine run through the C API")
{
  ss_perm* x = nullptr;
  REQUIRE(ss_perm_parse("2 3 1 4", &x) == SS_OK);
  ss_perm* first = nullptr;
  REQUIRE(ss_pattern_stack_pass(x, "132,321", &first) == SS_OK);
  CHECK(values(first) == std::vector<int>{3, 4, 1, 2});
  ss_perm* out = nullptr;
  REQUIRE(ss_machine_run(x, "132", "321", &out) == SS_OK);
  CHECK(values(out) == std::vector<int>{3, 1, 2, 4});
  int sortable = -1;
  REQUIRE(ss_is_sortable(x, "132", "321", &sortable) == SS_OK);
  CHECK(sortable == 0);
  ss_perm_free(out);
  ss_perm_free(first);
  ss_perm_free(x);

  const int w[] = {4, 2, 1, 3};
  ss_perm* y = nullptr;
  REQUIRE(ss_perm_from_values(w, 4, &y) == SS_OK);
  ss_perm* sorted = nullptr;
  REQUIRE(ss_west_pass(y, &sorted) == SS_OK);
  CHECK(values(sorted) == std::vector<int>{1, 2, 3, 4});
  ss_perm_free(sorted);
  ss_perm_free(y);
}

TEST_CASE("error codes and messages")
{
  ss_perm* x = nullptr;
  CHECK(ss_perm_parse("1 2 2", &x) == SS_ERR_NOT_A_BIJECTION);
  CHECK(x == nullptr);
  CHECK(std::string(ss_last_error_message()).size() > 0);
  CHECK(ss_perm_parse("1 q", &x) == SS_ERR_MALFORMED_TOKEN);
  CHECK(ss_perm_parse(nullptr, &x) == SS_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ss_status_name(SS_ERR_OVERFLOW)) == "Overflow");
  CHECK(std::string(ss_status_name(SS_OK)) == "Ok");

  REQUIRE(ss_perm_parse("1 2 3", &x) == SS_OK);
  ss_perm* out = nullptr;
  CHECK(ss_machine_run(x, "132", "132", &out) == SS_ERR_DEGENERATE_PAIR);
  ss_text* t = nullptr;
  CHECK(ss_rotem_map(x, &t) == SS_ERR_NOT_123_AVOIDER);
  CHECK(ss_west_map(x, SS_WEST_123_TO_132, &out) == SS_ERR_SOURCE_NOT_AVOIDER);
  ss_perm_free(x);

  ss_context* ctx = nullptr;
  REQUIRE(ss_context_new(&ctx) == SS_OK);
  CHECK(ss_context_set_workers(ctx, 0) == SS_ERR_INVALID_ARGUMENT);
  uint64_t count = 0;
  CHECK(ss_count_sortable(ctx, "132", "321", 13, &count) == SS_ERR_LENGTH_TOO_LARGE);
  CHECK(ss_render_sequences("schroder", 60, SS_FORMAT_JSON, &t) == SS_ERR_OVERFLOW);
  CHECK(ss_render_sequences("nope", 5, SS_FORMAT_JSON, &t) == SS_ERR_INVALID_ARGUMENT);
  ss_context_free(ctx);
  ss_perm_free(nullptr);
  ss_text_free(nullptr);
}

TEST_CASE("bijections")
{
  ss_perm* x = nullptr;
  REQUIRE(ss_perm_parse("4 5 2 3 1", &x) == SS_OK);
  ss_text* sig = nullptr;
  REQUIRE(ss_signature(x, "132", &sig) == SS_OK);
  CHECK(take(sig) == "4.4.3.3.2");
  ss_perm* y = nullptr;
  REQUIRE(ss_west_map(x, SS_WEST_132_TO_123, &y) == SS_OK);
  ss_text* yt = nullptr;
  REQUIRE(ss_perm_to_text(y, &yt) == SS_OK);
  CHECK(take(yt) == "4 2 1 5 3");
  ss_perm_free(y);
  ss_perm_free(x);

  REQUIRE(ss_perm_parse("8 11 6 10 4 9 7 5 3 1 2", &x) == SS_OK);
  ss_text* word = nullptr;
  REQUIRE(ss_rotem_map(x, &word) == SS_OK);
  CHECK(take(word) == "uduuduududdudduuudddud");
  int has = -1;
  REQUIRE(ss_contains(x, "132-star", &has) == SS_OK);
  CHECK(has == 0);
  REQUIRE(ss_contains(x, "123,21", &has) == SS_OK);
  CHECK(has == 1);
  ss_perm_free(x);
}

TEST_CASE("counting, caching and rendering")
{
  const auto dir = std::filesystem::temp_directory_path() / ("stacksort-capi-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  ss_context* ctx = nullptr;
  REQUIRE(ss_context_new(&ctx) == SS_OK);
  REQUIRE(ss_context_set_workers(ctx, 4) == SS_OK);
  REQUIRE(ss_context_set_cache_dir(ctx, dir.string().c_str()) == SS_OK);

  uint64_t count = 0;
  REQUIRE(ss_count_sortable(ctx, "132", "321", 8, &count) == SS_OK);
  CHECK(count == 606);
  CHECK(!std::filesystem::is_empty(dir));
  REQUIRE(ss_count_sortable(ctx, "132", "321", 8, &count) == SS_OK);
  CHECK(count == 606);
  CHECK(std::string(ss_context_warnings(ctx)).empty());

  ss_text* t = nullptr;
  REQUIRE(ss_render_enumeration(ctx, "132", "321", 8, 0, SS_FORMAT_CSV, &t) == SS_OK);
  CHECK(take(t) == "sigma,tau,n,count\n132,321,8,606\n");

  int pass = -1;
  REQUIRE(ss_render_verify(ctx, "characterization", 5, SS_FORMAT_JSON, &pass, &t) == SS_OK);
  CHECK(pass == 1);
  CHECK(take(t).find("\"status\": \"pass\"") != std::string::npos);

  int agree = -1;
  REQUIRE(ss_render_conjecture(ctx, 3, SS_FORMAT_TEXT, &agree, &t) == SS_OK);
  CHECK(agree == 1);
  ss_text_free(t);

  ss_context_free(ctx);
  std::filesystem::remove_all(dir);
}
