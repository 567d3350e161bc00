#include "cache.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace stacksort;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir()
  {
    path = fs::temp_directory_path() / ("stacksort-cache-test-" + std::to_string(::getpid()));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p)
{
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE("store then load round-trips")
{
  TempDir dir;
  ResultCache cache(dir.path);
  const auto result = enumerate_machine(5, Machine::parse("132", "321"));
  const CacheKey key{"132", "321", 5, true};
  CHECK_FALSE(cache.load(key).has_value());
  cache.store(key, result);
  const auto loaded = cache.load(key);
  REQUIRE(loaded.has_value());
  CHECK(*loaded == result);

  const CacheKey counts_only{"132", "321", 9, false};
  EnumerationOptions drop;
  drop.keep_witnesses = false;
  const auto big = enumerate_machine(9, Machine::parse("132", "321"), drop);
  cache.store(counts_only, big);
  CHECK(*cache.load(counts_only) == big);
  CHECK(cache.path_for(key) != cache.path_for(counts_only));
  CHECK(cache.path_for(key).filename().string().size() == 16 + 5);
}

TEST_CASE("version mismatch is a miss")
{
  TempDir dir;
  const CacheKey key{"123", "321", 4, true};
  ResultCache(dir.path, "v1").store(key, enumerate_machine(4, Machine::parse("123", "321")));
  CHECK(ResultCache(dir.path, "v1").load(key).has_value());
  CHECK_FALSE(ResultCache(dir.path, "v2").load(key).has_value());
}

TEST_CASE("corrupt entries are a miss with a warning")
{
  TempDir dir;
  std::ostringstream warnings;
  ResultCache cache(dir.path, "v1", &warnings);
  const CacheKey key{"132", "321", 4, true};
  cache.store(key, enumerate_machine(4, Machine::parse("132", "321")));

  const fs::path file = cache.path_for(key);
  std::string text = slurp(file);
  const auto at = text.find("\"count\": 10");
  REQUIRE(at != std::string::npos);
  text.replace(at, 11, "\"count\": 11");
  std::ofstream(file) << text;
  CHECK_FALSE(cache.load(key).has_value());
  CHECK(warnings.str().find("checksum") != std::string::npos);

  warnings.str("");
  std::ofstream(file) << "{ not json";
  CHECK_FALSE(cache.load(key).has_value());
  CHECK_FALSE(warnings.str().empty());
}

TEST_CASE("unwritable directory raises Io")
{
  TempDir dir;
  fs::create_directories(dir.path);
  std::ofstream(dir.path / "blocker") << "x";
  ResultCache cache(dir.path / "blocker" / "sub");
  try {
    cache.store(CacheKey{"321", "", 2, true}, enumerate_machine(2, Machine::parse("321")));
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}
