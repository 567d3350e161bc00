#include "cache.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace stacksort {

namespace {

using Json = nlohmann::ordered_json;

std::string hex64(std::uint64_t v)
{
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json payload(const CacheKey& key, std::string_view version, const EnumerationResult& r)
{
  Json j;
  j["version"] = version;
  j["sigma"] = key.sigma;
  j["tau"] = key.tau;
  j["n"] = key.n;
  j["machine"] = r.machine;
  j["count"] = r.count;
  j["worker_partitions"] = r.worker_partitions;
  if (r.witnesses) {
    Json list = Json::array();
    for (const auto& x : *r.witnesses)
      list.push_back(x.to_string());
    j["witnesses"] = std::move(list);
  } else {
    j["witnesses"] = nullptr;
  }
  return j;
}

} // namespace

std::string CacheKey::canonical(std::string_view version) const
{
  return std::string(version) + "|" + sigma + "|" + tau + "|" + std::to_string(n) + "|" + (witnesses ? "w" : "c");
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ResultCache::ResultCache(std::filesystem::path directory, std::string version, std::ostream* warnings)
    : directory_(std::move(directory)), version_(std::move(version)), warnings_(warnings)
{
}

std::filesystem::path ResultCache::path_for(const CacheKey& key) const
{
  return directory_ / (hex64(fnv1a64(key.canonical(version_))) + ".json");
}

void ResultCache::warn(const std::string& message) const
{
  if (warnings_)
    *warnings_ << "warning: " << message << '\n';
}

std::optional<EnumerationResult> ResultCache::load(const CacheKey& key) const
{
  const auto path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();

  try {
    Json j = Json::parse(buffer.str());
    const std::string checksum = j.at("checksum").get<std::string>();
    j.erase("checksum");
    if (hex64(fnv1a64(j.dump())) != checksum)
      throw Error(ErrorCode::CorruptCacheEntry, "checksum mismatch");
    if (j.at("version").get<std::string>() != version_ || j.at("sigma").get<std::string>() != key.sigma ||
        j.at("tau").get<std::string>() != key.tau || j.at("n").get<int>() != key.n)
      return std::nullopt;

    EnumerationResult r;
    r.machine = j.at("machine").get<std::string>();
    r.n = key.n;
    r.count = j.at("count").get<std::uint64_t>();
    r.worker_partitions = j.at("worker_partitions").get<int>();
    const auto& w = j.at("witnesses");
    if (w.is_null()) {
      if (key.witnesses)
        return std::nullopt;
    } else {
      std::vector<Permutation> list;
      for (const auto& item : w)
        list.push_back(parse_permutation(item.get<std::string>()));
      if (list.size() != r.count)
        throw Error(ErrorCode::CorruptCacheEntry, "witness count mismatch");
      r.witnesses = std::move(list);
    }
    return r;
  } catch (const std::exception& e) {
    warn("ignoring corrupt cache entry " + path.string() + ": " + e.what());
    return std::nullopt;
  }
}

void ResultCache::store(const CacheKey& key, const EnumerationResult& result) const
{
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec)
    throw Error(ErrorCode::Io, "cannot create cache directory " + directory_.string() + ": " + ec.message());

  Json j = payload(key, version_, result);
  j["checksum"] = hex64(fnv1a64(j.dump()));

  const auto target = path_for(key);
  auto temp = target;
  static std::atomic<unsigned> sequence{0};
  temp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(sequence.fetch_add(1));
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error(ErrorCode::Io, "cannot write " + temp.string());
    out << j.dump(2) << '\n';
    if (!out)
      throw Error(ErrorCode::Io, "short write to " + temp.string());
  }
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw Error(ErrorCode::Io, "cannot rename cache entry into " + target.string());
  }
}

} // namespace stacksort
