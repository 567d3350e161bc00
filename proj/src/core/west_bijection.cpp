#include "west_bijection.hpp"

#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace stacksort {

namespace {

const ClassicalPattern& pattern_123()
{
  static const ClassicalPattern p = ClassicalPattern::parse("123");
  return p;
}

const ClassicalPattern& pattern_132()
{
  static const ClassicalPattern p = ClassicalPattern::parse("132");
  return p;
}

using SignatureIndex = std::map<Signature, Permutation>;

std::shared_ptr<const SignatureIndex> build_index(int n, const ClassicalPattern& target)
{
  auto index = std::make_shared<SignatureIndex>();
  PatternSet set;
  set.classical.push_back(target);
  for_each_avoider(n, set, [&](const Permutation& y) {
    auto [it, inserted] = index->emplace(signature(y, target), y);
    if (!inserted) {
      throw Error(ErrorCode::Internal, "signature " + it->first.to_string() + " is shared by " +
                                           it->second.to_string() + " and " + y.to_string());
    }
  });
  return index;
}

std::shared_ptr<const SignatureIndex> index_for(int n, WestDirection direction)
{
  static std::mutex mutex;
  static std::map<std::pair<int, WestDirection>, std::shared_ptr<const SignatureIndex>> cache;

  const std::lock_guard lock(mutex);
  auto& slot = cache[{n, direction}];
  if (!slot) {
    const auto& target = direction == WestDirection::From132To123 ? pattern_123() : pattern_132();
    slot = build_index(n, target);
  }
  return slot;
}

} // namespace

Signature::Signature(std::vector<int> word) : word_(std::move(word))
{
  for (const int w : word_) {
    if (w < 1)
      throw Error(ErrorCode::InvalidArgument, "signature entries must be positive");
  }
}

Signature Signature::parse(std::string_view text)
{
  std::vector<int> word;
  if (text.empty())
    return Signature();
  std::size_t i = 0;
  while (true) {
    std::size_t j = text.find('.', i);
    if (j == std::string_view::npos)
      j = text.size();
    const std::string_view token = text.substr(i, j - i);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw Error(ErrorCode::MalformedToken, "malformed signature entry '" + std::string(token) + "'");
    word.push_back(v);
    if (j == text.size())
      break;
    i = j + 1;
  }
  return Signature(std::move(word));
}

std::string Signature::to_string() const
{
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i > 0)
      out += '.';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::vector<int> active_sites(const Permutation& x, const ClassicalPattern& y)
{
  std::vector<int> sites;
  for (int i = 1; i <= x.size() + 1; ++i) {
    if (!contains_classical(insert_max_at(x, i), y))
      sites.push_back(i);
  }
  return sites;
}

Signature signature(const Permutation& x, const ClassicalPattern& y)
{
  const int m = x.size();
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j)
    word.push_back(static_cast<int>(active_sites(smallest_k(x, m + 1 - j), y).size()));
  return Signature(std::move(word));
}

bool has_plateau(const Signature& sig)
{
  const auto& w = sig.word();
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    if (w[i] == w[i + 1] && w[i + 1] <= w[i + 2])
      return true;
  }
  return false;
}

Permutation west_map(const Permutation& x, WestDirection direction, int length_cap)
{
  if (x.size() > length_cap) {
    throw Error(ErrorCode::LengthTooLarge, "length " + std::to_string(x.size()) +
                                               " exceeds the configured cap of " + std::to_string(length_cap));
  }
  const auto& source = direction == WestDirection::From132To123 ? pattern_132() : pattern_123();
  if (contains_classical(x, source))
    throw Error(ErrorCode::SourceNotAvoider, x.to_string() + " contains " + source.name());

  const auto index = index_for(x.size(), direction);
  const Signature sig = signature(x, source);
  const auto it = index->find(sig);
  if (it == index->end())
    throw Error(ErrorCode::NoMatch, "no target avoider has signature " + sig.to_string());
  return it->second;
}

} // namespace stacksort
