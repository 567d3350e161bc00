#include "perm_core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

namespace stacksort {

namespace {

void check_length(int n, int length_cap)
{
  if (n < 0)
    throw Error(ErrorCode::InvalidArgument, "length must be non-negative");
  if (n > length_cap) {
    throw Error(ErrorCode::LengthTooLarge,
                "length " + std::to_string(n) + " exceeds the configured cap of " +
                    std::to_string(length_cap));
  }
}

std::string join_digits(std::span<const Value> values)
{
  const bool compact = std::all_of(values.begin(), values.end(), [](Value v) { return v < 10; });
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!compact && i > 0)
      out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

// Backtracking occurrence search. Occurrence indices are chosen left to right;
// each new index must agree in relative order with every index chosen so far,
// so a partial assignment that is not order-isomorphic to the corresponding
// pattern prefix is abandoned immediately.
class OccurrenceSearch {
public:
  OccurrenceSearch(std::span<const Value> text, std::span<const Value> pattern, Anchor anchor)
      : text_(text), pattern_(pattern), anchor_(anchor),
        adjacent_to_previous_(pattern.size(), false), chosen_(pattern.size(), 0)
  {
  }

  void require_adjacent_positions(int i) { adjacent_to_previous_[static_cast<std::size_t>(i)] = true; }

  // Pattern indices a, b (0-based) with pattern[b] = pattern[a] + 1.
  void require_adjacent_values(int a, int b) { value_pairs_.emplace_back(a, b); }

  bool run()
  {
    const int m = static_cast<int>(pattern_.size());
    const int n = static_cast<int>(text_.size());
    if (m == 0)
      return true;
    if (m > n)
      return false;
    return search(0, 0);
  }

private:
  bool search(int depth, int start)
  {
    const int m = static_cast<int>(pattern_.size());
    const int n = static_cast<int>(text_.size());
    if (depth == m)
      return true;

    int lo = start;
    int hi = n - (m - depth);
    if (depth == 0 && anchor_ == Anchor::First)
      hi = 0;
    if (depth == m - 1 && anchor_ == Anchor::Last)
      lo = std::max(lo, n - 1);
    if (depth > 0 && adjacent_to_previous_[static_cast<std::size_t>(depth)]) {
      const int forced = chosen_[static_cast<std::size_t>(depth - 1)] + 1;
      lo = std::max(lo, forced);
      hi = std::min(hi, forced);
    }

    for (int idx = lo; idx <= hi; ++idx) {
      if (!consistent(depth, idx))
        continue;
      chosen_[static_cast<std::size_t>(depth)] = idx;
      if (search(depth + 1, idx + 1))
        return true;
    }
    return false;
  }

  bool consistent(int depth, int idx) const
  {
    const Value v = text_[static_cast<std::size_t>(idx)];
    const Value p = pattern_[static_cast<std::size_t>(depth)];
    for (int e = 0; e < depth; ++e) {
      const Value ve = text_[static_cast<std::size_t>(chosen_[static_cast<std::size_t>(e)])];
      const Value pe = pattern_[static_cast<std::size_t>(e)];
      if ((ve < v) != (pe < p))
        return false;
    }
    for (const auto& [a, b] : value_pairs_) {
      if (std::max(a, b) != depth)
        continue;
      const Value va = (a == depth) ? v : text_[static_cast<std::size_t>(chosen_[static_cast<std::size_t>(a)])];
      const Value vb = (b == depth) ? v : text_[static_cast<std::size_t>(chosen_[static_cast<std::size_t>(b)])];
      if (vb != va + 1)
        return false;
    }
    return true;
  }

  std::span<const Value> text_;
  std::span<const Value> pattern_;
  Anchor anchor_;
  std::vector<bool> adjacent_to_previous_;
  std::vector<std::pair<int, int>> value_pairs_;
  std::vector<int> chosen_;
};

} // namespace

Permutation::Permutation(std::vector<Value> entries) : entries_(std::move(entries))
{
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const Value v : entries_) {
    if (v < 1 || v > n) {
      throw Error(ErrorCode::NotABijection,
                  "value " + std::to_string(v) + " is outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::NotABijection, "value " + std::to_string(v) + " appears twice");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n)
{
  std::vector<Value> e(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(Trusted{}, std::move(e));
}

Permutation Permutation::decreasing(int n)
{
  std::vector<Value> e(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i)
    e[static_cast<std::size_t>(i)] = n - i;
  return Permutation(Trusted{}, std::move(e));
}

Permutation Permutation::standardize(std::span<const Value> values)
{
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (values[order[i]] == values[order[i - 1]])
      throw Error(ErrorCode::NotABijection, "cannot standardize a sequence with repeated values");
  }
  std::vector<Value> e(values.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    e[order[rank]] = static_cast<Value>(rank + 1);
  return Permutation(Trusted{}, std::move(e));
}

bool Permutation::is_identity() const noexcept
{
  for (int i = 0; i < size(); ++i) {
    if (entries_[static_cast<std::size_t>(i)] != i + 1)
      return false;
  }
  return true;
}

std::string Permutation::to_string() const
{
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0)
      out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text)
{
  std::vector<Value> values;
  std::size_t i = 0;
  auto is_separator = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j]))
      ++j;
    const std::string_view token = text.substr(i, j - i);
    Value v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.front() == '-' ||
        token.front() == '+') {
      throw Error(ErrorCode::MalformedToken, "malformed token '" + std::string(token) + "'");
    }
    values.push_back(v);
    i = j;
  }
  return Permutation(std::move(values));
}

int index_of(const Permutation& x, Value v)
{
  if (v < 1 || v > x.size()) {
    throw Error(ErrorCode::ValueOutOfRange,
                "value " + std::to_string(v) + " is outside 1.." + std::to_string(x.size()));
  }
  const auto e = x.entries();
  return static_cast<int>(std::find(e.begin(), e.end(), v) - e.begin()) + 1;
}

std::vector<LtrMinimum> ltr_minima(const Permutation& x)
{
  std::vector<LtrMinimum> out;
  for (int i = 1; i <= x.size(); ++i) {
    if (out.empty() || x.at(i) < out.back().value)
      out.push_back({i, x.at(i)});
  }
  return out;
}

std::vector<Value> shift(const Permutation& x, int k)
{
  std::vector<Value> out(x.begin(), x.end());
  for (Value& v : out)
    v += k;
  return out;
}

Permutation smallest_k(const Permutation& x, int k)
{
  if (k < 0 || k > x.size()) {
    throw Error(ErrorCode::KOutOfRange,
                "k = " + std::to_string(k) + " is outside 0.." + std::to_string(x.size()));
  }
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(k));
  for (const Value v : x) {
    if (v <= k)
      out.push_back(v);
  }
  return PermutationBuilder::adopt(std::move(out));
}

Permutation swap12(const Permutation& x)
{
  if (x.size() < 2)
    throw Error(ErrorCode::TooShort, "swap12 needs a permutation of length at least 2");
  std::vector<Value> out(x.begin(), x.end());
  for (Value& v : out) {
    if (v == 1)
      v = 2;
    else if (v == 2)
      v = 1;
  }
  return PermutationBuilder::adopt(std::move(out));
}

Permutation insert_one_at(const Permutation& x, int site)
{
  if (site < 1 || site > x.size() + 1) {
    throw Error(ErrorCode::SiteOutOfRange,
                "site " + std::to_string(site) + " is outside 1.." + std::to_string(x.size() + 1));
  }
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(x.size()) + 1);
  for (int i = 1; i <= x.size(); ++i) {
    if (i == site)
      out.push_back(1);
    out.push_back(x.at(i) + 1);
  }
  if (site == x.size() + 1)
    out.push_back(1);
  return PermutationBuilder::adopt(std::move(out));
}

Permutation insert_max_at(const Permutation& x, int site)
{
  if (site < 1 || site > x.size() + 1) {
    throw Error(ErrorCode::SiteOutOfRange,
                "site " + std::to_string(site) + " is outside 1.." + std::to_string(x.size() + 1));
  }
  std::vector<Value> out(x.begin(), x.end());
  out.insert(out.begin() + (site - 1), x.size() + 1);
  return PermutationBuilder::adopt(std::move(out));
}

Permutation remove_one(const Permutation& x)
{
  if (x.empty())
    throw Error(ErrorCode::TooShort, "cannot remove 1 from the empty permutation");
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(x.size()) - 1);
  for (const Value v : x) {
    if (v != 1)
      out.push_back(v - 1);
  }
  return PermutationBuilder::adopt(std::move(out));
}

ClassicalPattern::ClassicalPattern(Permutation base) : base_(std::move(base))
{
  if (base_.empty())
    throw Error(ErrorCode::InvalidArgument, "a pattern must have length at least 1");
}

ClassicalPattern ClassicalPattern::parse(std::string_view digits)
{
  if (digits.empty())
    throw Error(ErrorCode::InvalidArgument, "empty pattern");
  std::vector<Value> values;
  for (const char c : digits) {
    if (c < '1' || c > '9')
      throw Error(ErrorCode::MalformedToken, "pattern '" + std::string(digits) + "' is not a digit string");
    values.push_back(c - '0');
  }
  return ClassicalPattern(Permutation(std::move(values)));
}

std::string ClassicalPattern::name() const { return join_digits(base_.entries()); }

BivincularPattern::BivincularPattern(Permutation base, std::vector<int> adjacent_positions,
                                     std::vector<int> adjacent_values, std::string name)
    : base_(std::move(base)), adjacent_positions_(std::move(adjacent_positions)),
      adjacent_values_(std::move(adjacent_values)), name_(std::move(name))
{
  const int m = base_.size();
  if (m == 0)
    throw Error(ErrorCode::InvalidArgument, "a pattern must have length at least 1");
  auto check = [m](const std::vector<int>& set, const char* what) {
    for (const int i : set) {
      if (i < 1 || i > m - 1) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string(what) + " constraint " + std::to_string(i) + " is outside 1.." +
                        std::to_string(m - 1));
      }
    }
  };
  check(adjacent_positions_, "position");
  check(adjacent_values_, "value");
  std::sort(adjacent_positions_.begin(), adjacent_positions_.end());
  adjacent_positions_.erase(std::unique(adjacent_positions_.begin(), adjacent_positions_.end()),
                            adjacent_positions_.end());
  std::sort(adjacent_values_.begin(), adjacent_values_.end());
  adjacent_values_.erase(std::unique(adjacent_values_.begin(), adjacent_values_.end()),
                         adjacent_values_.end());
  if (name_.empty()) {
    name_ = join_digits(base_.entries());
    auto list = [](const std::vector<int>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
      return s;
    };
    if (!adjacent_positions_.empty() || !adjacent_values_.empty())
      name_ += "[pos:" + list(adjacent_positions_) + ";val:" + list(adjacent_values_) + "]";
  }
}

BivincularPattern BivincularPattern::star_123()
{
  return BivincularPattern(Permutation({1, 2, 3}), {2}, {2}, "123-star");
}

BivincularPattern BivincularPattern::star_132()
{
  return BivincularPattern(Permutation({1, 3, 2}), {2}, {2}, "132-star");
}

BivincularPattern BivincularPattern::parse(std::string_view keyword)
{
  if (keyword == "123-star" || keyword == "123*")
    return star_123();
  if (keyword == "132-star" || keyword == "132*")
    return star_132();
  throw Error(ErrorCode::MalformedToken,
              "unknown bivincular pattern '" + std::string(keyword) + "' (expected 123-star or 132-star)");
}

std::string PatternSet::name() const
{
  std::string out;
  for (const auto& p : classical)
    out += (out.empty() ? "" : ",") + p.name();
  for (const auto& p : bivincular)
    out += (out.empty() ? "" : ",") + p.name();
  return out;
}

PatternSet PatternSet::parse(std::string_view text)
{
  PatternSet set;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos)
      j = text.size();
    const std::string_view token = text.substr(i, j - i);
    if (token.empty())
      throw Error(ErrorCode::MalformedToken, "empty pattern in list '" + std::string(text) + "'");
    if (token.find("star") != std::string_view::npos || token.back() == '*')
      set.bivincular.push_back(BivincularPattern::parse(token));
    else
      set.classical.push_back(ClassicalPattern::parse(token));
    i = j + 1;
  }
  return set;
}

bool occurs(std::span<const Value> text, std::span<const Value> pattern, Anchor anchor)
{
  return OccurrenceSearch(text, pattern, anchor).run();
}

bool occurs(std::span<const Value> text, const BivincularPattern& pattern, Anchor anchor)
{
  const auto base = pattern.base().entries();
  OccurrenceSearch search(text, base, anchor);
  for (const int i : pattern.adjacent_positions())
    search.require_adjacent_positions(i);  // c(i+1) = c(i)+1, i.e. 0-based index i follows i-1
  for (const int v : pattern.adjacent_values()) {
    const int a = static_cast<int>(std::find(base.begin(), base.end(), v) - base.begin());
    const int b = static_cast<int>(std::find(base.begin(), base.end(), v + 1) - base.begin());
    search.require_adjacent_values(a, b);
  }
  return search.run();
}

bool occurs_any(std::span<const Value> text, const PatternSet& patterns, Anchor anchor)
{
  for (const auto& p : patterns.classical) {
    if (occurs(text, p.base().entries(), anchor))
      return true;
  }
  for (const auto& p : patterns.bivincular) {
    if (occurs(text, p, anchor))
      return true;
  }
  return false;
}

bool contains_classical(const Permutation& x, const ClassicalPattern& y)
{
  return occurs(x.entries(), y.base().entries());
}

bool contains_bivincular(const Permutation& x, const BivincularPattern& p)
{
  return occurs(x.entries(), p);
}

bool avoids(const Permutation& x, const PatternSet& patterns)
{
  return !occurs_any(x.entries(), patterns);
}

void for_each_avoider(int n, const PatternSet& patterns,
                      const std::function<void(const Permutation&)>& visit, int length_cap)
{
  check_length(n, length_cap);

  // Classical patterns prune prefixes: an occurrence inside a prefix survives
  // in every completion. Bivincular constraints are checked on complete
  // permutations only.
  PatternSet classical_only;
  classical_only.classical = patterns.classical;
  PatternSet bivincular_only;
  bivincular_only.bivincular = patterns.bivincular;

  std::vector<Value> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  std::function<void()> extend = [&]() {
    if (static_cast<int>(prefix.size()) == n) {
      if (bivincular_only.empty() || !occurs_any(prefix, bivincular_only))
        visit(PermutationBuilder::adopt(prefix));
      return;
    }
    for (Value v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)])
        continue;
      prefix.push_back(v);
      if (!occurs_any(prefix, classical_only, Anchor::Last)) {
        used[static_cast<std::size_t>(v)] = true;
        extend();
        used[static_cast<std::size_t>(v)] = false;
      }
      prefix.pop_back();
    }
  };
  extend();
}

std::vector<Permutation> avoiders(int n, const PatternSet& patterns, int length_cap)
{
  std::vector<Permutation> out;
  for_each_avoider(n, patterns, [&](const Permutation& x) { out.push_back(x); }, length_cap);
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit, int length_cap)
{
  check_length(n, length_cap);
  std::vector<Value> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  do {
    visit(PermutationBuilder::adopt(e));
  } while (std::next_permutation(e.begin(), e.end()));
}

} // namespace stacksort
