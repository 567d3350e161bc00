#include "dyck_paths.hpp"

#include <algorithm>

namespace stacksort {

namespace {

const PatternSet& set_123()
{
  static const PatternSet s = PatternSet::parse("123");
  return s;
}

void require_123_avoider(const Permutation& x)
{
  if (!avoids(x, set_123()))
    throw Error(ErrorCode::Not123Avoider, x.to_string() + " contains 123");
}

} // namespace

DyckPath::DyckPath(std::string word) : word_(std::move(word))
{
  int height = 0;
  for (const char c : word_) {
    if (c == 'u')
      ++height;
    else if (c == 'd')
      --height;
    else
      throw Error(ErrorCode::InvalidArgument, "Dyck words use only 'u' and 'd'");
    if (height < 0)
      throw Error(ErrorCode::InvalidArgument, "Dyck word '" + word_ + "' falls below zero");
  }
  if (height != 0)
    throw Error(ErrorCode::InvalidArgument, "Dyck word '" + word_ + "' is not balanced");
}

std::string DyckPath::compressed() const
{
  std::string out;
  std::size_t i = 0;
  while (i < word_.size()) {
    std::size_t j = i;
    while (j < word_.size() && word_[j] == word_[i])
      ++j;
    out += word_[i];
    if (j - i > 1)
      out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

int GridDecomposition::cell(int i, int j) const
{
  const int k = strips();
  if (i < 1 || i > k || j < 1 || j > k)
    throw Error(ErrorCode::InvalidArgument, "cell index outside the grid");
  return occupancy[static_cast<std::size_t>((i - 1) * k + (j - 1))];
}

int GridDecomposition::max_occupancy() const
{
  return occupancy.empty() ? 0 : *std::max_element(occupancy.begin(), occupancy.end());
}

GridDecomposition grid_cells(const Permutation& x)
{
  GridDecomposition grid;
  grid.minima = ltr_minima(x);
  const int k = grid.strips();
  grid.vertical_strips.resize(static_cast<std::size_t>(k));
  grid.occupancy.assign(static_cast<std::size_t>(k * k), 0);

  int strip = -1;
  for (int pos = 1; pos <= x.size(); ++pos) {
    if (strip + 1 < k && grid.minima[static_cast<std::size_t>(strip + 1)].position == pos) {
      ++strip;
      continue;
    }
    const Value v = x.at(pos);
    grid.vertical_strips[static_cast<std::size_t>(strip)].push_back(v);
    // Horizontal strip: the first i (1-based) with m_i < v; minima decrease.
    int row = 0;
    while (grid.minima[static_cast<std::size_t>(row)].value > v)
      ++row;
    ++grid.occupancy[static_cast<std::size_t>(row * k + strip)];
  }
  return grid;
}

bool cell_capacity_ok(const Permutation& x)
{
  require_123_avoider(x);
  return grid_cells(x).max_occupancy() <= 1;
}

BSequence::BSequence(std::vector<int> b) : b_(std::move(b))
{
  const int n = size();
  if (n == 0)
    return;
  if (b_.front() != n)
    throw Error(ErrorCode::InvalidBSequence, "b_1 must equal the length " + std::to_string(n));
  for (int j = 1; j <= n; ++j) {
    const int bj = b_[static_cast<std::size_t>(j - 1)];
    if (j > 1 && bj > b_[static_cast<std::size_t>(j - 2)])
      throw Error(ErrorCode::InvalidBSequence, "b must be non-increasing (fails at index " + std::to_string(j) + ")");
    if (bj < n + 1 - j)
      throw Error(ErrorCode::InvalidBSequence, "b_" + std::to_string(j) + " = " + std::to_string(bj) +
                                                   " is below " + std::to_string(n + 1 - j));
  }
}

BSequence rotem_b_sequence(const Permutation& x)
{
  require_123_avoider(x);
  const int n = x.size();
  std::vector<int> b;
  b.reserve(static_cast<std::size_t>(n));
  Value running_min = n + 1;
  for (int i = 1; i <= n; ++i) {
    const Value v = x.at(i);
    const bool is_min = v < running_min;
    running_min = std::min(running_min, v);
    if (i == 1)
      b.push_back(n);
    else if (is_min)
      b.push_back(b.back());
    else
      b.push_back(v - 1);
  }
  return BSequence(std::move(b));
}

DyckPath b_to_dyck(const BSequence& b)
{
  const auto& v = b.values();
  std::string word;
  word.reserve(2 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int next = (i + 1 < v.size()) ? v[i + 1] : 0;
    word += 'u';
    word.append(static_cast<std::size_t>(v[i] - next), 'd');
  }
  return DyckPath(std::move(word));
}

DyckPath rotem_map(const Permutation& x) { return b_to_dyck(rotem_b_sequence(x)); }

bool contains_factor(const DyckPath& path, std::string_view factor)
{
  return path.word().find(factor) != std::string::npos;
}

void for_each_dyck_path(int semilength, const std::function<void(const DyckPath&)>& visit, int semilength_cap)
{
  if (semilength < 0)
    throw Error(ErrorCode::InvalidArgument, "semilength must be non-negative");
  if (semilength > semilength_cap) {
    throw Error(ErrorCode::SemilengthTooLarge, "semilength " + std::to_string(semilength) +
                                                   " exceeds the configured cap of " +
                                                   std::to_string(semilength_cap));
  }
  std::string word;
  word.reserve(static_cast<std::size_t>(2 * semilength));
  auto extend = [&](auto&& self, int ups, int downs) -> void {
    if (ups == semilength && downs == semilength) {
      visit(DyckPath(word));
      return;
    }
    if (ups < semilength) {
      word.push_back('u');
      self(self, ups + 1, downs);
      word.pop_back();
    }
    if (downs < ups) {
      word.push_back('d');
      self(self, ups, downs + 1);
      word.pop_back();
    }
  };
  extend(extend, 0, 0);
}

std::uint64_t count_dyck_avoiding(int semilength, std::string_view factor, int semilength_cap)
{
  std::uint64_t count = 0;
  for_each_dyck_path(semilength, [&](const DyckPath& p) {
    if (!contains_factor(p, factor))
      ++count;
  }, semilength_cap);
  return count;
}

} // namespace stacksort
