#pragma once

// Grid decomposition of 123-avoiders, the Rotem map onto Dyck paths, and
// factor avoidance on Dyck words.

#include "perm_core.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

inline constexpr int kDefaultSemilengthCap = 14;

// Word over {u, d}, balanced and never below zero.
class DyckPath {
public:
  DyckPath() = default;

  // Throws InvalidArgument if the word is not a Dyck word over lowercase u/d.
  explicit DyckPath(std::string word);

  const std::string& word() const noexcept { return word_; }
  int semilength() const noexcept { return static_cast<int>(word_.size() / 2); }

  // Run-length form with exponents, e.g. "udu^2d".
  std::string compressed() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
  std::string word_;
};

// Cells C_{i,j} = H_i intersected with B_j, where H_i holds the values strictly
// between the ltr minima m_i and m_{i-1} (m_0 = infinity) and B_j holds the
// entries strictly after m_j and before m_{j+1}.
struct GridDecomposition {
  std::vector<LtrMinimum> minima;
  std::vector<std::vector<Value>> vertical_strips;
  std::vector<int> occupancy;  // k*k, row-major, 0-based (i-1, j-1)

  int strips() const noexcept { return static_cast<int>(minima.size()); }
  int cell(int i, int j) const;  // 1-based
  int max_occupancy() const;
};

GridDecomposition grid_cells(const Permutation& x);

// Every cell holds at most one entry. Throws Not123Avoider outside Av(123).
bool cell_capacity_ok(const Permutation& x);

// b_1 = n, non-increasing, b_j >= n+1-j.
class BSequence {
public:
  // Throws InvalidBSequence when the invariants fail.
  explicit BSequence(std::vector<int> b);

  const std::vector<int>& values() const noexcept { return b_; }
  int size() const noexcept { return static_cast<int>(b_.size()); }

  friend bool operator==(const BSequence&, const BSequence&) = default;

private:
  std::vector<int> b_;
};

BSequence rotem_b_sequence(const Permutation& x);

// One u per entry followed by b_i - b_{i+1} d's, with b_{n+1} = 0.
DyckPath b_to_dyck(const BSequence& b);

DyckPath rotem_map(const Permutation& x);

// Plain substring test; the empty factor is always contained.
bool contains_factor(const DyckPath& path, std::string_view factor);

// All Dyck paths of the given semilength, in lexicographic order (u < d).
void for_each_dyck_path(int semilength, const std::function<void(const DyckPath&)>& visit,
                        int semilength_cap = kDefaultSemilengthCap);

std::uint64_t count_dyck_avoiding(int semilength, std::string_view factor,
                                  int semilength_cap = kDefaultSemilengthCap);

} // namespace stacksort
