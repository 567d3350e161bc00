#pragma once

// Active sites, signatures, West's signature-matching bijection between
// Av_n(132) and Av_n(123), and the plateau criterion on signatures.

#include "perm_core.hpp"

#include <string>
#include <vector>

namespace stacksort {

// Word of active-site counts; entry j counts the active sites of
// smallest_k(x, m+1-j) for a permutation x of length m.
class Signature {
public:
  Signature() = default;
  explicit Signature(std::vector<int> word);

  // Dot-separated form, e.g. "4.4.3.3.2".
  static Signature parse(std::string_view text);

  const std::vector<int>& word() const noexcept { return word_; }
  int size() const noexcept { return static_cast<int>(word_.size()); }
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

private:
  std::vector<int> word_;
};

// Sites i in 1..n+1 such that insert_max_at(x, i) avoids y.
std::vector<int> active_sites(const Permutation& x, const ClassicalPattern& y);

Signature signature(const Permutation& x, const ClassicalPattern& y);

// True iff some i has word_i = word_{i+1} <= word_{i+2}.
bool has_plateau(const Signature& sig);

enum class WestDirection { From132To123, From123To132 };

// Sends an avoider of the source pattern to the unique avoider of the target
// pattern with the same signature. Lookups go through a per-(n, direction)
// index built on first use and shared read-only afterwards.
Permutation west_map(const Permutation& x, WestDirection direction,
                     int length_cap = kDefaultLengthCap);

} // namespace stacksort
