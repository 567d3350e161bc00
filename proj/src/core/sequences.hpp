#pragma once

// Exact integer sequences: the g/f recurrences and series for the
// (132,321)-machine, the (123,321) closed form, and the reference sequences
// (Catalan, large Schroeder, binomial transform of Catalan, powers of two).

#include "errors.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

using BigInt = __int128;

inline constexpr int kSequenceCap = 60;

BigInt checked_add(BigInt a, BigInt b);
BigInt checked_sub(BigInt a, BigInt b);
BigInt checked_mul(BigInt a, BigInt b);

std::string to_decimal(BigInt v);
BigInt parse_decimal(std::string_view text);

struct SequenceTable {
  std::string name;
  int offset = 0;
  std::vector<BigInt> terms;

  int last_index() const noexcept { return offset + static_cast<int>(terms.size()) - 1; }
  bool has(int index) const noexcept { return index >= offset && index <= last_index(); }
  BigInt term(int index) const;
};

// g_0 = g_1 = 1; g_n + g_{n-1} - g_{n-2} = sum_{i<n} g_i g_{n-1-i}.
SequenceTable g_sequence(int n_max);

// f_n = g_{n-1} - g_{n-2}, offset 2.
SequenceTable f_sequence(int n_max);

// Coefficients 1, -2, -5, -2, 1 of the radicand.
std::vector<BigInt> radicand();

// Power series R with R^2 = radicand and R(0) = 1, through z^terms-1.
std::vector<BigInt> radicand_sqrt(int terms);

// Coefficients of ((1 + z - z^2) - R(z)) / (2z), offset 0.
SequenceTable gf_coefficients(int n_max);

SequenceTable catalan(int n_max);
SequenceTable schroder_large(int n_max);
SequenceTable binomial_transform_catalan(int n_max);

// 2^{n-1} for n = 1..n_max, offset 1.
SequenceTable powers_2_shifted(int n_max);

// |Sort_n(123,321)|: 2^{n-1} for n <= 3, 7 * 2^{n-4} for n >= 4.
BigInt sort_123_321_closed(int n);

SequenceTable sort_123_321_table(int n_max);

} // namespace stacksort
