#include "sequences.hpp"

#include <algorithm>

namespace stacksort {

namespace {

void check_cap(int n_max, int minimum = 0)
{
  if (n_max < minimum)
    throw Error(ErrorCode::InvalidArgument, "n_max must be at least " + std::to_string(minimum));
  if (n_max > kSequenceCap) {
    throw Error(ErrorCode::LengthTooLarge, "n_max " + std::to_string(n_max) + " exceeds the cap of " +
                                               std::to_string(kSequenceCap));
  }
}

[[noreturn]] void overflow(const char* what)
{
  throw Error(ErrorCode::Overflow, std::string("128-bit overflow in ") + what);
}

BigInt checked_div_exact(BigInt a, BigInt b, const char* what)
{
  if (a % b != 0)
    throw Error(ErrorCode::NonIntegerCoefficient, std::string("non-integer coefficient in ") + what);
  return a / b;
}

} // namespace

BigInt checked_add(BigInt a, BigInt b)
{
  BigInt r;
  if (__builtin_add_overflow(a, b, &r))
    overflow("addition");
  return r;
}

BigInt checked_sub(BigInt a, BigInt b)
{
  BigInt r;
  if (__builtin_sub_overflow(a, b, &r))
    overflow("subtraction");
  return r;
}

BigInt checked_mul(BigInt a, BigInt b)
{
  BigInt r;
  if (__builtin_mul_overflow(a, b, &r))
    overflow("multiplication");
  return r;
}

std::string to_decimal(BigInt v)
{
  if (v == 0)
    return "0";
  const bool negative = v < 0;
  std::string digits;
  while (v != 0) {
    const int d = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
    v /= 10;
  }
  if (negative)
    digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt parse_decimal(std::string_view text)
{
  if (text.empty())
    throw Error(ErrorCode::MalformedToken, "empty decimal");
  const bool negative = text.front() == '-';
  if (negative)
    text.remove_prefix(1);
  if (text.empty())
    throw Error(ErrorCode::MalformedToken, "malformed decimal");
  BigInt v = 0;
  for (const char c : text) {
    if (c < '0' || c > '9')
      throw Error(ErrorCode::MalformedToken, "malformed decimal '" + std::string(text) + "'");
    v = checked_add(checked_mul(v, 10), negative ? -(c - '0') : (c - '0'));
  }
  return v;
}

BigInt SequenceTable::term(int index) const
{
  if (!has(index)) {
    throw Error(ErrorCode::InvalidArgument, name + " has no term at index " + std::to_string(index));
  }
  return terms[static_cast<std::size_t>(index - offset)];
}

SequenceTable g_sequence(int n_max)
{
  check_cap(n_max);
  SequenceTable t{"g", 0, {1}};
  auto& g = t.terms;
  for (int n = 1; n <= n_max; ++n) {
    if (n == 1) {
      g.push_back(1);
      continue;
    }
    BigInt conv = 0;
    for (int i = 0; i < n; ++i)
      conv = checked_add(conv, checked_mul(g[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(n - 1 - i)]));
    g.push_back(checked_add(checked_sub(conv, g[static_cast<std::size_t>(n - 1)]), g[static_cast<std::size_t>(n - 2)]));
  }
  return t;
}

SequenceTable f_sequence(int n_max)
{
  check_cap(n_max, 2);
  const SequenceTable g = g_sequence(n_max);
  SequenceTable t{"f", 2, {}};
  for (int n = 2; n <= n_max; ++n)
    t.terms.push_back(checked_sub(g.term(n - 1), g.term(n - 2)));
  return t;
}

std::vector<BigInt> radicand() { return {1, -2, -5, -2, 1}; }

std::vector<BigInt> radicand_sqrt(int terms)
{
  if (terms < 1)
    return {};
  const auto p = radicand();
  std::vector<BigInt> r{1};
  for (int k = 1; k < terms; ++k) {
    // Coefficient of z^k in R^2 is 2 r_0 r_k + sum_{0<i<k} r_i r_{k-i}.
    BigInt s = k < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(k)] : 0;
    for (int i = 1; i < k; ++i)
      s = checked_sub(s, checked_mul(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(k - i)]));
    r.push_back(checked_div_exact(s, 2, "square root series"));
  }
  return r;
}

SequenceTable gf_coefficients(int n_max)
{
  check_cap(n_max);
  const auto r = radicand_sqrt(n_max + 2);
  const BigInt numerator_poly[] = {1, 1, -1};
  SequenceTable t{"gf", 0, {}};
  // Coefficient of z^0 in the numerator vanishes (1 - r_0 = 0), so dividing by
  // 2z shifts every coefficient down by one.
  if (r[0] != 1)
    throw Error(ErrorCode::Internal, "square root series must start at 1");
  for (int n = 0; n <= n_max; ++n) {
    const BigInt q = n + 1 < 3 ? numerator_poly[n + 1] : 0;
    t.terms.push_back(checked_div_exact(checked_sub(q, r[static_cast<std::size_t>(n + 1)]), 2, "G(z)"));
  }
  return t;
}

SequenceTable catalan(int n_max)
{
  check_cap(n_max);
  SequenceTable t{"catalan", 0, {1}};
  auto& c = t.terms;
  for (int k = 0; k < n_max; ++k) {
    BigInt s = 0;
    for (int i = 0; i <= k; ++i)
      s = checked_add(s, checked_mul(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(k - i)]));
    c.push_back(s);
  }
  return t;
}

SequenceTable schroder_large(int n_max)
{
  check_cap(n_max);
  SequenceTable t{"schroder_large", 0, {1}};
  auto& s = t.terms;
  if (n_max >= 1)
    s.push_back(2);
  for (int k = 2; k <= n_max; ++k) {
    const BigInt a = checked_mul(3 * (2 * k - 1), s[static_cast<std::size_t>(k - 1)]);
    const BigInt b = checked_mul(k - 2, s[static_cast<std::size_t>(k - 2)]);
    s.push_back(checked_div_exact(checked_sub(a, b), k + 1, "Schroeder recurrence"));
  }
  return t;
}

SequenceTable binomial_transform_catalan(int n_max)
{
  check_cap(n_max);
  const SequenceTable c = catalan(n_max);
  SequenceTable t{"binomial_transform_catalan", 0, {}};
  std::vector<BigInt> row{1};  // binomial(n, k), row n
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, 1);
      for (int k = 1; k < n; ++k)
        next[static_cast<std::size_t>(k)] = checked_add(row[static_cast<std::size_t>(k - 1)], row[static_cast<std::size_t>(k)]);
      row = std::move(next);
    }
    BigInt s = 0;
    for (int k = 0; k <= n; ++k)
      s = checked_add(s, checked_mul(row[static_cast<std::size_t>(k)], c.term(k)));
    t.terms.push_back(s);
  }
  return t;
}

SequenceTable powers_2_shifted(int n_max)
{
  check_cap(n_max, 1);
  SequenceTable t{"powers_2_shifted", 1, {1}};
  for (int n = 2; n <= n_max; ++n)
    t.terms.push_back(checked_mul(t.terms.back(), 2));
  return t;
}

BigInt sort_123_321_closed(int n)
{
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  auto pow2 = [](int e) {
    BigInt v = 1;
    for (int i = 0; i < e; ++i)
      v = checked_mul(v, 2);
    return v;
  };
  if (n <= 3)
    return pow2(n - 1);
  return checked_mul(7, pow2(n - 4));
}

SequenceTable sort_123_321_table(int n_max)
{
  check_cap(n_max, 1);
  SequenceTable t{"sort_123_321", 1, {}};
  for (int n = 1; n <= n_max; ++n)
    t.terms.push_back(sort_123_321_closed(n));
  return t;
}

} // namespace stacksort
