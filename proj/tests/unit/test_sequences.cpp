#include "oracles.hpp"

#include "sequences.hpp"

#include <doctest.h>

using namespace stacksort;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

} // namespace

TEST_CASE("g recurrence and series agree through the cap")
{
  const auto g = g_sequence(kSequenceCap);
  const auto gf = gf_coefficients(kSequenceCap);
  CHECK(g.offset == 0);
  CHECK(g.terms == gf.terms);
  const long long prefix[] = {1, 1, 2, 4, 10, 26, 72, 206, 606, 1820, 5558};
  for (int n = 0; n <= 10; ++n)
    CHECK(g.term(n) == prefix[n]);
}

TEST_CASE("convolution identity")
{
  const auto g = g_sequence(40);
  const auto f = f_sequence(40);
  CHECK(f.offset == 2);
  for (int n = 2; n <= 40; ++n) {
    BigInt s = 0;
    for (int i = 0; i < n; ++i)
      s += g.term(i) * g.term(n - 1 - i);
    CHECK(s == g.term(n) + f.term(n));
  }
}

TEST_CASE("radicand square root")
{
  const auto r = radicand_sqrt(12);
  // Square the truncated series and compare with the radicand.
  const auto p = radicand();
  for (int k = 0; k < 12; ++k) {
    BigInt s = 0;
    for (int i = 0; i <= k; ++i)
      s += r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
    const BigInt want = k < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(k)] : 0;
    CHECK(s == want);
  }
}

TEST_CASE("reference sequences against direct oracles")
{
  const auto c = catalan(30);
  const auto s = schroder_large(12);
  const auto b = binomial_transform_catalan(25);
  for (int n = 0; n <= 30; ++n)
    CHECK(c.term(n) == static_cast<BigInt>(oracle::catalan(n)));
  for (int n = 0; n <= 12; ++n)
    CHECK(s.term(n) == static_cast<BigInt>(oracle::schroder_paths(0, 0, n)));
  for (int n = 0; n <= 25; ++n)
    CHECK(b.term(n) == static_cast<BigInt>(oracle::binomial_catalan(n)));
  const auto p = powers_2_shifted(20);
  CHECK(p.offset == 1);
  CHECK(p.term(1) == 1);
  CHECK(p.term(20) == (BigInt{1} << 19));
}

TEST_CASE("closed form for the (123,321) machine")
{
  const long long expected[] = {1, 2, 4, 7, 14, 28, 56, 112};
  for (int n = 1; n <= 8; ++n)
    CHECK(sort_123_321_closed(n) == expected[n - 1]);
  CHECK(sort_123_321_table(10).term(10) == 7 * 64);
  CHECK(code_of([] { sort_123_321_closed(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("overflow is raised, never truncated")
{
  CHECK(code_of([] { schroder_large(kSequenceCap); }) == ErrorCode::Overflow);
  CHECK(code_of([] { binomial_transform_catalan(kSequenceCap); }) == ErrorCode::Overflow);
  CHECK_NOTHROW(catalan(kSequenceCap));
  CHECK(code_of([] { g_sequence(kSequenceCap + 1); }) == ErrorCode::LengthTooLarge);
  const BigInt big = BigInt{1} << 125;
  CHECK(code_of([&] { checked_mul(big, 4); }) == ErrorCode::Overflow);
  CHECK(code_of([&] { checked_add(big * 2, big * 2); }) == ErrorCode::Overflow);
}

TEST_CASE("decimal round trip")
{
  const BigInt v = catalan(60).term(60);
  CHECK(parse_decimal(to_decimal(v)) == v);
  CHECK(to_decimal(-42) == "-42");
  CHECK(to_decimal(0) == "0");
  CHECK(code_of([] { parse_decimal("12x"); }) == ErrorCode::MalformedToken);
}
