#include "oracles.hpp"

#include "dyck_paths.hpp"

#include <doctest.h>

#include <set>

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

TEST_CASE("golden Rotem example")
{
  const Permutation x = parse_permutation("8 11 6 10 4 9 7 5 3 1 2");
  CHECK(rotem_b_sequence(x).values() == std::vector<int>{11, 10, 10, 9, 9, 8, 6, 4, 4, 4, 1});
  const DyckPath p = rotem_map(x);
  CHECK(p.compressed() == "udu^2du^2dud^2ud^2u^3d^3ud");
  CHECK(p.semilength() == 11);
  CHECK(cell_capacity_ok(x));
}

TEST_CASE("Dyck words")
{
  CHECK(DyckPath("uudd").compressed() == "u^2d^2");
  CHECK(DyckPath("").semilength() == 0);
  CHECK(code_of([] { DyckPath("udd"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { DyckPath("duud"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { DyckPath("uxdd"); }) == ErrorCode::InvalidArgument);
  CHECK(contains_factor(DyckPath("udud"), "dudu") == false);
  CHECK(contains_factor(DyckPath("ududud"), "dudu"));
  CHECK(contains_factor(DyckPath("ud"), ""));
}

TEST_CASE("path generation matches the filtered binary-word oracle")
{
  for (int n = 0; n <= 8; ++n) {
    std::set<std::string> generated;
    for_each_dyck_path(n, [&](const DyckPath& p) { generated.insert(p.word()); });
    const auto words = oracle::dyck_words(n);
    CHECK(generated == std::set<std::string>(words.begin(), words.end()));
    CHECK(generated.size() == oracle::catalan(n));
  }
  CHECK(code_of([] { for_each_dyck_path(15, [](const DyckPath&) {}); }) == ErrorCode::SemilengthTooLarge);
}

TEST_CASE("dudu-avoiding counts")
{
  const std::uint64_t expected[] = {1, 2, 4, 10, 26, 72, 206, 606, 1820, 5558};
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t naive = 0;
    for (const auto& w : oracle::dyck_words(n))
      naive += w.find("dudu") == std::string::npos;
    CHECK(naive == expected[n - 1]);
    CHECK(count_dyck_avoiding(n, "dudu") == expected[n - 1]);
  }
}

TEST_CASE("Rotem map is a bijection onto Dyck paths")
{
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> image;
    for (const auto& x : avoiders(n, PatternSet::parse("123")))
      image.insert(rotem_map(x).word());
    const auto words = oracle::dyck_words(n);
    CHECK(image == std::set<std::string>(words.begin(), words.end()));
  }
}

TEST_CASE("grid capacity and dudu both detect 132-star")
{
  for (int n = 1; n <= 7; ++n) {
    for (const auto& x : avoiders(n, PatternSet::parse("123"))) {
      const bool star = oracle::contains_132_star(oracle::entries(x));
      REQUIRE(cell_capacity_ok(x) == !star);
      REQUIRE(contains_factor(rotem_map(x), "dudu") == star);
    }
  }
}

TEST_CASE("grid decomposition shape")
{
  const GridDecomposition g = grid_cells(parse_permutation("3 4 1 2"));
  CHECK(g.strips() == 2);
  CHECK(g.cell(1, 1) == 1);
  CHECK(g.cell(2, 2) == 1);
  CHECK(g.cell(1, 2) == 0);
  CHECK(g.max_occupancy() == 1);
  CHECK(code_of([] { cell_capacity_ok(parse_permutation("1 2 3")); }) == ErrorCode::Not123Avoider);
}

TEST_CASE("b-sequence validation")
{
  CHECK(BSequence({3, 2, 1}).size() == 3);
  CHECK(code_of([] { BSequence({2, 2, 1}); }) == ErrorCode::InvalidBSequence);
  CHECK(code_of([] { BSequence({3, 3, 4}); }) == ErrorCode::InvalidBSequence);
  CHECK(code_of([] { BSequence({3, 1, 1}); }) == ErrorCode::InvalidBSequence);
  CHECK(b_to_dyck(BSequence({3, 3, 3})).word() == "uuuddd");
  CHECK(b_to_dyck(BSequence({3, 2, 1})).word() == "ududud");
}
