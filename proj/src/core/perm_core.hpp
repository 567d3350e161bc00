#pragma once

// Permutations in one-line notation, classical and bivincular patterns, and
// generation of pattern-avoiding sets.
//
// All positions and sites are 1-based: x.at(1) is the first entry, and site i
// of a permutation of length n (1 <= i <= n+1) is the slot immediately before
// the i-th entry (site n+1 is the end).

#include "errors.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

using Value = int;

inline constexpr int kDefaultLengthCap = 12;

class Permutation {
public:
  Permutation() = default;

  // Throws NotABijection unless entries is a rearrangement of 1..n.
  explicit Permutation(std::vector<Value> entries);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  // Relative order of distinct integers, rescaled to 1..n.
  static Permutation standardize(std::span<const Value> values);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }

  Value at(int position) const { return entries_.at(static_cast<std::size_t>(position - 1)); }

  std::span<const Value> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool is_identity() const noexcept;

  // Canonical text form: decimal entries separated by single spaces.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  struct Trusted {};
  Permutation(Trusted, std::vector<Value> entries) : entries_(std::move(entries)) {}

  friend class PermutationBuilder;

  std::vector<Value> entries_;
};

// Accepts whitespace- and/or comma-separated positive integers.
Permutation parse_permutation(std::string_view text);

int index_of(const Permutation& x, Value v);

struct LtrMinimum {
  int position;
  Value value;

  friend bool operator==(const LtrMinimum&, const LtrMinimum&) = default;
};

std::vector<LtrMinimum> ltr_minima(const Permutation& x);

std::vector<Value> shift(const Permutation& x, int k);

// Subsequence of x made of the values 1..k, order preserved.
Permutation smallest_k(const Permutation& x, int k);

Permutation swap12(const Permutation& x);

// inc_i: shift every entry up by one and splice 1 into site i.
Permutation insert_one_at(const Permutation& x, int site);

// x^i: splice the new maximum n+1 into site i.
Permutation insert_max_at(const Permutation& x, int site);

// Inverse of insert_one_at at any site: delete 1 and shift down.
Permutation remove_one(const Permutation& x);

class ClassicalPattern {
public:
  explicit ClassicalPattern(Permutation base);

  // Digit string such as "132".
  static ClassicalPattern parse(std::string_view digits);

  const Permutation& base() const noexcept { return base_; }
  int size() const noexcept { return base_.size(); }
  std::string name() const;

  friend bool operator==(const ClassicalPattern&, const ClassicalPattern&) = default;

private:
  Permutation base_;
};

// A classical pattern with optional adjacency constraints. A position
// constraint i requires c(i+1) = c(i) + 1 for the occurrence indices; a value
// constraint v requires the entry playing pattern value v+1 to equal the entry
// playing pattern value v, plus one.
class BivincularPattern {
public:
  BivincularPattern(Permutation base, std::vector<int> adjacent_positions,
                    std::vector<int> adjacent_values, std::string name = {});

  static BivincularPattern star_123();
  static BivincularPattern star_132();

  // "123-star" / "132-star".
  static BivincularPattern parse(std::string_view keyword);

  const Permutation& base() const noexcept { return base_; }
  int size() const noexcept { return base_.size(); }
  const std::vector<int>& adjacent_positions() const noexcept { return adjacent_positions_; }
  const std::vector<int>& adjacent_values() const noexcept { return adjacent_values_; }
  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const BivincularPattern&, const BivincularPattern&) = default;

private:
  Permutation base_;
  std::vector<int> adjacent_positions_;
  std::vector<int> adjacent_values_;
  std::string name_;
};

struct PatternSet {
  std::vector<ClassicalPattern> classical;
  std::vector<BivincularPattern> bivincular;

  bool empty() const noexcept { return classical.empty() && bivincular.empty(); }

  // Comma-joined pattern names, e.g. "132,321".
  std::string name() const;

  // Comma-separated list of digit strings and star keywords.
  static PatternSet parse(std::string_view text);

  friend bool operator==(const PatternSet&, const PatternSet&) = default;
};

// Where an occurrence is forced to start or end. Anchored searches are used on
// sequences known to avoid the pattern everywhere except at one end.
enum class Anchor { None, First, Last };

// Classical containment over any sequence of distinct integers.
bool occurs(std::span<const Value> text, std::span<const Value> pattern,
            Anchor anchor = Anchor::None);

// Bivincular containment over any sequence of distinct integers. Value
// adjacency is literal: consecutive integers.
bool occurs(std::span<const Value> text, const BivincularPattern& pattern,
            Anchor anchor = Anchor::None);

bool occurs_any(std::span<const Value> text, const PatternSet& patterns,
                Anchor anchor = Anchor::None);

bool contains_classical(const Permutation& x, const ClassicalPattern& y);
bool contains_bivincular(const Permutation& x, const BivincularPattern& p);
bool avoids(const Permutation& x, const PatternSet& patterns);

// Lexicographic stream of Av_n(T). Throws LengthTooLarge above the cap.
void for_each_avoider(int n, const PatternSet& patterns,
                      const std::function<void(const Permutation&)>& visit,
                      int length_cap = kDefaultLengthCap);

std::vector<Permutation> avoiders(int n, const PatternSet& patterns,
                                  int length_cap = kDefaultLengthCap);

// Every permutation of length n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          int length_cap = kDefaultLengthCap);

// Builds permutations without re-validating; for generators that construct
// bijections by design.
class PermutationBuilder {
public:
  static Permutation adopt(std::vector<Value> entries)
  {
    return Permutation(Permutation::Trusted{}, std::move(entries));
  }
};

} // namespace stacksort
