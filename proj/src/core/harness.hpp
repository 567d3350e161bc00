#pragma once

// Brute-force enumeration over S_n, verification suites, reference
// table cross-checks and the equidistribution tables for the open conjecture.

#include "perm_core.hpp"
#include "sequences.hpp"
#include "stack_machine.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

// Witnesses are retained by default only up to this length.
inline constexpr int kWitnessDefaultMaxLength = 8;
inline constexpr int kMaxReportedCounterexamples = 10;

struct EnumerationOptions {
  int workers = 1;
  std::optional<bool> keep_witnesses;  // unset: keep when n <= kWitnessDefaultMaxLength
  int length_cap = kDefaultLengthCap;
};

struct EnumerationResult {
  std::string machine;  // pattern list of the first stack, e.g. "132,321"
  int n = 0;
  std::uint64_t count = 0;
  std::optional<std::vector<Permutation>> witnesses;
  int worker_partitions = 0;

  friend bool operator==(const EnumerationResult&, const EnumerationResult&) = default;
};

// Visits every permutation of S_n that satisfies keep, partitioned by first
// entry across workers. The returned list is in lexicographic order for any
// worker count.
std::vector<Permutation> collect_permutations(int n, int workers,
                                              const std::function<bool(const Permutation&)>& keep,
                                              int length_cap = kDefaultLengthCap);

std::uint64_t count_permutations(int n, int workers, const std::function<bool(const Permutation&)>& keep,
                                 int length_cap = kDefaultLengthCap);

EnumerationResult enumerate_machine(int n, const Machine& machine, const EnumerationOptions& options = {});

EnumerationResult enumerate_sortable(int n, const ClassicalPattern& sigma, const ClassicalPattern& tau,
                                     const EnumerationOptions& options = {});

EnumerationResult enumerate_single_machine(int n, const ClassicalPattern& sigma,
                                           const EnumerationOptions& options = {});

struct VerificationReport {
  std::string claim_id;
  int n_min = 0;
  int n_max = 0;
  bool pass = true;
  std::vector<std::string> counterexamples;
  std::vector<std::string> observations;
};

// Informational output of a suite that is not a pass/fail claim.
struct Observation {
  std::string name;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  int n_max = 0;
  std::vector<VerificationReport> reports;
  std::vector<Observation> observations;

  bool all_pass() const;
};

struct ClaimInfo {
  std::string_view id;
  std::string_view statement;
};

// Every claim a suite can report, with the mathematical statement it checks.
const std::vector<ClaimInfo>& claim_registry();

inline constexpr std::string_view kSuiteNames[] = {"characterization", "west", "dyck", "section4",
                                                   "tables", "conjecture"};

// Largest n_max each suite accepts.
int suite_length_cap(std::string_view suite);

SuiteResult verify_characterization(int n_max, int workers = 1);
SuiteResult verify_west(int n_max);
SuiteResult verify_dyck(int n_max);
SuiteResult verify_section4(int n_max, int workers = 1);
SuiteResult verify_tables(int n_max, int workers = 1);
SuiteResult verify_conjecture(int n_max, int workers = 1);

// "all" runs every suite in kSuiteNames order.
std::vector<SuiteResult> run_suite(std::string_view suite, int n_max, int workers = 1);

struct DistributionTable {
  std::string machine;
  int n = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_first_entry;      // index v-1: #{x : x_1 = v}
  std::vector<std::uint64_t> by_position_of_max;  // index i-1: #{x : x_i = n}
};

DistributionTable distribution_table(int n, const Machine& machine, int workers = 1);

struct ConjectureResult {
  DistributionTable first;
  DistributionTable second;
  VerificationReport report;
};

ConjectureResult conjecture_tables(int n, const Machine& first = Machine::parse("132", "213"),
                                   const Machine& second = Machine::parse("213", "312"), int workers = 1);

// Reference prefixes with their published offsets, kept as data.
struct OeisSnapshot {
  std::string_view id;
  std::string_view description;
  int offset;
  std::vector<std::int64_t> terms;
};

const std::vector<OeisSnapshot>& oeis_snapshots();
const OeisSnapshot& oeis_snapshot(std::string_view id);

// Shift d in [-2, 2] with counts[n - 1] == snapshot term at index n + d for
// every n = 1..counts.size(), if one exists.
std::optional<int> find_alignment(const std::vector<std::uint64_t>& counts, const OeisSnapshot& snapshot);

} // namespace stacksort
