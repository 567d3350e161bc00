// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "dyck_paths.hpp"
#include "harness.hpp"
#include "report.hpp"
#include "sequences.hpp"
#include "west_bijection.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

using namespace stacksort;

namespace {

int workers()
{
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what)
  {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

// Pass iff every named claim in the suite passed; failures carry their first
// counterexample.
void require_claims(Outcome& out, const SuiteResult& suite, const std::vector<std::string>& ids)
{
  for (const auto& id : ids) {
    const auto it = std::find_if(suite.reports.begin(), suite.reports.end(),
                                 [&](const VerificationReport& r) { return r.claim_id == id; });
    if (it == suite.reports.end()) {
      out.expect(false, id + ": not reported");
      continue;
    }
    out.expect(it->pass, id + (it->counterexamples.empty() ? "" : ": " + it->counterexamples.front()));
  }
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome criterion_1()
{
  Outcome out;
  const Machine m = Machine::parse("132", "321");
  const Permutation x = parse_permutation("2 3 1 4");
  const Permutation w = parse_permutation("4 2 1 3");
  const auto t0 = Clock::now();
  const Permutation first = m.first_pass(x);
  const Permutation full = m.run(x);
  const Permutation sorted = west_pass(w);
  const double elapsed = seconds_since(t0);
  out.expect(first.to_string() == "3 4 1 2", "first stack gave " + first.to_string());
  out.expect(full.to_string() == "3 1 2 4", "machine gave " + full.to_string());
  out.expect(sorted.to_string() == "1 2 3 4", "West's stack gave " + sorted.to_string());
  out.expect(elapsed < 1e-3, "took " + std::to_string(elapsed * 1e3) + " ms");
  return out;
}

Outcome criterion_2()
{
  Outcome out;
  // Ninth term frozen only after recurrence, series and Dyck count agree.
  const std::vector<BigInt> golden{1, 2, 4, 10, 26, 72, 206, 606, 1820};
  const auto t0 = Clock::now();
  const auto g = g_sequence(9);
  const auto gf = gf_coefficients(9);
  const Machine m = Machine::parse("132", "321");
  for (int n = 1; n <= 9; ++n) {
    EnumerationOptions opts;
    opts.workers = workers();
    opts.keep_witnesses = false;
    const auto brute = static_cast<BigInt>(enumerate_machine(n, m, opts).count);
    const auto dyck = static_cast<BigInt>(count_dyck_avoiding(n, "dudu"));
    const std::string tag = "n=" + std::to_string(n) + ": ";
    out.expect(g.term(n) == gf.term(n) && gf.term(n) == dyck,
               tag + "independent derivations disagree (" + to_decimal(g.term(n)) + ", " + to_decimal(gf.term(n)) +
                   ", " + to_decimal(dyck) + ")");
    out.expect(brute == g.term(n), tag + "brute force " + to_decimal(brute) + " vs " + to_decimal(g.term(n)));
    out.expect(g.term(n) == golden[static_cast<std::size_t>(n - 1)],
               tag + "golden " + to_decimal(golden[static_cast<std::size_t>(n - 1)]));
  }
  const double elapsed = seconds_since(t0);
  out.expect(elapsed <= 120.0, "took " + std::to_string(elapsed) + " s");
  return out;
}

Outcome criterion_3()
{
  Outcome out;
  const Machine m = Machine::parse("132", "321");
  const PatternSet t = PatternSet::parse("123,132-star");
  for (int n = 1; n <= 8; ++n) {
    const auto sortable = collect_permutations(n, workers(), [&](const Permutation& x) { return m.sorts(x); });
    out.expect(sortable == avoiders(n, t), "n=" + std::to_string(n) + ": sets differ");
  }
  return out;
}

Outcome criterion_4(const SuiteResult& west)
{
  Outcome out;
  require_claims(out, west,
                 {"signature-injective-123", "signature-injective-132", "signature-sets-equal", "west-map-bijection",
                  "west-map-restricts"});
  const Permutation x = parse_permutation("4 5 2 3 1");
  const Permutation y = parse_permutation("4 2 1 5 3");
  out.expect(signature(x, ClassicalPattern::parse("132")).to_string() == "4.4.3.3.2", "signature of 45231");
  out.expect(signature(y, ClassicalPattern::parse("123")).to_string() == "4.4.3.3.2", "signature of 42153");
  out.expect(west_map(x, WestDirection::From132To123) == y, "45231 -> 42153");
  out.expect(west_map(y, WestDirection::From123To132) == x, "42153 -> 45231");
  return out;
}

Outcome criterion_5(const SuiteResult& west)
{
  Outcome out;
  require_claims(out, west, {"plateau-iff-132star", "plateau-iff-123star"});
  return out;
}

Outcome criterion_6()
{
  Outcome out;
  require_claims(out, verify_dyck(8), {"rotem-map-bijection", "cells-at-most-one-iff-132star", "dudu-iff-132star"});
  const Permutation x = parse_permutation("8 11 6 10 4 9 7 5 3 1 2");
  const std::vector<int> b{11, 10, 10, 9, 9, 8, 6, 4, 4, 4, 1};
  out.expect(rotem_b_sequence(x).values() == b, "b-sequence of the golden example");
  out.expect(rotem_map(x).compressed() == "udu^2du^2dud^2ud^2u^3d^3ud",
             "golden path, got " + rotem_map(x).compressed());
  return out;
}

Outcome criterion_7()
{
  Outcome out;
  const Machine m = Machine::parse("123", "321");
  const std::vector<std::uint64_t> golden{1, 2, 4, 7, 14, 28, 56};
  std::vector<Permutation> current;
  for (int n = 1; n <= 8; ++n) {
    current = collect_permutations(n, workers(), [&](const Permutation& x) { return m.sorts(x); });
    if (n <= 7)
      out.expect(current.size() == golden[static_cast<std::size_t>(n - 1)],
                 "n=" + std::to_string(n) + ": brute force " + std::to_string(current.size()));
    out.expect(static_cast<BigInt>(current.size()) == sort_123_321_closed(n),
               "n=" + std::to_string(n) + ": closed form mismatch");
  }
  // n = 9, 10: inc_n and swap12 images of the previous set, each re-checked
  // against the machine.
  for (int n = 9; n <= 10; ++n) {
    std::set<Permutation> next;
    bool all_sortable = true;
    for (const auto& y : current) {
      const Permutation z = insert_one_at(y, n);
      for (const Permutation& c : {z, swap12(z)}) {
        all_sortable = all_sortable && m.sorts(c);
        next.insert(c);
      }
    }
    out.expect(all_sortable, "n=" + std::to_string(n) + ": a constructed permutation is not sortable");
    out.expect(next.size() == 2 * current.size(), "n=" + std::to_string(n) + ": images collide");
    out.expect(static_cast<BigInt>(next.size()) == sort_123_321_closed(n),
               "n=" + std::to_string(n) + ": " + std::to_string(next.size()) + " vs closed form");
    current.assign(next.begin(), next.end());
  }
  return out;
}

Outcome criterion_8()
{
  Outcome out;
  const Machine m = Machine::parse("123", "321");
  const auto p123 = ClassicalPattern::parse("123");
  std::map<std::string, std::string> first_failure;
  auto note = [&](bool ok, const std::string& property, const Permutation& x) {
    if (!ok && !first_failure.count(property))
      first_failure[property] = x.to_string();
  };
  for (int n = 4; n <= 8; ++n) {
    for (const auto& x : collect_permutations(n, workers(), [&](const Permutation& p) { return m.sorts(p); })) {
      const Permutation output = m.first_pass(x);
      note(!contains_classical(x, p123), "x avoids 123", x);
      note(x.at(1) >= n - 1, "x_1 in {n-1, n}", x);
      note(x.at(n) <= 2, "x_n in {1, 2}", x);
      note(index_of(x, n) < std::min(index_of(x, 1), index_of(x, 2)), "ind(n) < min(ind(1), ind(2))", x);
      note(index_of(output, 2) + 1 == index_of(output, 1), "2 immediately left of 1 in the output", x);
      if (n >= 5)
        note(m.first_pass(swap12(x)) == output, "swap12 preserves the output", x);
    }
    for_each_permutation(n, [&](const Permutation& x) {
      note(m.sorts(x) == m.sorts(insert_one_at(x, n + 1)), "inc_{n+1} biconditional", x);
    });
  }
  for (const auto& [property, x] : first_failure)
    out.expect(false, property + " fails on " + x);
  return out;
}

Outcome criterion_9(const SuiteResult& tables)
{
  Outcome out;
  require_claims(out, tables,
                 {"table-123-213-catalan", "table-132-312-catalan", "table-231-321-catalan", "table-123-132-catalan",
                  "table-123-231-schroder", "table-123-312-binomial-catalan", "table-single-132-binomial-catalan",
                  "table-single-321-powers-of-two"});
  return out;
}

Outcome criterion_10(const SuiteResult& conjecture)
{
  Outcome out;
  require_claims(out, conjecture, {"conjecture-totals", "conjecture-first-entry", "conjecture-max-position"});
  return out;
}

Outcome criterion_11()
{
  Outcome out;
  for (const auto suite : kSuiteNames) {
    const int n = std::min(7, suite_length_cap(suite));
    const std::string a = render_suites(run_suite(suite, n, 1), Format::Json);
    const std::string b = render_suites(run_suite(suite, n, 1), Format::Json);
    const std::string c = render_suites(run_suite(suite, n, 8), Format::Json);
    out.expect(a == b, std::string(suite) + ": repeated runs differ");
    out.expect(a == c, std::string(suite) + ": --workers 1 and 8 differ");
  }
  return out;
}

} // namespace

int main()
{
  const SuiteResult west = verify_west(8);
  const SuiteResult tables = verify_tables(8, workers());
  const SuiteResult conjecture = verify_conjecture(8, workers());

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"machine trace fidelity", criterion_1},
      {"(132,321) counting triangle, n = 1..9", criterion_2},
      {"Sort_n(132,321) = Av_n(123,132-star), n = 1..8", criterion_3},
      {"West bijection suite, n = 1..8", [&] { return criterion_4(west); }},
      {"plateau criteria, n = 1..8", [&] { return criterion_5(west); }},
      {"Dyck suite, n = 1..8", criterion_6},
      {"|Sort_n(123,321)| closed form, n <= 10", criterion_7},
      {"(123,321) property suite, n = 4..8", criterion_8},
      {"reference table cross-checks, n = 1..8", [&] { return criterion_9(tables); }},
      {"equidistribution evidence, n = 1..8", [&] { return criterion_10(conjecture); }},
      {"determinism across runs and worker counts", criterion_11},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::printf("%s criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    for (const auto& n : o.notes)
      std::printf("    %s\n", n.c_str());
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
