// Command-line front end over the C API.
//
// Exit codes: 0 success, 1 a verification or equidistribution check failed,
// 2 usage or input error.

#include "stacksort/stacksort.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Freer {
  void operator()(ss_perm* p) const { ss_perm_free(p); }
  void operator()(ss_text* t) const { ss_text_free(t); }
  void operator()(ss_context* c) const { ss_context_free(c); }
};
using Perm = std::unique_ptr<ss_perm, Freer>;
using Text = std::unique_ptr<ss_text, Freer>;
using Context = std::unique_ptr<ss_context, Freer>;

struct Failure {
  ss_status status;
};

void check(ss_status status)
{
  if (status != SS_OK)
    throw Failure{status};
}

struct Options {
  std::string sigma;
  std::string tau;
  std::string perm;
  std::string format = "text";
  std::string suite = "all";
  std::string cache_dir;
  std::string witnesses = "auto";
  std::string sequence = "all";
  int n = 0;
  int n_max = 7;
  int workers = 1;
};

ss_format format_of(const std::string& name)
{
  if (name == "json")
    return SS_FORMAT_JSON;
  if (name == "csv")
    return SS_FORMAT_CSV;
  return SS_FORMAT_TEXT;
}

Perm parse_perm(const std::string& text)
{
  ss_perm* p = nullptr;
  check(ss_perm_parse(text.c_str(), &p));
  return Perm(p);
}

Context make_context(const Options& o)
{
  ss_context* c = nullptr;
  check(ss_context_new(&c));
  Context ctx(c);
  check(ss_context_set_workers(c, o.workers));
  check(ss_context_set_cache_dir(c, o.cache_dir.c_str()));
  return ctx;
}

void print(const Text& text) { std::fwrite(ss_text_data(text.get()), 1, ss_text_size(text.get()), stdout); }

void flush_warnings(const Context& ctx)
{
  const std::string w = ss_context_warnings(ctx.get());
  if (!w.empty())
    std::cerr << w;
}

const char* tau_or_null(const Options& o) { return o.tau.empty() ? nullptr : o.tau.c_str(); }

int witnesses_flag(const std::string& mode)
{
  if (mode == "on")
    return 1;
  if (mode == "off")
    return 0;
  return -1;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Pattern-avoiding stack machines: traces, enumeration and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ss_version()));

  Options o;
  const auto formats = CLI::IsMember({"text", "json", "csv"});
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(formats)->capture_default_str();
  };
  auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("--workers", o.workers, "Worker threads for S_n scans")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
  };

  auto* trace = app.add_subcommand("trace", "Step-by-step trace of both stacks of a machine");
  trace->add_option("--sigma", o.sigma, "First forbidden pattern, e.g. 132")->required();
  trace->add_option("--tau", o.tau, "Second forbidden pattern; omit for the single sigma-machine");
  trace->add_option("--perm", o.perm, "Input permutation, e.g. \"2 3 1 4\"")->required();
  add_format(trace);

  auto* enumerate = app.add_subcommand("enumerate", "Count the sortable permutations of length n");
  enumerate->add_option("--sigma", o.sigma, "First forbidden pattern")->required();
  enumerate->add_option("--tau", o.tau, "Second forbidden pattern; omit for the single sigma-machine");
  enumerate->add_option("--n", o.n, "Permutation length")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--witnesses", o.witnesses, "List the sortable permutations")
      ->check(CLI::IsMember({"auto", "on", "off"}))
      ->capture_default_str();
  enumerate->add_option("--cache-dir", o.cache_dir, "Result cache directory")->envname("STACKSORT_CACHE_DIR");
  add_format(enumerate);
  add_workers(enumerate);

  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 1 if any claim fails");
  verify->add_option("--suite", o.suite, "Suite to run")
      ->check(CLI::IsMember({"characterization", "west", "dyck", "section4", "tables", "conjecture", "all"}))
      ->capture_default_str();
  verify->add_option("--n-max", o.n_max, "Largest length checked")->check(CLI::PositiveNumber)->capture_default_str();
  add_format(verify);
  add_workers(verify);

  auto* sig = app.add_subcommand("signature", "Active sites and signature of a permutation");
  sig->add_option("--perm", o.perm, "Permutation")->required();
  sig->add_option("--sigma", o.sigma, "Pattern the sites are taken with respect to")
      ->check(CLI::IsMember({"123", "132"}))
      ->required();
  add_format(sig);

  auto* west = app.add_subcommand("west-map", "West's bijection between Av_n(132) and Av_n(123)");
  west->add_option("--perm", o.perm, "Permutation avoiding the source pattern")->required();
  west->add_option("--sigma", o.sigma, "Source pattern: 132 maps to Av(123), 123 maps to Av(132)")
      ->check(CLI::IsMember({"123", "132"}))
      ->required();
  add_format(west);

  auto* dyck = app.add_subcommand("dyck", "Rotem map of a 123-avoider to a Dyck path");
  dyck->add_option("--perm", o.perm, "Permutation avoiding 123")->required();
  add_format(dyck);

  auto* sequences = app.add_subcommand("sequences", "Exact sequence tables");
  sequences->add_option("--n-max", o.n_max, "Largest index")->check(CLI::Range(0, 60))->capture_default_str();
  sequences->add_option("--sequence", o.sequence, "Which table")
      ->check(CLI::IsMember(
          {"all", "g", "f", "gf", "catalan", "schroder", "binomial-catalan", "powers-of-two", "sort-123-321"}))
      ->capture_default_str();
  add_format(sequences);

  auto* conjecture = app.add_subcommand("conjecture", "Distribution tables for Sort_n(132,213) and Sort_n(213,312)");
  conjecture->add_option("--n", o.n, "Permutation length")->required()->check(CLI::PositiveNumber);
  add_format(conjecture);
  add_workers(conjecture);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const ss_format format = format_of(o.format);
  try {
    ss_text* raw = nullptr;
    if (trace->parsed()) {
      const Perm x = parse_perm(o.perm);
      check(ss_render_trace(x.get(), o.sigma.c_str(), tau_or_null(o), format, &raw));
      print(Text(raw));
      return kExitOk;
    }
    if (enumerate->parsed()) {
      const Context ctx = make_context(o);
      const ss_status status = ss_render_enumeration(ctx.get(), o.sigma.c_str(), tau_or_null(o), o.n,
                                                     witnesses_flag(o.witnesses), format, &raw);
      flush_warnings(ctx);
      check(status);
      print(Text(raw));
      return kExitOk;
    }
    if (verify->parsed()) {
      const Context ctx = make_context(o);
      int pass = 0;
      check(ss_render_verify(ctx.get(), o.suite.c_str(), o.n_max, format, &pass, &raw));
      print(Text(raw));
      return pass ? kExitOk : kExitCheckFailed;
    }
    if (sig->parsed()) {
      const Perm x = parse_perm(o.perm);
      check(ss_render_signature(x.get(), o.sigma.c_str(), format, &raw));
      print(Text(raw));
      return kExitOk;
    }
    if (west->parsed()) {
      const Perm x = parse_perm(o.perm);
      const ss_west_direction d = o.sigma == "132" ? SS_WEST_132_TO_123 : SS_WEST_123_TO_132;
      check(ss_render_west_map(x.get(), d, format, &raw));
      print(Text(raw));
      return kExitOk;
    }
    if (dyck->parsed()) {
      const Perm x = parse_perm(o.perm);
      check(ss_render_dyck(x.get(), format, &raw));
      print(Text(raw));
      return kExitOk;
    }
    if (sequences->parsed()) {
      check(ss_render_sequences(o.sequence.c_str(), o.n_max, format, &raw));
      print(Text(raw));
      return kExitOk;
    }
    if (conjecture->parsed()) {
      const Context ctx = make_context(o);
      int agree = 0;
      check(ss_render_conjecture(ctx.get(), o.n, format, &agree, &raw));
      print(Text(raw));
      return agree ? kExitOk : kExitCheckFailed;
    }
  } catch (const Failure& f) {
    std::cerr << "error (" << ss_status_name(f.status) << "): " << ss_last_error_message() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
