#include "report.hpp"

#include <json.hpp>

#include <sstream>

namespace stacksort {

namespace {

using Json = nlohmann::ordered_json;

std::string join(std::span<const Value> values, std::string_view sep = " ")
{
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(std::string_view text)
{
  if (text.find_first_of(",\"\n") == std::string_view::npos)
    return std::string(text);
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

void split_machine(const std::string& machine, std::string& sigma, std::string& tau)
{
  const auto comma = machine.find(',');
  sigma = machine.substr(0, comma);
  tau = comma == std::string::npos ? "" : machine.substr(comma + 1);
}

Json trace_json(const StackTrace& t)
{
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json step;
    step["action"] = to_string(s.action);
    step["moved_value"] = s.moved_value;
    step["input_rest"] = s.input_rest;
    step["stack"] = s.stack_top_to_bottom;
    step["output"] = s.output_so_far;
    steps.push_back(std::move(step));
  }
  Json j;
  j["machine"] = t.machine.name();
  j["input"] = std::vector<Value>(t.input.begin(), t.input.end());
  j["steps"] = std::move(steps);
  j["output"] = std::vector<Value>(t.output.begin(), t.output.end());
  return j;
}

void trace_text(std::ostream& os, const std::string& title, const StackTrace& t)
{
  os << title << " [" << t.machine.name() << "] input " << t.input.to_string() << '\n';
  os << "  step  action       value  input        stack(top first)  output\n";
  int k = 1;
  for (const auto& s : t.steps) {
    std::string action = to_string(s.action);
    action.resize(12, ' ');
    std::string in = join(s.input_rest);
    std::string st = join(s.stack_top_to_bottom);
    in.resize(std::max<std::size_t>(in.size(), 12), ' ');
    st.resize(std::max<std::size_t>(st.size(), 17), ' ');
    std::string step = std::to_string(k++);
    step.resize(4, ' ');
    std::string value = std::to_string(s.moved_value);
    value.resize(5, ' ');
    os << "  " << step << "  " << action << " " << value << "  " << in << " " << st << " "
       << join(s.output_so_far) << '\n';
  }
  os << "  output " << t.output.to_string() << '\n';
}

void trace_csv(std::ostream& os, std::string_view stage, const StackTrace& t)
{
  int k = 1;
  for (const auto& s : t.steps) {
    os << stage << ',' << k++ << ',' << to_string(s.action) << ',' << s.moved_value << ',' << join(s.input_rest)
       << ',' << join(s.stack_top_to_bottom) << ',' << join(s.output_so_far) << '\n';
  }
}

Json report_json(const VerificationReport& r)
{
  Json j;
  j["claim_id"] = r.claim_id;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["status"] = r.pass ? "pass" : "fail";
  j["counterexamples"] = r.counterexamples;
  j["observations"] = r.observations;
  return j;
}

Json table_json(const DistributionTable& t)
{
  Json j;
  j["machine"] = t.machine;
  j["n"] = t.n;
  j["total"] = t.total;
  j["by_first_entry"] = t.by_first_entry;
  j["by_position_of_max"] = t.by_position_of_max;
  return j;
}

std::string counts_text(const std::vector<std::uint64_t>& v)
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

} // namespace

Format parse_format(std::string_view name)
{
  if (name == "text")
    return Format::Text;
  if (name == "json")
    return Format::Json;
  if (name == "csv")
    return Format::Csv;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "' (text, json, csv)");
}

std::string render_trace(const Machine& machine, const Permutation& x, Format format)
{
  const StackTrace first = pattern_stack_trace(x, machine.first_stack());
  // West's stack is the pattern stack for 21: the value below must be larger.
  const StackTrace second = pattern_stack_trace(first.output, PatternSet::parse("21"));
  const Permutation output = second.output;

  if (format == Format::Json) {
    Json j;
    j["machine"] = machine.name();
    j["input"] = std::vector<Value>(x.begin(), x.end());
    j["first_stack"] = trace_json(first);
    j["second_stack"] = trace_json(second);
    j["output"] = std::vector<Value>(output.begin(), output.end());
    j["sorted"] = output.is_identity();
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "stage,step,action,moved_value,input_rest,stack,output\n";
    trace_csv(os, "first", first);
    trace_csv(os, "second", second);
    return os.str();
  }
  trace_text(os, "first stack", first);
  trace_text(os, "second stack", second);
  os << "output " << output.to_string() << (output.is_identity() ? " (sorted)" : " (not sorted)") << '\n';
  return os.str();
}

std::string render_enumeration(const EnumerationResult& r, Format format)
{
  std::string sigma, tau;
  split_machine(r.machine, sigma, tau);
  if (format == Format::Json) {
    Json j;
    j["machine"] = r.machine;
    j["sigma"] = sigma;
    j["tau"] = tau;
    j["n"] = r.n;
    j["count"] = r.count;
    j["worker_partitions"] = r.worker_partitions;
    if (r.witnesses) {
      Json list = Json::array();
      for (const auto& x : *r.witnesses)
        list.push_back(x.to_string());
      j["witnesses"] = std::move(list);
    } else {
      j["witnesses"] = nullptr;
    }
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "sigma,tau,n,count\n" << sigma << ',' << tau << ',' << r.n << ',' << r.count << '\n';
    return os.str();
  }
  os << "machine " << r.machine << "  n " << r.n << "  count " << r.count << '\n';
  if (r.witnesses) {
    for (const auto& x : *r.witnesses)
      os << x.to_string() << '\n';
  }
  return os.str();
}

std::string render_suites(const std::vector<SuiteResult>& suites, Format format)
{
  bool all = true;
  for (const auto& s : suites)
    all = all && s.all_pass();

  if (format == Format::Json) {
    Json list = Json::array();
    for (const auto& s : suites) {
      Json js;
      js["suite"] = s.suite;
      js["n_max"] = s.n_max;
      js["status"] = s.all_pass() ? "pass" : "fail";
      Json reports = Json::array();
      for (const auto& r : s.reports)
        reports.push_back(report_json(r));
      js["reports"] = std::move(reports);
      Json obs = Json::array();
      for (const auto& o : s.observations)
        obs.push_back(Json{{"name", o.name}, {"detail", o.detail}});
      js["observations"] = std::move(obs);
      list.push_back(std::move(js));
    }
    Json j;
    j["status"] = all ? "pass" : "fail";
    j["suites"] = std::move(list);
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "suite,claim_id,n_min,n_max,status,counterexamples\n";
    for (const auto& s : suites) {
      for (const auto& r : s.reports) {
        os << s.suite << ',' << r.claim_id << ',' << r.n_min << ',' << r.n_max << ',' << (r.pass ? "pass" : "fail")
           << ',' << r.counterexamples.size() << '\n';
      }
    }
    return os.str();
  }
  for (const auto& s : suites) {
    os << "suite " << s.suite << " (n_max " << s.n_max << "): " << (s.all_pass() ? "PASS" : "FAIL") << '\n';
    for (const auto& r : s.reports) {
      os << "  " << (r.pass ? "pass" : "FAIL") << "  " << r.claim_id << "  [n " << r.n_min << ".." << r.n_max
         << "]\n";
      for (const auto& c : r.counterexamples)
        os << "        counterexample: " << c << '\n';
      for (const auto& o : r.observations)
        os << "        " << o << '\n';
    }
    for (const auto& o : s.observations)
      os << "  note  " << o.name << ": " << o.detail << '\n';
  }
  os << "overall: " << (all ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string render_signature(const Permutation& x, const ClassicalPattern& pattern, Format format)
{
  const auto sites = active_sites(x, pattern);
  const Signature sig = signature(x, pattern);
  const bool plateau = has_plateau(sig);
  if (format == Format::Json) {
    Json j;
    j["permutation"] = x.to_string();
    j["pattern"] = pattern.name();
    j["active_sites"] = sites;
    j["signature"] = sig.to_string();
    j["plateau"] = plateau;
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "permutation,pattern,active_sites,signature,plateau\n"
       << x.to_string() << ',' << pattern.name() << ',' << join(sites) << ',' << sig.to_string() << ','
       << (plateau ? "true" : "false") << '\n';
    return os.str();
  }
  os << "permutation  " << x.to_string() << '\n'
     << "pattern      " << pattern.name() << '\n'
     << "active sites " << join(sites) << '\n'
     << "signature    " << sig.to_string() << '\n'
     << "plateau      " << (plateau ? "yes" : "no") << '\n';
  return os.str();
}

std::string render_west_map(const Permutation& x, WestDirection direction, Format format)
{
  const bool forward = direction == WestDirection::From132To123;
  const auto source = ClassicalPattern::parse(forward ? "132" : "123");
  const auto target = ClassicalPattern::parse(forward ? "123" : "132");
  const Permutation y = west_map(x, direction);
  const Signature sig = signature(x, source);
  if (format == Format::Json) {
    Json j;
    j["input"] = x.to_string();
    j["source_pattern"] = source.name();
    j["target_pattern"] = target.name();
    j["signature"] = sig.to_string();
    j["output"] = y.to_string();
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "input,source_pattern,target_pattern,signature,output\n"
       << x.to_string() << ',' << source.name() << ',' << target.name() << ',' << sig.to_string() << ','
       << y.to_string() << '\n';
    return os.str();
  }
  os << x.to_string() << " (avoids " << source.name() << ") -> " << y.to_string() << " (avoids "
     << target.name() << "), signature " << sig.to_string() << '\n';
  return os.str();
}

std::string render_dyck(const Permutation& x, Format format)
{
  const BSequence b = rotem_b_sequence(x);
  const DyckPath path = b_to_dyck(b);
  const GridDecomposition grid = grid_cells(x);
  const bool dudu = contains_factor(path, "dudu");
  if (format == Format::Json) {
    Json j;
    j["permutation"] = x.to_string();
    j["b_sequence"] = b.values();
    j["dyck_path"] = path.word();
    j["compressed"] = path.compressed();
    j["strips"] = grid.strips();
    j["max_cell_occupancy"] = grid.max_occupancy();
    j["contains_dudu"] = dudu;
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "permutation,b_sequence,dyck_path,compressed,max_cell_occupancy,contains_dudu\n"
       << x.to_string() << ',' << join(b.values()) << ',' << path.word() << ',' << path.compressed() << ','
       << grid.max_occupancy() << ',' << (dudu ? "true" : "false") << '\n';
    return os.str();
  }
  os << "permutation        " << x.to_string() << '\n'
     << "b-sequence         " << join(b.values()) << '\n'
     << "dyck path          " << path.compressed() << '\n'
     << "word               " << path.word() << '\n'
     << "max cell occupancy " << grid.max_occupancy() << '\n'
     << "contains dudu      " << (dudu ? "yes" : "no") << '\n';
  return os.str();
}

std::string render_sequences(const std::vector<SequenceTable>& tables, Format format)
{
  if (format == Format::Json) {
    Json list = Json::array();
    for (const auto& t : tables) {
      Json j;
      j["name"] = t.name;
      j["offset"] = t.offset;
      Json terms = Json::array();
      for (const auto v : t.terms)
        terms.push_back(to_decimal(v));
      j["terms"] = std::move(terms);
      list.push_back(std::move(j));
    }
    return dump(list);
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "name,index,term\n";
    for (const auto& t : tables) {
      for (std::size_t i = 0; i < t.terms.size(); ++i)
        os << csv_field(t.name) << ',' << t.offset + static_cast<int>(i) << ',' << to_decimal(t.terms[i]) << '\n';
    }
    return os.str();
  }
  for (const auto& t : tables) {
    os << t.name << " (offset " << t.offset << "):";
    for (const auto v : t.terms)
      os << ' ' << to_decimal(v);
    os << '\n';
  }
  return os.str();
}

std::string render_conjecture(const ConjectureResult& result, Format format)
{
  if (format == Format::Json) {
    Json j;
    j["first"] = table_json(result.first);
    j["second"] = table_json(result.second);
    j["report"] = report_json(result.report);
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "machine,n,statistic,index,count\n";
    for (const auto* t : {&result.first, &result.second}) {
      for (std::size_t i = 0; i < t->by_first_entry.size(); ++i)
        os << csv_field(t->machine) << ',' << t->n << ",first_entry," << i + 1 << ',' << t->by_first_entry[i] << '\n';
      for (std::size_t i = 0; i < t->by_position_of_max.size(); ++i)
        os << csv_field(t->machine) << ',' << t->n << ",position_of_max," << i + 1 << ','
           << t->by_position_of_max[i] << '\n';
    }
    return os.str();
  }
  for (const auto* t : {&result.first, &result.second}) {
    os << "machine " << t->machine << "  n " << t->n << "  total " << t->total << '\n'
       << "  by first entry      " << counts_text(t->by_first_entry) << '\n'
       << "  by position of max  " << counts_text(t->by_position_of_max) << '\n';
  }
  os << "equidistribution: " << (result.report.pass ? "agree" : "DISAGREE") << '\n';
  for (const auto& c : result.report.counterexamples)
    os << "  " << c << '\n';
  return os.str();
}

} // namespace stacksort
