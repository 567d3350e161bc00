#include "report.hpp"

#include <json.hpp>

#include <doctest.h>

using namespace stacksort;
using Json = nlohmann::ordered_json;

TEST_CASE("format names")
{
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("text") == Format::Text);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("trace JSON schema")
{
  const Json j = Json::parse(render_trace(Machine::parse("132", "321"), parse_permutation("2 3 1 4"), Format::Json));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items())
    keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"machine", "input", "first_stack", "second_stack", "output", "sorted"});
  CHECK(j["first_stack"]["output"] == Json({3, 4, 1, 2}));
  CHECK(j["output"] == Json({3, 1, 2, 4}));
  CHECK(j["sorted"] == false);
  const auto& step = j["first_stack"]["steps"][2];
  CHECK(step["action"] == "POP_BLOCKED");
  CHECK(step["stack"] == Json({2}));
}

TEST_CASE("enumeration CSV row")
{
  const auto r = enumerate_machine(8, Machine::parse("132", "321"));
  CHECK(render_enumeration(r, Format::Csv) == "sigma,tau,n,count\n132,321,8,606\n");
  const Json j = Json::parse(render_enumeration(r, Format::Json));
  CHECK(j["count"] == 606);
  CHECK(j["witnesses"].size() == 606);
}

TEST_CASE("sequence JSON keeps 128-bit values exact")
{
  const Json j = Json::parse(render_sequences({catalan(60)}, Format::Json));
  CHECK(j[0]["name"].is_string());
  CHECK(j[0]["offset"] == 0);
  CHECK(j[0]["terms"][60] == to_decimal(catalan(60).term(60)));
}

TEST_CASE("suite rendering is stable")
{
  const auto a = render_suites(run_suite("dyck", 5, 1), Format::Json);
  const auto b = render_suites(run_suite("dyck", 5, 8), Format::Json);
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j["status"] == "pass");
  CHECK(j["suites"][0]["reports"][0]["status"] == "pass");
}

TEST_CASE("other renderings")
{
  const Permutation x = parse_permutation("4 5 2 3 1");
  CHECK(render_signature(x, ClassicalPattern::parse("132"), Format::Text).find("4.4.3.3.2") != std::string::npos);
  CHECK(render_west_map(x, WestDirection::From132To123, Format::Csv).find("4 2 1 5 3") != std::string::npos);
  const Json d = Json::parse(render_dyck(parse_permutation("8 11 6 10 4 9 7 5 3 1 2"), Format::Json));
  CHECK(d["compressed"] == "udu^2du^2dud^2ud^2u^3d^3ud");
  CHECK(d["contains_dudu"] == false);
  const auto c = render_conjecture(conjecture_tables(3), Format::Csv);
  CHECK(c.rfind("machine,n,statistic,index,count\n", 0) == 0);
}
