#include <doctest.h>

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "triplet_cli/cli.hpp"

using namespace triplet::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "triplet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(TRIPLET_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("info") {
  const auto a1 = invoke({"info", "--type", "A1", "-o", "text"});
  CHECK(a1.code == kOk);
  CHECK(a1.out.find("h               2") != std::string::npos);
  CHECK(a1.out.find("Lambda0         {0, w1}") != std::string::npos);

  const auto a2 = nlohmann::json::parse(invoke({"info", "--type", "A2"}).out);
  CHECK(a2["weyl_order"] == 6);
  CHECK(a2["theta_root_coords"] == nlohmann::json::array({1, 1}));

  const auto e8 = nlohmann::json::parse(invoke({"info", "--type", "E8"}).out);
  CHECK(e8["weyl_order"] == 696729600);
  CHECK(e8["lambda0"].size() == 1);

  CHECK(invoke({"info", "--type", "B2"}).code == kBadArguments);
  CHECK(invoke({"info"}).code == kBadArguments);
}

TEST_CASE("lambda-list") {
  const auto a1 = nlohmann::json::parse(invoke({"lambda-list", "--type", "A1", "-p", "2"}).out);
  CHECK(a1["count"] == 4);
  CHECK(a1["lambdas"].size() == 4);
  for (const auto& row : a1["lambdas"]) CHECK(row["narrow"] == true);

  const auto a2 = nlohmann::json::parse(invoke({"lambda-list", "--type", "A2", "-p", "2"}).out);
  CHECK(a2["lambdas"].size() == 12);
  int narrow = 0;
  for (const auto& row : a2["lambdas"])
    if (row["narrow"] == true) {
      ++narrow;
      CHECK(row["sp"] == nlohmann::json::array({0, 0}));
    }
  CHECK(narrow == 3);
  const auto only = nlohmann::json::parse(invoke({"lambda-list", "--type", "A2", "-p", "2", "--narrow-only"}).out);
  CHECK(only["lambdas"].size() == 3);

  CHECK(invoke({"lambda-list", "--type", "A2", "-p", "1"}).code == kBadArguments);
  CHECK(invoke({"lambda-list", "--type", "A2"}).code == kBadArguments);
}

TEST_CASE("char outputs match the golden files") {
  const auto w = invoke({"char", "w", "--type", "A1", "-p", "2", "--alpha", "0", "--sp", "0", "--order", "9"});
  CHECK(w.code == kOk);
  CHECK(w.out == read_golden("a1_p2_w_order9.json"));
  const auto m = invoke({"char", "module", "--type", "A2", "-p", "3", "--lambda0", "1,0", "--sp", "0", "--order", "10"});
  CHECK(m.code == kOk);
  CHECK(m.out == read_golden("a2_p3_module_lambda0_w1_order10.json"));
}

TEST_CASE("char kinds and formats") {
  const auto w = invoke({"char", "w", "--type", "A2", "-p", "4", "--alpha", "1,1", "--sp", "1,0", "--order", "8"});
  const auto wa = invoke({"char", "w-affine", "--type", "A2", "-p", "4", "--alpha", "1,1", "--sp", "1,0", "--order", "8"});
  CHECK(w.code == kOk);
  CHECK(w.out == wa.out);

  const auto lat = nlohmann::json::parse(invoke({"char", "lattice", "--type", "A1", "-p", "2", "--sp", "0", "--order", "2"}).out);
  CHECK(lat["coeffs"] == nlohmann::json::array({1, 2, 3}));
  CHECK(lat["base"]["num"] == 1);
  CHECK(lat["base"]["den"] == 12);

  const auto csv = invoke({"char", "w", "--type", "A1", "-p", "2", "--order", "2", "-o", "csv"});
  CHECK(csv.out == "n,exponent_num,exponent_den,coeff\n0,1,12,1\n1,13,12,0\n2,25,12,1\n");

  const auto text = invoke({"char", "module", "--type", "A1", "-p", "2", "--order", "2", "-o", "text"});
  CHECK(text.code == kOk);
  CHECK_FALSE(text.out.empty());
}

TEST_CASE("exit codes") {
  // argument errors
  CHECK(invoke({"char", "w", "--type", "A2", "-p", "3", "--alpha", "1,0"}).code == kBadArguments);
  CHECK(invoke({"char", "w", "--type", "A2", "-p", "3", "--alpha", "x"}).code == kBadArguments);
  CHECK(invoke({"char", "w", "--type", "A2", "-p", "3", "--sp", "3,0"}).code == kBadArguments);
  CHECK(invoke({"char", "w", "--type", "A2", "-p", "3", "--lambda0", "1,1"}).code == kBadArguments);
  CHECK(invoke({"char", "sideways", "--type", "A2", "-p", "3"}).code == kBadArguments);
  CHECK(invoke({"char", "w", "--type", "A2", "-p", "3", "-o", "xml"}).code == kBadArguments);
  CHECK(invoke({"verify", "no_such_check"}).code == kBadArguments);
  CHECK(invoke({"frobnicate"}).code == kBadArguments);
  CHECK(invoke({}).code == kBadArguments);

  // precondition
  const auto wide = invoke({"char", "w-affine", "--type", "A2", "-p", "2", "--sp", "1,0"});
  CHECK(wide.code == kPrecondition);
  CHECK(wide.err.find("= 3 > p = 2") != std::string::npos);

  // resource cap
  const auto cap = invoke({"char", "w", "--type", "E8", "-p", "30", "--weyl-cap", "1000"});
  CHECK(cap.code == kCapExceeded);
  CHECK(cap.err.find("696729600") != std::string::npos);

  // arithmetic that leaves the 64-bit range is reported, never wrapped
  CHECK(invoke({"char", "w", "--type", "A1", "-p", "2000000000", "--order", "3"}).code == kVerifyFailed);
}

TEST_CASE("verify") {
  const auto all = invoke({"verify", "all", "--type", "A2", "-p", "3", "--order", "20"});
  CHECK(all.code == kOk);
  const auto parsed = nlohmann::json::parse(all.out);
  CHECK(parsed["passed"] == true);
  CHECK(parsed["reports"].size() == 12);
  for (const auto& r : parsed["reports"]) CHECK_FALSE(r.contains("runtime_ms"));

  CHECK(invoke({"verify", "exponent_identity", "--type", "A3", "-p", "5"}).code == kOk);

  const auto boundary = invoke({"verify", "lemma215_boundary_report", "--type", "A1", "-p", "2"});
  CHECK(boundary.code == kOk);
  const auto b = nlohmann::json::parse(boundary.out);
  CHECK(b["reports"][0]["informational"].size() == 1);

  const auto timed = nlohmann::json::parse(invoke({"verify", "lambda_count", "--type", "A1", "--timings"}).out);
  CHECK(timed["reports"][0].contains("runtime_ms"));

  const auto csv = invoke({"verify", "strange_formula", "--type", "A1", "-o", "csv"});
  CHECK(csv.code == kOk);
  CHECK(csv.out.rfind("check,", 0) == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "all", "--type", "A1,A2", "-p", "3", "--order", "10"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::vector<std::string> list{"lambda-list", "--type", "A3", "-p", "4", "-o", "text"};
  CHECK(invoke(list).out == invoke(list).out);
}
