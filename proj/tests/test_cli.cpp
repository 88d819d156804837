#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "germforge/cli.hpp"
#include "germforge/error.hpp"
#include "germforge/jetmorse.hpp"
#include "germforge/problem.hpp"

using namespace germforge;
using json = nlohmann::json;

namespace {
const char* x2y = R"(# cusp
ring x y;
ideal I = x^2, y;
poly f = y^2 + x^3;
)";

json run_json(const std::string& cmd, const std::string& input, std::map<std::string, std::string> flags = {},
              int* code = nullptr) {
  cli::Invocation inv{cmd, input, std::move(flags), ""};
  auto out = cli::run(inv);
  if (code) *code = out.exit_code;
  return json::parse(out.document);
}

void expect_parse_error(const std::string& text, int line, int column) {
  CAPTURE(text);
  try {
    parse_problem(text);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}
}  // namespace

TEST_CASE("problem files") {
  auto p = parse_problem(R"(
ring x y z;   # three variables
ideal I = x^2, (y + z)*x, y;
poly f = 1/2 x^2 + y/3;
unfolding F params s t = x^2 + s*y + t*(y + z);
option theta-mode = via-subideal;
option seeds = 3, 5;
)");
  CHECK(p.ring->size() == 3);
  REQUIRE(p.ideals.count("I"));
  CHECK(p.ideals.at("I").generators().size() == 3);
  CHECK(p.polys.at("f").to_string() == "1/2*x^2 + 1/3*y");
  CHECK(p.unfoldings.at("F").parameter_count() == 2);
  CHECK(p.options.at("theta-mode") == "via-subideal");
  CHECK(p.options.at("seeds") == "3, 5");

  expect_parse_error("ring x y;\npoly f = x + w;\n", 2, 14);
  expect_parse_error("ring x y;\npoly f = x;\npoly f = y;\n", 3, 7);
  expect_parse_error("ideal I = x;\nring x;\n", 1, 1);
  expect_parse_error("ring x;\nideal I = x,, x^2;\n", 2, 13);
  expect_parse_error("ring x;\npoly f = x\n", 2, 1);
  expect_parse_error("ring x;\nunfolding F params x = x;\n", 2, 20);
  expect_parse_error("ring x;\nmatrix M = x;\n", 2, 1);
  expect_parse_error("ring x;\noption a = 1;\noption a = 2;\n", 3, 7);
  CHECK_THROWS_AS(parse_problem("# nothing\n"), ParseError);
}

TEST_CASE("codim command") {
  int code = -1;
  auto d = run_json("codim", x2y, {}, &code);
  CHECK(code == 0);
  CHECK(d["status"] == "ok");
  CHECK(d["results"]["c_ext"] == 3);
  CHECK(d["results"]["milnor"] == 2);

  d = run_json("codim", "ring x y;\nideal I = x^2, y;\npoly f = x;\n", {}, &code);
  CHECK(code == 2);
  CHECK(d["error"]["code"] == "F_NOT_IN_IDEAL");

  d = run_json("codim", "ring x y;\nideal A = x^2;\nideal B = y;\npoly f = x^2;\n", {}, &code);
  CHECK(code == 2);
  CHECK(d["error"]["code"] == "UNKNOWN_NAME");
  d = run_json("codim", "ring x y;\nideal A = x^2;\nideal B = y;\npoly f = x^2;\n", {{"ideal", "B"}}, &code);
  CHECK(d["error"]["code"] == "F_NOT_IN_IDEAL");

  d = run_json("codim", x2y, {{"order", "lex"}}, &code);
  CHECK(code == 2);
  CHECK(d["error"]["code"] == "USAGE");
  d = run_json("nonsense", x2y, {}, &code);
  CHECK(code == 2);
  CHECK(d["error"]["code"] == "UNKNOWN_COMMAND");
}

TEST_CASE("identical inputs give identical documents") {
  for (const char* cmd : cli::commands) {
    if (std::string(cmd) == "versal-check" || std::string(cmd) == "classify") continue;
    cli::Invocation inv{cmd, x2y, {}, ""};
    auto a = cli::run(inv);
    auto b = cli::run(inv);
    CAPTURE(cmd);
    CHECK(a.document == b.document);
    CHECK(a.exit_code == 0);
  }
  cli::Invocation timed{"codim", x2y, {{"timing", "true"}}, ""};
  CHECK(json::parse(cli::run(timed).document).contains("timing_ms"));
  CHECK_FALSE(json::parse(cli::run({"codim", x2y, {}, ""}).document).contains("timing_ms"));
}

TEST_CASE("seed precedence") {
  std::string with_option = std::string(x2y) + "option seeds = 5;\n";
  auto seeds = [](const cli::Invocation& inv) { return json::parse(cli::run(inv).document)["results"]["seeds"]; };
  CHECK(seeds({"split", x2y, {}, ""}) == json({11, 13}));
  CHECK(seeds({"split", with_option, {}, ""}) == json({5}));
  CHECK(seeds({"split", with_option, {}, "7"}) == json({7}));
  CHECK(seeds({"split", with_option, {{"seeds", "3"}}, "7"}) == json({3}));
  auto bad = json::parse(cli::run({"split", x2y, {{"seeds", "3,x"}}, ""}).document);
  CHECK(bad["error"]["code"] == "USAGE");
}

TEST_CASE("morse modes and exit codes") {
  int code = -1;
  auto d = run_json("morse", "ring x y;\nideal I = y^2;\npoly f = y^2;\n", {}, &code);
  CHECK(code == 3);
  CHECK(d["error"]["code"] == "RADICAL_UNAVAILABLE");
  d = run_json("morse", "ring x y;\nideal I = y^2;\npoly f = y^2;\n", {{"saturate", "true"}}, &code);
  CHECK(code == 0);
  CHECK(d["results"]["morse"] == 0);
  d = run_json("morse", x2y, {{"assume-reduced", "true"}}, &code);
  CHECK(code == 0);
  CHECK(d["results"]["morse"] == 2);
  CHECK(std::find(d["warnings"].begin(), d["warnings"].end(), "ASSUMED_REDUCED") != d["warnings"].end());
  d = run_json("morse", x2y, {{"assume-reduced", "true"}, {"saturate", "true"}}, &code);
  CHECK(code == 2);
  d = run_json("morse", x2y, {{"method", "both"}}, &code);
  CHECK(d["results"]["agree"] == true);
}

TEST_CASE("theta modes") {
  std::string text = "ring x y;\nideal J = y;\nideal I = y^2;\npoly f = y^2 + x*y^2;\n";
  auto direct = run_json("theta", text, {{"ideal", "I"}});
  auto sub = run_json("theta", text, {{"ideal", "I"}, {"theta-mode", "via-subideal"}, {"subideal", "J"}});
  CHECK(direct["warnings"].empty());
  CHECK(sub["warnings"] == json({"THETA_VIA_SUBIDEAL"}));
  int code = -1;
  auto missing = run_json("theta", text, {{"ideal", "I"}, {"theta-mode", "via-subideal"}}, &code);
  CHECK(code == 2);
  auto wrong = run_json("theta", text, {{"ideal", "J"}, {"theta-mode", "via-subideal"}, {"subideal", "I"}}, &code);
  CHECK(wrong["error"]["code"] == "PRECONDITION_VIOLATED");
}

TEST_CASE("jet-dump round trip") {
  for (int k : {1, 2}) {
    auto d = run_json("jet-dump", x2y, {{"jet-order", std::to_string(k)}});
    REQUIRE(d["status"] == "ok");
    auto back = parse_problem(d["results"]["problem"].get<std::string>(), MonomialOrder::global());
    auto p = parse_problem(x2y);
    auto ctx = jet_context(p.ideals.at("I"), k);
    REQUIRE(back.ring->names() == ctx.ring->names());
    const auto& J1 = back.ideals.at("J1").generators();
    const auto& J2 = back.ideals.at("J2").generators();
    REQUIRE(J1.size() == ctx.J1.generators().size());
    REQUIRE(J2.size() == ctx.J2.generators().size());
    for (std::size_t i = 0; i < J1.size(); ++i) CHECK(J1[i] == ctx.J1.generators()[i]);
    for (std::size_t i = 0; i < J2.size(); ++i) CHECK(J2[i] == ctx.J2.generators()[i]);
  }
}

TEST_CASE("versal-build output declares a versal unfolding") {
  auto d = run_json("versal-build", x2y);
  std::string text = std::string(x2y) + d["results"]["declaration"].get<std::string>() + "\n";
  auto c = run_json("versal-check", text);
  CHECK(c["results"]["versal"] == true);
  CHECK(c["results"]["parameters"] == 3);
}
