#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lef/cli.hpp"
#include "lef/io.hpp"

using namespace lef;

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string temp_file(std::string const& name, std::string const& text) {
    auto          p = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream f(p);
    f << text;
    return p;
  }

}  // namespace

TEST_CASE("nf") {
  auto r = run({"nf", "--system", "q", "--word", "xca"});
  REQUIRE(r.code == cli::exit_ok);
  REQUIRE(r.out == "xe\n");
  auto j = run({"--json", "nf", "--system", "q", "--word", "xca"});
  REQUIRE(parse_json(j.out) == parse_json(R"({"word": "xca", "normal_form": "xe"})"));
  REQUIRE(run({"nf", "--system", "fn:1", "--word", "xbxbxb"}).out == "cxcxcx\n");
}

TEST_CASE("embed exit codes") {
  auto r = run({"embed", "--partial", "bicyclic4", "--max-order", "4"});
  REQUIRE(r.code == cli::exit_negative);
  REQUIRE(r.out.find("exhausted") != std::string::npos);
  auto j = run({"--json", "embed", "--partial", "bicyclic4", "--max-order", "4"});
  REQUIRE(parse_json(j.out) == parse_json(R"({"status": "not_embeddable_up_to_bound", "bound": 4,
      "explored": 1, "orders": [4], "class": "any"})"));
  auto pt  = temp_file("lef_cli_pt.json", R"({"elements": ["g", "gg"], "products": {"g,g": "gg"}})");
  auto out = (std::filesystem::temp_directory_path() / "lef_cli_witness.json").string();
  auto e   = run({"embed", "--partial", pt, "--max-order", "3", "--out", out});
  REQUIRE(e.code == cli::exit_ok);
  REQUIRE(table_from_json(read_json_file(out)).order() == 2);
}

TEST_CASE("verify-appendix") {
  auto r = run({"verify-appendix", "--which", "A", "--max-exp", "4"});
  REQUIRE(r.code == cli::exit_ok);
  REQUIRE(r.out.find("26/26 instantiable rows joined") != std::string::npos);
  auto b = run({"--json", "verify-appendix", "--which", "B", "--max-exp", "3", "--n", "1"});
  REQUIRE(b.code == cli::exit_ok);
  auto j = parse_json(b.out);
  REQUIRE(j["table"] == "B");
  REQUIRE(j["n"] == 1);
  REQUIRE(j["rows"].size() == 62);
}

TEST_CASE("eq and replay") {
  auto r = run({"eq", "--preset", "t", "--u", "xax", "--v", "xex"});
  REQUIRE(r.code == cli::exit_ok);
  REQUIRE(r.out == "distinct (invariant): diff_ad_minus_bc\n");
  auto j = run({"--json", "eq", "--preset", "s", "--u", "xaxb", "--v", "xex"});
  auto v = parse_json(j.out);
  REQUIRE(v["status"] == "equal");
  REQUIRE(v["path"] == parse_json(R"(["xaxb", "xacx", "xcax", "xex"])"));
  REQUIRE(run({"replay", "--preset", "s", "--path", "xaxb,xacx,xcax,xex"}).code == cli::exit_ok);
  REQUIRE(run({"replay", "--preset", "s", "--path", "xaxb,xex"}).code != cli::exit_ok);
  REQUIRE(run({"eq", "--preset", "q", "--u", "xca", "--v", "xe"}).out.find("equal") == 0);
}

TEST_CASE("enumerate and assign") {
  auto j = run({"--json", "enumerate", "--order", "3", "--count"});
  REQUIRE(parse_json(j.out) == parse_json(R"({"order": 3, "class": "any", "count": 24})"));
  auto a = run({"assign", "--order", "3", "--class", "j-trivial", "--preset", "q", "--distinct", "xax=xex"});
  REQUIRE(a.code == cli::exit_ok);
  REQUIRE(a.out == "12 tables, 1274 assignments satisfy the relations, 0 keep every distinct pair apart\n");
  auto g = run({"assign", "--order", "2", "--class", "group", "--preset", "q", "--distinct", "xax=xex"});
  REQUIRE(g.code != cli::exit_ok);
}

TEST_CASE("errors exit 1 and name the problem") {
  auto r = run({"nf", "--system", "q", "--word", "xyz"});
  REQUIRE(r.code == cli::exit_error);
  REQUIRE(r.err.find("'y'") != std::string::npos);
  REQUIRE(run({"embed", "--partial", "/nonexistent/lef.json"}).code == cli::exit_error);
  REQUIRE(run({"bogus"}).code == cli::exit_error);
  REQUIRE(run({"nf", "--system", "q"}).code == cli::exit_error);
  auto t = temp_file("lef_cli_bad_table.json", R"({"order": 3, "table": [[0,1,2],[1,2,7],[2,0,1]]})");
  auto g = run({"green", "--table", t});
  REQUIRE(g.code == cli::exit_error);
  REQUIRE(g.err.find("/table/1/2") != std::string::npos);
}

TEST_CASE("lwf and approx") {
  auto out = (std::filesystem::temp_directory_path() / "lef_cli_wrap.json").string();
  auto r   = run({"lwf", "--preset", "t", "--n", "1", "--out", out});
  REQUIRE(r.code == cli::exit_ok);
  REQUIRE(run({"lwf", "--preset", "t", "--check", out}).code == cli::exit_ok);
  auto a = run({"--json", "approx", "integers", "--values", "3,7,12"});
  REQUIRE(a.code == cli::exit_ok);
  REQUIRE(parse_json(a.out) == parse_json(R"({"modulus": 6, "map": [3, 1, 0], "valid": true})"));
  auto c = run({"approx", "random", "--count", "10", "--seed", "4"});
  REQUIRE(c.code == cli::exit_ok);
}

TEST_CASE("green and classify") {
  auto g = run({"green", "--table", "cyclic:3"});
  REQUIRE(g.code == cli::exit_ok);
  REQUIRE_FALSE(g.out.empty());
  auto c = run({"--json", "classify", "--table", "enum:3:0"});
  REQUIRE(c.code == cli::exit_ok);
  REQUIRE(parse_json(c.out).is_object());
}

TEST_CASE("confluence and termination") {
  REQUIRE(run({"confluence", "--system", "q", "--bound", "2"}).code == cli::exit_ok);
  REQUIRE(run({"termination", "--system", "fn:2", "--bound", "4"}).code == cli::exit_ok);
  REQUIRE(run({"presets"}).out.find("bicyclic4") != std::string::npos);
}
