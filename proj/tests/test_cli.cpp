#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "secmat/analysis.hpp"
#include "secmat/report.hpp"
#include "support.hpp"

using secmat::test::fixture_path;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = secmat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("secmat_cli_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("secmat prints the published matrix") {
  const auto r = run({"secmat", fixture_path("ex_first")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "   _0 _1 _2 _3 _4 _5 _6 _7\n"
        "1:  1  1  1  0  0  0  0  0\n"
        "2:  1  2  3  3  2  1  0  0\n"
        "3:  1  3  6  9 11 12 12 12\n");
  CHECK(r.err.empty());
}

TEST_CASE("secmat on truncations, the zero ideal and with max-degree") {
  const auto t = run({"secmat", "--truncate", "3", fixture_path("ex_dim_deg")});
  CHECK(t.code == 0);
  CHECK(t.out ==
        "   _0 _1 _2 _3 _4\n"
        "1:  1  1  1  0  0\n"
        "2:  1  2  3  1  1\n"
        "3:  1  3  6  7  8\n"
        "4:  1  4 10 17 25\n");
  const auto zero = temp_file("zero.ideal", "ring x, y, z;\nideal 0;\n");
  const auto z = run({"secmat", "--max-degree", "3", zero});
  CHECK(z.code == 0);
  CHECK(z.out ==
        "   _0 _1 _2 _3\n"
        "1:  1  1  1  1\n"
        "2:  1  2  3  4\n"
        "3:  1  3  6 10\n");
  const auto clipped = run({"secmat", "--max-degree", "2", fixture_path("ex_first")});
  CHECK(clipped.out ==
        "   _0 _1 _2\n"
        "1:  1  1  1\n"
        "2:  1  2  3\n"
        "3:  1  3  6\n");
}

TEST_CASE("oracle flag") {
  const auto r = run({"secmat", "--oracle", fixture_path("ex_first")});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle=agrees(24)\n") != std::string::npos);
}

TEST_CASE("analyze") {
  const auto r = run({"analyze", fixture_path("ex_first")});
  CHECK(r.code == 0);
  for (const char* line : {"dim=1\n", "deg=12\n", "reg=6\n", "r1=5\n", "r2=2\n", "saturated=true\n"}) {
    CHECK(r.out.find(line) != std::string::npos);
  }
  const auto rob = run({"analyze", fixture_path("ex_robbiano")});
  CHECK(rob.out.find("saturated=true\n") != std::string::npos);
  CHECK(rob.out.find("truncation(3).saturated=false\n") != std::string::npos);

  const auto principal = temp_file("principal.ideal", "ring x, y, z;\nideal x^2;\n");
  const auto p = run({"analyze", principal});
  CHECK(p.out.find("dim=2\ndeg=2\n") != std::string::npos);
  CHECK(p.out.find("gcd=x^2\n") != std::string::npos);

  const auto five = run({"analyze", fixture_path("ex_saturated_five")});
  CHECK(five.out.find("n-i = 3") != std::string::npos);
  CHECK(five.out.find("n-i+1 = 4") != std::string::npos);
  CHECK(five.out.find("gcd=x\n") != std::string::npos);
}

TEST_CASE("structured output round-trips through the library") {
  const auto r = run({"analyze", "--json", fixture_path("ex_gcd")});
  REQUIRE(r.code == 0);
  const auto parsed = secmat::report_from_json(r.out);
  const auto doc = secmat::test::load_fixture("ex_gcd");
  secmat::AnalysisOptions opt;
  opt.truncations = doc.truncations;
  CHECK(parsed == secmat::analyze(doc.ideal(), opt));
  CHECK(parsed.gcd.has_value());
  CHECK(parsed.gcd->polynomial == "x + y");
}

TEST_CASE("rgin and lt") {
  const auto g = run({"rgin", fixture_path("ex_first")});
  CHECK(g.out == "(x^3, x^2*y^2, x*y^4, y^6)\nseed=42\n");
  CHECK(run({"rgin", "--seed", "7", fixture_path("rgin_remark")}).out == "(x^5, x^4*y, x^3*y^3)\nseed=7\n");
  CHECK(run({"rgin", fixture_path("ex_8_1_J")}).out == "(x^2, x*y, y^2, x*z^2, y*z^2, z^3)\nseed=42\n");
  const auto lt = run({"lt", fixture_path("ex_first")});
  CHECK(lt.out == "(x*y^2, x^4, x^3*y*z^2, y^5*z^2)\norder=degrevlex\n");
  CHECK(run({"lt", "--order", "lex", fixture_path("ex_first")}).code == 0);
  CHECK(run({"lt", "--order", "nope", fixture_path("ex_first")}).code == 3);
}

TEST_CASE("output is deterministic") {
  for (const char* cmd : {"secmat", "analyze", "rgin"}) {
    const auto a = run({cmd, "--seed", "123", fixture_path("ex_before_reg")});
    const auto b = run({cmd, "--seed", "123", fixture_path("ex_before_reg")});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("exit codes") {
  const auto bad = temp_file("bad.ideal", "ring x, y;\nideal x^2 + ;\n");
  const auto r = run({"secmat", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(r.out.empty());
  const auto inhom = temp_file("inhom.ideal", "ring x, y;\nideal x^2 + y;\n");
  CHECK(run({"secmat", inhom}).code == 3);
  CHECK(run({"analyze", inhom}).code == 3);
  CHECK(run({"secmat", "/nonexistent/file.ideal"}).code == 3);
  CHECK(run({"secmat", "--order", "lex", fixture_path("ex_first")}).code == 3);
  CHECK(run({"frobnicate", fixture_path("ex_first")}).code == 2);
  CHECK(run({"secmat"}).code == 2);
  CHECK(run({"secmat", "--seed", "abc", fixture_path("ex_first")}).code == 2);
  CHECK(run({}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("analyze") != std::string::npos);
}
