#include <doctest.h>

#include <json.hpp>

#include "secmat/analysis.hpp"
#include "secmat/errors.hpp"
#include "secmat/gin.hpp"
#include "secmat/report.hpp"
#include "secmat/sectional_matrix.hpp"
#include "support.hpp"

using namespace secmat;
using secmat::test::load_fixture;

TEST_CASE("matrix layout") {
  const std::vector<std::vector<std::int64_t>> rows = {{1, 1, 0}, {1, 2, 111}};
  CHECK(format_matrix(rows) ==
        "   _0 _1  _2\n"
        "1:  1  1   0\n"
        "2:  1  2 111\n");
  CHECK(format_matrix(rows, 1) ==
        "   _0 _1\n"
        "1:  1  1\n"
        "2:  1  2\n");
}

TEST_CASE("analysis of the first example") {
  const auto doc = load_fixture("ex_first");
  const auto r = analyze(doc.ideal());
  CHECK(r.dim == 1);
  CHECK(r.deg == 12);
  CHECK(r.reg == 6);
  CHECK(r.generator_degree == 4);
  REQUIRE(r.reduction_numbers.size() == 3);
  CHECK_FALSE(r.reduction_numbers[0].has_value());
  CHECK(r.reduction_numbers[1] == 5);
  CHECK(r.reduction_numbers[2] == 2);
  CHECK(r.reduction_number == 5);
  CHECK(r.rgin == std::vector<std::string>{"x^3", "x^2*y^2", "x*y^4", "y^6"});
  CHECK(r.saturated);
  const auto text = format_report(r);
  CHECK(text.find("dim=1\ndeg=12\n") != std::string::npos);
  CHECK(text.find("r1=5\nr2=2\nr=5\n") != std::string::npos);
  CHECK(text.find("reg=6\n") != std::string::npos);
}

TEST_CASE("analysis of the zero ideal and of truncations") {
  const RingPtr ring = secmat::test::standard_ring(3);
  const auto z = analyze(IdealPresentation(ring, {}));
  CHECK(z.dim == 3);
  CHECK(z.deg == 1);
  CHECK(z.reg == 0);

  const auto doc = load_fixture("ex_dim_deg");
  AnalysisOptions opt;
  opt.truncations = doc.truncations;
  const auto r = analyze(doc.ideal(), opt);
  CHECK(r.dim == 3);
  CHECK(r.deg == 1);
  REQUIRE(r.truncations.size() == 2);
  for (const auto& t : r.truncations) {
    CHECK(t.dim == 3);
    CHECK(t.deg == 1);
  }
}

TEST_CASE("analysis with the oracle cross-check") {
  AnalysisOptions opt;
  opt.oracle = true;
  const auto r = analyze(load_fixture("ex_first").ideal(), opt);
  bool noted = false;
  for (const auto& n : r.notes) noted = noted || n.find("oracle") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("structured reports round-trip") {
  for (const char* name : {"ex_first", "ex_gcd", "ex_robbiano", "ex_saturated_five", "ex_dim_deg"}) {
    CAPTURE(name);
    const auto doc = load_fixture(name);
    AnalysisOptions opt;
    opt.truncations = doc.truncations;
    const auto r = analyze(doc.ideal(), opt);
    const auto json = report_to_json(r);
    const auto back = report_from_json(json);
    CHECK(back == r);
    CHECK(report_to_json(back) == json);
    CHECK(nlohmann::json::parse(json)["schema"] == std::string(kReportSchema));
  }
}

TEST_CASE("malformed structured reports are rejected") {
  CHECK_THROWS_AS(report_from_json("{}"), SemanticError);
  CHECK_THROWS_AS(report_from_json("not json"), SemanticError);
  auto tree = nlohmann::json::parse(report_to_json(analyze(load_fixture("ex_first").ideal())));
  tree["schema"] = "secmat-report/0";
  CHECK_THROWS_AS(report_from_json(tree.dump()), SemanticError);
  tree["schema"] = std::string(kReportSchema);
  tree["dim"] = "one";
  CHECK_THROWS_AS(report_from_json(tree.dump()), SemanticError);
}

TEST_CASE("matrix and ideal trees") {
  const auto doc = load_fixture("ex_first");
  const auto gin = rgin(doc.ideal(), 42);
  const auto m = sectional_matrix(doc.ideal(), gin);
  const auto tree = nlohmann::json::parse(matrix_to_json(m, *doc.ring, gin, 5));
  CHECK(tree["schema"] == std::string(kMatrixSchema));
  CHECK(tree["matrix"][2] == nlohmann::json({1, 3, 6, 9, 11, 12}));
  CHECK(tree["reg"] == 6);
  const auto itree = nlohmann::json::parse(ideal_to_json(gin.rgin, *doc.ring, "rgin", "degrevlex", &gin));
  CHECK(itree["generators"] == nlohmann::json({"x^3", "x^2*y^2", "x*y^4", "y^6"}));
  CHECK(itree["seed"] == 42);
}
