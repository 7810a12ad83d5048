#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pga/report.hpp"
#include "test_support.hpp"

using namespace pga;
using Vec = std::vector<double>;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(PGA_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorKind parse_error_kind(std::string_view text, std::string* message = nullptr) {
  try {
    parse_input(text).quad();
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  return ErrorKind::indeterminate;
}

}  // namespace

TEST_CASE("fixtures parse") {
  const auto doc = parse_input(fixture("points_2d.json"));
  CHECK(doc.dimension == 2);
  CHECK(doc.objects.size() == 4);
  CHECK(cross_ratio(doc.quad()).value == doctest::Approx(4.0 / 3.0).epsilon(1e-15));

  const auto par = parse_input(fixture("parallel_lines_3d.json"));
  const auto r = cross_ratio(par.quad());
  CHECK(r.configuration.variant == ConfigVariant::finite_flats_parallel);
  CHECK(r.value == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

  const auto lines = parse_input(fixture("concurrent_origin_lines_2d.json"));
  CHECK(cross_ratio(lines.quad()).value == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("input errors name the offending location") {
  std::string msg;
  CHECK(parse_error_kind(fixture("bad_blade.json"), &msg) == ErrorKind::parse);
  CHECK(msg.find("e10") != std::string::npos);
  CHECK(msg.find("/objects/") != std::string::npos);

  CHECK(parse_error_kind("{\"dimension\": 2, \"objects\": [", &msg) == ErrorKind::parse);
  CHECK(parse_error_kind(R"({"objects": []})", &msg) == ErrorKind::parse);
  CHECK(parse_error_kind(R"({"dimension": 2, "objects": [{"kind": "point", "coords": [0, 0]}]})", &msg) ==
        ErrorKind::parse);
  CHECK(parse_error_kind(R"({"dimension": 2, "objects": [{"kind": "blob"},
      {"kind": "point", "coords": [1, 0]}, {"kind": "point", "coords": [2, 0]},
      {"kind": "point", "coords": [3, 0]}]})", &msg) == ErrorKind::parse);
  CHECK(msg.find("/objects/0") != std::string::npos);
  CHECK(parse_error_kind(R"({"dimension": 2, "objects": [{"kind": "point", "coords": [0, 0, 1]},
      {"kind": "point", "coords": [1, 0]}, {"kind": "point", "coords": [2, 0]},
      {"kind": "point", "coords": [3, 0]}]})",
                         &msg) == ErrorKind::parse);
  CHECK(parse_error_kind(R"({"dimension": 2, "objects": [{"kind": "point", "coords": [0, 0], "weight": 0},
      {"kind": "point", "coords": [1, 0]}, {"kind": "point", "coords": [2, 0]},
      {"kind": "point", "coords": [3, 0]}]})",
                         &msg) == ErrorKind::invalid_argument);
  CHECK(msg.find("/objects/0") != std::string::npos);
  CHECK(parse_error_kind(R"({"dimension": 3, "objects": [{"kind": "flat", "blades": {"e1": 1}},
      {"kind": "point", "coords": [1, 0, 0]}, {"kind": "point", "coords": [2, 0, 0]},
      {"kind": "point", "coords": [3, 0, 0]}]})") != ErrorKind::indeterminate);

  const auto mixed = parse_input(fixture("mixed_grades_2d.json"));
  CHECK_THROWS_AS(classify(mixed.quad()), Error);
}

TEST_CASE("exit codes") {
  for (ErrorKind k : {ErrorKind::signature_mismatch, ErrorKind::invalid_argument, ErrorKind::degenerate_input,
                      ErrorKind::mixed_grades, ErrorKind::not_distinct, ErrorKind::no_common_pencil,
                      ErrorKind::ambiguous_configuration, ErrorKind::indeterminate, ErrorKind::parse}) {
    const int code = exit_code(k);
    CHECK(code >= 1);
    CHECK(code <= 3);
    CHECK(code != kExitVerifyFailed);
    CHECK((code == 2) == is_classification_error(k));
  }
  CHECK(exit_code(ErrorKind::parse) == 1);
  CHECK(exit_code(ErrorKind::no_common_pencil) == 2);
  CHECK(exit_code(ErrorKind::indeterminate) == 3);
  const auto j = nlohmann::json::parse(to_json(Error(ErrorKind::mixed_grades, "a \"quoted\" message")));
  CHECK(j["error"] == std::string(to_string(ErrorKind::mixed_grades)));
  CHECK(j["message"] == "a \"quoted\" message");
}

TEST_CASE("report round trip") {
  const auto doc = parse_input(fixture("parallel_lines_3d.json"));
  const auto report = make_report(cross_ratio(doc.quad()), doc.dimension, 1e-9);
  CHECK(report.configuration == "FiniteFlatsParallel");
  CHECK(report.operator_description == "×⋆ (no operand dual)");
  CHECK(report.value.has_value());
  CHECK(parse_report(to_json(report)) == report);
  const auto j = nlohmann::json::parse(to_json(report));
  CHECK(j["value"].get<double>() == *report.value);

  auto inf = report;
  inf.value = -INFINITY;
  CHECK(nlohmann::json::parse(to_json(inf))["value"] == "-inf");
  CHECK(parse_report(to_json(inf)) == inf);
  inf.value = INFINITY;
  CHECK(parse_report(to_json(inf)) == inf);

  const auto cls = make_report(analyze_pencil(doc.quad()), doc.dimension, 1e-9);
  CHECK_FALSE(cls.value.has_value());
  CHECK_FALSE(nlohmann::json::parse(to_json(cls)).contains("value"));
  CHECK(parse_report(to_json(cls)) == cls);

  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-INFINITY) == "-inf");
  CHECK(to_text(report).find("FiniteFlatsParallel") != std::string::npos);
}

TEST_CASE("operator tables") {
  const std::string t3 = render_tables(3);
  CHECK(t3 == render_tables(3));
  CHECK(t3.find("FinitePointsCollinear") != std::string::npos);
  auto row_of = [&](const std::string& text, const std::string& table, const std::string& key) {
    const auto start = text.find(table);
    const auto at = text.find("\n  " + key, start) + 3;
    return text.substr(at, text.find('\n', at) - at);
  };
  CHECK(row_of(t3, "Table 2", "FinitePointsCollinear").find("×⋆ (no operand dual)") != std::string::npos);
  CHECK(row_of(t3, "Table 2", "IdealFlatsSecant").find("× on dualized operands") != std::string::npos);
  CHECK(row_of(t3, "Table 1", "FinitePointsCollinear").find("P_i ∨ P_j") != std::string::npos);
  CHECK(row_of(t3, "Table 1", "HyperplanesMeetThroughOrigin").find("Π_i ∧ Π_j") != std::string::npos);
  for (ConfigVariant v : kAllVariants) CHECK(t3.find(std::string(name(v))) != std::string::npos);
  CHECK(render_tables(5).find("n = 5") != std::string::npos);
}

TEST_CASE("verify report serialization") {
  VerifyOptions opt;
  opt.dim = 3;
  opt.trials = 20;
  const auto report = run_verify(opt);
  CHECK(report.all_passed());
  const auto j = nlohmann::json::parse(to_json(report));
  CHECK(j.is_object());
  CHECK(to_text(report).find("FinitePointsCollinear") != std::string::npos);

  opt.trials = 0;
  CHECK(run_verify(opt).rows.empty());
}
