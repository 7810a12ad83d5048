#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pga/crossratio.hpp"
#include "pga/error.hpp"
#include "pga/verify.hpp"

namespace pga {

// A four-object input document. Object kinds: point {coords, weight},
// ideal_point {direction}, hyperplane {normal, offset}, flat {blades} and
// raw {blades}; blade names look like "e013" with "1" for the scalar.
struct InputDocument {
  int dimension = 0;
  std::vector<GeometricObject> objects;
  std::optional<double> tolerance;

  Quad quad() const;
};

// Throws Error(parse) naming the offending JSON pointer or text position.
// Object construction failures keep their own kind with the pointer prefixed.
InputDocument parse_input(std::string_view text);

struct ReportDocument {
  std::string command = "compute";
  int dimension = 0;
  double tolerance = kDefaultTolerance;
  std::optional<double> value;  // absent for classify
  std::string configuration;
  bool dualize_operands = false;
  std::string product;
  std::string operator_description;
  std::vector<std::pair<std::string, double>> common_blade;
  double max_residual = 0.0;
  std::array<int, 4> permutation = {0, 1, 2, 3};

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_report(const CrossRatioResult& r, int dimension, double tol);
ReportDocument make_report(const PencilAnalysis& a, int dimension, double tol);

// Numbers use 17 significant digits; infinite values become "+inf" / "-inf".
std::string to_json(const ReportDocument& r);
ReportDocument parse_report(std::string_view text);
std::string to_text(const ReportDocument& r);

std::string to_json(const VerifyReport& r);
std::string to_text(const VerifyReport& r);

// Text rendering of both operator tables, generated from the dispatch table.
std::string render_tables(int dimension);

// Process exit status for each error kind: 1 for input problems, 2 for
// classification failures, 3 for an indeterminate value.
int exit_code(ErrorKind kind) noexcept;
inline constexpr int kExitVerifyFailed = 4;

// {"error": kind, "message": text}
std::string to_json(const Error& e);

// Shared number formatting: %.17g, or "+inf" / "-inf".
std::string format_number(double x);

}  // namespace pga
