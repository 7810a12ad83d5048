#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pga {

// Failure taxonomy shared by the library and the command-line front end.
enum class ErrorKind {
  signature_mismatch,
  invalid_argument,
  degenerate_input,
  mixed_grades,
  not_distinct,
  no_common_pencil,
  ambiguous_configuration,
  indeterminate,
  parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// True for the kinds produced while recognising a four-object configuration.
constexpr bool is_classification_error(ErrorKind kind) noexcept {
  return kind == ErrorKind::mixed_grades || kind == ErrorKind::not_distinct ||
         kind == ErrorKind::no_common_pencil ||
         kind == ErrorKind::ambiguous_configuration;
}

// num / den on the extended real line. A zero denominator yields an infinity
// carrying the sign of the numerator; 0/0 throws ErrorKind::indeterminate.
double extended_ratio(double num, double den);

}  // namespace pga
