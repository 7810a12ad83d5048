#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pga/crossratio.hpp"

namespace pga {

enum class Suite { oracle, duality, motor, collapse, representative };

inline constexpr std::array<Suite, 5> kAllSuites = {Suite::oracle, Suite::duality, Suite::motor,
                                                    Suite::collapse, Suite::representative};

std::string_view name(Suite s) noexcept;

// |a - b| / max(1, |a|, |b|); zero for equal infinities, +inf for unequal ones.
double relative_difference(double a, double b) noexcept;

struct VerifyOptions {
  int dim = 3;
  int trials = 100;
  std::uint64_t seed = 42;
  double tol = 1e-9;            // oracle, duality and motor suites
  double exact_tol = 1e-12;     // collapse and representative suites
  std::optional<ConfigVariant> config;  // all variants when empty
  std::vector<Suite> suites{kAllSuites.begin(), kAllSuites.end()};
};

struct SuiteSummary {
  Suite suite;
  ConfigVariant variant;
  int trials = 0;
  int passed = 0;
  double worst = 0.0;
  std::string first_failure;

  bool ok() const noexcept { return passed == trials; }
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<SuiteSummary> rows;

  bool all_passed() const noexcept;
};

VerifyReport run_verify(const VerifyOptions& opts);

// Seed of one (suite, variant) stream, mixed from the user seed.
std::uint64_t stream_seed(std::uint64_t seed, Suite s, ConfigVariant v) noexcept;

}  // namespace pga
