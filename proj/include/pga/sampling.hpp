#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "pga/crossratio.hpp"

namespace pga {

// A generated pencil together with the parameters it was built from.
// Angular pencils carry angles in radians, the others signed positions.
struct SampledPencil {
  ConfigVariant variant;
  int grade = 0;
  Quad objects;
  std::array<double, 4> params{};
  bool angular = false;

  // Classical value of the generating parameters.
  double expected() const;
};

// Flat rows need a grade strictly between 1 and n, so n >= 3.
bool supports(ConfigVariant v, int n) noexcept;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  SampledPencil pencil(ConfigVariant v, int n);

  double uniform(double lo, double hi);
  // Nonzero factor with random sign and magnitude in [0.1, 10].
  double weight();
  // Random orthonormal basis of R^n, rows are the vectors.
  std::vector<std::vector<double>> frame(int n);
  // Four values in [-3, 3], pairwise at least 0.2 apart.
  std::array<double, 4> positions();
  // Four angles in [0, pi), pairwise at least 0.15 apart modulo pi.
  std::array<double, 4> angles();
  // Each object multiplied by an independent weight().
  Quad rescale(const Quad& q);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pga
