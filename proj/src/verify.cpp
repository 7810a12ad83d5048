#include "pga/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pga/duality.hpp"
#include "pga/error.hpp"
#include "pga/oracle.hpp"
#include "pga/sampling.hpp"
#include "pga/transforms.hpp"

namespace pga {

std::string_view name(Suite s) noexcept {
  switch (s) {
    case Suite::oracle: return "oracle";
    case Suite::duality: return "duality";
    case Suite::motor: return "motor";
    case Suite::collapse: return "collapse";
    case Suite::representative: return "representative";
  }
  return "unknown";
}

double relative_difference(double a, double b) noexcept {
  if (std::isinf(a) || std::isinf(b)) return a == b ? 0.0 : INFINITY;
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

bool VerifyReport::all_passed() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteSummary& r) { return r.ok(); });
}

std::uint64_t stream_seed(std::uint64_t seed, Suite s, ConfigVariant v) noexcept {
  // splitmix64 finalizer over the packed stream id
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (1 + 16 * static_cast<std::uint64_t>(s) +
                                                   static_cast<std::uint64_t>(v));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

Quad map_quad(const Quad& q, const std::function<GeometricObject(const GeometricObject&)>& f) {
  return {f(q[0]), f(q[1]), f(q[2]), f(q[3])};
}

// Worst deviation of one trial; throws on structural failures.
double oracle_trial(const SampledPencil& s, double tol) {
  const CrossRatioResult r = cross_ratio(s.objects, tol);
  if (r.configuration.variant != s.variant)
    throw Error(ErrorKind::ambiguous_configuration,
                "classified as " + std::string(name(r.configuration.variant)));
  double reference = s.expected();
  if (s.variant == ConfigVariant::finite_points_collinear)
    reference = oracle::classical_cr_affine(oracle::line_parameters(s.objects, tol));
  else if (s.angular)
    reference = oracle::sine_cr(oracle::pencil_angles(s.objects, tol));
  return std::max(relative_difference(r.value, reference), relative_difference(r.value, s.expected()));
}

double duality_trial(const SampledPencil& s, double tol) {
  const double direct = cross_ratio(s.objects, tol).value;
  const double dualized = cross_ratio(map_quad(s.objects, [](const GeometricObject& o) { return dual(o); }), tol).value;
  return relative_difference(direct, dualized);
}

double motor_trial(const SampledPencil& s, std::uint64_t seed, double tol) {
  const Versor m = random_motor(seed, s.objects[0].signature());
  const double before = cross_ratio(s.objects, tol).value;
  const double after = cross_ratio(map_quad(s.objects, [&](const GeometricObject& o) { return sandwich(m, o); }), tol).value;
  return relative_difference(before, after);
}

double collapse_trial(const SampledPencil& s, double tol) {
  const Configuration cfg = classify(s.objects, tol);
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Multivector a = pair_measure(s.objects[i], s.objects[j], cfg);
      const Multivector b = classical_pair_measure(s.objects[i], s.objects[j], cfg);
      worst = std::max(worst, (a - b).norm_inf() / std::max(1.0, a.norm_inf()));
    }
  return worst;
}

double representative_trial(const SampledPencil& s, Sampler& rng, double tol) {
  return relative_difference(cross_ratio(s.objects, tol).value, cross_ratio(rng.rescale(s.objects), tol).value);
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  if (opts.dim < 2) throw Error(ErrorKind::invalid_argument, "verify needs --dim >= 2");
  if (opts.trials < 0) throw Error(ErrorKind::invalid_argument, "trial count must be non-negative");
  VerifyReport report{opts, {}};
  if (opts.trials == 0) return report;
  for (Suite suite : opts.suites) {
    for (ConfigVariant v : kAllVariants) {
      if (opts.config && *opts.config != v) continue;
      if (!supports(v, opts.dim)) continue;
      SuiteSummary row;
      row.suite = suite;
      row.variant = v;
      Sampler rng(stream_seed(opts.seed, suite, v));
      const double limit = (suite == Suite::collapse || suite == Suite::representative) ? opts.exact_tol : opts.tol;
      for (int t = 0; t < opts.trials; ++t) {
        ++row.trials;
        std::string failure;
        try {
          const SampledPencil s = rng.pencil(v, opts.dim);
          double dev = 0.0;
          switch (suite) {
            case Suite::oracle: dev = oracle_trial(s, opts.tol); break;
            case Suite::duality: dev = duality_trial(s, opts.tol); break;
            case Suite::motor: dev = motor_trial(s, rng.engine()(), opts.tol); break;
            case Suite::collapse: dev = collapse_trial(s, opts.tol); break;
            case Suite::representative: dev = representative_trial(s, rng, opts.tol); break;
          }
          row.worst = std::max(row.worst, dev);
          if (dev <= limit)
            ++row.passed;
          else
            failure = "deviation " + std::to_string(dev);
        } catch (const Error& e) {
          failure = std::string(to_string(e.kind())) + ": " + e.what();
          row.worst = INFINITY;
        }
        if (!failure.empty() && row.first_failure.empty())
          row.first_failure = "trial " + std::to_string(t) + ": " + failure;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace pga
