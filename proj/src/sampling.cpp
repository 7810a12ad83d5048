#include "pga/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pga/duality.hpp"
#include "pga/error.hpp"
#include "pga/oracle.hpp"

namespace pga {

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec combine(double ca, const Vec& a, double cb, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
  return out;
}

// The hyperplane with the given normal through x.
Multivector plane_through(const Vec& normal, const Vec& x) {
  return hyperplane(normal, -dot(normal, x)).blade();
}

Quad make_quad(const std::array<Multivector, 4>& blades) {
  return {GeometricObject::from_blade(blades[0]), GeometricObject::from_blade(blades[1]),
          GeometricObject::from_blade(blades[2]), GeometricObject::from_blade(blades[3])};
}

bool is_flat_row(ConfigVariant v) {
  switch (v) {
    case ConfigVariant::flats_meet_off_origin:
    case ConfigVariant::flats_through_origin:
    case ConfigVariant::finite_flats_parallel:
    case ConfigVariant::ideal_flats_secant: return true;
    default: return false;
  }
}

}  // namespace

double SampledPencil::expected() const {
  return angular ? oracle::sine_cr({params}) : oracle::classical_cr_affine(params);
}

bool supports(ConfigVariant v, int n) noexcept { return n >= 2 && (!is_flat_row(v) || n >= 3); }

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

double Sampler::weight() {
  const double mag = std::exp(uniform(std::log(0.1), std::log(10.0)));
  return std::bernoulli_distribution(0.5)(rng_) ? mag : -mag;
}

std::vector<std::vector<double>> Sampler::frame(int n) {
  std::normal_distribution<double> gauss;
  std::vector<Vec> q;
  while (static_cast<int>(q.size()) < n) {
    Vec v(n);
    for (double& c : v) c = gauss(rng_);
    for (const auto& b : q) v = combine(1.0, v, -dot(v, b), b);
    const double len = std::sqrt(dot(v, v));
    if (len < 1e-3) continue;
    for (double& c : v) c /= len;
    q.push_back(std::move(v));
  }
  return q;
}

std::array<double, 4> Sampler::positions() {
  for (;;) {
    std::array<double, 4> t;
    for (double& x : t) x = uniform(-3.0, 3.0);
    bool ok = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) ok = ok && std::abs(t[i] - t[j]) >= 0.2;
    if (ok) return t;
  }
}

std::array<double, 4> Sampler::angles() {
  constexpr double pi = std::numbers::pi;
  for (;;) {
    std::array<double, 4> a;
    for (double& x : a) x = uniform(0.0, pi);
    bool ok = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const double d = std::abs(a[i] - a[j]);
        ok = ok && std::min(d, pi - d) >= 0.15;
      }
    if (ok) return a;
  }
}

Quad Sampler::rescale(const Quad& q) {
  return make_quad({q[0].blade() * weight(), q[1].blade() * weight(), q[2].blade() * weight(),
                    q[3].blade() * weight()});
}

SampledPencil Sampler::pencil(ConfigVariant v, int n) {
  if (!supports(v, n))
    throw Error(ErrorKind::invalid_argument,
                std::string(name(v)) + " needs a larger dimension than " + std::to_string(n));
  const Signature sig(n);
  const auto q = frame(n);
  const Vec& u = q[0];
  const Vec& w = q[1];
  int k = n;
  if (is_flat_row(v))
    k = std::uniform_int_distribution<int>(2, n - 1)(rng_);
  else if (v != ConfigVariant::finite_points_collinear && v != ConfigVariant::ideal_points_on_ideal_line)
    k = 1;

  // Base point whose projection on span(u, w, container normals) stays away from 0.
  auto base_point = [&](int normals) {
    for (;;) {
      Vec x(n);
      for (double& c : x) c = uniform(-3.0, 3.0);
      double proj = 0.0;
      for (int i = 0; i < 2 + normals; ++i) proj += dot(x, q[i]) * dot(x, q[i]);
      if (std::sqrt(proj) >= 0.5) return x;
    }
  };
  // Wedge of the container hyperplanes with normals q[2..2+count) through x.
  auto container = [&](int count, const Vec& x) {
    Multivector c = Multivector::scalar(sig, 1.0);
    for (int i = 0; i < count; ++i) c = wedge(c, plane_through(q[2 + i], x));
    return c;
  };

  std::array<double, 4> params{};
  bool angular = false;
  std::array<Multivector, 4> blades{Multivector(sig), Multivector(sig), Multivector(sig), Multivector(sig)};

  switch (v) {
    case ConfigVariant::finite_points_collinear: {
      params = positions();
      Vec x0(n);
      for (double& c : x0) c = uniform(-3.0, 3.0);
      for (int i = 0; i < 4; ++i) blades[i] = point(combine(1.0, x0, params[i], u), weight()).blade();
      break;
    }
    case ConfigVariant::ideal_points_on_ideal_line: {
      angular = true;
      params = angles();
      for (int i = 0; i < 4; ++i)
        blades[i] = ideal_point(combine(std::cos(params[i]), u, std::sin(params[i]), w)).blade();
      break;
    }
    case ConfigVariant::hyperplanes_meet_off_origin:
    case ConfigVariant::hyperplanes_meet_through_origin: {
      angular = true;
      params = angles();
      const Vec x = v == ConfigVariant::hyperplanes_meet_off_origin ? base_point(0) : Vec(n, 0.0);
      for (int i = 0; i < 4; ++i)
        blades[i] = plane_through(combine(std::cos(params[i]), u, std::sin(params[i]), w), x);
      break;
    }
    case ConfigVariant::flats_meet_off_origin:
    case ConfigVariant::flats_through_origin: {
      angular = true;
      params = angles();
      const Vec x = v == ConfigVariant::flats_meet_off_origin ? base_point(k - 1) : Vec(n, 0.0);
      const Multivector c = container(k - 1, x);
      for (int i = 0; i < 4; ++i)
        blades[i] = wedge(c, plane_through(combine(std::cos(params[i]), u, std::sin(params[i]), w), x));
      break;
    }
    case ConfigVariant::finite_flats_parallel: {
      params = positions();
      const Vec x = base_point(k - 1);
      const Multivector c = container(k - 1, x);
      for (int i = 0; i < 4; ++i) blades[i] = wedge(c, hyperplane(u, -(dot(u, x) + params[i])).blade());
      break;
    }
    case ConfigVariant::ideal_flats_secant: {
      angular = true;
      params = angles();
      const Vec x = base_point(k - 2);
      const Multivector c = wedge(Multivector::basis_vector(sig, 0), container(k - 2, x));
      for (int i = 0; i < 4; ++i)
        blades[i] = wedge(c, hyperplane(combine(std::cos(params[i]), u, std::sin(params[i]), w), 0.0).blade());
      break;
    }
  }
  for (auto& b : blades) b *= weight();
  return {v, k, make_quad(blades), params, angular};
}

}  // namespace pga
