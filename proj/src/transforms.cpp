#include "pga/transforms.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "pga/error.hpp"
#include "pga/split.hpp"

namespace pga {

Versor Versor::from_multivector(Multivector mv, double tol) {
  for (int g : mv.grades())
    if (g % 2 != 0) throw Error(ErrorKind::invalid_argument, "versor has odd grade parts");
  const Multivector unit = mv * reverse(mv) - Multivector::scalar(mv.signature(), 1.0);
  if (unit.norm_inf() > tol)
    throw Error(ErrorKind::invalid_argument, "versor is not unit: V ~V differs from 1");
  return Versor(std::move(mv));
}

Versor Versor::identity(const Signature& sig) { return Versor(Multivector::scalar(sig, 1.0)); }

Versor reflect_compose(std::span<const GeometricObject> planes, double tol) {
  if (planes.empty() || planes.size() % 2 != 0)
    throw Error(ErrorKind::invalid_argument, "versor needs an even, nonzero number of reflections");
  Multivector acc = Multivector::scalar(planes.front().signature(), 1.0);
  for (const auto& p : planes) {
    if (p.grade() != 1) throw Error(ErrorKind::invalid_argument, "reflections need hyperplanes");
    const double len = euclidean_split(p.blade()).euclid.norm2();
    if (std::abs(len - 1.0) > tol) throw Error(ErrorKind::invalid_argument, "reflection hyperplane is not unit");
    acc = acc * p.blade();
  }
  return Versor::from_multivector(std::move(acc), 1e3 * tol);
}

GeometricObject sandwich(const Versor& v, const GeometricObject& x) {
  return GeometricObject::from_blade(grade_select(v.mv() * x.blade() * reverse(v.mv()), x.grade()));
}

Versor random_motor(std::uint64_t seed, const Signature& sig) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> offset(-5.0, 5.0);
  const int count = std::bernoulli_distribution(0.5)(rng) ? 4 : 2;
  std::vector<GeometricObject> planes;
  for (int i = 0; i < count; ++i) {
    std::vector<double> normal(sig.n());
    double len = 0.0;
    while (len < 1e-3) {
      len = 0.0;
      for (double& c : normal) {
        c = gauss(rng);
        len += c * c;
      }
      len = std::sqrt(len);
    }
    for (double& c : normal) c /= len;
    planes.push_back(hyperplane(normal, offset(rng)));
  }
  return reflect_compose(planes);
}

Mobius1D Mobius1D::make(double a, double b, double c, double d) {
  if (a * d - b * c == 0.0) throw Error(ErrorKind::invalid_argument, "Mobius map is singular (ad - bc = 0)");
  return {a, b, c, d};
}

double mobius_apply(const Mobius1D& m, double t) {
  if (std::isinf(t)) {
    if (m.c != 0.0) return m.a / m.c;
    return (m.a / m.d > 0.0) ? t : -t;
  }
  return extended_ratio(m.a * t + m.b, m.c * t + m.d);
}

}  // namespace pga
