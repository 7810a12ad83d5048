#include "pga/objects.hpp"

#include <cmath>

#include "pga/duality.hpp"
#include "pga/error.hpp"

namespace pga {

std::string_view to_string(Role role) noexcept {
  switch (role) {
    case Role::point: return "point";
    case Role::hyperplane: return "hyperplane";
    case Role::flat: return "flat";
  }
  return "unknown";
}

namespace {

bool is_blade(const Multivector& b, double tol) {
  const double scale = b.norm_inf();
  return wedge(b, b).norm_inf() <= tol * scale * scale;
}

Signature signature_for(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "coordinate list is empty");
  return Signature(static_cast<int>(n));
}

Multivector euclidean_vector(const Signature& sig, std::span<const double> values, double e0) {
  std::vector<double> coeffs(sig.generators());
  coeffs[0] = e0;
  for (std::size_t i = 0; i < values.size(); ++i) coeffs[i + 1] = values[i];
  return Multivector::vector(sig, coeffs);
}

bool all_zero(std::span<const double> v) {
  for (double x : v)
    if (x != 0.0) return false;
  return true;
}

}  // namespace

GeometricObject GeometricObject::from_blade(Multivector mv, double tol) {
  if (mv.is_zero()) throw Error(ErrorKind::degenerate_input, "geometric object is zero");
  const auto g = mv.homogeneous_grade();
  if (!g) throw Error(ErrorKind::mixed_grades, "geometric object is not homogeneous: " + to_string(mv));
  const int n = mv.signature().n();
  if (*g < 1 || *g > n)
    throw Error(ErrorKind::invalid_argument,
                "grade " + std::to_string(*g) + " is not a geometric object grade for n = " +
                    std::to_string(n));
  if (*g == 2 && !is_blade(mv, tol))
    throw Error(ErrorKind::invalid_argument, "grade-2 input is not a blade");
  if (n > 2 && *g == n - 1 && !is_blade(hodge_dual(mv), tol))
    throw Error(ErrorKind::invalid_argument, "grade-(n-1) input is not a blade");
  const Role role = *g == n ? Role::point : (*g == 1 ? Role::hyperplane : Role::flat);
  return GeometricObject(std::move(mv), *g, role);
}

GeometricObject point(std::span<const double> coords, double weight) {
  const Signature sig = signature_for(coords.size());
  if (weight == 0.0)
    throw Error(ErrorKind::invalid_argument, "finite point needs a nonzero weight");
  std::vector<double> scaled(coords.begin(), coords.end());
  for (double& x : scaled) x *= weight;
  return GeometricObject::from_blade(hodge_dual(euclidean_vector(sig, scaled, weight)));
}

double point_weight(const GeometricObject& p) {
  if (p.role() != Role::point) throw Error(ErrorKind::invalid_argument, "object is not a point");
  return hodge_undual(p.blade()).coefficient(BladeIndex{1});
}

std::vector<double> point_coords(const GeometricObject& p) {
  if (p.role() != Role::point) throw Error(ErrorKind::invalid_argument, "object is not a point");
  const Multivector v = hodge_undual(p.blade());
  const double w = v.coefficient(BladeIndex{1});
  if (w == 0.0) throw Error(ErrorKind::invalid_argument, "ideal point has no coordinates");
  std::vector<double> x(p.dimension());
  for (int i = 1; i <= p.dimension(); ++i) x[i - 1] = v.coefficient(BladeIndex{1u << i}) / w;
  return x;
}

GeometricObject ideal_point(std::span<const double> direction) {
  const Signature sig = signature_for(direction.size());
  if (all_zero(direction)) throw Error(ErrorKind::invalid_argument, "ideal point needs a nonzero direction");
  return GeometricObject::from_blade(hodge_dual(euclidean_vector(sig, direction, 0.0)));
}

GeometricObject hyperplane(std::span<const double> normal, double offset) {
  const Signature sig = signature_for(normal.size());
  if (all_zero(normal))
    throw Error(ErrorKind::invalid_argument,
                "hyperplane needs a nonzero normal; use ideal_hyperplane for e0");
  return GeometricObject::from_blade(euclidean_vector(sig, normal, offset));
}

GeometricObject ideal_hyperplane(const Signature& sig) {
  return GeometricObject::from_blade(Multivector::basis_vector(sig, 0));
}

GeometricObject flat_from_join(std::span<const GeometricObject> points, double tol) {
  if (points.size() < 2) throw Error(ErrorKind::invalid_argument, "join needs at least two points");
  Multivector acc = points.front().blade();
  double scale = acc.norm_inf();
  for (const auto& p : points) {
    if (p.role() != Role::point) throw Error(ErrorKind::invalid_argument, "join operands must be points");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    acc = regressive(acc, points[i].blade());
    scale *= points[i].blade().norm_inf();
  }
  if (acc.norm_inf() <= tol * scale)
    throw Error(ErrorKind::degenerate_input, "join of dependent points vanishes");
  return GeometricObject::from_blade(std::move(acc), tol);
}

GeometricObject flat_from_meet(std::span<const GeometricObject> hyperplanes, double tol) {
  if (hyperplanes.empty()) throw Error(ErrorKind::invalid_argument, "meet needs at least one hyperplane");
  for (const auto& h : hyperplanes) {
    if (h.grade() != 1) throw Error(ErrorKind::invalid_argument, "meet operands must be hyperplanes");
  }
  Multivector acc = hyperplanes.front().blade();
  double scale = acc.norm_inf();
  for (std::size_t i = 1; i < hyperplanes.size(); ++i) {
    acc = wedge(acc, hyperplanes[i].blade());
    scale *= hyperplanes[i].blade().norm_inf();
  }
  if (acc.norm_inf() <= tol * scale)
    throw Error(ErrorKind::degenerate_input, "meet of dependent hyperplanes vanishes");
  return GeometricObject::from_blade(std::move(acc), tol);
}

ObjectClass classify_object(const Multivector& a, double tol) {
  if (a.is_zero()) throw Error(ErrorKind::degenerate_input, "cannot classify the zero object");
  const auto [euclid, ideal] = euclidean_split(a);
  const double scale = a.norm_inf();
  return {euclid.norm_inf() > tol * scale, ideal.norm_inf() <= tol * scale};
}

Proportionality proportional(const Multivector& a, const Multivector& b, double tol) {
  require_same_signature(a, b);
  if (a.is_zero()) throw Error(ErrorKind::degenerate_input, "proportionality reference is zero");
  double ab = 0.0;
  for (const auto& [blade, c] : a.terms()) ab += c * b.coefficient(blade);
  double aa = 0.0;
  for (const auto& [blade, c] : a.terms()) aa += c * c;
  Proportionality out;
  out.lambda = ab / aa;
  const double bn = b.norm_inf();
  out.residual = bn == 0.0 ? 0.0 : (b - a * out.lambda).norm_inf() / bn;
  out.accepted = out.residual <= tol;
  return out;
}

Multivector unitize(const Multivector& a, double tol) {
  const ObjectClass cls = classify_object(a, tol);
  const auto [euclid, ideal] = euclidean_split(a);
  Multivector out = a / (cls.finite ? euclid.norm2() : ideal.norm2());
  const double floor = tol * out.norm_inf();
  for (const auto& [blade, c] : out.terms()) {
    if (std::abs(c) > floor) {
      if (c < 0.0) out *= -1.0;
      break;
    }
  }
  return out;
}

GeometricObject unitize(const GeometricObject& a, double tol) {
  return GeometricObject::from_blade(unitize(a.blade(), tol), tol);
}

GeometricObject dual(const GeometricObject& a) {
  return GeometricObject::from_blade(hodge_dual(a.blade()));
}

}  // namespace pga
