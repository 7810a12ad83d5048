#pragma once

#include <span>
#include <vector>

#include "pga/multivector.hpp"
#include "pga/split.hpp"

namespace pga {

inline constexpr double kDefaultTolerance = 1e-9;

enum class Role { point, hyperplane, flat };

std::string_view to_string(Role role) noexcept;

// A nonzero homogeneous blade tagged with the role its grade implies:
// grade n is a point, grade 1 a hyperplane, 1 < k < n an intermediate flat.
class GeometricObject {
 public:
  // Validates homogeneity, nonzero-ness and the grade range. Grade-2 and
  // grade-(n-1) inputs are additionally checked to be blades (B ^ B = 0,
  // tested on the dual for grade n-1).
  static GeometricObject from_blade(Multivector mv, double tol = kDefaultTolerance);

  const Multivector& blade() const noexcept { return mv_; }
  const Signature& signature() const noexcept { return mv_.signature(); }
  int dimension() const noexcept { return mv_.signature().n(); }
  int grade() const noexcept { return grade_; }
  Role role() const noexcept { return role_; }

 private:
  GeometricObject(Multivector mv, int grade, Role role)
      : mv_(std::move(mv)), grade_(grade), role_(role) {}

  Multivector mv_;
  int grade_;
  Role role_;
};

// P = (w x_1 e_1 + ... + w x_n e_n + w e_0)*. Requires weight != 0.
GeometricObject point(std::span<const double> coords, double weight = 1.0);
// x_i = a_i / a_0 of the undualized point. Throws for ideal points.
std::vector<double> point_coords(const GeometricObject& p);
// Coefficient of e_0 in the undualized point; zero for ideal points.
double point_weight(const GeometricObject& p);

// V = (d_1 e_1 + ... + d_n e_n)*.
GeometricObject ideal_point(std::span<const double> direction);
// Pi = n_1 e_1 + ... + n_n e_n + offset e_0, the set n.x + offset = 0.
GeometricObject hyperplane(std::span<const double> normal, double offset);
// e_0
GeometricObject ideal_hyperplane(const Signature& sig);

// Iterated regressive product of the points.
GeometricObject flat_from_join(std::span<const GeometricObject> points,
                               double tol = kDefaultTolerance);
// Iterated wedge of the hyperplanes.
GeometricObject flat_from_meet(std::span<const GeometricObject> hyperplanes,
                               double tol = kDefaultTolerance);

struct ObjectClass {
  bool finite = false;
  bool through_origin = false;
};

ObjectClass classify_object(const Multivector& a, double tol = kDefaultTolerance);
inline ObjectClass classify_object(const GeometricObject& a, double tol = kDefaultTolerance) {
  return classify_object(a.blade(), tol);
}

// Least-squares lambda with b ~ lambda a over the union of stored blades.
// residual = |b - lambda a|_inf / |b|_inf.
struct Proportionality {
  double lambda = 0.0;
  double residual = 0.0;
  bool accepted = false;
};

Proportionality proportional(const Multivector& a, const Multivector& b,
                             double tol = kDefaultTolerance);

// Scaled to unit Euclidean 2-norm when finite, otherwise unit ideal 2-norm.
// The first nonzero coefficient in blade order is made positive.
Multivector unitize(const Multivector& a, double tol = kDefaultTolerance);
GeometricObject unitize(const GeometricObject& a, double tol = kDefaultTolerance);

// Hodge dual of an object: grade k becomes grade n + 1 - k.
GeometricObject dual(const GeometricObject& a);

}  // namespace pga
