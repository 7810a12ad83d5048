#pragma once

#include <cstdint>
#include <span>

#include "pga/objects.hpp"

namespace pga {

// Even unit element acting on objects by X -> V X ~V.
class Versor {
 public:
  // Checks for even grades and V ~V = 1 within tol.
  static Versor from_multivector(Multivector mv, double tol = 1e-12);
  static Versor identity(const Signature& sig);

  const Multivector& mv() const noexcept { return mv_; }

 private:
  explicit Versor(Multivector mv) : mv_(std::move(mv)) {}
  Multivector mv_;
};

// Ordered geometric product of an even number of unit hyperplanes.
Versor reflect_compose(std::span<const GeometricObject> planes, double tol = 1e-12);

// V X ~V, projected back onto the grade of X.
GeometricObject sandwich(const Versor& v, const GeometricObject& x);

// Two or four reflections in random unit hyperplanes with offsets in [-5, 5].
// Deterministic in the seed.
Versor random_motor(std::uint64_t seed, const Signature& sig);

// t -> (a t + b) / (c t + d) on the extended real line.
struct Mobius1D {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  // Throws InvalidArgument when ad - bc = 0.
  static Mobius1D make(double a, double b, double c, double d);
};

double mobius_apply(const Mobius1D& m, double t);

}  // namespace pga
