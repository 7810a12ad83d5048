#pragma once

#include <array>
#include <vector>

#include "pga/crossratio.hpp"

// Classical ground truth for the cross-ratio and a brute-force Cayley rule.
// Nothing here calls the PGA product machinery; coordinates are read straight
// off blade coefficients.
namespace pga::oracle {

// Homogeneous point (x, w) of the projective line.
struct Homog2 {
  double x = 0.0;
  double w = 1.0;
};

struct PencilAngles {
  std::array<double, 4> alpha{};  // radians
};

// (|13| |24|) / (|14| |23|) with |ij| = x_i w_j - x_j w_i.
double classical_cr_determinant(const std::array<Homog2, 4>& p);

// ((t1 - t3)(t2 - t4)) / ((t1 - t4)(t2 - t3)).
double classical_cr_affine(const std::array<double, 4>& t);

// |13| / |23| on the raw representatives. Only meaningful for w = 1 inputs;
// rescaling a representative changes the value.
double affine_ratio_determinant(const std::array<Homog2, 3>& p);

// sin(a13) sin(a24) / (sin(a14) sin(a23)) with a_ij = a_i - a_j.
double sine_cr(const PencilAngles& a);

// Signed positions of four finite points along their common line, measured
// from the first point along a unit direction. Throws NoCommonPencil when
// the points are not collinear within tol.
std::array<double, 4> line_parameters(const Quad& objs, double tol = kDefaultTolerance);

// Angles of an angular pencil inside the 2-plane spanned by the normalized
// Euclidean parts (ideal parts for all-ideal pencils). Throws NoCommonPencil
// when those parts do not span exactly a 2-plane.
PencilAngles pencil_angles(const Quad& objs, double tol = kDefaultTolerance);

struct OrderedBladeProduct {
  int sign = 1;
  std::vector<int> factors;
};

// e_a e_b on ascending generator lists: concatenate, bubble sort flipping the
// sign per adjacent swap, and contract equal neighbours through the metric.
OrderedBladeProduct naive_blade_product(const std::vector<int>& a, const std::vector<int>& b,
                                        const Signature& sig);

// Coordinates of a finite point read from its blade: the e_{1..n} coefficient
// is the weight and each e_0-carrying coefficient is matched to its axis with
// a bubble-sorted sign.
std::vector<double> point_coordinates(const GeometricObject& p);

}  // namespace pga::oracle
