#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pga/objects.hpp"

namespace pga {

// The eight pencil configurations that admit a cross-ratio.
enum class ConfigVariant {
  finite_points_collinear,
  ideal_points_on_ideal_line,
  hyperplanes_meet_off_origin,
  hyperplanes_meet_through_origin,
  flats_meet_off_origin,
  flats_through_origin,
  finite_flats_parallel,
  ideal_flats_secant,
};

inline constexpr std::array<ConfigVariant, 8> kAllVariants = {
    ConfigVariant::finite_points_collinear,   ConfigVariant::ideal_points_on_ideal_line,
    ConfigVariant::hyperplanes_meet_off_origin, ConfigVariant::hyperplanes_meet_through_origin,
    ConfigVariant::flats_meet_off_origin,     ConfigVariant::flats_through_origin,
    ConfigVariant::finite_flats_parallel,     ConfigVariant::ideal_flats_secant,
};

// CamelCase names used on the command line and in reports.
std::string_view name(ConfigVariant v) noexcept;
std::optional<ConfigVariant> parse_variant(std::string_view name);

// The configuration reached by Hodge-dualizing all four objects of a pencil
// in the generic case (rows sharing a colour in the operator tables).
ConfigVariant dual_partner(ConfigVariant v) noexcept;

enum class Product { commutator, commutator_dual };

std::string_view symbol(Product p) noexcept;  // "×" or "×⋆"

struct MeasureOperator {
  bool dualize_operands = false;
  Product product = Product::commutator;

  friend bool operator==(const MeasureOperator&, const MeasureOperator&) = default;
};

// "×⋆ (no operand dual)" or "× on dualized operands".
std::string describe(const MeasureOperator& op);

struct Configuration {
  ConfigVariant variant;
  MeasureOperator op;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// The unified operator of each configuration; the dispatch table.
Configuration configuration(ConfigVariant v) noexcept;

// Grade of the four objects of a configuration in dimension n; flat rows
// return std::nullopt since any 1 < k < n qualifies.
std::optional<int> object_grade(ConfigVariant v, int n) noexcept;

using Quad = std::array<GeometricObject, 4>;

struct CrossRatioResult {
  double value = 0.0;  // extended real: finite, +inf or -inf
  Configuration configuration;
  Multivector common_blade;  // unitized blade every pair measure is proportional to
  double max_residual = 0.0;
  std::array<int, 4> permutation = {0, 1, 2, 3};  // input index placed in each slot
};

// Everything learned while recognising a pencil.
struct PencilAnalysis {
  Configuration configuration;
  std::vector<Multivector> measures;  // pairs (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
  std::array<bool, 6> coincident{};   // pair represents one object twice
  Multivector common_blade;
  double max_residual = 0.0;
};

// Index into PencilAnalysis::measures for the pair (i, j), i < j.
int pair_slot(int i, int j);

// Pair measure of the configuration: operands are Hodge-dualized first when
// the operator asks for it, then combined with the commutator or the
// commutator dual.
Multivector pair_measure(const GeometricObject& a, const GeometricObject& b, const Configuration& cfg);

enum class ClassicalProduct { wedge, regressive, commutator, commutator_dual };

std::string_view symbol(ClassicalProduct p) noexcept;  // "∧", "∨", "×" or "×⋆"

// Operator of the classical table: wedge when the operands entering a
// commutator are 1-vectors, regressive when the operands entering a
// commutator dual are n-vectors, the unified product otherwise. A grade of 0
// stands for a generic flat grade 1 < k < n.
ClassicalProduct classical_product(const Configuration& cfg, int grade, int n) noexcept;

// The same measure written with the classical operators wherever they apply:
// wedge on grade-1 operands, regressive product on grade-n operands.
Multivector classical_pair_measure(const GeometricObject& a, const GeometricObject& b,
                                   const Configuration& cfg);

// Recognises the configuration and verifies that all six pair measures are
// proportional to one common blade within tol. Coincident (proportional)
// objects are tolerated and contribute an exact zero measure; four copies of
// one object are rejected as NotDistinct.
PencilAnalysis analyze_pencil(const Quad& objs, double tol = kDefaultTolerance);
Configuration classify(const Quad& objs, double tol = kDefaultTolerance);

// {A1,A2;A3,A4} = <M13 M24>_0 / <M14 M23>_0 with M_ij the pair measure.
CrossRatioResult cross_ratio(const Quad& objs, double tol = kDefaultTolerance);

// Three finite points and one ideal point on their line. The ideal point is
// swapped into slot 4 (reported in the permutation) and the cross-ratio
// formula is evaluated as is, giving (t1 - t3) / (t2 - t3).
CrossRatioResult affine_ratio(const Quad& objs, double tol = kDefaultTolerance);

// Finite collinear points with the geometric products of the measures
// replaced by inner products.
double inner_product_variant(const Quad& objs, double tol = kDefaultTolerance);

}  // namespace pga
