#include "pga/crossratio.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pga/duality.hpp"
#include "pga/error.hpp"

namespace pga {

std::string_view name(ConfigVariant v) noexcept {
  switch (v) {
    case ConfigVariant::finite_points_collinear: return "FinitePointsCollinear";
    case ConfigVariant::ideal_points_on_ideal_line: return "IdealPointsOnIdealLine";
    case ConfigVariant::hyperplanes_meet_off_origin: return "HyperplanesMeetOffOrigin";
    case ConfigVariant::hyperplanes_meet_through_origin: return "HyperplanesMeetThroughOrigin";
    case ConfigVariant::flats_meet_off_origin: return "FlatsMeetOffOrigin";
    case ConfigVariant::flats_through_origin: return "FlatsThroughOrigin";
    case ConfigVariant::finite_flats_parallel: return "FiniteFlatsParallel";
    case ConfigVariant::ideal_flats_secant: return "IdealFlatsSecant";
  }
  return "Unknown";
}

std::optional<ConfigVariant> parse_variant(std::string_view text) {
  for (ConfigVariant v : kAllVariants)
    if (name(v) == text) return v;
  return std::nullopt;
}

ConfigVariant dual_partner(ConfigVariant v) noexcept {
  switch (v) {
    case ConfigVariant::finite_points_collinear: return ConfigVariant::hyperplanes_meet_off_origin;
    case ConfigVariant::hyperplanes_meet_off_origin: return ConfigVariant::finite_points_collinear;
    case ConfigVariant::ideal_points_on_ideal_line: return ConfigVariant::hyperplanes_meet_through_origin;
    case ConfigVariant::hyperplanes_meet_through_origin: return ConfigVariant::ideal_points_on_ideal_line;
    case ConfigVariant::flats_meet_off_origin: return ConfigVariant::finite_flats_parallel;
    case ConfigVariant::finite_flats_parallel: return ConfigVariant::flats_meet_off_origin;
    case ConfigVariant::flats_through_origin: return ConfigVariant::ideal_flats_secant;
    case ConfigVariant::ideal_flats_secant: return ConfigVariant::flats_through_origin;
  }
  return v;
}

std::string_view symbol(Product p) noexcept {
  return p == Product::commutator ? "×" : "×⋆";
}

std::string describe(const MeasureOperator& op) {
  std::string s(symbol(op.product));
  return s + (op.dualize_operands ? " on dualized operands" : " (no operand dual)");
}

Configuration configuration(ConfigVariant v) noexcept {
  using enum Product;
  switch (v) {
    case ConfigVariant::finite_points_collinear: return {v, {false, commutator_dual}};
    case ConfigVariant::ideal_points_on_ideal_line: return {v, {true, commutator}};
    case ConfigVariant::hyperplanes_meet_off_origin: return {v, {true, commutator_dual}};
    case ConfigVariant::hyperplanes_meet_through_origin: return {v, {false, commutator}};
    case ConfigVariant::flats_meet_off_origin: return {v, {true, commutator_dual}};
    case ConfigVariant::flats_through_origin: return {v, {false, commutator}};
    case ConfigVariant::finite_flats_parallel: return {v, {false, commutator_dual}};
    case ConfigVariant::ideal_flats_secant: return {v, {true, commutator}};
  }
  return {v, {}};
}

std::optional<int> object_grade(ConfigVariant v, int n) noexcept {
  switch (v) {
    case ConfigVariant::finite_points_collinear:
    case ConfigVariant::ideal_points_on_ideal_line: return n;
    case ConfigVariant::hyperplanes_meet_off_origin:
    case ConfigVariant::hyperplanes_meet_through_origin: return 1;
    default: return std::nullopt;
  }
}

int pair_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int kSlots[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  if (i < 0 || j > 3 || i == j) throw Error(ErrorKind::invalid_argument, "invalid pair");
  return kSlots[i][j];
}

Multivector pair_measure(const GeometricObject& a, const GeometricObject& b, const Configuration& cfg) {
  Multivector x = a.blade();
  Multivector y = b.blade();
  if (cfg.op.dualize_operands) {
    x = hodge_dual(x);
    y = hodge_dual(y);
  }
  return cfg.op.product == Product::commutator ? commutator(x, y) : commutator_dual(x, y);
}

std::string_view symbol(ClassicalProduct p) noexcept {
  switch (p) {
    case ClassicalProduct::wedge: return "∧";
    case ClassicalProduct::regressive: return "∨";
    case ClassicalProduct::commutator: return "×";
    case ClassicalProduct::commutator_dual: return "×⋆";
  }
  return "?";
}

ClassicalProduct classical_product(const Configuration& cfg, int grade, int n) noexcept {
  const bool cross = cfg.op.product == Product::commutator;
  if (grade > 0) {
    const int operand_grade = cfg.op.dualize_operands ? n + 1 - grade : grade;
    if (cross && operand_grade == 1) return ClassicalProduct::wedge;
    if (!cross && operand_grade == n) return ClassicalProduct::regressive;
  }
  return cross ? ClassicalProduct::commutator : ClassicalProduct::commutator_dual;
}

Multivector classical_pair_measure(const GeometricObject& a, const GeometricObject& b,
                                   const Configuration& cfg) {
  Multivector x = a.blade();
  Multivector y = b.blade();
  if (cfg.op.dualize_operands) {
    x = hodge_dual(x);
    y = hodge_dual(y);
  }
  switch (classical_product(cfg, a.grade(), a.dimension())) {
    case ClassicalProduct::wedge: return wedge(x, y);
    case ClassicalProduct::regressive: return regressive(x, y);
    case ClassicalProduct::commutator: return commutator(x, y);
    case ClassicalProduct::commutator_dual: return commutator_dual(x, y);
  }
  return commutator(x, y);
}

namespace {

constexpr std::array<std::pair<int, int>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

ConfigVariant recognise(const Quad& objs, const std::array<ObjectClass, 4>& cls, double tol) {
  const int n = objs[0].dimension();
  const int g = objs[0].grade();
  const auto count = [&](auto pred) {
    return static_cast<int>(std::count_if(cls.begin(), cls.end(), pred));
  };
  const int finite = count([](const ObjectClass& c) { return c.finite; });
  const int origin = count([](const ObjectClass& c) { return c.finite && c.through_origin; });

  if (g == n)
    return finite == 0 ? ConfigVariant::ideal_points_on_ideal_line
                       : ConfigVariant::finite_points_collinear;
  if (g == 1)
    return origin == 4 ? ConfigVariant::hyperplanes_meet_through_origin
                       : ConfigVariant::hyperplanes_meet_off_origin;

  if (finite == 0) return ConfigVariant::ideal_flats_secant;
  if (origin == 4) return ConfigVariant::flats_through_origin;

  // Parallel pencils share their Euclidean part up to scale.
  std::vector<Multivector> directions;
  for (int i = 0; i < 4; ++i)
    if (cls[i].finite) directions.push_back(euclidean_split(objs[i].blade()).euclid);
  bool parallel = directions.size() >= 2;
  for (std::size_t i = 1; parallel && i < directions.size(); ++i)
    parallel = proportional(directions.front(), directions[i], tol).accepted;
  if (parallel) return ConfigVariant::finite_flats_parallel;
  if (finite < 4)
    throw Error(ErrorKind::ambiguous_configuration,
                "mixed finite and ideal flats whose finite members are not parallel");
  // Two origin-passing members force the common intersection through the
  // origin, and then every member passes through it.
  if (origin > 1)
    throw Error(ErrorKind::no_common_pencil,
                std::to_string(origin) + " of 4 flats pass through the origin; no pencil has that shape");
  return ConfigVariant::flats_meet_off_origin;
}

}  // namespace

PencilAnalysis analyze_pencil(const Quad& objs, double tol) {
  const Signature& sig = objs[0].signature();
  for (const auto& o : objs) require_same_signature(objs[0].blade(), o.blade());
  for (const auto& o : objs) {
    if (o.grade() != objs[0].grade())
      throw Error(ErrorKind::mixed_grades, "cross-ratio objects have grades " +
                                               std::to_string(objs[0].grade()) + " and " +
                                               std::to_string(o.grade()));
  }
  if (sig.n() < 2) throw Error(ErrorKind::invalid_argument, "cross-ratios need n >= 2");

  std::array<bool, 6> coincident{};
  std::array<int, 4> cls_of = {0, 1, 2, 3};
  for (int s = 0; s < 6; ++s) {
    const auto [i, j] = kPairs[s];
    coincident[s] = proportional(objs[i].blade(), objs[j].blade(), tol).accepted;
    if (coincident[s]) {
      const int from = cls_of[j], to = cls_of[i];
      for (int& c : cls_of)
        if (c == from) c = to;
    }
  }
  if (std::all_of(cls_of.begin(), cls_of.end(), [&](int c) { return c == cls_of[0]; }))
    throw Error(ErrorKind::not_distinct, "all four objects coincide");

  std::array<ObjectClass, 4> cls;
  for (int i = 0; i < 4; ++i) cls[i] = classify_object(objs[i], tol);
  const Configuration cfg = configuration(recognise(objs, cls, tol));

  std::vector<Multivector> measures;
  measures.reserve(6);
  int reference = -1;
  for (int s = 0; s < 6; ++s) {
    const auto [i, j] = kPairs[s];
    if (coincident[s]) {
      measures.emplace_back(sig);
      continue;
    }
    measures.push_back(pair_measure(objs[i], objs[j], cfg));
    const double scale = objs[i].blade().norm_inf() * objs[j].blade().norm_inf();
    if (measures.back().norm_inf() <= tol * scale)
      throw Error(ErrorKind::no_common_pencil,
                  "pair measure of distinct objects " + std::to_string(i + 1) + " and " +
                      std::to_string(j + 1) + " vanishes under " + std::string(name(cfg.variant)));
    if (reference < 0 || measures.back().norm2() > measures[reference].norm2()) reference = s;
  }

  double worst = 0.0;
  for (int s = 0; s < 6; ++s) {
    if (coincident[s]) continue;
    const Proportionality p = proportional(measures[reference], measures[s], tol);
    worst = std::max(worst, p.residual);
    if (!p.accepted)
      throw Error(ErrorKind::no_common_pencil,
                  "pair measures are not proportional to a common blade (residual " +
                      std::to_string(p.residual) + ") under " + std::string(name(cfg.variant)));
  }
  Multivector common = unitize(measures[reference], tol);
  return {cfg, std::move(measures), coincident, std::move(common), worst};
}

Configuration classify(const Quad& objs, double tol) { return analyze_pencil(objs, tol).configuration; }

namespace {

// A common blade with vanishing scalar square makes every scalar measure
// vanish at once; the ratio is then meaningless.
void require_nonnull(const Multivector& common, double tol) {
  const double n2 = common.norm2();
  if (std::abs(scalar_part(common * common)) <= tol * n2 * n2)
    throw Error(ErrorKind::indeterminate, "common blade has a vanishing scalar square");
}

}  // namespace

CrossRatioResult cross_ratio(const Quad& objs, double tol) {
  PencilAnalysis a = analyze_pencil(objs, tol);
  require_nonnull(a.common_blade, tol);
  const auto& m = a.measures;
  const double num = scalar_part(m[pair_slot(0, 2)] * m[pair_slot(1, 3)]);
  const double den = scalar_part(m[pair_slot(0, 3)] * m[pair_slot(1, 2)]);
  return {extended_ratio(num, den), a.configuration, std::move(a.common_blade), a.max_residual};
}

CrossRatioResult affine_ratio(const Quad& objs, double tol) {
  int ideal_slot = -1;
  int ideal_count = 0;
  for (int i = 0; i < 4; ++i) {
    if (objs[i].role() != Role::point)
      throw Error(ErrorKind::invalid_argument, "affine ratio is defined for points only");
    if (!classify_object(objs[i], tol).finite) {
      ideal_slot = i;
      ++ideal_count;
    }
  }
  if (ideal_count > 1)
    throw Error(ErrorKind::no_common_pencil, "a finite line carries a single ideal point");
  if (ideal_count == 0)
    throw Error(ErrorKind::invalid_argument, "affine ratio needs exactly one ideal point");

  std::array<int, 4> perm = {0, 1, 2, 3};
  std::swap(perm[ideal_slot], perm[3]);
  const Quad reordered = {objs[perm[0]], objs[perm[1]], objs[perm[2]], objs[perm[3]]};
  CrossRatioResult r = cross_ratio(reordered, tol);
  r.permutation = perm;
  return r;
}

double inner_product_variant(const Quad& objs, double tol) {
  PencilAnalysis a = analyze_pencil(objs, tol);
  if (a.configuration.variant != ConfigVariant::finite_points_collinear)
    throw Error(ErrorKind::invalid_argument, "inner-product form applies to finite collinear points");
  require_nonnull(a.common_blade, tol);
  const auto& m = a.measures;
  const double num = scalar_part(inner(m[pair_slot(0, 2)], m[pair_slot(1, 3)]));
  const double den = scalar_part(inner(m[pair_slot(0, 3)], m[pair_slot(1, 2)]));
  return extended_ratio(num, den);
}

}  // namespace pga
