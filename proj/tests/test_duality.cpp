#include <doctest.h>

#include "frozen_values.hpp"
#include "pga/duality.hpp"
#include "pga/error.hpp"
#include "pga/objects.hpp"
#include "test_support.hpp"

using namespace pga;

namespace {

Multivector e(const Signature& s, std::initializer_list<int> gens, double c = 1.0) {
  return Multivector::blade(s, blade_of(gens), c);
}

template <std::size_t N>
void check_sign_table(int n, const std::array<int, N>& expected) {
  const Signature s(n);
  for (std::uint32_t m = 0; m < N; ++m) CHECK_MESSAGE(dual_sign(BladeIndex{m}, s) == expected[m], "mask " << m);
}

}  // namespace

TEST_CASE("dual examples") {
  const Signature s2(2), s3(3);
  CHECK(hodge_dual(Multivector::scalar(s3, 1.0)) == pseudoscalars(s3).full);
  CHECK(hodge_dual(e(s3, {0})) == pseudoscalars(s3).euclidean);
  const Multivector d = hodge_dual(e(s2, {1}));
  CHECK(d == e(s2, {0, 2}, frozen::dual_signs_n2[0b010]));
  CHECK(wedge(e(s2, {1}), d) == pseudoscalars(s2).full);
}

TEST_CASE("dual sign tables match the bubble-sort derivation") {
  check_sign_table(2, frozen::dual_signs_n2);
  check_sign_table(3, frozen::dual_signs_n3);
  check_sign_table(4, frozen::dual_signs_n4);
}

TEST_CASE("closed-form dual examples") {
  const Signature s(3);
  CHECK(hodge_dual_closed_form(e(s, {0})) == pseudoscalars(s).euclidean);
  const Multivector i_dual = hodge_dual_closed_form(pseudoscalars(s).full);
  CHECK(i_dual == Multivector::scalar(s, 1.0));
  CHECK(i_dual == hodge_dual(pseudoscalars(s).full));
}

TEST_CASE("undual examples") {
  const Signature s(3);
  CHECK(hodge_undual(pseudoscalars(s).full) == Multivector::scalar(s, 1.0));
  CHECK(hodge_undual(pseudoscalars(s).euclidean) == e(s, {0}));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const Signature sig(1 + t % 6);
    const auto a = testing_support::random_multivector(sig, rng);
    CHECK(hodge_dual(hodge_undual(a)) == a);
    CHECK(hodge_undual(hodge_dual(a)) == a);
  }
}

TEST_CASE("double dual constant") {
  const std::array<std::vector<int>, 4> table = {
      std::vector<int>(frozen::double_dual_n2.begin(), frozen::double_dual_n2.end()),
      std::vector<int>(frozen::double_dual_n3.begin(), frozen::double_dual_n3.end()),
      std::vector<int>(frozen::double_dual_n4.begin(), frozen::double_dual_n4.end()),
      std::vector<int>(frozen::double_dual_n5.begin(), frozen::double_dual_n5.end())};
  for (int n = 2; n <= 5; ++n) {
    const Signature s(n);
    for (std::uint32_t m = 0; m < (1u << s.generators()); ++m) {
      const BladeIndex b{m};
      const int c = table[n - 2][b.grade()];
      CHECK(double_dual_sign(b.grade(), n) == c);
      CHECK(hodge_dual(hodge_dual(Multivector::blade(s, b))) == Multivector::blade(s, b, c));
    }
  }
}

TEST_CASE("every blade wedges with its dual to the pseudoscalar") {
  for (int n = 1; n <= 5; ++n) {
    const Signature s(n);
    const Multivector i = pseudoscalars(s).full;
    int failures = 0;
    for (std::uint32_t m = 0; m < (1u << s.generators()); ++m) {
      const auto b = Multivector::blade(s, BladeIndex{m});
      if (!(wedge(b, hodge_dual(b)) == i)) ++failures;
    }
    CHECK_MESSAGE(failures == 0, "n = " << n);
  }
}

TEST_CASE("closed-form dual agrees with the blade complement") {
  for (int n = 1; n <= 5; ++n) {
    const Signature s(n);
    int failures = 0;
    for (std::uint32_t m = 0; m < (1u << s.generators()); ++m) {
      const auto b = Multivector::blade(s, BladeIndex{m}, -1.25);
      if (!(hodge_dual(b) == hodge_dual_closed_form(b))) ++failures;
    }
    CHECK_MESSAGE(failures == 0, "n = " << n);
  }
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const Signature s(2 + t % 3);
    const auto a = testing_support::random_integer_multivector(s, rng);
    CHECK(hodge_dual(a) == hodge_dual_closed_form(a));
  }
}

TEST_CASE("regressive product joins two points into their line") {
  const Signature s(2);
  const std::vector<double> x{1.0, 2.0}, y{-3.0, 0.5};
  const auto p = point(x), q = point(y, 2.0);
  const Multivector line = regressive(p.blade(), q.blade());
  REQUIRE(line.homogeneous_grade() == 1);
  CHECK(wedge(line, p.blade()).norm_inf() <= 1e-14);
  CHECK(wedge(line, q.blade()).norm_inf() <= 1e-14);
  const auto r = point(std::vector<double>{0.0, 0.0});
  CHECK(wedge(line, r.blade()).norm_inf() > 1.0);
}

TEST_CASE("regressive with the pseudoscalar returns the operand up to the double dual sign") {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 5; ++n) {
    const Signature s(n);
    for (int k = 0; k <= n + 1; ++k) {
      const auto a = testing_support::random_homogeneous(s, k, rng);
      CHECK(regressive(pseudoscalars(s).full, a) == a * double_dual_sign(k, n));
    }
  }
}

TEST_CASE("commutator dual coincides with the regressive product on n-vectors") {
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 5; ++n) {
    const Signature s(n);
    for (int t = 0; t < 50; ++t) {
      const auto p = testing_support::random_homogeneous(s, n, rng);
      const auto q = testing_support::random_homogeneous(s, n, rng);
      CHECK(commutator_dual(p, q) == regressive(p, q));
    }
  }
}

TEST_CASE("commutator dual examples") {
  std::mt19937_64 rng(21);
  const Signature s(3);
  const auto a = testing_support::random_multivector(s, rng);
  CHECK(commutator_dual(a, a).is_zero());
  // duals of 1-vectors are n-vectors whose commutator dual is the dualized wedge
  const auto u = testing_support::random_homogeneous(s, 1, rng);
  const auto v = testing_support::random_homogeneous(s, 1, rng);
  const auto p = hodge_dual(u), q = hodge_dual(v);
  CHECK(commutator_dual(p, q) == hodge_dual(wedge(hodge_dual(p), hodge_dual(q))));
  CHECK(commutator(u, v) == wedge(u, v));
}

TEST_CASE("inner dual examples") {
  const Signature s(3);
  const auto i = pseudoscalars(s).full;
  CHECK(inner_dual(i, i) == i);
  const auto p = point(std::vector<double>{1.0, 2.0, -0.5});
  const auto q = point(std::vector<double>{0.25, -3.0, 4.0});
  CHECK(inner_dual(p.blade(), q.blade()) == Multivector::blade(s, s.full_mask(), frozen::inner_dual_points_coeff));
  std::mt19937_64 rng(6);
  const auto a = testing_support::random_multivector(s, rng);
  const auto b = testing_support::random_multivector(s, rng);
  CHECK(inner_dual(a, b) == hodge_dual(inner(hodge_dual(a), hodge_dual(b))));
}

TEST_CASE("dual operations are linear") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const Signature s(2 + t % 3);
    const auto a = testing_support::random_integer_multivector(s, rng);
    const auto b = testing_support::random_integer_multivector(s, rng);
    const auto c = testing_support::random_integer_multivector(s, rng);
    CHECK(hodge_dual(a + b) == hodge_dual(a) + hodge_dual(b));
    CHECK(hodge_dual(a * 3.0) == hodge_dual(a) * 3.0);
    CHECK(regressive(a + b, c) == regressive(a, c) + regressive(b, c));
    CHECK(inner_dual(a + b, c) == inner_dual(a, c) + inner_dual(b, c));
    CHECK(commutator_dual(a, b + c) == commutator_dual(a, b) + commutator_dual(a, c));
  }
}

TEST_CASE("regressive and commutator dual share antisymmetry on n-vectors") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 5; ++n) {
    const Signature s(n);
    const auto p = testing_support::random_homogeneous(s, n, rng);
    const auto q = testing_support::random_homogeneous(s, n, rng);
    CHECK(regressive(p, q) == -regressive(q, p));
    CHECK(commutator_dual(p, q) == -commutator_dual(q, p));
  }
}
