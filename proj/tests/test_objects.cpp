#include <doctest.h>

#include "pga/duality.hpp"
#include "pga/error.hpp"
#include "pga/objects.hpp"
#include "pga/split.hpp"
#include "test_support.hpp"

using namespace pga;
using Vec = std::vector<double>;

namespace {

Multivector e(const Signature& s, std::initializer_list<int> gens, double c = 1.0) {
  return Multivector::blade(s, blade_of(gens), c);
}

bool has_e0_terms(const Multivector& m) {
  for (const auto& [b, c] : m.terms())
    if (b.has_null_factor()) return true;
  return false;
}

}  // namespace

TEST_CASE("split examples") {
  const Signature s(3);
  const double a0 = 1.5, a1 = -2.0, a2 = 0.25, a3 = 4.0;
  auto sp = euclidean_split(e(s, {1}, a1) + e(s, {0}, a0));
  CHECK(sp.euclid == e(s, {1}, a1));
  CHECK(sp.ideal == Multivector::scalar(s, a0));

  sp = euclidean_split(e(s, {0}));
  CHECK(sp.euclid.is_zero());
  CHECK(sp.ideal == Multivector::scalar(s, 1.0));

  const Multivector p = e(s, {1, 2, 3}, a0) + e(s, {0, 2, 3}, -a1) + e(s, {0, 1, 3}, a2) + e(s, {0, 1, 2}, -a3);
  sp = euclidean_split(p);
  CHECK(sp.euclid == e(s, {1, 2, 3}, a0));
  CHECK(sp.ideal == e(s, {2, 3}, -a1) + e(s, {1, 3}, a2) + e(s, {1, 2}, -a3));
}

TEST_CASE("n = 3 point layout") {
  const Signature s(3);
  const double a0 = 2.0, a1 = 0.5, a2 = -1.0, a3 = 3.0;
  const Multivector v = Multivector::vector(s, std::vector<double>{a0, a1, a2, a3});
  const Multivector expected =
      e(s, {1, 2, 3}, a0) + e(s, {0, 2, 3}, -a1) + e(s, {0, 1, 3}, a2) + e(s, {0, 1, 2}, -a3);
  CHECK(hodge_dual(v) == expected);
  CHECK(point(Vec{a1 / a0, a2 / a0, a3 / a0}, a0).blade() == expected);
}

TEST_CASE("split reassembles exactly") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const Signature s(1 + t % 6);
    const auto a = testing_support::random_multivector(s, rng);
    CHECK(euclidean_split(a).reassemble() == a);
  }
}

TEST_CASE("point construction") {
  const Signature s(3);
  CHECK(point(Vec{0, 0, 0}).blade() == pseudoscalars(s).euclidean);
  const Vec x{1.5, -2.0, 0.25};
  const auto p1 = point(x, 1.0), p2 = point(x, 2.0);
  const auto pr = proportional(p1.blade(), p2.blade());
  CHECK(pr.accepted);
  CHECK(pr.lambda == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p1.role() == Role::point);
  CHECK(classify_object(p1).finite);
  CHECK_THROWS_AS(point(x, 0.0), Error);
}

TEST_CASE("point coordinate round trip") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-10.0, 10.0), weight(0.1, 10.0);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 4;
    Vec x(n);
    for (double& c : x) c = coord(rng);
    const double w = weight(rng);
    const auto p = point(x, w);
    const Vec back = point_coords(p);
    for (int i = 0; i < n; ++i) CHECK(testing_support::close(back[i], x[i], 1e-12));
    CHECK(testing_support::close(point_weight(p), w, 1e-12));
  }
}

TEST_CASE("ideal points") {
  const Signature s(3);
  const auto v = ideal_point(Vec{1, 0, 0});
  CHECK(v.blade() == hodge_dual(e(s, {1})));
  CHECK_FALSE(euclidean_split(v.blade()).ideal.is_zero());
  CHECK(scalar_part(v.blade() * v.blade()) == 0.0);
  CHECK(point_weight(v) == 0.0);
  CHECK_FALSE(classify_object(v).finite);
  CHECK_THROWS_AS(ideal_point(Vec{0, 0, 0}), Error);
  CHECK_THROWS_AS(point_coords(v), Error);
}

TEST_CASE("hyperplanes") {
  const Signature s(3);
  CHECK(hyperplane(Vec{1, 0, 0}, 0.0).blade() == e(s, {1}));
  CHECK(ideal_hyperplane(s).blade() == e(s, {0}));
  CHECK_THROWS_AS(hyperplane(Vec{0, 0, 0}, 1.0), Error);

  // incidence: Pi ^ P carries (n . x + offset) w on the pseudoscalar
  const Vec normal{1.0, -2.0, 0.5};
  const double offset = 0.75;
  const auto plane = hyperplane(normal, offset);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int t = 0; t < 50; ++t) {
    Vec x{coord(rng), coord(rng), 0.0};
    x[2] = -(normal[0] * x[0] + normal[1] * x[1] + offset) / normal[2];
    const double w = 0.5 + t;
    CHECK(wedge(plane.blade(), point(x, w).blade()).norm_inf() <= 1e-12 * w);
    Vec off = x;
    off[0] += 1.0;
    const double level = normal[0] * off[0] + normal[1] * off[1] + normal[2] * off[2] + offset;
    CHECK(wedge(plane.blade(), point(off, w).blade()).coefficient(s.full_mask()) == doctest::Approx(level * w));
  }
}

TEST_CASE("join of points") {
  const Signature s(3);
  const auto o = point(Vec{0, 0, 0});
  const auto v = ideal_point(Vec{1, 2, -1});
  const std::vector<GeometricObject> origin_line{o, v};
  const auto l = flat_from_join(origin_line);
  CHECK(l.grade() == 2);
  CHECK_FALSE(has_e0_terms(l.blade()));

  const auto p = point(Vec{1, 2, 3}), q = point(Vec{-1, 0, 2}, 3.0);
  const std::vector<GeometricObject> pq{p, q};
  const auto line = flat_from_join(pq);
  CHECK(line.grade() == 2);
  CHECK(regressive(line.blade(), p.blade()).norm_inf() <= 1e-12);
  CHECK(regressive(line.blade(), q.blade()).norm_inf() <= 1e-12);
  CHECK(regressive(line.blade(), o.blade()).norm_inf() > 1e-3);

  const std::vector<GeometricObject> same{p, p};
  CHECK_THROWS_AS(flat_from_join(same), Error);
}

TEST_CASE("meet of hyperplanes") {
  const Signature s(3);
  const std::vector<GeometricObject> axes{hyperplane(Vec{1, 0, 0}, 0), hyperplane(Vec{0, 1, 0}, 0)};
  CHECK(flat_from_meet(axes).blade() == e(s, {1, 2}));
  const std::vector<GeometricObject> twice{axes[0], axes[0]};
  CHECK_THROWS_AS(flat_from_meet(twice), Error);
  const std::vector<GeometricObject> parallel{hyperplane(Vec{1, 0, 0}, 0), hyperplane(Vec{1, 0, 0}, 1)};
  const auto f = flat_from_meet(parallel);
  CHECK(f.blade() == e(s, {0, 1}, -1.0));
  CHECK_FALSE(classify_object(f).finite);
}

TEST_CASE("object classification") {
  const Signature s(3);
  CHECK_FALSE(classify_object(e(s, {0})).finite);
  const auto origin = classify_object(pseudoscalars(s).euclidean);
  CHECK(origin.finite);
  CHECK(origin.through_origin);
  const auto shifted = classify_object(e(s, {1}) + e(s, {0}));
  CHECK(shifted.finite);
  CHECK_FALSE(shifted.through_origin);
  CHECK_THROWS_AS(classify_object(Multivector(s)), Error);
}

TEST_CASE("proportionality") {
  const Signature s(3);
  auto r = proportional(e(s, {1}), e(s, {1}, 3.0));
  CHECK(r.accepted);
  CHECK(r.lambda == 3.0);
  CHECK(r.residual == 0.0);
  CHECK_FALSE(proportional(e(s, {1}), e(s, {2})).accepted);
  const auto p = point(Vec{1, 2, 3}), q = point(Vec{0, -1, 2});
  r = proportional(regressive(p.blade(), q.blade()), regressive(q.blade(), p.blade()));
  CHECK(r.accepted);
  CHECK(r.lambda == -1.0);
  CHECK_THROWS_AS(proportional(Multivector(s), e(s, {1})), Error);
}

TEST_CASE("unitize") {
  const Signature s(3);
  const auto u = unitize(e(s, {1}, 2.0) + e(s, {0}, 2.0));
  CHECK(u == e(s, {1}) + e(s, {0}));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto a = testing_support::random_multivector(s, rng, 0.6);
    if (a.is_zero()) continue;
    const auto ua = unitize(a);
    CHECK(testing_support::relative_gap(unitize(ua), ua) <= 1e-15);
    CHECK(unitize(-a) == ua);
  }
  const auto ideal = unitize(e(s, {0, 1}, -4.0));
  CHECK(ideal == e(s, {0, 1}));
  CHECK_THROWS_AS(unitize(Multivector(s)), Error);
}

TEST_CASE("blade validation") {
  const Signature s4(4);
  CHECK_THROWS_AS(GeometricObject::from_blade(e(s4, {1, 2}) + e(s4, {3, 4})), Error);
  CHECK_THROWS_AS(GeometricObject::from_blade(hodge_dual(e(s4, {1, 2}) + e(s4, {3, 4}))), Error);
  CHECK_THROWS_AS(GeometricObject::from_blade(e(s4, {1}) + e(s4, {1, 2})), Error);
  CHECK_THROWS_AS(GeometricObject::from_blade(Multivector::scalar(s4, 1.0)), Error);
  CHECK_THROWS_AS(GeometricObject::from_blade(Multivector(s4)), Error);
  CHECK(GeometricObject::from_blade(e(s4, {1, 2}) + e(s4, {1, 3})).role() == Role::flat);
}

TEST_CASE("duality exchanges roles and grades") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int n = 2; n <= 5; ++n) {
    Vec x(n), nrm(n);
    for (int i = 0; i < n; ++i) {
      x[i] = coord(rng);
      nrm[i] = coord(rng);
    }
    const auto p = point(x);
    CHECK(dual(p).role() == Role::hyperplane);
    CHECK(dual(hyperplane(nrm, 0.5)).role() == Role::point);
    for (int k = 2; k < n; ++k) {
      std::vector<GeometricObject> planes;
      for (int j = 0; j < k; ++j) {
        Vec m(n);
        for (double& c : m) c = coord(rng);
        planes.push_back(hyperplane(m, coord(rng)));
      }
      const auto f = flat_from_meet(planes);
      CHECK(f.grade() == k);
      CHECK(dual(f).grade() == n + 1 - k);
      CHECK(dual(f).role() == Role::flat);
    }
  }
}

TEST_CASE("duals of origin flats are ideal and back") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + t % 3;
    const int k = 2 + t % (n - 2);
    std::vector<GeometricObject> planes;
    for (int j = 0; j < k; ++j) {
      Vec m(n);
      for (double& c : m) c = coord(rng);
      planes.push_back(hyperplane(m, 0.0));
    }
    const auto f = flat_from_meet(planes);
    const auto cf = classify_object(f);
    CHECK(cf.finite);
    CHECK(cf.through_origin);
    const auto d = dual(f);
    CHECK_FALSE(classify_object(d).finite);
    const auto back = classify_object(dual(d));
    CHECK(back.finite);
    CHECK(back.through_origin);
  }
}
