#include "pga/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pga/error.hpp"

namespace pga::oracle {

namespace {

double det2(const Homog2& a, const Homog2& b) { return a.x * b.w - b.x * a.w; }

}  // namespace

double classical_cr_determinant(const std::array<Homog2, 4>& p) {
  for (const auto& h : p)
    if (h.x == 0.0 && h.w == 0.0) throw Error(ErrorKind::invalid_argument, "(0, 0) is not a projective point");
  return extended_ratio(det2(p[0], p[2]) * det2(p[1], p[3]), det2(p[0], p[3]) * det2(p[1], p[2]));
}

double classical_cr_affine(const std::array<double, 4>& t) {
  return extended_ratio((t[0] - t[2]) * (t[1] - t[3]), (t[0] - t[3]) * (t[1] - t[2]));
}

double affine_ratio_determinant(const std::array<Homog2, 3>& p) {
  return extended_ratio(det2(p[0], p[2]), det2(p[1], p[2]));
}

double sine_cr(const PencilAngles& a) {
  const auto& x = a.alpha;
  return extended_ratio(std::sin(x[0] - x[2]) * std::sin(x[1] - x[3]),
                        std::sin(x[0] - x[3]) * std::sin(x[1] - x[2]));
}

OrderedBladeProduct naive_blade_product(const std::vector<int>& a, const std::vector<int>& b,
                                        const Signature& sig) {
  std::vector<int> f(a);
  f.insert(f.end(), b.begin(), b.end());
  for (int g : f)
    if (g < 0 || g > sig.n()) throw Error(ErrorKind::invalid_argument, "generator outside signature");
  int sign = 1;
  for (std::size_t pass = 0; pass < f.size(); ++pass) {
    for (std::size_t j = 0; j + 1 < f.size(); ++j) {
      if (f[j] > f[j + 1]) {
        std::swap(f[j], f[j + 1]);
        sign = -sign;
      }
    }
  }
  std::vector<int> out;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (j + 1 < f.size() && f[j] == f[j + 1]) {
      const double m = sig.metric(f[j], f[j]);
      if (m == 0.0) return {0, {}};
      if (m < 0.0) sign = -sign;
      ++j;
      continue;
    }
    out.push_back(f[j]);
  }
  return {sign, out};
}

std::vector<double> point_coordinates(const GeometricObject& p) {
  if (p.role() != Role::point) throw Error(ErrorKind::invalid_argument, "object is not a point");
  const int n = p.dimension();
  const Signature& sig = p.signature();
  // e_{1..n} carries the weight.
  const double weight = p.blade().coefficient(sig.euclidean_pseudoscalar());
  if (weight == 0.0) throw Error(ErrorKind::invalid_argument, "ideal point has no coordinates");
  std::vector<double> x(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> rest;
    for (int g = 0; g <= n; ++g)
      if (g != i) rest.push_back(g);
    // e_i ^ (s e_rest) = I fixes the sign s of axis i.
    const int s = naive_blade_product({i}, rest, sig).sign;
    std::uint32_t bits = 0;
    for (int g : rest) bits |= 1u << g;
    x[i - 1] = s * p.blade().coefficient(BladeIndex{bits}) / weight;
  }
  return x;
}

std::array<double, 4> line_parameters(const Quad& objs, double tol) {
  std::array<std::vector<double>, 4> x;
  for (int i = 0; i < 4; ++i) x[i] = point_coordinates(objs[i]);
  const std::size_t n = x[0].size();

  auto diff = [&](int i) {
    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = x[i][k] - x[0][k];
    return d;
  };
  auto norm = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
  };

  int far = 1;
  for (int i = 2; i < 4; ++i)
    if (norm(diff(i)) > norm(diff(far))) far = i;
  std::vector<double> dir = diff(far);
  const double spread = norm(dir);
  if (spread == 0.0) throw Error(ErrorKind::not_distinct, "all four points coincide");
  for (double& c : dir) c /= spread;

  double scale = spread;
  for (const auto& xi : x) scale = std::max(scale, norm(xi));

  std::array<double, 4> t{};
  for (int i = 0; i < 4; ++i) {
    const auto d = diff(i);
    double ti = 0.0;
    for (std::size_t k = 0; k < n; ++k) ti += d[k] * dir[k];
    double off = 0.0;
    for (std::size_t k = 0; k < n; ++k) off = std::max(off, std::abs(d[k] - ti * dir[k]));
    if (off > tol * scale)
      throw Error(ErrorKind::no_common_pencil, "points are not collinear");
    t[i] = ti;
  }
  return t;
}

PencilAngles pencil_angles(const Quad& objs, double tol) {
  std::array<SplitPair, 4> parts = {euclidean_split(objs[0].blade()), euclidean_split(objs[1].blade()),
                                    euclidean_split(objs[2].blade()), euclidean_split(objs[3].blade())};
  const bool all_ideal = std::all_of(parts.begin(), parts.end(), [&](const SplitPair& p) {
    return p.euclid.norm_inf() == 0.0;
  });

  // Coefficient vectors over the union of blades, normalized.
  std::map<std::uint32_t, std::size_t> slot;
  for (const auto& p : parts)
    for (const auto& [b, c] : (all_ideal ? p.ideal : p.euclid).terms()) slot.emplace(b.bits, 0);
  std::size_t next = 0;
  for (auto& [bits, s] : slot) s = next++;

  std::array<std::vector<double>, 4> v;
  for (int i = 0; i < 4; ++i) {
    v[i].assign(slot.size(), 0.0);
    for (const auto& [b, c] : (all_ideal ? parts[i].ideal : parts[i].euclid).terms()) v[i][slot[b.bits]] = c;
    double s = 0.0;
    for (double c : v[i]) s += c * c;
    s = std::sqrt(s);
    if (s == 0.0) throw Error(ErrorKind::no_common_pencil, "pencil member has no direction part");
    for (double& c : v[i]) c /= s;
  }

  auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
  };
  auto reject = [&](const std::vector<double>& a, const std::vector<double>& u) {
    std::vector<double> r(a);
    const double d = dot(a, u);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= d * u[k];
    return r;
  };

  const std::vector<double>& u = v[0];
  std::vector<double> w;
  double best = 0.0;
  for (int i = 1; i < 4; ++i) {
    auto r = reject(v[i], u);
    const double len = std::sqrt(dot(r, r));
    if (len > best) {
      best = len;
      w = std::move(r);
    }
  }
  if (best <= tol) throw Error(ErrorKind::no_common_pencil, "pencil is not angular: all members parallel");
  for (double& c : w) c /= best;

  PencilAngles out;
  for (int i = 0; i < 4; ++i) {
    const double cu = dot(v[i], u), cw = dot(v[i], w);
    auto r = reject(reject(v[i], u), w);
    if (std::sqrt(dot(r, r)) > std::sqrt(tol))
      throw Error(ErrorKind::no_common_pencil, "pencil members do not span a 2-plane");
    out.alpha[i] = std::atan2(cw, cu);
  }
  return out;
}

}  // namespace pga::oracle
