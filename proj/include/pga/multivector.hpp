#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pga {

// Basis blade e_J of R_{n,0,1} encoded as a bitmask over generators e_0..e_n.
// Bit 0 is the null generator e_0. Factors are taken in ascending index order.
struct BladeIndex {
  std::uint32_t bits = 0;

  constexpr BladeIndex() = default;
  constexpr explicit BladeIndex(std::uint32_t b) : bits(b) {}

  int grade() const noexcept;
  constexpr bool is_scalar() const noexcept { return bits == 0; }
  constexpr bool has_null_factor() const noexcept { return (bits & 1u) != 0; }

  friend constexpr auto operator<=>(BladeIndex, BladeIndex) = default;
};

// Builds a blade from generator indices in any order; duplicates are rejected.
BladeIndex blade_of(std::initializer_list<int> generators);

// R_{n,0,1}: n Euclidean generators e_1..e_n squaring to +1 and one null e_0.
class Signature {
 public:
  static constexpr int kMaxDimension = 30;

  explicit Signature(int n);

  int n() const noexcept { return n_; }
  int generators() const noexcept { return n_ + 1; }
  int max_grade() const noexcept { return n_ + 1; }
  std::uint64_t blade_count() const noexcept { return 1ull << (n_ + 1); }

  // Diagonal metric: e_i.e_i = 1 for i >= 1, e_0.e_0 = 0, zero off-diagonal.
  double metric(int i, int j) const;

  bool contains(BladeIndex b) const noexcept { return (b.bits >> (n_ + 1)) == 0; }
  BladeIndex pseudoscalar() const noexcept;            // e_{01..n}
  BladeIndex euclidean_pseudoscalar() const noexcept;  // e_{1..n}
  BladeIndex full_mask() const noexcept { return pseudoscalar(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int n_;
};

struct BladeProduct {
  int sign = 0;  // -1, 0 or +1
  BladeIndex blade;
};

// Cayley rule of R_{n,0,1}: sign * e_result = e_a e_b.
BladeProduct blade_geometric_product(BladeIndex a, BladeIndex b, const Signature& sig);

// Sign of the permutation that sorts the concatenation (a, b) of two disjoint
// ascending factor lists.
int reorder_sign(BladeIndex a, BladeIndex b) noexcept;

class Multivector {
 public:
  using Term = std::pair<BladeIndex, double>;

  explicit Multivector(Signature sig) : sig_(sig) {}

  // Terms with equal blades are summed; exact zeros are dropped. Throws on
  // blades outside the signature and on non-finite coefficients.
  Multivector(Signature sig, std::vector<Term> terms);

  static Multivector scalar(Signature sig, double value);
  static Multivector blade(Signature sig, BladeIndex b, double coeff = 1.0);
  static Multivector basis_vector(Signature sig, int i);
  // sum_i values[i] e_i; values.size() must equal sig.generators().
  static Multivector vector(Signature sig, std::span<const double> values);

  const Signature& signature() const noexcept { return sig_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  double coefficient(BladeIndex b) const noexcept;
  std::vector<int> grades() const;
  std::optional<int> homogeneous_grade() const;

  double norm_inf() const noexcept;
  double norm2() const noexcept;  // coefficient 2-norm, metric-free

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a *= 1.0 / s; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }

  // Exact coefficient-wise comparison.
  friend bool operator==(const Multivector& a, const Multivector& b);

 private:
  friend class TermAccumulator;
  Signature sig_;
  std::vector<Term> terms_;  // sorted by blade, no zero coefficients
};

// Throws ErrorKind::signature_mismatch unless both operands share a signature.
void require_same_signature(const Multivector& a, const Multivector& b);

Multivector geometric_product(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

Multivector grade_select(const Multivector& a, int k);
double scalar_part(const Multivector& a);

// Metric-free outer product; e_0 wedges like any other generator.
Multivector wedge(const Multivector& a, const Multivector& b);

// Per homogeneous component pair (r, s): the grade |r - s| part of A_r B_s.
// Only ever applied to proportional same-grade blades in the cross-ratio
// formulas, where every common inner-product convention agrees.
Multivector inner(const Multivector& a, const Multivector& b);

// A x B = (AB - BA) / 2, evaluated in one pass by keeping the grades of each
// blade product that fail the commutation parity rule.
Multivector commutator(const Multivector& a, const Multivector& b);
// (AB - BA) / 2 expanded bilinearly over term pairs; reference path for the
// parity-filtered version.
Multivector commutator_by_definition(const Multivector& a, const Multivector& b);

// True when grade k of A_r B_s lies in the symmetric part (AB + BA) / 2.
constexpr bool is_commuting_grade(int k, int r, int s) noexcept {
  return ((k * (k - 1) / 2 + r * (r - 1) / 2 + s * (s - 1) / 2) % 2) == 0;
}

enum class Involution { reverse, grade_involution };

Multivector involution(const Multivector& a, Involution kind);
inline Multivector reverse(const Multivector& a) { return involution(a, Involution::reverse); }
inline Multivector grade_involution(const Multivector& a) {
  return involution(a, Involution::grade_involution);
}

struct Pseudoscalars {
  Multivector full;       // I = e_0 I_E
  Multivector euclidean;  // I_E, also the origin point
};

Pseudoscalars pseudoscalars(const Signature& sig);

// "e013", "e2", "1" for the scalar. Indices >= 10 use letters a, b, ...
std::string blade_name(BladeIndex b);
// Inverse of blade_name; factors must be strictly ascending and < generators.
std::optional<BladeIndex> parse_blade_name(std::string_view name, const Signature& sig);

std::string to_string(const Multivector& a);

}  // namespace pga
