#include "pga/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>

#include "pga/error.hpp"

namespace pga {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::signature_mismatch: return "SignatureMismatch";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::degenerate_input: return "DegenerateInput";
    case ErrorKind::mixed_grades: return "MixedGrades";
    case ErrorKind::not_distinct: return "NotDistinct";
    case ErrorKind::no_common_pencil: return "NoCommonPencil";
    case ErrorKind::ambiguous_configuration: return "AmbiguousConfiguration";
    case ErrorKind::indeterminate: return "Indeterminate";
    case ErrorKind::parse: return "ParseError";
  }
  return "Unknown";
}

double extended_ratio(double num, double den) {
  if (den == 0.0) {
    if (num == 0.0) throw Error(ErrorKind::indeterminate, "indeterminate ratio 0/0");
    return std::copysign(INFINITY, num);
  }
  return num / den;
}

int BladeIndex::grade() const noexcept { return std::popcount(bits); }

BladeIndex blade_of(std::initializer_list<int> generators) {
  std::uint32_t bits = 0;
  for (int g : generators) {
    if (g < 0 || g > Signature::kMaxDimension)
      throw Error(ErrorKind::invalid_argument, "generator index out of range");
    const std::uint32_t bit = 1u << g;
    if (bits & bit) throw Error(ErrorKind::invalid_argument, "repeated generator in blade");
    bits |= bit;
  }
  return BladeIndex{bits};
}

Signature::Signature(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension)
    throw Error(ErrorKind::invalid_argument,
                "Euclidean dimension must lie in [1, " + std::to_string(kMaxDimension) + "]");
}

double Signature::metric(int i, int j) const {
  if (i < 0 || j < 0 || i > n_ || j > n_)
    throw Error(ErrorKind::invalid_argument, "generator index out of range");
  return (i == j && i != 0) ? 1.0 : 0.0;
}

BladeIndex Signature::pseudoscalar() const noexcept {
  return BladeIndex{static_cast<std::uint32_t>((1ull << (n_ + 1)) - 1)};
}

BladeIndex Signature::euclidean_pseudoscalar() const noexcept {
  return BladeIndex{pseudoscalar().bits & ~1u};
}

int reorder_sign(BladeIndex a, BladeIndex b) noexcept {
  // Count pairs (i in a, j in b) with i > j; each is one transposition.
  int swaps = 0;
  for (std::uint32_t x = a.bits >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b.bits);
  return (swaps & 1) ? -1 : 1;
}

BladeProduct blade_geometric_product(BladeIndex a, BladeIndex b, const Signature& sig) {
  if (!sig.contains(a) || !sig.contains(b))
    throw Error(ErrorKind::invalid_argument, "blade outside signature");
  // e_0 e_0 = 0; every other shared generator squares to +1.
  if (a.bits & b.bits & 1u) return {0, BladeIndex{}};
  return {reorder_sign(a, b), BladeIndex{a.bits ^ b.bits}};
}

// Sums terms per blade in insertion order and drops exact zeros.
class TermAccumulator {
 public:
  explicit TermAccumulator(Signature sig) : sig_(sig) {}
  void add(BladeIndex b, double c) { acc_[b.bits] += c; }
  Multivector finish() const {
    Multivector out(sig_);
    out.terms_.reserve(acc_.size());
    for (const auto& [bits, c] : acc_)
      if (c != 0.0) out.terms_.emplace_back(BladeIndex{bits}, c);
    return out;
  }

 private:
  Signature sig_;
  std::map<std::uint32_t, double> acc_;
};

Multivector::Multivector(Signature sig, std::vector<Term> terms) : sig_(sig) {
  TermAccumulator acc(sig);
  for (const auto& [b, c] : terms) {
    if (!sig.contains(b))
      throw Error(ErrorKind::invalid_argument, "blade " + blade_name(b) + " outside signature");
    if (!std::isfinite(c)) throw Error(ErrorKind::invalid_argument, "non-finite coefficient");
    acc.add(b, c);
  }
  *this = acc.finish();
}

Multivector Multivector::scalar(Signature sig, double value) {
  return Multivector(sig, {{BladeIndex{}, value}});
}

Multivector Multivector::blade(Signature sig, BladeIndex b, double coeff) {
  return Multivector(sig, {{b, coeff}});
}

Multivector Multivector::basis_vector(Signature sig, int i) {
  if (i < 0 || i > sig.n()) throw Error(ErrorKind::invalid_argument, "basis vector index out of range");
  return blade(sig, BladeIndex{1u << i});
}

Multivector Multivector::vector(Signature sig, std::span<const double> values) {
  if (values.size() != static_cast<std::size_t>(sig.generators()))
    throw Error(ErrorKind::invalid_argument, "vector needs n+1 coefficients");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < values.size(); ++i) terms.emplace_back(BladeIndex{1u << i}, values[i]);
  return Multivector(sig, std::move(terms));
}

double Multivector::coefficient(BladeIndex b) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const Term& t, BladeIndex key) { return t.first < key; });
  return (it != terms_.end() && it->first == b) ? it->second : 0.0;
}

std::vector<int> Multivector::grades() const {
  std::vector<int> out;
  for (const auto& [b, c] : terms_) out.push_back(b.grade());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> Multivector::homogeneous_grade() const {
  auto g = grades();
  if (g.size() != 1) return std::nullopt;
  return g.front();
}

double Multivector::norm_inf() const noexcept {
  double m = 0.0;
  for (const auto& [b, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double Multivector::norm2() const noexcept {
  double s = 0.0;
  for (const auto& [b, c] : terms_) s += c * c;
  return std::sqrt(s);
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require_same_signature(*this, rhs);
  TermAccumulator acc(sig_);
  for (const auto& [b, c] : terms_) acc.add(b, c);
  for (const auto& [b, c] : rhs.terms_) acc.add(b, c);
  return *this = acc.finish();
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  require_same_signature(*this, rhs);
  TermAccumulator acc(sig_);
  for (const auto& [b, c] : terms_) acc.add(b, c);
  for (const auto& [b, c] : rhs.terms_) acc.add(b, -c);
  return *this = acc.finish();
}

Multivector& Multivector::operator*=(double s) {
  if (!std::isfinite(s)) throw Error(ErrorKind::invalid_argument, "non-finite scale factor");
  std::vector<Term> scaled;
  scaled.reserve(terms_.size());
  for (const auto& [b, c] : terms_)
    if (double v = c * s; v != 0.0) scaled.emplace_back(b, v);
  terms_ = std::move(scaled);
  return *this;
}

bool operator==(const Multivector& a, const Multivector& b) {
  return a.sig_ == b.sig_ && a.terms_ == b.terms_;
}

void require_same_signature(const Multivector& a, const Multivector& b) {
  if (!(a.signature() == b.signature()))
    throw Error(ErrorKind::signature_mismatch,
                "operands belong to R_{" + std::to_string(a.signature().n()) + ",0,1} and R_{" +
                    std::to_string(b.signature().n()) + ",0,1}");
}

namespace {

// Bilinear product over stored terms, keeping the blade products accepted by
// `keep(a, b, result)`. All product operations share this loop so that
// operators with equal kept pair sets produce bit-identical coefficients.
template <class Keep>
Multivector filtered_product(const Multivector& a, const Multivector& b, Keep keep) {
  require_same_signature(a, b);
  const Signature& sig = a.signature();
  TermAccumulator acc(sig);
  for (const auto& [ja, ca] : a.terms()) {
    for (const auto& [jb, cb] : b.terms()) {
      const BladeProduct p = blade_geometric_product(ja, jb, sig);
      if (p.sign == 0 || !keep(ja, jb, p.blade)) continue;
      acc.add(p.blade, p.sign * ca * cb);
    }
  }
  return acc.finish();
}

}  // namespace

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  return filtered_product(a, b, [](BladeIndex, BladeIndex, BladeIndex) { return true; });
}

Multivector grade_select(const Multivector& a, int k) {
  std::vector<Multivector::Term> kept;
  for (const auto& t : a.terms())
    if (t.first.grade() == k) kept.push_back(t);
  return Multivector(a.signature(), std::move(kept));
}

double scalar_part(const Multivector& a) { return a.coefficient(BladeIndex{}); }

Multivector wedge(const Multivector& a, const Multivector& b) {
  return filtered_product(
      a, b, [](BladeIndex ja, BladeIndex jb, BladeIndex) { return (ja.bits & jb.bits) == 0; });
}

Multivector inner(const Multivector& a, const Multivector& b) {
  return filtered_product(a, b, [](BladeIndex ja, BladeIndex jb, BladeIndex out) {
    return out.grade() == std::abs(ja.grade() - jb.grade());
  });
}

Multivector commutator(const Multivector& a, const Multivector& b) {
  return filtered_product(a, b, [](BladeIndex ja, BladeIndex jb, BladeIndex out) {
    return !is_commuting_grade(out.grade(), ja.grade(), jb.grade());
  });
}

Multivector commutator_by_definition(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const Signature& sig = a.signature();
  TermAccumulator acc(sig);
  // 1/2 (e_J e_K - e_K e_J) expanded one term pair at a time
  for (const auto& [ja, ca] : a.terms()) {
    for (const auto& [jb, cb] : b.terms()) {
      const BladeProduct ab = blade_geometric_product(ja, jb, sig);
      const BladeProduct ba = blade_geometric_product(jb, ja, sig);
      if (ab.sign == 0) continue;
      acc.add(ab.blade, 0.5 * (ab.sign * ca * cb - ba.sign * cb * ca));
    }
  }
  return acc.finish();
}

Multivector involution(const Multivector& a, Involution kind) {
  std::vector<Multivector::Term> out;
  out.reserve(a.size());
  for (const auto& [b, c] : a.terms()) {
    const int k = b.grade();
    const int exponent = kind == Involution::reverse ? k * (k - 1) / 2 : k;
    out.emplace_back(b, (exponent & 1) ? -c : c);
  }
  return Multivector(a.signature(), std::move(out));
}

Pseudoscalars pseudoscalars(const Signature& sig) {
  return {Multivector::blade(sig, sig.pseudoscalar()),
          Multivector::blade(sig, sig.euclidean_pseudoscalar())};
}

namespace {

char index_char(int i) { return i < 10 ? static_cast<char>('0' + i) : static_cast<char>('a' + i - 10); }

int char_index(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
  return -1;
}

}  // namespace

std::string blade_name(BladeIndex b) {
  if (b.is_scalar()) return "1";
  std::string s = "e";
  for (int i = 0; i < 32; ++i)
    if (b.bits & (1u << i)) s += index_char(i);
  return s;
}

std::optional<BladeIndex> parse_blade_name(std::string_view name, const Signature& sig) {
  if (name == "1") return BladeIndex{};
  if (name.size() < 2 || name.front() != 'e') return std::nullopt;
  std::uint32_t bits = 0;
  int last = -1;
  for (char ch : name.substr(1)) {
    const int i = char_index(ch);
    if (i < 0 || i <= last || i > sig.n()) return std::nullopt;
    bits |= 1u << i;
    last = i;
  }
  return BladeIndex{bits};
}

std::string to_string(const Multivector& a) {
  if (a.is_zero()) return "0";
  std::string s;
  char buf[64];
  for (const auto& [b, c] : a.terms()) {
    std::snprintf(buf, sizeof buf, "%s%.17g", s.empty() ? "" : (c < 0 ? " - " : " + "),
                  s.empty() ? c : std::abs(c));
    s += buf;
    if (!b.is_scalar()) s += "*" + blade_name(b);
  }
  return s;
}

}  // namespace pga
