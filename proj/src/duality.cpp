#include "pga/duality.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

#include "pga/split.hpp"

namespace pga {

namespace {

constexpr int kCachedDimension = 16;

int complement_sign(BladeIndex j, const Signature& sig) {
  const BladeIndex complement{sig.full_mask().bits & ~j.bits};
  return reorder_sign(j, complement);
}

// Sign table indexed by blade mask, built once per dimension and then shared
// read-only.
const std::vector<std::int8_t>& sign_table(const Signature& sig) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<std::int8_t>>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[sig.n()];
  if (!slot) {
    auto table = std::make_unique<std::vector<std::int8_t>>(sig.blade_count());
    for (std::uint32_t bits = 0; bits < sig.blade_count(); ++bits)
      (*table)[bits] = static_cast<std::int8_t>(complement_sign(BladeIndex{bits}, sig));
    slot = std::move(table);
  }
  return *slot;
}

}  // namespace

int dual_sign(BladeIndex j, const Signature& sig) {
  if (sig.n() <= kCachedDimension) return sign_table(sig)[j.bits];
  return complement_sign(j, sig);
}

int double_dual_sign(int grade, int n) noexcept {
  return ((grade * (n + 1 - grade)) & 1) ? -1 : 1;
}

Multivector hodge_dual(const Multivector& a) {
  const Signature& sig = a.signature();
  const std::uint32_t full = sig.full_mask().bits;
  std::vector<Multivector::Term> out;
  out.reserve(a.size());
  for (const auto& [b, c] : a.terms())
    out.emplace_back(BladeIndex{full & ~b.bits}, dual_sign(b, sig) * c);
  return Multivector(sig, std::move(out));
}

Multivector hodge_undual(const Multivector& a) {
  const Signature& sig = a.signature();
  const std::uint32_t full = sig.full_mask().bits;
  std::vector<Multivector::Term> out;
  out.reserve(a.size());
  for (const auto& [b, c] : a.terms()) {
    const BladeIndex pre{full & ~b.bits};
    out.emplace_back(pre, dual_sign(pre, sig) * c);
  }
  return Multivector(sig, std::move(out));
}

Multivector hodge_dual_closed_form(const Multivector& a) {
  const Signature& sig = a.signature();
  const auto [euclid, ideal] = euclidean_split(a);
  const Multivector i_e = Multivector::blade(sig, sig.euclidean_pseudoscalar());
  const Multivector e0 = Multivector::basis_vector(sig, 0);
  return reverse(ideal) * i_e + e0 * (grade_involution(reverse(euclid)) * i_e);
}

Multivector regressive(const Multivector& a, const Multivector& b) {
  return hodge_dual(wedge(hodge_dual(a), hodge_dual(b)));
}

Multivector inner_dual(const Multivector& a, const Multivector& b) {
  return hodge_dual(inner(hodge_dual(a), hodge_dual(b)));
}

Multivector commutator_dual(const Multivector& a, const Multivector& b) {
  return hodge_dual(commutator(hodge_dual(a), hodge_dual(b)));
}

}  // namespace pga
