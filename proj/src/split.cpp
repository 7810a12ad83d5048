#include "pga/split.hpp"

namespace pga {

Multivector SplitPair::reassemble() const {
  return euclid + geometric_product(Multivector::basis_vector(euclid.signature(), 0), ideal);
}

SplitPair euclidean_split(const Multivector& a) {
  std::vector<Multivector::Term> e, i;
  for (const auto& [b, c] : a.terms()) {
    if (b.has_null_factor())
      i.emplace_back(BladeIndex{b.bits & ~1u}, c);
    else
      e.emplace_back(b, c);
  }
  return {Multivector(a.signature(), std::move(e)), Multivector(a.signature(), std::move(i))};
}

}  // namespace pga
