#pragma once

#include "pga/multivector.hpp"

namespace pga {

// A = euclid + e_0 ideal, neither part carrying an e_0 factor.
struct SplitPair {
  Multivector euclid;
  Multivector ideal;

  // euclid + e_0 * ideal
  Multivector reassemble() const;
};

// Terms are partitioned on bit 0. Since e_0 is the lowest generator, factoring
// it out on the left never changes a sign.
SplitPair euclidean_split(const Multivector& a);

}  // namespace pga
