#pragma once

#include "klrsk/combinatorics.hpp"
#include "klrsk/symgroup.hpp"

namespace klrsk {

// P is the recording tableau and Q the insertion tableau of row-inserting 1w, ..., nw.
struct RskPair {
  Tableau P;
  Tableau Q;

  friend bool operator==(const RskPair&, const RskPair&) = default;
};

RskPair rsk(const Permutation& w);
Permutation rskInverse(const RskPair& pair);
Permutation rskInverse(const Tableau& P, const Tableau& Q);
Partition rskShape(const Permutation& w);

}  // namespace klrsk
