// oracle.hpp — brute-force reference implementation of the generalized
// conjugate array and eBWT. Quadratic-ish and allocation-free per
// comparison; intended for tests and the `check` command, not production.
#pragma once

#include "cebwt/types.hpp"

namespace cebwt {

// Sorts every (position, document) conjugate of the collection by
// omega-order, breaking ties between identical conjugates by document
// index and then by position. Handles non-primitive and duplicate
// documents natively.
Gca oracle_gca(const SeqCollection& coll);

// ebwt_from_gca over oracle_gca.
EbwtResult oracle_ebwt(const SeqCollection& coll, bool with_samples = false);

}  // namespace cebwt
