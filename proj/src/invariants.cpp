#include "fivesel/invariants.hpp"

namespace fivesel {

IJPair curve_to_ij(const Int& A, const Int& B) {
  return IJPair{Rat(-3 * A), Rat(-27 * B)};
}

}  // namespace fivesel
