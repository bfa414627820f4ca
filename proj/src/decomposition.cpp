// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include "semidec/decomposition.hpp"

#include "semidec/predicates.hpp"

namespace semidec {

  TamuraDecomposition decompose(Semigroup const& S) {
    auto classes = least_semilattice_congruence(S);
    auto q       = quotient_semilattice(S, classes);
    auto order   = natural_order(q.quotient);
    std::vector<bool> trivial;
    for (auto const& C : classes.classes()) {
      trivial.push_back(is_two_trivial(restrict_to(S, C).semigroup));
    }
    return {std::move(classes), std::move(q), std::move(order), std::move(trivial)};
  }

}  // namespace semidec
