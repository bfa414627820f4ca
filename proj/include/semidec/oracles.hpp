// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.
//
// Brute-force reference implementations.  They read the Cayley table
// directly and share no code with the fixed-point engine, the ideals module
// or the congruence enumerator.

#ifndef SEMIDEC_ORACLES_HPP_
#define SEMIDEC_ORACLES_HPP_

#include <cstddef>  // for size_t

#include "quasiorder.hpp"
#include "semigroup.hpp"

namespace semidec {
  namespace oracle {

    inline constexpr std::size_t default_subset_bound     = 20;
    inline constexpr std::size_t default_congruence_bound = 8;

    //! Intersection of all prime coideals (subsets whose characteristic
    //! function is multiplicative) that contain x.
    ElementSet up_class(Semigroup const& S, element x, std::size_t bound = default_subset_bound);

    //! x ≲ y iff every multiplicative χ : S → {0, 1} has χ(x) ≤ χ(y).
    BinaryRelation quasiorder(Semigroup const& S, std::size_t bound = default_subset_bound);

    //! The intersection of all congruences with semilattice quotient.
    Partition least_semilattice_congruence(Semigroup const& S, std::size_t bound = default_congruence_bound);

  }  // namespace oracle
}  // namespace semidec

#endif  // SEMIDEC_ORACLES_HPP_
