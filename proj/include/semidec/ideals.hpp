// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.
//
// Ideals, prime ideals and prime coideals.  A subset A is a prime coideal
// exactly when its characteristic function S → {0, 1} is a homomorphism, so
// enumerating prime coideals enumerates all homomorphisms into {0, 1}.  The
// empty set and S itself always count.

#ifndef SEMIDEC_IDEALS_HPP_
#define SEMIDEC_IDEALS_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "semigroup.hpp"

namespace semidec {

  //! Default largest order for which subsets are enumerated exhaustively.
  inline constexpr std::size_t default_exhaustive_bound = 24;

  //! (IS) ∪ (SI) ⊆ I.
  bool is_ideal(Semigroup const& S, ElementSet const& I);

  //! I is an ideal and S \ I is closed.
  bool is_prime_ideal(Semigroup const& S, ElementSet const& I);

  //! uv ∈ A ⇔ (u ∈ A and v ∈ A), for all u, v.
  bool is_prime_coideal(Semigroup const& S, ElementSet const& A);

  //! All prime coideals in ascending bit-pattern order.  Throws
  //! OrderTooLargeForExhaustive when S.order() > bound.
  std::vector<ElementSet> enumerate_prime_coideals(Semigroup const& S,
                                                   std::size_t bound = default_exhaustive_bound);

  //! Intersection of the prime coideals containing x.
  ElementSet smallest_prime_coideal_containing(Semigroup const& S,
                                               element          x,
                                               std::size_t      bound = default_exhaustive_bound);

}  // namespace semidec

#endif  // SEMIDEC_IDEALS_HPP_
