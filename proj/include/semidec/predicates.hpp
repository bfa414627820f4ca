// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.
//
// Decision procedures for the structural classes that interact with the
// binary quasiorder, and the structural checks that hold for them.

#ifndef SEMIDEC_PREDICATES_HPP_
#define SEMIDEC_PREDICATES_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "quasiorder.hpp"
#include "semigroup.hpp"

namespace semidec {

  inline constexpr std::size_t default_congruence_bound = 8;

  //! Every homomorphism to {0, 1} is constant: ⇑x = S for every x.
  bool is_two_trivial(Semigroup const& S);

  //! The same, decided by enumerating prime ideals: S is two-trivial iff
  //! ∅ and S are its only prime ideals.
  bool is_two_trivial_via_prime_ideals(Semigroup const& S, std::size_t bound);

  //! For all x, y some power of x lies in SyS (no adjoined identity).
  bool is_archimedean(Semigroup const& S);

  //! aS = Sa for every a.
  bool is_duo(Semigroup const& S);

  //! xy = yx whenever xy and yx are both idempotent.
  bool is_viable(Semigroup const& S);

  //! Exactly one idempotent.
  bool is_unipotent(Semigroup const& S);

  //! S¹xS¹ = S for every x.
  bool is_simple(Semigroup const& S);

  //! Has a zero z, SS ≠ {z}, and every principal ideal is {z} or S.
  bool is_zero_simple(Semigroup const& S);

  //! Partitions in restricted-growth-string order that are congruences.
  //! Throws OrderTooLargeForExhaustive when S.order() > bound.
  std::vector<Partition> enumerate_congruences(Semigroup const& S,
                                               std::size_t bound = default_congruence_bound);

  //! Only Δ and S × S are congruences.
  bool is_congruence_free(Semigroup const& S, std::size_t bound = default_congruence_bound);

  //! {z : zx = xz for all x}.
  ElementSet center(Semigroup const& S);

  struct UnipotentReport {
    element e;
    bool    h_e_is_ideal;
    bool    e_central;
  };

  //! For a unipotent two-trivial S with idempotent e: whether H_e is an
  //! ideal and whether e is central.  Throws PreconditionNotMet otherwise.
  UnipotentReport check_unipotent_structure(Semigroup const& S);

  struct UpClassReport {
    ElementSet set;
    bool       agrees;
  };

  //! For viable S and idempotent e: {x : e ∈ S¹xS¹} compared with ⇑e.
  UpClassReport check_viable_upclass(Semigroup const& S, element e);

  //! For duo S: {x : a^ℕ ∩ SxS ≠ ∅} compared with ⇑a.
  UpClassReport check_duo_upclass(Semigroup const& S, element a);

}  // namespace semidec

#endif  // SEMIDEC_PREDICATES_HPP_
