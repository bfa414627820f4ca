// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.
//
// Homomorphisms into the two-element semilattice {0, 1} and their extension
// from the preimage of a subsemilattice.

#ifndef SEMIDEC_HOMS_HPP_
#define SEMIDEC_HOMS_HPP_

#include <vector>  // for vector

#include "quasiorder.hpp"
#include "semigroup.hpp"

namespace semidec {

  //! A map from a closed subset `domain` of a semigroup into {0, 1}.  The
  //! assignment has one entry per element of the semigroup; entries outside
  //! the domain are 0 and carry no meaning.
  class TwoValuedHom {
   public:
    //! Throws NotASubsemigroup if the domain is not closed and
    //! NotAHomomorphism if the assignment is not multiplicative on it.
    TwoValuedHom(Semigroup const& S, ElementSet domain, std::vector<bool> assignment);

    ElementSet const& domain() const noexcept {
      return _domain;
    }

    bool operator()(element x) const noexcept {
      return _assignment[x];
    }

    std::vector<bool> const& assignment() const noexcept {
      return _assignment;
    }

    //! {x ∈ domain : value 1}, a prime coideal of the domain.
    ElementSet support() const;

    bool operator==(TwoValuedHom const&) const = default;

   private:
    ElementSet        _domain;
    std::vector<bool> _assignment;
  };

  //! True if the assignment restricted to `domain` is multiplicative.
  bool is_two_valued_hom(Semigroup const& S, ElementSet const& domain, std::vector<bool> const& assignment);

  //! A surjective homomorphism from `source` onto the semilattice `target`.
  class SurjectionOntoSemilattice {
   public:
    //! Throws NotASemilattice, NotAHomomorphism or NotASurjection.
    SurjectionOntoSemilattice(Semigroup source, Semigroup target, std::vector<element> map);

    //! The projection onto S/⇕ or any other semilattice quotient.
    static SurjectionOntoSemilattice from_quotient(Semigroup const& source, Quotient const& q);

    Semigroup const& source() const noexcept {
      return _source;
    }

    Semigroup const& target() const noexcept {
      return _target;
    }

    element operator()(element x) const noexcept {
      return _map[x];
    }

   private:
    Semigroup            _source;
    Semigroup            _target;
    std::vector<element> _map;
  };

  //! The characteristic function of a prime coideal.  Throws
  //! NotAPrimeCoideal.
  TwoValuedHom hom_from_coideal(Semigroup const& S, ElementSet const& A);

  //! π⁻¹[T] for a nonempty subsemilattice T of the target.  Throws
  //! NotASubsemilattice.
  ElementSet preimage_of_subsemilattice(SurjectionOntoSemilattice const& pi, ElementSet const& T);

  //! Extends f, defined on π⁻¹[T], to the whole source by
  //!
  //!   F(x) = 1  iff  there is z ∈ π⁻¹[T] with π(xz) ∈ T and f(xz) = 1.
  //!
  //! The result is checked to be a homomorphism agreeing with f on its
  //! domain.  Throws DomainMismatch if f's domain is not π⁻¹[T].
  TwoValuedHom extend_hom(SurjectionOntoSemilattice const& pi, ElementSet const& T, TwoValuedHom const& f);

}  // namespace semidec

#endif  // SEMIDEC_HOMS_HPP_
