// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.
//
// The binary quasiorder x ≲ y holds when every homomorphism χ : S → {0, 1}
// has χ(x) ≤ χ(y).  It is computed here without enumerating homomorphisms:
// the upper class ⇑x is the least fixed point of
//
//   A  ↦  {y ∈ S : S¹yS¹ ∩ AA ≠ ∅}
//
// started at {x}.  The induced equivalence ⇕ is the least semilattice
// congruence, and S/⇕ is a semilattice whose classes are semilattice
// indecomposable.

#ifndef SEMIDEC_QUASIORDER_HPP_
#define SEMIDEC_QUASIORDER_HPP_

#include <cstddef>  // for size_t
#include <utility>  // for pair
#include <vector>   // for vector

#include "semigroup.hpp"

namespace semidec {

  //! n × n boolean matrix over the elements of a semigroup.
  class BinaryRelation {
   public:
    BinaryRelation() = default;
    explicit BinaryRelation(std::size_t order) : _order(order), _matrix(order * order, 0) {}

    std::size_t order() const noexcept {
      return _order;
    }

    bool operator()(element x, element y) const noexcept {
      return _matrix[static_cast<std::size_t>(x) * _order + y] != 0;
    }

    void set(element x, element y, bool value = true) {
      _matrix[static_cast<std::size_t>(x) * _order + y] = value ? 1 : 0;
    }

    bool is_reflexive() const noexcept;
    bool is_transitive() const noexcept;
    bool is_antisymmetric() const noexcept;

    //! Pairs (x, y), x ≠ y, related with nothing strictly between them.
    //! Only meaningful for partial orders.
    std::vector<std::pair<element, element>> hasse_pairs() const;

    bool operator==(BinaryRelation const&) const = default;

   private:
    std::size_t               _order = 0;
    std::vector<unsigned char> _matrix;
  };

  //! An equivalence relation as a list of classes.  Class ids are canonical:
  //! classes are numbered in increasing order of their smallest member.
  class Partition {
   public:
    Partition() = default;

    //! Renumbers `labels` canonically; any labelling of the classes works.
    static Partition from_labels(std::vector<std::size_t> const& labels);
    static Partition discrete(std::size_t order);
    static Partition single_class(std::size_t order);

    std::size_t order() const noexcept {
      return _class_of.size();
    }

    std::size_t number_of_classes() const noexcept {
      return _classes.size();
    }

    std::size_t class_of(element x) const noexcept {
      return _class_of[x];
    }

    std::vector<std::size_t> const& class_ids() const noexcept {
      return _class_of;
    }

    std::vector<ElementSet> const& classes() const noexcept {
      return _classes;
    }

    bool same_class(element x, element y) const noexcept {
      return _class_of[x] == _class_of[y];
    }

    bool operator==(Partition const& that) const {
      return _class_of == that._class_of;
    }

   private:
    std::vector<std::size_t> _class_of;
    std::vector<ElementSet>  _classes;
  };

  //! A quotient S/≈ together with the projection S → S/≈.  Quotient element
  //! i is the class with canonical id i.
  struct Quotient {
    Semigroup            quotient;
    std::vector<element> projection;
  };

  //! The stages ⇑₀x ⊆ ⇑₁x ⊆ ... of the fixed-point iteration; consecutive
  //! stages are distinct and the last one is ⇑x.
  struct UpClass {
    ElementSet              set;
    std::vector<ElementSet> stages;

    //! The least n with y ∈ ⇑ₙx, or stages.size() when y ∉ ⇑x.
    std::size_t entry_stage(element y) const;
  };

  //! Principal two-sided ideals S¹xS¹ for every x, computed once.
  class PrincipalIdeals {
   public:
    explicit PrincipalIdeals(Semigroup const& S);

    ElementSet const& operator[](element x) const noexcept {
      return _ideals[x];
    }

   private:
    std::vector<ElementSet> _ideals;
  };

  //! {y : S¹yS¹ ∩ AA ≠ ∅}.
  ElementSet up_step(Semigroup const& S, ElementSet const& A);
  ElementSet up_step(Semigroup const& S, PrincipalIdeals const& ideals, ElementSet const& A);

  UpClass up_class(Semigroup const& S, element x);
  UpClass up_class(Semigroup const& S, PrincipalIdeals const& ideals, element x);

  //! matrix(x, y) iff y ∈ ⇑x.
  BinaryRelation binary_quasiorder(Semigroup const& S);

  //! ⇓x = {y : y ≲ x}.
  ElementSet down_class(Semigroup const& S, element x);

  //! ⇕x = ⇑x ∩ ⇓x.
  ElementSet two_class(Semigroup const& S, element x);

  //! The partition of S into ⇕-classes, that is, the least semilattice
  //! congruence.
  Partition least_semilattice_congruence(Semigroup const& S);
  Partition least_semilattice_congruence(Semigroup const& S, BinaryRelation const& quasiorder);

  //! Returns a pair (x, y) in the same class and an a such that ax, ay or xa,
  //! ya are in different classes, or nothing if `P` is a congruence.
  std::optional<std::pair<element, element>> congruence_violation(Semigroup const& S, Partition const& P);

  bool is_congruence(Semigroup const& S, Partition const& P);

  //! Throws NotACongruence with the violating pair in `details()`.
  Quotient quotient(Semigroup const& S, Partition const& P);

  //! As `quotient` and additionally throws NotASemilattice if S/P is not a
  //! semilattice.
  Quotient quotient_semilattice(Semigroup const& S, Partition const& P);

  bool is_semilattice(Semigroup const& S) noexcept;

  //! x ≤ y iff xy = x.  Throws NotASemilattice.
  BinaryRelation natural_order(Semigroup const& L);

}  // namespace semidec

#endif  // SEMIDEC_QUASIORDER_HPP_
