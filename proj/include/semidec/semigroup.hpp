// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.
//
// This file contains the Cayley-table representation of a finite semigroup,
// subsets of its elements, and the elementary constructions (adjoined
// identity, products of sets, monogenic subsemigroups, idempotents,
// H-classes and maximal subgroups).

#ifndef SEMIDEC_SEMIGROUP_HPP_
#define SEMIDEC_SEMIGROUP_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "error.hpp"

namespace semidec {

  //! A subset of the elements of a semigroup of fixed order.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t order) : _order(order), _words((order + 63) / 64, 0) {}
    ElementSet(std::size_t order, std::initializer_list<element> members);
    ElementSet(std::size_t order, std::span<element const> members);

    static ElementSet full(std::size_t order);

    std::size_t order() const noexcept {
      return _order;
    }

    bool contains(element x) const noexcept {
      return x < _order && ((_words[x / 64] >> (x % 64)) & 1u);
    }

    void insert(element x);
    void erase(element x);

    std::size_t size() const noexcept;
    bool        empty() const noexcept;
    bool        is_full() const noexcept {
      return size() == _order;
    }

    std::vector<element> members() const;

    //! The smallest member; undefined on the empty set.
    element front() const;

    bool is_subset_of(ElementSet const& that) const;
    bool intersects(ElementSet const& that) const;

    ElementSet operator&(ElementSet const& that) const;
    ElementSet operator|(ElementSet const& that) const;
    ElementSet complement() const;

    bool operator==(ElementSet const& that) const = default;

    //! Orders sets by their bit-patterns read as binary numbers, element 0
    //! being the least significant bit.
    friend bool bit_pattern_less(ElementSet const& lhs, ElementSet const& rhs);

    //! Only for orders up to 64.
    std::uint64_t to_mask() const;
    static ElementSet from_mask(std::size_t order, std::uint64_t mask);

   private:
    void check_compatible(ElementSet const& that) const;

    std::size_t                _order = 0;
    std::vector<std::uint64_t> _words;
  };

  //! Location and nature of the first defect found in a candidate table.
  struct TableDefect {
    ErrorKind            kind;
    std::vector<element> where;  // (i, j) or (i, j, k)
  };

  //! A finite semigroup given by its Cayley table.  Instances are immutable
  //! and can only be obtained through validation, so the table is always
  //! associative.
  class Semigroup {
   public:
    //! Throws Error with kind InvalidShape, EntryOutOfRange or
    //! NonAssociative; `details()` holds the offending cell or triple.
    static Semigroup validate(std::vector<std::vector<element>> const& table,
                              std::vector<std::string>                 labels = {});

    //! Flat row-major variant of `validate`.
    static Semigroup validate(std::size_t              order,
                              std::vector<element>     table,
                              std::vector<std::string> labels = {});

    //! Returns the first defect in row-major (i, j) or lexicographic
    //! (i, j, k) order, or nullopt when the table is a semigroup.
    static std::optional<TableDefect> find_defect(std::size_t                 order,
                                                  std::span<element const> table);

    std::size_t order() const noexcept {
      return _order;
    }

    element product(element x, element y) const noexcept {
      return _table[static_cast<std::size_t>(x) * _order + y];
    }

    std::span<element const> row(element x) const noexcept {
      return {_table.data() + static_cast<std::size_t>(x) * _order, _order};
    }

    std::span<element const> table() const noexcept {
      return _table;
    }

    std::vector<std::vector<element>> rows() const;

    bool has_labels() const noexcept {
      return !_labels.empty();
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    //! The label of `x`, or its decimal index when there are no labels.
    std::string label(element x) const;

    //! Looks up an element by label or decimal index.
    std::optional<element> find(std::string_view name) const;

    bool is_commutative() const noexcept;

    Semigroup with_labels(std::vector<std::string> labels) const;

    bool operator==(Semigroup const& that) const {
      return _order == that._order && _table == that._table;
    }

   private:
    Semigroup(std::size_t order, std::vector<element> table, std::vector<std::string> labels);

    std::size_t              _order = 0;
    std::vector<element>     _table;
    std::vector<std::string> _labels;
  };

  //! X¹ = X ∪ {1}; the identity is always the fresh element with index
  //! `base.order()`, even when `base` is already a monoid.
  struct AdjoinedSemigroup {
    Semigroup result;
    element   identity;
  };

  AdjoinedSemigroup adjoin_identity(Semigroup const& S);

  //! {ab : a ∈ A, b ∈ B}.
  ElementSet product_sets(Semigroup const& S, ElementSet const& A, ElementSet const& B);

  struct Monogenic {
    ElementSet  set;     // {x, x², x³, ...}
    std::size_t index;   // least m with x^m = x^(m + period)
    std::size_t period;  // least period of the eventual cycle
  };

  Monogenic monogenic(Semigroup const& S, element x);

  //! E(S).
  ElementSet idempotents(Semigroup const& S);

  //! X¹xX¹ = {x} ∪ xS ∪ Sx ∪ SxS.
  ElementSet principal_two_sided_ideal(Semigroup const& S, element x);

  //! SxS, without the adjoined identity.
  ElementSet two_sided_product(Semigroup const& S, element x);

  //! xX¹ and X¹x.
  ElementSet principal_right_ideal(Semigroup const& S, element x);
  ElementSet principal_left_ideal(Semigroup const& S, element x);

  //! H_a = {x : xX¹ = aX¹ and X¹x = X¹a}.
  ElementSet h_class(Semigroup const& S, element a);

  //! H_e for an idempotent e, checked to be a group with identity e.
  //! Throws NotIdempotent if `e` is not idempotent.
  ElementSet maximal_subgroup(Semigroup const& S, element e);

  //! True if `A` is closed under the product (the empty set is closed).
  bool is_closed(Semigroup const& S, ElementSet const& A);

  //! The restriction of the table to a closed subset.
  struct Subsemigroup {
    Semigroup            semigroup;
    std::vector<element> embedding;  // local index -> element of the parent
  };

  //! Throws NotASubsemigroup if `A` is empty or not closed.
  Subsemigroup restrict_to(Semigroup const& S, ElementSet const& A);

  //! Zero element of S, if it has one.
  std::optional<element> zero_element(Semigroup const& S);

}  // namespace semidec

#endif  // SEMIDEC_SEMIGROUP_HPP_
