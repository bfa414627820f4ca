// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.
//
// Standard families of finite semigroups, exhaustive enumeration of all
// labeled semigroups of small order, and random transformation semigroups.

#ifndef SEMIDEC_CATALOG_HPP_
#define SEMIDEC_CATALOG_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <string>      // for string
#include <vector>      // for vector

#include "semigroup.hpp"

namespace semidec {

  namespace catalog {

    //! xy = x.
    Semigroup left_zero(std::size_t n);

    //! xy = y.
    Semigroup right_zero(std::size_t n);

    //! Every product is element 0 (labelled "0").
    Semigroup null_semigroup(std::size_t n);

    //! Z/n under addition; element 0 is the identity "e", k is "a^k".
    Semigroup cyclic_group(std::size_t n);

    //! {0, ..., n - 1} under min.  chain_semilattice(2) is {0, 1} under
    //! multiplication.
    Semigroup chain_semilattice(std::size_t n);

    //! (i, j)(k, l) = (i, l) on {0..p-1} × {0..q-1}, (i, j) has index iq + j.
    Semigroup rectangular_band(std::size_t p, std::size_t q);

    //! ⟨a | a^(index + period) = a^index⟩; a^k has index k - 1.
    Semigroup monogenic(std::size_t index, std::size_t period);

    //! All maps {0..k-1} → {0..k-1} with fg = f ∘ g, that is
    //! (fg)(t) = f(g(t)).  The map f has index Σ f(t) k^t.  Needs k ≤ 4.
    Semigroup full_transformation_monoid(std::size_t k);

    //! S × T componentwise; (s, t) has index s·|T| + t.
    Semigroup direct_product(Semigroup const& S, Semigroup const& T);

    //! S with a new zero of index |S|.
    Semigroup adjoin_zero(Semigroup const& S);

    //! cyclic_group(n) with a zero of index n.
    Semigroup group_with_zero(std::size_t n);

    //! Closure of `generators` random self-maps of {0..k-1} under
    //! composition, elements numbered in discovery order.  Deterministic
    //! for a given seed.  Throws ClosureTooLarge past 256 elements.
    Semigroup random_transformation_subsemigroup(std::size_t k, std::size_t generators, std::uint64_t seed);

    //! Closure of the given maps, each a vector of images; same numbering
    //! and cap as above.
    Semigroup transformation_semigroup(std::vector<std::vector<element>> const& generators);

    //! Calls `visit` with every associative table on {0..n-1}, in
    //! lexicographic row-major order.  Needs n ≤ 4.
    void for_each_semigroup(std::size_t n, std::function<void(Semigroup const&)> const& visit);

    std::vector<Semigroup> enumerate_all_semigroups(std::size_t n);

    //! Builds a named family from integer parameters, as used by
    //! `semidec generate`.  Throws ParameterOutOfRange.
    Semigroup by_name(std::string const& family, std::vector<std::size_t> const& params, std::uint64_t seed = 0);

    std::vector<std::string> family_names();

  }  // namespace catalog

}  // namespace semidec

#endif  // SEMIDEC_CATALOG_HPP_
