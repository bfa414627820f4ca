// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.
//
// Named small semigroups and the exhaustive corpus shared by the tests.

#ifndef SEMIDEC_TESTS_TEST_HELPERS_HPP_
#define SEMIDEC_TESTS_TEST_HELPERS_HPP_

#include <cstddef>
#include <vector>

#include "semidec/catalog.hpp"
#include "semidec/semigroup.hpp"

namespace semidec::test {

  // L2 = {a, b} with xy = x; a = 0, b = 1.
  inline Semigroup L2() {
    return catalog::left_zero(2);
  }

  // Z2 = {e, a}; e = 0, a = 1.
  inline Semigroup Z2() {
    return catalog::cyclic_group(2);
  }

  // N2 = {0, a}, all products 0; 0 = 0, a = 1.
  inline Semigroup N2() {
    return catalog::null_semigroup(2);
  }

  // {0, 1} under multiplication.
  inline Semigroup two() {
    return catalog::chain_semilattice(2);
  }

  // {0, 1, 2} under min.
  inline Semigroup chain3() {
    return catalog::chain_semilattice(3);
  }

  // Z2 ∪ {0}; e = 0, a = 1, 0 = 2.
  inline Semigroup Z2_with_zero() {
    return catalog::group_with_zero(2);
  }

  // {0,1} × {0,1} under componentwise min; 0 = bottom, 3 = top.
  inline Semigroup diamond() {
    return catalog::direct_product(two(), two());
  }

  inline constexpr element e = 0, a = 1, zero = 2;

  // All labeled semigroups of order 1 to max_order, computed once.
  std::vector<Semigroup> const& corpus(std::size_t max_order = 4);

  // Tables over {0..n-1} surviving the naive triple check, by exhaustive
  // enumeration of all n^(n*n) tables.  Shares nothing with the library.
  std::vector<std::vector<element>> naive_semigroup_tables(std::size_t n);

  inline ElementSet set(Semigroup const& S, std::initializer_list<element> xs) {
    return ElementSet(S.order(), xs);
  }

}  // namespace semidec::test

#endif  // SEMIDEC_TESTS_TEST_HELPERS_HPP_
