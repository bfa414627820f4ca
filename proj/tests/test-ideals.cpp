// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "semidec/homs.hpp"
#include "semidec/ideals.hpp"
#include "semidec/quasiorder.hpp"
#include "test-helpers.hpp"

namespace semidec {

  using test::a;
  using test::e;
  using test::set;
  using test::zero;

  TEST_CASE("is_ideal", "[ideals]") {
    CHECK(is_ideal(test::N2(), set(test::N2(), {0})));
    CHECK(!is_ideal(test::L2(), set(test::L2(), {0})));
    for (auto const& S : test::corpus(3)) {
      CHECK(is_ideal(S, ElementSet(S.order())));
      CHECK(is_ideal(S, ElementSet::full(S.order())));
    }
  }

  TEST_CASE("is_prime_ideal", "[ideals]") {
    CHECK(is_prime_ideal(test::chain3(), set(test::chain3(), {0})));
    CHECK(!is_prime_ideal(test::N2(), set(test::N2(), {0})));
    for (auto const& S : test::corpus(3)) {
      CHECK(is_prime_ideal(S, ElementSet::full(S.order())));
      CHECK(is_prime_ideal(S, ElementSet(S.order())));
    }
  }

  TEST_CASE("is_prime_coideal", "[ideals]") {
    auto const G0 = test::Z2_with_zero();
    CHECK(is_prime_coideal(G0, set(G0, {e, a})));
    CHECK(is_prime_coideal(test::two(), set(test::two(), {1})));
    CHECK(!is_prime_coideal(test::L2(), set(test::L2(), {0})));
  }

  TEST_CASE("prime coideal, prime ideal complement and homomorphism agree", "[ideals][property]") {
    std::mt19937_64 rng(20261018);
    std::vector<Semigroup> family = test::corpus(4);
    family.push_back(catalog::full_transformation_monoid(3));
    family.push_back(catalog::direct_product(test::Z2_with_zero(), test::chain3()));
    for (auto const& S : family) {
      for (int trial = 0; trial < 8; ++trial) {
        ElementSet A(S.order());
        for (element x = 0; x < S.order(); ++x) {
          if (rng() % 2 == 0) {
            A.insert(x);
          }
        }
        bool const coideal = is_prime_coideal(S, A);
        REQUIRE(coideal == is_prime_ideal(S, A.complement()));
        bool hom = true;
        try {
          hom_from_coideal(S, A);
        } catch (Error const&) {
          hom = false;
        }
        REQUIRE(coideal == hom);
      }
    }
  }

  TEST_CASE("enumerate_prime_coideals", "[ideals]") {
    auto const C = test::chain3();
    CHECK(enumerate_prime_coideals(C)
          == std::vector<ElementSet>{ElementSet(3), set(C, {2}), set(C, {1, 2}), set(C, {0, 1, 2})});
    auto const Z = test::Z2();
    CHECK(enumerate_prime_coideals(Z) == std::vector<ElementSet>{ElementSet(2), set(Z, {e, a})});
    auto const G0 = test::Z2_with_zero();
    CHECK(enumerate_prime_coideals(G0)
          == std::vector<ElementSet>{ElementSet(3), set(G0, {e, a}), set(G0, {e, a, zero})});
    CHECK_THROWS_MATCHES(enumerate_prime_coideals(catalog::chain_semilattice(5), 4),
                         Error,
                         Catch::Matchers::Predicate<Error const&>([](Error const& err) {
                           return err.kind() == ErrorKind::OrderTooLargeForExhaustive;
                         }));
  }

  TEST_CASE("prime coideals: ∅ and S present, sorted, intersections give up classes",
            "[ideals][property]") {
    for (auto const& S : test::corpus(4)) {
      auto const all = enumerate_prime_coideals(S);
      REQUIRE(all.front().empty());
      REQUIRE(all.back().is_full());
      for (std::size_t i = 1; i < all.size(); ++i) {
        REQUIRE(bit_pattern_less(all[i - 1], all[i]));
      }
      for (element x = 0; x < S.order(); ++x) {
        REQUIRE(smallest_prime_coideal_containing(S, x) == up_class(S, x).set);
      }
    }
  }

  TEST_CASE("smallest_prime_coideal_containing", "[ideals]") {
    CHECK(smallest_prime_coideal_containing(test::chain3(), 1) == set(test::chain3(), {1, 2}));
    CHECK(smallest_prime_coideal_containing(test::Z2(), e) == set(test::Z2(), {e, a}));
    auto const G0 = test::Z2_with_zero();
    CHECK(smallest_prime_coideal_containing(G0, zero) == set(G0, {e, a, zero}));
  }

}  // namespace semidec
