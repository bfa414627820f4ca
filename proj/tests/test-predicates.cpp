// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include <catch2/catch_amalgamated.hpp>

#include "semidec/ideals.hpp"
#include "semidec/oracles.hpp"
#include "semidec/predicates.hpp"
#include "test-helpers.hpp"

namespace semidec {

  using test::a;
  using test::e;
  using test::set;
  using test::zero;

  TEST_CASE("is_two_trivial", "[predicates]") {
    CHECK(is_two_trivial(test::Z2()));
    CHECK(is_two_trivial(test::L2()));
    CHECK(!is_two_trivial(test::two()));
    CHECK(is_two_trivial(catalog::chain_semilattice(1)));
    CHECK(is_two_trivial(test::N2()));
  }

  TEST_CASE("is_two_trivial agrees with the prime ideal route", "[predicates][property]") {
    for (auto const& S : test::corpus(4)) {
      REQUIRE(is_two_trivial(S) == is_two_trivial_via_prime_ideals(S, 24));
    }
  }

  TEST_CASE("is_archimedean", "[predicates]") {
    CHECK(is_archimedean(test::N2()));
    CHECK(!is_archimedean(test::chain3()));
    CHECK(is_archimedean(test::Z2()));
  }

  TEST_CASE("is_duo", "[predicates]") {
    CHECK(is_duo(test::chain3()));
    CHECK(is_duo(test::Z2_with_zero()));
    CHECK(!is_duo(test::L2()));
    CHECK(is_duo(test::Z2()));
    for (auto const& S : test::corpus(3)) {
      if (S.is_commutative()) {
        REQUIRE(is_duo(S));
      }
    }
  }

  TEST_CASE("is_viable", "[predicates]") {
    CHECK(is_viable(test::chain3()));
    CHECK(!is_viable(test::L2()));
    CHECK(is_viable(test::Z2_with_zero()));
  }

  TEST_CASE("is_unipotent", "[predicates]") {
    CHECK(is_unipotent(test::Z2()));
    CHECK(is_unipotent(test::N2()));
    CHECK(!is_unipotent(test::two()));
  }

  TEST_CASE("is_simple", "[predicates]") {
    CHECK(is_simple(test::Z2()));
    CHECK(is_simple(test::L2()));
    CHECK(!is_simple(test::N2()));
  }

  TEST_CASE("is_zero_simple", "[predicates]") {
    CHECK(is_zero_simple(test::Z2_with_zero()));
    CHECK(!is_zero_simple(test::N2()));
    CHECK(!is_zero_simple(test::Z2()));
    CHECK(!is_zero_simple(catalog::chain_semilattice(1)));
    // The 2-element chain {0, 1} is 0-simple: its only ideals are {0} and S.
    CHECK(is_zero_simple(test::two()));
  }

  TEST_CASE("enumerate_congruences", "[predicates]") {
    auto const C   = test::chain3();
    auto const all = enumerate_congruences(C);
    CHECK(all
          == std::vector<Partition>{Partition::single_class(3),
                                    Partition::from_labels({0, 0, 1}),
                                    Partition::from_labels({0, 1, 1}),
                                    Partition::discrete(3)});
    CHECK(enumerate_congruences(test::Z2()).size() == 2);
    CHECK_THROWS_AS(enumerate_congruences(catalog::chain_semilattice(9)), Error);
  }

  TEST_CASE("enumerate_congruences visits Bell(n) partitions", "[predicates]") {
    // Every product in a null semigroup is 0, so every partition is a
    // congruence.
    std::size_t const bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (std::size_t n = 1; n <= 8; ++n) {
      REQUIRE(enumerate_congruences(catalog::null_semigroup(n)).size() == bell[n]);
    }
  }

  TEST_CASE("congruences contain Δ and S × S and pass the quotient check", "[predicates][property]") {
    for (auto const& S : test::corpus(3)) {
      auto const all = enumerate_congruences(S);
      REQUIRE(std::find(all.begin(), all.end(), Partition::discrete(S.order())) != all.end());
      REQUIRE(std::find(all.begin(), all.end(), Partition::single_class(S.order())) != all.end());
      for (auto const& P : all) {
        REQUIRE_NOTHROW(quotient(S, P));
      }
    }
  }

  TEST_CASE("is_congruence_free", "[predicates]") {
    CHECK(is_congruence_free(test::Z2()));
    CHECK(is_congruence_free(test::two()));
    CHECK(!is_congruence_free(test::chain3()));
    CHECK(is_congruence_free(catalog::chain_semilattice(1)));
    CHECK(is_congruence_free(catalog::cyclic_group(5)));
    CHECK(!is_congruence_free(catalog::cyclic_group(4)));
  }

  TEST_CASE("center", "[predicates]") {
    CHECK(center(test::chain3()).is_full());
    CHECK(center(test::L2()).empty());
    CHECK(center(test::Z2_with_zero()) == set(test::Z2_with_zero(), {e, a, zero}));
  }

  TEST_CASE("check_unipotent_structure", "[predicates]") {
    auto r = check_unipotent_structure(test::Z2());
    CHECK((r.h_e_is_ideal && r.e_central));
    r = check_unipotent_structure(test::N2());
    CHECK((r.h_e_is_ideal && r.e_central));
    CHECK(r.e == 0);
    auto const M = catalog::monogenic(2, 2);
    REQUIRE(M.order() == 3);
    r = check_unipotent_structure(M);
    CHECK((r.h_e_is_ideal && r.e_central));
    CHECK_THROWS_AS(check_unipotent_structure(test::two()), Error);
  }

  TEST_CASE("check_viable_upclass", "[predicates]") {
    auto const G0 = test::Z2_with_zero();
    auto       r  = check_viable_upclass(G0, e);
    CHECK(r.set == set(G0, {e, a}));
    CHECK(r.agrees);
    r = check_viable_upclass(test::chain3(), 1);
    CHECK(r.set == set(test::chain3(), {1, 2}));
    CHECK(r.agrees);
    auto const D = test::diamond();
    for (element f = 0; f < 4; ++f) {
      CHECK(check_viable_upclass(D, f).agrees);
    }
    CHECK_THROWS_AS(check_viable_upclass(test::L2(), 0), Error);
    CHECK_THROWS_AS(check_viable_upclass(G0, a), Error);
  }

  TEST_CASE("check_duo_upclass", "[predicates]") {
    auto r = check_duo_upclass(test::N2(), 1);
    CHECK(r.set == set(test::N2(), {0, 1}));
    CHECK(r.agrees);
    r = check_duo_upclass(test::chain3(), 1);
    CHECK(r.set == set(test::chain3(), {1, 2}));
    CHECK(r.agrees);
    r = check_duo_upclass(test::Z2(), e);
    CHECK(r.set == set(test::Z2(), {e, a}));
    CHECK(r.agrees);
    CHECK_THROWS_AS(check_duo_upclass(test::L2(), 0), Error);
  }

  TEST_CASE("structure theorems over the order-4 corpus", "[predicates][property]") {
    for (auto const& S : test::corpus(4)) {
      bool const trivial = is_two_trivial(S);
      if (is_duo(S)) {
        REQUIRE(is_archimedean(S) == trivial);
        for (element x = 0; x < S.order(); ++x) {
          REQUIRE(check_duo_upclass(S, x).agrees);
        }
      }
      if (is_viable(S)) {
        for (auto f : idempotents(S).members()) {
          REQUIRE(check_viable_upclass(S, f).agrees);
        }
        auto const E   = idempotents(S);
        auto const eta = least_semilattice_congruence(S);
        for (auto const& C : eta.classes()) {
          REQUIRE((C & E).size() <= 1);
        }
      }
      if (is_unipotent(S) && trivial) {
        auto const r = check_unipotent_structure(S);
        REQUIRE(r.h_e_is_ideal);
        REQUIRE(r.e_central);
      }
      if (is_simple(S)) {
        REQUIRE(trivial);
      }
      // Every 2-element semigroup is congruence-free, {0, 1} included, so
      // the implication needs order 3.
      if (S.order() >= 3 && is_congruence_free(S)) {
        REQUIRE(trivial);
      }
      REQUIRE((enumerate_prime_coideals(S).size() == 2) == trivial);
    }
  }

}  // namespace semidec
