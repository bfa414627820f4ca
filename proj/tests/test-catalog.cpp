// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "semidec/catalog.hpp"
#include "semidec/predicates.hpp"
#include "semidec/quasiorder.hpp"
#include "test-helpers.hpp"

namespace semidec {

  namespace {
    bool has_kind(ErrorKind kind, auto&& fn) {
      try {
        fn();
      } catch (Error const& err) {
        return err.kind() == kind;
      }
      return false;
    }

    std::vector<element> flat(Semigroup const& S) {
      return {S.table().begin(), S.table().end()};
    }
  }  // namespace

  TEST_CASE("labeled semigroup counts", "[catalog]") {
    std::size_t const expected[] = {0, 1, 8, 113, 3492};
    for (std::size_t n = 1; n <= 4; ++n) {
      std::size_t count = 0;
      catalog::for_each_semigroup(n, [&](Semigroup const&) { ++count; });
      REQUIRE(count == expected[n]);
    }
    CHECK(has_kind(ErrorKind::OrderTooLarge, [] { catalog::enumerate_all_semigroups(5); }));
  }

  TEST_CASE("a sample of order-4 tables passes the full triple check", "[catalog]") {
    std::mt19937_64 rng(4);
    std::size_t     sampled = 0;
    catalog::for_each_semigroup(4, [&](Semigroup const& S) {
      if (rng() % 100 == 0) {
        ++sampled;
        REQUIRE(!Semigroup::find_defect(4, S.table()));
      }
    });
    CHECK(sampled > 10);
  }

  TEST_CASE("enumeration matches the naive filter", "[catalog]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::set<std::vector<element>> fast;
      for (auto const& S : catalog::enumerate_all_semigroups(n)) {
        REQUIRE(fast.insert(flat(S)).second);
      }
      auto const naive = test::naive_semigroup_tables(n);
      REQUIRE(fast == std::set<std::vector<element>>(naive.begin(), naive.end()));
    }
  }

  TEST_CASE("small families", "[catalog]") {
    using namespace catalog;
    CHECK(flat(rectangular_band(2, 1)) == flat(left_zero(2)));
    CHECK(flat(rectangular_band(1, 2)) == flat(right_zero(2)));
    CHECK(cyclic_group(3).product(1, 2) == 0);
    CHECK(cyclic_group(3).label(2) == "a^2");
    CHECK(chain_semilattice(4).product(3, 1) == 1);
    CHECK(null_semigroup(3).label(0) == "0");

    auto const M = monogenic(2, 3);
    REQUIRE(M.order() == 4);
    // a·a^4 = a^5 = a^2
    CHECK(M.product(0, 3) == 1);

    auto const T2 = full_transformation_monoid(2);
    CHECK(T2.order() == 4);
    CHECK(full_transformation_monoid(3).order() == 27);

    auto const G0 = group_with_zero(3);
    CHECK(G0.order() == 4);
    CHECK(zero_element(G0) == element(3));
  }

  TEST_CASE("constructions", "[catalog]") {
    using namespace catalog;
    auto const P = direct_product(test::two(), test::chain3());
    CHECK(P.order() == 6);
    CHECK(P.is_commutative());
    CHECK(is_semilattice(P));
    CHECK(P.label(5) == "(1,2)");

    auto const Z = adjoin_zero(test::L2());
    CHECK(zero_element(Z) == element(2));
    CHECK(!is_simple(Z));
    CHECK(adjoin_zero(test::two()).label(2) == "z");
  }

  TEST_CASE("transformation semigroups", "[catalog]") {
    using namespace catalog;
    // both constant maps on {0, 1}: a left zero semigroup
    auto const C = transformation_semigroup({{0, 0}, {1, 1}});
    CHECK(flat(C) == flat(left_zero(2)));

    CHECK(random_transformation_subsemigroup(1, 3, 9).order() == 1);
    CHECK(flat(random_transformation_subsemigroup(4, 2, 42)) == flat(random_transformation_subsemigroup(4, 2, 42)));

    CHECK(has_kind(ErrorKind::ClosureTooLarge,
                   [] { transformation_semigroup({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}, {0, 0, 2, 3, 4}}); }));
    CHECK(has_kind(ErrorKind::ParameterOutOfRange, [] { transformation_semigroup({{0, 5}}); }));
    CHECK(has_kind(ErrorKind::ParameterOutOfRange, [] { random_transformation_subsemigroup(9, 1, 0); }));
    CHECK(has_kind(ErrorKind::ParameterOutOfRange, [] { full_transformation_monoid(5); }));
    CHECK(has_kind(ErrorKind::ParameterOutOfRange, [] { left_zero(0); }));
  }

  TEST_CASE("by_name", "[catalog]") {
    CHECK(flat(catalog::by_name("rectangular-band", {2, 3})) == flat(catalog::rectangular_band(2, 3)));
    CHECK(flat(catalog::by_name("random_transformation", {4, 2}, 3))
          == flat(catalog::random_transformation_subsemigroup(4, 2, 3)));
    for (auto const& name : catalog::family_names()) {
      std::vector<std::size_t> params
          = name == "rectangular_band" || name == "monogenic" || name == "random_transformation"
                ? std::vector<std::size_t>{2, 2}
                : std::vector<std::size_t>{2};
      CHECK_NOTHROW(catalog::by_name(name, params, 1));
    }
    CHECK(has_kind(ErrorKind::ParameterOutOfRange, [] { catalog::by_name("nope", {1}); }));
    CHECK(has_kind(ErrorKind::ParameterOutOfRange, [] { catalog::by_name("chain", {1, 2}); }));
  }

}  // namespace semidec
