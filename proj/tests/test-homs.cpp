// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

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

  namespace {
    SurjectionOntoSemilattice identity_on(Semigroup const& L) {
      std::vector<element> id(L.order());
      for (element x = 0; x < L.order(); ++x) {
        id[x] = x;
      }
      return SurjectionOntoSemilattice(L, L, id);
    }

    SurjectionOntoSemilattice two_projection(Semigroup const& S) {
      return SurjectionOntoSemilattice::from_quotient(
          S, quotient_semilattice(S, least_semilattice_congruence(S)));
    }

    bool has_kind(ErrorKind kind, auto&& fn) {
      try {
        fn();
      } catch (Error const& err) {
        return err.kind() == kind;
      }
      return false;
    }

    // Every nonempty closed subset of L, as bit masks.
    std::vector<ElementSet> subsemilattices(Semigroup const& L) {
      std::vector<ElementSet> result;
      for (std::uint64_t m = 1; m < (std::uint64_t(1) << L.order()); ++m) {
        auto const T = ElementSet::from_mask(L.order(), m);
        if (is_closed(L, T)) {
          result.push_back(T);
        }
      }
      return result;
    }

    // Every homomorphism from the closed set D ⊆ S into {0, 1}.
    std::vector<TwoValuedHom> homs_on(Semigroup const& S, ElementSet const& D) {
      auto const sub = restrict_to(S, D);
      std::vector<TwoValuedHom> result;
      for (auto const& A : enumerate_prime_coideals(sub.semigroup)) {
        std::vector<bool> assignment(S.order(), false);
        for (auto x : A.members()) {
          assignment[sub.embedding[x]] = true;
        }
        result.emplace_back(S, D, assignment);
      }
      return result;
    }
  }  // namespace

  TEST_CASE("hom_from_coideal", "[homs]") {
    auto const T  = test::two();
    auto const id = hom_from_coideal(T, set(T, {1}));
    CHECK(!id(0));
    CHECK(id(1));

    auto const G0  = test::Z2_with_zero();
    auto const chi = hom_from_coideal(G0, set(G0, {e, a}));
    CHECK(chi.assignment() == std::vector<bool>{true, true, false});
    CHECK(chi.support() == set(G0, {e, a}));

    auto const one = hom_from_coideal(G0, ElementSet::full(3));
    CHECK(one.assignment() == std::vector<bool>{true, true, true});

    CHECK(has_kind(ErrorKind::NotAPrimeCoideal, [] { hom_from_coideal(test::L2(), set(test::L2(), {0})); }));
  }

  TEST_CASE("TwoValuedHom rejects bad input", "[homs]") {
    auto const G0 = test::Z2_with_zero();
    CHECK(has_kind(ErrorKind::NotAHomomorphism,
                   [&] { TwoValuedHom(G0, ElementSet::full(3), {true, false, false}); }));
    CHECK(has_kind(ErrorKind::NotASubsemigroup, [&] { TwoValuedHom(G0, set(G0, {a}), {false, true, false}); }));
  }

  TEST_CASE("SurjectionOntoSemilattice rejects bad input", "[homs]") {
    auto const G0 = test::Z2_with_zero();
    auto const T  = test::two();
    CHECK(has_kind(ErrorKind::NotASemilattice, [&] { SurjectionOntoSemilattice(G0, test::Z2(), {0, 1, 0}); }));
    CHECK(has_kind(ErrorKind::NotASurjection, [&] { SurjectionOntoSemilattice(G0, T, {1, 1, 1}); }));
    CHECK(has_kind(ErrorKind::NotAHomomorphism, [&] { SurjectionOntoSemilattice(G0, T, {1, 0, 0}); }));
    SurjectionOntoSemilattice ok(G0, T, {1, 1, 0});
    CHECK(ok(zero) == 0);
  }

  TEST_CASE("preimage_of_subsemilattice", "[homs]") {
    auto const G0 = test::Z2_with_zero();
    auto const pi = two_projection(G0);
    // the class {e, a} is quotient element 0, the top
    CHECK(preimage_of_subsemilattice(pi, set(pi.target(), {0})) == set(G0, {e, a}));
    CHECK(preimage_of_subsemilattice(pi, ElementSet::full(2)) == ElementSet::full(3));

    auto const C   = test::chain3();
    auto const idc = identity_on(C);
    CHECK(preimage_of_subsemilattice(idc, set(C, {2})) == set(C, {2}));

    CHECK(has_kind(ErrorKind::NotASubsemilattice, [&] { preimage_of_subsemilattice(idc, ElementSet(3)); }));
    auto const D = test::diamond();
    CHECK(has_kind(ErrorKind::NotASubsemilattice,
                   [&] { preimage_of_subsemilattice(identity_on(D), set(D, {1, 2})); }));
  }

  TEST_CASE("extend_hom", "[homs]") {
    SECTION("from the units of Z2 with zero") {
      auto const G0 = test::Z2_with_zero();
      auto const pi = two_projection(G0);
      auto const T  = set(pi.target(), {0});
      TwoValuedHom const f(G0, set(G0, {e, a}), {true, true, false});
      auto const F = extend_hom(pi, T, f);
      CHECK(F.assignment() == std::vector<bool>{true, true, false});
    }
    SECTION("identity on the 3-chain") {
      auto const C = test::chain3();
      auto const pi = identity_on(C);
      TwoValuedHom const f(C, set(C, {2}), {false, false, true});
      CHECK(extend_hom(pi, set(C, {2}), f).assignment() == std::vector<bool>{false, false, true});
    }
    SECTION("zero extends to zero") {
      auto const C = test::chain3();
      auto const pi = identity_on(C);
      TwoValuedHom const f(C, set(C, {1, 2}), {false, false, false});
      CHECK(extend_hom(pi, set(C, {1, 2}), f).assignment() == std::vector<bool>{false, false, false});
    }
    SECTION("domain mismatch") {
      auto const C = test::chain3();
      auto const pi = identity_on(C);
      TwoValuedHom const f(C, set(C, {2}), {false, false, true});
      CHECK(has_kind(ErrorKind::DomainMismatch, [&] { extend_hom(pi, set(C, {1, 2}), f); }));
    }
  }

  TEST_CASE("every hom on a subsemilattice of a small semilattice extends", "[homs][property]") {
    // All semilattices of order ≤ 4 from the corpus plus a few of order 5.
    std::vector<Semigroup> semilattices;
    for (auto const& S : test::corpus(4)) {
      if (is_semilattice(S)) {
        semilattices.push_back(S);
      }
    }
    semilattices.push_back(catalog::chain_semilattice(5));
    semilattices.push_back(catalog::adjoin_zero(test::diamond()));
    semilattices.push_back(catalog::direct_product(test::two(), catalog::chain_semilattice(3)).with_labels({}));
    std::size_t cases = 0;
    for (auto const& L : semilattices) {
      if (L.order() > 5) {
        continue;
      }
      auto const pi = identity_on(L);
      for (auto const& T : subsemilattices(L)) {
        for (auto const& f : homs_on(L, T)) {
          auto const F = extend_hom(pi, T, f);
          for (auto x : T.members()) {
            REQUIRE(F(x) == f(x));
          }
          ++cases;
        }
      }
    }
    CHECK(cases > 100);
  }

  TEST_CASE("extension from the two-class projection of every order-3 semigroup", "[homs][property]") {
    for (auto const& S : test::corpus(3)) {
      auto const pi = two_projection(S);
      for (auto const& T : subsemilattices(pi.target())) {
        auto const D = preimage_of_subsemilattice(pi, T);
        REQUIRE(is_closed(S, D));
        for (auto const& f : homs_on(S, D)) {
          auto const F = extend_hom(pi, T, f);
          REQUIRE(F.domain().is_full());
          for (auto x : D.members()) {
            REQUIRE(F(x) == f(x));
          }
        }
      }
    }
  }

}  // namespace semidec
