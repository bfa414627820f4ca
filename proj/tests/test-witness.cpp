// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "semidec/quasiorder.hpp"
#include "semidec/witness.hpp"
#include "test-helpers.hpp"

namespace semidec {

  namespace {
    // N2 with x = a = 1, y = 0.
    WitnessTree n2_tree() {
      WitnessTree w(1, 1, 0);
      w.node("")  = WitnessNode{0, 0, std::nullopt, std::nullopt};
      w.node("0") = WitnessNode{1, 1, std::nullopt, std::nullopt};
      w.node("1") = WitnessNode{1, 1, std::nullopt, std::nullopt};
      return w;
    }
  }  // namespace

  TEST_CASE("verify_witness", "[witness]") {
    auto const N = test::N2();
    WitnessTree trivial(0, 1, 1);
    trivial.node("") = WitnessNode{1, 1, std::nullopt, std::nullopt};
    CHECK(verify_witness(N, trivial));

    auto w = n2_tree();
    CHECK(verify_witness(N, w));

    w.node("").y = 1;
    auto const v = check_witness(N, w);
    REQUIRE(v);
    // y_() = a is not x_0·x_1 = a·a = 0
    CHECK(v->condition == 3);
    w.node("").x = 1;
    CHECK(check_witness(N, w)->condition == 4);

    w = n2_tree();
    w.node("0").y = 0;
    REQUIRE(check_witness(N, w));
    CHECK(check_witness(N, w)->condition == 2);
    CHECK(check_witness(N, w)->path == "0");

    w = n2_tree();
    w.node("1").x = 0;
    w.node("1").y = 0;
    CHECK(check_witness(N, w)->condition == 1);
    CHECK(check_witness(N, w)->path == "1");

    // Z2: a·e = a at the root, but x_0·x_1 = a·a = e
    auto const Z = test::Z2();
    WitnessTree z(1, 1, 0);
    z.node("")  = WitnessNode{0, 1, Factor(1), std::nullopt};
    z.node("0") = WitnessNode{1, 1, std::nullopt, std::nullopt};
    z.node("1") = WitnessNode{1, 1, std::nullopt, std::nullopt};
    CHECK(check_witness(Z, z)->condition == 3);

    WitnessTree bad(1, 5, 0);
    CHECK_THROWS_AS(verify_witness(N, bad), Error);
  }

  TEST_CASE("build_witness", "[witness]") {
    auto const N = test::N2();
    auto const same = build_witness(N, 1, 1);
    REQUIRE(same);
    CHECK(same->depth() == 0);
    CHECK(same->size() == 1);

    auto const w = build_witness(N, 1, 0);
    REQUIRE(w);
    CHECK(*w == n2_tree());

    CHECK(!build_witness(test::chain3(), 2, 0));
  }

  TEST_CASE("build_witness is sound and complete on order <= 3", "[witness][property]") {
    for (auto const& S : test::corpus(3)) {
      for (element x = 0; x < S.order(); ++x) {
        auto const up = up_class(S, x);
        for (element y = 0; y < S.order(); ++y) {
          auto const w = build_witness(S, x, y);
          REQUIRE(w.has_value() == up.set.contains(y));
          if (w) {
            REQUIRE(verify_witness(S, *w));
            REQUIRE(w->depth() == up.entry_stage(y));
            REQUIRE(w->size() == (std::size_t(1) << (w->depth() + 1)) - 1);
          }
        }
      }
    }
  }

  TEST_CASE("witnesses of depth > 1 in larger semigroups", "[witness]") {
    // Find a pair needing at least two stages and check the certificate.
    std::size_t deepest = 0;
    for (auto const& S : {catalog::full_transformation_monoid(3),
                          catalog::random_transformation_subsemigroup(4, 2, 7),
                          catalog::adjoin_zero(catalog::rectangular_band(2, 2))}) {
      for (element x = 0; x < S.order(); ++x) {
        auto const up = up_class(S, x);
        for (auto y : up.set.members()) {
          auto const w = build_witness(S, x, y);
          REQUIRE(w);
          REQUIRE(verify_witness(S, *w));
          deepest = std::max(deepest, w->depth());
        }
      }
    }
    CHECK(deepest >= 2);
  }

  TEST_CASE("witness text form", "[witness]") {
    auto const text = serialize(n2_tree());
    CHECK(text
          == "witness(depth=1, x=1, y=0)\n"
             "node(s=, x=0, y=0, a=ONE, b=ONE)\n"
             "node(s=0, x=1, y=1, a=ONE, b=ONE)\n"
             "node(s=1, x=1, y=1, a=ONE, b=ONE)\n");
    CHECK(parse_witness(text) == n2_tree());

    auto const T3 = catalog::full_transformation_monoid(3);
    for (element y = 0; y < T3.order(); y += 5) {
      if (auto w = build_witness(T3, 0, y)) {
        REQUIRE(parse_witness(serialize(*w)) == *w);
      }
    }

    CHECK_THROWS_AS(parse_witness("node(s=, x=0, y=0, a=ONE, b=ONE)\n"), Error);
    CHECK_THROWS_AS(parse_witness("witness(depth=1, x=1, y=0)\nnode(s=, x=0, y=0, a=ONE, b=ONE)\n"),
                    Error);
    CHECK_THROWS_AS(parse_witness("witness(depth=0, x=1, y=0)\nnode(s=, x=0, y=0, a=ONE, b=ONE)\n"
                                  "node(s=, x=0, y=0, a=ONE, b=ONE)\n"),
                    Error);
    CHECK_THROWS_AS(parse_witness("witness(depth=0, x=1, y=0)\nnode(s=01, x=0, y=0, a=ONE, b=ONE)\n"),
                    Error);
  }

  TEST_CASE("paths and indices", "[witness]") {
    for (std::size_t i = 0; i < 63; ++i) {
      REQUIRE(WitnessTree::index_of(WitnessTree::path_of(i)) == i);
    }
    CHECK(WitnessTree::path_of(0).empty());
    CHECK(WitnessTree::path_of(4) == "01");
    CHECK(WitnessTree::index_of("10") == 5);
  }

  TEST_CASE("single-field mutations are rejected or still valid", "[witness][property]") {
    std::mt19937_64 rng(7);
    std::size_t     rejected = 0;
    for (auto const& S : test::corpus(3)) {
      for (element x = 0; x < S.order(); ++x) {
        for (element y = 0; y < S.order(); ++y) {
          auto const w = build_witness(S, x, y);
          if (!w || w->depth() == 0) {
            continue;
          }
          auto m   = *w;
          auto& nd = m.nodes()[rng() % m.size()];
          nd.x     = static_cast<element>((nd.x + 1 + rng() % (S.order())) % S.order());
          auto const v = check_witness(S, m);
          if (v) {
            ++rejected;
          }
        }
      }
    }
    CHECK(rejected > 0);
  }

}  // namespace semidec
