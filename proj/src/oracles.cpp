// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include "semidec/oracles.hpp"

#include <string>  // for to_string
#include <vector>  // for vector

namespace semidec {
  namespace oracle {

    namespace {
      void check_bound(std::size_t n, std::size_t bound) {
        if (n > bound || n > 30) {
          throw Error(ErrorKind::OrderTooLargeForExhaustive,
                      "order " + std::to_string(n) + " exceeds the oracle bound " + std::to_string(bound));
        }
      }

      // Every homomorphism S -> {0, 1} as the bit mask of its support.
      std::vector<std::uint32_t> homomorphisms(Semigroup const& S) {
        std::size_t const n = S.order();
        auto const        t = S.table();
        std::vector<std::uint32_t> result;
        for (std::uint32_t chi = 0; chi < (std::uint32_t(1) << n); ++chi) {
          bool hom = true;
          for (std::size_t u = 0; u < n && hom; ++u) {
            for (std::size_t v = 0; v < n && hom; ++v) {
              bool const lhs = (chi >> t[u * n + v]) & 1u;
              bool const rhs = ((chi >> u) & (chi >> v) & 1u) != 0;
              hom            = lhs == rhs;
            }
          }
          if (hom) {
            result.push_back(chi);
          }
        }
        return result;
      }
    }  // namespace

    BinaryRelation quasiorder(Semigroup const& S, std::size_t bound) {
      check_bound(S.order(), bound);
      std::size_t const n    = S.order();
      auto const        homs = homomorphisms(S);
      BinaryRelation    result(n);
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          bool below = true;
          for (auto chi : homs) {
            if (((chi >> x) & 1u) > ((chi >> y) & 1u)) {
              below = false;
              break;
            }
          }
          result.set(x, y, below);
        }
      }
      return result;
    }

    ElementSet up_class(Semigroup const& S, element x, std::size_t bound) {
      check_bound(S.order(), bound);
      std::uint32_t meet = (std::uint32_t(1) << S.order()) - 1;
      for (auto chi : homomorphisms(S)) {
        if ((chi >> x) & 1u) {
          meet &= chi;
        }
      }
      ElementSet result(S.order());
      for (element y = 0; y < S.order(); ++y) {
        if ((meet >> y) & 1u) {
          result.insert(y);
        }
      }
      return result;
    }

    Partition least_semilattice_congruence(Semigroup const& S, std::size_t bound) {
      check_bound(S.order(), bound);
      std::size_t const n = S.order();
      auto const        t = S.table();
      auto mul = [&](std::size_t x, std::size_t y) { return t[x * n + y]; };

      // related[x * n + y]: x and y lie in a common class of every
      // semilattice congruence seen so far.
      std::vector<char> related(n * n, 1);
      std::size_t       found = 0;

      // Visit every set partition as a block labelling via recursion.
      std::vector<std::size_t> block(n, 0);
      auto is_semilattice_congruence = [&](std::size_t blocks) {
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (block[x] != block[y]) {
              continue;
            }
            for (std::size_t a = 0; a < n; ++a) {
              if (block[mul(a, x)] != block[mul(a, y)] || block[mul(x, a)] != block[mul(y, a)]) {
                return false;
              }
            }
          }
        }
        // Quotient multiplication on representatives.
        std::vector<std::size_t> rep(blocks, n);
        for (std::size_t x = 0; x < n; ++x) {
          if (rep[block[x]] == n) {
            rep[block[x]] = x;
          }
        }
        for (std::size_t i = 0; i < blocks; ++i) {
          if (block[mul(rep[i], rep[i])] != i) {
            return false;
          }
          for (std::size_t j = 0; j < blocks; ++j) {
            if (block[mul(rep[i], rep[j])] != block[mul(rep[j], rep[i])]) {
              return false;
            }
          }
        }
        return true;
      };
      auto visit = [&](auto&& self, std::size_t x, std::size_t blocks) -> void {
        if (x == n) {
          if (is_semilattice_congruence(blocks)) {
            ++found;
            for (std::size_t u = 0; u < n; ++u) {
              for (std::size_t v = 0; v < n; ++v) {
                related[u * n + v] &= block[u] == block[v] ? 1 : 0;
              }
            }
          }
          return;
        }
        for (std::size_t b = 0; b <= blocks; ++b) {
          block[x] = b;
          self(self, x + 1, b == blocks ? blocks + 1 : blocks);
        }
      };
      visit(visit, 0, 0);

      std::vector<std::size_t> labels(n);
      for (std::size_t x = 0; x < n; ++x) {
        labels[x] = x;
        for (std::size_t y = 0; y < x; ++y) {
          if (related[x * n + y]) {
            labels[x] = labels[y];
            break;
          }
        }
      }
      auto result = Partition::from_labels(labels);
      // The all-in-one partition always qualifies, so `found` is positive;
      // the meet of semilattice congruences is again one.
      for (std::size_t x = 0; x < n; ++x) {
        block[x] = result.class_of(static_cast<element>(x));
      }
      if (found == 0 || !is_semilattice_congruence(result.number_of_classes())) {
        throw Error(ErrorKind::NotASemilattice, "intersection of semilattice congruences is not one");
      }
      return result;
    }

  }  // namespace oracle
}  // namespace semidec
