// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include "semidec/ideals.hpp"

#include <string>  // for to_string

namespace semidec {

  bool is_ideal(Semigroup const& S, ElementSet const& I) {
    for (auto x : I.members()) {
      for (element s = 0; s < S.order(); ++s) {
        if (!I.contains(S.product(x, s)) || !I.contains(S.product(s, x))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_prime_ideal(Semigroup const& S, ElementSet const& I) {
    return is_ideal(S, I) && is_closed(S, I.complement());
  }

  bool is_prime_coideal(Semigroup const& S, ElementSet const& A) {
    for (element u = 0; u < S.order(); ++u) {
      for (element v = 0; v < S.order(); ++v) {
        if (A.contains(S.product(u, v)) != (A.contains(u) && A.contains(v))) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    void check_bound(Semigroup const& S, std::size_t bound) {
      if (S.order() > bound || S.order() > 63) {
        throw Error(ErrorKind::OrderTooLargeForExhaustive,
                    "order " + std::to_string(S.order()) + " exceeds the exhaustive bound "
                        + std::to_string(bound));
      }
    }
  }  // namespace

  std::vector<ElementSet> enumerate_prime_coideals(Semigroup const& S, std::size_t bound) {
    check_bound(S, bound);
    std::size_t const       n = S.order();
    std::vector<ElementSet> result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
      auto in = [mask](element x) { return ((mask >> x) & 1u) != 0; };
      bool ok = true;
      for (element u = 0; u < n && ok; ++u) {
        for (element v = 0; v < n; ++v) {
          if (in(S.product(u, v)) != (in(u) && in(v))) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        result.push_back(ElementSet::from_mask(n, mask));
      }
    }
    return result;
  }

  ElementSet smallest_prime_coideal_containing(Semigroup const& S, element x, std::size_t bound) {
    auto result = ElementSet::full(S.order());
    for (auto const& A : enumerate_prime_coideals(S, bound)) {
      if (A.contains(x)) {
        result = result & A;
      }
    }
    return result;
  }

}  // namespace semidec
