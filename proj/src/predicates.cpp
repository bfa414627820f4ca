// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include "semidec/predicates.hpp"

#include <algorithm>  // for max
#include <string>     // for to_string

#include "semidec/ideals.hpp"

namespace semidec {

  bool is_two_trivial(Semigroup const& S) {
    PrincipalIdeals const ideals(S);
    for (element x = 0; x < S.order(); ++x) {
      if (!up_class(S, ideals, x).set.is_full()) {
        return false;
      }
    }
    return true;
  }

  bool is_two_trivial_via_prime_ideals(Semigroup const& S, std::size_t bound) {
    // Prime ideals are the complements of prime coideals.
    return enumerate_prime_coideals(S, bound).size() == 2;
  }

  bool is_archimedean(Semigroup const& S) {
    std::vector<ElementSet> powers;
    for (element x = 0; x < S.order(); ++x) {
      powers.push_back(monogenic(S, x).set);
    }
    for (element y = 0; y < S.order(); ++y) {
      auto const SyS = two_sided_product(S, y);
      for (element x = 0; x < S.order(); ++x) {
        if (!powers[x].intersects(SyS)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_duo(Semigroup const& S) {
    for (element a = 0; a < S.order(); ++a) {
      ElementSet aS(S.order()), Sa(S.order());
      for (element s = 0; s < S.order(); ++s) {
        aS.insert(S.product(a, s));
        Sa.insert(S.product(s, a));
      }
      if (aS != Sa) {
        return false;
      }
    }
    return true;
  }

  bool is_viable(Semigroup const& S) {
    for (element x = 0; x < S.order(); ++x) {
      for (element y = x + 1; y < S.order(); ++y) {
        auto const xy = S.product(x, y);
        auto const yx = S.product(y, x);
        if (xy != yx && S.product(xy, xy) == xy && S.product(yx, yx) == yx) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_unipotent(Semigroup const& S) {
    return idempotents(S).size() == 1;
  }

  bool is_simple(Semigroup const& S) {
    for (element x = 0; x < S.order(); ++x) {
      if (!principal_two_sided_ideal(S, x).is_full()) {
        return false;
      }
    }
    return true;
  }

  bool is_zero_simple(Semigroup const& S) {
    auto const z = zero_element(S);
    if (!z) {
      return false;
    }
    auto const all = ElementSet::full(S.order());
    if (product_sets(S, all, all) == ElementSet(S.order(), {*z})) {
      return false;
    }
    for (element x = 0; x < S.order(); ++x) {
      auto const I = principal_two_sided_ideal(S, x);
      if (!I.is_full() && I != ElementSet(S.order(), {*z})) {
        return false;
      }
    }
    return true;
  }

  std::vector<Partition> enumerate_congruences(Semigroup const& S, std::size_t bound) {
    std::size_t const n = S.order();
    if (n > bound) {
      throw Error(ErrorKind::OrderTooLargeForExhaustive,
                  "order " + std::to_string(n) + " exceeds the congruence bound " + std::to_string(bound));
    }
    std::vector<Partition> result;
    // Restricted growth strings: rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i)).
    std::vector<std::size_t> rgs(n, 0), prefix_max(n, 0);
    while (true) {
      auto P = Partition::from_labels(rgs);
      if (is_congruence(S, P)) {
        result.push_back(std::move(P));
      }
      std::size_t i = n;
      while (i-- > 1) {
        if (rgs[i] <= prefix_max[i - 1]) {
          break;
        }
      }
      if (i == 0 || i >= n) {
        break;
      }
      ++rgs[i];
      prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        rgs[j]        = 0;
        prefix_max[j] = prefix_max[i];
      }
    }
    return result;
  }

  bool is_congruence_free(Semigroup const& S, std::size_t bound) {
    auto const count = enumerate_congruences(S, bound).size();
    return S.order() == 1 ? count == 1 : count == 2;
  }

  ElementSet center(Semigroup const& S) {
    ElementSet result(S.order());
    for (element z = 0; z < S.order(); ++z) {
      bool central = true;
      for (element x = 0; x < S.order() && central; ++x) {
        central = S.product(x, z) == S.product(z, x);
      }
      if (central) {
        result.insert(z);
      }
    }
    return result;
  }

  UnipotentReport check_unipotent_structure(Semigroup const& S) {
    if (!is_unipotent(S) || !is_two_trivial(S)) {
      throw Error(ErrorKind::PreconditionNotMet, "semigroup must be unipotent and two-trivial");
    }
    auto const e  = idempotents(S).front();
    auto const He = maximal_subgroup(S, e);
    return {e, is_ideal(S, He), center(S).contains(e)};
  }

  UpClassReport check_viable_upclass(Semigroup const& S, element e) {
    if (!is_viable(S) || S.product(e, e) != e) {
      throw Error(ErrorKind::PreconditionNotMet, "semigroup must be viable and e idempotent", {e});
    }
    ElementSet pw(S.order());
    for (element x = 0; x < S.order(); ++x) {
      if (principal_two_sided_ideal(S, x).contains(e)) {
        pw.insert(x);
      }
    }
    bool const agrees = pw == up_class(S, e).set;
    return {std::move(pw), agrees};
  }

  UpClassReport check_duo_upclass(Semigroup const& S, element a) {
    if (!is_duo(S)) {
      throw Error(ErrorKind::PreconditionNotMet, "semigroup must be duo");
    }
    auto const powers = monogenic(S, a).set;
    ElementSet result(S.order());
    for (element x = 0; x < S.order(); ++x) {
      if (two_sided_product(S, x).intersects(powers)) {
        result.insert(x);
      }
    }
    bool const agrees = result == up_class(S, a).set;
    return {std::move(result), agrees};
  }

}  // namespace semidec
