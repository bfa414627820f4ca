// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include "semidec/quasiorder.hpp"

#include <cassert>  // for assert
#include <string>   // for to_string

namespace semidec {

  ////////////////////////////////////////////////////////////////////////
  // BinaryRelation
  ////////////////////////////////////////////////////////////////////////

  bool BinaryRelation::is_reflexive() const noexcept {
    for (element x = 0; x < _order; ++x) {
      if (!(*this)(x, x)) {
        return false;
      }
    }
    return true;
  }

  bool BinaryRelation::is_transitive() const noexcept {
    for (element x = 0; x < _order; ++x) {
      for (element y = 0; y < _order; ++y) {
        if (!(*this)(x, y)) {
          continue;
        }
        for (element z = 0; z < _order; ++z) {
          if ((*this)(y, z) && !(*this)(x, z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool BinaryRelation::is_antisymmetric() const noexcept {
    for (element x = 0; x < _order; ++x) {
      for (element y = x + 1; y < _order; ++y) {
        if ((*this)(x, y) && (*this)(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::pair<element, element>> BinaryRelation::hasse_pairs() const {
    std::vector<std::pair<element, element>> result;
    for (element x = 0; x < _order; ++x) {
      for (element y = 0; y < _order; ++y) {
        if (x == y || !(*this)(x, y)) {
          continue;
        }
        bool covered = true;
        for (element z = 0; z < _order && covered; ++z) {
          if (z != x && z != y && (*this)(x, z) && (*this)(z, y)) {
            covered = false;
          }
        }
        if (covered) {
          result.emplace_back(x, y);
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition Partition::from_labels(std::vector<std::size_t> const& labels) {
    Partition                result;
    std::size_t const        n = labels.size();
    std::vector<std::size_t> renumber;
    std::vector<std::size_t> seen_labels;
    result._class_of.resize(n);
    for (element x = 0; x < n; ++x) {
      std::size_t id = seen_labels.size();
      for (std::size_t i = 0; i < seen_labels.size(); ++i) {
        if (seen_labels[i] == labels[x]) {
          id = i;
          break;
        }
      }
      if (id == seen_labels.size()) {
        seen_labels.push_back(labels[x]);
        result._classes.emplace_back(n);
      }
      result._class_of[x] = id;
      result._classes[id].insert(x);
    }
    return result;
  }

  Partition Partition::discrete(std::size_t order) {
    std::vector<std::size_t> labels(order);
    for (std::size_t i = 0; i < order; ++i) {
      labels[i] = i;
    }
    return from_labels(labels);
  }

  Partition Partition::single_class(std::size_t order) {
    return from_labels(std::vector<std::size_t>(order, 0));
  }

  ////////////////////////////////////////////////////////////////////////
  // The upper classes
  ////////////////////////////////////////////////////////////////////////

  std::size_t UpClass::entry_stage(element y) const {
    for (std::size_t n = 0; n < stages.size(); ++n) {
      if (stages[n].contains(y)) {
        return n;
      }
    }
    return stages.size();
  }

  PrincipalIdeals::PrincipalIdeals(Semigroup const& S) {
    _ideals.reserve(S.order());
    for (element x = 0; x < S.order(); ++x) {
      _ideals.push_back(principal_two_sided_ideal(S, x));
    }
  }

  ElementSet up_step(Semigroup const& S, PrincipalIdeals const& ideals, ElementSet const& A) {
    auto const squares = product_sets(S, A, A);
    ElementSet result(S.order());
    for (element y = 0; y < S.order(); ++y) {
      if (ideals[y].intersects(squares)) {
        result.insert(y);
      }
    }
    return result;
  }

  ElementSet up_step(Semigroup const& S, ElementSet const& A) {
    return up_step(S, PrincipalIdeals(S), A);
  }

  UpClass up_class(Semigroup const& S, PrincipalIdeals const& ideals, element x) {
    UpClass result;
    result.stages.emplace_back(S.order(), std::initializer_list<element>{x});
    while (true) {
      auto next = up_step(S, ideals, result.stages.back());
      assert(result.stages.back().is_subset_of(next));
      if (next == result.stages.back()) {
        break;
      }
      result.stages.push_back(std::move(next));
    }
    result.set = result.stages.back();
    return result;
  }

  UpClass up_class(Semigroup const& S, element x) {
    return up_class(S, PrincipalIdeals(S), x);
  }

  BinaryRelation binary_quasiorder(Semigroup const& S) {
    PrincipalIdeals const ideals(S);
    BinaryRelation        result(S.order());
    for (element x = 0; x < S.order(); ++x) {
      for (auto y : up_class(S, ideals, x).set.members()) {
        result.set(x, y);
      }
    }
    return result;
  }

  ElementSet down_class(Semigroup const& S, element x) {
    auto const quasi = binary_quasiorder(S);
    ElementSet result(S.order());
    for (element y = 0; y < S.order(); ++y) {
      if (quasi(y, x)) {
        result.insert(y);
      }
    }
    return result;
  }

  ElementSet two_class(Semigroup const& S, element x) {
    return up_class(S, x).set & down_class(S, x);
  }

  Partition least_semilattice_congruence(Semigroup const& S, BinaryRelation const& quasiorder) {
    std::vector<std::size_t> labels(S.order());
    for (element x = 0; x < S.order(); ++x) {
      labels[x] = x;
      for (element y = 0; y < x; ++y) {
        if (quasiorder(x, y) && quasiorder(y, x)) {
          labels[x] = labels[y];
          break;
        }
      }
    }
    return Partition::from_labels(labels);
  }

  Partition least_semilattice_congruence(Semigroup const& S) {
    return least_semilattice_congruence(S, binary_quasiorder(S));
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotients
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::pair<element, element>> congruence_violation(Semigroup const& S, Partition const& P) {
    // Comparing each element with its class representative suffices, since
    // the classes are transitive.
    for (auto const& C : P.classes()) {
      auto const rep = C.front();
      for (auto x : C.members()) {
        for (element a = 0; a < S.order(); ++a) {
          if (!P.same_class(S.product(a, x), S.product(a, rep))
              || !P.same_class(S.product(x, a), S.product(rep, a))) {
            return std::make_pair(rep, x);
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_congruence(Semigroup const& S, Partition const& P) {
    return P.order() == S.order() && !congruence_violation(S, P);
  }

  Quotient quotient(Semigroup const& S, Partition const& P) {
    if (P.order() != S.order()) {
      throw Error(ErrorKind::InvalidShape, "partition and semigroup have different orders");
    }
    if (auto bad = congruence_violation(S, P)) {
      throw Error(ErrorKind::NotACongruence,
                  S.label(bad->first) + " and " + S.label(bad->second) + " are related but their translates are not",
                  {bad->first, bad->second});
    }
    std::size_t const    m = P.number_of_classes();
    std::vector<element> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      auto const x = P.classes()[i].front();
      for (std::size_t j = 0; j < m; ++j) {
        auto const y = P.classes()[j].front();
        table[i * m + j] = static_cast<element>(P.class_of(S.product(x, y)));
      }
    }
    std::vector<element> projection(S.order());
    for (element x = 0; x < S.order(); ++x) {
      projection[x] = static_cast<element>(P.class_of(x));
    }
    return {Semigroup::validate(m, std::move(table)), std::move(projection)};
  }

  Quotient quotient_semilattice(Semigroup const& S, Partition const& P) {
    auto result = quotient(S, P);
    if (!is_semilattice(result.quotient)) {
      throw Error(ErrorKind::NotASemilattice, "the quotient is not a semilattice");
    }
    return result;
  }

  bool is_semilattice(Semigroup const& S) noexcept {
    for (element x = 0; x < S.order(); ++x) {
      if (S.product(x, x) != x) {
        return false;
      }
    }
    return S.is_commutative();
  }

  BinaryRelation natural_order(Semigroup const& L) {
    if (!is_semilattice(L)) {
      throw Error(ErrorKind::NotASemilattice, "natural order requires a commutative band");
    }
    BinaryRelation result(L.order());
    for (element x = 0; x < L.order(); ++x) {
      for (element y = 0; y < L.order(); ++y) {
        result.set(x, y, L.product(x, y) == x);
      }
    }
    assert(result.is_reflexive() && result.is_antisymmetric() && result.is_transitive());
    return result;
  }

}  // namespace semidec
