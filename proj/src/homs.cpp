// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include "semidec/homs.hpp"

#include <utility>  // for move

#include "semidec/ideals.hpp"

namespace semidec {

  bool is_two_valued_hom(Semigroup const& S, ElementSet const& domain, std::vector<bool> const& assignment) {
    auto const members = domain.members();
    for (auto u : members) {
      for (auto v : members) {
        if (assignment[S.product(u, v)] != (assignment[u] && assignment[v])) {
          return false;
        }
      }
    }
    return true;
  }

  TwoValuedHom::TwoValuedHom(Semigroup const& S, ElementSet domain, std::vector<bool> assignment)
      : _domain(std::move(domain)), _assignment(std::move(assignment)) {
    if (_domain.order() != S.order() || _assignment.size() != S.order()) {
      throw Error(ErrorKind::InvalidShape, "homomorphism does not match the semigroup");
    }
    if (!is_closed(S, _domain)) {
      throw Error(ErrorKind::NotASubsemigroup, "the domain of a homomorphism must be closed");
    }
    for (element x = 0; x < S.order(); ++x) {
      if (!_domain.contains(x)) {
        _assignment[x] = false;
      }
    }
    if (!is_two_valued_hom(S, _domain, _assignment)) {
      throw Error(ErrorKind::NotAHomomorphism, "assignment is not multiplicative");
    }
  }

  ElementSet TwoValuedHom::support() const {
    ElementSet result(_domain.order());
    for (auto x : _domain.members()) {
      if (_assignment[x]) {
        result.insert(x);
      }
    }
    return result;
  }

  SurjectionOntoSemilattice::SurjectionOntoSemilattice(Semigroup source, Semigroup target, std::vector<element> map)
      : _source(std::move(source)), _target(std::move(target)), _map(std::move(map)) {
    if (_map.size() != _source.order()) {
      throw Error(ErrorKind::InvalidShape, "map must have one entry per source element");
    }
    if (!is_semilattice(_target)) {
      throw Error(ErrorKind::NotASemilattice, "the target is not a semilattice");
    }
    ElementSet image(_target.order());
    for (auto y : _map) {
      if (y >= _target.order()) {
        throw Error(ErrorKind::EntryOutOfRange, "map value out of range", {y});
      }
      image.insert(y);
    }
    if (!image.is_full()) {
      throw Error(ErrorKind::NotASurjection, "map is not onto");
    }
    for (element x = 0; x < _source.order(); ++x) {
      for (element y = 0; y < _source.order(); ++y) {
        if (_map[_source.product(x, y)] != _target.product(_map[x], _map[y])) {
          throw Error(ErrorKind::NotAHomomorphism, "map is not a homomorphism", {x, y});
        }
      }
    }
  }

  SurjectionOntoSemilattice SurjectionOntoSemilattice::from_quotient(Semigroup const& source, Quotient const& q) {
    return SurjectionOntoSemilattice(source, q.quotient, q.projection);
  }

  TwoValuedHom hom_from_coideal(Semigroup const& S, ElementSet const& A) {
    if (!is_prime_coideal(S, A)) {
      throw Error(ErrorKind::NotAPrimeCoideal, "subset is not a prime coideal");
    }
    std::vector<bool> assignment(S.order());
    for (element x = 0; x < S.order(); ++x) {
      assignment[x] = A.contains(x);
    }
    return TwoValuedHom(S, ElementSet::full(S.order()), std::move(assignment));
  }

  ElementSet preimage_of_subsemilattice(SurjectionOntoSemilattice const& pi, ElementSet const& T) {
    if (T.order() != pi.target().order() || T.empty() || !is_closed(pi.target(), T)) {
      throw Error(ErrorKind::NotASubsemilattice, "T must be a nonempty closed subset of the target");
    }
    ElementSet result(pi.source().order());
    for (element x = 0; x < pi.source().order(); ++x) {
      if (T.contains(pi(x))) {
        result.insert(x);
      }
    }
    return result;
  }

  TwoValuedHom extend_hom(SurjectionOntoSemilattice const& pi, ElementSet const& T, TwoValuedHom const& f) {
    auto const&      X        = pi.source();
    auto const       preimage = preimage_of_subsemilattice(pi, T);
    if (f.domain() != preimage) {
      throw Error(ErrorKind::DomainMismatch, "f must be defined exactly on the preimage of T");
    }
    if (!is_two_valued_hom(X, f.domain(), f.assignment())) {
      throw Error(ErrorKind::NotAHomomorphism, "f is not a homomorphism");
    }
    auto const        zs = preimage.members();
    std::vector<bool> F(X.order(), false);
    for (element x = 0; x < X.order(); ++x) {
      for (auto z : zs) {
        auto const xz = X.product(x, z);
        if (T.contains(pi(xz)) && f(xz)) {
          F[x] = true;
          break;
        }
      }
    }
    // The constructor rejects F if it is not a homomorphism.
    TwoValuedHom result(X, ElementSet::full(X.order()), std::move(F));
    for (auto x : zs) {
      if (result(x) != f(x)) {
        throw Error(ErrorKind::NotAHomomorphism, "extension disagrees with f", {x});
      }
    }
    return result;
  }

}  // namespace semidec
