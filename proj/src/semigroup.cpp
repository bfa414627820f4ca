// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include "semidec/semigroup.hpp"

#include <algorithm>  // for all_of, fill
#include <bit>        // for popcount, countr_zero
#include <charconv>   // for from_chars
#include <utility>    // for move

namespace semidec {

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::InvalidShape: return "InvalidShape";
      case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
      case ErrorKind::NonAssociative: return "NonAssociative";
      case ErrorKind::NotIdempotent: return "NotIdempotent";
      case ErrorKind::NotASubsemigroup: return "NotASubsemigroup";
      case ErrorKind::NotACongruence: return "NotACongruence";
      case ErrorKind::NotASemilattice: return "NotASemilattice";
      case ErrorKind::OrderTooLargeForExhaustive: return "OrderTooLargeForExhaustive";
      case ErrorKind::NotAPrimeCoideal: return "NotAPrimeCoideal";
      case ErrorKind::NotASubsemilattice: return "NotASubsemilattice";
      case ErrorKind::NotASurjection: return "NotASurjection";
      case ErrorKind::DomainMismatch: return "DomainMismatch";
      case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
      case ErrorKind::PreconditionNotMet: return "PreconditionNotMet";
      case ErrorKind::MalformedTree: return "MalformedTree";
      case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
      case ErrorKind::OrderTooLarge: return "OrderTooLarge";
      case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
      case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // ElementSet
  ////////////////////////////////////////////////////////////////////////

  ElementSet::ElementSet(std::size_t order, std::initializer_list<element> members)
      : ElementSet(order) {
    for (auto x : members) {
      insert(x);
    }
  }

  ElementSet::ElementSet(std::size_t order, std::span<element const> members)
      : ElementSet(order) {
    for (auto x : members) {
      insert(x);
    }
  }

  ElementSet ElementSet::full(std::size_t order) {
    ElementSet result(order);
    for (element x = 0; x < order; ++x) {
      result.insert(x);
    }
    return result;
  }

  void ElementSet::insert(element x) {
    if (x >= _order) {
      throw Error(ErrorKind::EntryOutOfRange,
                  "element " + std::to_string(x) + " not in 0.." + std::to_string(_order),
                  {x});
    }
    _words[x / 64] |= std::uint64_t(1) << (x % 64);
  }

  void ElementSet::erase(element x) {
    if (x < _order) {
      _words[x / 64] &= ~(std::uint64_t(1) << (x % 64));
    }
  }

  std::size_t ElementSet::size() const noexcept {
    std::size_t result = 0;
    for (auto w : _words) {
      result += std::popcount(w);
    }
    return result;
  }

  bool ElementSet::empty() const noexcept {
    return std::all_of(_words.begin(), _words.end(), [](auto w) { return w == 0; });
  }

  std::vector<element> ElementSet::members() const {
    std::vector<element> result;
    for (std::size_t i = 0; i < _words.size(); ++i) {
      auto w = _words[i];
      while (w != 0) {
        result.push_back(static_cast<element>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return result;
  }

  element ElementSet::front() const {
    for (std::size_t i = 0; i < _words.size(); ++i) {
      if (_words[i] != 0) {
        return static_cast<element>(i * 64 + std::countr_zero(_words[i]));
      }
    }
    return static_cast<element>(_order);
  }

  void ElementSet::check_compatible(ElementSet const& that) const {
    if (_order != that._order) {
      throw Error(ErrorKind::InvalidShape, "element sets over semigroups of different orders");
    }
  }

  bool ElementSet::is_subset_of(ElementSet const& that) const {
    check_compatible(that);
    for (std::size_t i = 0; i < _words.size(); ++i) {
      if ((_words[i] & ~that._words[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  bool ElementSet::intersects(ElementSet const& that) const {
    check_compatible(that);
    for (std::size_t i = 0; i < _words.size(); ++i) {
      if ((_words[i] & that._words[i]) != 0) {
        return true;
      }
    }
    return false;
  }

  ElementSet ElementSet::operator&(ElementSet const& that) const {
    check_compatible(that);
    ElementSet result(*this);
    for (std::size_t i = 0; i < _words.size(); ++i) {
      result._words[i] &= that._words[i];
    }
    return result;
  }

  ElementSet ElementSet::operator|(ElementSet const& that) const {
    check_compatible(that);
    ElementSet result(*this);
    for (std::size_t i = 0; i < _words.size(); ++i) {
      result._words[i] |= that._words[i];
    }
    return result;
  }

  ElementSet ElementSet::complement() const {
    ElementSet result(_order);
    for (element x = 0; x < _order; ++x) {
      if (!contains(x)) {
        result.insert(x);
      }
    }
    return result;
  }

  bool bit_pattern_less(ElementSet const& lhs, ElementSet const& rhs) {
    lhs.check_compatible(rhs);
    for (std::size_t i = lhs._words.size(); i-- > 0;) {
      if (lhs._words[i] != rhs._words[i]) {
        return lhs._words[i] < rhs._words[i];
      }
    }
    return false;
  }

  std::uint64_t ElementSet::to_mask() const {
    if (_order > 64) {
      throw Error(ErrorKind::OrderTooLarge, "to_mask needs order <= 64");
    }
    return _words.empty() ? 0 : _words[0];
  }

  ElementSet ElementSet::from_mask(std::size_t order, std::uint64_t mask) {
    if (order > 64) {
      throw Error(ErrorKind::OrderTooLarge, "from_mask needs order <= 64");
    }
    ElementSet result(order);
    if (order > 0) {
      result._words[0] = order == 64 ? mask : mask & ((std::uint64_t(1) << order) - 1);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroup
  ////////////////////////////////////////////////////////////////////////

  Semigroup::Semigroup(std::size_t order, std::vector<element> table, std::vector<std::string> labels)
      : _order(order), _table(std::move(table)), _labels(std::move(labels)) {}

  std::optional<TableDefect> Semigroup::find_defect(std::size_t order, std::span<element const> table) {
    if (order == 0 || table.size() != order * order) {
      return TableDefect{ErrorKind::InvalidShape, {}};
    }
    for (element i = 0; i < order; ++i) {
      for (element j = 0; j < order; ++j) {
        if (table[i * order + j] >= order) {
          return TableDefect{ErrorKind::EntryOutOfRange, {i, j}};
        }
      }
    }
    auto mul = [&](element x, element y) { return table[x * order + y]; };
    for (element i = 0; i < order; ++i) {
      for (element j = 0; j < order; ++j) {
        auto ij = mul(i, j);
        for (element k = 0; k < order; ++k) {
          if (mul(ij, k) != mul(i, mul(j, k))) {
            return TableDefect{ErrorKind::NonAssociative, {i, j, k}};
          }
        }
      }
    }
    return std::nullopt;
  }

  Semigroup Semigroup::validate(std::size_t order, std::vector<element> table, std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != order) {
      throw Error(ErrorKind::InvalidShape,
                  "expected " + std::to_string(order) + " labels, found " + std::to_string(labels.size()));
    }
    if (auto defect = find_defect(order, table)) {
      std::string msg;
      auto const& w = defect->where;
      switch (defect->kind) {
        case ErrorKind::InvalidShape:
          msg = "table must be a nonempty square";
          break;
        case ErrorKind::EntryOutOfRange:
          msg = "entry at (" + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ") is "
                + std::to_string(table[w[0] * order + w[1]]);
          break;
        default:
          msg = "(" + std::to_string(w[0]) + " " + std::to_string(w[1]) + ") " + std::to_string(w[2])
                + " != " + std::to_string(w[0]) + " (" + std::to_string(w[1]) + " " + std::to_string(w[2])
                + ")";
      }
      throw Error(defect->kind, msg, defect->where);
    }
    return Semigroup(order, std::move(table), std::move(labels));
  }

  Semigroup Semigroup::validate(std::vector<std::vector<element>> const& table, std::vector<std::string> labels) {
    std::size_t const    n = table.size();
    std::vector<element> flat;
    flat.reserve(n * n);
    for (auto const& row : table) {
      if (row.size() != n) {
        throw Error(ErrorKind::InvalidShape, "table must be a nonempty square");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return validate(n, std::move(flat), std::move(labels));
  }

  std::vector<std::vector<element>> Semigroup::rows() const {
    std::vector<std::vector<element>> result;
    for (element x = 0; x < _order; ++x) {
      auto r = row(x);
      result.emplace_back(r.begin(), r.end());
    }
    return result;
  }

  std::string Semigroup::label(element x) const {
    return _labels.empty() ? std::to_string(x) : _labels[x];
  }

  std::optional<element> Semigroup::find(std::string_view name) const {
    for (element x = 0; x < _labels.size(); ++x) {
      if (_labels[x] == name) {
        return x;
      }
    }
    element    x   = 0;
    auto const end = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(name.data(), end, x);
    if (ec == std::errc() && ptr == end && x < _order) {
      return x;
    }
    return std::nullopt;
  }

  bool Semigroup::is_commutative() const noexcept {
    for (element x = 0; x < _order; ++x) {
      for (element y = x + 1; y < _order; ++y) {
        if (product(x, y) != product(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  Semigroup Semigroup::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != _order) {
      throw Error(ErrorKind::InvalidShape, "wrong number of labels");
    }
    return Semigroup(_order, _table, std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Elementary constructions
  ////////////////////////////////////////////////////////////////////////

  AdjoinedSemigroup adjoin_identity(Semigroup const& S) {
    std::size_t const    n = S.order();
    std::vector<element> table((n + 1) * (n + 1));
    for (element x = 0; x <= n; ++x) {
      for (element y = 0; y <= n; ++y) {
        element xy;
        if (x == n) {
          xy = y;
        } else if (y == n) {
          xy = x;
        } else {
          xy = S.product(x, y);
        }
        table[x * (n + 1) + y] = xy;
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels()) {
      labels = S.labels();
      labels.emplace_back("1");
    }
    return {Semigroup::validate(n + 1, std::move(table), std::move(labels)), static_cast<element>(n)};
  }

  ElementSet product_sets(Semigroup const& S, ElementSet const& A, ElementSet const& B) {
    ElementSet result(S.order());
    auto const bs = B.members();
    for (auto a : A.members()) {
      for (auto b : bs) {
        result.insert(S.product(a, b));
      }
    }
    return result;
  }

  Monogenic monogenic(Semigroup const& S, element x) {
    // position[y] = k means y = x^(k + 1)
    std::vector<std::size_t> position(S.order(), S.order());
    std::vector<element>     powers;
    element                  power = x;
    while (position[power] == S.order()) {
      position[power] = powers.size();
      powers.push_back(power);
      power = S.product(power, x);
    }
    std::size_t const index  = position[power] + 1;
    std::size_t const period = powers.size() + 1 - index;
    return {ElementSet(S.order(), std::span<element const>(powers)), index, period};
  }

  ElementSet idempotents(Semigroup const& S) {
    ElementSet result(S.order());
    for (element x = 0; x < S.order(); ++x) {
      if (S.product(x, x) == x) {
        result.insert(x);
      }
    }
    return result;
  }

  ElementSet principal_right_ideal(Semigroup const& S, element x) {
    ElementSet result(S.order(), {x});
    for (auto y : S.row(x)) {
      result.insert(y);
    }
    return result;
  }

  ElementSet principal_left_ideal(Semigroup const& S, element x) {
    ElementSet result(S.order(), {x});
    for (element s = 0; s < S.order(); ++s) {
      result.insert(S.product(s, x));
    }
    return result;
  }

  ElementSet two_sided_product(Semigroup const& S, element x) {
    ElementSet left(S.order());
    for (element s = 0; s < S.order(); ++s) {
      left.insert(S.product(s, x));
    }
    ElementSet result(S.order());
    for (auto sx : left.members()) {
      for (auto y : S.row(sx)) {
        result.insert(y);
      }
    }
    return result;
  }

  ElementSet principal_two_sided_ideal(Semigroup const& S, element x) {
    auto result = principal_left_ideal(S, x);
    // (X¹x)X¹ covers {x}, Sx, xS and SxS at once.
    for (auto y : result.members()) {
      for (auto z : S.row(y)) {
        result.insert(z);
      }
    }
    return result;
  }

  ElementSet h_class(Semigroup const& S, element a) {
    auto const right = principal_right_ideal(S, a);
    auto const left  = principal_left_ideal(S, a);
    ElementSet result(S.order());
    for (element x = 0; x < S.order(); ++x) {
      if (principal_right_ideal(S, x) == right && principal_left_ideal(S, x) == left) {
        result.insert(x);
      }
    }
    return result;
  }

  ElementSet maximal_subgroup(Semigroup const& S, element e) {
    if (S.product(e, e) != e) {
      throw Error(ErrorKind::NotIdempotent, S.label(e) + " is not idempotent", {e});
    }
    auto const H = h_class(S, e);
    auto const members = H.members();
    auto fail = [&](std::string const& why) {
      // Green's theorem guarantees H_e is a group; reaching this is a bug.
      throw Error(ErrorKind::PreconditionNotMet, "H-class of " + S.label(e) + " is not a group: " + why, {e});
    };
    for (auto x : members) {
      if (S.product(e, x) != x || S.product(x, e) != x) {
        fail("e is not an identity");
      }
      bool has_inverse = false;
      for (auto y : members) {
        if (!H.contains(S.product(x, y))) {
          fail("not closed");
        }
        if (S.product(x, y) == e && S.product(y, x) == e) {
          has_inverse = true;
        }
      }
      if (!has_inverse) {
        fail("missing inverse");
      }
    }
    return H;
  }

  bool is_closed(Semigroup const& S, ElementSet const& A) {
    auto const members = A.members();
    for (auto x : members) {
      for (auto y : members) {
        if (!A.contains(S.product(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  Subsemigroup restrict_to(Semigroup const& S, ElementSet const& A) {
    if (A.empty() || !is_closed(S, A)) {
      throw Error(ErrorKind::NotASubsemigroup, "subset is empty or not closed under the product");
    }
    auto const           embedding = A.members();
    std::vector<element> local(S.order(), 0);
    for (element i = 0; i < embedding.size(); ++i) {
      local[embedding[i]] = i;
    }
    std::size_t const        m = embedding.size();
    std::vector<element>     table(m * m);
    std::vector<std::string> labels;
    for (element i = 0; i < m; ++i) {
      for (element j = 0; j < m; ++j) {
        table[i * m + j] = local[S.product(embedding[i], embedding[j])];
      }
      if (S.has_labels()) {
        labels.push_back(S.label(embedding[i]));
      }
    }
    return {Semigroup::validate(m, std::move(table), std::move(labels)), embedding};
  }

  std::optional<element> zero_element(Semigroup const& S) {
    for (element z = 0; z < S.order(); ++z) {
      bool is_zero = true;
      for (element x = 0; x < S.order() && is_zero; ++x) {
        is_zero = S.product(x, z) == z && S.product(z, x) == z;
      }
      if (is_zero) {
        return z;
      }
    }
    return std::nullopt;
  }

}  // namespace semidec
