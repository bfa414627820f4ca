// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.
//
// Certificates for membership y ∈ ⇑ₙx.  A witness of depth n is a complete
// binary tree indexed by the binary strings s of length at most n, each node
// carrying elements x_s, y_s ∈ S and factors a_s, b_s ∈ S¹, such that
//
//   (1) x_s = x                  for every leaf (|s| = n),
//   (2) y_s = a_s x_s b_s        for every node,
//   (3) y_s = x_{s0} x_{s1}      for every inner node (|s| < n),
//   (4) x_() = y                 at the root.

#ifndef SEMIDEC_WITNESS_HPP_
#define SEMIDEC_WITNESS_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "semigroup.hpp"

namespace semidec {

  //! A factor from S¹; nullopt stands for the adjoined identity ONE.
  using Factor = std::optional<element>;

  struct WitnessNode {
    element x = 0;
    element y = 0;
    Factor  a;
    Factor  b;

    bool operator==(WitnessNode const&) const = default;
  };

  class WitnessTree {
   public:
    WitnessTree() = default;

    //! A tree of the given depth with default nodes.
    WitnessTree(std::size_t depth, element base_x, element root_y);

    std::size_t depth() const noexcept {
      return _depth;
    }

    element base_x() const noexcept {
      return _base_x;
    }

    element root_y() const noexcept {
      return _root_y;
    }

    //! 2^(depth + 1) - 1.
    std::size_t size() const noexcept {
      return _nodes.size();
    }

    //! Throws MalformedTree if `path` is not a binary string of length at
    //! most depth().
    WitnessNode&       node(std::string const& path);
    WitnessNode const& node(std::string const& path) const;

    //! Nodes in breadth-first order: index (2^|s| - 1) + value(s), with the
    //! first character of s the most significant bit.
    std::vector<WitnessNode>&       nodes() noexcept {
      return _nodes;
    }
    std::vector<WitnessNode> const& nodes() const noexcept {
      return _nodes;
    }

    //! Binary string of the node with the given breadth-first index.
    static std::string path_of(std::size_t index);
    static std::size_t index_of(std::string const& path);

    bool operator==(WitnessTree const&) const = default;

   private:
    std::size_t              _depth  = 0;
    element                  _base_x = 0;
    element                  _root_y = 0;
    std::vector<WitnessNode> _nodes;
  };

  struct WitnessViolation {
    int         condition;  // 1, 2, 3 or 4
    std::string path;
  };

  //! The first violated condition, checking the families in the order
  //! (4), (1), (3), (2) and nodes in depth-first preorder within each.  Throws
  //! MalformedTree when an element is out of range.
  std::optional<WitnessViolation> check_witness(Semigroup const& S, WitnessTree const& w);

  bool verify_witness(Semigroup const& S, WitnessTree const& w);

  //! A witness of y ∈ ⇑ₙx with n the first stage containing y, or nullopt
  //! when y ∉ ⇑x.  Among certificates the one built from the first
  //! (a, b, u, v) with a·x_s·b = u·v, in ascending order with ONE first, is
  //! chosen at every node.
  std::optional<WitnessTree> build_witness(Semigroup const& S, element x, element y);

  //! One line per node in depth-first preorder, after a header line:
  //!
  //!   witness(depth=1, x=1, y=0)
  //!   node(s=, x=0, y=0, a=ONE, b=ONE)
  //!   node(s=0, x=1, y=1, a=ONE, b=ONE)
  //!   node(s=1, x=1, y=1, a=ONE, b=ONE)
  std::string serialize(WitnessTree const& w);

  //! Inverse of `serialize`; throws ParseError or MalformedTree.
  WitnessTree parse_witness(std::string const& text);

}  // namespace semidec

#endif  // SEMIDEC_WITNESS_HPP_
