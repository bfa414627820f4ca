// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include "semidec/witness.hpp"

#include <map>      // for map
#include <regex>    // for regex, smatch
#include <sstream>  // for istringstream, ostringstream

#include "semidec/quasiorder.hpp"

namespace semidec {

  namespace {
    std::size_t tree_size(std::size_t depth) {
      if (depth >= 30) {
        throw Error(ErrorKind::MalformedTree, "depth " + std::to_string(depth) + " is too large");
      }
      return (std::size_t(1) << (depth + 1)) - 1;
    }

    element apply(Semigroup const& S, Factor a, element x, Factor b) {
      if (a) {
        x = S.product(*a, x);
      }
      if (b) {
        x = S.product(x, *b);
      }
      return x;
    }

    std::string factor_string(Factor f) {
      return f ? std::to_string(*f) : std::string("ONE");
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // WitnessTree
  ////////////////////////////////////////////////////////////////////////

  WitnessTree::WitnessTree(std::size_t depth, element base_x, element root_y)
      : _depth(depth), _base_x(base_x), _root_y(root_y), _nodes(tree_size(depth)) {}

  std::string WitnessTree::path_of(std::size_t index) {
    std::size_t length = 0;
    while (((std::size_t(1) << (length + 1)) - 1) <= index) {
      ++length;
    }
    std::size_t value = index - ((std::size_t(1) << length) - 1);
    std::string result(length, '0');
    for (std::size_t i = 0; i < length; ++i) {
      if ((value >> (length - 1 - i)) & 1) {
        result[i] = '1';
      }
    }
    return result;
  }

  std::size_t WitnessTree::index_of(std::string const& path) {
    if (path.size() >= 30) {
      throw Error(ErrorKind::MalformedTree, "path too long");
    }
    std::size_t value = 0;
    for (char c : path) {
      if (c != '0' && c != '1') {
        throw Error(ErrorKind::MalformedTree, "path '" + path + "' is not a binary string");
      }
      value = 2 * value + (c == '1' ? 1 : 0);
    }
    return (std::size_t(1) << path.size()) - 1 + value;
  }

  WitnessNode& WitnessTree::node(std::string const& path) {
    if (path.size() > _depth) {
      throw Error(ErrorKind::MalformedTree, "path '" + path + "' is deeper than the tree");
    }
    return _nodes[index_of(path)];
  }

  WitnessNode const& WitnessTree::node(std::string const& path) const {
    return const_cast<WitnessTree*>(this)->node(path);
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  std::optional<WitnessViolation> check_witness(Semigroup const& S, WitnessTree const& w) {
    if (w.nodes().size() != tree_size(w.depth())) {
      throw Error(ErrorKind::MalformedTree, "wrong number of nodes for the depth");
    }
    auto in_range = [&](element x) { return x < S.order(); };
    if (!in_range(w.base_x()) || !in_range(w.root_y())) {
      throw Error(ErrorKind::MalformedTree, "header element out of range");
    }
    for (auto const& nd : w.nodes()) {
      if (!in_range(nd.x) || !in_range(nd.y) || (nd.a && !in_range(*nd.a)) || (nd.b && !in_range(*nd.b))) {
        throw Error(ErrorKind::MalformedTree, "node element out of range");
      }
    }
    if (w.node("").x != w.root_y()) {
      return WitnessViolation{4, ""};
    }
    // One family at a time, nodes in preorder within each.  Checking (3)
    // before (2) blames a corrupted x_s on the parent product it feeds.
    std::vector<std::string> preorder;
    auto visit = [&](auto&& self, std::string const& path) -> void {
      preorder.push_back(path);
      if (path.size() < w.depth()) {
        self(self, path + '0');
        self(self, path + '1');
      }
    };
    visit(visit, "");
    for (auto const& path : preorder) {
      if (path.size() == w.depth() && w.node(path).x != w.base_x()) {
        return WitnessViolation{1, path};
      }
    }
    for (auto const& path : preorder) {
      if (path.size() < w.depth()
          && w.node(path).y != S.product(w.node(path + '0').x, w.node(path + '1').x)) {
        return WitnessViolation{3, path};
      }
    }
    for (auto const& path : preorder) {
      auto const& nd = w.node(path);
      if (nd.y != apply(S, nd.a, nd.x, nd.b)) {
        return WitnessViolation{2, path};
      }
    }
    return std::nullopt;
  }

  bool verify_witness(Semigroup const& S, WitnessTree const& w) {
    return !check_witness(S, w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // A step of the fixed point: a·y·b = u·v with u, v in the previous stage.
    struct Step {
      Factor  a;
      Factor  b;
      element u;
      element v;
    };

    class WitnessBuilder {
     public:
      WitnessBuilder(Semigroup const& S, UpClass const& up) : _S(S), _up(up) {}

      void fill(WitnessTree& w, std::string const& path, element e, std::size_t remaining) {
        auto& nd = w.node(path);
        nd.x     = e;
        if (remaining == 0) {
          // e is the base element
          nd.y = e;
          nd.a = std::nullopt;
          nd.b = std::nullopt;
          return;
        }
        if (_up.entry_stage(e) < remaining) {
          // e stays in every later stage via e·e = e·e·ONE
          nd.y = _S.product(e, e);
          nd.a = e;
          nd.b = std::nullopt;
          fill(w, path + '0', e, remaining - 1);
          fill(w, path + '1', e, remaining - 1);
          return;
        }
        auto const step = step_for(e, remaining);
        nd.y            = _S.product(step.u, step.v);
        nd.a            = step.a;
        nd.b            = step.b;
        fill(w, path + '0', step.u, remaining - 1);
        fill(w, path + '1', step.v, remaining - 1);
      }

     private:
      Step step_for(element e, std::size_t stage) {
        if (auto it = _steps.find(e); it != _steps.end()) {
          return it->second;
        }
        auto const& pairs = first_pairs(stage - 1);
        std::vector<Factor> factors{std::nullopt};
        for (element s = 0; s < _S.order(); ++s) {
          factors.emplace_back(s);
        }
        for (auto a : factors) {
          for (auto b : factors) {
            auto const p = apply(_S, a, e, b);
            if (pairs[p]) {
              Step step{a, b, pairs[p]->first, pairs[p]->second};
              _steps.emplace(e, step);
              return step;
            }
          }
        }
        throw Error(ErrorKind::PreconditionNotMet, "no factorization found for a stage member", {e});
      }

      // For each product p of two members of the given stage, the first pair
      // (u, v) in ascending order with uv = p.
      std::vector<std::optional<std::pair<element, element>>> const& first_pairs(std::size_t stage) {
        auto it = _pairs.find(stage);
        if (it != _pairs.end()) {
          return it->second;
        }
        std::vector<std::optional<std::pair<element, element>>> pairs(_S.order());
        auto const members = _up.stages[stage].members();
        for (auto u : members) {
          for (auto v : members) {
            auto& slot = pairs[_S.product(u, v)];
            if (!slot) {
              slot = std::make_pair(u, v);
            }
          }
        }
        return _pairs.emplace(stage, std::move(pairs)).first->second;
      }

      Semigroup const&                _S;
      UpClass const&                  _up;
      std::map<element, Step>         _steps;
      std::map<std::size_t, std::vector<std::optional<std::pair<element, element>>>> _pairs;
    };
  }  // namespace

  std::optional<WitnessTree> build_witness(Semigroup const& S, element x, element y) {
    if (x >= S.order() || y >= S.order()) {
      throw Error(ErrorKind::EntryOutOfRange, "element out of range");
    }
    auto const        up    = up_class(S, x);
    std::size_t const depth = up.entry_stage(y);
    if (depth == up.stages.size()) {
      return std::nullopt;
    }
    WitnessTree    result(depth, x, y);
    WitnessBuilder builder(S, up);
    builder.fill(result, "", y, depth);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  std::string serialize(WitnessTree const& w) {
    std::ostringstream out;
    out << "witness(depth=" << w.depth() << ", x=" << w.base_x() << ", y=" << w.root_y() << ")\n";
    auto visit = [&](auto&& self, std::string const& path) -> void {
      auto const& nd = w.node(path);
      out << "node(s=" << path << ", x=" << nd.x << ", y=" << nd.y << ", a=" << factor_string(nd.a)
          << ", b=" << factor_string(nd.b) << ")\n";
      if (path.size() < w.depth()) {
        self(self, path + '0');
        self(self, path + '1');
      }
    };
    visit(visit, "");
    return out.str();
  }

  WitnessTree parse_witness(std::string const& text) {
    static std::regex const header(R"(^\s*witness\(depth=(\d+), x=(\d+), y=(\d+)\)\s*$)");
    static std::regex const node_line(
        R"(^\s*node\(s=([01]*), x=(\d+), y=(\d+), a=(\d+|ONE), b=(\d+|ONE)\)\s*$)");
    std::istringstream in(text);
    std::string        line;
    std::optional<WitnessTree> result;
    std::vector<bool>          seen;
    auto number = [](std::string const& s) -> element {
      try {
        return static_cast<element>(std::stoul(s));
      } catch (std::exception const&) {
        throw Error(ErrorKind::ParseError, "number out of range: " + s);
      }
    };
    auto factor = [&](std::string const& s) -> Factor {
      return s == "ONE" ? Factor() : Factor(number(s));
    };
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') {
        continue;
      }
      std::smatch m;
      if (!result) {
        if (!std::regex_match(line, m, header)) {
          throw Error(ErrorKind::ParseError, "expected a witness(...) header, found: " + line);
        }
        result.emplace(number(m[1]), number(m[2]), number(m[3]));
        seen.assign(result->size(), false);
        continue;
      }
      if (!std::regex_match(line, m, node_line)) {
        throw Error(ErrorKind::ParseError, "malformed node line: " + line);
      }
      std::string const path = m[1];
      auto&             nd   = result->node(path);
      auto const        idx  = WitnessTree::index_of(path);
      if (seen[idx]) {
        throw Error(ErrorKind::MalformedTree, "duplicate node s=" + path);
      }
      seen[idx] = true;
      nd        = WitnessNode{number(m[2]), number(m[3]), factor(m[4]), factor(m[5])};
    }
    if (!result) {
      throw Error(ErrorKind::ParseError, "empty witness");
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) {
        throw Error(ErrorKind::MalformedTree, "missing node s=" + WitnessTree::path_of(i));
      }
    }
    return *result;
  }

}  // namespace semidec
