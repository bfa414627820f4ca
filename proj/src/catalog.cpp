// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include "semidec/catalog.hpp"

#include <algorithm>  // for replace
#include <map>        // for map
#include <random>     // for mt19937_64

namespace semidec {
  namespace catalog {

    namespace {
      void require(bool ok, std::string const& what) {
        if (!ok) {
          throw Error(ErrorKind::ParameterOutOfRange, what);
        }
      }

      template <typename F>
      Semigroup from_formula(std::size_t n, F&& mul, std::vector<std::string> labels = {}) {
        std::vector<element> table(n * n);
        for (element x = 0; x < n; ++x) {
          for (element y = 0; y < n; ++y) {
            table[x * n + y] = static_cast<element>(mul(x, y));
          }
        }
        return Semigroup::validate(n, std::move(table), std::move(labels));
      }

      std::string power_label(std::size_t k) {
        return k == 1 ? std::string("a") : "a^" + std::to_string(k);
      }
    }  // namespace

    Semigroup left_zero(std::size_t n) {
      require(n >= 1, "left_zero needs n >= 1");
      return from_formula(n, [](element x, element) { return x; });
    }

    Semigroup right_zero(std::size_t n) {
      require(n >= 1, "right_zero needs n >= 1");
      return from_formula(n, [](element, element y) { return y; });
    }

    Semigroup null_semigroup(std::size_t n) {
      require(n >= 1, "null_semigroup needs n >= 1");
      std::vector<std::string> labels;
      if (n <= 27) {
        labels.emplace_back("0");
        for (std::size_t k = 1; k < n; ++k) {
          labels.emplace_back(1, static_cast<char>('a' + k - 1));
        }
      }
      return from_formula(n, [](element, element) { return 0; }, std::move(labels));
    }

    Semigroup cyclic_group(std::size_t n) {
      require(n >= 1, "cyclic_group needs n >= 1");
      std::vector<std::string> labels{"e"};
      for (std::size_t k = 1; k < n; ++k) {
        labels.push_back(power_label(k));
      }
      return from_formula(n, [n](element x, element y) { return (x + y) % n; }, std::move(labels));
    }

    Semigroup chain_semilattice(std::size_t n) {
      require(n >= 1, "chain_semilattice needs n >= 1");
      return from_formula(n, [](element x, element y) { return std::min(x, y); });
    }

    Semigroup rectangular_band(std::size_t p, std::size_t q) {
      require(p >= 1 && q >= 1, "rectangular_band needs p, q >= 1");
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
          labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
      return from_formula(
          p * q, [q](element x, element y) { return (x / q) * q + (y % q); }, std::move(labels));
    }

    Semigroup monogenic(std::size_t index, std::size_t period) {
      require(index >= 1 && period >= 1, "monogenic needs index, period >= 1");
      std::size_t const        n = index + period - 1;
      std::vector<std::string> labels;
      for (std::size_t k = 1; k <= n; ++k) {
        labels.push_back(power_label(k));
      }
      auto mul = [index, period](element x, element y) {
        std::size_t s = (x + 1) + (y + 1);  // exponent of the product
        if (s > index) {
          s = index + (s - index) % period;
        }
        return s - 1;
      };
      return from_formula(n, mul, std::move(labels));
    }

    Semigroup full_transformation_monoid(std::size_t k) {
      require(k >= 1 && k <= 4, "full_transformation_monoid needs 1 <= k <= 4");
      std::size_t n = 1;
      for (std::size_t i = 0; i < k; ++i) {
        n *= k;
      }
      auto image = [k](std::size_t f, std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
          f /= k;
        }
        return f % k;
      };
      std::vector<std::string> labels;
      for (std::size_t f = 0; f < n; ++f) {
        std::string s;
        for (std::size_t t = 0; t < k; ++t) {
          s += static_cast<char>('0' + image(f, t));
        }
        labels.push_back("[" + s + "]");
      }
      auto mul = [&](element f, element g) {
        std::size_t result = 0, place = 1;
        for (std::size_t t = 0; t < k; ++t, place *= k) {
          result += image(f, image(g, t)) * place;
        }
        return result;
      };
      return from_formula(n, mul, std::move(labels));
    }

    Semigroup direct_product(Semigroup const& S, Semigroup const& T) {
      std::size_t const        m = T.order();
      std::vector<std::string> labels;
      for (element s = 0; s < S.order(); ++s) {
        for (element t = 0; t < m; ++t) {
          labels.push_back("(" + S.label(s) + "," + T.label(t) + ")");
        }
      }
      auto mul = [&](element x, element y) {
        return S.product(x / m, y / m) * m + T.product(x % m, y % m);
      };
      return from_formula(S.order() * m, mul, std::move(labels));
    }

    Semigroup adjoin_zero(Semigroup const& S) {
      std::size_t const        n = S.order();
      std::vector<std::string> labels;
      for (element x = 0; x < n; ++x) {
        labels.push_back(S.label(x));
      }
      bool const taken = std::find(labels.begin(), labels.end(), "0") != labels.end();
      labels.emplace_back(taken ? "z" : "0");
      auto mul = [&](element x, element y) -> element {
        return x == n || y == n ? static_cast<element>(n) : S.product(x, y);
      };
      return from_formula(n + 1, mul, std::move(labels));
    }

    Semigroup group_with_zero(std::size_t n) {
      return adjoin_zero(cyclic_group(n));
    }

    Semigroup transformation_semigroup(std::vector<std::vector<element>> const& generators) {
      constexpr std::size_t cap = 256;
      require(!generators.empty(), "need at least one generator");
      std::size_t const k = generators.front().size();
      require(k >= 1, "maps need a nonempty domain");
      for (auto const& g : generators) {
        require(g.size() == k, "all maps need the same degree");
        for (auto t : g) {
          require(t < k, "map image out of range");
        }
      }
      using Map = std::vector<element>;
      auto compose = [k](Map const& f, Map const& g) {
        Map result(k);
        for (std::size_t t = 0; t < k; ++t) {
          result[t] = f[g[t]];
        }
        return result;
      };
      std::vector<Map>           elements;
      std::map<Map, std::size_t> index;
      auto add = [&](Map const& f) {
        if (index.emplace(f, elements.size()).second) {
          elements.push_back(f);
          if (elements.size() > cap) {
            throw Error(ErrorKind::ClosureTooLarge, "closure exceeds " + std::to_string(cap) + " elements");
          }
        }
      };
      for (auto const& g : generators) {
        add(g);
      }
      for (std::size_t i = 0; i < elements.size(); ++i) {
        for (auto const& g : generators) {
          add(compose(elements[i], g));
        }
      }
      std::vector<std::string> labels;
      for (auto const& f : elements) {
        std::string s;
        for (auto t : f) {
          s += std::to_string(t);
          s += k > 10 ? "," : "";
        }
        labels.push_back("[" + s + "]");
      }
      auto mul = [&](element x, element y) { return index.at(compose(elements[x], elements[y])); };
      return from_formula(elements.size(), mul, std::move(labels));
    }

    Semigroup random_transformation_subsemigroup(std::size_t k, std::size_t generators, std::uint64_t seed) {
      require(k >= 1 && k <= 8, "random_transformation_subsemigroup needs 1 <= k <= 8");
      require(generators >= 1, "need at least one generator");
      std::mt19937_64                   rng(seed);
      std::vector<std::vector<element>> gens(generators, std::vector<element>(k));
      for (auto& g : gens) {
        for (auto& t : g) {
          t = static_cast<element>(rng() % k);
        }
      }
      return transformation_semigroup(gens);
    }

    void for_each_semigroup(std::size_t n, std::function<void(Semigroup const&)> const& visit) {
      require(n >= 1, "order must be positive");
      if (n > 4) {
        throw Error(ErrorKind::OrderTooLarge, "exhaustive enumeration is limited to order 4");
      }
      std::size_t const    cells = n * n;
      std::vector<element> table(cells, 0);
      // Cell (x, y) is assigned once the cursor has passed x * n + y.
      auto consistent = [&](std::size_t filled) {
        auto known = [&](element x, element y) { return x * n + y < filled; };
        for (element x = 0; x < n; ++x) {
          for (element y = 0; y < n; ++y) {
            if (!known(x, y)) {
              continue;
            }
            auto const xy = table[x * n + y];
            for (element z = 0; z < n; ++z) {
              if (!known(xy, z) || !known(y, z)) {
                continue;
              }
              auto const yz = table[y * n + z];
              if (known(x, yz) && table[xy * n + z] != table[x * n + yz]) {
                return false;
              }
            }
          }
        }
        return true;
      };
      auto search = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells) {
          visit(Semigroup::validate(n, table));
          return;
        }
        for (element v = 0; v < n; ++v) {
          table[cell] = v;
          if (consistent(cell + 1)) {
            self(self, cell + 1);
          }
        }
        table[cell] = 0;
      };
      search(search, 0);
    }

    std::vector<Semigroup> enumerate_all_semigroups(std::size_t n) {
      std::vector<Semigroup> result;
      for_each_semigroup(n, [&result](Semigroup const& S) { result.push_back(S); });
      return result;
    }

    std::vector<std::string> family_names() {
      return {"left_zero",        "right_zero", "null",
              "cyclic_group",     "chain",      "rectangular_band",
              "monogenic",        "full_transformation", "group_with_zero",
              "random_transformation"};
    }

    Semigroup by_name(std::string const& family, std::vector<std::size_t> const& params, std::uint64_t seed) {
      std::string name = family;
      std::replace(name.begin(), name.end(), '-', '_');
      auto arity = [&](std::size_t k) {
        require(params.size() == k,
                family + " takes " + std::to_string(k) + " parameter" + (k == 1 ? "" : "s"));
      };
      if (name == "left_zero") {
        arity(1);
        return left_zero(params[0]);
      } else if (name == "right_zero") {
        arity(1);
        return right_zero(params[0]);
      } else if (name == "null" || name == "null_semigroup") {
        arity(1);
        return null_semigroup(params[0]);
      } else if (name == "cyclic_group") {
        arity(1);
        return cyclic_group(params[0]);
      } else if (name == "chain" || name == "chain_semilattice") {
        arity(1);
        return chain_semilattice(params[0]);
      } else if (name == "rectangular_band") {
        arity(2);
        return rectangular_band(params[0], params[1]);
      } else if (name == "monogenic") {
        arity(2);
        return monogenic(params[0], params[1]);
      } else if (name == "full_transformation" || name == "full_transformation_monoid") {
        arity(1);
        return full_transformation_monoid(params[0]);
      } else if (name == "group_with_zero") {
        arity(1);
        return group_with_zero(params[0]);
      } else if (name == "random_transformation") {
        arity(2);
        return random_transformation_subsemigroup(params[0], params[1], seed);
      }
      throw Error(ErrorKind::ParameterOutOfRange, "unknown family '" + family + "'");
    }

  }  // namespace catalog
}  // namespace semidec
