// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.
//
// Command line front end.  Exit codes: 0 success or true, 1 predicate false
// or verification rejected, 2 input or usage error.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "semidec/semidec.hpp"

namespace {

  using namespace semidec;
  using json = nlohmann::ordered_json;

  constexpr int exit_true   = 0;
  constexpr int exit_false  = 1;
  constexpr int exit_input  = 2;

  struct Options {
    std::string                format;
    std::string                output = "text";
    std::optional<std::size_t> bound;
    std::uint64_t              seed     = 0;
    std::size_t                parallel = 1;
  };

  TableFormat table_format(Options const& opts, std::string const& path) {
    if (opts.format.empty()) {
      return format_from_path(path);
    }
    return opts.format == "json" ? TableFormat::json : TableFormat::text;
  }

  Semigroup load(Options const& opts, std::string const& path) {
    return read_semigroup(read_file(path), table_format(opts, path));
  }

  element parse_element(Semigroup const& S, std::string const& name) {
    if (auto x = S.find(name)) {
      return *x;
    }
    throw Error(ErrorKind::ParseError, "no element named '" + name + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // Formatting
  ////////////////////////////////////////////////////////////////////////

  json names(Semigroup const& S, ElementSet const& A) {
    json result = json::array();
    for (auto x : A.members()) {
      result.push_back(S.label(x));
    }
    return result;
  }

  std::string braces(json const& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
      out += (i == 0 ? "" : ", ") + names[i].get<std::string>();
    }
    return out + "}";
  }

  std::string table_text(json const& rows, std::string const& indent) {
    std::ostringstream out;
    for (auto const& row : rows) {
      out << indent;
      for (std::size_t j = 0; j < row.size(); ++j) {
        out << (j == 0 ? "" : " ") << row[j].get<std::size_t>();
      }
      out << '\n';
    }
    return out.str();
  }

  json partition_json(Semigroup const& S, Partition const& P) {
    json result = json::array();
    for (auto const& C : P.classes()) {
      result.push_back(names(S, C));
    }
    return result;
  }

  // Classes, quotient table and Hasse diagram shared by analyze and decompose.
  json decomposition_json(Semigroup const& S, TamuraDecomposition const& d) {
    json classes = json::array();
    for (std::size_t k = 0; k < d.classes.number_of_classes(); ++k) {
      classes.push_back({{"index", k},
                         {"members", names(S, d.classes.classes()[k])},
                         {"two_trivial", bool(d.class_is_two_trivial[k])}});
    }
    json hasse = json::array();
    for (auto [x, y] : d.order.hasse_pairs()) {
      hasse.push_back({x, y});
    }
    return {{"classes", classes},
            {"quotient", {{"order", d.quotient.quotient.order()}, {"table", d.quotient.quotient.rows()}}},
            {"projection", d.quotient.projection},
            {"hasse", hasse}};
  }

  std::string decomposition_text(json const& d, bool verdicts) {
    std::ostringstream out;
    out << "classes:\n";
    for (auto const& c : d["classes"]) {
      out << "  [" << c["index"].get<std::size_t>() << "] " << braces(c["members"]);
      if (verdicts) {
        out << (c["two_trivial"].get<bool>() ? "  two-trivial" : "  NOT two-trivial");
      }
      out << '\n';
    }
    out << "quotient table:\n" << table_text(d["quotient"]["table"], "  ");
    out << "natural order (Hasse pairs, [i] < [j]):\n";
    if (d["hasse"].empty()) {
      out << "  none\n";
    }
    for (auto const& p : d["hasse"]) {
      out << "  [" << p[0].get<std::size_t>() << "] < [" << p[1].get<std::size_t>() << "]\n";
    }
    return out.str();
  }

  int emit(Options const& opts, json const& report, std::string const& text, int code = exit_true) {
    if (opts.output == "json") {
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << text;
    }
    return code;
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates by name
  ////////////////////////////////////////////////////////////////////////

  using Predicate = std::function<bool(Semigroup const&, Options const&)>;

  std::map<std::string, Predicate> const& predicates() {
    static std::map<std::string, Predicate> const table = {
        {"two-trivial", [](auto const& S, auto const&) { return is_two_trivial(S); }},
        {"archimedean", [](auto const& S, auto const&) { return is_archimedean(S); }},
        {"duo", [](auto const& S, auto const&) { return is_duo(S); }},
        {"viable", [](auto const& S, auto const&) { return is_viable(S); }},
        {"unipotent", [](auto const& S, auto const&) { return is_unipotent(S); }},
        {"simple", [](auto const& S, auto const&) { return is_simple(S); }},
        {"zero-simple", [](auto const& S, auto const&) { return is_zero_simple(S); }},
        {"congruence-free",
         [](auto const& S, Options const& opts) {
           return is_congruence_free(S, opts.bound.value_or(default_congruence_bound));
         }},
        {"commutative", [](auto const& S, auto const&) { return S.is_commutative(); }},
        {"semilattice", [](auto const& S, auto const&) { return is_semilattice(S); }},
    };
    return table;
  }

  std::string predicate_key(std::string name) {
    std::replace(name.begin(), name.end(), '_', '-');
    return name;
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  int cmd_validate(Options const& opts, std::string const& path) {
    auto const raw    = parse_table(read_file(path), table_format(opts, path));
    auto const defect = Semigroup::find_defect(raw.order, raw.table);
    json       report = {{"valid", !defect}, {"order", raw.order}};
    std::string text;
    if (!defect) {
      text = "VALID (order " + std::to_string(raw.order) + ")\n";
      return emit(opts, report, text);
    }
    auto const& w = defect->where;
    report["defect"] = to_string(defect->kind);
    report["where"]  = w;
    if (defect->kind == ErrorKind::NonAssociative) {
      auto const n  = raw.order;
      auto const at = [&](element x, element y) { return raw.table[x * n + y]; };
      auto const lhs = at(at(w[0], w[1]), w[2]);
      auto const rhs = at(w[0], at(w[1], w[2]));
      report["lhs"]  = lhs;
      report["rhs"]  = rhs;
      std::ostringstream out;
      out << "INVALID: not associative at (" << w[0] << ", " << w[1] << ", " << w[2] << "): (" << w[0] << "*"
          << w[1] << ")*" << w[2] << " = " << lhs << " but " << w[0] << "*(" << w[1] << "*" << w[2]
          << ") = " << rhs << '\n';
      text = out.str();
    } else {
      std::ostringstream out;
      out << "INVALID: " << to_string(defect->kind) << " at cell (" << w[0] << ", " << w[1] << ")\n";
      text = out.str();
    }
    return emit(opts, report, text, exit_false);
  }

  int cmd_analyze(Options const& opts, std::string const& path) {
    auto const S = load(opts, path);
    json       flags;
    for (auto const& name : {"two-trivial", "archimedean", "duo", "viable", "unipotent", "simple", "zero-simple"}) {
      flags[name] = predicates().at(name)(S, opts);
    }
    std::size_t const congruence_bound = opts.bound.value_or(default_congruence_bound);
    flags["congruence-free"]
        = S.order() <= congruence_bound ? json(is_congruence_free(S, congruence_bound)) : json(nullptr);
    json elements = json::array();
    for (element x = 0; x < S.order(); ++x) {
      elements.push_back(S.label(x));
    }
    json report = {{"order", S.order()},
                   {"elements", elements},
                   {"idempotents", names(S, idempotents(S))},
                   {"center", names(S, center(S))},
                   {"predicates", flags}};
    report.update(decomposition_json(S, decompose(S)));

    std::ostringstream out;
    out << "order: " << S.order() << '\n'
        << "elements: " << braces(report["elements"]) << '\n'
        << "idempotents: " << braces(report["idempotents"]) << '\n'
        << "center: " << braces(report["center"]) << '\n'
        << "predicates:\n";
    for (auto const& [name, value] : flags.items()) {
      out << "  " << name << ": "
          << (value.is_null() ? "n/a (order exceeds bound " + std::to_string(congruence_bound) + ")"
                              : (value.get<bool>() ? "true" : "false"))
          << '\n';
    }
    out << decomposition_text(report, false);
    return emit(opts, report, out.str());
  }

  int cmd_upclass(Options const& opts, std::string const& path, std::string const& x_name) {
    auto const S  = load(opts, path);
    auto const x  = parse_element(S, x_name);
    auto const up = up_class(S, x);
    json       stages = json::array();
    for (auto const& stage : up.stages) {
      stages.push_back(names(S, stage));
    }
    json report = {{"x", S.label(x)}, {"stages", stages}, {"upclass", names(S, up.set)}};
    std::ostringstream out;
    for (std::size_t n = 0; n < up.stages.size(); ++n) {
      out << "stage " << n << ": " << braces(stages[n]) << '\n';
    }
    out << "upclass: " << braces(report["upclass"]) << '\n';
    return emit(opts, report, out.str());
  }

  int cmd_decompose(Options const& opts, std::string const& path) {
    auto const S      = load(opts, path);
    auto const d      = decompose(S);
    json       report = decomposition_json(S, d);
    bool const tamura = std::all_of(d.class_is_two_trivial.begin(), d.class_is_two_trivial.end(), std::identity{});
    report["all_classes_two_trivial"] = tamura;
    return emit(opts,
                report,
                decomposition_text(report, true)
                    + (tamura ? "every class is two-trivial\n" : "some class is NOT two-trivial\n"),
                tamura ? exit_true : exit_false);
  }

  int cmd_witness(Options const& opts, std::vector<std::string> const& args) {
    if (args.size() != 3) {
      throw CLI::ValidationError("witness", "expects <file> <x> <y>");
    }
    auto const S = load(opts, args[0]);
    auto const x = parse_element(S, args[1]);
    auto const y = parse_element(S, args[2]);
    auto const w = build_witness(S, x, y);
    json report  = {{"x", S.label(x)}, {"y", S.label(y)}, {"above", w.has_value()}};
    if (!w) {
      report["witness"] = nullptr;
      return emit(opts, report, "NOT-ABOVE\n", exit_false);
    }
    report["depth"]   = w->depth();
    report["witness"] = serialize(*w);
    return emit(opts, report, serialize(*w));
  }

  int cmd_verify(Options const& opts, std::vector<std::string> const& args) {
    if (args.size() != 2) {
      throw CLI::ValidationError("witness --verify", "expects <file> <tree-file>");
    }
    auto const S         = load(opts, args[0]);
    auto const w         = parse_witness(read_file(args[1]));
    auto const violation = check_witness(S, w);
    json       report    = {{"accept", !violation},
                            {"x", S.label(w.base_x())},
                            {"y", S.label(w.root_y())},
                            {"depth", w.depth()}};
    if (!violation) {
      return emit(opts, report, "ACCEPT\n");
    }
    report["condition"] = violation->condition;
    report["node"]      = violation->path;
    return emit(opts,
                report,
                "REJECT: condition (" + std::to_string(violation->condition) + ") fails at node s="
                    + violation->path + (violation->path.empty() ? "(root)" : "") + "\n",
                exit_false);
  }

  int cmd_check(Options const& opts, std::string const& path, std::string const& name) {
    auto const S     = load(opts, path);
    auto const key   = predicate_key(name);
    bool const value = predicates().at(key)(S, opts);
    return emit(opts, {{"predicate", key}, {"value", value}}, std::string(value ? "true" : "false") + "\n",
                value ? exit_true : exit_false);
  }

  int cmd_generate(Options const& opts, std::string const& family, std::vector<std::size_t> const& params) {
    auto const S = catalog::by_name(family, params, opts.seed);
    std::cout << (opts.output == "json" ? to_json(S) : to_text(S));
    return exit_true;
  }

  int cmd_enumerate(Options const& opts, std::size_t n, bool count_only) {
    std::size_t count = 0;
    json        all   = json::array();
    catalog::for_each_semigroup(n, [&](Semigroup const& S) {
      ++count;
      if (count_only) {
        return;
      }
      if (opts.output == "json") {
        all.push_back({{"order", S.order()}, {"table", S.rows()}});
      } else {
        std::cout << (count == 1 ? "" : "\n") << to_text(S);
      }
    });
    if (count_only) {
      return emit(opts, {{"order", n}, {"count", count}}, std::to_string(count) + "\n");
    }
    if (opts.output == "json") {
      std::cout << all.dump() << '\n';
    }
    return exit_true;
  }

  // Differences between the fast paths and the oracles on one semigroup.
  struct Comparison {
    std::vector<std::pair<element, element>> quasiorder;  // differing cells
    std::vector<element>                     upclass;     // differing x
    std::optional<std::pair<Partition, Partition>> congruence;
    bool                                           congruence_checked = false;
  };

  Comparison compare(Semigroup const& S, std::string const& what, Options const& opts) {
    std::size_t const subset_bound     = opts.bound.value_or(oracle::default_subset_bound);
    std::size_t const congruence_bound = opts.bound.value_or(oracle::default_congruence_bound);
    Comparison        result;
    if (what == "quasiorder" || what == "all") {
      auto const fast = binary_quasiorder(S);
      auto const slow = oracle::quasiorder(S, subset_bound);
      for (element x = 0; x < S.order(); ++x) {
        for (element y = 0; y < S.order(); ++y) {
          if (fast(x, y) != slow(x, y)) {
            result.quasiorder.emplace_back(x, y);
          }
        }
      }
    }
    if (what == "upclass" || what == "all") {
      for (element x = 0; x < S.order(); ++x) {
        if (up_class(S, x).set != oracle::up_class(S, x, subset_bound)) {
          result.upclass.push_back(x);
        }
      }
    }
    // The default sweep skips the congruence oracle beyond its bound; an
    // explicit request lets the oracle report the bound itself.
    if (what == "congruence" || (what == "all" && S.order() <= congruence_bound)) {
      result.congruence_checked = true;
      auto fast                 = least_semilattice_congruence(S);
      auto slow                 = oracle::least_semilattice_congruence(S, congruence_bound);
      if (fast != slow) {
        result.congruence.emplace(std::move(fast), std::move(slow));
      }
    }
    return result;
  }

  bool agrees(Comparison const& c) {
    return c.quasiorder.empty() && c.upclass.empty() && !c.congruence;
  }

  int cmd_compare(Options const& opts, std::string const& path, std::string const& what) {
    auto const S = load(opts, path);
    auto const c = compare(S, what, opts);
    json       report{{"what", what}, {"agree", agrees(c)}};
    std::ostringstream out;
    out << (agrees(c) ? "AGREE" : "DISAGREE") << '\n';
    json cells = json::array();
    for (auto [x, y] : c.quasiorder) {
      cells.push_back({S.label(x), S.label(y)});
      out << "  quasiorder differs at (" << S.label(x) << ", " << S.label(y) << ")\n";
    }
    json ups = json::array();
    for (auto x : c.upclass) {
      json entry{{"x", S.label(x)},
                 {"fast", names(S, up_class(S, x).set)},
                 {"oracle", names(S, oracle::up_class(S, x, opts.bound.value_or(oracle::default_subset_bound)))}};
      out << "  upclass of " << S.label(x) << ": " << braces(entry["fast"]) << " vs oracle "
          << braces(entry["oracle"]) << '\n';
      ups.push_back(entry);
    }
    report["quasiorder_diff"] = cells;
    report["upclass_diff"]    = ups;
    report["congruence_checked"] = c.congruence_checked;
    if (c.congruence) {
      report["congruence_diff"] = {{"fast", partition_json(S, c.congruence->first)},
                                   {"oracle", partition_json(S, c.congruence->second)}};
      out << "  least semilattice congruence differs\n";
    } else {
      report["congruence_diff"] = nullptr;
    }
    if (!c.congruence_checked && what == "all") {
      out << "  congruence oracle skipped (order exceeds bound)\n";
    }
    return emit(opts, report, out.str(), agrees(c) ? exit_true : exit_false);
  }

  struct SweepResult {
    std::size_t order = 0;
    std::size_t index = 0;
    int         agree = 1;  // int, since parallel_map refuses bool
  };

  int cmd_sweep(Options const& opts, std::size_t max_order, std::string const& what) {
    std::vector<Semigroup> corpus;
    for (std::size_t n = 1; n <= max_order; ++n) {
      catalog::for_each_semigroup(n, [&](Semigroup const& S) { corpus.push_back(S); });
    }
    auto const results = parallel_map(corpus.size(), opts.parallel, [&](std::size_t i) {
      return SweepResult{corpus[i].order(), i, agrees(compare(corpus[i], what, opts)) ? 1 : 0};
    });
    json               failures = json::array();
    std::ostringstream out;
    for (auto const& r : results) {
      if (!r.agree) {
        failures.push_back(json::parse(to_json(corpus[r.index])));
      }
    }
    bool const ok = failures.empty();
    out << (ok ? "AGREE" : "DISAGREE") << ": " << corpus.size() - failures.size() << " of " << corpus.size()
        << " semigroups of order 1.." << max_order << " (" << what << ")\n";
    for (auto const& f : failures) {
      out << "  " << f.dump() << '\n';
    }
    return emit(opts,
                {{"what", what},
                 {"max_order", max_order},
                 {"checked", corpus.size()},
                 {"agree", ok},
                 {"failures", failures}},
                out.str(),
                ok ? exit_true : exit_false);
  }

  void add_common(CLI::App* sub, Options& opts, bool table_input = true) {
    if (table_input) {
      sub->add_option("--format", opts.format, "table format, inferred from the extension by default")
          ->check(CLI::IsMember({"text", "json"}));
    }
    sub->add_option("--output", opts.output, "report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--exhaustive-bound", opts.bound,
                    "largest order for exhaustive oracles (default 20 for subsets, 8 for congruences)");
    sub->add_option("--seed", opts.seed, "seed for random families");
    sub->add_option("--parallel", opts.parallel, "threads for corpus sweeps")->check(CLI::PositiveNumber);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary quasiorder and semilattice decomposition of finite semigroups"};
  app.require_subcommand(1);
  Options opts;

  std::string              file, element_x, predicate, family, what = "all";
  std::vector<std::string> positional;
  std::vector<std::size_t> params;
  std::size_t              order = 0;
  bool                     verify = false, sweep = false, count_only = false;

  auto* validate = app.add_subcommand("validate", "check that a table is associative");
  validate->add_option("file", file)->required();
  add_common(validate, opts);

  auto* analyze = app.add_subcommand("analyze", "full structural report");
  analyze->add_option("file", file)->required();
  add_common(analyze, opts);

  auto* upclass = app.add_subcommand("upclass", "stages of the upper class of x");
  upclass->add_option("file", file)->required();
  upclass->add_option("x", element_x)->required();
  add_common(upclass, opts);

  auto* decompose_cmd = app.add_subcommand("decompose", "semilattice decomposition into two-classes");
  decompose_cmd->add_option("file", file)->required();
  add_common(decompose_cmd, opts);

  auto* witness = app.add_subcommand("witness", "build (<file> <x> <y>) or check (--verify <file> <tree>) a witness");
  witness->add_flag("--verify", verify, "verify a serialized tree instead of building one");
  witness->add_option("args", positional)->required();
  add_common(witness, opts);

  auto* check = app.add_subcommand("check", "evaluate one predicate");
  check->add_option("file", file)->required();
  std::vector<std::string> predicate_names;
  for (auto const& [name, fn] : predicates()) {
    predicate_names.push_back(name);
  }
  check->add_option("--predicate", predicate, "predicate name")
      ->required()
      ->transform([](std::string s) { return predicate_key(std::move(s)); })
      ->check(CLI::IsMember(predicate_names));
  add_common(check, opts);

  auto* generate = app.add_subcommand("generate", "emit a table from a named family");
  generate->add_option("--family", family)
      ->required()
      ->transform([](std::string s) {
        std::replace(s.begin(), s.end(), '-', '_');
        return s;
      })
      ->check(CLI::IsMember(catalog::family_names()));
  generate->add_option("--params", params)->required();
  add_common(generate, opts, false);

  auto* enumerate = app.add_subcommand("enumerate", "emit every labeled semigroup of an order");
  enumerate->add_option("--order", order)->required()->check(CLI::Range(1, 4));
  enumerate->add_flag("--count", count_only, "print only the number of semigroups");
  add_common(enumerate, opts, false);

  auto* compare_cmd = app.add_subcommand("compare-oracle", "compare fast algorithms with brute force");
  compare_cmd->add_option("file", file);
  compare_cmd->add_option("--what", what)->check(CLI::IsMember({"upclass", "quasiorder", "congruence", "all"}));
  compare_cmd->add_flag("--sweep", sweep, "check the whole corpus instead of one file");
  compare_cmd->add_option("--order", order, "largest order for --sweep")->check(CLI::Range(1, 4));
  add_common(compare_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*validate) {
      return cmd_validate(opts, file);
    } else if (*analyze) {
      return cmd_analyze(opts, file);
    } else if (*upclass) {
      return cmd_upclass(opts, file, element_x);
    } else if (*decompose_cmd) {
      return cmd_decompose(opts, file);
    } else if (*witness) {
      return verify ? cmd_verify(opts, positional) : cmd_witness(opts, positional);
    } else if (*check) {
      return cmd_check(opts, file, predicate);
    } else if (*generate) {
      return cmd_generate(opts, family, params);
    } else if (*enumerate) {
      return cmd_enumerate(opts, order, count_only);
    } else if (*compare_cmd) {
      if (sweep) {
        if (order == 0) {
          throw CLI::ValidationError("compare-oracle --sweep", "needs --order");
        }
        return cmd_sweep(opts, order, what);
      }
      if (file.empty()) {
        throw CLI::ValidationError("compare-oracle", "needs a file or --sweep");
      }
      return cmd_compare(opts, file, what);
    }
  } catch (Error const& err) {
    std::cerr << "semidec: " << err.what() << '\n';
    return exit_input;
  } catch (CLI::Error const& err) {
    std::cerr << "semidec: " << err.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
