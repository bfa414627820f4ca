// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.
//
// Reading and writing Cayley tables.
//
// Text format: optional lines starting with '#', then the order n on its own
// line, then n rows of n whitespace-separated indices; row i, column j holds
// i·j.  A comment of the form "# labels: a b c" names the elements.
//
// JSON format: {"order": n, "table": [[...], ...], "labels": [...]} with
// "labels" optional.

#ifndef SEMIDEC_IO_HPP_
#define SEMIDEC_IO_HPP_

#include <string>  // for string

#include "semigroup.hpp"

namespace semidec {

  enum class TableFormat { text, json };

  struct RawTable {
    std::size_t              order = 0;
    std::vector<element>     table;  // row-major, unvalidated
    std::vector<std::string> labels;
  };

  //! Throws ParseError on syntax errors; does not check associativity.
  RawTable parse_table(std::string const& content, TableFormat format);

  //! parse_table followed by Semigroup::validate.
  Semigroup read_semigroup(std::string const& content, TableFormat format);

  //! ".json" selects json, anything else text.
  TableFormat format_from_path(std::string const& path);

  //! Reads a whole file; throws ParseError if it cannot be opened.
  std::string read_file(std::string const& path);

  std::string to_text(Semigroup const& S);
  std::string to_json(Semigroup const& S);

}  // namespace semidec

#endif  // SEMIDEC_IO_HPP_
