// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#include "semidec/io.hpp"

#include <fstream>  // for ifstream
#include <iterator>  // for istream_iterator
#include <sstream>  // for istringstream, ostringstream

#include "json.hpp"

namespace semidec {

  namespace {
    RawTable parse_text(std::string const& content) {
      std::istringstream in(content);
      std::string        line;
      std::ostringstream body;
      std::vector<std::string> labels;
      while (std::getline(in, line)) {
        auto const first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] == '#') {
          // to_text writes labels as a comment so other readers skip them
          std::istringstream comment(line.substr(first + 1));
          std::string        word;
          if (comment >> word && word == "labels:") {
            labels.assign(std::istream_iterator<std::string>(comment), {});
          }
          continue;
        }
        body << line << '\n';
      }
      std::istringstream tokens(body.str());
      RawTable           result;
      long long          value = 0;
      if (!(tokens >> value) || value <= 0) {
        throw Error(ErrorKind::ParseError, "expected a positive order on the first line");
      }
      result.order = static_cast<std::size_t>(value);
      for (std::size_t i = 0; i < result.order * result.order; ++i) {
        if (!(tokens >> value)) {
          throw Error(ErrorKind::ParseError,
                      "expected " + std::to_string(result.order * result.order) + " table entries, found "
                          + std::to_string(i));
        }
        if (value < 0) {
          throw Error(ErrorKind::ParseError, "negative table entry");
        }
        result.table.push_back(static_cast<element>(value));
      }
      std::string extra;
      if (tokens >> extra) {
        throw Error(ErrorKind::ParseError, "unexpected trailing token '" + extra + "'");
      }
      if (!labels.empty() && labels.size() != result.order) {
        throw Error(ErrorKind::ParseError, "labels line does not match the order");
      }
      result.labels = std::move(labels);
      return result;
    }

    RawTable parse_json(std::string const& content) {
      RawTable result;
      try {
        auto const doc = nlohmann::json::parse(content);
        result.order   = doc.at("order").get<std::size_t>();
        auto const& rows = doc.at("table");
        if (!rows.is_array() || rows.size() != result.order) {
          throw Error(ErrorKind::ParseError, "\"table\" must have \"order\" rows");
        }
        for (auto const& row : rows) {
          if (!row.is_array() || row.size() != result.order) {
            throw Error(ErrorKind::ParseError, "every row must have \"order\" entries");
          }
          for (auto const& v : row) {
            result.table.push_back(v.get<element>());
          }
        }
        if (doc.contains("labels")) {
          result.labels = doc.at("labels").get<std::vector<std::string>>();
        }
      } catch (nlohmann::json::exception const& e) {
        throw Error(ErrorKind::ParseError, e.what());
      }
      return result;
    }
  }  // namespace

  RawTable parse_table(std::string const& content, TableFormat format) {
    return format == TableFormat::json ? parse_json(content) : parse_text(content);
  }

  Semigroup read_semigroup(std::string const& content, TableFormat format) {
    auto raw = parse_table(content, format);
    return Semigroup::validate(raw.order, std::move(raw.table), std::move(raw.labels));
  }

  TableFormat format_from_path(std::string const& path) {
    auto const dot = path.rfind('.');
    return dot != std::string::npos && path.substr(dot) == ".json" ? TableFormat::json : TableFormat::text;
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::ParseError, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  std::string to_text(Semigroup const& S) {
    std::ostringstream out;
    if (S.has_labels()) {
      out << "# labels:";
      for (auto const& l : S.labels()) {
        out << ' ' << l;
      }
      out << '\n';
    }
    out << S.order() << '\n';
    for (element x = 0; x < S.order(); ++x) {
      for (element y = 0; y < S.order(); ++y) {
        out << (y == 0 ? "" : " ") << S.product(x, y);
      }
      out << '\n';
    }
    return out.str();
  }

  std::string to_json(Semigroup const& S) {
    nlohmann::json doc;
    doc["order"] = S.order();
    doc["table"] = S.rows();
    if (S.has_labels()) {
      doc["labels"] = S.labels();
    }
    return doc.dump() + "\n";
  }

}  // namespace semidec
